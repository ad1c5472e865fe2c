#ifndef UFANO_CAS_COHOMOLOGY_HPP
#define UFANO_CAS_COHOMOLOGY_HPP

#include "ufano/cas/hilbert.hpp"

namespace ufano::cas {

struct CohomologyOptions {
    /// Cap on rows*cols of any single linear-algebra block; a clear resource
    /// error reports the dimensions that were requested.
    std::size_t max_matrix_entries = 200000;
};

namespace detail {

inline std::vector<Monomial> monomials_of_degree(long n) {
    std::vector<Monomial> out;
    if (n < 0) return out;
    for (long a = 0; a <= n; ++a)
        for (long b = 0; a + b <= n; ++b)
            for (long c = 0; a + b + c <= n; ++c) {
                Monomial m;
                m.e = {static_cast<uint16_t>(a), static_cast<uint16_t>(b), static_cast<uint16_t>(c),
                       static_cast<uint16_t>(n - a - b - c)};
                out.push_back(m);
            }
    return out;
}

inline long rank_mod_p(std::vector<std::vector<int64_t>>& mat, const PrimeField& F) {
    long rank = 0;
    std::size_t rows = mat.size();
    std::size_t cols = rows ? mat.front().size() : 0;
    for (std::size_t col = 0, row = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && mat[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(mat[row], mat[piv]);
        int64_t inv = F.inv(mat[row][col]);
        for (std::size_t c = col; c < cols; ++c) mat[row][c] = F.mul(mat[row][c], inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || mat[r][col] == 0) continue;
            int64_t f = mat[r][col];
            for (std::size_t c = col; c < cols; ++c) mat[r][c] = F.sub(mat[r][c], F.mul(f, mat[row][c]));
        }
        ++row;
        ++rank;
    }
    return rank;
}

/// Graded piece of Hom(G, S(-4)) in degree nu for G = (+) S(-n_l):
/// basis indexed by (l, monomial of degree nu + n_l - 4).
struct DualPieceBasis {
    std::vector<std::pair<std::size_t, Monomial>> elems;
    std::vector<std::size_t> offset;  // offset[l] = index of the first monomial of slot l

    static DualPieceBasis build(const std::vector<long>& twists, long nu) {
        DualPieceBasis b;
        b.offset.resize(twists.size());
        for (std::size_t l = 0; l < twists.size(); ++l) {
            b.offset[l] = b.elems.size();
            for (const auto& m : monomials_of_degree(nu + twists[l] - 4)) b.elems.emplace_back(l, m);
        }
        return b;
    }

    std::size_t index_of(std::size_t l, const Monomial& m, long nu, const std::vector<long>& twists) const {
        // monomials_of_degree enumerates deterministically; locate by scan from the slot offset
        std::size_t end = l + 1 < offset.size() ? offset[l + 1] : elems.size();
        for (std::size_t k = offset[l]; k < end; ++k)
            if (elems[k].second == m) return k;
        (void)nu;
        (void)twists;
        throw CasError("internal: dual basis lookup failed");
    }
};

/// Matrix of Hom(d_q, S(-4)) restricted to degree nu: maps Hom(G_{q-1}, w)_nu
/// (columns) to Hom(G_q, w)_nu (rows); the entry block for (l, l') is
/// multiplication by d_q[l'][l].
inline std::vector<std::vector<int64_t>> dual_map_piece(const DiffMatrix& d, const std::vector<long>& tw_from,
                                                        const std::vector<long>& tw_to, long nu,
                                                        const PrimeField& F, const CohomologyOptions& opt,
                                                        const DualPieceBasis& from, const DualPieceBasis& to) {
    // tw_from: twists of G_{q-1} (columns of the dual map), tw_to: twists of G_q
    std::size_t rows = to.elems.size(), cols = from.elems.size();
    if (rows * cols > opt.max_matrix_entries)
        throw ResourceError("cohomology matrix of size " + std::to_string(rows) + " x " + std::to_string(cols) +
                            " exceeds the dimension cap " + std::to_string(opt.max_matrix_entries));
    std::vector<std::vector<int64_t>> mat(rows, std::vector<int64_t>(cols, 0));
    for (std::size_t col = 0; col < cols; ++col) {
        auto [lp, mu] = from.elems[col];  // slot in G_{q-1}, monomial in S_{nu + n_{q-1,lp} - 4}
        for (std::size_t l = 0; l < tw_to.size(); ++l) {
            const GPoly& entry = d.entry[lp][l];
            for (const auto& t : entry) {
                Monomial prod = t.m * mu;
                std::size_t row = to.index_of(l, prod, nu, tw_to);
                mat[row][col] = F.add(mat[row][col], t.c);
            }
        }
    }
    (void)tw_from;
    return mat;
}

}  // namespace detail

/// dim H^i(P^3, M~(t)) for the sheaf associated to the ideal M, i in {1,2,3},
/// through graded local duality: H^i(M~(t)) = Ext^{3-i}(M, S(-4))_{-t}, read
/// off a free resolution of M (the S/M resolution shifted by one).
inline long sheaf_cohomology_dim(const FreeResolution& res_of_quotient, int i, long t,
                                 const CohomologyOptions& opt = {}) {
    if (i < 1 || i > 3) throw CasError("sheaf cohomology index must be 1, 2 or 3 (h^0 is unsupported)");
    const PrimeField& F = res_of_quotient.field;
    const long nu = -t;
    const int q = 3 - i;  // Ext^q of the module resolution G_* = F_{*+1}

    // G_q = modules[q+1]; absent modules mean zero
    auto module_twists = [&](int k) -> std::vector<long> {
        std::size_t idx = static_cast<std::size_t>(k) + 1;
        if (idx >= res_of_quotient.modules.size()) return {};
        return res_of_quotient.modules[idx].twists;
    };

    std::vector<long> tw_q = module_twists(q);
    if (tw_q.empty()) return 0;
    auto basis_q = detail::DualPieceBasis::build(tw_q, nu);
    long dim_mid = static_cast<long>(basis_q.elems.size());
    if (dim_mid == 0) return 0;

    long rank_in = 0;
    if (q >= 1) {
        std::vector<long> tw_prev = module_twists(q - 1);
        if (!tw_prev.empty()) {
            auto basis_prev = detail::DualPieceBasis::build(tw_prev, nu);
            if (!basis_prev.elems.empty()) {
                auto mat = detail::dual_map_piece(res_of_quotient.diffs[static_cast<std::size_t>(q) + 1 - 1],
                                                  tw_prev, tw_q, nu, F, opt, basis_prev, basis_q);
                rank_in = detail::rank_mod_p(mat, F);
            }
        }
    }

    long rank_out = 0;
    {
        std::vector<long> tw_next = module_twists(q + 1);
        if (!tw_next.empty()) {
            auto basis_next = detail::DualPieceBasis::build(tw_next, nu);
            if (!basis_next.elems.empty()) {
                auto mat = detail::dual_map_piece(res_of_quotient.diffs[static_cast<std::size_t>(q) + 2 - 1],
                                                  tw_q, tw_next, nu, F, opt, basis_q, basis_next);
                rank_out = detail::rank_mod_p(mat, F);
            }
        }
    }

    return dim_mid - rank_in - rank_out;
}

/// Convenience overload resolving S/M first.
inline long sheaf_cohomology_dim(const GradedIdeal& M, int i, long t, const CohomologyOptions& opt = {}) {
    FreeResolution res = free_resolution(M);
    return sheaf_cohomology_dim(res, i, t, opt);
}

}  // namespace ufano::cas

#endif
