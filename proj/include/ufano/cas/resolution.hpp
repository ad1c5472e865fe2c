#ifndef UFANO_CAS_RESOLUTION_HPP
#define UFANO_CAS_RESOLUTION_HPP

#include "ufano/cas/groebner.hpp"

namespace ufano::cas {

/// Graded free module, F = (+)_l S(-twists[l]).
struct FreeModule {
    std::vector<long> twists;
    std::size_t rank() const { return twists.size(); }
};

/// Differential F_q -> F_{q-1} stored densely: entry(i, j) is the coefficient
/// of the i-th basis vector of F_{q-1} in the image of the j-th of F_q.
struct DiffMatrix {
    std::vector<std::vector<GPoly>> entry;  // [rows of F_{q-1}][cols of F_q]

    std::size_t rows() const { return entry.size(); }
    std::size_t cols() const { return entry.empty() ? 0 : entry.front().size(); }
};

/// Chain of free modules resolving a quotient F_0 / M.
struct FreeResolution {
    PrimeField field{2};
    std::vector<FreeModule> modules;  // F_0 .. F_len
    std::vector<DiffMatrix> diffs;    // diffs[q-1] : F_q -> F_{q-1}
    bool minimal = false;

    std::size_t length() const { return diffs.size(); }

    std::vector<std::size_t> betti() const {
        std::vector<std::size_t> b;
        for (const auto& m : modules) b.push_back(m.rank());
        return b;
    }
};

namespace detail {

inline std::vector<MPoly> columns_to_mpolys(const DiffMatrix& d, const PrimeField& F, const ModuleOrder& mo) {
    std::vector<MPoly> cols;
    for (std::size_t j = 0; j < d.cols(); ++j) {
        MPoly v;
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (const auto& t : d.entry[i][j]) v.push_back({static_cast<int32_t>(i), t.m, t.c});
        cols.push_back(mpoly_normalize(std::move(v), F, mo));
    }
    return cols;
}

inline DiffMatrix mpolys_to_matrix(const std::vector<MPoly>& cols, std::size_t rows) {
    DiffMatrix d;
    d.entry.assign(rows, std::vector<GPoly>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& t : cols[j]) d.entry[t.comp][j].push_back({t.m, t.c});
    return d;
}

}  // namespace detail

/// Resolution of the quotient F/M for M spanned by the given columns inside
/// the free module with the given twists: iterated syzygy computation until
/// the syzygies vanish (length is capped by the Hilbert syzygy theorem).
inline FreeResolution resolve_quotient_of_free(const std::vector<MPoly>& gens, std::vector<long> ambient_twists,
                                               const PrimeField& F,
                                               MonomialOrder ord = MonomialOrder::Grevlex) {
    FreeResolution res;
    res.field = F;
    res.modules.push_back({ambient_twists});

    std::vector<MPoly> current = gens;
    std::vector<long> twists = std::move(ambient_twists);
    const ModuleOrder mo_any{ord, INT32_MAX};
    while (!current.empty()) {
        if (res.diffs.size() > 8) throw CasError("resolution exceeds the syzygy bound");
        auto step = module_groebner(current, twists, F, ord, true);
        res.diffs.push_back(detail::mpolys_to_matrix(current, twists.size()));
        res.modules.push_back({step.syzygy_twists});
        twists = step.syzygy_twists;
        current.clear();
        for (auto& s : step.syzygies) current.push_back(mpoly_normalize(std::move(s), F, mo_any));
    }
    if (!res.modules.empty() && res.modules.back().rank() == 0) res.modules.pop_back();
    while (res.diffs.size() >= res.modules.size()) res.diffs.pop_back();
    return res;
}

/// Resolution of S/I with F_0 = S.
inline FreeResolution free_resolution(const GradedIdeal& I, MonomialOrder ord = MonomialOrder::Grevlex) {
    std::vector<MPoly> cols;
    for (const auto& g : I.gens()) cols.push_back(to_rank1(g));
    return resolve_quotient_of_free(cols, {0}, I.field(), ord);
}

/// d o d = 0 for consecutive differentials.
inline bool differentials_compose_to_zero(const FreeResolution& res) {
    const PrimeField& F = res.field;
    for (std::size_t q = 1; q < res.diffs.size(); ++q) {
        const DiffMatrix& A = res.diffs[q - 1];  // F_q -> F_{q-1}
        const DiffMatrix& B = res.diffs[q];      // F_{q+1} -> F_q
        for (std::size_t i = 0; i < A.rows(); ++i)
            for (std::size_t j = 0; j < B.cols(); ++j) {
                GPoly acc;
                for (std::size_t k = 0; k < A.cols(); ++k) {
                    if (A.entry[i][k].empty() || B.entry[k][j].empty()) continue;
                    acc = gpoly_add(acc, gpoly_mul(A.entry[i][k], B.entry[k][j], F, MonomialOrder::Grevlex), F,
                                    MonomialOrder::Grevlex);
                }
                if (!acc.empty()) return false;
            }
    }
    return true;
}

inline bool has_unit_entry(const DiffMatrix& d, std::size_t& ri, std::size_t& rj) {
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j) {
            const GPoly& e = d.entry[i][j];
            if (!e.empty() && e.front().m.deg() == 0) {
                ri = i;
                rj = j;
                return true;
            }
        }
    return false;
}

namespace detail {

/// Cancels the unit at (i, j) of diffs[q]: clears its row and column with row
/// and column operations (compensating in the neighbour differentials), then
/// deletes the pair of basis vectors.
inline void cancel_unit(FreeResolution& res, std::size_t q, std::size_t i, std::size_t j) {
    const PrimeField& F = res.field;
    const MonomialOrder ord = MonomialOrder::Grevlex;
    DiffMatrix& d = res.diffs[q];
    const int64_t u = d.entry[i][j].front().c;
    const int64_t uinv = F.inv(u);

    auto axpy = [&](GPoly& dst, int64_t c, const GPoly& src) {
        if (src.empty() || c == 0) return;
        dst = gpoly_submul(dst, F.neg(c), Monomial{}, src, F, ord);
    };
    auto axpy_poly = [&](GPoly& dst, const GPoly& factor, const GPoly& src) {
        if (src.empty() || factor.empty()) return;
        dst = gpoly_add(dst, gpoly_mul(factor, src, F, ord), F, ord);
    };

    // column operations on d: col_j' -= (e_ij' / u) col_j; compensate in d_{q+1}
    for (std::size_t j2 = 0; j2 < d.cols(); ++j2) {
        if (j2 == j || d.entry[i][j2].empty()) continue;
        GPoly beta = gpoly_scale(d.entry[i][j2], uinv, F);  // homogeneous factor
        for (std::size_t r = 0; r < d.rows(); ++r) {
            GPoly neg = gpoly_scale(d.entry[r][j], F.neg(1), F);
            axpy_poly(d.entry[r][j2], beta, neg);
        }
        if (q + 1 < res.diffs.size()) {
            DiffMatrix& up = res.diffs[q + 1];
            for (std::size_t c = 0; c < up.cols(); ++c) axpy_poly(up.entry[j][c], beta, up.entry[j2][c]);
        }
    }
    // row operations on d: row_i2 -= (e_i2j / u) row_i; compensate in d_{q-1}
    for (std::size_t i2 = 0; i2 < d.rows(); ++i2) {
        if (i2 == i || d.entry[i2][j].empty()) continue;
        GPoly gamma = gpoly_scale(d.entry[i2][j], uinv, F);
        for (std::size_t c = 0; c < d.cols(); ++c) {
            GPoly neg = gpoly_scale(d.entry[i][c], F.neg(1), F);
            axpy_poly(d.entry[i2][c], gamma, neg);
        }
        if (q >= 1) {
            DiffMatrix& down = res.diffs[q - 1];
            for (std::size_t r = 0; r < down.rows(); ++r) axpy_poly(down.entry[r][i], gamma, down.entry[r][i2]);
        }
    }
    (void)axpy;

    // drop basis vector j of F_{q+1}-side module and i of F_q-side module
    auto erase_col = [](DiffMatrix& m, std::size_t col) {
        for (auto& row : m.entry) row.erase(row.begin() + static_cast<long>(col));
    };
    auto erase_row = [](DiffMatrix& m, std::size_t row) { m.entry.erase(m.entry.begin() + static_cast<long>(row)); };

    erase_row(d, i);
    erase_col(d, j);
    res.modules[q + 1].twists.erase(res.modules[q + 1].twists.begin() + static_cast<long>(j));
    res.modules[q].twists.erase(res.modules[q].twists.begin() + static_cast<long>(i));
    if (q + 1 < res.diffs.size()) erase_row(res.diffs[q + 1], j);
    if (q >= 1) erase_col(res.diffs[q - 1], i);
}

}  // namespace detail

/// Prunes unit entries until every differential has entries of positive degree;
/// the resulting Betti numbers are those of the minimal resolution.
inline void minimalize(FreeResolution& res) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t q = 0; q < res.diffs.size(); ++q) {
            std::size_t i = 0, j = 0;
            if (has_unit_entry(res.diffs[q], i, j)) {
                detail::cancel_unit(res, q, i, j);
                changed = true;
                break;
            }
        }
    }
    // drop trailing zero modules
    while (!res.modules.empty() && res.modules.back().rank() == 0) {
        res.modules.pop_back();
        if (res.diffs.size() >= res.modules.size()) res.diffs.pop_back();
    }
    res.minimal = true;
}

inline FreeResolution minimal_free_resolution(const GradedIdeal& I, MonomialOrder ord = MonomialOrder::Grevlex) {
    FreeResolution res = free_resolution(I, ord);
    minimalize(res);
    return res;
}

inline bool resolution_is_minimal(const FreeResolution& res) {
    for (const auto& d : res.diffs) {
        std::size_t i, j;
        if (has_unit_entry(d, i, j)) return false;
    }
    return true;
}

}  // namespace ufano::cas

#endif
