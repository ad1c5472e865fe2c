#ifndef UFANO_CAS_GROEBNER_HPP
#define UFANO_CAS_GROEBNER_HPP

#include "ufano/cas/ideal.hpp"
#include "ufano/cas/module.hpp"

namespace ufano::cas {

inline MPoly to_rank1(const GPoly& f) {
    MPoly v;
    v.reserve(f.size());
    for (const auto& t : f) v.push_back({0, t.m, t.c});
    return v;
}

inline GPoly from_rank1(const MPoly& v) {
    GPoly f;
    f.reserve(v.size());
    for (const auto& t : v) f.push_back({t.m, t.c});
    return f;
}

/// Reduced Groebner basis of a homogeneous ideal; deterministic for a fixed
/// input and order.
inline std::vector<GPoly> groebner_basis(const GradedIdeal& I, MonomialOrder ord = MonomialOrder::Grevlex) {
    std::vector<MPoly> gens;
    gens.reserve(I.gens().size());
    for (const auto& g : I.gens()) gens.push_back(to_rank1(g));
    auto res = module_groebner(gens, {0}, I.field(), ord, false);
    std::vector<GPoly> out;
    out.reserve(res.gb.size());
    for (const auto& v : res.gb) out.push_back(from_rank1(v));
    return out;
}

inline const std::vector<GPoly>& GradedIdeal::groebner(MonomialOrder ord) {
    if (!gb_ || gb_->first != ord) gb_ = {ord, groebner_basis(*this, ord)};
    return gb_->second;
}

inline std::vector<GPoly> GradedIdeal::groebner(MonomialOrder ord) const {
    if (gb_ && gb_->first == ord) return gb_->second;
    return groebner_basis(*this, ord);
}

/// Normal form of f against a Groebner basis; zero iff f lies in the ideal.
inline GPoly reduce_modulo(const GPoly& f, const std::vector<GPoly>& gb, const PrimeField& F,
                           MonomialOrder ord = MonomialOrder::Grevlex) {
    return gpoly_normal_form(f, gb, F, ord);
}

/// Every S-polynomial of a Groebner basis must reduce to zero (Buchberger's
/// criterion, used as a post-hoc test).
inline bool spolys_reduce_to_zero(const std::vector<GPoly>& gb, const PrimeField& F,
                                  MonomialOrder ord = MonomialOrder::Grevlex) {
    for (std::size_t i = 0; i < gb.size(); ++i)
        for (std::size_t j = i + 1; j < gb.size(); ++j) {
            Monomial l = Monomial::lcm(gb[i].front().m, gb[j].front().m);
            GPoly s = gpoly_mul_term(gb[i], F.inv(gb[i].front().c), l.quotient_of(gb[i].front().m), F);
            s = gpoly_submul(s, F.inv(gb[j].front().c), l.quotient_of(gb[j].front().m), gb[j], F, ord);
            if (!gpoly_normal_form(std::move(s), gb, F, ord).empty()) return false;
        }
    return true;
}

/// Dimension of the degree-n graded piece of S/I, from the Groebner basis:
/// standard monomials of degree n.
inline long quotient_piece_dim(const std::vector<GPoly>& gb, int n) {
    if (n < 0) return 0;
    long count = 0;
    // iterate all degree-n monomials in 4 variables
    for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b)
            for (int c = 0; a + b + c <= n; ++c) {
                Monomial m;
                m.e = {static_cast<uint16_t>(a), static_cast<uint16_t>(b), static_cast<uint16_t>(c),
                       static_cast<uint16_t>(n - a - b - c)};
                bool standard = true;
                for (const auto& g : gb)
                    if (g.front().m.divides(m)) {
                        standard = false;
                        break;
                    }
                count += standard;
            }
    return count;
}

inline long polynomial_piece_dim(long n) { return n < 0 ? 0 : (n + 1) * (n + 2) * (n + 3) / 6; }

}  // namespace ufano::cas

#endif
