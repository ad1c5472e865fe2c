#ifndef UFANO_CAS_HILBERT_HPP
#define UFANO_CAS_HILBERT_HPP

#include "ufano/cas/resolution.hpp"
#include "ufano/polynomial.hpp"

namespace ufano::cas {

/// Hilbert polynomial of the resolved module:
/// P(t) = sum_q (-1)^q sum_l binom(t - n_{ql} + 3, 3).
inline Poly hilbert_poly_from_resolution(const FreeResolution& res) {
    Poly p;
    int sign = 1;
    for (const auto& mod : res.modules) {
        for (long n : mod.twists) {
            Poly term = binom3_shift(3 - n);
            p = sign > 0 ? p + term : p - term;
        }
        sign = -sign;
    }
    return p;
}

struct CurveInvariants {
    long degree = 0;
    long genus = 0;
};

/// Reads (degree, genus) off a linear Hilbert polynomial P(t) = d t + 1 - g.
inline CurveInvariants curve_invariants(const Poly& hp) {
    if (hp.degree() > 1) throw CasError("not a curve module: Hilbert polynomial has degree " +
                                        std::to_string(hp.degree()));
    Rat d = hp.coeff(1), c = hp.coeff(0);
    if (!is_integer(d) || !is_integer(c)) throw CasError("not a curve module: non-integral Hilbert coefficients");
    CurveInvariants ci;
    ci.degree = static_cast<long>(num(d));
    ci.genus = static_cast<long>(num(Rat(1) - c));
    return ci;
}

inline CurveInvariants curve_invariants(const FreeResolution& res_of_quotient) {
    return curve_invariants(hilbert_poly_from_resolution(res_of_quotient));
}

}  // namespace ufano::cas

#endif
