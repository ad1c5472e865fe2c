#ifndef UFANO_RIEMANN_ROCH_HPP
#define UFANO_RIEMANN_ROCH_HPP

#include "ufano/chern.hpp"

namespace ufano {

// chi(E(t)) = integrate( ch(E) . exp(tH) . td(X) ) with
//   ch(E) = r + c1 + (c1^2 - 2 c2)/2 + (c1^3 - 3 c1 c2 + 3 c3)/6
//   td(X) = 1 + c1(T)/2 + (c1(T)^2 + c2(T))/12 + c1(T) c2(T)/24
// c2(E) and c2(T) may be known only as pairing functionals on A^1, so the
// parts of the integrand that involve them are paired off separately; the rest
// goes through ChowClass multiplication.
inline Poly euler_poly(const FanoBlowupClass& cls, const ChernData& E) {
    if (E.rank <= 0) throw DomainError("euler_poly: rank must be positive");
    const ChowContext ctx(cls);
    const TangentData T(ctx);
    const Poly t = Poly::t();

    const ChowClass H = ChowClass::H(ctx);
    const ChowClass one = ChowClass::scalar(ctx, Poly(1));

    // exp(tH) truncated at degree 3
    const ChowClass tH = t * H;
    const ChowClass exp_tH = one + tH + Rat(1, 2) * Poly(1) * (tH * tH) + Rat(1, 6) * Poly(1) * (tH * tH * tH);

    // td with the c2(T)-free part as a full class; c2(T) enters only by pairing
    const ChowClass tdA = one + Rat(1, 2) * Poly(1) * H + Rat(1, 12) * Poly(1) * (H * H);

    // full part of ch(E): c2-independent pieces, plus the degree-3 number which
    // is computable in both representations of c2
    const Rat c1c2 = E.c2.dot(ctx, E.c1h, E.c1e);
    const Rat c1cube = triple_product(ctx, E.c1h, E.c1e, E.c1h, E.c1e, E.c1h, E.c1e);
    ChowClass chF = ChowClass::scalar(ctx, Poly(E.rank));
    chF = chF + ChowClass::deg1(ctx, Poly(E.c1h), Poly(E.c1e));
    chF = chF + ChowClass::deg2(ctx, Poly(E.c1h * E.c1h / 2), Poly(E.c1h * E.c1e), Poly(E.c1e * E.c1e / 2));
    if (E.c2.has_full()) {
        const auto& f = E.c2.full_coords();
        chF = chF - ChowClass::deg2(ctx, Poly(f.hh), Poly(f.he), Poly(f.ee));
    }
    chF = chF + ChowClass::point(ctx, Poly(c1cube / 6 - c1c2 / 2 + E.c3 / 2));

    const ChowClass chF_exp = chF * exp_tH;
    Poly chi = integrate(chF_exp * tdA);

    // c2(T)/12 paired against the degree-1 part of ch(E).exp(tH), and the
    // degree-3 Todd number rank * c1(T).c2(T)/24
    chi += Rat(1, 12) * T.c2_dot(chF_exp.c1h, chF_exp.c1e);
    chi += Poly(Rat(E.rank) * T.c1_dot_c2() / 24);

    // pairing-only c2(E): subtract c2 paired against [exp(tH) td]_1 = (t + 1/2) H
    if (!E.c2.has_full()) {
        Poly s = t + Poly(Rat(1, 2));
        chi -= E.c2.dot(ctx, s * Poly(ctx.r), -s);
    }
    return chi;
}

/// chi(O(D + tH)) for a divisor D = a h - b e.
inline Poly hilbert_poly_line(const FanoBlowupClass& cls, const DivisorClass& D) {
    return euler_poly(cls, ChernData::line_bundle(D));
}

/// The Hilbert polynomial an Ulrich bundle of the given rank must have:
/// H^3 * rank * binom(t+3, 3).
inline Poly ulrich_target(const FanoBlowupClass& cls, int rank) {
    if (rank < 1) throw DomainError("ulrich_target: rank must be >= 1");
    return Rat(cls.H3() * rank) * binom3_shift(3);
}

/// Canonical divisor K = -r h + e in (a, b) coordinates: a = -r, b = -1.
inline DivisorClass canonical_divisor(const FanoBlowupClass& cls) { return DivisorClass{-cls.r, -1}; }

}  // namespace ufano

#endif
