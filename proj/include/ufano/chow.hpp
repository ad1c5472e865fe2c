#ifndef UFANO_CHOW_HPP
#define UFANO_CHOW_HPP

#include "ufano/fano_class.hpp"
#include "ufano/polynomial.hpp"

namespace ufano {

/// Numerical invariants a ChowClass needs for multiplication. Two classes are
/// compatible exactly when these agree.
struct ChowContext {
    int c_X = 1;
    int r = 4;
    int gamma = 6;
    int d = 0;
    int g = 0;

    ChowContext() = default;
    ChowContext(const FanoBlowupClass& c) : c_X(c.c_X), r(c.r), gamma(c.gamma), d(c.d), g(c.g) {}  // NOLINT

    long e3() const { return -static_cast<long>(r) * d + 2 - 2 * static_cast<long>(g); }

    friend bool operator==(const ChowContext&, const ChowContext&) = default;
};

/// Graded class on the blow-up in the basis {1; h, e; h^2, he, e^2; pt},
/// coefficients univariate polynomials in t. Products truncate above degree 3;
/// the degree 3 piece is stored as a multiple of the point class.
struct ChowClass {
    ChowContext ctx;
    Poly c0;
    Poly c1h, c1e;
    Poly c2hh, c2he, c2ee;
    Poly c3;

    explicit ChowClass(const ChowContext& context) : ctx(context) {}

    static ChowClass scalar(const ChowContext& ctx, Poly v) {
        ChowClass c(ctx);
        c.c0 = std::move(v);
        return c;
    }
    static ChowClass deg1(const ChowContext& ctx, Poly h, Poly e) {
        ChowClass c(ctx);
        c.c1h = std::move(h);
        c.c1e = std::move(e);
        return c;
    }
    static ChowClass deg2(const ChowContext& ctx, Poly hh, Poly he, Poly ee) {
        ChowClass c(ctx);
        c.c2hh = std::move(hh);
        c.c2he = std::move(he);
        c.c2ee = std::move(ee);
        return c;
    }
    static ChowClass point(const ChowContext& ctx, Poly v) {
        ChowClass c(ctx);
        c.c3 = std::move(v);
        return c;
    }

    /// Anticanonical polarization H = r h - e.
    static ChowClass H(const ChowContext& ctx) { return deg1(ctx, Poly(ctx.r), Poly(-1)); }

    bool is_zero() const {
        return c0.is_zero() && c1h.is_zero() && c1e.is_zero() && c2hh.is_zero() && c2he.is_zero() &&
               c2ee.is_zero() && c3.is_zero();
    }

    friend bool operator==(const ChowClass& a, const ChowClass& b) {
        return a.ctx == b.ctx && a.c0 == b.c0 && a.c1h == b.c1h && a.c1e == b.c1e && a.c2hh == b.c2hh &&
               a.c2he == b.c2he && a.c2ee == b.c2ee && a.c3 == b.c3;
    }
};

inline void require_compatible(const ChowClass& a, const ChowClass& b) {
    if (!(a.ctx == b.ctx)) throw IncompatibleClassError("Chow classes attached to different deformation classes");
}

inline ChowClass operator+(const ChowClass& a, const ChowClass& b) {
    require_compatible(a, b);
    ChowClass r(a.ctx);
    r.c0 = a.c0 + b.c0;
    r.c1h = a.c1h + b.c1h;
    r.c1e = a.c1e + b.c1e;
    r.c2hh = a.c2hh + b.c2hh;
    r.c2he = a.c2he + b.c2he;
    r.c2ee = a.c2ee + b.c2ee;
    r.c3 = a.c3 + b.c3;
    return r;
}

inline ChowClass operator-(const ChowClass& a) {
    ChowClass r = a;
    r.c0 = -r.c0;
    r.c1h = -r.c1h;
    r.c1e = -r.c1e;
    r.c2hh = -r.c2hh;
    r.c2he = -r.c2he;
    r.c2ee = -r.c2ee;
    r.c3 = -r.c3;
    return r;
}

inline ChowClass operator-(const ChowClass& a, const ChowClass& b) { return a + (-b); }

inline ChowClass operator*(const Poly& s, const ChowClass& a) {
    ChowClass r = a;
    r.c0 = s * r.c0;
    r.c1h = s * r.c1h;
    r.c1e = s * r.c1e;
    r.c2hh = s * r.c2hh;
    r.c2he = s * r.c2he;
    r.c2ee = s * r.c2ee;
    r.c3 = s * r.c3;
    return r;
}

/// Graded commutative product, truncated at degree 3. Degree 3 terms collapse
/// onto the point class through the intersection numbers of the context.
inline ChowClass mul(const ChowClass& a, const ChowClass& b) {
    require_compatible(a, b);
    const ChowContext& ctx = a.ctx;
    const Rat cX(ctx.c_X);
    const Rat mhee(-ctx.d);  // h.e^2 and the pairing h^2.e = 0 is dropped
    const Rat e3(ctx.e3());

    ChowClass r(ctx);
    r.c0 = a.c0 * b.c0;
    r.c1h = a.c0 * b.c1h + b.c0 * a.c1h;
    r.c1e = a.c0 * b.c1e + b.c0 * a.c1e;
    r.c2hh = a.c0 * b.c2hh + b.c0 * a.c2hh + a.c1h * b.c1h;
    r.c2he = a.c0 * b.c2he + b.c0 * a.c2he + a.c1h * b.c1e + a.c1e * b.c1h;
    r.c2ee = a.c0 * b.c2ee + b.c0 * a.c2ee + a.c1e * b.c1e;
    // deg1 x deg2 pairings: h.hh = c_X, h.he = 0, h.ee = -d, e.hh = 0, e.he = -d, e.ee = e3
    r.c3 = a.c0 * b.c3 + b.c0 * a.c3 + cX * (a.c1h * b.c2hh + b.c1h * a.c2hh) +
           mhee * (a.c1h * b.c2ee + b.c1h * a.c2ee) + mhee * (a.c1e * b.c2he + b.c1e * a.c2he) +
           e3 * (a.c1e * b.c2ee + b.c1e * a.c2ee);
    return r;
}

inline ChowClass operator*(const ChowClass& a, const ChowClass& b) { return mul(a, b); }

/// Degree of the degree-3 component; everything of lower degree is discarded.
inline Poly integrate(const ChowClass& a) { return a.c3; }

/// Pairing of a degree-2 class (hh, he, ee coefficients) with a degree-1 class (h, e).
inline Poly pair_deg2_deg1(const ChowContext& ctx, const Poly& hh, const Poly& he, const Poly& ee,
                           const Poly& uh, const Poly& ue) {
    const Rat d(ctx.d), e3(ctx.e3()), cX(ctx.c_X);
    Poly on_h = cX * hh - d * ee;   // (hh,he,ee).h
    Poly on_e = -d * he + e3 * ee;  // (hh,he,ee).e
    return uh * on_h + ue * on_e;
}

/// Tangent data of the blow-up: c1(T) = r h - e, and c2(T) kept only as the
/// pairing functional on degree-1 classes (gamma + d on h, r d on e).
struct TangentData {
    ChowContext ctx;

    explicit TangentData(const ChowContext& c) : ctx(c) {}

    ChowClass c1() const { return ChowClass::deg1(ctx, Poly(ctx.r), Poly(-1)); }

    Rat c2_on_h() const { return Rat(ctx.gamma + ctx.d); }
    Rat c2_on_e() const { return Rat(static_cast<long>(ctx.r) * ctx.d); }

    /// c2(T) . (uh h + ue e)
    Poly c2_dot(const Poly& uh, const Poly& ue) const { return c2_on_h() * uh + c2_on_e() * ue; }

    /// c1(T) . c2(T) = r gamma, which is 24 on every admissible class.
    Rat c1_dot_c2() const { return Rat(static_cast<long>(ctx.r) * ctx.gamma); }
};

}  // namespace ufano

#endif
