#ifndef UFANO_ULRICH_SEARCH_HPP
#define UFANO_ULRICH_SEARCH_HPP

#include "ufano/riemann_roch.hpp"

#include <algorithm>
#include <vector>

namespace ufano {

/// Exact root of an integer quadratic, kept symbolic: value = rat + coef*sqrt(radicand).
struct SurdRoot {
    Rat rational_part;
    Rat surd_coef;   // zero for rational roots
    Int radicand;    // squarefree part (negative when the root pair is complex)

    bool is_rational() const { return surd_coef == 0; }

    std::string str() const {
        if (is_rational()) return rat_pretty(rational_part);
        std::string s = rat_pretty(rational_part);
        s += surd_coef > 0 ? " + " : " - ";
        Rat ac = surd_coef > 0 ? surd_coef : Rat(-surd_coef);
        s += "(" + rat_pretty(ac) + ")*sqrt(" + radicand.str() + ")";
        return s;
    }
};

/// Roots of P y^2 + Q y + S (P != 0) as exact surds, smaller first.
inline std::vector<SurdRoot> quadratic_surd_roots(const Int& P, const Int& Q, const Int& S) {
    Int delta = Q * Q - 4 * P * S;
    std::vector<SurdRoot> out;
    Rat center = make_rat(-Q, 2 * P);
    if (delta == 0) {
        out.push_back({center, Rat(0), Int(0)});
        return out;
    }
    Int sq, sf;
    bool neg = delta < 0;
    extract_square_part(neg ? Int(-delta) : delta, sq, sf);
    if (neg) sf = -sf;
    Rat coef = make_rat(sq, 2 * P);
    if (sf == 1) {  // rational pair
        Rat r1 = center - coef, r2 = center + coef;
        if (r1 > r2) std::swap(r1, r2);
        out.push_back({r1, Rat(0), Int(0)});
        out.push_back({r2, Rat(0), Int(0)});
    } else {
        Rat c = coef > 0 ? coef : Rat(-coef);
        out.push_back({center, -c, sf});
        out.push_back({center, c, sf});
    }
    return out;
}

struct LinearRelation {
    bool exists = true;  // false: coefficient of a vanished, bounded search used
    Rat slope, intercept;  // a = slope*b + intercept

    std::string str() const {
        if (!exists) return "no-linear-elimination";
        Poly p(std::vector<Rat>{intercept, slope});
        return "a = " + p.str("b");
    }
};

struct LineCandidateReport {
    std::string class_id;
    LinearRelation relation;
    std::vector<SurdRoot> quadratic_roots;
    std::vector<DivisorClass> solutions;
    bool verified_all_coefficients = false;
};

namespace detail {

inline Poly chi_ab(const FanoBlowupClass& cls, const Rat& a, const Rat& b) {
    ChernData E;
    E.rank = 1;
    E.c1h = a;
    E.c1e = -b;
    return euler_poly(cls, E);
}

/// Extracts f(v) = A v^2 + B v + C from three exact samples at v = 0, 1, 2.
inline void quadratic_fit(const Rat& f0, const Rat& f1, const Rat& f2, Rat& A, Rat& B, Rat& C) {
    C = f0;
    A = (f2 - 2 * f1 + f0) / 2;
    B = f1 - f0 - A;
}

inline Int lcm_den(std::initializer_list<Rat> vals) {
    Int l = 1;
    for (const auto& v : vals) l = boost::multiprecision::lcm(l, den(v));
    return l;
}

}  // namespace detail

/// 3H - D, the Ulrich dual divisor: (a, b) -> (3r - a, 3 - b).
inline DivisorClass dual_divisor(const FanoBlowupClass& cls, const DivisorClass& D) {
    return DivisorClass{3L * cls.r - D.a, 3L - D.b};
}

/// All divisors D = a h - b e with chi(O(D + tH)) = H^3 binom(t+3,3).
/// The t^2 coefficient equation is linear in a; a is eliminated, the t
/// coefficient becomes a quadratic in b, and its integer roots are found by
/// an exact discriminant square test. The t^0 equation is verified last.
inline LineCandidateReport solve_line_candidates(const FanoBlowupClass& cls) {
    LineCandidateReport rep;
    rep.class_id = cls.id;
    const Poly target = ulrich_target(cls, 1);

    auto eqc = [&](const Rat& a, const Rat& b, std::size_t k) {
        return detail::chi_ab(cls, a, b).coeff(k) - target.coeff(k);
    };
    if (eqc(0, 0, 3) != 0) throw DomainError("leading coefficients disagree; engine invariant violated");

    // t^2 equation u*a + v*b + w = 0
    const Rat w = eqc(0, 0, 2);
    const Rat u = eqc(1, 0, 2) - w;
    const Rat v = eqc(0, 1, 2) - w;

    auto verify = [&](long a, long b) {
        return detail::chi_ab(cls, Rat(a), Rat(b)) == target;
    };

    if (u == 0) {
        // degenerate elimination (d = 16 on P3 and analogues); bounded search
        rep.relation.exists = false;
        for (long b = -200; b <= 200; ++b) {
            if (v * b + w != 0) continue;
            for (long a = -200; a <= 200; ++a)
                if (verify(a, b)) rep.solutions.push_back({a, b});
        }
    } else {
        rep.relation.slope = -v / u;
        rep.relation.intercept = -w / u;
        auto a_of_b = [&](const Rat& b) { return rep.relation.slope * b + rep.relation.intercept; };

        // t^1 equation after substitution, as a quadratic in b
        Rat A, B, C;
        detail::quadratic_fit(eqc(a_of_b(0), 0, 1), eqc(a_of_b(1), 1, 1), eqc(a_of_b(2), 2, 1), A, B, C);
        Int L = detail::lcm_den({A, B, C});
        Int P = num(A * L), Q = num(B * L), S = num(C * L);
        if (P < 0 || (P == 0 && Q < 0)) { P = -P; Q = -Q; S = -S; }
        Int content = boost::multiprecision::gcd(boost::multiprecision::gcd(P < 0 ? Int(-P) : P, Q < 0 ? Int(-Q) : Q), S < 0 ? Int(-S) : S);
        if (content > 1) { P /= content; Q /= content; S /= content; }

        std::vector<Rat> integer_roots;
        if (P == 0 && Q == 0 && S == 0) {
            // t^1 holds identically; fall back to a bounded scan along the line
            rep.relation.exists = true;
            for (long b = -200; b <= 200; ++b) {
                Rat a = a_of_b(b);
                if (!is_integer(a)) continue;
                long av = static_cast<long>(num(a));
                if (verify(av, b)) rep.solutions.push_back({av, b});
            }
        } else if (P == 0) {
            Rat root = make_rat(-S, Q);
            rep.quadratic_roots.push_back({root, Rat(0), Int(0)});
            if (is_integer(root)) integer_roots.push_back(root);
        } else {
            rep.quadratic_roots = quadratic_surd_roots(P, Q, S);
            for (const auto& root : rep.quadratic_roots)
                if (root.is_rational() && is_integer(root.rational_part)) integer_roots.push_back(root.rational_part);
        }

        for (const Rat& rb : integer_roots) {
            Rat ra = a_of_b(rb);
            if (!is_integer(ra)) continue;
            long a = static_cast<long>(num(ra)), b = static_cast<long>(num(rb));
            if (eqc(ra, rb, 0) == 0 && verify(a, b)) rep.solutions.push_back({a, b});
        }
    }

    std::sort(rep.solutions.begin(), rep.solutions.end(),
              [](const DivisorClass& x, const DivisorClass& y) { return std::pair(x.a, x.b) < std::pair(y.a, y.b); });
    rep.verified_all_coefficients = true;
    for (const auto& s : rep.solutions)
        if (!verify(s.a, s.b)) rep.verified_all_coefficients = false;
    return rep;
}

struct Rank2Candidate {
    long x = 0, y = 0;  // c1 = x h - y e
    Rat Hc2;            // forced by H.c2 = (1/2) H.c1^2 - 2H^3 + 4
};

struct Rank2C1Report {
    std::string class_id;
    Rat x_slope, x_intercept;  // x = slope*y + intercept
    std::vector<SurdRoot> y_interval;  // endpoints of the Bogomolov interval
    std::vector<Rank2Candidate> candidates;

    std::string relation_str() const {
        Poly p(std::vector<Rat>{x_intercept, x_slope});
        return "x = " + p.str("y");
    }
};

/// H . c1^2 for c1 = x h - y e.
inline Rat H_dot_c1_squared(const FanoBlowupClass& cls, const Rat& x, const Rat& y) {
    ChowContext ctx(cls);
    return triple_product(ctx, Rat(ctx.r), Rat(-1), x, -y, x, -y);
}

/// Enumerates first Chern classes of rank 2 Ulrich candidates: the linear
/// relation H^2.c1 = 3H^3 fixes x as an affine function of y, and Bogomolov's
/// inequality (with H.c2 forced by the trace relation) bounds y to a closed
/// interval.
inline Rank2C1Report enumerate_rank2_c1(const FanoBlowupClass& cls) {
    Rank2C1Report rep;
    rep.class_id = cls.id;
    const ChowContext ctx(cls);
    const Rat H3(cls.H3());

    // H^2 . h and H^2 . e
    const Rat Ph = Rat(static_cast<long>(ctx.r) * ctx.r * ctx.c_X - ctx.d);
    const Rat Pe = Rat(2L * ctx.r * ctx.d + ctx.e3());
    if (Ph == 0) throw DomainError("H^2.h vanishes; no linear relation for x");
    rep.x_slope = Pe / Ph;
    rep.x_intercept = 3 * H3 / Ph;
    auto x_of_y = [&](const Rat& y) { return rep.x_slope * y + rep.x_intercept; };

    // Bogomolov: H.c1^2 - 8H^3 + 16 >= 0 along x = x(y), quadratic in y
    auto bog = [&](const Rat& y) { return H_dot_c1_squared(cls, x_of_y(y), y) - 8 * H3 + 16; };
    Rat A, B, C;
    detail::quadratic_fit(bog(0), bog(1), bog(2), A, B, C);
    Int L = detail::lcm_den({A, B, C});
    Int P = num(A * L), Q = num(B * L), S = num(C * L);
    if (P >= 0) throw DomainError("Bogomolov quadratic is not concave for this class");

    Int delta = Q * Q - 4 * P * S;
    if (delta < 0) return rep;  // inequality never holds
    rep.y_interval = quadratic_surd_roots(P, Q, S);
    if (rep.y_interval.size() == 1) rep.y_interval.push_back(rep.y_interval.front());

    // conservative integer window around the interval, then exact membership
    Int s = isqrt(delta);
    Rat center = make_rat(-Q, 2 * P);
    Rat radius = make_rat(s + 1, 2 * boost::multiprecision::abs(P));
    Int ylo = rat_floor(center - radius), yhi = rat_ceil(center + radius);
    for (Int yi = ylo; yi <= yhi; ++yi) {
        Rat y(yi);
        if (P * y * y + Q * y + S < 0) continue;
        Rat x = x_of_y(y);
        if (!is_integer(x)) continue;
        Rank2Candidate cand;
        cand.x = static_cast<long>(num(x));
        cand.y = static_cast<long>(yi);
        cand.Hc2 = H_dot_c1_squared(cls, x, y) / 2 - 2 * H3 + 4;
        rep.candidates.push_back(cand);
    }
    return rep;
}

struct Rank2RelationCheck {
    bool relation1 = false;
    bool relation2 = false;
    std::optional<bool> relation3;  // unset when c2 is known only in pairing form
    Rat relation3_lhs;              // meaningful when relation3 is set
};

/// The three numerical constraints a rank 2 Ulrich bundle must satisfy.
/// Relation (3) needs c1.c2 from full A^2 coordinates; with a pairing-form c2
/// it is reported indeterminate.
inline Rank2RelationCheck check_rank2_relations(const FanoBlowupClass& cls, const ChernData& E) {
    if (E.rank != 2) throw DomainError("check_rank2_relations: rank 2 required");
    const ChowContext ctx(cls);
    const TangentData T(ctx);
    const Rat H3(cls.H3());
    const Rat Ph = Rat(static_cast<long>(ctx.r) * ctx.r * ctx.c_X - ctx.d);
    const Rat Pe = Rat(2L * ctx.r * ctx.d + ctx.e3());

    Rank2RelationCheck out;
    // (1) H^2.c1 = 3H^3   (pairing of c1 = c1h h + c1e e against H^2)
    out.relation1 = (Ph * E.c1h + Pe * E.c1e) == 3 * H3;
    // (2) H.c2 = (1/2) H.c1^2 - 2H^3 + 4
    Rat Hc1sq = triple_product(ctx, Rat(ctx.r), Rat(-1), E.c1h, E.c1e, E.c1h, E.c1e);
    Rat Hc2 = E.c2.dot(ctx, Rat(ctx.r), Rat(-1));
    out.relation2 = Hc2 == Hc1sq / 2 - 2 * H3 + 4;
    // (3) 2 c1^3 - 6 c1.c2 + c1.c2(T) = 9H^3
    if (E.c2.has_full()) {
        Rat c1cube = triple_product(ctx, E.c1h, E.c1e, E.c1h, E.c1e, E.c1h, E.c1e);
        Rat c1c2 = E.c2.dot(ctx, E.c1h, E.c1e);
        Rat c1d2 = T.c2_on_h() * E.c1h + T.c2_on_e() * E.c1e;
        out.relation3_lhs = 2 * c1cube - 6 * c1c2 + c1d2;
        out.relation3 = out.relation3_lhs == 9 * H3;
    }
    return out;
}

/// Chern data of an extension of O(D2) by O(D1): Whitney gives c1 = D1 + D2,
/// c2 = D1.D2, c3 = 0.
inline ChernData extension_chern(const FanoBlowupClass& cls, const DivisorClass& D1, const DivisorClass& D2) {
    (void)cls;
    ChernData E;
    E.rank = 2;
    E.c1h = Rat(D1.a + D2.a);
    E.c1e = Rat(-(D1.b + D2.b));
    E.c2 = A2Form::full(Rat(D1.a) * D2.a, Rat(D1.a) * (-D2.b) + Rat(D2.a) * (-D1.b), Rat(D1.b) * D2.b);
    E.c3 = 0;
    return E;
}

}  // namespace ufano

#endif
