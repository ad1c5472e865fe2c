#ifndef UFANO_LEDGER_HPP
#define UFANO_LEDGER_HPP

#include "ufano/ulrich_search.hpp"

#include <string>
#include <vector>

namespace ufano {

struct LedgerNotApplicable : Error {
    using Error::Error;
};

/// A fact the dimension count relies on, kept visible instead of being
/// absorbed into the arithmetic. status is "computed" when this run produced
/// the number, "cited" when it is taken from the literature hypotheses.
struct Assumption {
    std::string name;
    std::string paper_ref;
    std::string status;  // cited | computed
    std::string value;
};

/// chi(O(D1 - D2)) and chi(O(D1 - D2 + K)), the two Euler characteristics
/// behind the ext^1 estimates for a pair of line bundles.
inline std::pair<Rat, Rat> ext_chi_report(const FanoBlowupClass& cls, const DivisorClass& D1,
                                          const DivisorClass& D2) {
    DivisorClass diff{D1.a - D2.a, D1.b - D2.b};
    DivisorClass K = canonical_divisor(cls);
    DivisorClass diffK{diff.a + K.a, diff.b + K.b};
    return {hilbert_poly_line(cls, diff).eval(0), hilbert_poly_line(cls, diffK).eval(0)};
}

struct Deg1Class {
    Rat h, e;
};

/// Chern data of E tensor E^dual for a rank 2 bundle with Chern roots a1, a2:
/// rank 4, c1 = c3 = 0 and c2 = -(a1 - a2)^2.
inline ChernData tensor_rank2_with_dual(const FanoBlowupClass& cls, const Deg1Class& a1, const Deg1Class& a2) {
    (void)cls;
    Rat dh = a1.h - a2.h, de = a1.e - a2.e;
    ChernData E;
    E.rank = 4;
    E.c1h = 0;
    E.c1e = 0;
    E.c2 = A2Form::full(-dh * dh, -2 * dh * de, -de * de);
    E.c3 = 0;
    return E;
}

struct LedgerOptions {
    std::optional<long> h2_I3_6;  // measured h^2(I_C^3(6)); hypothesis value 0
    std::optional<long> h2_I2_2;  // measured h^2(I_C^2(2)); hypothesis value 8
};

struct LedgerReport {
    std::string class_id;
    DivisorClass L1, L2;
    long chi_L2dual_L1 = 0;
    long ext1_L2_L1 = 0;
    long chi_K_twist = 0;
    long ext1_L1_L2_upper = 0;
    A2Form::Full c2_EEdual{};
    long chi_EEdual = 0;
    long h1_minus_h2 = 0;
    long N = 0;
    long dim_R_lower = 0;
    long dim_Rprime = 0;
    long dim_Rdoubleprime_upper = 0;
    bool stable_exists = false;
    std::vector<Assumption> assumptions;
};

/// The dimension ledger: lower bound for the Quot scheme at a simple rank 2
/// Ulrich bundle with c1 = 3H against upper bounds for the loci of extensions
/// of the two Ulrich line bundles. Only defined on a class carrying exactly
/// two Ulrich line bundles.
inline LedgerReport quot_dimension_report(const FanoBlowupClass& cls, const LedgerOptions& opt = {}) {
    auto lines = solve_line_candidates(cls);
    if (lines.solutions.size() != 2)
        throw LedgerNotApplicable("ledger not applicable: class " + cls.id + " has " +
                                  std::to_string(lines.solutions.size()) + " Ulrich line bundles, need exactly 2");

    LedgerReport rep;
    rep.class_id = cls.id;
    // L1 is the non-pullback divisor, L2 its dual; sorted output has L2 first
    rep.L2 = lines.solutions[0];
    rep.L1 = lines.solutions[1];

    auto as_rat_long = [](const Rat& v, const char* what) {
        if (!is_integer(v)) throw DomainError(std::string("expected integer value for ") + what);
        return static_cast<long>(num(v));
    };

    auto [chi_diff, chi_diff_K] = ext_chi_report(cls, rep.L1, rep.L2);
    rep.chi_L2dual_L1 = as_rat_long(chi_diff, "chi(L2^v ox L1)");
    rep.chi_K_twist = as_rat_long(chi_diff_K, "chi(L2^v ox L1 ox K)");

    long h2_I3_6 = opt.h2_I3_6.value_or(0);
    long h2_I2_2 = opt.h2_I2_2.value_or(8);
    // chi = h0 - h1 + h2 - h3 with h0 = hom(L2,L1) = 0, h3 = hom(L1(1),L2) = 0
    // and h2 = h^2(I_C^3(6)), so ext^1(L2,L1) = h1 = -chi + h2
    rep.ext1_L2_L1 = -rep.chi_L2dual_L1 + h2_I3_6;
    // ext^1(L1,L2) = h^2(L2^v ox L1 ox K) = h^2(I_C^2(2))
    rep.ext1_L1_L2_upper = h2_I2_2;

    Deg1Class a1{Rat(rep.L1.a), Rat(-rep.L1.b)}, a2{Rat(rep.L2.a), Rat(-rep.L2.b)};
    ChernData EE = tensor_rank2_with_dual(cls, a1, a2);
    rep.c2_EEdual = EE.c2.full_coords();
    rep.chi_EEdual = as_rat_long(euler_poly(cls, EE).eval(0), "chi(E ox E^v)");
    // h1 - h2 = -chi + hom(E,E) - hom(E(1),E) with hom(E,E) = 1, hom(E(1),E) = 0
    rep.h1_minus_h2 = -rep.chi_EEdual + 1 - 0;

    rep.N = as_rat_long(ulrich_target(cls, 2).eval(0), "N");
    rep.dim_R_lower = rep.N * rep.N + rep.h1_minus_h2 - 1;
    rep.dim_Rprime = (rep.N * rep.N - 1) + (rep.ext1_L2_L1 - 1);
    rep.dim_Rdoubleprime_upper = (rep.N * rep.N - 1) + (rep.ext1_L1_L2_upper - 1);
    rep.stable_exists = rep.dim_R_lower > std::max(rep.dim_Rprime, rep.dim_Rdoubleprime_upper);

    const char* i3_status = opt.h2_I3_6 ? "computed" : "cited";
    const char* i2_status = opt.h2_I2_2 ? "computed" : "cited";
    rep.assumptions = {
        {"hom(L2,L1) = 0", "slope comparison, [HL10, Prop 1.2.7]", "cited", "0"},
        {"hom(L1(1),L2) = 0", "slope comparison, [HL10, Prop 1.2.7]", "cited", "0"},
        {"h^2(I_C^3(6))", "semicontinuity from an instance computation over F_p", i3_status,
         std::to_string(h2_I3_6)},
        {"h^2(I_C^2(2))", "semicontinuity from an instance computation over F_p", i2_status,
         std::to_string(h2_I2_2)},
        {"hom(E,E) = 1", "simpleness of a non-split extension of non-isomorphic stable bundles, [CHGS12, Lemma 4.2]",
         "cited", "1"},
        {"hom(E(1),E) = 0", "slope comparison, [HL10, Prop 1.2.7]", "cited", "0"},
    };
    return rep;
}

}  // namespace ufano

#endif
