#ifndef UFANO_ACM_HPP
#define UFANO_ACM_HPP

#include "ufano/riemann_roch.hpp"

#include <limits>
#include <string>
#include <vector>

namespace ufano {

enum class AcmRule { BEL, PullbackLineBundle, GroebnerCheck };

inline const char* acm_rule_name(AcmRule r) {
    switch (r) {
        case AcmRule::BEL: return "BEL";
        case AcmRule::PullbackLineBundle: return "pullback-line-bundle";
        case AcmRule::GroebnerCheck: return "groebner-check";
    }
    return "?";
}

/// One residual cohomology group h^i(P3, I_C^m(k)) the certificate cannot
/// dispatch by BEL or a line bundle reduction.
struct CohomologyRequirement {
    long m = 0;  // ideal power
    long k = 0;  // twist
    int i = 0;   // cohomology index on P3

    friend bool operator==(const CohomologyRequirement&, const CohomologyRequirement&) = default;
};

/// A range of twists with one vanishing rule. Unbounded ends are open optionals.
struct AcmRegime {
    std::optional<long> t_min, t_max;
    AcmRule rule = AcmRule::BEL;
    std::string reduction;
    std::optional<CohomologyRequirement> required;

    bool contains(long t) const {
        if (t_min && t < *t_min) return false;
        if (t_max && t > *t_max) return false;
        return true;
    }
};

struct AcmCertificate {
    std::string class_id;
    DivisorClass divisor;
    std::vector<AcmRegime> regimes;

    bool covers(long t) const {
        for (const auto& r : regimes)
            if (r.contains(t)) return true;
        return false;
    }

    std::vector<CohomologyRequirement> requirements() const {
        std::vector<CohomologyRequirement> out;
        for (const auto& r : regimes)
            if (r.required) out.push_back(*r.required);
        return out;
    }
};

namespace detail {

inline std::string ideal_power_str(long m, long k) {
    return "H^i(P3, I_C^" + std::to_string(m) + "(" + std::to_string(k) + "))";
}

inline std::string line_bundle_str(long k) { return "H^i(P3, O(" + std::to_string(k) + "))"; }

}  // namespace detail

/// Vanishing certificate for H^1 and H^2 of O(D(t)) on the blow-up of P3
/// along the (6,3) curve, following the pushforward reductions:
///   m(t) = b + t >= 0:  f_* O(D(t)) = I_C^m(a + 4t), BEL when a+4t >= 3m
///   m(t) in {0, -1}:    a line bundle on P3, middle cohomology vanishes
///   m(t) <= -2:         Serre duality first, then the same reduction with
///                       m' = -b-t-1, k' = -a-4t-4
/// Twists not settled by BEL or a line bundle come back as explicit
/// requirements h^i(P3, I_C^m(k)) for the Groebner kernel.
inline AcmCertificate acm_certificate(const FanoBlowupClass& cls, const DivisorClass& D) {
    if (!(cls.base == Base::P3 && cls.d == 6 && cls.g == 3))
        throw DomainError("ACM certificates are defined on the P3-d6-g3 class only");

    const long a = D.a, b = D.b;
    AcmCertificate cert;
    cert.class_id = cls.id;
    cert.divisor = D;

    // direct BEL tail: m >= 1 and k - 3m = t + a - 3b >= 0
    const long t_hi = std::max(1 - b, 3 * b - a);
    // Serre dual BEL tail: m' >= 1 and k' - 3m' = -t + 3b - a - 1 >= 0
    const long t_lo = std::min(-b - 2, 3 * b - a - 1);

    auto push_groebner = [&](long t, long m, long k) {
        if (k >= 3 * m) throw DomainError("internal: BEL range classified as residual");
        for (int i = 1; i <= 2; ++i) {
            AcmRegime r;
            r.t_min = r.t_max = t;
            r.rule = AcmRule::GroebnerCheck;
            r.reduction = detail::ideal_power_str(m, k);
            r.required = CohomologyRequirement{m, k, i};
            cert.regimes.push_back(std::move(r));
        }
    };

    {
        AcmRegime tail;
        tail.t_min = std::nullopt;
        tail.t_max = t_lo;
        tail.rule = AcmRule::BEL;
        tail.reduction = "Serre dual, then f_* = I_C^(-t-" + std::to_string(b + 1) + ")(" +
                         std::to_string(-a - 4) + "-4t), k >= 3m";
        if (!(-t_lo - b - 1 >= 1) || !(-4 * t_lo - a - 4 >= 3 * (-t_lo - b - 1)))
            throw DomainError("internal: dual BEL tail bound");
        cert.regimes.push_back(std::move(tail));
    }

    for (long t = t_lo + 1; t < t_hi; ++t) {
        long m = b + t, k = a + 4 * t;
        if (m >= 1) {
            if (k >= 3 * m) {
                AcmRegime r;
                r.t_min = r.t_max = t;
                r.rule = AcmRule::BEL;
                r.reduction = detail::ideal_power_str(m, k);
                cert.regimes.push_back(std::move(r));
            } else {
                push_groebner(t, m, k);
            }
        } else if (m >= -1) {
            AcmRegime r;
            r.t_min = r.t_max = t;
            r.rule = AcmRule::PullbackLineBundle;
            r.reduction = detail::line_bundle_str(k);
            cert.regimes.push_back(std::move(r));
        } else {
            long m2 = -b - t - 1, k2 = -a - 4 * t - 4;
            if (m2 == 0) {
                AcmRegime r;
                r.t_min = r.t_max = t;
                r.rule = AcmRule::PullbackLineBundle;
                r.reduction = "Serre dual, then " + detail::line_bundle_str(k2);
                cert.regimes.push_back(std::move(r));
            } else if (k2 >= 3 * m2) {
                AcmRegime r;
                r.t_min = r.t_max = t;
                r.rule = AcmRule::BEL;
                r.reduction = "Serre dual, then " + detail::ideal_power_str(m2, k2);
                cert.regimes.push_back(std::move(r));
            } else {
                push_groebner(t, m2, k2);
            }
        }
    }

    {
        AcmRegime tail;
        tail.t_min = t_hi;
        tail.t_max = std::nullopt;
        tail.rule = AcmRule::BEL;
        tail.reduction = "f_* O(D(t)) = I_C^(t+" + std::to_string(b) + ")(" + std::to_string(a) + "+4t), k >= 3m";
        if (!(a + 4 * t_hi >= 3 * (b + t_hi)) || !(b + t_hi >= 1)) throw DomainError("internal: BEL tail bound");
        cert.regimes.push_back(std::move(tail));
    }
    return cert;
}

}  // namespace ufano

#endif
