#ifndef UFANO_CAS_POLY_HPP
#define UFANO_CAS_POLY_HPP

#include "ufano/cas/base.hpp"

#include <algorithm>
#include <vector>

namespace ufano::cas {

struct Monomial {
    std::array<uint16_t, kNumVars> e{};

    int deg() const { return e[0] + e[1] + e[2] + e[3]; }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m;
        for (int i = 0; i < kNumVars; ++i) m.e[i] = static_cast<uint16_t>(a.e[i] + b.e[i]);
        return m;
    }

    bool divides(const Monomial& other) const {
        for (int i = 0; i < kNumVars; ++i)
            if (e[i] > other.e[i]) return false;
        return true;
    }

    /// other / this, assuming divisibility
    Monomial quotient_of(const Monomial& other) const {
        Monomial m;
        for (int i = 0; i < kNumVars; ++i) m.e[i] = static_cast<uint16_t>(other.e[i] - e[i]);
        return m;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial m;
        for (int i = 0; i < kNumVars; ++i) m.e[i] = std::max(a.e[i], b.e[i]);
        return m;
    }

    bool coprime(const Monomial& b) const {
        for (int i = 0; i < kNumVars; ++i)
            if (e[i] && b.e[i]) return false;
        return true;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < kNumVars; ++i) {
            if (!e[i]) continue;
            if (!s.empty()) s += "*";
            s += kVarNames[i];
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        return s.empty() ? "1" : s;
    }
};

/// cmp > 0 when a comes before b (a is larger in the order).
inline int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder ord) {
    if (ord == MonomialOrder::Grevlex) {
        int da = a.deg(), db = b.deg();
        if (da != db) return da < db ? -1 : 1;
        for (int i = kNumVars - 1; i >= 0; --i)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        return 0;
    }
    for (int i = 0; i < kNumVars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

struct Term {
    Monomial m;
    int64_t c = 0;  // in [0, p)

    friend bool operator==(const Term&, const Term&) = default;
};

/// Homogeneous polynomial over F_p in x, y, z, w. Terms are kept sorted,
/// largest first in the active monomial order, with nonzero reduced coefficients.
using GPoly = std::vector<Term>;

inline bool gpoly_is_homogeneous(const GPoly& f, int* deg_out = nullptr) {
    if (f.empty()) {
        if (deg_out) *deg_out = -1;
        return true;
    }
    int d = f.front().m.deg();
    for (const auto& t : f)
        if (t.m.deg() != d) return false;
    if (deg_out) *deg_out = d;
    return true;
}

inline int gpoly_deg(const GPoly& f) { return f.empty() ? -1 : f.front().m.deg(); }

/// Sort, merge duplicates, reduce coefficients, drop zeros.
inline GPoly gpoly_normalize(GPoly f, const PrimeField& F, MonomialOrder ord) {
    for (auto& t : f) t.c = F.reduce(t.c);
    std::sort(f.begin(), f.end(), [&](const Term& a, const Term& b) { return mono_cmp(a.m, b.m, ord) > 0; });
    GPoly out;
    out.reserve(f.size());
    for (const auto& t : f) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c = F.add(out.back().c, t.c);
        else
            out.push_back(t);
        if (!out.empty() && out.back().c == 0) out.pop_back();
    }
    return out;
}

/// f - c * mono * g, all inputs sorted in ord; merge, O(|f| + |g|).
inline GPoly gpoly_submul(const GPoly& f, int64_t c, const Monomial& mono, const GPoly& g, const PrimeField& F,
                          MonomialOrder ord) {
    GPoly out;
    out.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() && j < g.size()) {
        Monomial gm = g[j].m * mono;
        int cmp = mono_cmp(f[i].m, gm, ord);
        if (cmp > 0) {
            out.push_back(f[i++]);
        } else if (cmp < 0) {
            int64_t v = F.neg(F.mul(c, g[j].c));
            if (v != 0) out.push_back({gm, v});
            ++j;
        } else {
            int64_t v = F.sub(f[i].c, F.mul(c, g[j].c));
            if (v != 0) out.push_back({f[i].m, v});
            ++i;
            ++j;
        }
    }
    for (; i < f.size(); ++i) out.push_back(f[i]);
    for (; j < g.size(); ++j) {
        int64_t v = F.neg(F.mul(c, g[j].c));
        if (v != 0) out.push_back({g[j].m * mono, v});
    }
    return out;
}

inline GPoly gpoly_scale(GPoly f, int64_t c, const PrimeField& F) {
    for (auto& t : f) t.c = F.mul(t.c, c);
    return f;
}

inline GPoly gpoly_mul_term(const GPoly& f, int64_t c, const Monomial& mono, const PrimeField& F) {
    GPoly out;
    out.reserve(f.size());
    for (const auto& t : f) {
        int64_t v = F.mul(t.c, c);
        if (v != 0) out.push_back({t.m * mono, v});
    }
    return out;  // monomial order is preserved by a monomial shift
}

inline GPoly gpoly_mul(const GPoly& f, const GPoly& g, const PrimeField& F, MonomialOrder ord) {
    GPoly acc;
    for (const auto& t : f) {
        GPoly part = gpoly_mul_term(g, t.c, t.m, F);
        acc = gpoly_submul(acc, F.neg(1), Monomial{}, part, F, ord);
    }
    return acc;
}

inline GPoly gpoly_add(const GPoly& f, const GPoly& g, const PrimeField& F, MonomialOrder ord) {
    return gpoly_submul(f, F.neg(1), Monomial{}, g, F, ord);
}

inline GPoly gpoly_sub(const GPoly& f, const GPoly& g, const PrimeField& F, MonomialOrder ord) {
    return gpoly_submul(f, 1, Monomial{}, g, F, ord);
}

/// Least nonnegative residues, terms in the active order (grevlex for files).
inline std::string gpoly_str(const GPoly& f) {
    if (f.empty()) return "0";
    std::string s;
    for (const auto& t : f) {
        if (!s.empty()) s += "+";
        if (t.m.deg() == 0)
            s += std::to_string(t.c);
        else if (t.c == 1)
            s += t.m.str();
        else
            s += std::to_string(t.c) + "*" + t.m.str();
    }
    return s;
}

/// Full normal form of f against the (sorted-by-creation) reducer list.
/// Top-down: each reducible term is cancelled in order.
inline GPoly gpoly_normal_form(GPoly f, const std::vector<GPoly>& reducers, const PrimeField& F,
                               MonomialOrder ord) {
    GPoly result;
    while (!f.empty()) {
        bool reduced = false;
        for (const auto& g : reducers) {
            if (g.empty()) continue;
            if (g.front().m.divides(f.front().m)) {
                int64_t c = F.mul(f.front().c, F.inv(g.front().c));
                f = gpoly_submul(f, c, g.front().m.quotient_of(f.front().m), g, F, ord);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            result.push_back(f.front());
            f.erase(f.begin());
        }
    }
    return result;
}

}  // namespace ufano::cas

#endif
