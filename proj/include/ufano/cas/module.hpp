#ifndef UFANO_CAS_MODULE_HPP
#define UFANO_CAS_MODULE_HPP

#include "ufano/cas/poly.hpp"

#include <queue>
#include <tuple>

namespace ufano::cas {

/// Term of a free-module element: coefficient * monomial * basis_vector(comp).
struct MTerm {
    int32_t comp = 0;
    Monomial m;
    int64_t c = 0;
};

/// Element of a graded free module, terms sorted descending in the module order.
using MPoly = std::vector<MTerm>;

/// Position-over-term order in two blocks: components below `split` dominate
/// all others (elimination between the blocks); inside a block lower component
/// wins, ties broken by the monomial order.
struct ModuleOrder {
    MonomialOrder mono = MonomialOrder::Grevlex;
    int32_t split = INT32_MAX;

    int cmp(const MTerm& a, const MTerm& b) const {
        bool ba = a.comp < split, bb = b.comp < split;
        if (ba != bb) return ba ? 1 : -1;
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return mono_cmp(a.m, b.m, mono);
    }
};

inline MPoly mpoly_normalize(MPoly f, const PrimeField& F, const ModuleOrder& mo) {
    for (auto& t : f) t.c = F.reduce(t.c);
    std::sort(f.begin(), f.end(), [&](const MTerm& a, const MTerm& b) { return mo.cmp(a, b) > 0; });
    MPoly out;
    out.reserve(f.size());
    for (const auto& t : f) {
        if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m)
            out.back().c = F.add(out.back().c, t.c);
        else
            out.push_back(t);
        if (!out.empty() && out.back().c == 0) out.pop_back();
    }
    return out;
}

/// f - c * mono * g (merge of sorted vectors).
inline MPoly mpoly_submul(const MPoly& f, int64_t c, const Monomial& mono, const MPoly& g, const PrimeField& F,
                          const ModuleOrder& mo) {
    MPoly out;
    out.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() && j < g.size()) {
        MTerm gt{g[j].comp, g[j].m * mono, g[j].c};
        int cmp = mo.cmp(f[i], gt);
        if (cmp > 0) {
            out.push_back(f[i++]);
        } else if (cmp < 0) {
            int64_t v = F.neg(F.mul(c, gt.c));
            if (v != 0) out.push_back({gt.comp, gt.m, v});
            ++j;
        } else {
            int64_t v = F.sub(f[i].c, F.mul(c, g[j].c));
            if (v != 0) out.push_back({f[i].comp, f[i].m, v});
            ++i;
            ++j;
        }
    }
    for (; i < f.size(); ++i) out.push_back(f[i]);
    for (; j < g.size(); ++j) {
        int64_t v = F.neg(F.mul(c, g[j].c));
        if (v != 0) out.push_back({g[j].comp, g[j].m * mono, v});
    }
    return out;
}

inline MPoly mpoly_scale(MPoly f, int64_t c, const PrimeField& F) {
    for (auto& t : f) t.c = F.mul(t.c, c);
    return f;
}

inline long mpoly_degree(const MPoly& f, const std::vector<long>& twists) {
    if (f.empty()) return -1;
    return f.front().m.deg() + twists[f.front().comp];
}

inline bool mpoly_is_homogeneous(const MPoly& f, const std::vector<long>& twists) {
    if (f.empty()) return true;
    long d = f.front().m.deg() + twists[f.front().comp];
    for (const auto& t : f)
        if (t.m.deg() + twists[t.comp] != d) return false;
    return true;
}

struct ModuleGroebnerResult {
    std::vector<MPoly> gb;          // reduced GB of the submodule (ambient components only)
    std::vector<MPoly> syzygies;    // generators of Syz(input gens), components rebased to 0..k-1
    std::vector<long> syzygy_twists;  // degree of each input generator
};

/// Buchberger on a graded submodule of a free module, with optional syzygy
/// collection through the extended representation (f, u) in F + S^k. Keeping
/// every S-pair (no elimination criteria) makes the recorded zero reductions a
/// generating set of the full syzygy module.
inline ModuleGroebnerResult module_groebner(const std::vector<MPoly>& gens_in,
                                            const std::vector<long>& ambient_twists, const PrimeField& F,
                                            MonomialOrder mono_ord, bool collect_syzygies) {
    const int32_t rF = static_cast<int32_t>(ambient_twists.size());
    const ModuleOrder mo{mono_ord, rF};
    ModuleGroebnerResult out;

    std::vector<long> twists = ambient_twists;  // extended by generator degrees below
    std::vector<MPoly> gens;
    gens.reserve(gens_in.size());
    for (std::size_t i = 0; i < gens_in.size(); ++i) {
        MPoly g = mpoly_normalize(gens_in[i], F, mo);
        if (!mpoly_is_homogeneous(g, ambient_twists)) throw CasError("inhomogeneous module generator");
        long deg = mpoly_degree(g, ambient_twists);
        out.syzygy_twists.push_back(deg);
        twists.push_back(deg);
        if (collect_syzygies) g.push_back({rF + static_cast<int32_t>(i), Monomial{}, 1});
        gens.push_back(std::move(g));
    }

    struct Elem {
        MPoly v;
        int32_t lc;
        Monomial lm;
    };
    std::vector<Elem> basis;

    auto strip = [&](const MPoly& v) {
        MPoly f, u;
        for (const auto& t : v)
            (t.comp < rF ? f : u).push_back(t);
        for (auto& t : u) t.comp -= rF;
        return std::pair{f, u};
    };

    // full normal form of the ambient block against the basis
    auto normal_form = [&](MPoly v) {
        MPoly done;
        while (!v.empty()) {
            const MTerm& lead = v.front();
            if (lead.comp >= rF) {  // only the syzygy tail is left
                done.insert(done.end(), v.begin(), v.end());
                break;
            }
            bool hit = false;
            for (const auto& b : basis) {
                if (b.lc == lead.comp && b.lm.divides(lead.m)) {
                    v = mpoly_submul(v, lead.c, b.lm.quotient_of(lead.m), b.v, F, mo);
                    hit = true;
                    break;
                }
            }
            if (!hit) {
                done.push_back(v.front());
                v.erase(v.begin());
            }
        }
        return done;
    };

    using PairKey = std::tuple<long, std::size_t, std::size_t>;
    std::priority_queue<PairKey, std::vector<PairKey>, std::greater<>> pairs;
    const bool product_criterion = (rF == 1) && !collect_syzygies;

    auto insert_element = [&](MPoly v) {
        v = mpoly_scale(std::move(v), F.inv(v.front().c), F);
        const int32_t lc = v.front().comp;
        const Monomial lm = v.front().m;
        std::size_t k = basis.size();
        for (std::size_t i = 0; i < k; ++i) {
            if (basis[i].lc != lc) continue;
            if (product_criterion && basis[i].lm.coprime(lm)) continue;
            Monomial l = Monomial::lcm(basis[i].lm, lm);
            pairs.emplace(l.deg() + twists[lc], i, k);
        }
        basis.push_back(Elem{std::move(v), lc, lm});
    };

    auto consume = [&](MPoly v) {
        MPoly red = normal_form(std::move(v));
        if (red.empty()) return;
        if (red.front().comp >= rF) {
            if (collect_syzygies) {
                auto [f, u] = strip(red);
                (void)f;
                out.syzygies.push_back(mpoly_scale(std::move(u), F.inv(red.front().c), F));
            }
            return;
        }
        insert_element(std::move(red));
    };

    for (auto& g : gens) consume(std::move(g));

    while (!pairs.empty()) {
        auto [deg, i, j] = pairs.top();
        pairs.pop();
        (void)deg;
        const Elem& a = basis[i];
        const Elem& b = basis[j];
        Monomial l = Monomial::lcm(a.lm, b.lm);
        MPoly s = mpoly_submul(MPoly{}, F.neg(1), l.quotient_of(a.lm), a.v, F, mo);
        s = mpoly_submul(std::move(s), 1, l.quotient_of(b.lm), b.v, F, mo);
        consume(std::move(s));
    }

    // reduced GB of the ambient block: drop elements whose lead divides away,
    // then tail-reduce the survivors against each other
    std::vector<MPoly> raw;
    raw.reserve(basis.size());
    for (auto& e : basis) raw.push_back(strip(e.v).first);
    // leads are pairwise distinct (a new element is fully reduced on insertion),
    // so survivors are the divisibility-minimal leading terms
    std::vector<MPoly> kept;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < raw.size() && minimal; ++j) {
            if (i == j) continue;
            minimal = !(raw[j].front().comp == raw[i].front().comp && raw[j].front().m.divides(raw[i].front().m) &&
                        !(raw[i].front().m == raw[j].front().m));
        }
        if (minimal) kept.push_back(raw[i]);
    }
    // tail reduction
    std::vector<MPoly> reduced;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        MPoly cur = kept[i];
        MPoly done;
        done.push_back(cur.front());
        cur.erase(cur.begin());
        while (!cur.empty()) {
            bool hit = false;
            for (std::size_t j = 0; j < kept.size(); ++j) {
                if (j == i) continue;
                const MPoly& g = kept[j];
                if (g.front().comp == cur.front().comp && g.front().m.divides(cur.front().m)) {
                    cur = mpoly_submul(cur, cur.front().c, g.front().m.quotient_of(cur.front().m), g, F, mo);
                    hit = true;
                    break;
                }
            }
            if (!hit) {
                done.push_back(cur.front());
                cur.erase(cur.begin());
            }
        }
        reduced.push_back(std::move(done));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const MPoly& a, const MPoly& b) {
        return mo.cmp(a.front(), b.front()) < 0;
    });
    out.gb = std::move(reduced);
    return out;
}

}  // namespace ufano::cas

#endif
