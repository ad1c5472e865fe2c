#ifndef UFANO_CAS_RANDOM_CURVE_HPP
#define UFANO_CAS_RANDOM_CURVE_HPP

#include "ufano/cas/cohomology.hpp"

#include <random>

namespace ufano::cas {

namespace detail {

inline GPoly random_linear_form(std::mt19937_64& rng, const PrimeField& F) {
    GPoly f;
    for (int v = 0; v < kNumVars; ++v) {
        int64_t c = static_cast<int64_t>(rng() % static_cast<uint64_t>(F.p));
        if (c == 0) continue;
        Monomial m;
        m.e[v] = 1;
        f.push_back({m, c});
    }
    return gpoly_normalize(std::move(f), F, MonomialOrder::Grevlex);
}

inline GPoly det3(const std::array<std::array<GPoly, 3>, 3>& m, const PrimeField& F) {
    const MonomialOrder ord = MonomialOrder::Grevlex;
    auto mul3 = [&](const GPoly& a, const GPoly& b, const GPoly& c) {
        return gpoly_mul(gpoly_mul(a, b, F, ord), c, F, ord);
    };
    GPoly acc = mul3(m[0][0], m[1][1], m[2][2]);
    acc = gpoly_add(acc, mul3(m[0][1], m[1][2], m[2][0]), F, ord);
    acc = gpoly_add(acc, mul3(m[0][2], m[1][0], m[2][1]), F, ord);
    acc = gpoly_sub(acc, mul3(m[0][2], m[1][1], m[2][0]), F, ord);
    acc = gpoly_sub(acc, mul3(m[0][0], m[1][2], m[2][1]), F, ord);
    acc = gpoly_sub(acc, mul3(m[0][1], m[1][0], m[2][2]), F, ord);
    return acc;
}

}  // namespace detail

/// Seeded ACM space curve of degree 6, genus 3: the 3x3 minors of a random
/// 4x3 matrix of linear forms (the Hilbert-Burch presentation the minimal
/// resolution dictates). Deterministic per (seed, p); degenerate draws are
/// resampled from the same stream up to 10 times.
inline GradedIdeal random_acm_curve(uint64_t seed, int64_t p = 32467) {
    PrimeField F(p);
    if (p <= 3) throw CasError("random curve generation wants p > 3");
    std::mt19937_64 rng(seed);

    for (int attempt = 0; attempt < 10; ++attempt) {
        std::array<std::array<GPoly, 3>, 4> hb;
        for (auto& row : hb)
            for (auto& cell : row) cell = detail::random_linear_form(rng, F);

        std::vector<GPoly> minors;
        for (int drop = 0; drop < 4; ++drop) {
            std::array<std::array<GPoly, 3>, 3> sub;
            int r = 0;
            for (int i = 0; i < 4; ++i) {
                if (i == drop) continue;
                sub[r++] = hb[i];
            }
            GPoly d = detail::det3(sub, F);
            if ((drop % 2) == 1) d = gpoly_scale(std::move(d), F.neg(1), F);
            if (d.empty()) {
                minors.clear();
                break;
            }
            minors.push_back(std::move(d));
        }
        if (minors.size() != 4) continue;

        GradedIdeal I(F, minors);
        FreeResolution res = minimal_free_resolution(I);
        auto betti = res.betti();
        if (betti != std::vector<std::size_t>{1, 4, 3}) continue;
        Poly hp = hilbert_poly_from_resolution(res);
        if (!(hp.coeff(1) == Rat(6) && hp.coeff(0) == Rat(-2) && hp.degree() == 1)) continue;
        return I;
    }
    throw CasError("random curve generation failed 10 times for seed " + std::to_string(seed) +
                   "; the prime may be too small");
}

}  // namespace ufano::cas

#endif
