#ifndef UFANO_CLOSED_FORMS_HPP
#define UFANO_CLOSED_FORMS_HPP

#include "ufano/fano_class.hpp"
#include "ufano/polynomial.hpp"

namespace ufano {

// Closed-form Hilbert polynomials chi(O(a h - b e + tH)) per base, written out
// bracket by bracket. These are independent cross-checks of the generic
// Chern-character engine and are not called by it.
//
// Note for the record: the published versions of the Q, V3 and V4 brackets
// circulate with small typos (they fail chi(O) = 1 at a = b = 0). The forms
// below are the corrected ones, rederived from Riemann-Roch on the blow-up;
// they match the published leading coefficients and the P3 form exactly.

inline Poly closed_form_chi(Base base, long d, long g, const Rat& a, const Rat& b) {
    std::vector<Rat> c(4, Rat(0));
    const Rat D(d), G(g);
    switch (base) {
        case Base::P3:
            c[3] = (62 - 8 * D + 2 * G) / 6;
            c[2] = ((48 - 3 * D) * a + (6 * G - 12 * D - 6) * b - 12 * D + 3 * G + 93) / 6;
            c[1] = (12 * a * a + (6 * G - 6) * b * b - 6 * D * a * b + (48 - 3 * D) * a +
                    (6 * G - 6 - 12 * D) * b + 43 - 4 * D + G) /
                   6;
            c[0] = (a * a * a + (4 * D + 2 * G - 2) * b * b * b + 6 * a * a + (3 * G - 3 * D * a - 3) * b * b +
                    11 * a + (G - 3 * D * a - 4 * D - 1) * b + 6) /
                   6;
            break;
        case Base::Q:
            c[3] = (208 - 24 * D + 8 * G) / 24;
            c[2] = ((216 - 12 * D) * a + (24 * G - 36 * D - 24) * b - 36 * D + 12 * G + 312) / 24;
            c[1] = (72 * a * a + (24 * G - 24) * b * b - 24 * D * a * b + (216 - 12 * D) * a +
                    (24 * G - 24 - 36 * D) * b + 152 - 12 * D + 4 * G) /
                   24;
            c[0] = (8 * a * a * a + (12 * D + 8 * G - 8) * b * b * b + 36 * a * a +
                    (12 * G - 12 * D * a - 12) * b * b + 52 * a + (4 * G - 12 * D * a - 12 * D - 4) * b + 24) /
                   24;
            break;
        case Base::V3:
            c[3] = (44 - 8 * D + 4 * G) / 12;
            c[2] = ((72 - 6 * D) * a + (12 * G - 12 * D - 12) * b - 12 * D + 6 * G + 66) / 12;
            c[1] = (36 * a * a + (12 * G - 12) * b * b - 12 * D * a * b + (72 - 6 * D) * a +
                    (12 * G - 12 - 12 * D) * b + 46 - 4 * D + 2 * G) /
                   12;
            c[0] = (6 * a * a * a + (4 * D + 4 * G - 4) * b * b * b + 18 * a * a +
                    (6 * G - 6 * D * a - 6) * b * b + 24 * a + (2 * G - 6 * D * a - 4 * D - 2) * b + 12) /
                   12;
            break;
        case Base::V4:
            c[3] = (60 - 8 * D + 4 * G) / 12;
            c[2] = ((96 - 6 * D) * a + (12 * G - 12 * D - 12) * b - 12 * D + 6 * G + 90) / 12;
            c[1] = (48 * a * a + (12 * G - 12) * b * b - 12 * D * a * b + (96 - 6 * D) * a +
                    (12 * G - 12 - 12 * D) * b + 54 - 4 * D + 2 * G) /
                   12;
            c[0] = (8 * a * a * a + (4 * D + 4 * G - 4) * b * b * b + 24 * a * a +
                    (6 * G - 6 * D * a - 6) * b * b + 28 * a + (2 * G - 6 * D * a - 4 * D - 2) * b + 12) /
                   12;
            break;
    }
    return Poly(std::move(c));
}

inline Poly closed_form_chi(const FanoBlowupClass& cls, const Rat& a, const Rat& b) {
    return closed_form_chi(cls.base, cls.d, cls.g, a, b);
}

}  // namespace ufano

#endif
