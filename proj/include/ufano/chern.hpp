#ifndef UFANO_CHERN_HPP
#define UFANO_CHERN_HPP

#include "ufano/chow.hpp"

#include <optional>

namespace ufano {

/// Divisor D = a h - b e. The minus sign on e is the ambient convention.
struct DivisorClass {
    long a = 0;
    long b = 0;

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

    std::string str() const {
        std::string s = std::to_string(a) + "h";
        if (b != 0) s += (b > 0 ? "-" : "+") + std::to_string(b > 0 ? b : -b) + "e";
        return s;
    }
};

/// Degree-2 class known either in full A^2 coordinates or only as the pairing
/// functional on A^1 (values against h and against e).
struct A2Form {
    struct Full {
        Rat hh, he, ee;
    };
    struct Pairing {
        Rat on_h, on_e;
    };

    static A2Form zero() { return full(0, 0, 0); }
    static A2Form full(Rat hh, Rat he, Rat ee) {
        A2Form f;
        f.full_ = Full{std::move(hh), std::move(he), std::move(ee)};
        return f;
    }
    static A2Form pairing(Rat on_h, Rat on_e) {
        A2Form f;
        f.pair_ = Pairing{std::move(on_h), std::move(on_e)};
        return f;
    }

    bool has_full() const { return full_.has_value(); }
    const Full& full_coords() const {
        if (!full_) throw DomainError("A^2 class known only in pairing form");
        return *full_;
    }

    Rat on_h(const ChowContext& ctx) const {
        if (full_) return Rat(ctx.c_X) * full_->hh - Rat(ctx.d) * full_->ee;
        return pair_->on_h;
    }
    Rat on_e(const ChowContext& ctx) const {
        if (full_) return Rat(-ctx.d) * full_->he + Rat(ctx.e3()) * full_->ee;
        return pair_->on_e;
    }

    /// Pairing against u_h h + u_e e.
    Rat dot(const ChowContext& ctx, const Rat& uh, const Rat& ue) const {
        return on_h(ctx) * uh + on_e(ctx) * ue;
    }
    Poly dot(const ChowContext& ctx, const Poly& uh, const Poly& ue) const {
        return on_h(ctx) * uh + on_e(ctx) * ue;
    }

private:
    std::optional<Full> full_;
    std::optional<Pairing> pair_;
};

/// Chern data (rank, c1, c2, c3) of a bundle on the blow-up. c3 is a rational
/// multiple of the point class.
struct ChernData {
    int rank = 1;
    Rat c1h, c1e;  // c1 = c1h * h + c1e * e
    A2Form c2 = A2Form::zero();
    Rat c3;

    static ChernData line_bundle(const DivisorClass& D) {
        ChernData c;
        c.rank = 1;
        c.c1h = Rat(D.a);
        c.c1e = Rat(-D.b);
        return c;
    }
};

/// Triple product of degree-1 classes as a number.
inline Rat triple_product(const ChowContext& ctx, const Rat& ah, const Rat& ae, const Rat& bh, const Rat& be,
                          const Rat& ch, const Rat& ce) {
    const Rat d(ctx.d), e3(ctx.e3()), cX(ctx.c_X);
    // expand over the basis, using h^3=c_X, h^2 e=0, h e^2=-d, e^3=e3
    Rat hhh = ah * bh * ch;
    Rat hhe = ah * bh * ce + ah * be * ch + ae * bh * ch;
    Rat hee = ah * be * ce + ae * bh * ce + ae * be * ch;
    Rat eee = ae * be * ce;
    (void)hhe;
    return cX * hhh - d * hee + e3 * eee;
}

}  // namespace ufano

#endif
