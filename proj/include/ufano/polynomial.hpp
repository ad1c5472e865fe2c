#ifndef UFANO_POLYNOMIAL_HPP
#define UFANO_POLYNOMIAL_HPP

#include "ufano/rational.hpp"

#include <string>
#include <vector>

namespace ufano {

/// Dense univariate polynomial in the twist variable t over exact rationals.
class Poly {
public:
    Poly() = default;
    Poly(const Rat& c) : c_{c} { trim(); }                // NOLINT(google-explicit-constructor)
    Poly(long c) : Poly(Rat(c)) {}                        // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly t() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of t^k (zero beyond the stored degree).
    Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(out));
    }
    friend Poly operator*(const Rat& s, const Poly& a) { return Poly(s) * a; }
    friend Poly operator*(const Poly& a, const Rat& s) { return Poly(s) * a; }
    friend Poly operator/(const Poly& a, const Rat& s) {
        if (s == 0) throw DomainError("division of polynomial by zero");
        return Poly(Rat(1) / s) * a;
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// t -> -t
    Poly reflect() const {
        Poly r = *this;
        for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
        return r;
    }

    std::string str(const std::string& var = "t") const {
        if (c_.empty()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const Rat& v = c_[k];
            if (v == 0) continue;
            if (!out.empty()) out += v > 0 ? " + " : " - ";
            else if (v < 0) out += "-";
            Rat av = v > 0 ? v : Rat(-v);
            bool show_coeff = (k == 0) || av != 1;
            if (show_coeff) out += rat_pretty(av);
            if (k > 0) {
                if (show_coeff) out += "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

/// binom(t + shift, 3) expanded as a cubic in t.
inline Poly binom3_shift(long shift) {
    Poly t = Poly::t();
    Poly p = (t + Poly(shift)) * (t + Poly(shift - 1)) * (t + Poly(shift - 2));
    return p / Rat(6);
}

}  // namespace ufano

#endif
