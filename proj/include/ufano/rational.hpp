#ifndef UFANO_RATIONAL_HPP
#define UFANO_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace ufano {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RegistryError : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct IncompatibleClassError : Error {
    using Error::Error;
};

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

/// n/d with any signs (the two-argument cpp_rational constructor rejects
/// negative denominators).
inline Rat make_rat(const Int& n, const Int& d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    return Rat(n) / Rat(d);
}

inline bool is_integer(const Rat& r) { return den(r) == 1; }

/// Canonical "p/q" form, q > 0, reduced; "/1" kept so parsing is uniform.
inline std::string rat_to_string(const Rat& r) {
    return num(r).str() + "/" + den(r).str();
}

/// Short human form: "p" when the denominator is 1, else "p/q".
inline std::string rat_pretty(const Rat& r) {
    if (is_integer(r)) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        return make_rat(n, d);
    } catch (const DomainError&) {
        throw;
    } catch (const std::runtime_error&) {
        throw DomainError("malformed rational: " + s);
    }
}

/// Floor of sqrt for nonnegative integers (Newton iteration, exact).
inline Int isqrt(const Int& n) {
    if (n < 0) throw DomainError("isqrt of negative integer");
    if (n == 0) return 0;
    Int x = Int(1) << (unsigned)(boost::multiprecision::msb(n) / 2 + 1);
    for (;;) {
        Int y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    return x;
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int r = isqrt(n);
    if (r * r == n) {
        if (root) *root = r;
        return true;
    }
    return false;
}

/// Splits n = s^2 * k with k squarefree (trial division; inputs here are small).
inline void extract_square_part(Int n, Int& s, Int& k) {
    s = 1;
    k = 1;
    if (n == 0) { k = 0; return; }
    for (Int f = 2; f * f <= n; ++f) {
        int e = 0;
        while (n % f == 0) { n /= f; ++e; }
        for (int i = 0; i + 1 < e; i += 2) s *= f;
        if (e % 2 == 1) k *= f;
    }
    k *= n;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline Int rat_floor(const Rat& r) { return floor_div(num(r), den(r)); }
inline Int rat_ceil(const Rat& r) { return ceil_div(num(r), den(r)); }

}  // namespace ufano

#endif
