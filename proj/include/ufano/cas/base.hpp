#ifndef UFANO_CAS_BASE_HPP
#define UFANO_CAS_BASE_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ufano::cas {

struct CasError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : CasError {
    using CasError::CasError;
};
struct RingMismatchError : CasError {
    using CasError::CasError;
};
struct ResourceError : CasError {
    using CasError::CasError;
};

inline bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

/// The coefficient field F_p. p is capped so products fit in int64.
struct PrimeField {
    int64_t p;

    explicit PrimeField(int64_t prime) : p(prime) {
        if (prime < 2 || prime > INT32_MAX) throw CasError("field characteristic out of range: " + std::to_string(prime));
        if (!is_prime(prime)) throw CasError("characteristic is not prime: " + std::to_string(prime));
    }

    int64_t reduce(int64_t v) const {
        v %= p;
        return v < 0 ? v + p : v;
    }
    int64_t add(int64_t a, int64_t b) const { return (a + b) % p; }
    int64_t sub(int64_t a, int64_t b) const { return reduce(a - b); }
    int64_t mul(int64_t a, int64_t b) const { return (a * b) % p; }
    int64_t neg(int64_t a) const { return a == 0 ? 0 : p - a; }
    int64_t inv(int64_t a) const {
        if (a == 0) throw CasError("division by zero in F_p");
        // extended Euclid
        int64_t t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            int64_t q = r / nr;
            t -= q * nt;
            std::swap(t, nt);
            r -= q * nr;
            std::swap(r, nr);
        }
        return reduce(t);
    }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;
};

constexpr int kNumVars = 4;
inline constexpr std::array<const char*, kNumVars> kVarNames = {"x", "y", "z", "w"};

enum class MonomialOrder { Grevlex, Lex };

inline const char* order_name(MonomialOrder o) { return o == MonomialOrder::Grevlex ? "grevlex" : "lex"; }

}  // namespace ufano::cas

#endif
