#pragma once

// Arbitrary-precision naturals, primality, factorization and primitive
// prime divisors. Everything here is a pure function of its arguments
// (and of the explicit seed where one is taken).

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace slgen::arith {

using BigInt = boost::multiprecision::cpp_int;

/// Non-negative integer of unbounded size.
class Natural {
public:
    Natural() = default;
    Natural(std::uint64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    explicit Natural(BigInt v);

    /// Parses a decimal string; throws InvalidArgument on anything else.
    static Natural from_string(std::string_view s);

    std::string to_string() const { return v_.str(); }
    bool fits_u64() const;
    std::uint64_t to_u64() const;  // throws InvalidArgument if too large
    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    bool is_even() const;
    unsigned bit_length() const;
    const BigInt& raw() const { return v_; }

    Natural& operator+=(const Natural& o);
    Natural& operator-=(const Natural& o);  // throws InvalidArgument on underflow
    Natural& operator*=(const Natural& o);
    Natural& operator/=(const Natural& o);  // throws InvalidArgument on division by zero
    Natural& operator%=(const Natural& o);

    friend Natural operator+(Natural a, const Natural& b) { return a += b; }
    friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
    friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
    friend Natural operator/(Natural a, const Natural& b) { return a /= b; }
    friend Natural operator%(Natural a, const Natural& b) { return a %= b; }

    friend bool operator==(const Natural& a, const Natural& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b);

private:
    BigInt v_;
};

Natural pow(const Natural& base, unsigned exponent);
Natural powmod(const Natural& base, const Natural& exponent, const Natural& modulus);
Natural gcd(const Natural& a, const Natural& b);
Natural lcm(const Natural& a, const Natural& b);
bool divides(const Natural& d, const Natural& n);

struct DivMod {
    Natural quotient;
    Natural remainder;
};
DivMod divmod(const Natural& a, const Natural& b);

struct PrimePower {
    Natural prime;
    unsigned exponent = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with primes strictly increasing.
struct Factorization {
    std::vector<PrimePower> factors;

    Natural value() const;
    bool empty() const { return factors.empty(); }
    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Least common multiple of two factorized values, returned factorized.
Factorization lcm(const Factorization& a, const Factorization& b);
Factorization multiply(const Factorization& a, const Factorization& b);

/// Miller-Rabin. Deterministic below 3.3e24 (first thirteen prime bases);
/// above that, 40 rounds with bases drawn from a generator seeded by `seed`.
bool is_prime(const Natural& n, std::uint64_t seed = 0);

/// Complete factorization by trial division followed by Brent's variant of
/// Pollard rho. The rho parameter schedule is derived from `seed`.
Factorization factor(const Natural& n, std::uint64_t seed = 0);

/// All primes r with r | a^k - 1 and r not dividing a^i - 1 for 0 < i < k,
/// ascending. Empty exactly in the Zsigmondy exceptional cases.
std::vector<Natural> zsigmondy_primes(const Natural& a, unsigned k);

struct PrimePowerParts {
    Natural p;
    unsigned m = 0;
};

/// Splits q = p^m; throws NotPrimePower otherwise.
PrimePowerParts prime_power_decompose(const Natural& q);

}  // namespace slgen::arith
