#include "slgen/arith.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>

#include "slgen/error.hpp"

namespace slgen::arith {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::array<u64, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// Miller-Rabin with the first thirteen primes as bases is exact below this.
const BigInt& deterministic_bound() {
    static const BigInt bound("3317044064679887385961981");
    return bound;
}

const std::vector<u64>& small_primes() {
    static const std::vector<u64> primes = [] {
        constexpr u64 limit = 1 << 12;
        std::vector<bool> composite(limit + 1, false);
        std::vector<u64> out;
        for (u64 i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

u64 splitmix64(u64& state) {
    u64 z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Arithmetic kernels shared by the 64-bit and the arbitrary-precision paths.
u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
BigInt mul_mod(const BigInt& a, const BigInt& b, const BigInt& m) { return a * b % m; }

u64 pow_mod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return r;
}
BigInt pow_mod(const BigInt& b, const BigInt& e, const BigInt& m) {
    return boost::multiprecision::powm(b, e, m);
}

u64 add_mod(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<u128>(a) + b) % m); }
BigInt add_mod(const BigInt& a, const BigInt& b, const BigInt& m) { return (a + b) % m; }

u64 gcd_of(u64 a, u64 b) { return std::gcd(a, b); }
BigInt gcd_of(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

u64 abs_diff(u64 a, u64 b) { return a > b ? a - b : b - a; }
BigInt abs_diff(const BigInt& a, const BigInt& b) { return a > b ? BigInt(a - b) : BigInt(b - a); }

template <class Int>
bool strong_probable_prime(const Int& n, const Int& base) {
    Int d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    Int x = pow_mod(Int(base % n), d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

template <class Int>
bool miller_rabin_fixed(const Int& n) {
    for (u64 w : kWitnesses) {
        if (n == w) return true;
        if (!strong_probable_prime(n, Int(w))) return false;
    }
    return true;
}

bool miller_rabin_random(const BigInt& n, u64 seed) {
    std::mt19937_64 rng(seed);
    const BigInt span = n - 3;
    for (int round = 0; round < 40; ++round) {
        BigInt r = 0;
        for (unsigned bits = 0; bits < msb(n) + 64; bits += 64) r = (r << 64) | BigInt(rng());
        if (!strong_probable_prime(n, BigInt(r % span + 2))) return false;
    }
    return true;
}

// One Brent cycle search for f(x) = x^2 + c; returns a divisor of n which may
// be trivial (1 or n) when the attempt fails.
template <class Int>
Int brent_attempt(const Int& n, const Int& c, const Int& y0) {
    constexpr unsigned kBatch = 128;
    Int y = y0, x, ys, g = 1, q = 1;
    std::uint64_t r = 1;
    auto step = [&](const Int& v) { return add_mod(mul_mod(v, v, n), c, n); };
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = step(y);
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            const std::uint64_t lim = std::min<std::uint64_t>(kBatch, r - k);
            for (std::uint64_t i = 0; i < lim; ++i) {
                y = step(y);
                q = mul_mod(q, abs_diff(x, y), n);
            }
            g = gcd_of(q, n);
            k += kBatch;
        }
        r <<= 1;
        if (r > (std::uint64_t{1} << 26)) break;
    }
    if (g == n || g == 0) {
        // Backtrack one step at a time from the last saved point.
        do {
            ys = step(ys);
            g = gcd_of(abs_diff(x, ys), n);
        } while (g == 1);
    }
    return g;
}

template <class Int>
Int find_divisor(const Int& n, u64 seed) {
    if ((n & 1) == 0) return Int(2);
    u64 state = seed ^ 0x5eed5eed5eed5eedULL;
    for (;;) {
        const Int c = Int(splitmix64(state)) % (n - 1) + 1;
        const Int y0 = Int(splitmix64(state)) % n;
        Int d = brent_attempt(n, c, y0);
        if (d != 1 && d != n) return d;
    }
}

void factor_into(const Natural& n, u64 seed, std::map<Natural, unsigned>& out) {
    if (n.is_one()) return;
    if (is_prime(n, seed)) {
        ++out[n];
        return;
    }
    Natural d;
    if (n.fits_u64()) {
        d = Natural(find_divisor<u64>(n.to_u64(), seed));
    } else {
        d = Natural(find_divisor<BigInt>(n.raw(), seed));
    }
    factor_into(d, seed, out);
    factor_into(n / d, seed, out);
}

}  // namespace

Natural::Natural(BigInt v) : v_(std::move(v)) {
    if (v_ < 0) throw InvalidArgument("Natural: negative value");
}

Natural Natural::from_string(std::string_view s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw InvalidArgument("not a decimal natural: '" + std::string(s) + "'");
    return Natural(BigInt(std::string(s)));
}

bool Natural::fits_u64() const { return v_ <= std::numeric_limits<u64>::max(); }

std::uint64_t Natural::to_u64() const {
    if (!fits_u64()) throw InvalidArgument("value exceeds 64 bits: " + to_string());
    return static_cast<u64>(v_);
}

bool Natural::is_even() const { return (v_ & 1) == 0; }

unsigned Natural::bit_length() const { return v_.is_zero() ? 0 : static_cast<unsigned>(msb(v_)) + 1; }

Natural& Natural::operator+=(const Natural& o) {
    v_ += o.v_;
    return *this;
}

Natural& Natural::operator-=(const Natural& o) {
    if (o.v_ > v_) throw InvalidArgument("Natural subtraction underflow");
    v_ -= o.v_;
    return *this;
}

Natural& Natural::operator*=(const Natural& o) {
    v_ *= o.v_;
    return *this;
}

Natural& Natural::operator/=(const Natural& o) {
    if (o.v_.is_zero()) throw InvalidArgument("division by zero");
    v_ /= o.v_;
    return *this;
}

Natural& Natural::operator%=(const Natural& o) {
    if (o.v_.is_zero()) throw InvalidArgument("division by zero");
    v_ %= o.v_;
    return *this;
}

std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    const int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

Natural pow(const Natural& base, unsigned exponent) { return Natural(BigInt(boost::multiprecision::pow(base.raw(), exponent))); }

Natural powmod(const Natural& base, const Natural& exponent, const Natural& modulus) {
    if (modulus.is_zero()) throw InvalidArgument("powmod: zero modulus");
    if (modulus.is_one()) return Natural(0);
    return Natural(BigInt(boost::multiprecision::powm(base.raw(), exponent.raw(), modulus.raw())));
}

Natural gcd(const Natural& a, const Natural& b) { return Natural(BigInt(boost::multiprecision::gcd(a.raw(), b.raw()))); }

Natural lcm(const Natural& a, const Natural& b) {
    if (a.is_zero() || b.is_zero()) return Natural(0);
    return a / gcd(a, b) * b;
}

bool divides(const Natural& d, const Natural& n) {
    if (d.is_zero()) return n.is_zero();
    return (n % d).is_zero();
}

DivMod divmod(const Natural& a, const Natural& b) {
    if (b.is_zero()) throw InvalidArgument("division by zero");
    BigInt q, r;
    boost::multiprecision::divide_qr(a.raw(), b.raw(), q, r);
    return {Natural(std::move(q)), Natural(std::move(r))};
}

Natural Factorization::value() const {
    Natural v(1);
    for (const auto& pp : factors) v *= pow(pp.prime, pp.exponent);
    return v;
}

namespace {
template <class Combine>
Factorization merge(const Factorization& a, const Factorization& b, Combine combine) {
    std::map<Natural, unsigned> m;
    for (const auto& pp : a.factors) m[pp.prime] = pp.exponent;
    for (const auto& pp : b.factors) {
        auto [it, inserted] = m.try_emplace(pp.prime, pp.exponent);
        if (!inserted) it->second = combine(it->second, pp.exponent);
    }
    Factorization out;
    for (auto& [p, e] : m) out.factors.push_back({p, e});
    return out;
}
}  // namespace

Factorization lcm(const Factorization& a, const Factorization& b) {
    return merge(a, b, [](unsigned x, unsigned y) { return std::max(x, y); });
}

Factorization multiply(const Factorization& a, const Factorization& b) {
    return merge(a, b, [](unsigned x, unsigned y) { return x + y; });
}

bool is_prime(const Natural& n, std::uint64_t seed) {
    if (n < Natural(2)) return false;
    for (u64 p : small_primes()) {
        if (n == Natural(p)) return true;
        if (divides(Natural(p), n)) return false;
        if (p > 50) break;
    }
    if (n.fits_u64()) return miller_rabin_fixed<u64>(n.to_u64());
    if (n.raw() < deterministic_bound()) return miller_rabin_fixed<BigInt>(n.raw());
    return miller_rabin_fixed<BigInt>(n.raw()) && miller_rabin_random(n.raw(), seed);
}

Factorization factor(const Natural& n, std::uint64_t seed) {
    if (n.is_zero()) throw InvalidArgument("factor: n must be >= 1");
    std::map<Natural, unsigned> found;
    Natural rest = n;
    for (u64 p : small_primes()) {
        const Natural np(p);
        if (np * np > rest) break;
        while (divides(np, rest)) {
            rest /= np;
            ++found[np];
        }
    }
    factor_into(rest, seed, found);
    Factorization out;
    for (auto& [p, e] : found) out.factors.push_back({p, e});
    return out;
}

std::vector<Natural> zsigmondy_primes(const Natural& a, unsigned k) {
    if (a < Natural(2) || k == 0) throw InvalidArgument("zsigmondy_primes: need a >= 2 and k >= 1");
    const Factorization f = factor(pow(a, k) - Natural(1));
    std::vector<Natural> out;
    for (const auto& pp : f.factors) {
        const Natural& r = pp.prime;
        const Natural base = a % r;
        Natural x(1);
        bool primitive = true;
        for (unsigned i = 1; i < k && primitive; ++i) {
            x = x * base % r;
            if (x.is_one()) primitive = false;
        }
        if (primitive) out.push_back(r);
    }
    return out;
}

PrimePowerParts prime_power_decompose(const Natural& q) {
    if (q < Natural(2)) throw NotPrimePower(q.to_string() + " is not a prime power");
    const Factorization f = factor(q);
    if (f.factors.size() != 1) throw NotPrimePower(q.to_string() + " is not a prime power");
    return {f.factors[0].prime, f.factors[0].exponent};
}

}  // namespace slgen::arith
