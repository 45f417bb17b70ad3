#pragma once

// Independent reference computations on plain machine integers. Nothing
// here touches the library types, so agreement with the library is a real
// cross-check rather than a restatement.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline std::vector<bool> sieve(u64 limit) {
    std::vector<bool> prime(limit + 1, true);
    prime[0] = false;
    if (limit >= 1) prime[1] = false;
    for (u64 i = 2; i * i <= limit; ++i)
        if (prime[i])
            for (u64 j = i * i; j <= limit; j += i) prime[j] = false;
    return prime;
}

/// Prime -> exponent by trial division.
inline std::map<u64, unsigned> trial_factor(u64 n) {
    std::map<u64, unsigned> out;
    for (u64 d = 2; d * d <= n; ++d)
        while (n % d == 0) {
            ++out[d];
            n /= d;
        }
    if (n > 1) ++out[n];
    return out;
}

inline u64 ipow(u64 a, unsigned k) {
    u64 r = 1;
    while (k--) r *= a;
    return r;
}

/// Matrices over GF(p) as row-major integer vectors.
using IMat = std::vector<u64>;

inline std::vector<u64> apply(const IMat& m, const std::vector<u64>& v, u64 p) {
    const std::size_t n = v.size();
    std::vector<u64> out(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i] = (out[i] + m[i * n + j] * v[j]) % p;
    return out;
}

/// Rank over GF(p) of the given rows.
inline std::size_t rank(std::vector<std::vector<u64>> rows, u64 p) {
    auto inv = [p](u64 a) {
        for (u64 b = 1; b < p; ++b)
            if (a * b % p == 1) return b;
        return u64{0};
    };
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        const u64 s = inv(rows[r][c]);
        for (auto& e : rows[r]) e = e * s % p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const u64 f = rows[i][c];
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] = (rows[i][j] + (p - f) * rows[r][j]) % p;
        }
        ++r;
    }
    return r;
}

/// Exhaustive search for a proper nonzero invariant subspace of GF(p)^n
/// under the given matrices: every submodule is generated by the closure of
/// some set of vectors, and a minimal nonzero one is cyclic, so it suffices
/// to close every nonzero vector and look for a proper span.
inline bool has_proper_submodule(const std::vector<IMat>& gens, std::size_t n, u64 p) {
    const u64 total = ipow(p, static_cast<unsigned>(n));
    for (u64 code = 1; code < total; ++code) {
        std::vector<u64> v(n);
        u64 c = code;
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = c % p;
            c /= p;
        }
        std::vector<std::vector<u64>> span{v};
        std::size_t dim = 1;
        for (std::size_t i = 0; i < span.size() && dim < n; ++i)
            for (const auto& g : gens) {
                auto w = apply(g, span[i], p);
                span.push_back(w);
                const std::size_t r = rank(span, p);
                if (r == dim) span.pop_back();
                else dim = r;
            }
        if (dim < n) return true;
    }
    return false;
}

}  // namespace oracle
