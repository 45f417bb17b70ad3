#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "slgen/error.hpp"
#include "slgen/ff.hpp"

using namespace slgen;
using arith::Natural;
using ff::FieldElem;

namespace {

using IPoly = std::vector<std::uint64_t>;  // little-endian, over GF(p)

IPoly ipoly_mod(IPoly a, const IPoly& m, std::uint64_t p) {
    // m monic
    while (a.size() >= m.size()) {
        const std::uint64_t c = a.back();
        const std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

// Irreducible iff no monic polynomial of degree 1..k/2 divides it.
bool brute_irreducible(const IPoly& f, std::uint64_t p) {
    const unsigned k = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; 2 * d <= k; ++d) {
        const std::uint64_t count = oracle::ipow(p, d);
        for (std::uint64_t code = 0; code < count; ++code) {
            IPoly g(d + 1, 0);
            std::uint64_t c = code;
            for (unsigned i = 0; i < d; ++i) {
                g[i] = c % p;
                c /= p;
            }
            g[d] = 1;
            if (ipoly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

// Same order as the library: (c0, ..., c_{k-1}) lexicographic with c0 first.
IPoly brute_smallest_irreducible(std::uint64_t p, unsigned k) {
    if (k == 1) return {0, 1};
    std::vector<std::uint64_t> c(k, 0);
    while (true) {
        // advance c as an odometer whose most significant digit is c0
        IPoly f(c.begin(), c.end());
        f.push_back(1);
        if (brute_irreducible(f, p)) return f;
        for (int i = static_cast<int>(k) - 1; i >= 0; --i) {
            if (++c[i] < p) break;
            c[i] = 0;
        }
    }
}

FieldElem random_elem(const ff::Field& f, std::mt19937_64& rng) {
    const Natural size = f->size();
    if (size.fits_u64()) return FieldElem::from_canonical(f, Natural(rng() % size.to_u64()));
    std::vector<std::uint64_t> c(f->k());
    for (auto& x : c) x = rng() % f->p();
    return FieldElem(f, c);
}

}  // namespace

TEST_CASE("defining polynomials are the lexicographically smallest irreducibles") {
    const std::vector<std::pair<std::uint64_t, unsigned>> cases = {
        {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 8}, {3, 1}, {3, 2}, {3, 3},
        {3, 4}, {3, 5}, {5, 2}, {5, 3}, {7, 2}, {7, 3}, {11, 2}, {13, 2}};
    for (auto [p, k] : cases) {
        INFO("p = " << p << ", k = " << k);
        CHECK(ff::make_field(Natural(p), k)->defining_poly() == brute_smallest_irreducible(p, k));
    }
    CHECK(ff::make_field(Natural(2), 4)->defining_poly() == std::vector<std::uint64_t>{1, 0, 0, 1, 1});
    CHECK(ff::make_field(Natural(3), 2)->defining_poly() == std::vector<std::uint64_t>{1, 0, 1});
}

TEST_CASE("field descriptors") {
    const auto f = ff::make_field(Natural(3), 2);
    CHECK(f->size() == Natural(9));
    CHECK(f->describe() == "(3,2,[1,0,1])");
    CHECK(ff::make_field(Natural(7), 1)->is_prime_field());
    CHECK(ff::same_field(f, ff::make_field(Natural(3), 2)));
    CHECK_THROWS_AS(ff::make_field(Natural(4), 1), InvalidPrime);
    CHECK_THROWS_AS(ff::make_field(Natural(1), 1), InvalidPrime);
    CHECK_THROWS_AS(ff::field_from_poly(Natural(2), {1, 0, 1}), InvalidArgument);  // t^2 + 1 = (t + 1)^2
}

TEST_CASE("canonical codes round-trip") {
    const auto f = ff::make_field(Natural(3), 3);
    for (std::uint64_t c = 0; c < 27; ++c) CHECK(FieldElem::from_canonical(f, Natural(c)).canonical() == Natural(c));
    CHECK(FieldElem::from_int(f, -1).canonical() == Natural(2));
    CHECK(FieldElem::generator(f).canonical() == Natural(3));
    CHECK(FieldElem::generator(ff::make_field(Natural(5), 1)).is_zero());
}

TEST_CASE("field axioms on 1000 random samples per field") {
    std::mt19937_64 rng(99);
    const std::vector<std::pair<std::uint64_t, unsigned>> fields = {
        {2, 1}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {13, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4},
        {2, 8}, {3, 8}, {2, 9}, {3, 9}, {2, 32}, {5, 11}, {7, 11}, {2, 36}};
    for (auto [p, k] : fields) {
        const auto f = ff::make_field(Natural(p), k);
        const FieldElem zero = FieldElem::zero(f), one = FieldElem::one(f);
        std::size_t failures = 0;
        for (int i = 0; i < 1000; ++i) {
            const FieldElem a = random_elem(f, rng), b = random_elem(f, rng), c = random_elem(f, rng);
            bool ok = (a + b) + c == a + (b + c) && a * b == b * a && a + b == b + a && (a * b) * c == a * (b * c) &&
                      a * (b + c) == a * b + a * c && a + zero == a && a * one == a && a - a == zero &&
                      a + (-a) == zero;
            if (!b.is_zero()) ok = ok && (a / b) * b == a && b * b.inverse() == one;
            if (!ok) ++failures;
        }
        INFO("field " << f->describe());
        CHECK(failures == 0);
    }
}

TEST_CASE("Frobenius is an automorphism of order k") {
    std::mt19937_64 rng(5);
    for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 4}, {3, 2}, {2, 9}, {3, 9}, {5, 4}, {2, 36}}) {
        const auto f = ff::make_field(Natural(p), k);
        std::size_t failures = 0;
        for (int i = 0; i < 1000; ++i) {
            const FieldElem a = random_elem(f, rng), b = random_elem(f, rng);
            FieldElem iter = a;
            for (unsigned j = 0; j < k; ++j) iter = iter.frobenius();
            const bool ok = (a + b).frobenius() == a.frobenius() + b.frobenius() &&
                            (a * b).frobenius() == a.frobenius() * b.frobenius() && iter == a &&
                            a.pow(f->size()) == a;
            if (!ok) ++failures;
        }
        INFO("field " << f->describe());
        CHECK(failures == 0);
    }
}

TEST_CASE("arithmetic errors") {
    const auto f4 = ff::make_field(Natural(2), 2);
    const auto f8 = ff::make_field(Natural(2), 3);
    CHECK_THROWS_AS(FieldElem::one(f4) + FieldElem::one(f8), FieldMismatch);
    CHECK_THROWS_AS(FieldElem::zero(f4).inverse(), DivisionByZero);
    CHECK_THROWS_AS(FieldElem::one(f4) / FieldElem::zero(f4), DivisionByZero);
    CHECK_THROWS_AS(FieldElem(f4, {1, 2}), InvalidArgument);
}

TEST_CASE("embedding GF(4) into GF(16)") {
    const auto f4 = ff::make_field(Natural(2), 2);
    const auto f16 = ff::make_field(Natural(2), 4);
    const auto e = ff::embed(f4, f16);
    // Roots of t^2 + t + 1 in GF(2)[t]/(t^4 + t^3 + 1) are t^3 + t (10) and t^3 + t + 1 (11).
    CHECK(e.image_of_generator.canonical() == Natural(10));
    for (std::uint64_t c = 0; c < 4; ++c) {
        const auto x = FieldElem::from_canonical(f4, Natural(c));
        CHECK(ff::project(e, ff::apply(e, x)) == x);
    }
    CHECK_THROWS_AS(ff::project(e, FieldElem::generator(f16)), NotInSubfield);
    CHECK_THROWS_AS(ff::embed(ff::make_field(Natural(2), 3), f16), NoEmbedding);
    CHECK_THROWS_AS(ff::embed(f4, ff::make_field(Natural(3), 4)), NoEmbedding);
}

TEST_CASE("embeddings are ring homomorphisms and project inverts them") {
    std::mt19937_64 rng(11);
    const std::vector<std::tuple<std::uint64_t, unsigned, unsigned>> cases = {
        {2, 1, 8}, {3, 1, 9}, {2, 2, 36}, {2, 3, 24}, {3, 2, 18}, {2, 4, 32}, {5, 1, 11}};
    for (auto [p, m, K] : cases) {
        const auto small = ff::make_field(Natural(p), m);
        const auto big = ff::make_field(Natural(p), K);
        const auto e = ff::embed(small, big);
        std::size_t failures = 0;
        for (int i = 0; i < 200; ++i) {
            const FieldElem a = random_elem(small, rng), b = random_elem(small, rng);
            const bool ok = ff::apply(e, a + b) == ff::apply(e, a) + ff::apply(e, b) &&
                            ff::apply(e, a * b) == ff::apply(e, a) * ff::apply(e, b) &&
                            ff::project(e, ff::apply(e, a)) == a;
            if (!ok) ++failures;
        }
        INFO("GF(" << p << "^" << m << ") -> GF(" << p << "^" << K << ")");
        CHECK(failures == 0);
    }
}

TEST_CASE("element_of_order") {
    const auto f = ff::make_field(Natural(2), 11);
    const auto w = ff::element_of_order(f, Natural(2047), arith::factor(Natural(2047)));
    CHECK(ff::multiplicative_order(w, arith::factor(Natural(2047))) == Natural(2047));
    const auto f9 = ff::make_field(Natural(3), 8);
    const Natural Q(3280);
    const auto w9 = ff::element_of_order(f9, Q, arith::factor(Q));
    CHECK(w9.pow(Q).is_one());
    CHECK(ff::multiplicative_order(w9, arith::factor(Q)) == Q);
    CHECK_THROWS_AS(ff::element_of_order(ff::make_field(Natural(2), 3), Natural(5), arith::factor(Natural(5))),
                    OrderDoesNotDivide);
    // order 1 and prime fields
    CHECK(ff::element_of_order(ff::make_field(Natural(7), 1), Natural(3), arith::factor(Natural(3))).pow(3).is_one());
}

TEST_CASE("multiplicative_order requires a valid bound") {
    const auto f = ff::make_field(Natural(2), 4);
    const auto t = FieldElem::generator(f);
    CHECK(ff::multiplicative_order(t, arith::factor(Natural(15))) == Natural(15));
    CHECK_THROWS_AS(ff::multiplicative_order(t, arith::factor(Natural(5))), NotAnnihilated);
}
