#include "slgen/meataxe.hpp"

#include <algorithm>

#include "slgen/error.hpp"

namespace slgen::meataxe {

using ff::Field;
using ff::FieldElem;
using poly::Poly;

namespace {

// Semi-echelon basis: every row is 1 at its pivot and zero at the pivots of
// all earlier rows, so reducing in insertion order is exact.
class EchelonSpan {
public:
    /// Reduces v; returns true (and records it) if v was outside the span.
    bool add(Vec v) {
        reduce(v);
        auto it = std::find_if(v.begin(), v.end(), [](const FieldElem& e) { return !e.is_zero(); });
        if (it == v.end()) return false;
        const FieldElem inv = it->inverse();
        for (auto& e : v) e *= inv;
        pivots_.push_back(static_cast<std::size_t>(it - v.begin()));
        rows_.push_back(std::move(v));
        return true;
    }
    bool contains(Vec v) const {
        reduce(v);
        return std::all_of(v.begin(), v.end(), [](const FieldElem& e) { return e.is_zero(); });
    }
    std::size_t dimension() const { return rows_.size(); }

private:
    void reduce(Vec& v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const FieldElem c = v[pivots_[i]];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (!rows_[i][j].is_zero()) v[j] -= c * rows_[i][j];
        }
    }

    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const FieldElem& e) { return e.is_zero(); });
}

std::vector<Mat> transposes(const std::vector<Mat>& gens) {
    std::vector<Mat> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(g.transpose());
    return out;
}

// All r in F with r^k = 1 for k = 2, 3, ascending in canonical order.
std::vector<FieldElem> roots_of_unity(const Field& f, unsigned k) {
    std::vector<FieldElem> out{FieldElem::one(f)};
    const arith::Natural group = f->size() - arith::Natural(1);
    if (arith::divides(arith::Natural(k), group)) {
        const FieldElem w = ff::element_of_order(f, arith::Natural(k), arith::factor(arith::Natural(k)));
        for (FieldElem r = w; !r.is_one(); r *= w) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Vec> common_eigenvector(const Mat& x, const Mat& y, const FieldElem& nu, const FieldElem& lambda) {
    const Field& f = x.field();
    const std::size_t n = x.n();
    const Mat id = Mat::identity(f, n);
    const Mat ym = y - lambda * id;
    const Mat xm = x - nu * id;
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(ym.row(i));
    for (std::size_t i = 0; i < n; ++i) rows.push_back(xm.row(i));
    auto ker = matrix::nullspace(rows, n);
    if (ker.empty()) return std::nullopt;
    return ker.front();
}

FieldElem random_elem(const Field& f, std::mt19937_64& rng, bool nonzero) {
    const arith::Natural size = std::min(f->size(), arith::Natural(std::uint64_t{1} << 62));
    const std::uint64_t s = size.to_u64();
    const std::uint64_t code = nonzero ? 1 + rng() % (s - 1) : rng() % s;
    return FieldElem::from_canonical(f, arith::Natural(code));
}

// Random element of the enveloping algebra: scalar plus one or two random
// words of length 1..6 with random nonzero coefficients.
Mat random_algebra_element(const std::vector<Mat>& gens, std::mt19937_64& rng) {
    const Field& f = gens.front().field();
    const std::size_t n = gens.front().n();
    Mat acc = random_elem(f, rng, false) * Mat::identity(f, n);
    const unsigned terms = 1 + static_cast<unsigned>(rng() % 2);
    for (unsigned t = 0; t < terms; ++t) {
        const unsigned len = 1 + static_cast<unsigned>(rng() % 6);
        Mat w = gens[rng() % gens.size()];
        for (unsigned i = 1; i < len; ++i) w = w * gens[rng() % gens.size()];
        acc = acc + random_elem(f, rng, true) * w;
    }
    return acc;
}

void check_gens(const std::vector<Mat>& gens) {
    if (gens.empty()) throw InvalidArgument("need at least one generator");
    for (const auto& g : gens) {
        if (g.n() != gens.front().n()) throw DimensionMismatch("generators have different dimensions");
        if (!ff::same_field(g.field(), gens.front().field())) throw FieldMismatch("generators over different fields");
    }
}

}  // namespace

std::string to_string(VerdictKind k) { return k == VerdictKind::Irreducible ? "Irreducible" : "ReducibleWitness"; }
std::string to_string(Side s) { return s == Side::Natural ? "natural" : "dual"; }

SpinResult spin(const Vec& seed, const std::vector<Mat>& gens) {
    check_gens(gens);
    if (seed.size() != gens.front().n()) throw DimensionMismatch("seed length differs from generator dimension");
    if (is_zero_vec(seed)) throw ZeroSeed("spin needs a nonzero seed");
    EchelonSpan span;
    SpinResult out;
    span.add(seed);
    out.basis.push_back(seed);
    for (std::size_t i = 0; i < out.basis.size(); ++i) {
        for (const auto& g : gens) {
            Vec w = g * out.basis[i];
            if (span.add(w)) out.basis.push_back(std::move(w));
        }
    }
    out.dimension = out.basis.size();
    return out;
}

bool spans_invariant_subspace(const std::vector<Vec>& basis, const std::vector<Mat>& gens) {
    EchelonSpan span;
    for (const auto& v : basis) span.add(v);
    for (const auto& g : gens)
        for (const auto& v : basis)
            if (!span.contains(g * v)) return false;
    return true;
}

bool verify_witness(const Witness& w, const std::vector<Mat>& gens) {
    check_gens(gens);
    const std::size_t n = gens.front().n();
    EchelonSpan span;
    for (const auto& v : w.basis) {
        if (v.size() != n) return false;
        span.add(v);
    }
    if (span.dimension() == 0 || span.dimension() >= n) return false;
    return spans_invariant_subspace(w.basis, w.side == Side::Natural ? gens : transposes(gens));
}

Verdict scan_lines(const Mat& x, const Mat& y) {
    check_gens({x, y});
    if (x.n() == 1) return Verdict{VerdictKind::Irreducible, std::nullopt, 0};
    const Field& f = x.field();
    const auto lambdas = roots_of_unity(f, 3);
    const auto nus = roots_of_unity(f, 2);
    const Mat xt = x.transpose();
    const Mat yt = y.transpose();
    for (Side side : {Side::Natural, Side::Dual}) {
        const Mat& xs = side == Side::Natural ? x : xt;
        const Mat& ys = side == Side::Natural ? y : yt;
        for (const auto& lambda : lambdas)
            for (const auto& nu : nus)
                if (auto v = common_eigenvector(xs, ys, nu, lambda))
                    return Verdict{VerdictKind::ReducibleWitness, Witness{{std::move(*v)}, side}, 0};
    }
    return Verdict{VerdictKind::Irreducible, std::nullopt, 0};
}

Verdict is_irreducible_module(const std::vector<Mat>& gens, std::mt19937_64& rng, unsigned budget) {
    check_gens(gens);
    const std::size_t n = gens.front().n();
    if (n == 1) return Verdict{VerdictKind::Irreducible, std::nullopt, 0};
    const std::vector<Mat> dual_gens = transposes(gens);

    for (unsigned attempt = 1; attempt <= budget; ++attempt) {
        const Mat a = random_algebra_element(gens, rng);
        // Distinct irreducible factors of the characteristic polynomial,
        // lowest degree first.
        std::vector<Poly> factors;
        for (auto& comp : poly::distinct_degree_split(matrix::char_poly(a)))
            for (auto& g : poly::equal_degree_factors(comp.factor, comp.degree, rng))
                if (std::find(factors.begin(), factors.end(), g) == factors.end()) factors.push_back(std::move(g));
        std::stable_sort(factors.begin(), factors.end(), [](const Poly& l, const Poly& r) { return l.degree() < r.degree(); });

        for (const auto& g : factors) {
            const Mat ga = matrix::eval_poly(g, a);
            const auto null = matrix::kernel(ga);
            if (null.empty()) continue;
            SpinResult s = spin(null.front(), gens);
            if (s.dimension < n) return Verdict{VerdictKind::ReducibleWitness, Witness{std::move(s.basis), Side::Natural}, attempt};
            if (null.size() != static_cast<std::size_t>(g.degree())) continue;
            // Norton: the nullspace is a simple F[a]-module, so it suffices
            // to spin one vector on each side.
            const auto dual_null = matrix::kernel(ga.transpose());
            SpinResult d = spin(dual_null.front(), dual_gens);
            if (d.dimension < n) return Verdict{VerdictKind::ReducibleWitness, Witness{std::move(d.basis), Side::Dual}, attempt};
            return Verdict{VerdictKind::Irreducible, std::nullopt, attempt};
        }
    }
    throw InconclusiveAfterRetries("MeatAxe found no Norton-good element in " + std::to_string(budget) + " attempts");
}

Verdict is_irreducible_module(const std::vector<Mat>& gens, std::uint64_t seed, unsigned budget) {
    std::mt19937_64 rng(seed);
    return is_irreducible_module(gens, rng, budget);
}

}  // namespace slgen::meataxe
