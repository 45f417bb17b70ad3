#include "slgen/ff.hpp"

#include <optional>
#include <algorithm>
#include <sstream>

#include "slgen/error.hpp"
#include "slgen/poly.hpp"

namespace slgen::ff {

namespace {

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 p) { return a * b % p; }  // p < 2^32

u64 inv_mod(u64 a, u64 p) {
    // p prime, a != 0
    u64 r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = mul_mod(r, b, p);
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    return r;
}

u64 checked_prime(const Natural& p) {
    if (!p.fits_u64() || p.to_u64() >= (u64{1} << 32) || !arith::is_prime(p))
        throw InvalidPrime(p.to_string() + " is not a supported prime (need prime p < 2^32)");
    return p.to_u64();
}

// Canonical candidate sequence t, t+1, ... ; in the prime field t = 0 so the
// scan starts at 1.
template <class Visit>
bool scan_candidates(const Field& f, Visit visit) {
    const u64 p = f->p();
    const Natural limit = std::min(f->size(), Natural(~u64{0}));
    const u64 total = limit.to_u64();
    const u64 start = f->is_prime_field() ? 1 : p;
    for (u64 i = 0; i + 1 < total; ++i) {
        const u64 code = start + i < total ? start + i : start + i - total + 1;
        if (visit(FieldElem::from_canonical(f, Natural(code)))) return true;
    }
    return false;
}

}  // namespace

FieldDesc::FieldDesc(std::uint64_t p, std::vector<std::uint64_t> defining_poly)
    : p_(p), poly_(std::move(defining_poly)), size_(arith::pow(Natural(p), static_cast<unsigned>(poly_.size() - 1))) {}

std::string FieldDesc::describe() const {
    std::ostringstream os;
    os << '(' << p_ << ',' << k() << ",[";
    for (std::size_t i = 0; i < poly_.size(); ++i) os << (i ? "," : "") << poly_[i];
    os << "])";
    return os.str();
}

bool same_field(const Field& a, const Field& b) { return a == b || (a && b && *a == *b); }

Field make_field(const Natural& p, unsigned k) {
    const u64 pp = checked_prime(p);
    if (k == 0) throw InvalidArgument("field degree must be >= 1");
    if (k == 1) return std::make_shared<const FieldDesc>(pp, std::vector<u64>{0, 1});

    const Field base = make_field(p, 1);
    // Odometer over (c0, ..., c_{k-1}) with c0 most significant; c0 = 0 is
    // divisible by t and skipped.
    std::vector<u64> c(k + 1, 0);
    c[k] = 1;
    c[0] = 1;
    for (;;) {
        std::vector<FieldElem> coeffs;
        coeffs.reserve(k + 1);
        for (u64 v : c) coeffs.push_back(FieldElem::from_int(base, static_cast<std::int64_t>(v)));
        if (poly::is_irreducible(poly::Poly(base, std::move(coeffs))))
            return std::make_shared<const FieldDesc>(pp, c);
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && ++c[i] == pp) c[i--] = 0;
        if (i < 0) throw Error("no irreducible polynomial found");  // unreachable
    }
}

Field field_from_poly(const Natural& p, std::vector<std::uint64_t> defining_poly) {
    const u64 pp = checked_prime(p);
    if (defining_poly.size() < 2 || defining_poly.back() != 1)
        throw InvalidArgument("defining polynomial must be monic of degree >= 1");
    for (u64 v : defining_poly)
        if (v >= pp) throw InvalidArgument("defining polynomial coefficient out of range");
    if (defining_poly.size() == 2) {
        if (defining_poly[0] != 0) throw InvalidArgument("prime field must use defining polynomial t");
        return std::make_shared<const FieldDesc>(pp, std::move(defining_poly));
    }
    const Field base = make_field(p, 1);
    std::vector<FieldElem> coeffs;
    for (u64 v : defining_poly) coeffs.push_back(FieldElem::from_int(base, static_cast<std::int64_t>(v)));
    if (!poly::is_irreducible(poly::Poly(base, std::move(coeffs))))
        throw InvalidArgument("defining polynomial is reducible");
    return std::make_shared<const FieldDesc>(pp, std::move(defining_poly));
}

// ---------------------------------------------------------------------------
// FieldElem

FieldElem::FieldElem(Field f, std::vector<std::uint64_t> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
    if (!field_) throw InvalidArgument("FieldElem without a field");
    if (c_.size() != field_->k()) throw InvalidArgument("FieldElem: wrong number of coefficients");
    for (u64 v : c_)
        if (v >= field_->p()) throw InvalidArgument("FieldElem: coefficient out of range");
}

FieldElem FieldElem::zero(const Field& f) { return FieldElem(f, std::vector<u64>(f->k(), 0)); }

FieldElem FieldElem::one(const Field& f) {
    std::vector<u64> c(f->k(), 0);
    c[0] = 1;
    return FieldElem(f, std::move(c));
}

FieldElem FieldElem::generator(const Field& f) {
    if (f->is_prime_field()) return zero(f);  // t = 0 in GF(p)[t]/(t)
    std::vector<u64> c(f->k(), 0);
    c[1] = 1;
    return FieldElem(f, std::move(c));
}

FieldElem FieldElem::from_int(const Field& f, std::int64_t v) {
    const auto p = static_cast<std::int64_t>(f->p());
    std::vector<u64> c(f->k(), 0);
    c[0] = static_cast<u64>(((v % p) + p) % p);
    return FieldElem(f, std::move(c));
}

FieldElem FieldElem::from_canonical(const Field& f, const Natural& code) {
    if (code >= f->size()) throw InvalidArgument("field element code out of range: " + code.to_string());
    std::vector<u64> c(f->k(), 0);
    if (code.fits_u64()) {
        u64 v = code.to_u64();
        for (auto& ci : c) {
            ci = v % f->p();
            v /= f->p();
        }
    } else {
        Natural v = code;
        const Natural p(f->p());
        for (auto& ci : c) {
            auto [q, r] = arith::divmod(v, p);
            ci = r.to_u64();
            v = std::move(q);
        }
    }
    return FieldElem(f, std::move(c));
}

bool FieldElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](u64 v) { return v == 0; });
}

bool FieldElem::is_one() const {
    return c_[0] == 1 && std::all_of(c_.begin() + 1, c_.end(), [](u64 v) { return v == 0; });
}

Natural FieldElem::canonical() const {
    Natural v(0);
    const Natural p(field_->p());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * p + Natural(*it);
    return v;
}

void FieldElem::check_same(const FieldElem& o) const {
    if (!same_field(field_, o.field_)) throw FieldMismatch("operands belong to different fields");
}

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    const u64 p = field_->p();
    for (auto& v : r.c_) v = v ? p - v : 0;
    return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
    check_same(o);
    const u64 p = field_->p();
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c_[i] += o.c_[i];
        if (c_[i] >= p) c_[i] -= p;
    }
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
    check_same(o);
    const u64 p = field_->p();
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + p - o.c_[i];
    return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
    check_same(o);
    const u64 p = field_->p();
    const std::size_t k = c_.size();
    if (k == 1) {
        c_[0] = mul_mod(c_[0], o.c_[0], p);
        return *this;
    }
    // Schoolbook product, then reduction by the monic defining polynomial.
    std::vector<u64> prod(2 * k - 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
        if (!c_[i]) continue;
        for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + c_[i] * o.c_[j]) % p;
    }
    const auto& g = field_->defining_poly();
    for (std::size_t d = 2 * k - 2; d >= k; --d) {
        const u64 lead = prod[d];
        if (!lead) continue;
        prod[d] = 0;
        for (std::size_t j = 0; j < k; ++j) {
            const u64 sub = mul_mod(lead, g[j], p);
            u64& slot = prod[d - k + j];
            slot = slot >= sub ? slot - sub : slot + p - sub;
        }
    }
    std::copy_n(prod.begin(), k, c_.begin());
    return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) { return *this *= o.inverse(); }

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (c_.size() == 1) return FieldElem(field_, {inv_mod(c_[0], field_->p())});
    return pow(field_->size() - Natural(2));
}

FieldElem FieldElem::pow(const Natural& e) const {
    FieldElem result = one(field_);
    const unsigned bits = e.bit_length();
    for (unsigned i = bits; i-- > 0;) {
        result *= result;
        if (bit_test(e.raw(), i)) result *= *this;
    }
    return result;
}

FieldElem FieldElem::pow(std::uint64_t e) const {
    FieldElem result = one(field_);
    FieldElem base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    a.check_same(b);
    return a.c_ == b.c_;
}

std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b) {
    a.check_same(b);
    for (std::size_t i = a.c_.size(); i-- > 0;) {
        if (a.c_[i] != b.c_[i]) return a.c_[i] <=> b.c_[i];
    }
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Embedding

namespace {

FieldElem eval_prime_poly(const std::vector<u64>& g, const FieldElem& x) {
    const Field& f = x.field();
    FieldElem acc = FieldElem::zero(f);
    for (std::size_t i = g.size(); i-- > 0;) acc = acc * x + FieldElem::from_int(f, static_cast<std::int64_t>(g[i]));
    return acc;
}

// Solves sum_j c_j * cols[j] = target over GF(p) coordinatewise; returns the
// c_j or nothing when inconsistent.
std::optional<std::vector<u64>> solve_prime(const std::vector<FieldElem>& cols, const FieldElem& target, u64 p) {
    const std::size_t rows = target.coeffs().size();
    const std::size_t m = cols.size();
    std::vector<std::vector<u64>> a(rows, std::vector<u64>(m + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t j = 0; j < m; ++j) a[r][j] = cols[j].coeffs()[r];
        a[r][m] = target.coeffs()[r];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[row]);
        const u64 inv = inv_mod(a[row][col], p);
        for (auto& v : a[row]) v = mul_mod(v, inv, p);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][col] == 0) continue;
            const u64 factor = a[r][col];
            for (std::size_t j = 0; j <= m; ++j) a[r][j] = (a[r][j] + p - mul_mod(factor, a[row][j], p)) % p;
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r)
        if (a[r][m] != 0) return std::nullopt;
    std::vector<u64> sol(m, 0);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) sol[pivot_col[i]] = a[i][m];
    return sol;
}

}  // namespace

Embedding embed(const Field& small, const Field& big) {
    if (small->p() != big->p() || big->k() % small->k() != 0)
        throw NoEmbedding("GF(" + small->size().to_string() + ") does not embed in GF(" + big->size().to_string() + ")");
    const unsigned m = small->k();
    if (m == 1) {
        return Embedding{small, big, FieldElem::zero(big), {FieldElem::one(big)}};
    }
    // A generator s of the unique subfield of order p^m inside big; its
    // powers enumerate that subfield, which contains every root.
    const Natural sub_order = small->size() - Natural(1);
    const Natural cofactor = (big->size() - Natural(1)) / sub_order;
    const Factorization sub_factors = arith::factor(sub_order);
    std::optional<FieldElem> s;
    scan_candidates(big, [&](const FieldElem& h) {
        FieldElem c = h.pow(cofactor);
        if (c.is_zero() || multiplicative_order(c, sub_factors) != sub_order) return false;
        s = std::move(c);
        return true;
    });
    std::optional<FieldElem> root;
    FieldElem x = FieldElem::one(big);
    for (Natural j(0); j < sub_order && !root; j += Natural(1), x *= *s) {
        if (eval_prime_poly(small->defining_poly(), x).is_zero()) root = x;
    }
    if (!root) throw Error("embedding: no root found");  // impossible for valid fields
    // The roots form one Frobenius orbit; take the canonical minimum.
    FieldElem best = *root;
    FieldElem conj = *root;
    for (unsigned i = 1; i < m; ++i) {
        conj = conj.frobenius();
        best = std::min(best, conj);
    }
    std::vector<FieldElem> basis{FieldElem::one(big)};
    for (unsigned i = 1; i < m; ++i) basis.push_back(basis.back() * best);
    return Embedding{small, big, best, std::move(basis)};
}

FieldElem apply(const Embedding& e, const FieldElem& x) {
    if (!same_field(x.field(), e.small)) throw FieldMismatch("apply: element not in the small field");
    FieldElem out = FieldElem::zero(e.big);
    for (std::size_t j = 0; j < e.basis_images.size(); ++j)
        out += FieldElem::from_int(e.big, static_cast<std::int64_t>(x.coeffs()[j])) * e.basis_images[j];
    return out;
}

FieldElem project(const Embedding& e, const FieldElem& x) {
    if (!same_field(x.field(), e.big)) throw FieldMismatch("project: element not in the big field");
    auto sol = solve_prime(e.basis_images, x, e.big->p());
    if (!sol) throw NotInSubfield("element " + x.to_string() + " is not in the embedded subfield");
    return FieldElem(e.small, std::move(*sol));
}

FieldElem element_of_order(const Field& f, const Natural& order, const Factorization& order_factors) {
    const Natural group = f->size() - Natural(1);
    if (order.is_zero() || !arith::divides(order, group))
        throw OrderDoesNotDivide(order.to_string() + " does not divide " + group.to_string());
    if (order_factors.value() != order) throw InvalidArgument("element_of_order: factorization does not match order");
    const Natural cofactor = group / order;
    std::optional<FieldElem> found;
    scan_candidates(f, [&](const FieldElem& g) {
        FieldElem w = g.pow(cofactor);
        for (const auto& pp : order_factors.factors)
            if (w.pow(order / pp.prime).is_one()) return false;
        found = std::move(w);
        return true;
    });
    if (!found) throw Error("element_of_order: candidate scan exhausted");  // cyclic group: unreachable
    return *found;
}

Natural multiplicative_order(const FieldElem& x, const Factorization& bound) {
    Natural n = bound.value();
    if (x.is_zero() || !x.pow(n).is_one())
        throw NotAnnihilated("element is not annihilated by exponent " + n.to_string());
    for (const auto& pp : bound.factors) {
        for (unsigned i = 0; i < pp.exponent; ++i) {
            const Natural candidate = n / pp.prime;
            if (!x.pow(candidate).is_one()) break;
            n = candidate;
        }
    }
    return n;
}

}  // namespace slgen::ff
