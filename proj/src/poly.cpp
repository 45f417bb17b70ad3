#include "slgen/poly.hpp"

#include <sstream>

#include "slgen/error.hpp"

namespace slgen::poly {

using ff::same_field;

Poly::Poly(Field f) : field_(std::move(f)) {}

Poly::Poly(Field f, std::vector<FieldElem> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (!same_field(c.field(), field_)) throw FieldMismatch("polynomial coefficient from another field");
    trim();
}

Poly Poly::constant(const FieldElem& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const FieldElem& c, std::size_t deg) {
    std::vector<FieldElem> v(deg + 1, FieldElem::zero(c.field()));
    v[deg] = c;
    return Poly(c.field(), std::move(v));
}

Poly Poly::t(const Field& f) { return monomial(FieldElem::one(f), 1); }

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const FieldElem& Poly::leading() const {
    if (c_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
    return c_.back();
}

FieldElem Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : FieldElem::zero(field_); }

FieldElem Poly::eval(const FieldElem& x) const {
    if (!same_field(x.field(), field_)) throw FieldMismatch("evaluation point from another field");
    FieldElem acc = FieldElem::zero(field_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    std::vector<FieldElem> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.push_back(c_[i] * FieldElem::from_int(field_, static_cast<std::int64_t>(i % field_->p())));
    return Poly(field_, std::move(d));
}

Poly Poly::monic() const {
    if (c_.empty()) return *this;
    return *this * leading().inverse();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (!same_field(field_, o.field_)) throw FieldMismatch("polynomials over different fields");
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), FieldElem::zero(field_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
    if (!same_field(a.field_, b.field_)) throw FieldMismatch("polynomials over different fields");
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    std::vector<FieldElem> r(a.c_.size() + b.c_.size() - 1, FieldElem::zero(a.field_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(a.field_, std::move(r));
}

Poly operator*(const Poly& a, const FieldElem& s) {
    std::vector<FieldElem> r;
    r.reserve(a.c_.size());
    for (const auto& c : a.c_) r.push_back(c * s);
    return Poly(a.field_, std::move(r));
}

bool operator==(const Poly& a, const Poly& b) {
    if (!same_field(a.field_, b.field_)) return false;
    return a.c_ == b.c_;
}

std::string Poly::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i].to_string();
    os << ']';
    return os.str();
}

PolyDivMod divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (!same_field(a.field(), b.field())) throw FieldMismatch("polynomials over different fields");
    const Field& f = a.field();
    std::vector<FieldElem> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {Poly(f), a};
    const FieldElem inv_lead = b.leading().inverse();
    std::vector<FieldElem> quot(static_cast<std::size_t>(a.degree() - db + 1), FieldElem::zero(f));
    for (int i = a.degree(); i >= db; --i) {
        const FieldElem coef = rem[static_cast<std::size_t>(i)] * inv_lead;
        if (coef.is_zero()) continue;
        quot[static_cast<std::size_t>(i - db)] = coef;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= coef * b.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db), FieldElem::zero(f));
    return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a.monic();
    Poly y = b.monic();
    while (!y.is_zero()) {
        Poly r = (x % y).monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

Poly powmod(const Poly& base, const Natural& e, const Poly& m) {
    Poly result = Poly::constant(FieldElem::one(m.field())) % m;
    const Poly b = base % m;
    for (unsigned i = e.bit_length(); i-- > 0;) {
        result = (result * result) % m;
        if (bit_test(e.raw(), i)) result = (result * b) % m;
    }
    return result;
}

bool is_irreducible(const Poly& f) {
    if (!f.is_monic()) throw NotMonic("irreducibility test needs a monic polynomial");
    const int n = f.degree();
    if (n < 1) throw InvalidArgument("irreducibility test needs positive degree");
    if (n == 1) return true;
    const Natural& q = f.field()->size();
    const Poly t = Poly::t(f.field());
    // frob[i] = t^{q^i} mod f
    std::vector<Poly> frob{t % f};
    for (int i = 1; i <= n; ++i) frob.push_back(powmod(frob.back(), q, f));
    if (!(frob[static_cast<std::size_t>(n)] == t % f)) return false;
    for (const auto& pp : arith::factor(Natural(static_cast<std::uint64_t>(n))).factors) {
        const auto d = static_cast<std::size_t>(n / static_cast<int>(pp.prime.to_u64()));
        if (gcd(frob[d] - t, f).degree() != 0) return false;
    }
    return true;
}

std::vector<DegreeComponent> distinct_degree_split(const Poly& f) {
    if (f.degree() < 1) throw InvalidArgument("distinct-degree split needs positive degree");
    const Natural& q = f.field()->size();
    const Poly t = Poly::t(f.field());
    std::vector<DegreeComponent> out;
    Poly g = f.monic();
    Poly h = t % g;  // t^{q^d} mod g
    for (unsigned d = 1; g.degree() > 0; ++d) {
        if (g.degree() < static_cast<int>(2 * d)) {
            out.push_back({static_cast<unsigned>(g.degree()), g});
            break;
        }
        h = powmod(h, q, g);
        Poly c = gcd(g, h - t);
        while (c.degree() > 0) {
            out.push_back({d, c});
            g = divmod(g, c).quotient;
            c = gcd(g, c);
        }
        if (g.degree() > 0) h = h % g;
    }
    return out;
}

std::vector<Poly> equal_degree_factors(const Poly& f, unsigned d, std::mt19937_64& rng) {
    if (!f.is_monic()) throw NotMonic("equal-degree splitting needs a monic polynomial");
    if (d == 0 || f.degree() % static_cast<int>(d) != 0) throw InvalidArgument("degree is not a multiple of d");
    if (f.degree() == static_cast<int>(d)) return {f};
    const Field& fld = f.field();
    const Natural& q = fld->size();
    const bool odd = fld->p() != 2;
    // q^d = 2^bits for even characteristic
    const unsigned bits = fld->k() * d;
    const Natural half = odd ? (arith::pow(q, d) - Natural(1)) / Natural(2) : Natural(0);
    const Poly one = Poly::constant(FieldElem::one(fld));
    while (true) {
        std::vector<FieldElem> coeffs;
        for (int i = 0; i < f.degree(); ++i) {
            std::vector<std::uint64_t> c(fld->k());
            for (auto& x : c) x = rng() % fld->p();
            coeffs.emplace_back(fld, std::move(c));
        }
        const Poly a(fld, std::move(coeffs));
        if (a.degree() < 1) continue;
        Poly b(fld);
        if (odd) {
            b = powmod(a, half, f) - one;
        } else {
            Poly sq = a % f;
            b = sq;
            for (unsigned i = 1; i < bits; ++i) {
                sq = (sq * sq) % f;
                b += sq;
            }
        }
        const Poly g = gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            auto left = equal_degree_factors(g, d, rng);
            auto right = equal_degree_factors(divmod(f, g).quotient, d, rng);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
    }
}

Poly minimal_polynomial(const FieldElem& w, const ff::Embedding& e) {
    if (!same_field(w.field(), e.big)) throw FieldMismatch("minimal_polynomial: element not in the big field");
    const unsigned degree = e.big->k() / e.small->k();
    const Natural& q = e.small->size();
    std::vector<FieldElem> conj{w};
    for (unsigned i = 1; i < degree; ++i) {
        conj.push_back(conj.back().pow(q));
        if (conj.back() == w) throw DegenerateConjugates("conjugates of " + w.to_string() + " repeat after " + std::to_string(i) + " steps");
    }
    Poly prod = Poly::constant(FieldElem::one(e.big));
    for (const auto& c : conj) prod = prod * Poly(e.big, {-c, FieldElem::one(e.big)});
    std::vector<FieldElem> small;
    small.reserve(prod.coeffs().size());
    for (const auto& c : prod.coeffs()) small.push_back(ff::project(e, c));
    return Poly(e.small, std::move(small));
}

std::vector<FieldElem> extract_alphas(const Poly& f) {
    if (!f.is_monic()) throw NotMonic("extract_alphas needs a monic polynomial");
    const auto n = static_cast<std::size_t>(f.degree());
    std::vector<FieldElem> alphas;
    alphas.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        const FieldElem& c = f.coeffs()[n - i];
        alphas.push_back(i % 2 ? -c : c);
    }
    return alphas;
}

Poly poly_from_alphas(const Field& f, const std::vector<FieldElem>& alphas) {
    const std::size_t n = alphas.size();
    std::vector<FieldElem> c(n + 1, FieldElem::zero(f));
    c[n] = FieldElem::one(f);
    for (std::size_t i = 1; i <= n; ++i) c[n - i] = i % 2 ? -alphas[i - 1] : alphas[i - 1];
    return Poly(f, std::move(c));
}

namespace {
// Signed coefficient slots: index i holds the coefficient of t^{11-i}.
constexpr FieldElem LCoeffs::*kLSlots[10] = {&LCoeffs::a, &LCoeffs::b, &LCoeffs::c, &LCoeffs::d, &LCoeffs::e,
                                             &LCoeffs::f, &LCoeffs::g, &LCoeffs::h, &LCoeffs::k, &LCoeffs::m};
}  // namespace

Poly expand_l_poly(const LCoeffs& l) {
    const Field& f = l.a.field();
    std::vector<FieldElem> c(12, FieldElem::zero(f));
    c[11] = FieldElem::one(f);
    c[0] = FieldElem::from_int(f, -1);
    for (std::size_t i = 1; i <= 10; ++i) {
        const FieldElem& v = l.*kLSlots[i - 1];
        c[11 - i] = i % 2 ? -v : v;
    }
    return Poly(f, std::move(c));
}

LCoeffs read_l_coeffs(const Poly& l) {
    const Field& f = l.field();
    if (l.degree() != 11 || !l.is_monic() || !(l.coeff(0) == FieldElem::from_int(f, -1)))
        throw WrongShape("expected a monic degree-11 polynomial with constant term -1");
    const FieldElem z = FieldElem::zero(f);
    LCoeffs out{z, z, z, z, z, z, z, z, z, z};
    for (std::size_t i = 1; i <= 10; ++i) {
        const FieldElem& c = l.coeffs()[11 - i];
        out.*kLSlots[i - 1] = i % 2 ? -c : c;
    }
    return out;
}

}  // namespace slgen::poly
