#pragma once

// Dense univariate polynomials over a finite field.

#include <random>
#include <string>
#include <vector>

#include "slgen/ff.hpp"

namespace slgen::poly {

using ff::Field;
using ff::FieldElem;
using arith::Natural;

/// Little-endian coefficients; the leading coefficient is nonzero unless the
/// polynomial is zero (empty coefficient vector).
class Poly {
public:
    explicit Poly(Field f);
    Poly(Field f, std::vector<FieldElem> coeffs);

    static Poly constant(const FieldElem& c);
    /// c * t^deg
    static Poly monomial(const FieldElem& c, std::size_t deg);
    /// The polynomial t.
    static Poly t(const Field& f);

    const Field& field() const { return field_; }
    const std::vector<FieldElem>& coeffs() const { return c_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    const FieldElem& leading() const;
    /// Coefficient of t^i (zero beyond the degree).
    FieldElem coeff(std::size_t i) const;

    FieldElem eval(const FieldElem& x) const;
    Poly derivative() const;
    Poly monic() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const FieldElem& s);
    friend bool operator==(const Poly& a, const Poly& b);

    /// "[c0,c1,...]" with coefficients as canonical integers.
    std::string to_string() const;

private:
    void trim();

    Field field_;
    std::vector<FieldElem> c_;
};

struct PolyDivMod {
    Poly quotient;
    Poly remainder;
};
PolyDivMod divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);
/// base^e mod m
Poly powmod(const Poly& base, const Natural& e, const Poly& m);

/// Rabin's test. Throws NotMonic for non-monic input.
bool is_irreducible(const Poly& f);

/// One step of distinct-degree splitting: `factor` is a product of distinct
/// monic irreducibles, all of degree `degree`. A degree appears several times
/// when f has repeated factors of that degree.
struct DegreeComponent {
    unsigned degree;
    Poly factor;
};
/// Splits any nonzero f of positive degree; products of the factors
/// reproduce monic(f).
std::vector<DegreeComponent> distinct_degree_split(const Poly& f);
/// Cantor-Zassenhaus: the irreducible factors of a squarefree monic f whose
/// irreducible factors all have degree d, in the order the splits find them.
std::vector<Poly> equal_degree_factors(const Poly& f, unsigned d, std::mt19937_64& rng);

/// Product of (t - w^{q^i}) over the Frobenius orbit of w, with q the size
/// of e.small; coefficients are projected into the small field. Throws
/// DegenerateConjugates when the orbit is shorter than [big : small].
Poly minimal_polynomial(const FieldElem& w, const ff::Embedding& e);

/// alpha_1..alpha_N with f = t^N + sum_i (-1)^i alpha_i t^{N-i}.
std::vector<FieldElem> extract_alphas(const Poly& f);
/// Inverse of extract_alphas.
Poly poly_from_alphas(const Field& f, const std::vector<FieldElem>& alphas);

/// The ten coefficients of
///   t^11 - a t^10 + b t^9 - c t^8 + d t^7 - e t^6 + f t^5 - g t^4 + h t^3 - k t^2 + m t - 1.
struct LCoeffs {
    FieldElem a, b, c, d, e, f, g, h, k, m;
};
Poly expand_l_poly(const LCoeffs& l);
/// Throws WrongShape unless l is monic of degree 11 with constant term -1.
LCoeffs read_l_coeffs(const Poly& l);

}  // namespace slgen::poly
