#pragma once

// Finite fields GF(p^k) realised as GF(p)[t]/(g) for an explicit monic
// irreducible g, and the embedding of a subfield into an extension.

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "slgen/arith.hpp"

namespace slgen::ff {

using arith::Factorization;
using arith::Natural;

/// Immutable description of GF(p^k). Shared between all of its elements.
class FieldDesc {
public:
    /// Use make_field / field_from_poly; the constructor does not validate.
    FieldDesc(std::uint64_t p, std::vector<std::uint64_t> defining_poly);

    std::uint64_t p() const { return p_; }
    unsigned k() const { return static_cast<unsigned>(poly_.size() - 1); }
    /// Monic, little-endian, length k + 1. For k = 1 this is `t`.
    const std::vector<std::uint64_t>& defining_poly() const { return poly_; }
    /// Number of elements, p^k.
    const Natural& size() const { return size_; }
    bool is_prime_field() const { return k() == 1; }

    std::string describe() const;  // "(p,k,[c0,c1,...])"

    friend bool operator==(const FieldDesc& a, const FieldDesc& b) {
        return a.p_ == b.p_ && a.poly_ == b.poly_;
    }

private:
    std::uint64_t p_;
    std::vector<std::uint64_t> poly_;
    Natural size_;
};

using Field = std::shared_ptr<const FieldDesc>;

bool same_field(const Field& a, const Field& b);

/// GF(p^k) with the lexicographically smallest monic irreducible defining
/// polynomial (coefficient tuples compared constant term first).
/// Throws InvalidPrime when p is not a prime below 2^32.
Field make_field(const Natural& p, unsigned k);

/// Rebuilds a field from a serialized defining polynomial, checking that it
/// is monic and irreducible.
Field field_from_poly(const Natural& p, std::vector<std::uint64_t> defining_poly);

/// Element of GF(p^k): k residues mod p, constant term first.
class FieldElem {
public:
    FieldElem(Field f, std::vector<std::uint64_t> coeffs);

    static FieldElem zero(const Field& f);
    static FieldElem one(const Field& f);
    /// The class of t; a field generator over GF(p).
    static FieldElem generator(const Field& f);
    /// Image of an integer under Z -> GF(p) -> GF(p^k).
    static FieldElem from_int(const Field& f, std::int64_t v);
    /// Inverse of canonical(); throws InvalidArgument when out of range.
    static FieldElem from_canonical(const Field& f, const Natural& code);

    const Field& field() const { return field_; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_one() const;
    /// sum coeffs[i] * p^i; the serialization and ordering key.
    Natural canonical() const;

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);
    FieldElem& operator/=(const FieldElem& o);
    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
    friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

    FieldElem inverse() const;  // throws DivisionByZero
    FieldElem pow(const Natural& e) const;
    FieldElem pow(std::uint64_t e) const;
    FieldElem frobenius() const { return pow(field_->p()); }

    /// Equality requires the same field; comparing across fields throws.
    friend bool operator==(const FieldElem& a, const FieldElem& b);
    /// Canonical ordering: by canonical() value.
    friend std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b);

    std::string to_string() const { return canonical().to_string(); }

private:
    void check_same(const FieldElem& o) const;

    Field field_;
    std::vector<std::uint64_t> c_;
};

/// GF(p^m) -> GF(p^K), m | K, determined by the image of the small field's
/// generator t.
struct Embedding {
    Field small;
    Field big;
    FieldElem image_of_generator;
    /// Images of 1, t, ..., t^{m-1}.
    std::vector<FieldElem> basis_images;
};

/// Deterministic embedding: maps t to the canonically smallest root of the
/// small field's defining polynomial inside the big field.
Embedding embed(const Field& small, const Field& big);
FieldElem apply(const Embedding& e, const FieldElem& x);
/// Preimage of x under e; throws NotInSubfield.
FieldElem project(const Embedding& e, const FieldElem& x);

/// First candidate g = t, t+1, ... (canonical order) for which
/// g^{(p^k-1)/Q} has order exactly Q.
FieldElem element_of_order(const Field& f, const Natural& order, const Factorization& order_factors);

/// Exact multiplicative order of x given that x^N = 1 for N = bound.value().
Natural multiplicative_order(const FieldElem& x, const Factorization& bound);

}  // namespace slgen::ff
