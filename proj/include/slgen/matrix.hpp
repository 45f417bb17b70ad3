#pragma once

// Dense square matrices over a finite field and the exact algorithms the
// generator checks need: determinant, characteristic polynomial, element
// order and evaluation of words in two generators.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "slgen/ff.hpp"
#include "slgen/poly.hpp"

namespace slgen::matrix {

using arith::Factorization;
using arith::Natural;
using ff::Field;
using ff::FieldElem;
using poly::Poly;

/// Column vector.
using Vec = std::vector<FieldElem>;

class Mat {
public:
    /// Empty 0x0 placeholder with no field.
    Mat() = default;
    /// Zero matrix.
    Mat(Field f, std::size_t n);
    /// Row-major entries, n*n of them.
    Mat(Field f, std::size_t n, std::vector<FieldElem> entries);

    static Mat identity(const Field& f, std::size_t n);
    /// Row-major integers mapped through Z -> GF(p).
    static Mat from_ints(const Field& f, std::size_t n, const std::vector<std::int64_t>& values);
    /// Row-major canonical element codes.
    static Mat from_codes(const Field& f, std::size_t n, const std::vector<Natural>& codes);

    const Field& field() const { return field_; }
    std::size_t n() const { return n_; }
    const std::vector<FieldElem>& entries() const { return e_; }
    const FieldElem& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, FieldElem v);

    Mat transpose() const;
    bool is_identity() const;
    Vec row(std::size_t i) const;
    Vec column(std::size_t j) const;

    friend Mat operator*(const Mat& a, const Mat& b);
    friend Vec operator*(const Mat& a, const Vec& v);
    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend Mat operator*(const FieldElem& s, const Mat& a);
    friend bool operator==(const Mat& a, const Mat& b);

    /// Row-major canonical integer codes.
    std::vector<Natural> codes() const;

private:
    void check_compatible(const Mat& o) const;

    Field field_;
    std::size_t n_ = 0;
    std::vector<FieldElem> e_;
};

Mat mat_mul(const Mat& a, const Mat& b);
Mat pow(const Mat& a, const Natural& e);
FieldElem determinant(const Mat& a);
Mat inverse(const Mat& a);  // throws Singular
/// det(tI - a), via reduction to upper Hessenberg form.
Poly char_poly(const Mat& a);
/// f(a), Horner scheme.
Mat eval_poly(const Poly& f, const Mat& a);
/// Companion matrix of a monic polynomial of positive degree.
Mat companion(const Poly& f);

/// Reduced row echelon form of the given rows (pivot = first nonzero entry).
std::vector<Vec> row_reduce(std::vector<Vec> rows);
/// Basis of {v : r . v = 0 for every row r}, one vector per free column,
/// each with a 1 in its free column.
std::vector<Vec> nullspace(const std::vector<Vec>& rows, std::size_t ncols);
std::vector<Vec> kernel(const Mat& a);
std::size_t rank(const Mat& a);

/// Exponent B with a^B = I derived from the irreducible-factor degrees of
/// the characteristic polynomial: p^ceil(log_p n) * lcm_d (q^d - 1).
Factorization order_bound(const Mat& a);
/// Exact multiplicative order; throws Singular.
Natural element_order(const Mat& a);

/// Letter of a word in the free product <x> * <y> with x^2 = y^3 = 1.
enum class Letter { X, Y, Y2 };

/// Normalized word: no two adjacent letters from the same generator.
class GenWord {
public:
    explicit GenWord(std::vector<Letter> letters);

    /// Parses e.g. "xy(xy^2)^2": letters x, y, y^2 (or y2), parentheses with
    /// an optional ^k exponent. Throws WordSyntaxError.
    static GenWord parse(std::string_view text);

    const std::vector<Letter>& letters() const { return letters_; }
    std::string to_string() const;
    friend bool operator==(const GenWord&, const GenWord&) = default;

private:
    std::vector<Letter> letters_;
};

/// Product of the letters left to right with X -> x, Y -> y, Y2 -> y^2.
Mat eval_word(const GenWord& w, const Mat& x, const Mat& y);

}  // namespace slgen::matrix
