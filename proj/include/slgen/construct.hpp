#pragma once

// Explicit generator pairs (x, y) of orders 2 and 3 for SL_n(q), n = 9, 10, 11.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slgen/matrix.hpp"

namespace slgen::construct {

using arith::Factorization;
using arith::Natural;
using ff::Field;
using ff::FieldElem;
using matrix::GenWord;
using matrix::Mat;
using poly::Poly;

enum class Tag { Generic9, Generic10, Special, SL11 };
std::string tag_name(Tag t);
Tag tag_from_name(std::string_view s);  // throws InvalidArgument

/// A word in the generators together with the order recorded for it.
struct WitnessWord {
    std::string text;
    GenWord word;
    Natural claimed_order;
};

/// Data attached to the hard-coded small cases.
struct SpecialInfo {
    Natural claimed_z_order;
    std::vector<WitnessWord> witnesses;
    /// Two primes whose product divides |<x, y>| and no maximal subgroup order.
    Natural prime_a;
    Natural prime_b;
};

struct GenPair {
    unsigned n = 0;
    Natural q;
    Tag tag = Tag::Special;
    Field field;  // GF(q)
    Mat x, y, z;  // z = x * y
    /// q_value(n, q).
    Natural Q;
    Factorization Q_factors;

    // Generic and SL_11 constructions.
    std::optional<Field> big_field;
    std::optional<FieldElem> omega;
    /// f_n (generic) or l (SL_11): the minimal polynomial of omega over GF(q).
    std::optional<Poly> min_poly;
    std::vector<FieldElem> alphas;  // generic: alpha_1 .. alpha_{n-1}
    std::vector<FieldElem> deltas;  // SL_11: delta_1 .. delta_10
    std::optional<poly::LCoeffs> l_coeffs;
    std::optional<SpecialInfo> special;
};

/// q^{n-1} - 1 for n = 9, 10 (halved when q is 3 or 7) and
/// (q^11 - 1)/(q - 1) for n = 11. Throws UnsupportedN / NotPrimePower.
Natural q_value(unsigned n, const Natural& q);

bool is_special_case(unsigned n, const Natural& q);
/// The (n, q) pairs covered by hard-coded matrices.
std::vector<std::pair<unsigned, unsigned>> special_cases();

/// n = 9 with q not in {2, 4}, or n = 10 with q > 4; throws OutOfRange.
GenPair build_generic(unsigned n, const Natural& q);
/// Same matrices without the range check, for studying the excluded q.
GenPair build_generic_unchecked(unsigned n, const Natural& q);
/// Throws NotSpecialCase.
GenPair build_special(unsigned n, const Natural& q);
GenPair build_sl11(const Natural& q);
/// Dispatches on (n, q) to the construction that covers it.
GenPair build(unsigned n, const Natural& q);

/// The displayed generic matrices for given alpha_1..alpha_{n-1}.
Mat generic_x(unsigned n, const std::vector<FieldElem>& alphas);
Mat generic_y(unsigned n, const Field& f);
/// The displayed product x * y, kept only as a transcription cross-check.
Mat generic_z_display(unsigned n, const std::vector<FieldElem>& alphas);
/// (t - alpha_{n-1}^{-1}) * f_n(t).
Poly generic_expected_charpoly(const std::vector<FieldElem>& alphas);

Mat sl11_x(const Field& f);
Mat sl11_y(const std::vector<FieldElem>& deltas);
Mat sl11_z_display(const std::vector<FieldElem>& deltas);
/// delta_1..delta_10 making the characteristic polynomial of x*y equal l.
std::vector<FieldElem> deltas_from_l(const poly::LCoeffs& l);
/// Closed-form characteristic polynomial of sl11_x * sl11_y(deltas).
Poly symbolic_fz11(const std::vector<FieldElem>& deltas);

}  // namespace slgen::construct
