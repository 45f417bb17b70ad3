#include "slgen/certify.hpp"

#include <algorithm>
#include <set>

#include "slgen/construct.hpp"
#include "slgen/error.hpp"
#include "slgen/meataxe.hpp"

namespace slgen::certify {

using json = nlohmann::json;
using arith::Factorization;
using construct::GenPair;
using construct::Tag;
using ff::Field;
using ff::FieldElem;
using matrix::Mat;
using poly::Poly;

namespace {

constexpr const char* kVersion = "1";

Natural qm1(const Natural& q, unsigned i) { return arith::pow(q, i) - Natural(1); }
Natural qp1(const Natural& q, unsigned i) { return arith::pow(q, i) + Natural(1); }

Natural product(std::initializer_list<Natural> xs) {
    Natural out(1);
    for (const auto& x : xs) out *= x;
    return out;
}

// q^55 * prod (q^i - 1)^{mult_i} for i = 1..len(mults).
Natural parabolic_order(const Natural& q, const std::vector<unsigned>& mults) {
    Natural out = arith::pow(q, 55);
    for (unsigned i = 1; i <= mults.size(); ++i)
        for (unsigned j = 0; j < mults[i - 1]; ++j) out *= qm1(q, i);
    return out;
}

Natural sl11_order(const Natural& q0) {
    Natural out = arith::pow(q0, 55);
    for (unsigned i = 2; i <= 11; ++i) out *= qm1(q0, i);
    return out;
}

Natural su11_order(const Natural& q0) {
    Natural out = arith::pow(q0, 55);
    for (unsigned i = 2; i <= 11; ++i) out *= (i % 2 == 0 ? qm1(q0, i) : qp1(q0, i));
    return out;
}

bool residue_in(std::uint64_t v, std::uint64_t mod, std::initializer_list<std::uint64_t> set) {
    return std::find(set.begin(), set.end(), v % mod) != set.end();
}

std::string s(const Natural& v) { return v.to_string(); }

json elems_json(const std::vector<FieldElem>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(s(x.canonical()));
    return out;
}

json field_json(const Field& f) {
    json poly = json::array();
    for (auto c : f->defining_poly()) poly.push_back(std::to_string(c));
    return {{"p", std::to_string(f->p())}, {"k", std::to_string(f->k())}, {"poly", poly}};
}

json mat_json(const Mat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.n(); ++i) rows.push_back(elems_json(m.row(i)));
    return rows;
}

json factors_json(const Factorization& f) {
    json out = json::array();
    for (const auto& pp : f.factors) out.push_back({{"prime", s(pp.prime)}, {"exponent", std::to_string(pp.exponent)}});
    return out;
}

json witness_json(const meataxe::Witness& w) {
    json basis = json::array();
    for (const auto& v : w.basis) basis.push_back(elems_json(v));
    return {{"side", meataxe::to_string(w.side)}, {"basis", basis}};
}

json verdict_json(const meataxe::Verdict& v, bool with_attempts) {
    json out{{"verdict", meataxe::to_string(v.kind)}};
    if (with_attempts) out["attempts"] = std::to_string(v.attempts);
    if (v.witness) out["witness"] = witness_json(*v.witness);
    return out;
}

const char* kClassification = "maximal-subgroup classification of Bray, Holt and Roney-Dougal";

json assumptions_for(unsigned n, const Natural& q, Tag tag, const Natural& prime_a, const Natural& prime_b) {
    const std::string g = "SL_" + std::to_string(n) + "(" + s(q) + ")";
    const std::string pg = "PSL_" + std::to_string(n) + "(" + s(q) + ")";
    json out = json::array();
    switch (tag) {
    case Tag::Generic9:
    case Tag::Generic10:
        out.push_back("Every maximal subgroup of " + g +
                      " stabilizes a line or a hyperplane of the natural module or has no element of order Q (" +
                      kClassification + ")");
        out.push_back("<x, y> contains z of order Q and stabilizes no line or hyperplane, hence equals " + g +
                      "; the images of x and y generate " + pg);
        break;
    case Tag::Special:
        out.push_back("No maximal subgroup of " + g + " has order divisible by " + s(prime_a) + "*" + s(prime_b) + " (" +
                      kClassification + ")");
        out.push_back("The recorded element orders make |<x, y>| divisible by " + s(prime_a) + "*" + s(prime_b) +
                      ", hence <x, y> = " + g + "; the images of x and y generate " + pg);
        break;
    case Tag::SL11:
        out.push_back("The maximal subgroups of " + g + " are the 14 families of maxsub_scan (" + kClassification +
                      ", tables 8.70 and 8.71)");
        out.push_back("|<x, y>| is divisible by 6Q with gcd(6, Q) = 1, and the only maximal subgroups of order divisible "
                      "by Q have order 11Q, hence <x, y> = " + g + "; the images of x and y generate " + pg);
        break;
    }
    return out;
}

struct Failure {
    std::string claim;
};

void check(bool ok, const std::string& claim) {
    if (!ok) throw Failure{claim};
}

[[noreturn]] void malformed(const std::string& what) { throw MalformedCertificate(what); }

const json& at(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) malformed(std::string("missing key '") + key + "'");
    return j.at(key);
}

Natural nat(const json& j) {
    if (!j.is_string()) malformed("expected a decimal string, got " + j.dump());
    return Natural::from_string(j.get<std::string>());
}

std::uint64_t small(const json& j) {
    const Natural v = nat(j);
    if (!v.fits_u64()) malformed("value too large: " + v.to_string());
    return v.to_u64();
}

Field parse_field(const json& j) {
    const Natural p = nat(at(j, "p"));
    const json& poly = at(j, "poly");
    if (!poly.is_array()) malformed("field polynomial must be a list");
    std::vector<std::uint64_t> coeffs;
    for (const auto& c : poly) coeffs.push_back(small(c));
    Field f = ff::field_from_poly(p, coeffs);
    check(std::to_string(f->k()) == at(j, "k").get<std::string>(), "field degree matches its polynomial");
    return f;
}

FieldElem parse_elem(const Field& f, const json& j) {
    const Natural code = nat(j);
    if (code >= f->size()) malformed("field element code out of range: " + code.to_string());
    return FieldElem::from_canonical(f, code);
}

std::vector<FieldElem> parse_elems(const Field& f, const json& j) {
    if (!j.is_array()) malformed("expected a list of field elements");
    std::vector<FieldElem> out;
    for (const auto& e : j) out.push_back(parse_elem(f, e));
    return out;
}

Poly parse_poly(const Field& f, const json& j) { return Poly(f, parse_elems(f, j)); }

Mat parse_mat(const Field& f, unsigned n, const json& j) {
    if (!j.is_array() || j.size() != n) malformed("matrix must have " + std::to_string(n) + " rows");
    std::vector<FieldElem> entries;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != n) malformed("matrix rows must have " + std::to_string(n) + " entries");
        for (const auto& e : row) entries.push_back(parse_elem(f, e));
    }
    return Mat(f, n, std::move(entries));
}

Factorization parse_factors(const json& j) {
    if (!j.is_array()) malformed("Q_factors must be a list");
    Factorization f;
    for (const auto& pp : j) f.factors.push_back({nat(at(pp, "prime")), static_cast<unsigned>(small(at(pp, "exponent")))});
    return f;
}

meataxe::Witness parse_witness(const Field& f, const json& j) {
    meataxe::Witness w;
    const std::string side = at(j, "side").get<std::string>();
    if (side != "natural" && side != "dual") malformed("unknown witness side " + side);
    w.side = side == "natural" ? meataxe::Side::Natural : meataxe::Side::Dual;
    for (const auto& v : at(j, "basis")) w.basis.push_back(parse_elems(f, v));
    return w;
}

Tag expected_tag(unsigned n, const Natural& q) {
    if (n == 11) return Tag::SL11;
    if (construct::is_special_case(n, q)) return Tag::Special;
    return n == 9 ? Tag::Generic9 : Tag::Generic10;
}

// The recorded omega lies in the recorded extension, has order Q and is a
// root of the recorded minimal polynomial.
void check_omega(const json& field, const Field& base, const Poly& min_poly, const Natural& Q, const Factorization& Qf,
                 unsigned degree) {
    const Field big = parse_field(at(field, "extension"));
    check(big->p() == base->p() && big->k() == base->k() * degree, "extension field has degree " +
                                                                        std::to_string(degree) + " over GF(q)");
    const FieldElem omega = parse_elem(big, at(field, "omega"));
    check(!omega.is_zero() && ff::multiplicative_order(omega, Qf) == Q, "omega has order Q");
    check(parse_poly(base, at(field, "min_poly")) == min_poly, "recorded minimal polynomial matches the construction");
    const auto emb = ff::embed(base, big);
    FieldElem acc = FieldElem::zero(big);
    for (auto it = min_poly.coeffs().rbegin(); it != min_poly.coeffs().rend(); ++it) acc = acc * omega + ff::apply(emb, *it);
    check(acc.is_zero(), "omega is a root of its minimal polynomial");
    check(poly::is_irreducible(min_poly), "minimal polynomial is irreducible over GF(q)");
}

}  // namespace

std::vector<MaxSubEntry> maxsub_table(const Natural& q) {
    const auto [p, m] = arith::prime_power_decompose(q);
    const Natural d = arith::gcd(Natural(11), q - Natural(1));
    const Natural Q = (arith::pow(q, 11) - Natural(1)) / (q - Natural(1));
    const bool prime_q = m == 1;
    const std::uint64_t p64 = p.fits_u64() ? p.to_u64() : 0;

    std::vector<MaxSubEntry> t;
    auto add = [&](unsigned id, std::string label, std::vector<MaxSubVariant> vs, bool applicable, std::string reason) {
        t.push_back({id, std::move(label), std::move(vs), applicable, applicable ? std::string() : std::move(reason)});
    };
    auto one = [](Natural order) { return std::vector<MaxSubVariant>{{std::nullopt, std::move(order)}}; };

    add(1, "E_{q^10}:GL_10(q)", one(parabolic_order(q, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1})), true, "");
    add(2, "E_{q^18}:(SL_9(q) x SL_2(q)):(q-1)", one(parabolic_order(q, {1, 2, 1, 1, 1, 1, 1, 1, 1})), true, "");
    add(3, "E_{q^24}:(SL_8(q) x SL_3(q)):(q-1)", one(parabolic_order(q, {1, 2, 2, 1, 1, 1, 1, 1})), true, "");
    add(4, "E_{q^28}:(SL_7(q) x SL_4(q)):(q-1)", one(parabolic_order(q, {1, 2, 2, 2, 1, 1, 1})), true, "");
    add(5, "E_{q^30}:(SL_6(q) x SL_5(q)):(q-1)", one(parabolic_order(q, {1, 2, 2, 2, 2, 1})), true, "");
    add(6, "(q-1)^10:S_11",
        one(Natural(256 * 81 * 25 * 7 * 11) * arith::pow(q - Natural(1), 10)), q >= Natural(5), "requires q >= 5");
    add(7, "(q^11-1)/(q-1):11", one(Natural(11) * Q), true, "");

    std::vector<MaxSubVariant> subfield;
    for (const auto& r : arith::factor(Natural(m)).factors) {
        const Natural q0 = arith::pow(p, m / static_cast<unsigned>(r.prime.to_u64()));
        const Natural index = arith::gcd(Natural(11), (q - Natural(1)) / (q0 - Natural(1)));
        subfield.push_back({q0, sl11_order(q0) * index});
    }
    std::sort(subfield.begin(), subfield.end(), [](const auto& a, const auto& b) { return *a.q0 < *b.q0; });
    const bool has_subfield = !subfield.empty();
    add(8, "SL_11(q0).(11,(q-1)/(q0-1))", std::move(subfield), has_subfield, "requires q = q0^r with r prime");

    const bool c9 = (prime_q && p64 % 11 == 1) || (m == 5 && residue_in(p64, 11, {3, 4, 5, 9}));
    add(9, "11_+^{1+2}:Sp_2(11)", one(Natural(8 * 3 * 5) * arith::pow(Natural(11), 4)), c9,
        "requires q = p = 1 mod 11, or q = p^5 with p = 3, 4, 5, 9 mod 11");
    add(10, "d x SO_11(q)",
        one(d * arith::pow(q, 25) * product({qm1(q, 2), qm1(q, 4), qm1(q, 6), qm1(q, 8), qm1(q, 10)})), p64 != 2,
        "requires q odd");

    std::vector<MaxSubVariant> unitary;
    if (m % 2 == 0) {
        const Natural q0 = arith::pow(p, m / 2);
        unitary.push_back({q0, su11_order(q0) * arith::gcd(Natural(11), q0 - Natural(1))});
    }
    const bool has_unitary = !unitary.empty();
    add(11, "(11,q0-1) x SU_11(q0)", std::move(unitary), has_unitary, "requires q = q0^2");

    const bool c12 = prime_q && q != Natural(2) && residue_in(p64, 23, {1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18});
    add(12, "d x L_2(23)", one(Natural(8 * 3 * 11 * 23) * d), c12,
        "requires q = p = 1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18 mod 23 and q != 2");
    add(13, "d x U_5(2)", one(Natural(1024 * 243 * 5 * 11) * d), prime_q && p64 % 3 == 1, "requires q = p = 1 mod 3");
    add(14, "M_24", one(Natural(1024ULL * 27 * 5 * 7 * 11 * 23)), q == Natural(2), "requires q = 2");
    return t;
}

ScanReport q_divisibility_scan_unchecked(const Natural& q) {
    ScanReport r;
    r.q = q;
    r.Q = (arith::pow(q, 11) - Natural(1)) / (q - Natural(1));
    for (auto& e : maxsub_table(q)) {
        ScanRow row;
        for (const auto& v : e.variants) {
            const bool div = arith::divides(r.Q, v.order);
            row.variant_divisible.push_back(div);
            if (e.applicable && div) row.divisible = true;
            if (e.case_id == 8 && e.applicable && div != arith::divides(r.Q, v.order * (*v.q0 - Natural(1))))
                r.case8_sensitive = true;
        }
        if (row.divisible) r.divisible_cases.push_back(e.case_id);
        row.entry = std::move(e);
        r.rows.push_back(std::move(row));
    }
    return r;
}

ScanReport q_divisibility_scan(const Natural& q) {
    ScanReport r = q_divisibility_scan_unchecked(q);
    if (r.divisible_cases != std::vector<unsigned>{7}) {
        std::string cases;
        for (unsigned c : r.divisible_cases) cases += (cases.empty() ? "" : ", ") + std::to_string(c);
        throw ScanContradiction("Q divides the orders of cases {" + cases + "} for q = " + q.to_string() +
                                ", expected exactly {7}");
    }
    return r;
}

json scan_to_json(const ScanReport& r) {
    json entries = json::array();
    for (const auto& row : r.rows) {
        json variants = json::array();
        for (std::size_t i = 0; i < row.entry.variants.size(); ++i) {
            const auto& v = row.entry.variants[i];
            variants.push_back({{"q0", v.q0 ? json(s(*v.q0)) : json(nullptr)},
                                {"order", s(v.order)},
                                {"divisible", static_cast<bool>(row.variant_divisible[i])}});
        }
        entries.push_back({{"case", std::to_string(row.entry.case_id)},
                           {"label", row.entry.label},
                           {"applicable", row.entry.applicable},
                           {"reason", row.entry.reason},
                           {"divisible", row.divisible},
                           {"variants", variants}});
    }
    json cases = json::array();
    for (unsigned c : r.divisible_cases) cases.push_back(std::to_string(c));
    return {{"q", s(r.q)},
            {"Q", s(r.Q)},
            {"gcd_6_Q", s(arith::gcd(Natural(6), r.Q))},
            {"divisible_cases", cases},
            {"case8_sensitive", r.case8_sensitive},
            {"entries", entries}};
}

Certificate certify(unsigned n, const Natural& q, std::uint64_t seed) {
    const auto parts = arith::prime_power_decompose(q);
    const GenPair g = construct::build(n, q);

    Certificate c;
    c["version"] = kVersion;
    c["n"] = std::to_string(n);
    c["q"] = s(q);
    c["p"] = s(parts.p);
    c["m"] = std::to_string(parts.m);
    c["construction"] = construct::tag_name(g.tag);
    c["seed"] = std::to_string(seed);

    json field{{"base", field_json(g.field)}, {"extension", nullptr}, {"omega", nullptr}, {"min_poly", nullptr}};
    if (g.big_field) {
        field["extension"] = field_json(*g.big_field);
        field["omega"] = s(g.omega->canonical());
        field["min_poly"] = elems_json(g.min_poly->coeffs());
    }
    c["field"] = field;
    c["matrices"] = {{"x", mat_json(g.x)}, {"y", mat_json(g.y)}};
    c["Q"] = s(g.Q);
    c["Q_factors"] = factors_json(g.Q_factors);

    json orders{{"x", s(matrix::element_order(g.x))},
                {"y", s(matrix::element_order(g.y))},
                {"z", s(matrix::element_order(g.z))}};
    Natural prime_a, prime_b;
    if (g.special) {
        json words = json::array();
        for (const auto& w : g.special->witnesses)
            words.push_back({{"word", w.text},
                             {"order", s(matrix::element_order(matrix::eval_word(w.word, g.x, g.y)))},
                             {"claimed", s(w.claimed_order)}});
        orders["words"] = words;
        orders["claimed_z"] = s(g.special->claimed_z_order);
        prime_a = g.special->prime_a;
        prime_b = g.special->prime_b;
        orders["divisor_pair"] = {s(prime_a), s(prime_b)};
    }
    c["orders"] = orders;

    json charpoly{{"z", elems_json(matrix::char_poly(g.z).coeffs())}, {"expected", nullptr}};
    if (g.tag == Tag::SL11) {
        charpoly["expected"] = elems_json(g.min_poly->coeffs());
        c["deltas"] = elems_json(g.deltas);
    } else if (g.tag != Tag::Special) {
        charpoly["expected"] = elems_json(construct::generic_expected_charpoly(g.alphas).coeffs());
        c["alphas"] = elems_json(g.alphas);
    }
    c["charpoly"] = charpoly;

    c["irreducibility"] = {{"scan", verdict_json(meataxe::scan_lines(g.x, g.y), false)},
                           {"meataxe", verdict_json(meataxe::is_irreducible_module({g.x, g.y}, seed), true)},
                           {"seed", std::to_string(seed)}};
    if (n == 11) c["maxsub_scan"] = scan_to_json(q_divisibility_scan(q));
    c["assumptions"] = assumptions_for(n, q, g.tag, prime_a, prime_b);
    return c;
}

VerifyReport verify(const Certificate& c) {
    try {
        check(at(c, "version") == kVersion, "certificate version is " + std::string(kVersion));
        const std::uint64_t n64 = small(at(c, "n"));
        check(n64 == 9 || n64 == 10 || n64 == 11, "n is 9, 10 or 11");
        const unsigned n = static_cast<unsigned>(n64);
        const Natural q = nat(at(c, "q"));
        const auto parts = arith::prime_power_decompose(q);
        check(nat(at(c, "p")) == parts.p && small(at(c, "m")) == parts.m, "p and m decompose q");

        const json& field = at(c, "field");
        const Field base = parse_field(at(field, "base"));
        check(Natural(base->p()) == parts.p && base->k() == parts.m, "base field has q elements");

        const Tag tag = construct::tag_from_name(at(c, "construction").get<std::string>());
        check(tag == expected_tag(n, q), "construction tag matches (n, q)");

        const json& mats = at(c, "matrices");
        const Mat x = parse_mat(base, n, at(mats, "x"));
        const Mat y = parse_mat(base, n, at(mats, "y"));
        const Mat z = x * y;
        check(!x.is_identity() && (x * x).is_identity(), "x has order 2");
        check(!y.is_identity() && (y * y * y).is_identity(), "y has order 3");
        check(matrix::determinant(x).is_one(), "det(x) = 1");
        check(matrix::determinant(y).is_one(), "det(y) = 1");

        const Natural Q = nat(at(c, "Q"));
        check(Q == construct::q_value(n, q), "Q matches its formula");
        const Factorization Qf = parse_factors(at(c, "Q_factors"));
        check(Qf.value() == Q, "Q_factors multiply to Q");
        for (const auto& pp : Qf.factors) check(arith::is_prime(pp.prime), "Q_factors entry " + s(pp.prime) + " is prime");

        const json& orders = at(c, "orders");
        check(nat(at(orders, "x")) == Natural(2), "recorded order of x is 2");
        check(nat(at(orders, "y")) == Natural(3), "recorded order of y is 3");
        const Natural ord_z = matrix::element_order(z);
        check(nat(at(orders, "z")) == ord_z, "recorded order of z = x*y reproduces");

        const json& charpoly = at(c, "charpoly");
        const Poly cp = matrix::char_poly(z);
        check(parse_poly(base, at(charpoly, "z")) == cp, "recorded characteristic polynomial of z reproduces");

        switch (tag) {
        case Tag::Generic9:
        case Tag::Generic10: {
            const auto alphas = parse_elems(base, at(c, "alphas"));
            check(alphas.size() == n - 1, "alphas has n - 1 entries");
            check(x == construct::generic_x(n, alphas), "x is the generic matrix for the recorded alphas");
            check(y == construct::generic_y(n, base), "y is the generic matrix");
            const Poly f = poly::poly_from_alphas(base, alphas);
            const Poly expected = construct::generic_expected_charpoly(alphas);
            check(parse_poly(base, at(charpoly, "expected")) == expected, "recorded expected polynomial reproduces");
            check(cp == expected, "char_poly(z) = (t - 1/alpha_{n-1}) f_n(t)");
            check(ord_z == Q, "z has order Q");
            check_omega(field, base, f, Q, Qf, n - 1);
            break;
        }
        case Tag::SL11: {
            const auto deltas = parse_elems(base, at(c, "deltas"));
            check(deltas.size() == 10, "deltas has 10 entries");
            check(x == construct::sl11_x(base), "x is the SL_11 matrix");
            check(y == construct::sl11_y(deltas), "y is the SL_11 matrix for the recorded deltas");
            const Poly l = parse_poly(base, at(charpoly, "expected"));
            check(construct::deltas_from_l(poly::read_l_coeffs(l)) == deltas, "deltas are derived from l");
            check(construct::symbolic_fz11(deltas) == cp, "closed-form characteristic polynomial agrees with char_poly(z)");
            check(cp == l, "char_poly(z) = l(t)");
            check(ord_z == Q, "z has order Q");
            check(arith::gcd(Natural(6), Q).is_one(), "gcd(6, Q) = 1");
            check_omega(field, base, l, Q, Qf, 11);
            break;
        }
        case Tag::Special: {
            check(at(charpoly, "expected").is_null(), "no expected polynomial for hard-coded pairs");
            check(ord_z == nat(at(orders, "claimed_z")), "order of z equals the tabulated value");
            Natural all = ord_z;
            for (const auto& w : at(orders, "words")) {
                const std::string text = at(w, "word").get<std::string>();
                const Natural ord = matrix::element_order(matrix::eval_word(matrix::GenWord::parse(text), x, y));
                check(nat(at(w, "order")) == ord, "recorded order of " + text + " reproduces");
                check(ord == nat(at(w, "claimed")), "order of " + text + " equals the tabulated value");
                all = arith::lcm(all, ord);
            }
            const json& pair = at(orders, "divisor_pair");
            if (!pair.is_array() || pair.size() != 2) malformed("divisor_pair must have two entries");
            const Natural a = nat(pair[0]), b = nat(pair[1]);
            check(arith::is_prime(a) && arith::is_prime(b) && a != b, "divisor pair consists of distinct primes");
            check(arith::divides(a * b, all), "divisor pair divides the order of <x, y>");
            break;
        }
        }

        const json& irr = at(c, "irreducibility");
        const std::uint64_t seed = small(at(irr, "seed"));
        check(seed == small(at(c, "seed")), "irreducibility seed equals the global seed");
        const auto scan = meataxe::scan_lines(x, y);
        check(verdict_json(scan, false) == at(irr, "scan"), "line/hyperplane scan verdict reproduces");
        if (scan.witness) check(meataxe::verify_witness(*scan.witness, {x, y}), "scan witness is invariant");
        const auto mx = meataxe::is_irreducible_module({x, y}, seed);
        check(verdict_json(mx, true) == at(irr, "meataxe"), "MeatAxe verdict reproduces");
        if (at(irr, "meataxe").contains("witness"))
            check(meataxe::verify_witness(parse_witness(base, at(at(irr, "meataxe"), "witness")), {x, y}),
                  "MeatAxe witness is invariant");
        check(scan.kind == meataxe::VerdictKind::Irreducible, "no invariant line or hyperplane");

        if (n == 11) {
            check(at(c, "maxsub_scan") == scan_to_json(q_divisibility_scan_unchecked(q)),
                  "maximal-subgroup scan reproduces");
            check(at(at(c, "maxsub_scan"), "divisible_cases") == json::array({"7"}),
                  "only case 7 has order divisible by Q");
        } else {
            check(!c.contains("maxsub_scan"), "maxsub_scan only for n = 11");
        }

        Natural pa, pb;
        if (tag == Tag::Special) {
            pa = nat(at(orders, "divisor_pair")[0]);
            pb = nat(at(orders, "divisor_pair")[1]);
        }
        check(at(c, "assumptions") == assumptions_for(n, q, tag, pa, pb), "assumption list matches the construction");
    } catch (const Failure& f) {
        return {false, f.claim};
    } catch (const Error& e) {
        return {false, std::string("malformed certificate: ") + e.what()};
    } catch (const json::exception& e) {
        return {false, std::string("malformed certificate: ") + e.what()};
    }
    return {true, ""};
}

json field_to_json(const Field& f) { return field_json(f); }
json matrix_to_json(const Mat& m) { return mat_json(m); }

std::string serialize(const Certificate& cert) { return cert.dump(2) + "\n"; }

Certificate parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw MalformedCertificate(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace slgen::certify
