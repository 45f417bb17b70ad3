#include "slgen/construct.hpp"

#include <array>
#include <charconv>
#include <sstream>

#include "slgen/error.hpp"

namespace slgen::construct {

namespace {

using Table = std::vector<std::string_view>;

// Symbolic entries: 0, 1, -1, aI (alpha_I), aI/aN (alpha_I * alpha_N^{-1}),
// 1/aN, dI and -dI (delta_I), e (a generator of GF(4)^*).
struct Symbols {
    Field field;
    const std::vector<FieldElem>* alphas = nullptr;
    const std::vector<FieldElem>* deltas = nullptr;
    std::optional<FieldElem> eta;
};

std::size_t index_of(std::string_view tok, std::size_t from) {
    std::size_t v = 0;
    const auto* first = tok.data() + from;
    const auto* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || v == 0) throw Error("bad table token '" + std::string(tok) + "'");
    return v;
}

FieldElem lookup(const std::vector<FieldElem>* vals, std::size_t i, std::string_view tok) {
    if (!vals || i > vals->size()) throw Error("table token '" + std::string(tok) + "' has no value");
    return (*vals)[i - 1];
}

FieldElem instantiate_token(std::string_view tok, const Symbols& s) {
    if (tok == "0") return FieldElem::zero(s.field);
    if (tok == "1") return FieldElem::one(s.field);
    if (tok == "-1") return FieldElem::from_int(s.field, -1);
    if (tok == "e") {
        if (!s.eta) throw Error("table uses eta outside GF(4)");
        return *s.eta;
    }
    if (tok.starts_with("1/a")) return lookup(s.alphas, index_of(tok, 3), tok).inverse();
    if (tok.starts_with("-d")) return -lookup(s.deltas, index_of(tok, 2), tok);
    if (tok.starts_with("d")) return lookup(s.deltas, index_of(tok, 1), tok);
    if (tok.starts_with("a")) {
        const auto slash = tok.find('/');
        if (slash == std::string_view::npos) return lookup(s.alphas, index_of(tok, 1), tok);
        const FieldElem num = lookup(s.alphas, index_of(tok.substr(0, slash), 1), tok);
        const std::string_view den = tok.substr(slash + 1);
        if (!den.starts_with("a")) throw Error("bad table token '" + std::string(tok) + "'");
        return num * lookup(s.alphas, index_of(den, 1), tok).inverse();
    }
    throw Error("bad table token '" + std::string(tok) + "'");
}

Mat instantiate(const Table& rows, const Symbols& s) {
    const std::size_t n = rows.size();
    std::vector<FieldElem> entries;
    entries.reserve(n * n);
    for (std::string_view row : rows) {
        std::size_t count = 0;
        std::size_t pos = 0;
        while (pos < row.size()) {
            while (pos < row.size() && row[pos] == ' ') ++pos;
            if (pos == row.size()) break;
            std::size_t end = row.find(' ', pos);
            if (end == std::string_view::npos) end = row.size();
            entries.push_back(instantiate_token(row.substr(pos, end - pos), s));
            ++count;
            pos = end;
        }
        if (count != n) throw Error("table row has " + std::to_string(count) + " entries, expected " + std::to_string(n));
    }
    return Mat(s.field, n, std::move(entries));
}

// ---------------------------------------------------------------------------
// Generic constructions, n = 9 and n = 10.

const Table kX9 = {
    "-1 0 0 0 0 0 a5/a8 0 a5",
    "0 -1 0 0 0 0 a4/a8 0 a4",
    "0 0 0 -1 0 0 a3/a8 0 a6",
    "0 0 -1 0 0 0 a6/a8 0 a3",
    "0 0 0 0 -1 0 a2/a8 0 a2",
    "0 0 0 0 0 0 a1/a8 -1 a7",
    "0 0 0 0 0 0 0 0 a8",
    "0 0 0 0 0 -1 a7/a8 0 a1",
    "0 0 0 0 0 0 1/a8 0 0",
};

const Table kY9 = {
    "0 0 1 0 0 0 0 0 0",
    "1 0 0 0 0 0 0 0 0",
    "0 1 0 0 0 0 0 0 0",
    "0 0 0 0 0 1 0 0 0",
    "0 0 0 1 0 0 0 0 0",
    "0 0 0 0 1 0 0 0 0",
    "0 0 0 0 0 0 0 0 1",
    "0 0 0 0 0 0 1 0 0",
    "0 0 0 0 0 0 0 1 0",
};

const Table kZ9 = {
    "0 0 -1 0 0 0 0 a5 a5/a8",
    "-1 0 0 0 0 0 0 a4 a4/a8",
    "0 0 0 0 0 -1 0 a6 a3/a8",
    "0 -1 0 0 0 0 0 a3 a6/a8",
    "0 0 0 -1 0 0 0 a2 a2/a8",
    "0 0 0 0 0 0 -1 a7 a1/a8",
    "0 0 0 0 0 0 0 a8 0",
    "0 0 0 0 -1 0 0 a1 a7/a8",
    "0 0 0 0 0 0 0 0 1/a8",
};

const Table kX10 = {
    "0 0 0 -1 0 0 0 a2/a9 0 a3",
    "0 0 0 0 0 -1 0 a4/a9 0 a7",
    "0 0 -1 0 0 0 0 a5/a9 0 a5",
    "-1 0 0 0 0 0 0 a3/a9 0 a2",
    "0 0 0 0 0 0 0 a1/a9 -1 a8",
    "0 -1 0 0 0 0 0 a7/a9 0 a4",
    "0 0 0 0 0 0 -1 a6/a9 0 a6",
    "0 0 0 0 0 0 0 0 0 a9",
    "0 0 0 0 -1 0 0 a8/a9 0 a1",
    "0 0 0 0 0 0 0 1/a9 0 0",
};

const Table kY10 = {
    "1 0 0 0 0 0 0 0 0 0",
    "0 0 1 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 1 0 0 0",
    "0 0 0 0 0 1 0 0 0 0",
    "0 0 0 1 0 0 0 0 0 0",
    "0 0 0 0 1 0 0 0 0 0",
    "0 1 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 0 0 1",
    "0 0 0 0 0 0 0 1 0 0",
    "0 0 0 0 0 0 0 0 1 0",
};

const Table kZ10 = {
    "0 0 0 0 0 -1 0 0 a3 a2/a9",
    "0 0 0 0 -1 0 0 0 a7 a4/a9",
    "0 0 0 0 0 0 -1 0 a5 a5/a9",
    "-1 0 0 0 0 0 0 0 a2 a3/a9",
    "0 0 0 0 0 0 0 -1 a8 a1/a9",
    "0 0 -1 0 0 0 0 0 a4 a7/a9",
    "0 -1 0 0 0 0 0 0 a6 a6/a9",
    "0 0 0 0 0 0 0 0 a9 0",
    "0 0 0 -1 0 0 0 0 a1 a8/a9",
    "0 0 0 0 0 0 0 0 0 1/a9",
};

// ---------------------------------------------------------------------------
// SL_11.

const Table kX11 = {
    "0 0 0 0 0 0 0 0 0 0 1",
    "0 0 0 0 0 0 0 0 0 1 0",
    "0 0 0 0 0 0 0 0 1 0 0",
    "0 0 0 0 0 0 0 1 0 0 0",
    "0 0 0 0 0 0 1 0 0 0 0",
    "0 0 0 0 0 -1 0 0 0 0 0",
    "0 0 0 0 1 0 0 0 0 0 0",
    "0 0 0 1 0 0 0 0 0 0 0",
    "0 0 1 0 0 0 0 0 0 0 0",
    "0 1 0 0 0 0 0 0 0 0 0",
    "1 0 0 0 0 0 0 0 0 0 0",
};

const Table kY11 = {
    "-1 -1 0 0 0 0 0 0 0 0 d1",
    "1 0 0 0 0 0 0 0 0 0 d2",
    "0 0 -1 -1 0 0 0 0 0 0 d3",
    "0 0 1 0 0 0 0 0 0 0 d4",
    "0 0 0 0 -1 -1 0 0 0 0 d5",
    "0 0 0 0 1 0 0 0 0 0 d6",
    "0 0 0 0 0 0 -1 -1 0 0 d7",
    "0 0 0 0 0 0 1 0 0 0 d8",
    "0 0 0 0 0 0 0 0 -1 -1 d9",
    "0 0 0 0 0 0 0 0 1 0 d10",
    "0 0 0 0 0 0 0 0 0 0 1",
};

const Table kZ11 = {
    "0 0 0 0 0 0 0 0 0 0 1",
    "0 0 0 0 0 0 0 0 1 0 d10",
    "0 0 0 0 0 0 0 0 -1 -1 d9",
    "0 0 0 0 0 0 1 0 0 0 d8",
    "0 0 0 0 0 0 -1 -1 0 0 d7",
    "0 0 0 0 -1 0 0 0 0 0 -d6",
    "0 0 0 0 -1 -1 0 0 0 0 d5",
    "0 0 1 0 0 0 0 0 0 0 d4",
    "0 0 -1 -1 0 0 0 0 0 0 d3",
    "1 0 0 0 0 0 0 0 0 0 d2",
    "-1 -1 0 0 0 0 0 0 0 0 d1",
};

// ---------------------------------------------------------------------------
// Hard-coded small cases.

struct SpecialCase {
    unsigned n;
    unsigned q;
    Table x;
    Table y;
    std::uint64_t z_order;
    std::string_view word;
    std::uint64_t word_order;
    std::uint64_t prime_a;
    std::uint64_t prime_b;
};

const std::array<SpecialCase, 5>& special_table() {
    static const std::array<SpecialCase, 5> cases = {{
        {9, 2,
         {"1 0 0 0 0 0 0 0 0", "0 0 1 0 0 0 0 0 0", "0 1 0 0 0 0 0 0 0", "0 0 0 0 1 0 0 0 0", "0 0 0 1 0 0 0 0 0",
          "0 0 0 0 0 1 1 0 1", "0 0 0 0 0 1 0 1 1", "0 0 0 0 0 0 1 1 1", "0 0 0 0 0 1 1 1 0"},
         {"0 1 0 0 0 0 0 0 0", "1 1 0 0 0 0 0 0 0", "0 0 0 1 0 0 0 0 0", "0 0 1 1 0 0 0 0 0", "0 0 0 0 0 1 0 0 0",
          "0 0 0 0 1 1 0 0 0", "0 0 0 0 0 0 0 0 1", "0 0 0 0 0 0 1 0 0", "0 0 0 0 0 0 0 1 0"},
         73, "xy(xy^2)^2", 381, 73, 127},
        {9, 4,
         {"0 1 0 0 0 0 0 0 0", "1 0 0 0 0 0 0 0 0", "0 0 0 1 0 0 0 0 0", "0 0 1 0 0 0 0 0 0", "0 0 0 0 1 0 0 0 0",
          "0 0 0 0 0 0 1 0 0", "0 0 0 0 0 1 0 0 0", "0 0 0 0 0 0 0 1 e", "0 0 0 0 0 0 0 0 1"},
         {"1 0 0 0 0 0 0 0 0", "0 0 1 0 0 0 0 0 0", "0 1 1 0 0 0 0 0 0", "0 0 0 0 0 1 0 0 0", "0 0 0 1 0 0 0 0 0",
          "0 0 0 0 1 0 0 0 0", "0 0 0 0 0 0 1 1 1", "0 0 0 0 0 0 1 1 0", "0 0 0 0 0 0 0 1 0"},
         81915, "(xy^2)^2(xy)^3xy^2(xy)^2xy^2(xy)^2xy^2xy", 29127, 43, 73},
        {10, 2,
         {"0 1 0 0 0 0 0 0 0 0", "1 0 0 0 0 0 0 0 0 0", "0 0 0 1 0 0 0 0 0 0", "0 0 1 0 0 0 0 0 0 0",
          "0 0 0 0 0 1 0 0 0 0", "0 0 0 0 1 0 0 0 0 0", "0 0 0 0 0 0 1 1 0 1", "0 0 0 0 0 0 1 0 1 1",
          "0 0 0 0 0 0 0 1 1 1", "0 0 0 0 0 0 1 1 1 0"},
         {"1 0 0 0 0 0 0 0 0 0", "0 0 1 0 0 0 0 0 0 0", "0 1 1 0 0 0 0 0 0 0", "0 0 0 0 1 0 0 0 0 0",
          "0 0 0 1 1 0 0 0 0 0", "0 0 0 0 0 0 1 0 0 0", "0 0 0 0 0 1 1 0 0 0", "0 0 0 0 0 0 0 0 0 1",
          "0 0 0 0 0 0 0 1 0 0", "0 0 0 0 0 0 0 0 1 0"},
         1023, "xy(xy^2)^2", 73, 11, 73},
        {10, 3,
         {"0 1 0 0 0 0 0 0 0 0", "1 0 0 0 0 0 0 0 0 0", "0 0 1 0 0 0 0 0 0 0", "0 0 0 0 1 0 0 0 0 0",
          "0 0 0 1 0 0 0 0 0 0", "0 0 0 0 0 1 0 0 0 0", "0 0 0 0 0 0 0 1 0 0", "0 0 0 0 0 0 1 0 0 0",
          "0 0 0 0 0 0 0 0 -1 1", "0 0 0 0 0 0 0 0 0 1"},
         {"1 0 0 0 0 0 0 0 0 0", "0 0 0 1 0 0 0 0 0 0", "0 1 0 0 0 0 0 0 0 0", "0 0 1 0 0 0 0 0 0 0",
          "0 0 0 0 0 0 1 0 0 0", "0 0 0 0 1 0 0 0 0 0", "0 0 0 0 0 1 0 0 0 0", "0 0 0 0 0 0 0 0 1 1",
          "0 0 0 0 0 0 0 1 0 -1", "0 0 0 0 0 0 0 0 1 0"},
         7381, "(xy)^2xy^2(xy)^2xy^2xyxy^2xy", 19682, 61, 757},
        {10, 4,
         {"1 0 0 0 0 0 0 0 0 0", "0 0 1 0 0 0 0 0 0 0", "0 1 0 0 0 0 0 0 0 0", "0 0 0 0 1 0 0 0 0 0",
          "0 0 0 1 0 0 0 0 0 0", "0 0 0 0 0 1 0 0 0 0", "0 0 0 0 0 0 0 1 0 0", "0 0 0 0 0 0 1 0 0 0",
          "0 0 0 0 0 0 0 0 1 e", "0 0 0 0 0 0 0 0 0 1"},
         {"0 1 0 0 0 0 0 0 0 0", "1 1 0 0 0 0 0 0 0 0", "0 0 0 1 0 0 0 0 0 0", "0 0 1 1 0 0 0 0 0 0",
          "0 0 0 0 0 0 1 0 0 0", "0 0 0 0 1 0 0 0 0 0", "0 0 0 0 0 1 0 0 0 0", "0 0 0 0 0 0 0 1 1 1",
          "0 0 0 0 0 0 0 1 1 0", "0 0 0 0 0 0 0 0 1 0"},
         4161, "(xy^2)^3xy(xy^2)^6", 69905, 41, 73},
    }};
    return cases;
}

const SpecialCase* find_special(unsigned n, const Natural& q) {
    for (const auto& c : special_table())
        if (c.n == n && Natural(c.q) == q) return &c;
    return nullptr;
}

struct Fields {
    Field small;
    Field big;
    ff::Embedding embedding;
};

Fields fields_for(const Natural& q, unsigned degree) {
    const auto [p, m] = arith::prime_power_decompose(q);
    Field small = ff::make_field(p, m);
    Field big = ff::make_field(p, m * degree);
    ff::Embedding e = ff::embed(small, big);
    return {std::move(small), std::move(big), std::move(e)};
}

void check_n(unsigned n) {
    if (n != 9 && n != 10 && n != 11) throw UnsupportedN("n = " + std::to_string(n) + " is not supported (need 9, 10 or 11)");
}

}  // namespace

std::string tag_name(Tag t) {
    switch (t) {
        case Tag::Generic9: return "generic9";
        case Tag::Generic10: return "generic10";
        case Tag::Special: return "special";
        case Tag::SL11: return "sl11";
    }
    return "unknown";
}

Tag tag_from_name(std::string_view s) {
    for (Tag t : {Tag::Generic9, Tag::Generic10, Tag::Special, Tag::SL11})
        if (tag_name(t) == s) return t;
    throw InvalidArgument("unknown construction tag '" + std::string(s) + "'");
}

Natural q_value(unsigned n, const Natural& q) {
    check_n(n);
    arith::prime_power_decompose(q);
    if (n == 11) return (arith::pow(q, 11) - Natural(1)) / (q - Natural(1));
    Natural v = arith::pow(q, n - 1) - Natural(1);
    if (q == Natural(3) || q == Natural(7)) v /= Natural(2);
    return v;
}

bool is_special_case(unsigned n, const Natural& q) { return find_special(n, q) != nullptr; }

std::vector<std::pair<unsigned, unsigned>> special_cases() {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (const auto& c : special_table()) out.emplace_back(c.n, c.q);
    return out;
}

Mat generic_x(unsigned n, const std::vector<FieldElem>& alphas) {
    if (n != 9 && n != 10) throw UnsupportedN("generic matrices exist for n = 9, 10 only");
    if (alphas.size() != n - 1) throw InvalidArgument("need n - 1 alphas");
    Symbols s{alphas.front().field(), &alphas, nullptr, std::nullopt};
    return instantiate(n == 9 ? kX9 : kX10, s);
}

Mat generic_y(unsigned n, const Field& f) {
    if (n != 9 && n != 10) throw UnsupportedN("generic matrices exist for n = 9, 10 only");
    return instantiate(n == 9 ? kY9 : kY10, Symbols{f, nullptr, nullptr, std::nullopt});
}

Mat generic_z_display(unsigned n, const std::vector<FieldElem>& alphas) {
    if (n != 9 && n != 10) throw UnsupportedN("generic matrices exist for n = 9, 10 only");
    if (alphas.size() != n - 1) throw InvalidArgument("need n - 1 alphas");
    Symbols s{alphas.front().field(), &alphas, nullptr, std::nullopt};
    return instantiate(n == 9 ? kZ9 : kZ10, s);
}

Poly generic_expected_charpoly(const std::vector<FieldElem>& alphas) {
    const Field& f = alphas.front().field();
    const Poly fn = poly::poly_from_alphas(f, alphas);
    const Poly linear(f, {-alphas.back().inverse(), FieldElem::one(f)});
    return linear * fn;
}

Mat sl11_x(const Field& f) { return instantiate(kX11, Symbols{f, nullptr, nullptr, std::nullopt}); }

Mat sl11_y(const std::vector<FieldElem>& deltas) {
    if (deltas.size() != 10) throw InvalidArgument("need ten deltas");
    return instantiate(kY11, Symbols{deltas.front().field(), nullptr, &deltas, std::nullopt});
}

Mat sl11_z_display(const std::vector<FieldElem>& deltas) {
    if (deltas.size() != 10) throw InvalidArgument("need ten deltas");
    return instantiate(kZ11, Symbols{deltas.front().field(), nullptr, &deltas, std::nullopt});
}

std::vector<FieldElem> deltas_from_l(const poly::LCoeffs& l) {
    const Field& F = l.a.field();
    auto I = [&](std::int64_t v) { return FieldElem::from_int(F, v); };
    const auto& [a, b, c, d, e, f, g, h, k, m] = l;
    return {
        a,                                          // delta_1
        -m + I(1),                                  // delta_2
        -I(2) * a - c - I(1),                       // delta_3
        a + I(2) * m - I(2) - k + h,                // delta_4
        a - m + I(3) + c + b + e,                   // delta_5
        -a - c + I(1) + g - m + k - h - f,          // delta_6
        I(3) - m + k - h + g + a + b + d,           // delta_7
        -a + k - m + I(1) - b - d,                  // delta_8
        m - I(4) - b - k,                           // delta_9
        b + I(1),                                   // delta_10
    };
}

Poly symbolic_fz11(const std::vector<FieldElem>& deltas) {
    if (deltas.size() != 10) throw InvalidArgument("need ten deltas");
    const Field& F = deltas.front().field();
    auto I = [&](std::int64_t v) { return FieldElem::from_int(F, v); };
    auto D = [&](int i) { return deltas[static_cast<std::size_t>(i - 1)]; };
    std::vector<FieldElem> c(12, I(0));
    c[11] = I(1);
    c[10] = -D(1);
    c[9] = D(10) - I(1);
    c[8] = I(2) * D(1) + D(3) + I(1);
    c[7] = -(D(1) + D(8) + D(9) + I(2) * D(10) + I(1));
    c[6] = -(D(1) - D(2) + D(3) + D(5) - D(10));
    c[5] = D(1) + D(3) - D(6) + D(7) + D(8) + D(9) + D(10) + I(1);
    c[4] = D(1) - D(2) - D(4) - D(7) - D(8) - D(9) - D(10);
    c[3] = -(D(1) - D(2) - D(4) + D(9) + D(10) + I(2));
    c[2] = D(2) + D(9) + D(10) + I(2);
    c[1] = -(D(2) - I(1));
    c[0] = I(-1);
    return Poly(F, std::move(c));
}

GenPair build_generic_unchecked(unsigned n, const Natural& q) {
    if (n != 9 && n != 10) throw UnsupportedN("generic construction covers n = 9, 10 only");
    GenPair g;
    g.n = n;
    g.q = q;
    g.tag = n == 9 ? Tag::Generic9 : Tag::Generic10;
    g.Q = q_value(n, q);
    g.Q_factors = arith::factor(g.Q);
    Fields fs = fields_for(q, n - 1);
    g.field = fs.small;
    g.big_field = fs.big;
    g.omega = ff::element_of_order(fs.big, g.Q, g.Q_factors);
    g.min_poly = poly::minimal_polynomial(*g.omega, fs.embedding);
    g.alphas = poly::extract_alphas(*g.min_poly);
    if (g.alphas.back().is_zero()) throw Error("minimal polynomial has zero constant term");
    g.x = generic_x(n, g.alphas);
    g.y = generic_y(n, g.field);
    g.z = g.x * g.y;
    return g;
}

GenPair build_generic(unsigned n, const Natural& q) {
    check_n(n);
    if (n == 11) throw UnsupportedN("generic construction covers n = 9, 10 only");
    arith::prime_power_decompose(q);
    if (n == 9 && (q == Natural(2) || q == Natural(4)))
        throw OutOfRange("generic construction for n = 9 needs q not in {2, 4}");
    if (n == 10 && q <= Natural(4)) throw OutOfRange("generic construction for n = 10 needs q > 4");
    return build_generic_unchecked(n, q);
}

GenPair build_special(unsigned n, const Natural& q) {
    const SpecialCase* c = find_special(n, q);
    if (!c) throw NotSpecialCase("SL_" + std::to_string(n) + "(" + q.to_string() + ") has no hard-coded generators");
    const auto [p, m] = arith::prime_power_decompose(q);
    GenPair g;
    g.n = n;
    g.q = q;
    g.tag = Tag::Special;
    g.field = ff::make_field(p, m);
    g.Q = q_value(n, q);
    g.Q_factors = arith::factor(g.Q);
    Symbols s{g.field, nullptr, nullptr, std::nullopt};
    if (c->q == 4) s.eta = FieldElem::generator(g.field);
    g.x = instantiate(c->x, s);
    g.y = instantiate(c->y, s);
    g.z = g.x * g.y;
    SpecialInfo info{Natural(c->z_order), {}, Natural(c->prime_a), Natural(c->prime_b)};
    info.witnesses.push_back({std::string(c->word), GenWord::parse(c->word), Natural(c->word_order)});
    g.special = std::move(info);
    return g;
}

GenPair build_sl11(const Natural& q) {
    GenPair g;
    g.n = 11;
    g.q = q;
    g.tag = Tag::SL11;
    g.Q = q_value(11, q);
    g.Q_factors = arith::factor(g.Q);
    Fields fs = fields_for(q, 11);
    g.field = fs.small;
    g.big_field = fs.big;
    g.omega = ff::element_of_order(fs.big, g.Q, g.Q_factors);
    g.min_poly = poly::minimal_polynomial(*g.omega, fs.embedding);
    g.l_coeffs = poly::read_l_coeffs(*g.min_poly);
    g.deltas = deltas_from_l(*g.l_coeffs);
    g.x = sl11_x(g.field);
    g.y = sl11_y(g.deltas);
    g.z = g.x * g.y;
    return g;
}

GenPair build(unsigned n, const Natural& q) {
    check_n(n);
    if (n == 11) return build_sl11(q);
    if (is_special_case(n, q)) return build_special(n, q);
    return build_generic(n, q);
}

}  // namespace slgen::construct
