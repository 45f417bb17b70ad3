#include "slgen/matrix.hpp"

#include <cctype>
#include <set>

#include "slgen/error.hpp"

namespace slgen::matrix {

using ff::same_field;

Mat::Mat(Field f, std::size_t n) : field_(std::move(f)), n_(n), e_(n * n, FieldElem::zero(field_)) {}

Mat::Mat(Field f, std::size_t n, std::vector<FieldElem> entries) : field_(std::move(f)), n_(n), e_(std::move(entries)) {
    if (e_.size() != n_ * n_) throw DimensionMismatch("matrix needs n*n entries");
    for (const auto& v : e_)
        if (!same_field(v.field(), field_)) throw FieldMismatch("matrix entry from another field");
}

Mat Mat::identity(const Field& f, std::size_t n) {
    Mat m(f, n);
    for (std::size_t i = 0; i < n; ++i) m.e_[i * n + i] = FieldElem::one(f);
    return m;
}

Mat Mat::from_ints(const Field& f, std::size_t n, const std::vector<std::int64_t>& values) {
    if (values.size() != n * n) throw DimensionMismatch("matrix needs n*n entries");
    std::vector<FieldElem> e;
    e.reserve(values.size());
    for (auto v : values) e.push_back(FieldElem::from_int(f, v));
    return Mat(f, n, std::move(e));
}

Mat Mat::from_codes(const Field& f, std::size_t n, const std::vector<Natural>& codes) {
    if (codes.size() != n * n) throw DimensionMismatch("matrix needs n*n entries");
    std::vector<FieldElem> e;
    e.reserve(codes.size());
    for (const auto& c : codes) e.push_back(FieldElem::from_canonical(f, c));
    return Mat(f, n, std::move(e));
}

void Mat::set(std::size_t i, std::size_t j, FieldElem v) {
    if (!same_field(v.field(), field_)) throw FieldMismatch("matrix entry from another field");
    e_.at(i * n_ + j) = std::move(v);
}

Mat Mat::transpose() const {
    Mat t(field_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t.e_[j * n_ + i] = e_[i * n_ + j];
    return t;
}

bool Mat::is_identity() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            const FieldElem& v = e_[i * n_ + j];
            if (i == j ? !v.is_one() : !v.is_zero()) return false;
        }
    return true;
}

Vec Mat::row(std::size_t i) const { return Vec(e_.begin() + static_cast<long>(i * n_), e_.begin() + static_cast<long>((i + 1) * n_)); }

Vec Mat::column(std::size_t j) const {
    Vec c;
    c.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) c.push_back(e_[i * n_ + j]);
    return c;
}

void Mat::check_compatible(const Mat& o) const {
    if (n_ != o.n_) throw DimensionMismatch("matrix dimensions differ");
    if (!same_field(field_, o.field_)) throw FieldMismatch("matrices over different fields");
}

Mat operator*(const Mat& a, const Mat& b) {
    a.check_compatible(b);
    const std::size_t n = a.n_;
    Mat c(a.field_, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const FieldElem& aik = a.e_[i * n + k];
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const FieldElem& bkj = b.e_[k * n + j];
                if (!bkj.is_zero()) c.e_[i * n + j] += aik * bkj;
            }
        }
    return c;
}

Vec operator*(const Mat& a, const Vec& v) {
    if (v.size() != a.n_) throw DimensionMismatch("vector length differs from matrix dimension");
    Vec out(a.n_, FieldElem::zero(a.field_));
    for (std::size_t i = 0; i < a.n_; ++i)
        for (std::size_t j = 0; j < a.n_; ++j)
            if (!a.e_[i * a.n_ + j].is_zero() && !v[j].is_zero()) out[i] += a.e_[i * a.n_ + j] * v[j];
    return out;
}

Mat operator+(const Mat& a, const Mat& b) {
    a.check_compatible(b);
    Mat c = a;
    for (std::size_t i = 0; i < c.e_.size(); ++i) c.e_[i] += b.e_[i];
    return c;
}

Mat operator-(const Mat& a, const Mat& b) {
    a.check_compatible(b);
    Mat c = a;
    for (std::size_t i = 0; i < c.e_.size(); ++i) c.e_[i] -= b.e_[i];
    return c;
}

Mat operator*(const FieldElem& s, const Mat& a) {
    Mat c = a;
    for (auto& v : c.e_) v *= s;
    return c;
}

bool operator==(const Mat& a, const Mat& b) {
    return a.n_ == b.n_ && same_field(a.field_, b.field_) && a.e_ == b.e_;
}

std::vector<Natural> Mat::codes() const {
    std::vector<Natural> out;
    out.reserve(e_.size());
    for (const auto& v : e_) out.push_back(v.canonical());
    return out;
}

Mat mat_mul(const Mat& a, const Mat& b) { return a * b; }

Mat pow(const Mat& a, const Natural& e) {
    Mat result = Mat::identity(a.field(), a.n());
    for (unsigned i = e.bit_length(); i-- > 0;) {
        result = result * result;
        if (bit_test(e.raw(), i)) result = result * a;
    }
    return result;
}

FieldElem determinant(const Mat& a) {
    const std::size_t n = a.n();
    std::vector<FieldElem> m = a.entries();
    FieldElem det = FieldElem::one(a.field());
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv * n + col].is_zero()) ++piv;
        if (piv == n) return FieldElem::zero(a.field());
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m[piv * n + j], m[col * n + j]);
            det = -det;
        }
        const FieldElem pivot = m[col * n + col];
        det *= pivot;
        const FieldElem inv = pivot.inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r * n + col].is_zero()) continue;
            const FieldElem factor = m[r * n + col] * inv;
            for (std::size_t j = col; j < n; ++j) m[r * n + j] -= factor * m[col * n + j];
        }
    }
    return det;
}

Mat inverse(const Mat& a) {
    const std::size_t n = a.n();
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i) {
        Vec r = a.row(i);
        for (std::size_t j = 0; j < n; ++j) r.push_back(i == j ? FieldElem::one(a.field()) : FieldElem::zero(a.field()));
        rows.push_back(std::move(r));
    }
    rows = row_reduce(std::move(rows));
    std::vector<FieldElem> e;
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= rows.size() || !rows[i][i].is_one()) throw Singular("matrix is singular");
        e.insert(e.end(), rows[i].begin() + static_cast<long>(n), rows[i].end());
    }
    return Mat(a.field(), n, std::move(e));
}

Poly char_poly(const Mat& a) {
    const std::size_t n = a.n();
    const Field& f = a.field();
    std::vector<FieldElem> h = a.entries();
    auto H = [&](std::size_t i, std::size_t j) -> FieldElem& { return h[i * n + j]; };

    // Similarity transforms to upper Hessenberg form.
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t i = m;
        while (i < n && H(i, m - 1).is_zero()) ++i;
        if (i == n) continue;
        if (i != m) {
            for (std::size_t j = 0; j < n; ++j) std::swap(H(i, j), H(m, j));
            for (std::size_t j = 0; j < n; ++j) std::swap(H(j, i), H(j, m));
        }
        const FieldElem inv = H(m, m - 1).inverse();
        for (std::size_t r = m + 1; r < n; ++r) {
            if (H(r, m - 1).is_zero()) continue;
            const FieldElem u = H(r, m - 1) * inv;
            for (std::size_t j = 0; j < n; ++j) H(r, j) -= u * H(m, j);
            for (std::size_t j = 0; j < n; ++j) H(j, m) += u * H(j, r);
        }
    }

    // p_m = (t - h_mm) p_{m-1} - sum_i h_{m-i,m} (prod of subdiagonal) p_{m-i-1}
    const Poly t = Poly::t(f);
    std::vector<Poly> p{Poly::constant(FieldElem::one(f))};
    for (std::size_t m = 1; m <= n; ++m) {
        Poly pm = (t - Poly::constant(H(m - 1, m - 1))) * p[m - 1];
        FieldElem prod = FieldElem::one(f);
        for (std::size_t i = 1; i < m; ++i) {
            prod *= H(m - i, m - i - 1);
            if (prod.is_zero()) break;
            pm -= p[m - i - 1] * (prod * H(m - i - 1, m - 1));
        }
        p.push_back(std::move(pm));
    }
    return p[n];
}

Mat eval_poly(const Poly& f, const Mat& a) {
    Mat acc(a.field(), a.n());
    const Mat id = Mat::identity(a.field(), a.n());
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * a + (*it) * id;
    return acc;
}

Mat companion(const Poly& f) {
    if (!f.is_monic() || f.degree() < 1) throw NotMonic("companion matrix needs a monic polynomial of positive degree");
    const auto n = static_cast<std::size_t>(f.degree());
    Mat c(f.field(), n);
    for (std::size_t i = 1; i < n; ++i) c.set(i, i - 1, FieldElem::one(f.field()));
    for (std::size_t i = 0; i < n; ++i) c.set(i, n - 1, -f.coeffs()[i]);
    return c;
}

std::vector<Vec> row_reduce(std::vector<Vec> rows) {
    if (rows.empty()) return rows;
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        const FieldElem inv = rows[r][col].inverse();
        for (auto& v : rows[r]) v *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col].is_zero()) continue;
            const FieldElem factor = rows[i][col];
            for (std::size_t j = col; j < ncols; ++j) rows[i][j] -= factor * rows[r][j];
        }
        ++r;
    }
    rows.resize(r, rows[0]);
    return rows;
}

std::vector<Vec> nullspace(const std::vector<Vec>& rows, std::size_t ncols) {
    if (rows.empty()) throw InvalidArgument("nullspace of an empty row set needs a field");
    const Field& f = rows[0][0].field();
    const std::vector<Vec> rref = row_reduce(rows);
    std::vector<std::size_t> pivots;
    for (const auto& r : rref) {
        std::size_t j = 0;
        while (r[j].is_zero()) ++j;
        pivots.push_back(j);
    }
    std::vector<Vec> basis;
    std::size_t next_pivot = 0;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (next_pivot < pivots.size() && pivots[next_pivot] == free) {
            ++next_pivot;
            continue;
        }
        Vec v(ncols, FieldElem::zero(f));
        v[free] = FieldElem::one(f);
        for (std::size_t i = 0; i < rref.size(); ++i) v[pivots[i]] = -rref[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vec> kernel(const Mat& a) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < a.n(); ++i) rows.push_back(a.row(i));
    return nullspace(rows, a.n());
}

std::size_t rank(const Mat& a) { return a.n() - kernel(a).size(); }

Factorization order_bound(const Mat& a) {
    const Field& f = a.field();
    const Natural p(f->p());
    const Natural& q = f->size();
    std::set<unsigned> degrees;
    for (const auto& comp : poly::distinct_degree_split(char_poly(a))) degrees.insert(comp.degree);
    // Unipotent part: Jordan blocks of size <= n have order dividing p^e, p^e >= n.
    unsigned e = 0;
    for (Natural pe(1); pe < Natural(a.n()); pe *= p) ++e;
    Factorization bound;
    if (e > 0) bound.factors.push_back({p, e});
    for (unsigned d : degrees) bound = arith::lcm(bound, arith::factor(arith::pow(q, d) - Natural(1)));
    return bound;
}

Natural element_order(const Mat& a) {
    if (determinant(a).is_zero()) throw Singular("element_order of a singular matrix");
    const Factorization bound = order_bound(a);
    Natural n = bound.value();
    if (!pow(a, n).is_identity()) throw Error("order bound does not annihilate the matrix");
    for (const auto& pp : bound.factors) {
        for (unsigned i = 0; i < pp.exponent; ++i) {
            const Natural candidate = n / pp.prime;
            if (!pow(a, candidate).is_identity()) break;
            n = candidate;
        }
    }
    return n;
}

// ---------------------------------------------------------------------------
// Words

namespace {

// (generator, exponent): x -> (0, 1), y -> (1, 1), y^2 -> (1, 2)
std::vector<Letter> normalize(const std::vector<std::pair<int, int>>& raw) {
    std::vector<std::pair<int, int>> stack;
    for (auto [gen, e] : raw) {
        const int mod = gen == 0 ? 2 : 3;
        e %= mod;
        if (e == 0) continue;
        if (!stack.empty() && stack.back().first == gen) {
            stack.back().second = (stack.back().second + e) % mod;
            if (stack.back().second == 0) stack.pop_back();
        } else {
            stack.emplace_back(gen, e);
        }
    }
    std::vector<Letter> out;
    for (auto [gen, e] : stack) out.push_back(gen == 0 ? Letter::X : e == 1 ? Letter::Y : Letter::Y2);
    return out;
}

class WordParser {
public:
    explicit WordParser(std::string_view s) : s_(s) {}

    std::vector<std::pair<int, int>> parse() {
        auto w = sequence();
        skip_space();
        if (pos_ != s_.size()) fail("unexpected character");
        return w;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw WordSyntaxError(what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }
    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    int exponent() {
        skip_space();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            skip_space();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            return std::stoi(std::string(s_.substr(start, pos_ - start)));
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return std::stoi(std::string(s_.substr(start, pos_ - start)));
        }
        return 1;
    }
    std::vector<std::pair<int, int>> sequence() {
        std::vector<std::pair<int, int>> out;
        for (;;) {
            skip_space();
            if (pos_ >= s_.size() || s_[pos_] == ')') return out;
            const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(s_[pos_])));
            if (c == 'x' || c == 'y') {
                ++pos_;
                out.emplace_back(c == 'x' ? 0 : 1, exponent());
            } else if (c == '(') {
                ++pos_;
                auto inner = sequence();
                skip_space();
                if (pos_ >= s_.size() || s_[pos_] != ')') fail("missing ')'");
                ++pos_;
                const int k = exponent();
                for (int i = 0; i < k; ++i) out.insert(out.end(), inner.begin(), inner.end());
            } else {
                fail("unexpected character");
            }
        }
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

GenWord::GenWord(std::vector<Letter> letters) {
    std::vector<std::pair<int, int>> raw;
    for (Letter l : letters) raw.emplace_back(l == Letter::X ? 0 : 1, l == Letter::Y2 ? 2 : 1);
    letters_ = normalize(raw);
    if (letters_.empty()) throw WordSyntaxError("word reduces to the identity");
}

GenWord GenWord::parse(std::string_view text) {
    const auto raw = WordParser(text).parse();
    std::vector<Letter> letters = normalize(raw);
    if (letters.empty()) throw WordSyntaxError("word '" + std::string(text) + "' reduces to the identity");
    return GenWord(std::move(letters));
}

std::string GenWord::to_string() const {
    std::string s;
    for (Letter l : letters_) s += l == Letter::X ? "x" : l == Letter::Y ? "y" : "y^2";
    return s;
}

Mat eval_word(const GenWord& w, const Mat& x, const Mat& y) {
    if (x.n() != y.n()) throw DimensionMismatch("generators have different dimensions");
    if (!same_field(x.field(), y.field())) throw FieldMismatch("generators over different fields");
    const Mat y2 = y * y;
    Mat acc = Mat::identity(x.field(), x.n());
    for (Letter l : w.letters()) acc = acc * (l == Letter::X ? x : l == Letter::Y ? y : y2);
    return acc;
}

}  // namespace slgen::matrix
