#include "sympow/exactla.hpp"

#include "sympow/kernels.hpp"

namespace sympow {

ExactMatrix::ExactMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, FieldElement(field_))
{
}

ExactMatrix ExactMatrix::from_rows(FieldPtr field, std::size_t cols, const std::vector<Vector>& rows)
{
    ExactMatrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw AlgebraError("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) {
            require_same_field(m(i, j), rows[i][j]);
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

ExactMatrix ExactMatrix::identity(FieldPtr field, std::size_t n)
{
    ExactMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement(field, Rational(1));
    return m;
}

Vector ExactMatrix::row_vector(std::size_t r) const
{
    auto s = row(r);
    return Vector(s.begin(), s.end());
}

void ExactMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

ExactMatrix ExactMatrix::transposed() const
{
    ExactMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
        if (!(a.entries_[k] == b.entries_[k])) return false;
    return true;
}

FieldElement dot(std::span<const FieldElement> a, std::span<const FieldElement> b)
{
    if (a.size() != b.size()) throw AlgebraError("dot product of vectors with different lengths");
    if (a.empty()) throw AlgebraError("dot product of empty vectors has no field");
    FieldElement acc(a[0].field());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
    return acc;
}

namespace {

std::size_t find_pivot(const ExactMatrix& m, std::size_t from, std::size_t col)
{
    for (std::size_t i = from; i < m.rows(); ++i)
        if (!m(i, col).is_zero()) return i;
    return m.rows();
}

void normalize_row(ExactMatrix& m, std::size_t r, std::size_t col)
{
    if (m(r, col).is_one()) return;
    const FieldElement inv = f_inv(m(r, col));
    for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(r, j) *= inv;
}

RrefResult rref_gauss(ExactMatrix m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        const std::size_t sel = find_pivot(m, r, c);
        if (sel == m.rows()) continue;
        m.swap_rows(r, sel);
        normalize_row(m, r, c);
        kernels::gauss_eliminate(m, r, c, 0, m.rows());
        pivots.push_back(c);
        ++r;
    }
    return {r, std::move(pivots), std::move(m)};
}

RrefResult rref_fraction_free(ExactMatrix m)
{
    kernels::clear_denominators(m);
    std::vector<std::size_t> pivots;
    FieldElement prev(m.field(), Rational(1));
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        const std::size_t sel = find_pivot(m, r, c);
        if (sel == m.rows()) continue;
        m.swap_rows(r, sel);
        kernels::bareiss_step(m, r, c, prev);
        prev = m(r, c);
        pivots.push_back(c);
        ++r;
    }
    // Back substitution to the reduced form.
    for (std::size_t k = pivots.size(); k-- > 0;) {
        normalize_row(m, k, pivots[k]);
        kernels::gauss_eliminate(m, k, pivots[k], 0, k);
    }
    return {r, std::move(pivots), std::move(m)};
}

}  // namespace

RrefResult rref(const ExactMatrix& m, Elimination how)
{
    if (how == Elimination::automatic)
        how = m.field()->degree() == 1 ? Elimination::fraction_free : Elimination::gauss;
    return how == Elimination::fraction_free ? rref_fraction_free(m) : rref_gauss(m);
}

std::vector<Vector> kernel(const ExactMatrix& m)
{
    const RrefResult red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : red.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols(), FieldElement(m.field()));
        v[f] = FieldElement(m.field(), Rational(1));
        for (std::size_t i = 0; i < red.rank; ++i) v[red.pivots[i]] = -red.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vector> row_basis(const ExactMatrix& m)
{
    const RrefResult red = rref(m);
    std::vector<Vector> out;
    for (std::size_t i = 0; i < red.rank; ++i) out.push_back(red.reduced.row_vector(i));
    return out;
}

std::size_t rank(const ExactMatrix& m) { return rref(m).rank; }

SpanWitness span_decide(const Vector& target, const ExactMatrix& span_rows)
{
    if (target.size() != span_rows.cols()) throw AlgebraError("target length does not match span width");
    const auto& field = span_rows.field();
    const std::size_t n = target.size();

    const RrefResult red = rref(span_rows);
    Vector rem = target;
    for (std::size_t i = 0; i < red.rank; ++i) {
        const FieldElement t = rem[red.pivots[i]];
        if (t.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (!red.reduced(i, j).is_zero()) rem[j] -= t * red.reduced(i, j);
    }

    std::size_t free_col = n;
    for (std::size_t j = 0; j < n; ++j) {
        if (!rem[j].is_zero()) {
            free_col = j;
            break;
        }
    }

    SpanWitness w;
    if (free_col < n) {
        // Kernel vector of the free column: kills every span row, and pairs
        // with the remainder to rem[free_col].
        Vector lambda(n, FieldElement(field));
        lambda[free_col] = FieldElement(field, Rational(1));
        for (std::size_t i = 0; i < red.rank; ++i) lambda[red.pivots[i]] = -red.reduced(i, free_col);
        const FieldElement scale = f_inv(dot(lambda, target));
        for (auto& v : lambda) v *= scale;
        for (std::size_t i = 0; i < span_rows.rows(); ++i)
            if (!dot(lambda, span_rows.row(i)).is_zero()) throw std::logic_error("dual functional does not annihilate span");
        if (!dot(lambda, target).is_one()) throw std::logic_error("dual functional does not separate target");
        w.tag = SpanWitness::Tag::non_member;
        w.dual = std::move(lambda);
        return w;
    }

    // Member: solve span^T c = target.
    const std::size_t s = span_rows.rows();
    ExactMatrix aug(field, n, s + 1);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < n; ++j) aug(j, i) = span_rows(i, j);
    for (std::size_t j = 0; j < n; ++j) aug(j, s) = target[j];
    const RrefResult sol = rref(aug);
    Vector c(s, FieldElement(field));
    for (std::size_t i = 0; i < sol.rank; ++i) {
        if (sol.pivots[i] == s) throw std::logic_error("inconsistent membership system");
        c[sol.pivots[i]] = sol.reduced(i, s);
    }
    Vector check(n, FieldElement(field));
    for (std::size_t i = 0; i < s; ++i) {
        if (c[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) check[j] += c[i] * span_rows(i, j);
    }
    for (std::size_t j = 0; j < n; ++j)
        if (!(check[j] == target[j])) throw std::logic_error("membership combination does not reproduce target");
    w.tag = SpanWitness::Tag::member;
    w.combination = std::move(c);
    return w;
}

bool same_row_space(const ExactMatrix& a, const ExactMatrix& b)
{
    if (a.cols() != b.cols()) return false;
    const RrefResult ra = rref(a);
    const RrefResult rb = rref(b);
    if (ra.rank != rb.rank || ra.pivots != rb.pivots) return false;
    for (std::size_t i = 0; i < ra.rank; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!(ra.reduced(i, j) == rb.reduced(i, j))) return false;
    return true;
}

}  // namespace sympow

namespace sympow {

Vector EchelonSpan::reduce(Vector v) const
{
    if (v.size() != cols_) throw AlgebraError("vector length does not match span width");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const FieldElement t = v[pivots_[i]];
        if (t.is_zero()) continue;
        const Vector& row = rows_[i];
        for (std::size_t j = 0; j < cols_; ++j)
            if (!row[j].is_zero()) v[j] -= t * row[j];
    }
    return v;
}

bool EchelonSpan::insert(Vector v)
{
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < cols_ && v[p].is_zero()) ++p;
    if (p == cols_) return false;
    const FieldElement inv = f_inv(v[p]);
    for (auto& e : v)
        if (!e.is_zero()) e *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool EchelonSpan::contains(const Vector& v) const
{
    const Vector rem = reduce(v);
    for (const auto& e : rem)
        if (!e.is_zero()) return false;
    return true;
}

}  // namespace sympow
