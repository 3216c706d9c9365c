#ifndef SYMPOW_EXACTLA_HPP
#define SYMPOW_EXACTLA_HPP

#include <span>
#include <vector>

#include "sympow/field.hpp"

namespace sympow {

using Vector = std::vector<FieldElement>;

/// Dense row-major matrix over a number field.
class ExactMatrix {
public:
    ExactMatrix(FieldPtr field, std::size_t rows, std::size_t cols);
    static ExactMatrix from_rows(FieldPtr field, std::size_t cols, const std::vector<Vector>& rows);
    static ExactMatrix identity(FieldPtr field, std::size_t n);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const FieldElement& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<FieldElement> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
    std::span<const FieldElement> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
    Vector row_vector(std::size_t r) const;

    void swap_rows(std::size_t a, std::size_t b);
    ExactMatrix transposed() const;

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElement> entries_;
};

FieldElement dot(std::span<const FieldElement> a, std::span<const FieldElement> b);

enum class Elimination {
    automatic,      ///< fraction-free over Q, normalized Gauss over extensions
    fraction_free,  ///< Bareiss forward pass, then back substitution
    gauss,          ///< Gauss-Jordan with unit pivots
};

struct RrefResult {
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    ExactMatrix reduced;
};

/// Reduced row echelon form. Pivots are the first nonzero entry in column
/// order, so the result is unique and independent of the elimination route.
RrefResult rref(const ExactMatrix& m, Elimination how = Elimination::automatic);

/// Null space basis {v : M v = 0}, one vector per free column.
std::vector<Vector> kernel(const ExactMatrix& m);

/// Nonzero rows of the reduced echelon form.
std::vector<Vector> row_basis(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

struct SpanWitness {
    enum class Tag { member, non_member };
    Tag tag;
    Vector combination;  ///< coefficients on span rows, for members
    Vector dual;         ///< functional killing the span, normalized so dual(target) = 1

    bool member() const { return tag == Tag::member; }
};

/// Decides whether target lies in the row space of span_rows. The returned
/// witness is re-verified exactly before it is handed back.
SpanWitness span_decide(const Vector& target, const ExactMatrix& span_rows);

/// Incrementally grown row space. Each stored row has a unit pivot and is
/// reduced against the rows inserted before it.
class EchelonSpan {
public:
    EchelonSpan(FieldPtr field, std::size_t cols) : field_(std::move(field)), cols_(cols) {}

    /// Adds v when it is independent of the span; returns whether it was added.
    bool insert(Vector v);
    bool contains(const Vector& v) const;
    /// Remainder of v after reduction by the stored rows.
    Vector reduce(Vector v) const;
    std::size_t rank() const { return rows_.size(); }

private:
    FieldPtr field_;
    std::size_t cols_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

/// True when both matrices have the same row space.
bool same_row_space(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace sympow

#endif  // SYMPOW_EXACTLA_HPP
