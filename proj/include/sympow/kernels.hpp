#ifndef SYMPOW_KERNELS_HPP
#define SYMPOW_KERNELS_HPP

// OpenMP row kernels behind the elimination routines. Each row update only
// reads the pivot row and writes its own row, so results are bit-identical
// for every thread count.

#include "sympow/exactla.hpp"

namespace sympow::kernels {

/// rows [begin, end) except `pivot_row`: row_i -= row_i[col] * pivot_row,
/// assuming the pivot entry is 1. Columns before `col` are untouched.
void gauss_eliminate(ExactMatrix& m, std::size_t pivot_row, std::size_t col, std::size_t begin, std::size_t end);

/// One Bareiss step for rows [pivot_row + 1, rows):
/// row_i = (p * row_i - row_i[col] * pivot_row) / prev on columns > col.
void bareiss_step(ExactMatrix& m, std::size_t pivot_row, std::size_t col, const FieldElement& prev);

/// Multiplies each row by the common denominator of its entries.
void clear_denominators(ExactMatrix& m);

/// Builds the stacked matrix of rows produced by `make_rows(i)` for i < count,
/// evaluating the producers in parallel and concatenating in index order.
template <class Producer>
std::vector<Vector> gather_rows(std::size_t count, Producer&& make_rows)
{
    std::vector<std::vector<Vector>> parts(count);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i)
        parts[static_cast<std::size_t>(i)] = make_rows(static_cast<std::size_t>(i));
    std::vector<Vector> out;
    for (auto& p : parts)
        for (auto& r : p) out.push_back(std::move(r));
    return out;
}

}  // namespace sympow::kernels

namespace sympow::reference {

/// Textbook serial Gauss-Jordan elimination with field division, kept as the
/// baseline the parallel kernels are tested and benchmarked against.
RrefResult rref_serial(const ExactMatrix& m);

}  // namespace sympow::reference

#endif  // SYMPOW_KERNELS_HPP
