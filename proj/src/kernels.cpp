#include "sympow/kernels.hpp"

namespace sympow::kernels {

void gauss_eliminate(ExactMatrix& m, std::size_t pivot_row, std::size_t col, std::size_t begin, std::size_t end)
{
    const auto pivot = m.row(pivot_row);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t ii = static_cast<std::ptrdiff_t>(begin); ii < static_cast<std::ptrdiff_t>(end); ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        if (i == pivot_row) continue;
        auto row = m.row(i);
        if (row[col].is_zero()) continue;
        const FieldElement factor = row[col];
        for (std::size_t j = col; j < m.cols(); ++j) {
            if (pivot[j].is_zero()) continue;
            row[j] -= factor * pivot[j];
        }
    }
}

void bareiss_step(ExactMatrix& m, std::size_t pivot_row, std::size_t col, const FieldElement& prev)
{
    const auto pivot = m.row(pivot_row);
    const FieldElement p = pivot[col];
    const bool unit_prev = prev.is_one();
    const FieldElement prev_inv = unit_prev ? prev : f_inv(prev);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t ii = static_cast<std::ptrdiff_t>(pivot_row + 1); ii < static_cast<std::ptrdiff_t>(m.rows());
         ++ii) {
        auto row = m.row(static_cast<std::size_t>(ii));
        const FieldElement lead = row[col];
        for (std::size_t j = col + 1; j < m.cols(); ++j) {
            FieldElement v = p * row[j];
            if (!lead.is_zero() && !pivot[j].is_zero()) v -= lead * pivot[j];
            if (!unit_prev) v *= prev_inv;
            row[j] = std::move(v);
        }
        row[col] = FieldElement(m.field());
    }
}

void clear_denominators(ExactMatrix& m)
{
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(m.rows()); ++ii) {
        auto row = m.row(static_cast<std::size_t>(ii));
        mpz_class lcm = 1;
        for (const auto& e : row)
            for (const auto& c : e.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
        if (lcm == 1) continue;
        const Rational scale(lcm);
        for (auto& e : row) e *= scale;
    }
}

}  // namespace sympow::kernels
