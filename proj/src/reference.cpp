#include "sympow/kernels.hpp"

namespace sympow::reference {

RrefResult rref_serial(const ExactMatrix& input)
{
    ExactMatrix m = input;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && m(sel, c).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        m.swap_rows(r, sel);
        const FieldElement inv = f_inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const FieldElement factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {r, std::move(pivots), std::move(m)};
}

}  // namespace sympow::reference
