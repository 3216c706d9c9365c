#ifndef SYMPOW_RENDER_HPP
#define SYMPOW_RENDER_HPP

#include <string>

#include "sympow/datasets.hpp"

namespace sympow {

struct RenderOptions {
    double half_width = 2.2;  ///< viewbox is [-w, w]^2 in the affine chart z = 1
    double dot_radius = 0.035;
    bool show_ordinary = false;  ///< also mark points where exactly two lines cross
};

/// The arrangement cannot be drawn in the real plane.
class RenderError : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

/// SVG 1.1 drawing: unit circle, lines clipped to the viewbox, the dataset
/// points as filled dots. Output is a pure function of the inputs.
std::string render_svg(const Dataset& ds, const RenderOptions& opts = {});

}  // namespace sympow

#endif  // SYMPOW_RENDER_HPP
