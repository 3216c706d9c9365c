#include "sympow/render.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

namespace sympow {

namespace {

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    std::string s(buf);
    if (s == "-0.0000") s = "0.0000";
    return s;
}

double real_part(const FieldElement& x) { return static_cast<double>(f_embed(x).value.real()); }

/// Line coefficients scaled so the first nonzero one is 1, then checked
/// against complex conjugation.
std::array<double, 3> real_coefficients(const LinearForm& l)
{
    auto c = l.coefficients();
    std::size_t lead = 0;
    while (c[lead].is_zero()) ++lead;
    const FieldElement inv = f_inv(c[lead]);
    for (auto& x : c) x *= inv;
    if (!l.form().field()->real_embedding()) {
        for (const auto& x : c) {
            bool real = false;
            try {
                real = f_conjugate(x) == x;
            } catch (const AlgebraError&) {
            }
            if (!real)
                throw RenderError("line " + l.form().str() + " is not defined over the reals; the arrangement has no "
                                  "real picture");
        }
    }
    return {real_part(c[0]), real_part(c[1]), real_part(c[2])};
}

struct Segment {
    double x0, y0, x1, y1;
};

/// Liang-Barsky clip of a x + b y + c = 0 against [-w, w]^2.
std::optional<Segment> clip(const std::array<double, 3>& l, double w)
{
    const double a = l[0], b = l[1], c = l[2];
    const double nn = a * a + b * b;
    if (nn == 0) return std::nullopt;  // line at infinity
    const double norm = std::sqrt(nn);
    const double px = -c * a / nn, py = -c * b / nn;
    const double dx = -b / norm, dy = a / norm;
    double t0 = -4 * w - std::abs(c) / norm, t1 = -t0;
    const double p[4] = {-dx, dx, -dy, dy};
    const double q[4] = {px + w, w - px, py + w, w - py};
    for (int i = 0; i < 4; ++i) {
        if (p[i] == 0) {
            if (q[i] < 0) return std::nullopt;
            continue;
        }
        const double t = q[i] / p[i];
        if (p[i] < 0)
            t0 = std::max(t0, t);
        else
            t1 = std::min(t1, t);
    }
    if (t0 >= t1) return std::nullopt;
    return Segment{px + t0 * dx, py + t0 * dy, px + t1 * dx, py + t1 * dy};
}

std::optional<std::pair<double, double>> affine(const PointP2& p)
{
    if (p[2].is_zero()) return std::nullopt;
    const FieldElement zi = f_inv(p[2]);
    return std::make_pair(real_part(p[0] * zi), real_part(p[1] * zi));
}

}  // namespace

std::string render_svg(const Dataset& ds, const RenderOptions& opts)
{
    std::vector<std::array<double, 3>> coeffs;
    for (const auto& l : ds.lines) coeffs.push_back(real_coefficients(l));

    const double w = opts.half_width;
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\" viewBox=\""
        << fmt(-w) << ' ' << fmt(-w) << ' ' << fmt(2 * w) << ' ' << fmt(2 * w) << "\">\n";
    out << "<title>" << ds.name << ", " << ds.lines.size() << " lines</title>\n";
    out << "<rect x=\"" << fmt(-w) << "\" y=\"" << fmt(-w) << "\" width=\"" << fmt(2 * w) << "\" height=\""
        << fmt(2 * w) << "\" fill=\"white\"/>\n";
    out << "<circle cx=\"0.0000\" cy=\"0.0000\" r=\"1.0000\" fill=\"none\" stroke=\"#888888\" stroke-width=\"0.0100\"/>\n";
    out << "<g stroke=\"black\" stroke-width=\"0.0120\">\n";
    // SVG y grows downwards, so every y coordinate is negated.
    for (const auto& c : coeffs) {
        if (auto s = clip(c, w))
            out << "<line x1=\"" << fmt(s->x0) << "\" y1=\"" << fmt(-s->y0) << "\" x2=\"" << fmt(s->x1) << "\" y2=\""
                << fmt(-s->y1) << "\"/>\n";
    }
    out << "</g>\n";

    if (opts.show_ordinary) {
        out << "<g fill=\"#c03030\">\n";
        for (const auto& cl : classify_intersections(ds.lines).clusters) {
            if (cl.lines.size() != 2) continue;
            if (auto p = affine(cl.point))
                out << "<circle cx=\"" << fmt(p->first) << "\" cy=\"" << fmt(-p->second) << "\" r=\""
                    << fmt(1.6 * opts.dot_radius) << "\"/>\n";
        }
        out << "</g>\n";
    }
    out << "<g fill=\"black\">\n";
    for (const auto& pt : ds.points) {
        if (auto p = affine(pt))
            out << "<circle cx=\"" << fmt(p->first) << "\" cy=\"" << fmt(-p->second) << "\" r=\""
                << fmt(opts.dot_radius) << "\"/>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace sympow
