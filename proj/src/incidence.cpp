#include "sympow/incidence.hpp"

#include <algorithm>
#include <numeric>

#include "sympow/kernels.hpp"

namespace sympow {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

FieldPtr sqrt3_field()
{
    static const FieldPtr f = make_field(UPoly{-3, 0, 1}, Complex(1.7320508075688772935L, 0), "Q(sqrt3)");
    return f;
}

std::array<FieldElement, 3> cross(const std::array<FieldElement, 3>& u, const std::array<FieldElement, 3>& v)
{
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

// Scales so the first nonzero coefficient is 1.
LinearForm monic_line(std::array<FieldElement, 3> c, LineProvenance prov)
{
    for (auto& lead : c) {
        if (lead.is_zero()) continue;
        const FieldElement inv = f_inv(lead);
        for (auto& v : c) v *= inv;
        break;
    }
    return LinearForm(HomForm::linear(c[0], c[1], c[2]), prov);
}

std::vector<PointP2> compact_points_12()
{
    const FieldPtr f = sqrt3_field();
    const FieldElement a = FieldElement::generator(f);
    auto q = [&](long p, long r) { return FieldElement(f, Rational(p, r)); };
    const FieldElement half_a = a * Rational(1, 2);
    // cos(k * 30 degrees) for k = 0..11.
    const std::array<FieldElement, 12> cosines = {q(1, 1),  half_a,   q(1, 2), q(0, 1), q(-1, 2), -half_a,
                                                  q(-1, 1), -half_a,  q(-1, 2), q(0, 1), q(1, 2),  half_a};
    std::vector<PointP2> pts;
    for (int k = 0; k < 12; ++k) pts.emplace_back(cosines[k], cosines[mod(k - 3, 12)], q(1, 1));
    return pts;
}

}  // namespace

int expected_triple_count(int n) { return 1 + (n * (n - 3)) / 6; }

HomForm Arrangement::product_form() const
{
    std::vector<HomForm> forms;
    for (const auto& l : lines) forms.push_back(l.form());
    return product(field, forms);
}

std::vector<PointP2> fp_points(int n, FieldMode mode)
{
    if (n < 6 || n % 2 != 0) throw AlgebraError("configuration size must be even and at least 6, got " + std::to_string(n));
    if (mode == FieldMode::compact) {
        if (n != 12) throw AlgebraError("compact coordinates are only shipped for n = 12");
        return compact_points_12();
    }
    const int order = std::lcm(n, 4);
    const FieldPtr f = cyclotomic_field(order);
    const FieldElement a = FieldElement::generator(f);
    const int step = order / n;
    const FieldElement two_i_inv = f_inv(f_pow(a, static_cast<unsigned>(order / 4)) * Rational(2));
    std::vector<PointP2> pts;
    for (int k = 0; k < n; ++k) {
        const FieldElement z = f_pow(a, static_cast<unsigned>(mod(k * step, order)));
        const FieldElement zinv = f_pow(a, static_cast<unsigned>(mod(-k * step, order)));
        FieldElement c = (z + zinv) * Rational(1, 2);
        FieldElement s = (z - zinv) * two_i_inv;
        pts.emplace_back(std::move(c), std::move(s), FieldElement(f, Rational(1)));
    }
    return pts;
}

LinearForm fp_line(int i, std::span<const PointP2> points)
{
    const int n = static_cast<int>(points.size());
    if (i < 0 || i >= n) throw AlgebraError("line index out of range");
    const int j = mod(n / 2 - 2 * i, n);
    const PointP2& p = points[i];
    if (j == i) {
        // Tangent to x^2 + y^2 = z^2 at (p : q : 1) is p x + q y - z.
        return LinearForm(HomForm::linear(p[0], p[1], -p[2]), LineProvenance{i, i, true});
    }
    return monic_line(cross(p.coords(), points[j].coords()), LineProvenance{i, j, false});
}

Arrangement build_arrangement(int n, FieldMode mode)
{
    Arrangement arr;
    arr.n = n;
    arr.mode = mode;
    arr.points = fp_points(n, mode);
    arr.field = arr.points.front().field();
    for (int i = 0; i < n; ++i) {
        arr.lines.push_back(fp_line(i, arr.points));
        if (mod(3 * i, n) == n / 2) arr.tangent_indices.push_back(i);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (same_line(arr.lines[i], arr.lines[j]))
                throw AlgebraError("lines " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
    return arr;
}

std::vector<IndexTriple> concurrent_triples(int n)
{
    std::vector<IndexTriple> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if ((i + j + k) % n == 0) out.push_back({i, j, k});
    return out;
}

FieldElement line_determinant(const LinearForm& a, const LinearForm& b, const LinearForm& c)
{
    const auto u = a.coefficients();
    const auto w = cross(b.coefficients(), c.coefficients());
    return u[0] * w[0] + u[1] * w[1] + u[2] * w[2];
}

bool same_line(const LinearForm& a, const LinearForm& b)
{
    const auto w = cross(a.coefficients(), b.coefficients());
    return w[0].is_zero() && w[1].is_zero() && w[2].is_zero();
}

PointP2 intersect(const LinearForm& a, const LinearForm& b)
{
    auto w = cross(a.coefficients(), b.coefficients());
    return PointP2(std::move(w[0]), std::move(w[1]), std::move(w[2]));
}

TriplePointSet triple_points(const Arrangement& arr)
{
    const auto triples = concurrent_triples(arr.n);
    std::vector<PointP2> found;
    found.reserve(triples.size());
    for (const auto& t : triples) {
        PointP2 p = intersect(arr.lines[t[0]], arr.lines[t[1]]);
        if (!p_eval(arr.lines[t[2]].form(), p).is_zero())
            throw AlgebraError("lines " + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " +
                               std::to_string(t[2]) + " are not concurrent");
        found.push_back(std::move(p));
    }
    TriplePointSet out;
    for (std::size_t k = 0; k < triples.size(); ++k) {
        auto it = std::find(out.points.begin(), out.points.end(), found[k]);
        if (it == out.points.end()) {
            out.points.push_back(found[k]);
            out.triples.push_back({triples[k]});
        } else {
            out.triples[static_cast<std::size_t>(it - out.points.begin())].push_back(triples[k]);
        }
    }
    const int expected = expected_triple_count(arr.n);
    if (static_cast<int>(out.points.size()) != expected)
        throw AlgebraError("found " + std::to_string(out.points.size()) + " triple points, expected " +
                           std::to_string(expected));
    return out;
}

int IntersectionStats::count(int multiplicity) const
{
    auto it = histogram.find(multiplicity);
    return it == histogram.end() ? 0 : it->second;
}

std::vector<PointP2> IntersectionStats::points_with_multiplicity_at_least(int m) const
{
    std::vector<PointP2> out;
    for (const auto& c : clusters)
        if (static_cast<int>(c.lines.size()) >= m) out.push_back(c.point);
    return out;
}

IntersectionStats classify_intersections(std::span<const LinearForm> lines)
{
    const int s = static_cast<int>(lines.size());
    if (s < 2) throw AlgebraError("need at least two lines");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) pairs.emplace_back(i, j);

    std::vector<std::optional<PointP2>> pts(pairs.size());
    bool duplicate = false;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(pairs.size()); ++k) {
        const auto [i, j] = pairs[static_cast<std::size_t>(k)];
        if (same_line(lines[i], lines[j])) {
#pragma omp atomic write
            duplicate = true;
            continue;
        }
        pts[static_cast<std::size_t>(k)] = intersect(lines[i], lines[j]);
    }
    if (duplicate) throw AlgebraError("arrangement contains repeated lines");

    std::map<PointP2, std::vector<int>> groups;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        auto& members = groups[*pts[k]];
        members.push_back(pairs[k].first);
        members.push_back(pairs[k].second);
    }
    IntersectionStats stats;
    stats.points_per_line.assign(s, 0);
    stats.crossings_per_line.assign(s, 0);
    for (auto& [p, members] : groups) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        const int mult = static_cast<int>(members.size());
        ++stats.histogram[mult];
        for (int l : members) {
            ++stats.crossings_per_line[l];
            if (mult >= 3) ++stats.points_per_line[l];
        }
        stats.clusters.push_back({p, members});
    }
    return stats;
}

bool is_real_line(const LinearForm& l)
{
    for (const auto& c : l.coefficients())
        if (!(f_conjugate(c) == c)) return false;
    return true;
}

OrdinaryReport ordinary_point_check(std::span<const LinearForm> lines)
{
    for (const auto& l : lines) {
        bool real = false;
        try {
            real = is_real_line(l);
        } catch (const AlgebraError&) {
            real = false;
        }
        if (!real) throw AlgebraError("line " + l.form().str() + " is not defined over the reals");
    }
    const IntersectionStats stats = classify_intersections(lines);
    const long long s = static_cast<long long>(lines.size());
    OrdinaryReport rep;
    rep.pencil = stats.clusters.size() == 1;
    rep.ordinary_points = stats.count(2);
    rep.reference_bound = s * (s - 1) / 2 - 3 - 3 * ((s * (s - 3)) / 6);
    if (!rep.pencil && rep.ordinary_points < 1)
        throw AlgebraError("real arrangement without ordinary points contradicts the dual Sylvester-Gallai theorem");
    return rep;
}

}  // namespace sympow
