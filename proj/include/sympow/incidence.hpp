#ifndef SYMPOW_INCIDENCE_HPP
#define SYMPOW_INCIDENCE_HPP

#include <array>
#include <map>
#include <span>
#include <vector>

#include "sympow/homform.hpp"

namespace sympow {

enum class FieldMode { compact, cyclotomic };

/// n lines L_i through P_i and P_{n/2 - 2i} on the unit circle, indices mod n.
struct Arrangement {
    FieldPtr field;
    int n = 0;
    FieldMode mode = FieldMode::cyclotomic;
    std::vector<PointP2> points;
    std::vector<LinearForm> lines;
    std::vector<int> tangent_indices;

    /// Product of all line forms.
    HomForm product_form() const;
};

using IndexTriple = std::array<int, 3>;

struct TriplePointSet {
    std::vector<PointP2> points;
    std::vector<std::vector<IndexTriple>> triples;  ///< parallel to points
};

/// Number of triple points the configuration must have: 1 + floor(n(n-3)/6).
int expected_triple_count(int n);

/// Vertices of the regular n-gon on x^2 + y^2 = z^2, starting at (1:0:1).
std::vector<PointP2> fp_points(int n, FieldMode mode);

/// Line i of the configuration: the chord through P_i and P_{n/2-2i}, or the
/// tangent at P_i when the two indices coincide.
LinearForm fp_line(int i, std::span<const PointP2> points);

Arrangement build_arrangement(int n, FieldMode mode);

/// All 3-subsets {i < j < k} of Z_n with i + j + k = 0 (mod n).
std::vector<IndexTriple> concurrent_triples(int n);

/// Determinant of the coefficient matrix of three lines.
FieldElement line_determinant(const LinearForm& a, const LinearForm& b, const LinearForm& c);

/// Intersection point of two distinct lines.
PointP2 intersect(const LinearForm& a, const LinearForm& b);

bool same_line(const LinearForm& a, const LinearForm& b);

/// Triple points via the concurrency criterion, each one checked on the
/// third line; throws if the count disagrees with expected_triple_count.
TriplePointSet triple_points(const Arrangement& arr);

struct IntersectionStats {
    struct Cluster {
        PointP2 point;
        std::vector<int> lines;
    };
    std::vector<Cluster> clusters;        ///< sorted by normalized coordinates
    std::map<int, int> histogram;         ///< multiplicity -> number of points
    std::vector<int> points_per_line;     ///< points of multiplicity >= 3 on each line
    std::vector<int> crossings_per_line;  ///< all intersection points on each line

    int count(int multiplicity) const;
    std::vector<PointP2> points_with_multiplicity_at_least(int m) const;
};

/// Groups all pairwise intersections; lines must be pairwise distinct.
IntersectionStats classify_intersections(std::span<const LinearForm> lines);

struct OrdinaryReport {
    bool pencil = false;
    int ordinary_points = 0;
    /// C(s,2) - 3 - 3 floor(s(s-3)/6), reported for reference only.
    long long reference_bound = 0;
};

/// Counts ordinary (double) points of a real arrangement. Throws if some line
/// is not real or if no ordinary point exists outside the pencil case.
OrdinaryReport ordinary_point_check(std::span<const LinearForm> lines);

/// True when every coefficient is fixed by complex conjugation.
bool is_real_line(const LinearForm& l);

}  // namespace sympow

#endif  // SYMPOW_INCIDENCE_HPP
