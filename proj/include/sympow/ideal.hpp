#ifndef SYMPOW_IDEAL_HPP
#define SYMPOW_IDEAL_HPP

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "sympow/exactla.hpp"
#include "sympow/homform.hpp"

namespace sympow {

/// Finite point set with a uniform vanishing multiplicity.
struct FatPointScheme {
    FieldPtr field;
    std::vector<PointP2> points;
    unsigned multiplicity = 1;

    FatPointScheme with_multiplicity(unsigned m) const { return {field, points, m}; }
};

FatPointScheme make_scheme(FieldPtr field, std::vector<PointP2> points, unsigned multiplicity);

/// Linearly independent forms spanning a degree-d piece of an ideal.
struct GradedBasis {
    FieldPtr field;
    unsigned degree = 0;
    std::vector<HomForm> basis;

    std::size_t dim() const { return basis.size(); }
    /// Rows are dense coefficient vectors on monomial_basis(degree).
    ExactMatrix matrix() const;
    static GradedBasis from_rows(FieldPtr field, unsigned degree, const std::vector<Vector>& rows);
};

bool same_span(const GradedBasis& a, const GradedBasis& b);

/// Forms of degree d whose partial derivatives of order < m vanish at every point.
GradedBasis fat_piece(const FatPointScheme& scheme, unsigned d);

struct SymbolicReport {
    bool member = false;
    /// Vanishing order at each point, capped at the scheme multiplicity.
    std::vector<unsigned> orders;
};

SymbolicReport symbolic_member(const HomForm& f, const FatPointScheme& scheme);

std::vector<std::size_t> hilbert_function(const FatPointScheme& scheme, unsigned max_degree);

/// Span of monomial multiples of the given forms in degree d.
GradedBasis ideal_piece(FieldPtr field, const std::vector<HomForm>& generators, unsigned d);

/// Minimal generators of the ideal of a fat point scheme up to a degree bound.
struct IdealPresentation {
    FieldPtr field;
    std::vector<HomForm> generators;  ///< ascending degree
    std::optional<unsigned> gamma;    ///< least generator degree, if any generator exists
    unsigned complete_to = 0;
    std::vector<std::size_t> hilbert;  ///< dim I_d for d = 0..complete_to
};

IdealPresentation min_generators(const FatPointScheme& scheme, unsigned max_degree);

/// Thrown when a presentation is not certified far enough to span a piece.
class CompletenessError : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

/// Degree-d piece of the r-th power of the ideal, spanned by monomial times
/// r-fold generator products. Refuses when complete_to < d - gamma (r - 1).
GradedBasis power_piece(const IdealPresentation& pres, unsigned r, unsigned d);

struct DegreeVerdict {
    unsigned degree = 0;
    std::size_t symbolic_dim = 0;
    std::size_t power_dim = 0;
    bool contained = true;
    std::optional<HomForm> witness;
};

struct ContainmentReport {
    unsigned m = 0;
    unsigned r = 0;
    std::vector<DegreeVerdict> degrees;
    IdealPresentation presentation;

    bool holds() const;
    std::optional<unsigned> first_failure() const;
};

/// Degreewise test of I^(m) in I^r for min_degree <= d <= max_degree, I the
/// ideal of the points.
ContainmentReport containment_check(const FatPointScheme& points, unsigned m, unsigned r, unsigned max_degree,
                                    unsigned min_degree = 0);

/// Generators {F, F_x, F_y, F_z}.
std::vector<HomForm> jacobian_ideal(const HomForm& f);

/// The generators followed by all their nonzero first partials.
std::vector<HomForm> derivative_closure(const std::vector<HomForm>& generators);

/// Memoized graded pieces of the ideal generated by a list of forms.
class GeneratedIdeal {
public:
    GeneratedIdeal(FieldPtr field, std::vector<HomForm> generators);

    const GradedBasis& piece(unsigned d) const;
    const std::vector<HomForm>& generators() const { return generators_; }
    const FieldPtr& field() const { return field_; }
    unsigned max_generator_degree() const;

private:
    FieldPtr field_;
    std::vector<HomForm> generators_;
    mutable std::map<unsigned, GradedBasis> cache_;
};

using PieceSource = std::function<const GradedBasis&(unsigned)>;

struct SaturationResult {
    GradedBasis basis;
    unsigned depth = 0;   ///< t at which the answer was accepted
    unsigned start = 0;   ///< first t examined
};

class SaturationError : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

/// { f of degree d : m f lies in piece(d + t) for every monomial m of degree t },
/// increasing t from t_start until the dimension is unchanged for `window`
/// consecutive values. Gives up after t_start + t_max.
SaturationResult truncated_saturation(const PieceSource& piece, FieldPtr field, unsigned d, unsigned window = 2,
                                      unsigned t_max = 8, unsigned t_start = 0);

/// Saturation of the ideal generated by `ideal`, examining t only from the
/// point where every generator contributes to degree d + t.
SaturationResult saturate_generated(const GeneratedIdeal& ideal, unsigned d, unsigned window = 2, unsigned t_max = 8);

}  // namespace sympow

#endif  // SYMPOW_IDEAL_HPP
