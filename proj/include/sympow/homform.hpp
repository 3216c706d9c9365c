#ifndef SYMPOW_HOMFORM_HPP
#define SYMPOW_HOMFORM_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sympow/field.hpp"

namespace sympow {

/// Exponent triple (e_x, e_y, e_z).
using Exponent = std::array<unsigned, 3>;

enum class Var { x = 0, y = 1, z = 2 };

/// Strict "greater than" in graded reverse lexicographic order with x > y > z.
bool grevlex_greater(const Exponent& a, const Exponent& b);

struct GrevlexDescending {
    bool operator()(const Exponent& a, const Exponent& b) const { return grevlex_greater(a, b); }
};

/// All exponent triples of total degree d, largest first in grevlex order.
std::vector<Exponent> monomial_basis(unsigned d);

/// Position of e inside monomial_basis(e_x + e_y + e_z).
std::size_t monomial_index(const Exponent& e);

inline std::size_t monomial_count(unsigned d) { return std::size_t(d + 1) * (d + 2) / 2; }

class HomForm;

/// Projective point with the last nonzero coordinate scaled to 1.
class PointP2 {
public:
    PointP2(FieldElement x, FieldElement y, FieldElement z);

    const FieldElement& operator[](std::size_t i) const { return coords_[i]; }
    const std::array<FieldElement, 3>& coords() const { return coords_; }
    const FieldPtr& field() const { return coords_[0].field(); }

    friend bool operator==(const PointP2& a, const PointP2& b);
    /// Total order on normalized coordinates, used for deduplication.
    friend bool operator<(const PointP2& a, const PointP2& b);

    std::string str() const;

private:
    std::array<FieldElement, 3> coords_;
};

/// Sparse homogeneous form in x, y, z.
class HomForm {
public:
    using Terms = std::map<Exponent, FieldElement, GrevlexDescending>;

    HomForm(FieldPtr field, unsigned degree);
    HomForm(FieldPtr field, unsigned degree, Terms terms);

    static HomForm monomial(FieldPtr field, const Exponent& e, const FieldElement& c);
    static HomForm variable(FieldPtr field, Var v);
    /// a*x + b*y + c*z.
    static HomForm linear(const FieldElement& a, const FieldElement& b, const FieldElement& c);
    /// Dense coefficient vector on monomial_basis(degree).
    static HomForm from_dense(FieldPtr field, unsigned degree, const std::vector<FieldElement>& coeffs);

    const FieldPtr& field() const { return field_; }
    unsigned degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    FieldElement coeff(const Exponent& e) const;
    std::vector<FieldElement> dense() const;

    HomForm operator-() const;
    HomForm& operator+=(const HomForm& rhs);
    HomForm& operator-=(const HomForm& rhs);
    HomForm& operator*=(const FieldElement& c);

    friend HomForm operator+(HomForm a, const HomForm& b) { return a += b; }
    friend HomForm operator-(HomForm a, const HomForm& b) { return a -= b; }
    friend HomForm operator*(const HomForm& a, const HomForm& b);
    friend HomForm operator*(HomForm a, const FieldElement& c) { return a *= c; }
    friend bool operator==(const HomForm& a, const HomForm& b);

    /// Multiplies by a monomial x^e.
    HomForm shifted(const Exponent& e) const;

    std::string str() const;

private:
    FieldPtr field_;
    unsigned degree_;
    Terms terms_;
};

HomForm p_add(const HomForm& f, const HomForm& g);
HomForm p_mul(const HomForm& f, const HomForm& g);
HomForm p_diff(const HomForm& f, Var v);
FieldElement p_eval(const HomForm& f, const PointP2& p);

/// Applies the partial derivative d^alpha (alpha an exponent triple).
HomForm p_diff(const HomForm& f, const Exponent& alpha);

/// Product of a list of forms (the empty product is the constant 1).
HomForm product(FieldPtr field, const std::vector<HomForm>& forms);

/// Where a linear form comes from inside a line arrangement.
struct LineProvenance {
    int first = -1;
    int second = -1;
    bool tangent = false;
};

/// Nonzero degree-1 form.
class LinearForm {
public:
    explicit LinearForm(HomForm form, std::optional<LineProvenance> provenance = std::nullopt);

    const HomForm& form() const { return form_; }
    const std::optional<LineProvenance>& provenance() const { return provenance_; }
    FieldElement coefficient(Var v) const { return form_.coeff(unit(v)); }
    std::array<FieldElement, 3> coefficients() const;

    static Exponent unit(Var v);

private:
    HomForm form_;
    std::optional<LineProvenance> provenance_;
};

}  // namespace sympow

#endif  // SYMPOW_HOMFORM_HPP
