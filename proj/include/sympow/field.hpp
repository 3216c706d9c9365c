#ifndef SYMPOW_FIELD_HPP
#define SYMPOW_FIELD_HPP

#include <complex>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sympow {

using Rational = mpq_class;
using Complex = std::complex<long double>;

class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FieldMismatch : public AlgebraError {
public:
    FieldMismatch() : AlgebraError("operands belong to different number fields") {}
};

/// Raised when an element has no inverse, which means the minimal polynomial
/// is reducible. The discovered common factor is reported in the message.
class NotInvertible : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

/// Canonical "p/q" (or "p") form of a rational.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

/// Dense univariate polynomial over Q, coefficient of t^k at index k.
using UPoly = std::vector<Rational>;

/// Q[a]/(m(a)) for a monic minimal polynomial m of degree D >= 1.
///
/// The field also carries a designated complex root of m, which fixes the
/// embedding used for numeric rendering, and optionally the order N of the
/// root of unity when a is a primitive N-th root of unity. In the latter case
/// complex conjugation acts by a -> a^(N-1).
class NumberField {
public:
    std::size_t degree() const { return minpoly_.size() - 1; }
    const UPoly& minimal_poly() const { return minpoly_; }
    const std::string& label() const { return label_; }
    Complex numeric_root() const { return root_; }
    std::optional<int> cyclotomic_order() const { return cyclotomic_order_; }

    /// True when the designated root is real, so every element embeds to R.
    bool real_embedding() const;

    /// Power-basis coordinates of a^k for D <= k <= 2D-2.
    const std::vector<Rational>& power_reduction(std::size_t k) const { return reductions_[k - degree()]; }

    bool same_as(const NumberField& other) const;

private:
    friend std::shared_ptr<const NumberField> make_field(UPoly, Complex, std::string, std::optional<int>);
    NumberField() = default;

    UPoly minpoly_;
    std::string label_;
    Complex root_;
    std::optional<int> cyclotomic_order_;
    std::vector<std::vector<Rational>> reductions_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Builds a field descriptor. The numeric root is refined by Newton iteration
/// and must end up within 1e-12 of a genuine root close to the given value.
FieldPtr make_field(UPoly minimal_poly, Complex numeric_root, std::string label = {},
                    std::optional<int> cyclotomic_order = std::nullopt);

/// The rationals, presented as Q[a]/(a - 1).
FieldPtr rational_field();

/// N-th cyclotomic polynomial, computed by dividing t^N - 1 by Phi_d for the
/// proper divisors d of N.
UPoly cyclotomic_polynomial(int order);

/// Q(zeta_N) with embedding a -> exp(2 pi i / N).
FieldPtr cyclotomic_field(int order);

/// Element of a number field in the power basis 1, a, ..., a^(D-1).
class FieldElement {
public:
    FieldElement() = default;
    explicit FieldElement(FieldPtr field);
    FieldElement(FieldPtr field, const Rational& value);
    FieldElement(FieldPtr field, std::vector<Rational> coeffs);

    static FieldElement generator(FieldPtr field);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    std::size_t degree() const { return coeffs_.size(); }

    bool is_zero() const;
    bool is_one() const;
    /// True when the element lies in Q (all coordinates above a^0 vanish).
    bool is_rational() const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator*=(const Rational& rhs);

    friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
    friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
    friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
    friend FieldElement operator*(FieldElement lhs, const Rational& rhs) { return lhs *= rhs; }

    friend bool operator==(const FieldElement& lhs, const FieldElement& rhs);

    /// Human-readable, e.g. "1/2 + 3/4*a".
    std::string str() const;

private:
    FieldPtr field_;
    std::vector<Rational> coeffs_;
};

FieldElement f_add(const FieldElement& x, const FieldElement& y);
FieldElement f_mul(const FieldElement& x, const FieldElement& y);
FieldElement f_inv(const FieldElement& x);
FieldElement f_div(const FieldElement& x, const FieldElement& y);
FieldElement f_pow(const FieldElement& x, unsigned exponent);

/// Evaluates the coordinate polynomial of x at a different element of the
/// same field. Used to apply automorphisms a -> image.
FieldElement f_substitute(const FieldElement& x, const FieldElement& image);

/// Complex conjugation, available for real fields (identity) and cyclotomic
/// fields (a -> a^(N-1)).
FieldElement f_conjugate(const FieldElement& x);

/// Numeric image under the field's embedding together with an upper bound on
/// the absolute error of the returned value.
struct Embedded {
    Complex value;
    long double error_bound;
};

/// Precision above 60 bits exceeds the extended-precision evaluator and throws.
Embedded f_embed(const FieldElement& x, int precision_bits = 50);

void require_same_field(const FieldElement& x, const FieldElement& y);

}  // namespace sympow

#endif  // SYMPOW_FIELD_HPP
