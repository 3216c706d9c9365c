#include "sympow/field.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numbers>

namespace sympow {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s)
{
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

namespace {

long double to_long_double(const mpz_class& z)
{
    return std::strtold(z.get_str().c_str(), nullptr);
}

long double to_long_double(const Rational& q)
{
    return to_long_double(q.get_num()) / to_long_double(q.get_den());
}

void trim(UPoly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a by b (b nonzero, trimmed).
std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b)
{
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {UPoly{}, a};
    UPoly q(a.size() - db);
    for (std::size_t k = a.size(); k-- > db;) {
        if (a[k] == 0) continue;
        Rational c = a[k] / b[db];
        q[k - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
    }
    a.resize(db);
    trim(a);
    trim(q);
    return {q, a};
}

UPoly poly_mul(const UPoly& a, const UPoly& b)
{
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

UPoly poly_sub(UPoly a, const UPoly& b)
{
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

std::string poly_str(const UPoly& p)
{
    std::string out;
    for (std::size_t k = p.size(); k-- > 0;) {
        if (p[k] == 0) continue;
        if (!out.empty()) out += " + ";
        out += "(" + to_string(p[k]) + ")";
        if (k > 0) out += "*a^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

Complex horner(const UPoly& p, Complex z)
{
    Complex acc = 0;
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * z + Complex(to_long_double(p[k]), 0);
    return acc;
}

UPoly derivative(const UPoly& p)
{
    UPoly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<unsigned long>(k));
    return d;
}

std::vector<mpz_class> divisors(const mpz_class& n)
{
    std::vector<mpz_class> out;
    mpz_class a = abs(n);
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            if (d * d != a) out.push_back(a / d);
        }
    }
    return out;
}

// Rational-root screen on a monic polynomial of degree >= 2.
std::optional<Rational> rational_root(const UPoly& m)
{
    mpz_class lcm = 1;
    for (const auto& c : m) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& c : m) ints.push_back(mpz_class(c * lcm));
    std::size_t low = 0;
    while (low < ints.size() && ints[low] == 0) ++low;
    if (low > 0) return Rational(0);
    const mpz_class bound("1000000000000");
    if (abs(ints.front()) > bound || abs(ints.back()) > bound) return std::nullopt;
    for (const auto& p : divisors(ints.front())) {
        for (const auto& q : divisors(ints.back())) {
            for (int sign : {1, -1}) {
                Rational r(p * sign, q);
                r.canonicalize();
                Rational acc = 0;
                for (std::size_t k = m.size(); k-- > 0;) acc = acc * r + m[k];
                if (acc == 0) return r;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

bool NumberField::real_embedding() const { return root_.imag() == 0; }

bool NumberField::same_as(const NumberField& other) const
{
    if (this == &other) return true;
    return minpoly_ == other.minpoly_ && std::abs(root_ - other.root_) < 1e-9L;
}

FieldPtr make_field(UPoly m, Complex root, std::string label, std::optional<int> cyclotomic_order)
{
    trim(m);
    if (m.size() < 2) throw AlgebraError("minimal polynomial must have degree >= 1");
    if (m.back() != 1) throw AlgebraError("minimal polynomial must be monic");
    const std::size_t degree = m.size() - 1;
    if (degree >= 2) {
        if (auto r = rational_root(m))
            throw AlgebraError("minimal polynomial " + poly_str(m) + " has rational root " + to_string(*r));
    }

    const UPoly dm = derivative(m);
    Complex z = root;
    for (int it = 0; it < 200; ++it) {
        Complex d = horner(dm, z);
        if (std::abs(d) == 0) break;
        Complex step = horner(m, z) / d;
        z -= step;
        if (std::abs(step) <= 1e-19L * std::max<long double>(1, std::abs(z))) break;
    }
    const long double scale = std::max<long double>(1, std::abs(root));
    if (!(std::abs(horner(m, z)) < 1e-12L) || std::abs(z - root) > 1e-4L * scale)
        throw AlgebraError("numeric root is not an approximation of a root of " + poly_str(m));
    if (std::abs(z.imag()) < 1e-15L * std::max<long double>(1, std::abs(z.real()))) {
        // A real root of a real polynomial stays real under Newton iteration
        // started on the real axis; drop rounding noise.
        if (root.imag() == 0) z = Complex(z.real(), 0);
    }

    auto f = std::shared_ptr<NumberField>(new NumberField());
    f->minpoly_ = std::move(m);
    f->label_ = label.empty() ? "Q[a]/(" + poly_str(f->minpoly_) + ")" : std::move(label);
    f->root_ = z;
    f->cyclotomic_order_ = cyclotomic_order;

    // a^k for k = D .. 2D-2, each reduced to the power basis.
    std::vector<Rational> cur(degree);
    for (std::size_t j = 0; j < degree; ++j) cur[j] = -f->minpoly_[j];
    for (std::size_t k = degree; k + 1 < 2 * degree || k == degree; ++k) {
        f->reductions_.push_back(cur);
        std::vector<Rational> next(degree);
        const Rational top = cur[degree - 1];
        for (std::size_t j = degree; j-- > 1;) next[j] = cur[j - 1];
        next[0] = 0;
        if (top != 0)
            for (std::size_t j = 0; j < degree; ++j) next[j] -= top * f->minpoly_[j];
        cur = std::move(next);
    }
    return f;
}

FieldPtr rational_field()
{
    static const FieldPtr q = make_field(UPoly{-1, 1}, Complex(1, 0), "Q");
    return q;
}

UPoly cyclotomic_polynomial(int order)
{
    if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
    static std::mutex mu;
    static std::map<int, UPoly> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(order); it != cache.end()) return it->second;
    }
    UPoly p(order + 1);
    p[0] = -1;
    p[order] = 1;
    for (int d = 1; d < order; ++d) {
        if (order % d != 0) continue;
        auto [q, r] = divmod(p, cyclotomic_polynomial(d));
        if (!r.empty()) throw AlgebraError("cyclotomic recurrence left a remainder");
        p = std::move(q);
    }
    std::lock_guard lock(mu);
    cache.emplace(order, p);
    return p;
}

FieldPtr cyclotomic_field(int order)
{
    static std::mutex mu;
    static std::map<int, FieldPtr> cache;
    std::lock_guard lock(mu);
    if (auto it = cache.find(order); it != cache.end()) return it->second;
    const long double angle = 2 * std::numbers::pi_v<long double> / order;
    FieldPtr f = make_field(cyclotomic_polynomial(order), std::polar<long double>(1, angle),
                            "Q(zeta_" + std::to_string(order) + ")", order);
    cache.emplace(order, f);
    return f;
}

void require_same_field(const FieldElement& x, const FieldElement& y)
{
    if (x.field() == y.field()) {
        if (!x.field()) throw FieldMismatch();
        return;
    }
    if (!x.field() || !y.field() || !x.field()->same_as(*y.field())) throw FieldMismatch();
}

FieldElement::FieldElement(FieldPtr field) : field_(std::move(field)), coeffs_(field_->degree()) {}

FieldElement::FieldElement(FieldPtr field, const Rational& value) : FieldElement(std::move(field))
{
    coeffs_[0] = value;
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs))
{
    const std::size_t d = field_->degree();
    if (coeffs_.size() > d) {
        // Reduce higher powers with the precomputed table.
        std::vector<Rational> high(coeffs_.begin() + d, coeffs_.end());
        coeffs_.resize(d);
        for (std::size_t k = 0; k < high.size(); ++k) {
            if (high[k] == 0) continue;
            std::size_t power = d + k;
            if (power <= 2 * d - 2 || power == d) {
                const auto& red = field_->power_reduction(power);
                for (std::size_t j = 0; j < d; ++j) coeffs_[j] += high[k] * red[j];
            } else {
                FieldElement t = f_pow(generator(field_), static_cast<unsigned>(power));
                for (std::size_t j = 0; j < d; ++j) coeffs_[j] += high[k] * t.coeffs_[j];
            }
        }
    }
    coeffs_.resize(d);
    for (auto& c : coeffs_) c.canonicalize();
}

FieldElement FieldElement::generator(FieldPtr field)
{
    std::vector<Rational> c(2);
    c[1] = 1;
    return FieldElement(std::move(field), std::move(c));
}

bool FieldElement::is_zero() const
{
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool FieldElement::is_one() const
{
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return false;
    return true;
}

bool FieldElement::is_rational() const
{
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return false;
    return true;
}

FieldElement FieldElement::operator-() const
{
    FieldElement r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs)
{
    require_same_field(*this, rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs)
{
    require_same_field(*this, rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

FieldElement& FieldElement::operator*=(const Rational& rhs)
{
    for (auto& c : coeffs_) c *= rhs;
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs)
{
    require_same_field(*this, rhs);
    const std::size_t d = coeffs_.size();
    if (d == 1) {
        coeffs_[0] *= rhs.coeffs_[0];
        return *this;
    }
    std::vector<Rational> prod(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    for (std::size_t k = d; k < 2 * d - 1; ++k) {
        if (prod[k] == 0) continue;
        const auto& red = field_->power_reduction(k);
        for (std::size_t j = 0; j < d; ++j)
            if (red[j] != 0) prod[j] += prod[k] * red[j];
    }
    prod.resize(d);
    coeffs_ = std::move(prod);
    return *this;
}

bool operator==(const FieldElement& lhs, const FieldElement& rhs)
{
    require_same_field(lhs, rhs);
    return lhs.coeffs_ == rhs.coeffs_;
}

std::string FieldElement::str() const
{
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (!out.empty()) out += coeffs_[k] < 0 ? " - " : " + ";
        else if (coeffs_[k] < 0) out += "-";
        Rational mag = abs(coeffs_[k]);
        if (k == 0) {
            out += to_string(mag);
        } else {
            if (mag != 1) out += to_string(mag) + "*";
            out += k == 1 ? "a" : "a^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

FieldElement f_add(const FieldElement& x, const FieldElement& y) { return x + y; }

FieldElement f_mul(const FieldElement& x, const FieldElement& y) { return x * y; }

FieldElement f_inv(const FieldElement& x)
{
    if (x.is_zero()) throw AlgebraError("inverse of zero");
    const auto& field = x.field();
    if (field->degree() == 1) return FieldElement(field, Rational(1) / x.coeffs()[0]);

    // Extended Euclid on (m, x): track s with s*x = r (mod m).
    UPoly r0 = field->minimal_poly();
    UPoly r1 = x.coeffs();
    trim(r1);
    UPoly s0{}, s1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        UPoly s = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.empty()) {
        // r0 is a nontrivial common factor of x and the minimal polynomial.
        const Rational lead = r0.back();
        for (auto& c : r0) c /= lead;
        throw NotInvertible("element " + x.str() + " is not invertible; minimal polynomial has factor " +
                            poly_str(r0));
    }
    const Rational c = r1[0];
    for (auto& v : s1) v /= c;
    return FieldElement(field, std::move(s1));
}

FieldElement f_div(const FieldElement& x, const FieldElement& y) { return x * f_inv(y); }

FieldElement f_pow(const FieldElement& x, unsigned exponent)
{
    FieldElement result(x.field(), Rational(1));
    FieldElement base = x;
    while (exponent) {
        if (exponent & 1u) result *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return result;
}

FieldElement f_substitute(const FieldElement& x, const FieldElement& image)
{
    require_same_field(x, image);
    FieldElement acc(x.field());
    const auto& c = x.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        acc *= image;
        acc += FieldElement(x.field(), c[k]);
    }
    return acc;
}

FieldElement f_conjugate(const FieldElement& x)
{
    const auto& field = x.field();
    if (field->degree() == 1 || field->real_embedding()) return x;
    if (auto order = field->cyclotomic_order())
        return f_substitute(x, f_pow(FieldElement::generator(field), static_cast<unsigned>(*order - 1)));
    throw AlgebraError("complex conjugation is not available on " + field->label());
}

Embedded f_embed(const FieldElement& x, int precision_bits)
{
    constexpr int max_bits = 60;
    if (precision_bits > max_bits)
        throw AlgebraError("precision exhausted: requested " + std::to_string(precision_bits) +
                           " bits, evaluator provides " + std::to_string(max_bits));
    const auto& field = x.field();
    const Complex r = field->numeric_root();
    const long double u = std::ldexp(1.0L, -63);
    const long double root_err = 4 * u * std::max<long double>(1, std::abs(r));

    Complex value = 0;
    long double bound = 0;
    Complex power = 1;
    long double abs_power = 1;
    const auto& c = x.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] != 0) {
            const long double ck = to_long_double(c[k]);
            value += ck * power;
            const long double mag = std::abs(ck);
            bound += mag * (static_cast<long double>(k) * std::pow(std::abs(r) + root_err, k ? k - 1 : 0) * root_err +
                            static_cast<long double>(2 * k + 4) * u * abs_power);
        }
        power *= r;
        abs_power *= std::abs(r);
    }
    bound *= 2;
    const long double allowed = std::ldexp(1.0L, -precision_bits) * std::max<long double>(1, std::abs(value));
    if (bound > allowed)
        throw AlgebraError("precision exhausted: error bound " + std::to_string(static_cast<double>(bound)) +
                           " exceeds requested precision");
    if (field->degree() == 1 || field->real_embedding()) value = Complex(value.real(), 0);
    return {value, bound};
}

}  // namespace sympow
