#include "sympow/homform.hpp"

#include <algorithm>

namespace sympow {

bool grevlex_greater(const Exponent& a, const Exponent& b)
{
    const unsigned da = a[0] + a[1] + a[2];
    const unsigned db = b[0] + b[1] + b[2];
    if (da != db) return da > db;
    if (a[2] != b[2]) return a[2] < b[2];
    return a[1] < b[1];
}

std::vector<Exponent> monomial_basis(unsigned d)
{
    std::vector<Exponent> out;
    out.reserve(monomial_count(d));
    for (unsigned ez = 0; ez <= d; ++ez)
        for (unsigned ey = 0; ey + ez <= d; ++ey) out.push_back({d - ey - ez, ey, ez});
    return out;
}

std::size_t monomial_index(const Exponent& e)
{
    const std::size_t d = e[0] + e[1] + e[2];
    std::size_t idx = 0;
    for (std::size_t k = 0; k < e[2]; ++k) idx += d - k + 1;
    return idx + e[1];
}

// ---------------------------------------------------------------- PointP2

PointP2::PointP2(FieldElement x, FieldElement y, FieldElement z) : coords_{std::move(x), std::move(y), std::move(z)}
{
    require_same_field(coords_[0], coords_[1]);
    require_same_field(coords_[0], coords_[2]);
    std::size_t last = 3;
    for (std::size_t i = 3; i-- > 0;) {
        if (!coords_[i].is_zero()) {
            last = i;
            break;
        }
    }
    if (last == 3) throw AlgebraError("projective point with all coordinates zero");
    if (!coords_[last].is_one()) {
        const FieldElement inv = f_inv(coords_[last]);
        for (std::size_t i = 0; i < last; ++i) coords_[i] *= inv;
        coords_[last] = FieldElement(coords_[last].field(), Rational(1));
    }
}

bool operator==(const PointP2& a, const PointP2& b)
{
    for (std::size_t i = 0; i < 3; ++i)
        if (!(a.coords_[i] == b.coords_[i])) return false;
    return true;
}

bool operator<(const PointP2& a, const PointP2& b)
{
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& ca = a.coords_[i].coeffs();
        const auto& cb = b.coords_[i].coeffs();
        for (std::size_t k = 0; k < ca.size(); ++k) {
            if (ca[k] < cb[k]) return true;
            if (cb[k] < ca[k]) return false;
        }
    }
    return false;
}

std::string PointP2::str() const
{
    return "(" + coords_[0].str() + " : " + coords_[1].str() + " : " + coords_[2].str() + ")";
}

// ---------------------------------------------------------------- HomForm

HomForm::HomForm(FieldPtr field, unsigned degree) : field_(std::move(field)), degree_(degree) {}

HomForm::HomForm(FieldPtr field, unsigned degree, Terms terms)
    : field_(std::move(field)), degree_(degree), terms_(std::move(terms))
{
    for (auto it = terms_.begin(); it != terms_.end();) {
        const auto& e = it->first;
        if (e[0] + e[1] + e[2] != degree_) throw AlgebraError("term degree differs from form degree");
        if (!it->second.field() || !it->second.field()->same_as(*field_)) throw FieldMismatch();
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

HomForm HomForm::monomial(FieldPtr field, const Exponent& e, const FieldElement& c)
{
    HomForm f(field, e[0] + e[1] + e[2]);
    if (!c.is_zero()) f.terms_.emplace(e, c);
    return f;
}

HomForm HomForm::variable(FieldPtr field, Var v)
{
    FieldElement one(field, Rational(1));
    return monomial(std::move(field), LinearForm::unit(v), one);
}

HomForm HomForm::linear(const FieldElement& a, const FieldElement& b, const FieldElement& c)
{
    require_same_field(a, b);
    require_same_field(a, c);
    Terms t;
    if (!a.is_zero()) t.emplace(Exponent{1, 0, 0}, a);
    if (!b.is_zero()) t.emplace(Exponent{0, 1, 0}, b);
    if (!c.is_zero()) t.emplace(Exponent{0, 0, 1}, c);
    return HomForm(a.field(), 1, std::move(t));
}

HomForm HomForm::from_dense(FieldPtr field, unsigned degree, const std::vector<FieldElement>& coeffs)
{
    const auto basis = monomial_basis(degree);
    if (coeffs.size() != basis.size()) throw AlgebraError("dense vector length does not match degree");
    HomForm f(field, degree);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!coeffs[i].is_zero()) f.terms_.emplace_hint(f.terms_.end(), basis[i], coeffs[i]);
    return f;
}

FieldElement HomForm::coeff(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? FieldElement(field_) : it->second;
}

std::vector<FieldElement> HomForm::dense() const
{
    std::vector<FieldElement> out(monomial_count(degree_), FieldElement(field_));
    for (const auto& [e, c] : terms_) out[monomial_index(e)] = c;
    return out;
}

HomForm HomForm::operator-() const
{
    HomForm r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

HomForm& HomForm::operator+=(const HomForm& rhs)
{
    if (!field_->same_as(*rhs.field_)) throw FieldMismatch();
    if (degree_ != rhs.degree_) throw AlgebraError("cannot add forms of different degree");
    for (const auto& [e, c] : rhs.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

HomForm& HomForm::operator-=(const HomForm& rhs) { return *this += -rhs; }

HomForm& HomForm::operator*=(const FieldElement& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

HomForm operator*(const HomForm& a, const HomForm& b)
{
    if (!a.field_->same_as(*b.field_)) throw FieldMismatch();
    HomForm r(a.field_, a.degree_ + b.degree_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            auto [it, inserted] = r.terms_.emplace(e, ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    }
    std::erase_if(r.terms_, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
}

bool operator==(const HomForm& a, const HomForm& b)
{
    if (!a.field_->same_as(*b.field_)) throw FieldMismatch();
    if (a.degree_ != b.degree_ || a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (const auto& [e, c] : a.terms_) {
        if (e != ib->first || !(c == ib->second)) return false;
        ++ib;
    }
    return true;
}

HomForm HomForm::shifted(const Exponent& s) const
{
    HomForm r(field_, degree_ + s[0] + s[1] + s[2]);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace_hint(r.terms_.end(), Exponent{e[0] + s[0], e[1] + s[1], e[2] + s[2]}, c);
    return r;
}

std::string HomForm::str() const
{
    if (terms_.empty()) return "0";
    static constexpr const char* names[3] = {"x", "y", "z"};
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (int v = 0; v < 3; ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[v];
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
        }
        if (mono.empty()) {
            out += "(" + c.str() + ")";
        } else if (c.is_one()) {
            out += mono;
        } else {
            out += "(" + c.str() + ")*" + mono;
        }
    }
    return out;
}

HomForm p_add(const HomForm& f, const HomForm& g) { return f + g; }

HomForm p_mul(const HomForm& f, const HomForm& g) { return f * g; }

HomForm p_diff(const HomForm& f, Var v)
{
    const auto k = static_cast<std::size_t>(v);
    HomForm r(f.field(), f.degree() == 0 ? 0 : f.degree() - 1);
    HomForm::Terms t;
    for (const auto& [e, c] : f.terms()) {
        if (e[k] == 0) continue;
        Exponent d = e;
        --d[k];
        t.emplace_hint(t.end(), d, c * Rational(e[k]));
    }
    return HomForm(f.field(), r.degree(), std::move(t));
}

HomForm p_diff(const HomForm& f, const Exponent& alpha)
{
    const unsigned order = alpha[0] + alpha[1] + alpha[2];
    if (order > f.degree()) return HomForm(f.field(), 0);
    HomForm::Terms t;
    for (const auto& [e, c] : f.terms()) {
        if (e[0] < alpha[0] || e[1] < alpha[1] || e[2] < alpha[2]) continue;
        mpz_class falling = 1;
        for (int v = 0; v < 3; ++v)
            for (unsigned j = 0; j < alpha[v]; ++j) falling *= e[v] - j;
        t.emplace(Exponent{e[0] - alpha[0], e[1] - alpha[1], e[2] - alpha[2]}, c * Rational(falling));
    }
    return HomForm(f.field(), f.degree() - order, std::move(t));
}

FieldElement p_eval(const HomForm& f, const PointP2& p)
{
    if (!f.field()->same_as(*p.field())) throw FieldMismatch();
    std::array<std::vector<FieldElement>, 3> powers;
    for (int v = 0; v < 3; ++v) {
        powers[v].push_back(FieldElement(f.field(), Rational(1)));
        for (unsigned k = 1; k <= f.degree(); ++k) powers[v].push_back(powers[v].back() * p[v]);
    }
    FieldElement acc(f.field());
    for (const auto& [e, c] : f.terms()) acc += c * powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]];
    return acc;
}

HomForm product(FieldPtr field, const std::vector<HomForm>& forms)
{
    HomForm acc = HomForm::monomial(field, {0, 0, 0}, FieldElement(field, Rational(1)));
    for (const auto& f : forms) acc = acc * f;
    return acc;
}

// ---------------------------------------------------------------- LinearForm

Exponent LinearForm::unit(Var v)
{
    Exponent e{0, 0, 0};
    e[static_cast<std::size_t>(v)] = 1;
    return e;
}

LinearForm::LinearForm(HomForm form, std::optional<LineProvenance> provenance)
    : form_(std::move(form)), provenance_(provenance)
{
    if (form_.degree() != 1) throw AlgebraError("linear form must have degree 1");
    if (form_.is_zero()) throw AlgebraError("degenerate linear form (identically zero)");
}

std::array<FieldElement, 3> LinearForm::coefficients() const
{
    return {coefficient(Var::x), coefficient(Var::y), coefficient(Var::z)};
}

}  // namespace sympow
