#include "sympow/ideal.hpp"

#include <algorithm>

#include "sympow/kernels.hpp"

namespace sympow {

namespace {

// All exponent triples of total degree k (partial derivative multi-indices).
std::vector<Exponent> multi_indices(unsigned k) { return monomial_basis(k); }

// Row of the functional f -> (d^alpha f)(p) on monomial_basis(d).
Vector derivative_row(const PointP2& p, const Exponent& alpha, unsigned d,
                      const std::array<std::vector<FieldElement>, 3>& powers)
{
    const FieldPtr& field = p.field();
    const auto basis = monomial_basis(d);
    Vector row(basis.size(), FieldElement(field));
    for (std::size_t c = 0; c < basis.size(); ++c) {
        const Exponent& e = basis[c];
        if (e[0] < alpha[0] || e[1] < alpha[1] || e[2] < alpha[2]) continue;
        mpz_class falling = 1;
        for (int v = 0; v < 3; ++v)
            for (unsigned j = 0; j < alpha[v]; ++j) falling *= e[v] - j;
        FieldElement value = powers[0][e[0] - alpha[0]] * powers[1][e[1] - alpha[1]] * powers[2][e[2] - alpha[2]];
        if (value.is_zero()) continue;
        row[c] = value * Rational(falling);
    }
    return row;
}

std::array<std::vector<FieldElement>, 3> coordinate_powers(const PointP2& p, unsigned d)
{
    std::array<std::vector<FieldElement>, 3> powers;
    for (int v = 0; v < 3; ++v) {
        powers[v].push_back(FieldElement(p.field(), Rational(1)));
        for (unsigned k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * p[v]);
    }
    return powers;
}

HomForm normalized_leading(HomForm f)
{
    if (f.is_zero()) return f;
    const FieldElement lead = f.terms().begin()->second;
    if (lead.is_one()) return f;
    return f * f_inv(lead);
}

}  // namespace

FatPointScheme make_scheme(FieldPtr field, std::vector<PointP2> points, unsigned multiplicity)
{
    if (multiplicity < 1) throw AlgebraError("multiplicity must be at least 1");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw AlgebraError("scheme points must be pairwise distinct");
    return {std::move(field), std::move(points), multiplicity};
}

ExactMatrix GradedBasis::matrix() const
{
    ExactMatrix m(field, basis.size(), monomial_count(degree));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (const auto& [e, c] : basis[i].terms()) m(i, monomial_index(e)) = c;
    return m;
}

GradedBasis GradedBasis::from_rows(FieldPtr field, unsigned degree, const std::vector<Vector>& rows)
{
    GradedBasis g{field, degree, {}};
    for (const auto& r : rows) g.basis.push_back(HomForm::from_dense(field, degree, r));
    return g;
}

bool same_span(const GradedBasis& a, const GradedBasis& b)
{
    if (a.degree != b.degree || a.dim() != b.dim()) return false;
    return same_row_space(a.matrix(), b.matrix());
}

GradedBasis fat_piece(const FatPointScheme& scheme, unsigned d)
{
    const std::size_t n_mono = monomial_count(d);
    if (scheme.points.empty()) {
        GradedBasis g{scheme.field, d, {}};
        for (const auto& e : monomial_basis(d)) g.basis.push_back(HomForm::monomial(scheme.field, e, FieldElement(scheme.field, Rational(1))));
        return g;
    }
    // Vanishing of all order-k partials with k = min(m-1, d) implies vanishing
    // of every lower order by Euler's identity.
    const unsigned order = std::min(scheme.multiplicity - 1, d);
    const auto alphas = multi_indices(order);
    const auto rows = kernels::gather_rows(scheme.points.size(), [&](std::size_t i) {
        const PointP2& p = scheme.points[i];
        const auto powers = coordinate_powers(p, d);
        std::vector<Vector> out;
        for (const auto& alpha : alphas) out.push_back(derivative_row(p, alpha, d, powers));
        return out;
    });
    const ExactMatrix conditions = ExactMatrix::from_rows(scheme.field, n_mono, rows);
    return GradedBasis::from_rows(scheme.field, d, kernel(conditions));
}

SymbolicReport symbolic_member(const HomForm& f, const FatPointScheme& scheme)
{
    SymbolicReport rep;
    rep.orders.assign(scheme.points.size(), scheme.multiplicity);
    std::vector<bool> settled(scheme.points.size(), false);
    for (unsigned k = 0; k < scheme.multiplicity; ++k) {
        std::vector<HomForm> partials;
        for (const auto& alpha : multi_indices(k)) partials.push_back(p_diff(f, alpha));
        for (std::size_t i = 0; i < scheme.points.size(); ++i) {
            if (settled[i]) continue;
            for (const auto& g : partials) {
                if (!p_eval(g, scheme.points[i]).is_zero()) {
                    rep.orders[i] = k;
                    settled[i] = true;
                    break;
                }
            }
        }
    }
    rep.member = std::none_of(settled.begin(), settled.end(), [](bool s) { return s; });
    return rep;
}

std::vector<std::size_t> hilbert_function(const FatPointScheme& scheme, unsigned max_degree)
{
    std::vector<std::size_t> dims;
    for (unsigned d = 0; d <= max_degree; ++d) dims.push_back(fat_piece(scheme, d).dim());
    return dims;
}

GradedBasis ideal_piece(FieldPtr field, const std::vector<HomForm>& generators, unsigned d)
{
    const auto rows = kernels::gather_rows(generators.size(), [&](std::size_t i) {
        std::vector<Vector> out;
        const HomForm& g = generators[i];
        if (g.degree() > d || g.is_zero()) return out;
        for (const auto& e : monomial_basis(d - g.degree())) out.push_back(g.shifted(e).dense());
        return out;
    });
    return GradedBasis::from_rows(field, d, row_basis(ExactMatrix::from_rows(field, monomial_count(d), rows)));
}

IdealPresentation min_generators(const FatPointScheme& scheme, unsigned max_degree)
{
    IdealPresentation pres;
    pres.field = scheme.field;
    pres.complete_to = max_degree;
    std::optional<GradedBasis> previous;
    for (unsigned d = 0; d <= max_degree; ++d) {
        GradedBasis piece = fat_piece(scheme, d);
        pres.hilbert.push_back(piece.dim());
        EchelonSpan span(scheme.field, monomial_count(d));
        if (previous) {
            for (const auto& b : previous->basis)
                for (Var v : {Var::x, Var::y, Var::z}) span.insert(b.shifted(LinearForm::unit(v)).dense());
        }
        for (const auto& f : piece.basis) {
            if (span.rank() == piece.dim()) break;
            if (span.insert(f.dense())) pres.generators.push_back(f);
        }
        if (span.rank() != piece.dim()) throw std::logic_error("graded piece not spanned by its generators");
        previous = std::move(piece);
    }
    if (!pres.generators.empty()) pres.gamma = pres.generators.front().degree();
    return pres;
}

GradedBasis power_piece(const IdealPresentation& pres, unsigned r, unsigned d)
{
    if (r < 1) throw AlgebraError("power exponent must be at least 1");
    if (pres.gamma) {
        const long need = static_cast<long>(d) - static_cast<long>(*pres.gamma) * static_cast<long>(r - 1);
        if (need > static_cast<long>(pres.complete_to))
            throw CompletenessError("presentation complete to degree " + std::to_string(pres.complete_to) +
                                    ", power piece of degree " + std::to_string(d) + " needs " + std::to_string(need));
    } else if (d >= r * (pres.complete_to + 1)) {
        throw CompletenessError("presentation has no generators up to degree " + std::to_string(pres.complete_to) +
                                ", cannot bound power piece of degree " + std::to_string(d));
    }
    if (r == 1) return ideal_piece(pres.field, pres.generators, d);

    std::map<unsigned, GradedBasis> lower;
    for (const auto& g : pres.generators)
        if (g.degree() <= d && !lower.contains(d - g.degree()))
            lower.emplace(d - g.degree(), power_piece(pres, r - 1, d - g.degree()));
    const auto rows = kernels::gather_rows(pres.generators.size(), [&](std::size_t i) {
        std::vector<Vector> out;
        const HomForm& g = pres.generators[i];
        if (g.degree() > d) return out;
        for (const auto& b : lower.at(d - g.degree()).basis) out.push_back((g * b).dense());
        return out;
    });
    return GradedBasis::from_rows(pres.field, d, row_basis(ExactMatrix::from_rows(pres.field, monomial_count(d), rows)));
}

bool ContainmentReport::holds() const
{
    return std::all_of(degrees.begin(), degrees.end(), [](const DegreeVerdict& v) { return v.contained; });
}

std::optional<unsigned> ContainmentReport::first_failure() const
{
    for (const auto& v : degrees)
        if (!v.contained) return v.degree;
    return std::nullopt;
}

ContainmentReport containment_check(const FatPointScheme& points, unsigned m, unsigned r, unsigned max_degree,
                                    unsigned min_degree)
{
    const FatPointScheme reduced = points.with_multiplicity(1);
    unsigned gamma = 0;
    while (gamma <= max_degree && fat_piece(reduced, gamma).dim() == 0) ++gamma;
    const long bound = static_cast<long>(max_degree) - static_cast<long>(gamma) * static_cast<long>(r - 1);
    const unsigned complete_to = static_cast<unsigned>(std::max<long>(bound, std::min<long>(gamma, max_degree)));

    ContainmentReport rep;
    rep.m = m;
    rep.r = r;
    rep.presentation = min_generators(reduced, complete_to);
    const FatPointScheme fat = points.with_multiplicity(m);
    for (unsigned d = min_degree; d <= max_degree; ++d) {
        DegreeVerdict v;
        v.degree = d;
        const GradedBasis sym = fat_piece(fat, d);
        v.symbolic_dim = sym.dim();
        if (sym.dim() > 0) {
            const GradedBasis pow = power_piece(rep.presentation, r, d);
            v.power_dim = pow.dim();
            EchelonSpan span(points.field, monomial_count(d));
            for (const auto& b : pow.basis) span.insert(b.dense());
            for (const auto& f : sym.basis) {
                if (!span.contains(f.dense())) {
                    v.contained = false;
                    v.witness = normalized_leading(f);
                    break;
                }
            }
        }
        rep.degrees.push_back(std::move(v));
    }
    return rep;
}

std::vector<HomForm> jacobian_ideal(const HomForm& f)
{
    return {f, p_diff(f, Var::x), p_diff(f, Var::y), p_diff(f, Var::z)};
}

std::vector<HomForm> derivative_closure(const std::vector<HomForm>& generators)
{
    std::vector<HomForm> out;
    auto add = [&](const HomForm& g) {
        if (g.is_zero()) return;
        for (const auto& h : out)
            if (h.degree() == g.degree() && h == g) return;
        out.push_back(g);
    };
    for (const auto& g : generators) add(g);
    for (const auto& g : generators)
        for (Var v : {Var::x, Var::y, Var::z}) add(p_diff(g, v));
    return out;
}

GeneratedIdeal::GeneratedIdeal(FieldPtr field, std::vector<HomForm> generators)
    : field_(std::move(field)), generators_(std::move(generators))
{
    std::erase_if(generators_, [](const HomForm& g) { return g.is_zero(); });
}

const GradedBasis& GeneratedIdeal::piece(unsigned d) const
{
    auto it = cache_.find(d);
    if (it == cache_.end()) it = cache_.emplace(d, ideal_piece(field_, generators_, d)).first;
    return it->second;
}

unsigned GeneratedIdeal::max_generator_degree() const
{
    unsigned m = 0;
    for (const auto& g : generators_) m = std::max(m, g.degree());
    return m;
}

SaturationResult truncated_saturation(const PieceSource& piece, FieldPtr field, unsigned d, unsigned window,
                                      unsigned t_max, unsigned t_start)
{
    if (window < 1) throw AlgebraError("stabilization window must be positive");
    const std::size_t n_mono = monomial_count(d);
    const auto basis_d = monomial_basis(d);
    std::vector<std::size_t> dims;
    std::vector<Vector> answer;
    for (unsigned t = t_start; t <= t_start + t_max; ++t) {
        const GradedBasis& big = piece(d + t);
        // Functionals vanishing on the degree-(d+t) piece.
        const std::vector<Vector> annihilator = kernel(big.matrix());
        std::vector<Vector> rows;
        for (const auto& mu : monomial_basis(t)) {
            for (const auto& lambda : annihilator) {
                Vector row(n_mono, FieldElement(field));
                for (std::size_t c = 0; c < n_mono; ++c) {
                    const Exponent& e = basis_d[c];
                    row[c] = lambda[monomial_index({e[0] + mu[0], e[1] + mu[1], e[2] + mu[2]})];
                }
                rows.push_back(std::move(row));
            }
        }
        answer = kernel(ExactMatrix::from_rows(field, n_mono, rows));
        dims.push_back(answer.size());
        if (dims.size() >= window &&
            std::all_of(dims.end() - window, dims.end(), [&](std::size_t v) { return v == dims.back(); })) {
            return {GradedBasis::from_rows(field, d, answer), t, t_start};
        }
    }
    throw SaturationError("saturation in degree " + std::to_string(d) + " did not stabilize within " +
                          std::to_string(t_max) + " steps after t = " + std::to_string(t_start));
}

namespace {

std::size_t binomial(std::size_t n, std::size_t k)
{
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// h^<e>: write h = sum C(k_i, i) over i = e, e-1, ... with k_e > k_{e-1} > ..., shift each term.
std::size_t macaulay_bound(std::size_t h, unsigned e)
{
    std::size_t out = 0;
    for (unsigned i = e; i >= 1 && h > 0; --i) {
        std::size_t k = i;
        while (binomial(k + 1, i) <= h) ++k;
        h -= binomial(k, i);
        out += binomial(k + 1, i + 1);
    }
    return out;
}

}  // namespace

SaturationResult saturate_generated(const GeneratedIdeal& ideal, unsigned d, unsigned window, unsigned t_max)
{
    // Start where the Hilbert function of R/J has settled: from a degree e >= the top
    // generator degree with h(e+1) == h(e)^<e> it follows the Macaulay bound (persistence).
    unsigned e = ideal.max_generator_degree();
    auto h = [&](unsigned k) { return monomial_count(k) - ideal.piece(k).dim(); };
    for (unsigned guard = 0;; ++e, ++guard) {
        if (guard > 2 * t_max + 8)
            throw SaturationError("Hilbert function of the ideal did not settle past degree " + std::to_string(e));
        if (e > 0 && h(e + 1) == macaulay_bound(h(e), e)) break;
    }
    const unsigned start = e > d ? e - d : 0;
    return truncated_saturation([&](unsigned k) -> const GradedBasis& { return ideal.piece(k); }, ideal.field(), d,
                                window, t_max, start);
}

}  // namespace sympow
