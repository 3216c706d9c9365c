#include "sympow/certificate.hpp"

#include <algorithm>
#include <functional>

namespace sympow {

namespace {

constexpr const char* kFormat = "sympow-certificate/1";

FieldElement apply_dual(const Vector& dual, const HomForm& f, const Exponent& shift)
{
    FieldElement acc(f.field());
    for (const auto& [e, c] : f.terms()) {
        const auto& l = dual[monomial_index({e[0] + shift[0], e[1] + shift[1], e[2] + shift[2]})];
        if (!l.is_zero()) acc += c * l;
    }
    return acc;
}

std::vector<PointP2> points_from_lines(const FieldPtr& field, const json& lines, int multiplicity)
{
    std::vector<LinearForm> ls;
    for (const auto& l : lines) ls.push_back(line_from_json(field, l));
    return classify_intersections(ls).points_with_multiplicity_at_least(multiplicity);
}

}  // namespace

json Certificate::to_json() const
{
    json pts = json::array();
    for (const auto& p : points) pts.push_back(point_to_json(p));
    json gens = json::array();
    for (const auto& g : generators) gens.push_back(form_to_json(g));
    json hil = json::array();
    for (std::size_t d = 0; d < hilbert.size(); ++d) hil.push_back({d, hilbert[d]});
    json checks_json = json::object();
    for (const auto& [name, passed] : checks) checks_json[name] = passed;
    return {{"format", kFormat},
            {"config", config},
            {"field", field_to_json(field)},
            {"scheme",
             {{"multiplicity", 1},
              {"symbolic_multiplicity", symbolic_multiplicity},
              {"power", power},
              {"points", pts}}},
            {"generators", gens},
            {"complete_to", complete_to},
            {"hilbert", hil},
            {"dual_functional", {{"degree", degree()}, {"coeffs", vector_to_json(dual)}}},
            {"F", form_to_json(form)},
            {"checks", checks_json}};
}

Certificate Certificate::from_json(const json& j)
{
    if (j.value("format", std::string{}) != kFormat) throw AlgebraError("unrecognized certificate format");
    Certificate c;
    c.config = j.at("config");
    c.field = field_from_json(j.at("field"));
    const auto& scheme = j.at("scheme");
    if (scheme.at("multiplicity").get<unsigned>() != 1)
        throw AlgebraError("certificate generators must describe a reduced point scheme");
    c.symbolic_multiplicity = scheme.at("symbolic_multiplicity").get<unsigned>();
    c.power = scheme.at("power").get<unsigned>();
    for (const auto& p : scheme.at("points")) c.points.push_back(point_from_json(c.field, p));
    for (const auto& g : j.at("generators")) c.generators.push_back(form_from_json(c.field, g));
    c.complete_to = j.at("complete_to").get<unsigned>();
    for (const auto& row : j.at("hilbert")) {
        if (row.at(0).get<std::size_t>() != c.hilbert.size()) throw AlgebraError("hilbert table rows out of order");
        c.hilbert.push_back(row.at(1).get<std::size_t>());
    }
    c.form = form_from_json(c.field, j.at("F"));
    const auto& dual = j.at("dual_functional");
    if (dual.at("degree").get<unsigned>() != c.form.degree())
        throw AlgebraError("dual functional degree differs from the form degree");
    c.dual = vector_from_json(c.field, dual.at("coeffs"));
    if (j.contains("checks"))
        for (const auto& [name, passed] : j.at("checks").items()) c.checks.emplace_back(name, passed.get<bool>());
    return c;
}

Certificate nonmember_certificate(const HomForm& form, const IdealPresentation& pres, const FatPointScheme& points,
                                  unsigned symbolic_multiplicity, unsigned power, json config)
{
    const unsigned n = form.degree();
    const GradedBasis span = power_piece(pres, power, n);
    const SpanWitness w = span_decide(form.dense(), span.matrix());
    if (w.member()) {
        // The combination refers to the echelonized basis of the power piece.
        throw MembershipContradiction("form of degree " + std::to_string(n) + " lies in the power of the ideal",
                                      w.combination);
    }
    Certificate c;
    c.config = std::move(config);
    c.field = pres.field;
    c.points = points.points;
    c.symbolic_multiplicity = symbolic_multiplicity;
    c.power = power;
    c.generators = pres.generators;
    c.complete_to = pres.complete_to;
    c.hilbert = pres.hilbert;
    c.dual = w.dual;
    c.form = form;
    const VerificationResult v = verify_certificate(c);
    for (const auto& chk : v.checks) c.checks.emplace_back(chk.name, chk.passed);
    if (!v.ok()) throw std::logic_error("freshly built certificate fails check " + v.checks[v.first_failure() - 1].name);
    return c;
}

bool VerificationResult::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

int VerificationResult::first_failure() const
{
    for (std::size_t i = 0; i < checks.size(); ++i)
        if (!checks[i].passed) return static_cast<int>(i) + 1;
    return 0;
}

VerificationResult verify_certificate(const Certificate& cert)
{
    VerificationResult res;
    const FieldPtr& field = cert.field;
    const FatPointScheme reduced{field, cert.points, 1};

    // (1) generators vanish at the points, which must be the multiple points of the lines.
    {
        CheckResult r{kCheckNames[0], true, ""};
        if (cert.config.contains("lines")) {
            auto derived =
                points_from_lines(field, cert.config.at("lines"), cert.config.value("point_multiplicity", 3));
            auto listed = cert.points;
            std::sort(derived.begin(), derived.end());
            std::sort(listed.begin(), listed.end());
            if (derived != listed) {
                r.passed = false;
                r.detail = "scheme points are not the triple points of the configuration lines";
            }
        }
        for (std::size_t g = 0; r.passed && g < cert.generators.size(); ++g) {
            for (std::size_t i = 0; i < cert.points.size(); ++i) {
                if (!p_eval(cert.generators[g], cert.points[i]).is_zero()) {
                    r.passed = false;
                    r.detail = "generator " + std::to_string(g) + " does not vanish at point " + std::to_string(i);
                    break;
                }
            }
        }
        res.checks.push_back(r);
    }

    // (2) generators span every graded piece up to complete_to.
    {
        CheckResult r{kCheckNames[1], true, ""};
        std::optional<unsigned> gamma;
        for (std::size_t g = 0; g < cert.generators.size(); ++g) {
            const unsigned deg = cert.generators[g].degree();
            if (g > 0 && deg < cert.generators[g - 1].degree()) {
                r.passed = false;
                r.detail = "generators not sorted by degree";
            }
            if (deg > cert.complete_to) {
                r.passed = false;
                r.detail = "generator beyond the certified degree bound";
            }
            if (!gamma) gamma = deg;
        }
        if (r.passed && cert.hilbert.size() != cert.complete_to + 1) {
            r.passed = false;
            r.detail = "hilbert table does not cover 0.." + std::to_string(cert.complete_to);
        }
        if (r.passed && gamma) {
            const long need = static_cast<long>(cert.degree()) - static_cast<long>(*gamma) * (cert.power - 1);
            if (need > static_cast<long>(cert.complete_to)) {
                r.passed = false;
                r.detail = "degree bound " + std::to_string(cert.complete_to) + " below required " + std::to_string(need);
            }
        }
        for (unsigned d = 0; r.passed && d <= cert.complete_to; ++d) {
            const std::size_t fat = fat_piece(reduced, d).dim();
            const std::size_t spanned = ideal_piece(field, cert.generators, d).dim();
            if (fat != cert.hilbert[d] || spanned != fat) {
                r.passed = false;
                r.detail = "degree " + std::to_string(d) + ": table " + std::to_string(cert.hilbert[d]) + ", points " +
                           std::to_string(fat) + ", generated " + std::to_string(spanned);
            }
        }
        res.checks.push_back(r);
    }

    const unsigned n = cert.degree();
    const bool dual_shape_ok = cert.dual.size() == monomial_count(n);

    // (3) the dual kills monomial * (r-fold generator product) in degree n.
    {
        CheckResult r{kCheckNames[2], dual_shape_ok, dual_shape_ok ? "" : "dual functional has wrong length"};
        const std::size_t k = cert.generators.size();
        std::vector<std::size_t> idx;
        std::function<void(std::size_t, const HomForm&)> walk = [&](std::size_t from, const HomForm& prod) {
            if (!r.passed) return;
            if (idx.size() == cert.power) {
                for (const auto& mu : monomial_basis(n - prod.degree())) {
                    if (!apply_dual(cert.dual, prod, mu).is_zero()) {
                        r.passed = false;
                        r.detail = "dual does not vanish on a product of generators";
                        return;
                    }
                }
                return;
            }
            for (std::size_t g = from; g < k; ++g) {
                if (prod.degree() + cert.generators[g].degree() > n) continue;
                idx.push_back(g);
                walk(g, prod * cert.generators[g]);
                idx.pop_back();
            }
        };
        if (r.passed) walk(0, HomForm::monomial(field, {0, 0, 0}, FieldElement(field, Rational(1))));
        res.checks.push_back(r);
    }

    // (4) the dual does not vanish on F.
    {
        CheckResult r{kCheckNames[3], dual_shape_ok, ""};
        if (!dual_shape_ok || apply_dual(cert.dual, cert.form, {0, 0, 0}).is_zero()) {
            r.passed = false;
            r.detail = "dual functional vanishes on F";
        }
        res.checks.push_back(r);
    }

    // (5) F vanishes to the symbolic order at every point.
    {
        const SymbolicReport sym = symbolic_member(cert.form, reduced.with_multiplicity(cert.symbolic_multiplicity));
        CheckResult r{kCheckNames[4], sym.member, ""};
        if (!sym.member) r.detail = "F does not vanish to order " + std::to_string(cert.symbolic_multiplicity);
        res.checks.push_back(r);
    }
    return res;
}

}  // namespace sympow
