#include "sympow/serialize.hpp"

namespace sympow {

json field_to_json(const FieldPtr& field)
{
    json minpoly = json::array();
    for (const auto& c : field->minimal_poly()) minpoly.push_back(to_string(c));
    json j = {{"minpoly", minpoly},
              {"root", {{"re", static_cast<double>(field->numeric_root().real())},
                        {"im", static_cast<double>(field->numeric_root().imag())}}},
              {"label", field->label()}};
    if (auto n = field->cyclotomic_order()) j["cyclotomic_order"] = *n;
    return j;
}

FieldPtr field_from_json(const json& j)
{
    UPoly m;
    for (const auto& c : j.at("minpoly")) m.push_back(parse_rational(c.get<std::string>()));
    const Complex root(j.at("root").at("re").get<double>(), j.at("root").at("im").get<double>());
    std::optional<int> order;
    if (j.contains("cyclotomic_order")) order = j.at("cyclotomic_order").get<int>();
    if (order) {
        FieldPtr cyc = cyclotomic_field(*order);
        if (cyc->minimal_poly() == m && std::abs(cyc->numeric_root() - root) < 1e-9L) return cyc;
    }
    if (m.size() == 2 && m[0] == -1 && m[1] == 1 && !order) return rational_field();
    return make_field(std::move(m), root, j.value("label", std::string{}), order);
}

json element_to_json(const FieldElement& x)
{
    json a = json::array();
    for (const auto& c : x.coeffs()) a.push_back(to_string(c));
    return a;
}

FieldElement element_from_json(const FieldPtr& field, const json& j)
{
    // A bare rational is accepted as shorthand for an element of Q.
    if (j.is_string()) return FieldElement(field, parse_rational(j.get<std::string>()));
    if (j.is_number_integer()) return FieldElement(field, Rational(j.get<long>()));
    if (!j.is_array()) throw AlgebraError("field element must be an array of rationals");
    std::vector<Rational> c;
    for (const auto& s : j) c.push_back(parse_rational(s.get<std::string>()));
    if (c.size() != field->degree()) throw AlgebraError("field element has wrong number of coordinates");
    return FieldElement(field, std::move(c));
}

json vector_to_json(const Vector& v)
{
    json a = json::array();
    for (const auto& x : v) a.push_back(element_to_json(x));
    return a;
}

Vector vector_from_json(const FieldPtr& field, const json& j)
{
    Vector v;
    for (const auto& x : j) v.push_back(element_from_json(field, x));
    return v;
}

json form_to_json(const HomForm& f)
{
    json terms = json::array();
    for (const auto& [e, c] : f.terms())
        terms.push_back({{"exp", {e[0], e[1], e[2]}}, {"coeff", element_to_json(c)}});
    return {{"degree", f.degree()}, {"terms", terms}};
}

HomForm form_from_json(const FieldPtr& field, const json& j)
{
    const unsigned degree = j.at("degree").get<unsigned>();
    HomForm::Terms terms;
    for (const auto& t : j.at("terms")) {
        const auto e = t.at("exp").get<std::array<unsigned, 3>>();
        if (!terms.emplace(e, element_from_json(field, t.at("coeff"))).second)
            throw AlgebraError("repeated monomial in serialized form");
    }
    return HomForm(field, degree, std::move(terms));
}

json point_to_json(const PointP2& p)
{
    return json::array({element_to_json(p[0]), element_to_json(p[1]), element_to_json(p[2])});
}

PointP2 point_from_json(const FieldPtr& field, const json& j)
{
    if (!j.is_array() || j.size() != 3) throw AlgebraError("point must have three coordinates");
    return PointP2(element_from_json(field, j[0]), element_from_json(field, j[1]), element_from_json(field, j[2]));
}

json line_to_json(const LinearForm& l)
{
    const auto c = l.coefficients();
    json j = {{"coeffs", json::array({element_to_json(c[0]), element_to_json(c[1]), element_to_json(c[2])})}};
    if (const auto& p = l.provenance()) {
        if (p->tangent)
            j["tangent_at"] = p->first;
        else
            j["through"] = {p->first, p->second};
    }
    return j;
}

LinearForm line_from_json(const FieldPtr& field, const json& j)
{
    const auto& c = j.at("coeffs");
    if (c.size() != 3) throw AlgebraError("line must have three coefficients");
    std::optional<LineProvenance> prov;
    if (j.contains("tangent_at")) {
        const int i = j.at("tangent_at").get<int>();
        prov = LineProvenance{i, i, true};
    } else if (j.contains("through")) {
        prov = LineProvenance{j.at("through")[0].get<int>(), j.at("through")[1].get<int>(), false};
    }
    return LinearForm(HomForm::linear(element_from_json(field, c[0]), element_from_json(field, c[1]),
                                      element_from_json(field, c[2])),
                      prov);
}

json arrangement_to_json(const Arrangement& arr, const TriplePointSet* triples)
{
    json pts = json::array();
    for (const auto& p : arr.points) pts.push_back(point_to_json(p));
    json lines = json::array();
    for (const auto& l : arr.lines) lines.push_back(line_to_json(l));
    json j = {{"name", "fp-even"},
              {"n", arr.n},
              {"field_mode", arr.mode == FieldMode::compact ? "compact" : "cyclotomic"},
              {"field", field_to_json(arr.field)},
              {"points", pts},
              {"lines", lines},
              {"tangent_indices", arr.tangent_indices}};
    if (triples) {
        json tp = json::array();
        for (std::size_t k = 0; k < triples->points.size(); ++k) {
            json ts = json::array();
            for (const auto& t : triples->triples[k]) ts.push_back(t);
            tp.push_back({{"point", point_to_json(triples->points[k])}, {"lines", ts}});
        }
        j["triple_points"] = tp;
    }
    return j;
}

}  // namespace sympow
