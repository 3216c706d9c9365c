#include "sympow/datasets.hpp"

#include <algorithm>

namespace sympow {

namespace {

std::vector<PointP2> points_of(const std::vector<LinearForm>& lines, int k)
{
    auto pts = classify_intersections(lines).points_with_multiplicity_at_least(k);
    std::sort(pts.begin(), pts.end());
    return pts;
}

}  // namespace

HomForm Dataset::product_form() const
{
    std::vector<HomForm> forms;
    for (const auto& l : lines) forms.push_back(l.form());
    return product(field, forms);
}

json Dataset::config() const
{
    if (arrangement) {
        json j = arrangement_to_json(*arrangement, triples ? &*triples : nullptr);
        j["point_multiplicity"] = point_multiplicity;
        return j;
    }
    json ls = json::array();
    for (const auto& l : lines) ls.push_back(line_to_json(l));
    return {{"name", name}, {"field", field_to_json(field)}, {"lines", ls}, {"point_multiplicity", point_multiplicity}};
}

Dataset fp_even_dataset(int n, FieldMode mode)
{
    if (n < 6 || n % 2 != 0) throw DatasetError("fp-even needs an even n >= 6, got " + std::to_string(n));
    Dataset ds;
    ds.name = "fp-even";
    ds.arrangement = build_arrangement(n, mode);
    ds.field = ds.arrangement->field;
    ds.lines = ds.arrangement->lines;
    ds.triples = triple_points(*ds.arrangement);
    ds.points = ds.triples->points;
    ds.point_multiplicity = 3;
    return ds;
}

Dataset coordinate_points_dataset()
{
    Dataset ds;
    ds.name = "coordinate-points";
    ds.field = rational_field();
    for (Var v : {Var::x, Var::y, Var::z}) ds.lines.emplace_back(HomForm::variable(ds.field, v));
    ds.point_multiplicity = 2;
    ds.points = points_of(ds.lines, 2);
    return ds;
}

Dataset dual_hesse_dataset()
{
    Dataset ds;
    ds.name = "dual-hesse";
    ds.field = cyclotomic_field(3);
    const FieldElement one(ds.field, Rational(1));
    const FieldElement zero(ds.field);
    const FieldElement w = FieldElement::generator(ds.field);
    FieldElement wk = one;
    for (int k = 0; k < 3; ++k) {
        const FieldElement c = -wk;
        ds.lines.emplace_back(HomForm::linear(one, c, zero));
        ds.lines.emplace_back(HomForm::linear(zero, one, c));
        ds.lines.emplace_back(HomForm::linear(c, zero, one));
        wk *= w;
    }
    ds.point_multiplicity = 3;
    ds.points = points_of(ds.lines, 3);
    return ds;
}

Dataset dataset_from_json(const json& j)
{
    Dataset ds;
    ds.name = j.value("name", std::string("custom"));
    ds.field = j.contains("field") ? field_from_json(j.at("field")) : rational_field();
    if (!j.contains("lines") || !j.at("lines").is_array()) throw DatasetError("configuration has no \"lines\" array");
    for (const auto& l : j.at("lines")) ds.lines.push_back(line_from_json(ds.field, l));
    if (ds.lines.empty()) throw DatasetError("configuration has no lines");
    for (std::size_t a = 0; a < ds.lines.size(); ++a)
        for (std::size_t b = a + 1; b < ds.lines.size(); ++b)
            if (same_line(ds.lines[a], ds.lines[b]))
                throw DatasetError("lines " + std::to_string(a) + " and " + std::to_string(b) + " coincide");
    ds.point_multiplicity = j.value("point_multiplicity", 3);
    if (ds.point_multiplicity < 2) throw DatasetError("point_multiplicity must be at least 2");
    ds.points = points_of(ds.lines, ds.point_multiplicity);
    return ds;
}

Dataset named_dataset(const std::string& name, int n, FieldMode mode)
{
    if (name == "fp-even") return fp_even_dataset(n, mode);
    if (name == "coordinate-points") return coordinate_points_dataset();
    if (name == "dual-hesse") return dual_hesse_dataset();
    throw DatasetError("unknown dataset '" + name + "' (fp-even, coordinate-points, dual-hesse)");
}

}  // namespace sympow
