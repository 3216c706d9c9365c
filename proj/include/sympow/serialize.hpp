#ifndef SYMPOW_SERIALIZE_HPP
#define SYMPOW_SERIALIZE_HPP

// JSON encodings. Coefficients are written as exact "p/q" strings, one per
// power-basis coordinate; forms list their terms in grevlex order.

#include <json.hpp>

#include "sympow/exactla.hpp"
#include "sympow/incidence.hpp"

namespace sympow {

using json = nlohmann::json;

json field_to_json(const FieldPtr& field);
FieldPtr field_from_json(const json& j);

json element_to_json(const FieldElement& x);
FieldElement element_from_json(const FieldPtr& field, const json& j);

json vector_to_json(const Vector& v);
Vector vector_from_json(const FieldPtr& field, const json& j);

json form_to_json(const HomForm& f);
HomForm form_from_json(const FieldPtr& field, const json& j);

json point_to_json(const PointP2& p);
PointP2 point_from_json(const FieldPtr& field, const json& j);

json line_to_json(const LinearForm& l);
LinearForm line_from_json(const FieldPtr& field, const json& j);

json arrangement_to_json(const Arrangement& arr, const TriplePointSet* triples = nullptr);

}  // namespace sympow

#endif  // SYMPOW_SERIALIZE_HPP
