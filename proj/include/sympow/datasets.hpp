#ifndef SYMPOW_DATASETS_HPP
#define SYMPOW_DATASETS_HPP

#include <optional>
#include <string>

#include "sympow/incidence.hpp"
#include "sympow/serialize.hpp"

namespace sympow {

/// A finite point set presented as the points of multiplicity >= k of a line
/// arrangement, together with the product of its lines.
struct Dataset {
    std::string name;
    FieldPtr field;
    std::vector<LinearForm> lines;
    std::vector<PointP2> points;
    int point_multiplicity = 3;
    std::optional<Arrangement> arrangement;  ///< set for fp-even
    std::optional<TriplePointSet> triples;   ///< set for fp-even

    HomForm product_form() const;
    /// Self-contained description; "lines" and "point_multiplicity" pin down the points.
    json config() const;
};

class DatasetError : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

Dataset fp_even_dataset(int n, FieldMode mode);
/// Coordinate triangle xyz over Q; the points are its three vertices.
Dataset coordinate_points_dataset();
/// The nine lines x - w^k y, y - w^k z, z - w^k x over Q(w), w^2 + w + 1 = 0.
Dataset dual_hesse_dataset();
/// {"field": descriptor (optional, default Q), "lines": [...], "point_multiplicity": k (optional, default 3)}.
Dataset dataset_from_json(const json& j);

/// Names accepted by --dataset.
Dataset named_dataset(const std::string& name, int n, FieldMode mode);

}  // namespace sympow

#endif  // SYMPOW_DATASETS_HPP
