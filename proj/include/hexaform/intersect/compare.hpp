#pragma once

#include "hexaform/invariants/form_invariants.hpp"
#include "hexaform/complex/triangulation.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hexaform::intersect {

struct ComparisonReport {
    std::string manifold;
    invariants::FormInvariants hexagon;
    invariants::FormInvariants cup;
    /// Names from invariants::field_names() on which the two agree.
    std::vector<std::string> equal_fields;
    /// The nondegenerate parts agree (everything except dim and radical).
    bool nondegenerate_equal = false;
    /// The hexagon form's nondegenerate part agrees with that of −cup.
    bool equal_up_to_sign = false;
};

/// Form invariants of the hexagon Gram matrix and of the cup form on
/// Z²/B². UsageError unless t is closed; OrientationError unless oriented.
ComparisonReport compare_forms(const complex::Triangulation& t);

nlohmann::json to_json(const ComparisonReport& r);

} // namespace hexaform::intersect
