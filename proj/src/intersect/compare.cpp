#include "hexaform/intersect/compare.hpp"

#include "hexaform/errors.hpp"
#include "hexaform/hexagon/action.hpp"
#include "hexaform/intersect/cup_form.hpp"
#include "hexaform/invariants/serialize.hpp"

#include <algorithm>

namespace hexaform::intersect {

ComparisonReport compare_forms(const complex::Triangulation& t)
{
    if (!t.is_closed())
        throw UsageError("form comparison needs a closed triangulation");
    t.require_signs();
    ComparisonReport r;
    r.manifold = t.name();
    r.hexagon = invariants::form_invariants(hexagon::gram_matrix(t));
    const auto cup = quotient_cup_form(t).gram;
    r.cup = invariants::form_invariants(cup);
    const auto differ = invariants::differing_fields(r.hexagon, r.cup);
    for (const auto& f : invariants::field_names())
        if (std::find(differ.begin(), differ.end(), f) == differ.end())
            r.equal_fields.push_back(f);
    r.nondegenerate_equal = invariants::same_nondegenerate_part(r.hexagon, r.cup);
    r.equal_up_to_sign = r.nondegenerate_equal
                      || invariants::same_nondegenerate_part(r.hexagon, invariants::form_invariants(-cup));
    return r;
}

nlohmann::json to_json(const ComparisonReport& r)
{
    return {
        {"manifold", r.manifold},
        {"hexagon", invariants::to_json(r.hexagon)},
        {"cup", invariants::to_json(r.cup)},
        {"cup_quotient", "saturated coboundary lattice"},
        {"equal_fields", r.equal_fields},
        {"equal_up_to_sign", r.equal_up_to_sign},
        {"nondegenerate_equal", r.nondegenerate_equal},
    };
}

} // namespace hexaform::intersect
