#pragma once

#include "hexaform/complex/triangulation.hpp"

#include <string_view>

namespace hexaform::complex {

/// ∂Δ⁵ on vertices 0..5, facets ordered by omitted vertex (12345 first),
/// oriented so the facet omitting i has sign (-1)^i.
Triangulation boundary_delta5();

/// Kühnel's 9-vertex ℂP² (36 pentachora), oriented with the first facet +1.
Triangulation cp2_kuhnel9();

/// Single oriented pentachoron 01234 (a 4-ball).
Triangulation single_pentachoron();

/// "s4" or "cp2"; UsageError otherwise.
Triangulation builtin(std::string_view name);

} // namespace hexaform::complex
