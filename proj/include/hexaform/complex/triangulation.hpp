#pragma once

#include "hexaform/complex/simplex.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hexaform::complex {

/// Where a tetrahedron sits: which pentachoron, and its index in faces(u).
struct FaceIncidence {
    std::size_t pentachoron;
    std::size_t position;
};

/// Simplicial 4-complex given by its pentachora, optionally with orientation
/// signs ε_u aligned with the pentachoron list.
///
/// Construction enforces: pentachora distinct, every tetrahedron in at most
/// two pentachora, and (when signs are present) coherence: the two induced
/// orientations ε_u·(-1)^pos of each interior tetrahedron are opposite.
class Triangulation {
public:
    Triangulation() = default;
    Triangulation(std::string name, std::vector<Pentachoron> pentachora,
                  std::optional<std::vector<int>> signs = std::nullopt);

    const std::string& name() const noexcept { return name_; }
    const std::vector<Pentachoron>& pentachora() const noexcept { return pentachora_; }
    const std::optional<std::vector<int>>& signs() const noexcept { return signs_; }
    bool oriented() const noexcept { return signs_.has_value(); }
    /// Signs or OrientationError.
    const std::vector<int>& require_signs() const;

    std::size_t size() const noexcept { return pentachora_.size(); }
    std::vector<VertexId> vertex_ids() const;
    std::size_t vertex_count() const { return vertex_ids().size(); }
    std::vector<std::pair<VertexId, VertexId>> edges() const;
    std::vector<Triangle> triangles() const;
    /// Sorted, deduplicated.
    std::vector<Tetrahedron> tetrahedra() const;
    std::map<Tetrahedron, std::vector<FaceIncidence>> tetrahedron_incidence() const;

    bool is_closed() const;
    /// Connected through shared tetrahedra.
    bool is_connected() const;
    /// f0 - f1 + f2 - f3 + f4.
    long long euler_characteristic() const;

    Triangulation with_signs(std::vector<int> signs) const;
    Triangulation without_signs() const;
    Triangulation renamed(std::string name) const;

    friend bool operator==(const Triangulation&, const Triangulation&) = default;

private:
    std::string name_;
    std::vector<Pentachoron> pentachora_;
    std::optional<std::vector<int>> signs_;
};

/// Coherent signs with the first pentachoron fixed to +1. OrientationError
/// for empty, disconnected, or non-orientable complexes.
Triangulation orient(const Triangulation& t);

/// Whether the given signs are coherent on t (size must match).
bool is_coherent(const Triangulation& t, const std::vector<int>& signs);

/// Renumbers vertices through `relabeling` (old id -> new id, injective).
/// Pentachora are re-sorted and signs multiplied by the sorting parity, so
/// the orientation of the manifold is preserved. Pentachoron order is kept.
Triangulation relabel(const Triangulation& t, const std::map<VertexId, VertexId>& relabeling);

/// Vertex bijection a -> b carrying the pentachoron set of a onto that of b,
/// if one exists (orientation ignored).
std::optional<std::map<VertexId, VertexId>> find_isomorphism(const Triangulation& a, const Triangulation& b);
inline bool isomorphic(const Triangulation& a, const Triangulation& b) { return find_isomorphism(a, b).has_value(); }

} // namespace hexaform::complex
