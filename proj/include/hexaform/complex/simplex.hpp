#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hexaform::complex {

using VertexId = std::uint32_t;

/// Simplex with K vertices held in strictly increasing order.
template <std::size_t K>
struct Simplex {
    std::array<VertexId, K> v{};

    VertexId operator[](std::size_t i) const { return v[i]; }
    bool contains(VertexId x) const
    {
        for (auto y : v)
            if (y == x)
                return true;
        return false;
    }
    auto operator<=>(const Simplex&) const = default;
};

using Triangle = Simplex<3>;
using Tetrahedron = Simplex<4>;

/// 4-simplex u = ijklm with i < j < k < l < m.
struct Pentachoron : Simplex<5> {
    Pentachoron() = default;
    /// Validates strict increase; MalformedInput otherwise.
    explicit Pentachoron(std::array<VertexId, 5> vertices);
    /// Sorts first; rejects repeated vertices.
    static Pentachoron from_unsorted(std::array<VertexId, 5> vertices);
};

/// The five 3-faces in inverse lexicographic order jklm, iklm, ijlm, ijkm,
/// ijkl: face k omits the k-th vertex.
std::array<Tetrahedron, 5> faces(const Pentachoron& u);

/// Faces of a tetrahedron, face k omitting its k-th vertex.
std::array<Triangle, 4> faces(const Tetrahedron& t);

/// Triangles of a pentachoron in lexicographic order.
std::array<Triangle, 10> triangles(const Pentachoron& u);

std::string to_string(const Pentachoron& u);
std::string to_string(const Tetrahedron& t);

/// Sign of the permutation that sorts `values` (all distinct).
int sort_parity(std::vector<VertexId> values);

} // namespace hexaform::complex
