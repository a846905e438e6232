#pragma once

#include "hexaform/complex/triangulation.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace hexaform::complex {

/// Pachner move k-(6−k): k facets of a ∂Δ⁵ replaced by the other 6−k.
enum class MoveKind { k1_5, k2_4, k3_3, k4_2, k5_1 };

/// Number of pentachora removed by a move of this kind.
int removed_count(MoveKind kind);
std::string to_string(MoveKind kind);
/// Accepts "1-5", "2-4", "3-3", "4-2", "5-1"; UsageError otherwise.
MoveKind parse_move_kind(std::string_view text);
MoveKind inverse(MoveKind kind);
/// Comma-separated list of kinds.
std::vector<MoveKind> parse_move_script(std::string_view text);

struct MoveDescriptor {
    MoveKind kind = MoveKind::k1_5;
    /// Indices (ascending) of the pentachora replaced by the move.
    std::vector<std::size_t> target;
    /// Vertex set of the supporting ∂Δ⁵, ascending; includes the new vertex
    /// of a 1-5 move.
    std::array<VertexId, 6> six_vertices{};

    friend bool operator==(const MoveDescriptor&, const MoveDescriptor&) = default;
};

std::string to_string(const MoveDescriptor& d);

/// Every valid descriptor of the given kind, in a deterministic order. For
/// 1-5 the new vertex is max id + 1.
std::vector<MoveDescriptor> find_moves(const Triangulation& t, MoveKind kind);

/// Checks the descriptor against t; MoveError describing the first failed
/// condition, or nothing when the move applies.
void validate_move(const Triangulation& t, const MoveDescriptor& d);

/// Replaces the target pentachora by the complementary facets of the same
/// ∂Δ⁵. Surviving pentachora keep their order and come first, new ones
/// follow in ascending order. When t is oriented the new facets get the
/// signs that continue its orientation. A 5-1 move that deletes a vertex
/// renumbers larger ids down by one; the renumbering is order preserving, so
/// no sign changes.
Triangulation apply_move(const Triangulation& t, const MoveDescriptor& d);

/// Seeded move picker. Draws straight from mt19937_64 with modulo selection
/// (no std distributions), so a seed replays identically on any platform.
class MovePicker {
public:
    explicit MovePicker(std::uint64_t seed) : engine_(seed) {}

    /// Uniform among kinds with at least one candidate, then uniform among
    /// that kind's candidates. MoveNotFound if nothing applies.
    MoveDescriptor pick(const Triangulation& t);
    /// Uniform among the candidates of one kind. MoveNotFound if none.
    MoveDescriptor pick(const Triangulation& t, MoveKind kind);

private:
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
    std::mt19937_64 engine_;
};

} // namespace hexaform::complex
