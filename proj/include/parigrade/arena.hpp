#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace parigrade {

using Colour = std::uint32_t;
using VertexId = std::uint32_t;

enum class Player : std::uint8_t { Even = 0, Odd = 1 };

inline Player opponent(Player p) { return p == Player::Even ? Player::Odd : Player::Even; }
inline bool colour_is_even(Colour c) { return (c & 1) == 0; }

struct ArenaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DeadEndError : ArenaError {
    VertexId vertex;
    explicit DeadEndError(VertexId v)
        : ArenaError("vertex " + std::to_string(v) + " has no successor"), vertex(v) {}
};

struct DanglingEdgeError : ArenaError {
    VertexId from;
    VertexId to;
    DanglingEdgeError(VertexId f, VertexId t)
        : ArenaError("edge " + std::to_string(f) + " -> " + std::to_string(t) +
                     " targets an unknown vertex"),
          from(f), to(t) {}
};

struct DuplicateIdError : ArenaError {
    VertexId id;
    explicit DuplicateIdError(VertexId v)
        : ArenaError("duplicate vertex id " + std::to_string(v)), id(v) {}
};

struct VertexRecord {
    VertexId id = 0;
    Player owner = Player::Even;
    Colour colour = 0;
    std::string name;  // empty = unnamed

    bool operator==(const VertexRecord&) const = default;
};

// Pre-validation input: ids must be dense (a permutation of 0..n-1); any
// sparse-id remapping is the parser's job.
struct RawVertex {
    VertexId id = 0;
    Player owner = Player::Even;
    Colour colour = 0;
    std::vector<VertexId> successors;
    std::string name;
};
using RawGame = std::vector<RawVertex>;

// Derived per-game numbers driving the witness machinery.
//   witness_length: floor(log2(e)) + 1 for e >= 1, and 1 for e = 0.
//   relevant_colours: distinct colours minus the top colour if odd and minus
//   the bottom colour if odd.
struct ArenaStats {
    std::uint64_t even_vertices = 0;     // e
    std::size_t relevant_colours = 0;    // r
    std::size_t witness_length = 1;      // L
    bool top_odd_dropped = false;
    bool bottom_odd_dropped = false;

    bool operator==(const ArenaStats&) const = default;
};

// Immutable after validation; safe to share across threads.
class Arena {
  public:
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const VertexRecord& vertex(VertexId v) const { return vertices_[v]; }
    Player owner(VertexId v) const { return vertices_[v].owner; }
    Colour colour(VertexId v) const { return vertices_[v].colour; }

    std::span<const VertexId> successors(VertexId v) const { return succ_[v]; }
    std::span<const VertexId> predecessors(VertexId v) const { return pred_[v]; }

    // Distinct colours present, ascending.
    std::span<const Colour> colour_set() const { return colour_set_; }

    bool operator==(const Arena& other) const;

    friend Arena validate(const RawGame& raw);

  private:
    std::vector<VertexRecord> vertices_;
    std::vector<std::vector<VertexId>> succ_;
    std::vector<std::vector<VertexId>> pred_;
    std::vector<Colour> colour_set_;
    std::size_t edge_count_ = 0;
};

// Checks ids are dense and unique, every vertex has a successor, and every
// edge targets a known vertex. Duplicate edges are collapsed; successor and
// predecessor lists come out sorted, with predecessors the exact transpose.
Arena validate(const RawGame& raw);

ArenaStats stats(const Arena& arena);

std::vector<VertexId> reverse_play(std::span<const VertexId> play);

// Positional strategy: choice[v] is the chosen successor, kNoChoice where the
// strategy is undefined. Defined exactly on `owner`'s vertices inside the
// region it was extracted for.
struct Strategy {
    static constexpr VertexId kNoChoice = UINT32_MAX;

    Player owner = Player::Even;
    std::vector<VertexId> choice;

    explicit Strategy(Player p = Player::Even, std::size_t n = 0)
        : owner(p), choice(n, kNoChoice) {}

    bool defined(VertexId v) const { return choice[v] != kNoChoice; }
};

}  // namespace parigrade
