#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "parigrade/arena.hpp"

namespace parigrade {

struct WitnessError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownColourError : WitnessError {
    Colour colour;
    explicit UnknownColourError(Colour c)
        : WitnessError("colour " + std::to_string(c) + " is not representable"), colour(c) {}
};

struct LengthMismatchError : WitnessError {
    LengthMismatchError() : WitnessError("witness lengths differ") {}
};

struct ValueOfWonError : WitnessError {
    ValueOfWonError() : WitnessError("value is undefined on the Won witness") {}
};

struct ClampBoundOddError : WitnessError {
    ClampBoundOddError() : WitnessError("clamp bound must be even") {}
};

enum class RuleVariant : std::uint8_t {
    Paper,   // overflow writes allowed for odd colours too
    Calude,  // overflow writes restricted to even colours
};

struct UpdateMode {
    RuleVariant variant = RuleVariant::Paper;
    bool compress = true;

    bool operator==(const UpdateMode&) const = default;
};

// Ordinal encoding of the entry order on colour-or-blank:
//   blank < largest odd < ... < 3 < 1 < 2 < 4 < ... < largest even.
// Blank always has rank 0. When built with compress=true, the top colour (if
// odd) and the bottom colour (if odd) get no rank: entries holding them are
// never written.
class ColourTable {
  public:
    ColourTable(std::span<const Colour> colours, bool compress);

    bool compressed() const { return compress_; }

    // Ranked colours plus blank.
    std::size_t rank_count() const { return by_rank_.size(); }

    std::optional<std::uint32_t> rank_of(Colour c) const;
    std::uint32_t rank(Colour c) const;  // throws UnknownColourError

    // rank 0 decodes to blank (nullopt).
    std::optional<Colour> colour_of_rank(std::uint32_t r) const;

    bool rank_is_even_colour(std::uint32_t r) const { return r > odd_ranks_; }

    bool known(Colour c) const;  // in the game's colour set (ranked or dropped)
    std::optional<Colour> top_odd() const { return top_odd_; }
    std::optional<Colour> bottom_odd() const { return bottom_odd_; }

    std::span<const Colour> game_colours() const { return game_colours_; }

  private:
    bool compress_;
    std::vector<Colour> game_colours_;        // sorted ascending
    std::vector<std::optional<Colour>> by_rank_;  // by_rank_[0] = blank
    std::unordered_map<Colour, std::uint32_t> rank_;
    std::uint32_t odd_ranks_ = 0;  // ranks 1..odd_ranks_ hold odd colours
    std::optional<Colour> top_odd_;
    std::optional<Colour> bottom_odd_;
};

// Entry order on colour-or-blank (nullopt = blank).
std::strong_ordering compare_colours(std::optional<Colour> a, std::optional<Colour> b,
                                     const ColourTable& table);

// A fixed-length tuple of entry ranks, or the distinguished top element Won.
// Entries are stored leftmost (most significant) first; `position` indices
// count from the right, position 0 being least significant.
class Witness {
  public:
    static Witness bottom(std::size_t length) {
        Witness w;
        w.ranks_.assign(length, 0);
        return w;
    }
    static Witness won() {
        Witness w;
        w.won_ = true;
        return w;
    }

    bool is_won() const { return won_; }
    std::size_t length() const { return ranks_.size(); }

    std::uint32_t rank_at(std::size_t position) const {
        return ranks_[ranks_.size() - 1 - position];
    }
    void set_rank(std::size_t position, std::uint32_t r) {
        ranks_[ranks_.size() - 1 - position] = r;
    }
    bool blank_at(std::size_t position) const { return rank_at(position) == 0; }

    std::optional<Colour> entry(std::size_t position, const ColourTable& table) const {
        return table.colour_of_rank(rank_at(position));
    }

    std::span<const std::uint32_t> ranks() const { return ranks_; }

    bool operator==(const Witness&) const = default;

  private:
    std::vector<std::uint32_t> ranks_;
    bool won_ = false;
};

// Lexicographic from the leftmost entry; Won above everything.
// Throws LengthMismatchError when both sides are tuples of different lengths.
std::strong_ordering compare(const Witness& a, const Witness& b);

// Non-blank entries non-increasing (in natural colour order) from left to right.
bool shape_valid(const Witness& w, const ColourTable& table);

// Sum of 2^position over positions holding an even colour.
std::uint64_t value(const Witness& w, const ColourTable& table);

// Raw update: best tuple reachable by one update rule when a vertex of colour
// d is consumed. Rules, for a position j:
//   overflow: entries below j all even, entries above j all blank or >= d;
//             writes d at j, blanks below. Calude variant: d must be even.
//   local:    entry j non-blank and < d, entries above all blank or >= d;
//             writes d at j, blanks below.
//   stale:    every entry blank or >= d; tuple unchanged.
// Under compression: d equal to the bottom odd colour is ignored (identity);
// a written entry equal to the top odd colour becomes blank, as does an odd
// colour written at position 0.
Witness raw_update(const Witness& w, Colour d, UpdateMode mode, const ColourTable& table);

// Same result via the leftmost-improving-position shortcut.
Witness raw_update_leftmost(const Witness& w, Colour d, UpdateMode mode,
                            const ColourTable& table);

// Capped update: Won when the raw update's value exceeds threshold_e, or when
// a full tuple of even entries absorbs a further even colour (the carry-out
// case; see README notes on the threshold). Won itself is absorbing.
Witness update(const Witness& w, Colour d, std::uint64_t threshold_e, UpdateMode mode,
               const ColourTable& table);

// Least shape-valid tuple that is >= w and has a blank at position 0;
// nullopt when none exists.
std::optional<Witness> min_blank_tail(const Witness& w, const ColourTable& table);

// Antagonistic update: minimum of update over all tuples >= w. Computed from
// the two candidates w and min_blank_tail(w).
Witness antagonistic_update(const Witness& w, Colour d, std::uint64_t threshold_e,
                            UpdateMode mode, const ColourTable& table);

// For even x: keeps entries that are blank or >= x; the highest-index entry
// below x becomes x-1 and everything under it is blanked.
Witness clamp_below(const Witness& w, Colour x, const ColourTable& table);

// Debug form: entries left to right, `_` for blank, `WON` for the top element.
std::string to_string(const Witness& w, const ColourTable& table);

// Inverse of to_string, for tests and traces.
Witness witness_from_string(std::string_view text, std::size_t length,
                            const ColourTable& table);

}  // namespace parigrade
