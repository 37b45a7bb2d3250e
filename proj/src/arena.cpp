#include "parigrade/arena.hpp"

#include <algorithm>
#include <set>

namespace parigrade {

Arena validate(const RawGame& raw) {
    const std::size_t n = raw.size();

    std::vector<char> seen(n, 0);
    for (const RawVertex& rv : raw) {
        if (rv.id >= n) throw DuplicateIdError(rv.id);  // ids must be dense
        if (seen[rv.id]) throw DuplicateIdError(rv.id);
        seen[rv.id] = 1;
    }

    Arena a;
    a.vertices_.resize(n);
    a.succ_.resize(n);
    a.pred_.resize(n);

    for (const RawVertex& rv : raw) {
        a.vertices_[rv.id] = VertexRecord{rv.id, rv.owner, rv.colour, rv.name};
        std::vector<VertexId> succs = rv.successors;
        std::sort(succs.begin(), succs.end());
        succs.erase(std::unique(succs.begin(), succs.end()), succs.end());
        for (VertexId s : succs) {
            if (s >= n) throw DanglingEdgeError(rv.id, s);
        }
        if (succs.empty()) throw DeadEndError(rv.id);
        a.succ_[rv.id] = std::move(succs);
    }

    for (VertexId v = 0; v < n; ++v) {
        for (VertexId s : a.succ_[v]) a.pred_[s].push_back(v);
        a.edge_count_ += a.succ_[v].size();
    }

    std::set<Colour> colours;
    for (const VertexRecord& rec : a.vertices_) colours.insert(rec.colour);
    a.colour_set_.assign(colours.begin(), colours.end());

    return a;
}

bool Arena::operator==(const Arena& other) const {
    return vertices_ == other.vertices_ && succ_ == other.succ_;
}

ArenaStats stats(const Arena& arena) {
    ArenaStats st;
    for (VertexId v = 0; v < arena.vertex_count(); ++v) {
        if (colour_is_even(arena.colour(v))) ++st.even_vertices;
    }

    st.witness_length = 1;
    for (std::uint64_t e = st.even_vertices; e >= 2; e >>= 1) ++st.witness_length;

    const auto colours = arena.colour_set();
    if (!colours.empty()) {
        st.top_odd_dropped = !colour_is_even(colours.back());
        st.bottom_odd_dropped = !colour_is_even(colours.front());
        st.relevant_colours = colours.size();
        if (st.top_odd_dropped) --st.relevant_colours;
        if (st.bottom_odd_dropped && colours.size() > 1) --st.relevant_colours;
    }
    return st;
}

std::vector<VertexId> reverse_play(std::span<const VertexId> play) {
    return {play.rbegin(), play.rend()};
}

}  // namespace parigrade
