#pragma once

#include <string>
#include <vector>

#include "bhelly/graph.hpp"

namespace bhelly {

enum class witness_kind { triangle, non_dominated_c4, induced_c5, induced_c6 };

inline const char* to_string(witness_kind k) {
    switch (k) {
        case witness_kind::triangle: return "Triangle";
        case witness_kind::non_dominated_c4: return "NonDominatedC4";
        case witness_kind::induced_c5: return "InducedC5";
        case witness_kind::induced_c6: return "InducedC6";
    }
    return "?";
}

/// A found forbidden structure, vertices in cycle order.
struct witness {
    witness_kind kind;
    std::vector<vertex> verts;
};

/// Independent structural check: the listed vertices are distinct, form a
/// cycle in the listed order, the cycle is chordless for C5/C6, and for a
/// NonDominatedC4 neither opposite pair is dom-comparable.
inline bool validate_witness(const graph& g, const degree_ordering& o, const witness& w) {
    size_t len = 0;
    switch (w.kind) {
        case witness_kind::triangle: len = 3; break;
        case witness_kind::non_dominated_c4: len = 4; break;
        case witness_kind::induced_c5: len = 5; break;
        case witness_kind::induced_c6: len = 6; break;
    }
    if (w.verts.size() != len) return false;
    for (vertex v : w.verts)
        if (v < 0 || v >= g.n) return false;
    for (size_t i = 0; i < len; ++i)
        for (size_t j = i + 1; j < len; ++j)
            if (w.verts[i] == w.verts[j]) return false;
    for (size_t i = 0; i < len; ++i)
        if (!g.adjacent(w.verts[i], w.verts[(i + 1) % len])) return false;
    if (w.kind == witness_kind::triangle) return true;
    if (w.kind == witness_kind::non_dominated_c4) {
        vertex a = w.verts[0], b = w.verts[1], c = w.verts[2], d = w.verts[3];
        if (dominates(g, o, a, c) || dominates(g, o, c, a)) return false;
        if (dominates(g, o, b, d) || dominates(g, o, d, b)) return false;
        return true;
    }
    // chordless
    for (size_t i = 0; i < len; ++i)
        for (size_t j = i + 2; j < len; ++j) {
            if (i == 0 && j == len - 1) continue;
            if (g.adjacent(w.verts[i], w.verts[j])) return false;
        }
    return true;
}

}  // namespace bhelly
