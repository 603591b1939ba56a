#pragma once

#include <algorithm>
#include <vector>

#include "bhelly/graph.hpp"

namespace bhelly {

/// Unordered bipartition {side1, side2} of a vertex set inducing a complete
/// bipartite subgraph. Canonical form: both sides sorted ascending by id,
/// side1 holds the smaller minimum.
struct biclique {
    std::vector<vertex> side1, side2;

    void canonicalize() {
        std::sort(side1.begin(), side1.end());
        std::sort(side2.begin(), side2.end());
        if (side2.empty()) return;
        if (side1.empty() || side1.front() > side2.front()) std::swap(side1, side2);
    }

    friend bool operator==(const biclique& a, const biclique& b) {
        return a.side1 == b.side1 && a.side2 == b.side2;
    }
    friend bool operator<(const biclique& a, const biclique& b) {
        if (a.side1 != b.side1) return a.side1 < b.side1;
        return a.side2 < b.side2;
    }
};

/// Structural check: disjoint nonempty independent sides, all cross edges present.
inline bool is_biclique(const graph& g, const biclique& b) {
    if (b.side1.empty() || b.side2.empty()) return false;
    for (vertex v : b.side1)
        for (vertex w : b.side1)
            if (v != w && g.adjacent(v, w)) return false;
    for (vertex v : b.side2)
        for (vertex w : b.side2)
            if (v != w && g.adjacent(v, w)) return false;
    for (vertex v : b.side1)
        for (vertex w : b.side2) {
            if (v == w) return false;
            if (!g.adjacent(v, w)) return false;
        }
    return true;
}

}  // namespace bhelly
