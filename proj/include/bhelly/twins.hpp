#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "bhelly/biclique.hpp"
#include "bhelly/graph.hpp"

namespace bhelly {

/// Partition of the vertices into twin classes (equal neighborhoods) plus the
/// twin-free quotient graph. Class k of the quotient is the class whose
/// minimum member is the k-th smallest among class minima.
struct twin_partition {
    std::vector<int> class_of;                 // vertex -> class id
    std::vector<std::vector<vertex>> classes;  // class id -> sorted members
    graph quotient;                            // vertex k = class k
};

inline twin_partition reduce_twins(const graph& g) {
    twin_partition p;
    std::vector<vertex> by_list(g.n);
    std::iota(by_list.begin(), by_list.end(), 0);
    // adjacency lists share one global sort order, so equal sets compare equal
    auto list_less = [&](vertex a, vertex b) {
        auto na = g.neighbors(a), nb = g.neighbors(b);
        return std::lexicographical_compare(na.begin(), na.end(), nb.begin(), nb.end());
    };
    std::sort(by_list.begin(), by_list.end(), [&](vertex a, vertex b) {
        if (list_less(a, b)) return true;
        if (list_less(b, a)) return false;
        return a < b;
    });

    std::vector<std::vector<vertex>> groups;
    for (int i = 0; i < g.n; ++i) {
        vertex v = by_list[i];
        if (i == 0 || list_less(by_list[i - 1], v)) groups.emplace_back();
        groups.back().push_back(v);
    }
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    p.classes = std::move(groups);
    p.class_of.assign(g.n, -1);
    for (int c = 0; c < static_cast<int>(p.classes.size()); ++c)
        for (vertex v : p.classes[c]) p.class_of[v] = c;

    std::vector<std::pair<vertex, vertex>> qedges;
    for (int c = 0; c < static_cast<int>(p.classes.size()); ++c)
        for (vertex w : g.neighbors(p.classes[c].front()))
            if (p.class_of[w] > c) qedges.emplace_back(c, p.class_of[w]);
    p.quotient = build_graph(std::move(qedges), static_cast<int>(p.classes.size()));
    return p;
}

/// Replaces each quotient vertex of b by its full twin class.
inline biclique expand_biclique(const twin_partition& p, const biclique& b) {
    biclique out;
    for (vertex c : b.side1)
        out.side1.insert(out.side1.end(), p.classes[c].begin(), p.classes[c].end());
    for (vertex c : b.side2)
        out.side2.insert(out.side2.end(), p.classes[c].begin(), p.classes[c].end());
    out.canonicalize();
    return out;
}

}  // namespace bhelly
