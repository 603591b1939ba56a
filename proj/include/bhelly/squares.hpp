#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "bhelly/graph.hpp"
#include "bhelly/witness.hpp"

namespace bhelly {

/// One entry of the squares family: all 4-cycles topped by `high` through
/// `low` are the pairs of `common`, which is sorted by descending rank and
/// never empty.
struct squares_triple {
    vertex high, low;
    std::vector<vertex> common;
};

/// Chiba-Nishizeki triangle search: scan vertices by descending rank, mark the
/// still-unprocessed neighborhood, look for a marked neighbor-of-neighbor.
/// Processed vertices are removed from the adjacency lists by advancing a
/// start pointer, which keeps the total work arboricity-bounded.
inline std::optional<witness> find_triangle(const graph& g, const degree_ordering& o) {
    std::vector<int> start(g.off.begin(), g.off.end() - 1);
    std::vector<int> mark(g.n, -1);
    for (int r = g.n - 1; r >= 0; --r) {
        vertex v = o.order[r];
        for (int k = start[v]; k < g.off[v + 1]; ++k) mark[g.nbr[k]] = v;
        for (int k = start[v]; k < g.off[v + 1]; ++k) {
            vertex u = g.nbr[k];
            for (int j = start[u]; j < g.off[u + 1]; ++j) {
                vertex w = g.nbr[j];
                if (w == v) continue;
                if (mark[w] == v) return witness{witness_kind::triangle, {v, u, w}};
            }
        }
        for (int k = start[v]; k < g.off[v + 1]; ++k) {
            vertex u = g.nbr[k];
            assert(g.nbr[start[u]] == v);
            start[u]++;
        }
    }
    return std::nullopt;
}

/// Flat per-vertex squares family, buffers reused across iterations.
struct vertex_squares {
    std::vector<vertex> lows;   // one per triple, descending rank
    std::vector<int> l_off;     // lows.size() + 1 offsets into l_flat
    std::vector<vertex> l_flat; // concatenated common lists, each descending

    int count() const { return static_cast<int>(lows.size()); }
    std::span<const vertex> common(int t) const {
        return {l_flat.data() + l_off[t], l_flat.data() + l_off[t + 1]};
    }
};

/// Streams the squares family S(v) for v descending in the degree ordering.
/// Triangle-free input assumed (not checked). Total work O(alpha * m) plus a
/// sort per vertex for the fixed emission order.
class squares_stream {
  public:
    squares_stream(const graph& g, const degree_ordering& o)
        : g_(&g), o_(&o), start_(g.off.begin(), g.off.end() - 1),
          bucket_(g.n), seen_(g.n, -1), r_(g.n) {}

    /// Advances to the next vertex; false once all vertices are done.
    /// Deletion of the previous vertex from the adjacency lists happens here.
    bool next() {
        if (r_ == 0) return false;
        if (r_ < g_->n) retire(o_->order[r_]);
        --r_;
        fill(o_->order[r_]);
        return true;
    }

    vertex current() const { return o_->order[r_]; }
    const vertex_squares& triples() const { return sq_; }

    /// d^<(w): neighbors of w not above the current vertex in the ordering.
    int remaining_degree(vertex w) const { return g_->off[w + 1] - start_[w]; }

    long long total_triples() const { return total_triples_; }
    long long total_common() const { return total_common_; }

  private:
    void retire(vertex v) {
        for (int k = g_->off[v]; k < g_->off[v + 1]; ++k) {
            vertex u = g_->nbr[k];
            assert(g_->nbr[start_[u]] == v);
            start_[u]++;
        }
    }

    void fill(vertex v) {
        sq_.lows.clear();
        sq_.l_off.assign(1, 0);
        sq_.l_flat.clear();
        touched_.clear();
        for (int k = start_[v]; k < g_->off[v + 1]; ++k) {
            vertex u = g_->nbr[k];
            int j = start_[u];
            if (j < g_->off[u + 1] && g_->nbr[j] == v) ++j;  // skip v itself
            for (; j < g_->off[u + 1]; ++j) {
                vertex w = g_->nbr[j];
                if (seen_[w] != v) {
                    seen_[w] = v;
                    touched_.push_back(w);
                }
                bucket_[w].push_back(u);
            }
        }
        std::sort(touched_.begin(), touched_.end(),
                  [&](vertex a, vertex b) { return o_->rank[a] > o_->rank[b]; });
        for (vertex w : touched_) {
            sq_.lows.push_back(w);
            sq_.l_flat.insert(sq_.l_flat.end(), bucket_[w].begin(), bucket_[w].end());
            sq_.l_off.push_back(static_cast<int>(sq_.l_flat.size()));
            total_common_ += static_cast<long long>(bucket_[w].size());
            bucket_[w].clear();
        }
        total_triples_ += sq_.count();
    }

    const graph* g_;
    const degree_ordering* o_;
    std::vector<int> start_;
    std::vector<std::vector<vertex>> bucket_;
    std::vector<int> seen_;
    std::vector<vertex> touched_;
    vertex_squares sq_;
    int r_;
    long long total_triples_ = 0, total_common_ = 0;
};

/// One-shot S(v) for a single vertex, independent of the stream machinery.
inline std::vector<squares_triple> squares_of(const graph& g, const degree_ordering& o,
                                              vertex v) {
    std::vector<std::vector<vertex>> bucket(g.n);
    std::vector<vertex> touched;
    for (vertex u : g.neighbors(v)) {
        if (o.rank[u] > o.rank[v]) continue;
        for (vertex w : g.neighbors(u)) {
            if (o.rank[w] >= o.rank[v]) continue;
            if (bucket[w].empty()) touched.push_back(w);
            bucket[w].push_back(u);
        }
    }
    std::sort(touched.begin(), touched.end(),
              [&](vertex a, vertex b) { return o.rank[a] > o.rank[b]; });
    std::vector<squares_triple> out;
    out.reserve(touched.size());
    for (vertex w : touched) out.push_back({v, w, std::move(bucket[w])});
    return out;
}

}  // namespace bhelly
