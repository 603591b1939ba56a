#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bhelly/graph.hpp"

namespace bhelly {

struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

/// Plain edge-list document. Three accepted dialects:
///   - "n <count>" header, then "<u> <v>" with integer ids in [0, count);
///   - DIMACS-like "p edge <n> <m>" header, then "e <u> <v>" with 1-based ids;
///   - headerless "<a> <b>" token pairs, labels mapped to dense ids in order
///     of first appearance.
/// '#' starts a comment anywhere; DIMACS 'c' lines are comments too.
struct edge_list_doc {
    int n = 0;
    std::vector<std::pair<vertex, vertex>> edges;  // dense internal ids
    std::vector<std::string> labels;               // id -> external label

    graph to_graph() const { return build_graph(edges, n); }
};

inline edge_list_doc parse_edge_list(std::istream& in) {
    edge_list_doc doc;
    enum class mode { unknown, header_n, dimacs, bare } m = mode::unknown;
    std::map<std::string, vertex> ids;
    int lineno = 0;
    std::string raw;
    auto intval = [&](const std::string& tok) -> long long {
        try {
            size_t pos = 0;
            long long v = std::stoll(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("");
            return v;
        } catch (...) {
            throw parse_error(lineno, "expected an integer, got '" + tok + "'");
        }
    };
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (m == mode::unknown) {
            if (tok[0] == "n" && tok.size() == 2) {
                m = mode::header_n;
                long long n = intval(tok[1]);
                if (n < 0 || n > 100'000'000) throw parse_error(lineno, "bad vertex count");
                doc.n = static_cast<int>(n);
                for (int i = 0; i < doc.n; ++i) doc.labels.push_back(std::to_string(i));
                continue;
            }
            if (tok[0] == "c") continue;
            if (tok[0] == "p") {
                if (tok.size() != 4 || tok[1] != "edge")
                    throw parse_error(lineno, "malformed problem line, want 'p edge <n> <m>'");
                m = mode::dimacs;
                long long n = intval(tok[2]);
                if (n < 0 || n > 100'000'000) throw parse_error(lineno, "bad vertex count");
                doc.n = static_cast<int>(n);
                for (int i = 0; i < doc.n; ++i) doc.labels.push_back(std::to_string(i + 1));
                continue;
            }
            m = mode::bare;
        }
        if (m == mode::dimacs && tok[0] == "c") continue;
        if (m == mode::dimacs) {
            if (tok.size() != 3 || tok[0] != "e")
                throw parse_error(lineno, "expected 'e <u> <v>'");
            long long u = intval(tok[1]), v = intval(tok[2]);
            if (u < 1 || u > doc.n || v < 1 || v > doc.n)
                throw parse_error(lineno, "vertex id out of range");
            doc.edges.emplace_back(static_cast<vertex>(u - 1), static_cast<vertex>(v - 1));
            continue;
        }
        if (tok.size() != 2) throw parse_error(lineno, "expected two tokens per edge line");
        if (m == mode::header_n) {
            long long u = intval(tok[0]), v = intval(tok[1]);
            if (u < 0 || u >= doc.n || v < 0 || v >= doc.n)
                throw parse_error(lineno, "vertex id out of range");
            doc.edges.emplace_back(static_cast<vertex>(u), static_cast<vertex>(v));
            continue;
        }
        vertex id[2];
        for (int i = 0; i < 2; ++i) {
            auto [it, fresh] = ids.try_emplace(tok[i], static_cast<vertex>(doc.labels.size()));
            if (fresh) doc.labels.push_back(tok[i]);
            id[i] = it->second;
        }
        doc.edges.emplace_back(id[0], id[1]);
    }
    doc.n = static_cast<int>(doc.labels.size()) > doc.n ? static_cast<int>(doc.labels.size())
                                                        : doc.n;
    return doc;
}

inline edge_list_doc parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

/// Canonical output: an "n" header when the labels are the dense 0-based ids,
/// otherwise headerless labeled lines. Edges are deduplicated and sorted.
inline void serialize_edge_list(std::ostream& out, const edge_list_doc& doc) {
    bool dense = true;
    for (int i = 0; i < doc.n; ++i)
        if (doc.labels[i] != std::to_string(i)) { dense = false; break; }
    std::vector<std::pair<vertex, vertex>> es = doc.edges;
    for (auto& [u, v] : es)
        if (u > v) std::swap(u, v);
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    if (dense) out << "n " << doc.n << "\n";
    for (auto [u, v] : es) out << doc.labels[u] << " " << doc.labels[v] << "\n";
}

}  // namespace bhelly
