#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "bhelly/bicliques.hpp"
#include "bhelly/edge_io.hpp"
#include "bhelly/generators.hpp"
#include "bhelly/oracle.hpp"
#include "bhelly/recognize_fast.hpp"
#include "bhelly/recognize_slow.hpp"

namespace bhelly::cli {

// exit codes
inline constexpr int exit_ok = 0;
inline constexpr int exit_witness = 1;
inline constexpr int exit_input = 2;
inline constexpr int exit_check = 3;

struct run_report {
    std::vector<std::pair<std::string, std::string>> header;
    std::vector<std::string> lines;
    int exit_code = exit_ok;

    void put(const std::string& k, const std::string& v) { header.emplace_back(k, v); }
    void put(const std::string& k, long long v) { header.emplace_back(k, std::to_string(v)); }

    void print(std::ostream& out) const {
        for (auto& [k, v] : header) out << k << "=" << v << "\n";
        for (auto& l : lines) out << l << "\n";
    }
};

inline long long us_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::microseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

inline std::string label_seq(const edge_list_doc& doc, const std::vector<vertex>& vs) {
    std::string s;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s += " ";
        s += doc.labels[vs[i]];
    }
    return s;
}

struct staged_recognition {
    recognition_result result;
    long long triples = 0, sum_common = 0;
    long long t_triangle = 0, t_c4 = 0, t_sigma = 0, t_c5 = 0, t_c6 = 0;
};

inline staged_recognition run_fast_engine(const graph& g) {
    staged_recognition r;
    degree_ordering o = degree_order(g);
    auto t0 = std::chrono::steady_clock::now();
    if (auto t = find_triangle(g, o)) {
        r.t_triangle = us_since(t0);
        r.result = {t};
        return r;
    }
    r.t_triangle = us_since(t0);
    t0 = std::chrono::steady_clock::now();
    auto built = build_u_digraph(g, o);
    r.t_c4 = us_since(t0);
    if (std::holds_alternative<witness>(built)) {
        r.result = {std::get<witness>(built)};
        return r;
    }
    const u_build& ub = std::get<u_build>(built);
    r.triples = ub.triples;
    r.sum_common = ub.sum_common;
    t0 = std::chrono::steady_clock::now();
    sigma_labels s = build_sigma(g, o, ub);
    r.t_sigma = us_since(t0);
    t0 = std::chrono::steady_clock::now();
    if (auto c5 = find_induced_c5_fast(g, o, s)) {
        r.t_c5 = us_since(t0);
        r.result = {c5};
        return r;
    }
    r.t_c5 = us_since(t0);
    t0 = std::chrono::steady_clock::now();
    auto c6 = find_induced_c6_fast(g, o, s);
    r.t_c6 = us_since(t0);
    r.result = {c6};
    return r;
}

inline run_report cmd_recognize(const edge_list_doc& doc, const std::string& engine) {
    run_report rep;
    graph g = doc.to_graph();
    degree_ordering o = degree_order(g);
    rep.put("command", "recognize");
    rep.put("n", g.n);
    rep.put("m", g.m);
    rep.put("engine", engine);

    std::optional<recognition_result> fast, slow;
    if (engine == "fast" || engine == "both") {
        staged_recognition r = run_fast_engine(g);
        fast = r.result;
        rep.put("fast_us_triangle", r.t_triangle);
        rep.put("fast_us_c4", r.t_c4);
        rep.put("fast_us_sigma", r.t_sigma);
        rep.put("fast_us_c5", r.t_c5);
        rep.put("fast_us_c6", r.t_c6);
        rep.put("triples", r.triples);
        rep.put("sum_l", r.sum_common);
    }
    if (engine == "slow" || engine == "both") {
        auto t0 = std::chrono::steady_clock::now();
        slow = recognize_hbh_slow(g);
        rep.put("slow_us_total", us_since(t0));
    }
    const recognition_result& main = fast ? *fast : *slow;
    for (auto* r : {&fast, &slow}) {
        if (!r->has_value() || !(*r)->wit) continue;
        if (!validate_witness(g, o, *(*r)->wit)) {
            rep.lines.push_back("error=witness failed structural validation");
            rep.exit_code = exit_check;
            return rep;
        }
    }
    if (engine == "both") {
        bool agree = fast->is_hbh() == slow->is_hbh() &&
                     (fast->is_hbh() || fast->wit->kind == slow->wit->kind);
        if (!agree) {
            rep.lines.push_back("error=engine disagreement");
            rep.lines.push_back(std::string("fast=") +
                                (fast->is_hbh() ? "HBH" : to_string(fast->wit->kind)));
            rep.lines.push_back(std::string("slow=") +
                                (slow->is_hbh() ? "HBH" : to_string(slow->wit->kind)));
            rep.exit_code = exit_check;
            return rep;
        }
    }
    if (main.is_hbh()) {
        rep.put("verdict", "HBH");
        rep.lines.push_back("HBH");
    } else {
        rep.put("verdict", "NOT_HBH");
        rep.put("witness_kind", to_string(main.wit->kind));
        rep.put("witness", label_seq(doc, main.wit->verts));
        rep.lines.push_back(std::string("NOT_HBH ") + to_string(main.wit->kind) + " " +
                            label_seq(doc, main.wit->verts));
    }
    return rep;
}

inline std::string biclique_line(const edge_list_doc& doc, const biclique& b) {
    std::string s = label_seq(doc, b.side1);
    s += " | ";
    s += label_seq(doc, b.side2);
    return s;
}

inline run_report cmd_bicliques(const edge_list_doc& doc, bool check) {
    run_report rep;
    graph g = doc.to_graph();
    rep.put("command", "bicliques");
    rep.put("n", g.n);
    rep.put("m", g.m);
    auto t0 = std::chrono::steady_clock::now();
    auto res = enumerate_max_bicliques(g);
    rep.put("us_total", us_since(t0));
    if (std::holds_alternative<witness>(res)) {
        const witness& w = std::get<witness>(res);
        rep.put("verdict", "OUT_OF_CLASS");
        rep.put("witness_kind", to_string(w.kind));
        rep.put("witness", label_seq(doc, w.verts));
        rep.lines.push_back(std::string("OUT_OF_CLASS ") + to_string(w.kind) + " " +
                            label_seq(doc, w.verts));
        rep.exit_code = exit_witness;
        return rep;
    }
    const enumeration_result& er = std::get<enumeration_result>(res);
    rep.put("bicliques", static_cast<long long>(er.bicliques.size()));
    rep.put("triples", er.triples);
    rep.put("sum_l", er.sum_common);
    rep.put("s_edges", er.s_edges);
    rep.put("d_edges", er.d_edges);
    rep.put("output_size", er.output_size);
    if (!er.stripped_isolated.empty())
        rep.put("stripped_isolated", label_seq(doc, er.stripped_isolated));
    if (check) {
        if (g.n > 16) {
            rep.lines.push_back("error=--check needs n <= 16");
            rep.exit_code = exit_input;
            return rep;
        }
        auto want = oracle::max_bicliques(g);
        if (want != er.bicliques) {
            rep.lines.push_back("error=enumeration disagrees with the oracle");
            rep.exit_code = exit_check;
            return rep;
        }
        rep.put("check", "ok");
    }
    for (auto& b : er.bicliques) rep.lines.push_back(biclique_line(doc, b));
    return rep;
}

inline run_report cmd_solve(const edge_list_doc& doc, const std::string& problem,
                            long long k) {
    run_report rep;
    graph g = doc.to_graph();
    rep.put("command", "solve");
    rep.put("n", g.n);
    rep.put("m", g.m);
    rep.put("problem", problem);
    if (problem == "balanced") rep.put("k", k);
    auto res = biclique_optimizations(g, k);
    if (std::holds_alternative<witness>(res)) {
        const witness& w = std::get<witness>(res);
        rep.put("verdict", "OUT_OF_CLASS");
        rep.put("witness_kind", to_string(w.kind));
        rep.put("witness", label_seq(doc, w.verts));
        rep.lines.push_back(std::string("OUT_OF_CLASS ") + to_string(w.kind) + " " +
                            label_seq(doc, w.verts));
        rep.exit_code = exit_witness;
        return rep;
    }
    const optimization_report& r = std::get<optimization_report>(res);
    if (problem == "balanced")
        rep.lines.push_back(std::string("balanced=") + (r.balanced ? "true" : "false"));
    else if (problem == "max-vertex")
        rep.lines.push_back("max_vertex=" + std::to_string(r.max_vertex));
    else
        rep.lines.push_back("max_edge=" + std::to_string(r.max_edge));
    return rep;
}

inline edge_list_doc generate(const std::string& family, const std::vector<long long>& params,
                              uint64_t seed) {
    auto want = [&](size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("family '" + family + "' wants " + std::to_string(k) +
                                        " parameter(s)");
    };
    if (family == "tree") { want(1); return gen_tree(static_cast<int>(params[0]), seed); }
    if (family == "ladder1") { want(0); return gen_ladder(1); }
    if (family == "ladder2") { want(0); return gen_ladder(2); }
    if (family == "ladder3") { want(0); return gen_ladder(3); }
    if (family == "fig2") { want(0); return gen_fig2(); }
    if (family == "cycle") { want(1); return gen_cycle(static_cast<int>(params[0])); }
    if (family == "complete-bipartite") {
        want(2);
        return gen_complete_bipartite(static_cast<int>(params[0]), static_cast<int>(params[1]));
    }
    if (family == "random-bipartite") {
        want(2);
        return gen_random_bipartite(static_cast<int>(params[0]),
                                    static_cast<double>(params[1]) / 100.0, seed);
    }
    if (family == "random-hbh") { want(1); return gen_random_hbh(static_cast<int>(params[0]), seed); }
    throw std::invalid_argument("unknown family '" + family + "'");
}

inline run_report cmd_gen(const std::string& family, const std::vector<long long>& params,
                          uint64_t seed, std::ostream& out) {
    run_report rep;
    edge_list_doc doc = generate(family, params, seed);
    serialize_edge_list(out, doc);
    rep.put("command", "gen");
    rep.put("family", family);
    rep.put("n", doc.n);
    rep.put("m", static_cast<long long>(doc.edges.size()));
    return rep;
}

struct bench_row {
    int n;
    long long m;
    long long fast_us = 0, slow_us = 0;
    long long triples = 0, sum_l = 0;
};

inline bench_row bench_point(const graph& g, bool run_fast, bool run_slow, int repeats = 1) {
    bench_row row;
    row.n = g.n;
    row.m = g.m;
    for (int i = 0; i < repeats; ++i) {
        if (run_fast) {
            auto t0 = std::chrono::steady_clock::now();
            staged_recognition r = run_fast_engine(g);
            long long us = us_since(t0);
            row.fast_us = i ? std::min(row.fast_us, us) : us;
            row.triples = r.triples;
            row.sum_l = r.sum_common;
        }
        if (run_slow) {
            auto t0 = std::chrono::steady_clock::now();
            recognize_hbh_slow(g);
            long long us = us_since(t0);
            row.slow_us = i ? std::min(row.slow_us, us) : us;
        }
    }
    return row;
}

inline run_report cmd_bench(const std::string& family, const std::vector<long long>& sizes,
                            const std::string& engine, uint64_t seed, std::ostream& out) {
    run_report rep;
    rep.put("command", "bench");
    rep.put("family", family);
    rep.put("engine", engine);
    out << "n\tm\tfast_us\tslow_us\ttriples\tsum_l\n";
    for (long long n : sizes) {
        edge_list_doc doc = generate(family, {n}, seed);
        graph g = doc.to_graph();
        bench_row row = bench_point(g, engine != "slow", engine != "fast", 3);
        out << row.n << "\t" << row.m << "\t" << row.fast_us << "\t" << row.slow_us << "\t"
            << row.triples << "\t" << row.sum_l << "\n";
    }
    return rep;
}

}  // namespace bhelly::cli
