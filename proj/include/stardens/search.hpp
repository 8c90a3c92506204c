// Brute-force ground truth and extremal constructions.
#pragma once

#include "stardens/count.hpp"
#include "stardens/digraph.hpp"
#include "stardens/pattern.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace stardens {

// 3-uniform hypergraph on [0, n); triples stored ascending, list sorted.
struct ThreeGraph {
    int n = 0;
    std::vector<std::array<int, 3>> triples;
};

struct SearchReport {
    int n = 0;
    PatternSpec pattern;
    std::uint64_t max_copies = 0;
    Digraph witness;  // first maximum in enumeration order
    std::uint64_t graphs_examined = 0;
    GraphMode mode = GraphMode::oriented;
};

// Iterates every labeled digraph on n vertices (3^C(n,2) oriented,
// 4^C(n,2) general), counting induced copies with the subset-enumeration
// oracle. Caps: n <= 6 oriented, n <= 5 general. The enumeration space is
// split into contiguous index ranges across threads; the reduction keeps
// (max, first witness by global index), so output is schedule-independent.
SearchReport exhaustive_max(int n, const PatternSpec& p, GraphMode mode, int threads = 1);

// Replaces vertex v of the template by an independent class of class_sizes[v]
// vertices and each template arc by complete one-way class-to-class arcs.
Digraph blowup(const Digraph& tmpl, const std::vector<int>& class_sizes);

// Two parts A (|A| = round(x_k * size), clamped to [1, size-1]) and B with all
// arcs A -> B, recursing inside A while at least 2 vertices remain. k >= 3.
Digraph iterated_blowup(int n, int k);

// Arc-free sides of sizes round(s n / (s+t)) and the rest, complete arcs
// source side -> sink side. Requires n >= s + t.
Digraph balanced_kst_blowup(int n, int s, int t);

// Triples are exactly the 3-subsets inducing a copy of S_3.
ThreeGraph aux_3graph(const Digraph& d);

// True iff no 5 vertices admit a cyclic order whose five consecutive triples
// are all edges (tight C_5; 12 cyclic orders per 5-subset up to rotation and
// reflection).
bool is_c5_free(const ThreeGraph& h);

}  // namespace stardens
