// Finite labeled digraphs: independent ordered-pair arcs, no loops, digons allowed.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace stardens {

// Arc universe for generation and exhaustive enumeration. In oriented mode a
// vertex pair carries at most one arc (no digons); general mode allows both
// directions independently.
enum class GraphMode { oriented, general };

// Immutable after construction. out/in adjacency kept consistent by the
// constructors; neighbor lists sorted ascending.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);

    // Duplicate arcs are ignored; loops and out-of-range endpoints rejected.
    static Digraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);

    int order() const { return n_; }
    std::size_t arc_count() const { return arc_count_; }
    bool has_arc(int u, int v) const;
    bool adjacent(int u, int v) const { return has_arc(u, v) || has_arc(v, u); }
    const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[v]; }

    // All arcs, sorted lexicographically.
    std::vector<std::pair<int, int>> arcs() const;

    friend bool operator==(const Digraph& a, const Digraph& b);

private:
    int n_ = 0;
    std::size_t arc_count_ = 0;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

// Arc (u,v) present in the output iff (v,u) present in the input.
Digraph reverse(const Digraph& d);

// Subgraph on the given vertices, relabeled in ascending order of original
// indices. Duplicates collapse; out-of-range vertices rejected.
Digraph induced_subdigraph(const Digraph& d, const std::vector<int>& vertices);

// Exhaustive permutation search with out/in-degree-pair pruning. Both orders
// must be <= 8 (rejection otherwise); unequal orders compare false.
bool is_isomorphic(const Digraph& a, const Digraph& b);

// Deterministic for a fixed seed. general: each ordered pair is an arc
// independently with probability p. oriented: each unordered pair is absent
// w.p. 1-p, otherwise oriented uniformly at random.
Digraph random_digraph(int n, double arc_probability, GraphMode mode, std::uint64_t seed);

// Walks both adjacency directions: no loops, sorted unique lists, and
// u in out(v) <=> v in in(u).
bool check_invariants(const Digraph& d);

}  // namespace stardens
