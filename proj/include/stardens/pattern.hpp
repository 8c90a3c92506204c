// Target patterns: directed stars S_k, complete bipartite digraphs K_{s,t},
// and explicit small digraphs.
#pragma once

#include "stardens/digraph.hpp"

#include <string>

namespace stardens {

// S_k: vertex 0 is the center, arcs 0->1, ..., 0->(k-1).
Digraph star_digraph(int k);

// K_{s,t}: arcs i -> s+j for 0 <= i < s, 0 <= j < t.
Digraph kst_digraph(int s, int t);

struct PatternSpec {
    enum class Kind { star, complete_bipartite, explicit_digraph };

    Kind kind = Kind::star;
    int k = 0;  // star
    int s = 0;  // complete bipartite
    int t = 0;
    Digraph pattern;  // explicit_digraph only

    static PatternSpec star(int k);                     // k >= 2
    static PatternSpec complete_bipartite(int s, int t);  // s, t >= 1
    static PatternSpec explicit_digraph(Digraph d);     // order <= 8

    int order() const;
    Digraph realize() const;
    std::string name() const;  // "star:3", "kst:2,2", "explicit:5"
};

}  // namespace stardens
