// Count-monotone reduction pipeline: twin partition, merging of non-adjacent
// twin classes, and re-orientation toward a weight-sorted tournament blow-up.
#pragma once

#include "stardens/count.hpp"
#include "stardens/density.hpp"
#include "stardens/digraph.hpp"
#include "stardens/pattern.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace stardens {

// Maximal classes of vertices with identical out- and in-neighborhoods.
// Classes are internally arc-free and between two classes each arc direction
// is all-or-nothing. Ordered by size descending, ties by smallest vertex.
struct ClassPartition {
    std::vector<std::vector<int>> classes;

    int size() const { return static_cast<int>(classes.size()); }
};

ClassPartition twin_partition(const Digraph& d);

enum class MergeChoice {
    into_first,   // z = x + y: the second class retargeted to twin the first
    into_second,  // z = 0: the first class retargeted to twin the second
};

struct MergeEvaluation {
    int class_i = 0;
    int class_j = 0;
    int size_i = 0;  // x
    int size_j = 0;  // y
    std::uint64_t count_into_first = 0;   // copies at z = x + y
    std::uint64_t count_into_second = 0;  // copies at z = 0
    MergeChoice chosen = MergeChoice::into_first;
};

// Classes i, j of twin_partition(d) must have no arcs between them. Returns
// the better of the two endpoint digraphs by full recount; ties absorb into
// the earlier class. The winning count never drops below the input's.
std::pair<Digraph, MergeEvaluation> merge_step(const Digraph& d, const PatternSpec& p, int i, int j);
std::pair<Digraph, MergeEvaluation> merge_step(const Digraph& d, int k, int i, int j);

// Repeats merge_step on the lexicographically first non-adjacent class pair
// until no such pair remains. Class count strictly decreases per step.
Digraph compress(const Digraph& d, const PatternSpec& p);
Digraph compress(const Digraph& d, int k);

// Input classes must be pairwise joined (compress output). Orders classes by
// size descending, relabels vertices accordingly, and orients every bundle
// from the smaller class to the larger one; equal-size pairs keep their
// existing orientation. Count never decreases.
Digraph sort_and_orient(const Digraph& d, const PatternSpec& p);
Digraph sort_and_orient(const Digraph& d, int k);

// compress + sort_and_orient, then class sizes divided by n. n >= 1.
WeightProfile reduce_to_profile(const Digraph& d, const PatternSpec& p);
WeightProfile reduce_to_profile(const Digraph& d, int k);

// True iff every pair of twin classes has arcs in at least one direction.
bool all_class_pairs_joined(const Digraph& d);

}  // namespace stardens
