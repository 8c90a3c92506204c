// Exact induced-pattern counting: structured fast paths for S_k and K_{s,t}
// plus the subset-enumeration oracle all of them must agree with.
#pragma once

#include "stardens/digraph.hpp"
#include "stardens/pattern.hpp"

#include <cstdint>

namespace stardens {

struct CountResult {
    std::uint64_t copies = 0;
    double density = 0.0;  // copies / C(n, pattern_order); 0 when n < pattern_order
    int pattern_order = 0;
};

// Sum over centers u of the number of pairwise non-adjacent (k-1)-subsets of
// P(u) = {v : arc u->v present and arc v->u absent}. k >= 2.
CountResult count_stars(const Digraph& d, int k);

// Subsets splitting into an independent source s-set completely joined one way
// onto an independent sink t-set. s, t >= 1.
CountResult count_kst(const Digraph& d, int s, int t);

// Reference semantics: enumerate every subset of size order(p), extract the
// induced subdigraph, test isomorphism. Pattern order <= 8.
CountResult count_pattern_oracle(const Digraph& d, const PatternSpec& p);

// Fast path for star/kst patterns, oracle for explicit ones.
CountResult count_pattern(const Digraph& d, const PatternSpec& p);

namespace kern {

// Low-level kernels on single-word adjacency rows (n <= 64). Row v holds bit w
// iff the arc v->w is present. Used by the counting fast paths, the oracle,
// and the exhaustive-search inner loop.

std::uint64_t count_stars1(const std::uint64_t* out, const std::uint64_t* in, int n, int k);

std::uint64_t count_kst1(const std::uint64_t* out, const std::uint64_t* in, int n, int s, int t);

std::uint64_t count_oracle1(const std::uint64_t* out, const std::uint64_t* in, int n,
                            const std::uint64_t* pat_out, const std::uint64_t* pat_in, int p);

// Exhaustive permutation isomorphism on p <= 8 vertices with degree-pair pruning.
bool iso1(const std::uint64_t* aout, const std::uint64_t* ain,
          const std::uint64_t* bout, const std::uint64_t* bin, int p);

}  // namespace kern

}  // namespace stardens
