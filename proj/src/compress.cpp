#include "stardens/compress.hpp"

#include "stardens/rational.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace stardens {

namespace {

// The pipeline's monotonicity arguments need non-adjacent vertices to be
// interchangeable in the pattern; that holds for stars and K_{s,t}.
void require_pipeline_pattern(const PatternSpec& p) {
    if (p.kind == PatternSpec::Kind::explicit_digraph)
        throw std::invalid_argument(
            "compress pipeline supports star and complete-bipartite patterns only");
}

// All vertices in `moved` become twins of `rep`. Requires rep not in `moved`
// and no arcs between `moved` and rep's class (callers validate).
Digraph retarget_to_twin(const Digraph& d, const std::vector<int>& moved, int rep) {
    std::vector<char> is_moved(d.order(), 0);
    for (int w : moved) is_moved[w] = 1;
    std::vector<std::pair<int, int>> arcs;
    for (const auto& [u, v] : d.arcs())
        if (!is_moved[u] && !is_moved[v]) arcs.emplace_back(u, v);
    for (int w : moved) {
        for (int v : d.out_neighbors(rep)) arcs.emplace_back(w, v);
        for (int u : d.in_neighbors(rep)) arcs.emplace_back(u, w);
    }
    return Digraph::from_arcs(d.order(), arcs);
}

// Contribution of a complete one-way bundle src -> snk to the pattern count
// of a joined twin-class digraph (copies never straddle three classes).
BigInt bundle_contribution(const PatternSpec& p, int src_size, int snk_size) {
    if (p.kind == PatternSpec::Kind::star)
        return BigInt(src_size) * big_binomial(static_cast<unsigned>(snk_size),
                                               static_cast<unsigned>(p.k - 1));
    return big_binomial(static_cast<unsigned>(src_size), static_cast<unsigned>(p.s)) *
           big_binomial(static_cast<unsigned>(snk_size), static_cast<unsigned>(p.t));
}

}  // namespace

ClassPartition twin_partition(const Digraph& d) {
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<int>> groups;
    for (int v = 0; v < d.order(); ++v)
        groups[{d.out_neighbors(v), d.in_neighbors(v)}].push_back(v);
    ClassPartition part;
    part.classes.reserve(groups.size());
    for (auto& [key, verts] : groups) part.classes.push_back(std::move(verts));
    std::sort(part.classes.begin(), part.classes.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() > b.size();
                  return a.front() < b.front();
              });
    return part;
}

std::pair<Digraph, MergeEvaluation> merge_step(const Digraph& d, const PatternSpec& p, int i,
                                               int j) {
    require_pipeline_pattern(p);
    const ClassPartition part = twin_partition(d);
    if (i < 0 || j < 0 || i >= part.size() || j >= part.size() || i == j)
        throw std::invalid_argument("merge_step: invalid class indices");
    const std::vector<int>& ci = part.classes[i];
    const std::vector<int>& cj = part.classes[j];
    const int ri = ci.front();
    const int rj = cj.front();
    if (d.has_arc(ri, rj) || d.has_arc(rj, ri))
        throw std::invalid_argument("merge_step: classes are adjacent");

    Digraph into_first = retarget_to_twin(d, cj, ri);
    Digraph into_second = retarget_to_twin(d, ci, rj);

    MergeEvaluation ev;
    ev.class_i = i;
    ev.class_j = j;
    ev.size_i = static_cast<int>(ci.size());
    ev.size_j = static_cast<int>(cj.size());
    ev.count_into_first = count_pattern(into_first, p).copies;
    ev.count_into_second = count_pattern(into_second, p).copies;
    ev.chosen = ev.count_into_first >= ev.count_into_second ? MergeChoice::into_first
                                                            : MergeChoice::into_second;
    Digraph out =
        ev.chosen == MergeChoice::into_first ? std::move(into_first) : std::move(into_second);
    return {std::move(out), ev};
}

std::pair<Digraph, MergeEvaluation> merge_step(const Digraph& d, int k, int i, int j) {
    return merge_step(d, PatternSpec::star(k), i, j);
}

Digraph compress(const Digraph& d, const PatternSpec& p) {
    require_pipeline_pattern(p);
    Digraph cur = d;
    while (true) {
        const ClassPartition part = twin_partition(cur);
        const int m = part.size();
        int best_i = -1, best_j = -1;
        for (int i = 0; i < m && best_i < 0; ++i) {
            for (int j = i + 1; j < m; ++j) {
                const int ri = part.classes[i].front();
                const int rj = part.classes[j].front();
                if (!cur.has_arc(ri, rj) && !cur.has_arc(rj, ri)) {
                    best_i = i;
                    best_j = j;
                    break;
                }
            }
        }
        if (best_i < 0) return cur;
        cur = merge_step(cur, p, best_i, best_j).first;
    }
}

Digraph compress(const Digraph& d, int k) { return compress(d, PatternSpec::star(k)); }

Digraph sort_and_orient(const Digraph& d, const PatternSpec& p) {
    require_pipeline_pattern(p);
    const ClassPartition part = twin_partition(d);
    const int m = part.size();
    std::vector<int> reps(m), sizes(m), offset(m + 1, 0);
    for (int c = 0; c < m; ++c) {
        reps[c] = part.classes[c].front();
        sizes[c] = static_cast<int>(part.classes[c].size());
        offset[c + 1] = offset[c] + sizes[c];
    }
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (!d.has_arc(reps[a], reps[b]) && !d.has_arc(reps[b], reps[a]))
                throw std::invalid_argument(
                    "sort_and_orient: classes not completely joined; run compress first");

    std::vector<std::pair<int, int>> arcs;
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            const bool fwd = d.has_arc(reps[a], reps[b]);
            const bool bwd = d.has_arc(reps[b], reps[a]);
            const BigInt gain_ab = bundle_contribution(p, sizes[a], sizes[b]);
            const BigInt gain_ba = bundle_contribution(p, sizes[b], sizes[a]);
            bool a_to_b;
            if (fwd && bwd)
                a_to_b = gain_ab > gain_ba;  // de-digonize; tie favors later -> earlier
            else if (fwd)
                a_to_b = !(gain_ba > gain_ab);  // tie keeps the existing orientation
            else
                a_to_b = gain_ab > gain_ba;
            const int src = a_to_b ? a : b;
            const int snk = a_to_b ? b : a;
            for (int u = offset[src]; u < offset[src + 1]; ++u)
                for (int v = offset[snk]; v < offset[snk + 1]; ++v) arcs.emplace_back(u, v);
        }
    }
    return Digraph::from_arcs(d.order(), arcs);
}

Digraph sort_and_orient(const Digraph& d, int k) {
    return sort_and_orient(d, PatternSpec::star(k));
}

WeightProfile reduce_to_profile(const Digraph& d, const PatternSpec& p) {
    if (d.order() == 0) throw std::invalid_argument("reduce_to_profile: empty vertex set");
    const Digraph t = sort_and_orient(compress(d, p), p);
    const ClassPartition part = twin_partition(t);
    WeightProfile w;
    w.weights.reserve(part.classes.size());
    for (const std::vector<int>& c : part.classes)
        w.weights.push_back(static_cast<double>(c.size()) / t.order());
    return w;
}

WeightProfile reduce_to_profile(const Digraph& d, int k) {
    return reduce_to_profile(d, PatternSpec::star(k));
}

bool all_class_pairs_joined(const Digraph& d) {
    const ClassPartition part = twin_partition(d);
    const int m = part.size();
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            const int ra = part.classes[a].front();
            const int rb = part.classes[b].front();
            if (!d.has_arc(ra, rb) && !d.has_arc(rb, ra)) return false;
        }
    return true;
}

}  // namespace stardens
