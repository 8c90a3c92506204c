#include "stardens/search.hpp"

#include "stardens/density.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace stardens {

namespace {

using u64 = std::uint64_t;

struct PairList {
    std::vector<std::pair<int, int>> pairs;  // (u, v) with u < v, lexicographic
};

PairList make_pairs(int n) {
    PairList pl;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pl.pairs.emplace_back(u, v);
    return pl;
}

// pair index 0 is the least significant digit of the enumeration index
void decode_rows(u64 index, const PairList& pl, int base, u64* out, u64* in, int n) {
    for (int v = 0; v < n; ++v) out[v] = in[v] = 0;
    u64 rem = index;
    for (const auto& [u, v] : pl.pairs) {
        const int digit = static_cast<int>(rem % base);
        rem /= base;
        if (digit == 1 || digit == 3) {
            out[u] |= u64(1) << v;
            in[v] |= u64(1) << u;
        }
        if (digit == 2 || digit == 3) {
            out[v] |= u64(1) << u;
            in[u] |= u64(1) << v;
        }
    }
}

Digraph decode_digraph(u64 index, const PairList& pl, int base, int n) {
    std::vector<std::pair<int, int>> arcs;
    u64 rem = index;
    for (const auto& [u, v] : pl.pairs) {
        const int digit = static_cast<int>(rem % base);
        rem /= base;
        if (digit == 1 || digit == 3) arcs.emplace_back(u, v);
        if (digit == 2 || digit == 3) arcs.emplace_back(v, u);
    }
    return Digraph::from_arcs(n, arcs);
}

struct RangeBest {
    u64 max_copies = 0;
    u64 first_index = 0;
    bool seen = false;
};

}  // namespace

SearchReport exhaustive_max(int n, const PatternSpec& p, GraphMode mode, int threads) {
    if (n < 0) throw std::invalid_argument("exhaustive_max: n must be >= 0");
    const int cap = mode == GraphMode::oriented ? 6 : 5;
    if (n > cap)
        throw std::invalid_argument("exhaustive_max: n exceeds cap " + std::to_string(cap) +
                                    " for this mode");
    const int p_order = p.order();
    if (p_order > 8) throw std::invalid_argument("exhaustive_max: pattern order exceeds oracle cap");
    if (threads < 1) throw std::invalid_argument("exhaustive_max: threads must be >= 1");

    const PairList pl = make_pairs(n);
    const int base = mode == GraphMode::oriented ? 3 : 4;
    u64 total = 1;
    for (std::size_t i = 0; i < pl.pairs.size(); ++i) total *= base;

    const Digraph pat = p.realize();
    std::array<u64, 8> pat_out{}, pat_in{};
    for (int u = 0; u < p_order; ++u) {
        for (int v : pat.out_neighbors(u)) pat_out[u] |= u64(1) << v;
        for (int v : pat.in_neighbors(u)) pat_in[u] |= u64(1) << v;
    }

    auto scan_range = [&](u64 lo, u64 hi, RangeBest& best) {
        std::array<u64, 8> out{}, in{};
        for (u64 g = lo; g < hi; ++g) {
            decode_rows(g, pl, base, out.data(), in.data(), n);
            const u64 copies =
                kern::count_oracle1(out.data(), in.data(), n, pat_out.data(), pat_in.data(),
                                    p_order);
            if (!best.seen || copies > best.max_copies) {
                best.max_copies = copies;
                best.first_index = g;
                best.seen = true;
            }
        }
    };

    const int nt = static_cast<int>(std::min<u64>(threads, total ? total : 1));
    std::vector<RangeBest> bests(nt);
    if (nt <= 1) {
        scan_range(0, total, bests[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nt);
        const u64 chunk = total / nt;
        for (int t = 0; t < nt; ++t) {
            const u64 lo = chunk * t;
            const u64 hi = t == nt - 1 ? total : chunk * (t + 1);
            pool.emplace_back(scan_range, lo, hi, std::ref(bests[t]));
        }
        for (std::thread& th : pool) th.join();
    }

    // (max, first witness by global index): ranges are contiguous ascending
    RangeBest winner;
    for (const RangeBest& b : bests) {
        if (!b.seen) continue;
        if (!winner.seen || b.max_copies > winner.max_copies) winner = b;
    }

    SearchReport r;
    r.n = n;
    r.pattern = p;
    r.mode = mode;
    r.graphs_examined = total;
    r.max_copies = winner.seen ? winner.max_copies : 0;
    r.witness = decode_digraph(winner.seen ? winner.first_index : 0, pl, base, n);
    return r;
}

Digraph blowup(const Digraph& tmpl, const std::vector<int>& class_sizes) {
    if (static_cast<int>(class_sizes.size()) != tmpl.order())
        throw std::invalid_argument("blowup: one class size per template vertex required");
    for (int s : class_sizes)
        if (s < 0) throw std::invalid_argument("blowup: class sizes must be >= 0");
    std::vector<int> offset(tmpl.order() + 1, 0);
    for (int v = 0; v < tmpl.order(); ++v) offset[v + 1] = offset[v] + class_sizes[v];
    std::vector<std::pair<int, int>> arcs;
    for (const auto& [a, b] : tmpl.arcs())
        for (int u = offset[a]; u < offset[a + 1]; ++u)
            for (int v = offset[b]; v < offset[b + 1]; ++v) arcs.emplace_back(u, v);
    return Digraph::from_arcs(offset.back(), arcs);
}

Digraph iterated_blowup(int n, int k) {
    if (n < 1) throw std::invalid_argument("iterated_blowup: n must be >= 1");
    const double x = solve_alpha(k).x_star;
    std::vector<std::pair<int, int>> arcs;
    int start = 0;
    int size = n;
    while (size >= 2) {
        int a = static_cast<int>(std::llround(x * size));
        a = std::max(1, std::min(size - 1, a));
        for (int u = start; u < start + a; ++u)
            for (int v = start + a; v < start + size; ++v) arcs.emplace_back(u, v);
        size = a;  // recurse inside the A part, which keeps the low labels
    }
    return Digraph::from_arcs(n, arcs);
}

Digraph balanced_kst_blowup(int n, int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("balanced_kst_blowup: s, t must be >= 1");
    if (n < s + t) throw std::invalid_argument("balanced_kst_blowup: n must be >= s + t");
    int src = static_cast<int>(std::llround(static_cast<double>(s) * n / (s + t)));
    src = std::max(1, std::min(n - 1, src));
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < src; ++u)
        for (int v = src; v < n; ++v) arcs.emplace_back(u, v);
    return Digraph::from_arcs(n, arcs);
}

ThreeGraph aux_3graph(const Digraph& d) {
    ThreeGraph h;
    h.n = d.order();
    const int n = h.n;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                const std::array<int, 3> v{a, b, c};
                int arcs = 0;
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j)
                        if (i != j && d.has_arc(v[i], v[j])) ++arcs;
                if (arcs != 2) continue;
                for (int i = 0; i < 3; ++i) {
                    const int y = v[(i + 1) % 3], z = v[(i + 2) % 3];
                    if (d.has_arc(v[i], y) && d.has_arc(v[i], z)) {
                        h.triples.push_back(v);
                        break;
                    }
                }
            }
        }
    }
    return h;
}

bool is_c5_free(const ThreeGraph& h) {
    if (h.n < 5) return true;
    std::vector<std::array<int, 3>> edges = h.triples;
    std::sort(edges.begin(), edges.end());
    auto has_edge = [&](int a, int b, int c) {
        std::array<int, 3> key{a, b, c};
        std::sort(key.begin(), key.end());
        return std::binary_search(edges.begin(), edges.end(), key);
    };

    std::array<int, 5> sub{};
    std::vector<int> idx(5);
    for (int i = 0; i < 5; ++i) idx[i] = i;
    while (true) {
        for (int i = 0; i < 5; ++i) sub[i] = idx[i];
        // rotation fixed by anchoring sub[0]; reflection by requiring
        // perm[0] < perm[3] among the remaining four, leaving 12 cyclic orders
        std::array<int, 4> rest{sub[1], sub[2], sub[3], sub[4]};
        std::array<int, 4> perm = rest;
        std::sort(perm.begin(), perm.end());
        do {
            if (perm[0] > perm[3]) continue;
            const std::array<int, 5> cyc{sub[0], perm[0], perm[1], perm[2], perm[3]};
            bool tight = true;
            for (int i = 0; i < 5 && tight; ++i)
                tight = has_edge(cyc[i], cyc[(i + 1) % 5], cyc[(i + 2) % 5]);
            if (tight) return false;
        } while (std::next_permutation(perm.begin(), perm.end()));

        int i = 4;
        while (i >= 0 && idx[i] == h.n - 5 + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < 5; ++j) idx[j] = idx[j - 1] + 1;
    }
    return true;
}

}  // namespace stardens
