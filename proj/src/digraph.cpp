#include "stardens/digraph.hpp"
#include "stardens/pattern.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

namespace stardens {

namespace {

void check_vertex_count(int n) {
    if (n < 0) throw std::invalid_argument("digraph: negative vertex count");
}

void check_arc(int n, int u, int v) {
    if (u == v)
        throw std::invalid_argument("digraph: loop arc (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") rejected");
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("digraph: arc (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") has an endpoint outside [0," + std::to_string(n) + ")");
}

}  // namespace

Digraph::Digraph(int n) {
    check_vertex_count(n);
    n_ = n;
    out_.resize(n);
    in_.resize(n);
}

Digraph Digraph::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
    Digraph d(n);
    std::set<std::pair<int, int>> uniq;
    for (const auto& [u, v] : arcs) {
        check_arc(n, u, v);
        uniq.emplace(u, v);
    }
    for (const auto& [u, v] : uniq) {
        d.out_[u].push_back(v);
        d.in_[v].push_back(u);
    }
    for (auto& lst : d.in_) std::sort(lst.begin(), lst.end());
    d.arc_count_ = uniq.size();
    return d;
}

bool Digraph::has_arc(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& lst = out_[u];
    return std::binary_search(lst.begin(), lst.end(), v);
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(arc_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : out_[u]) result.emplace_back(u, v);
    return result;
}

bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
}

Digraph reverse(const Digraph& d) {
    std::vector<std::pair<int, int>> rev;
    rev.reserve(d.arc_count());
    for (const auto& [u, v] : d.arcs()) rev.emplace_back(v, u);
    return Digraph::from_arcs(d.order(), rev);
}

Digraph induced_subdigraph(const Digraph& d, const std::vector<int>& vertices) {
    std::vector<int> verts = vertices;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts)
        if (v < 0 || v >= d.order())
            throw std::invalid_argument("induced_subdigraph: vertex " + std::to_string(v) +
                                        " outside [0," + std::to_string(d.order()) + ")");
    const int m = static_cast<int>(verts.size());
    std::vector<std::pair<int, int>> arcs;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (a != b && d.has_arc(verts[a], verts[b])) arcs.emplace_back(a, b);
    return Digraph::from_arcs(m, arcs);
}

namespace {

constexpr int kIsoCap = 8;

struct SmallRows {
    int n = 0;
    std::array<std::uint64_t, kIsoCap> out{};
    std::array<std::uint64_t, kIsoCap> in{};
};

SmallRows small_rows(const Digraph& d) {
    SmallRows r;
    r.n = d.order();
    for (int u = 0; u < r.n; ++u) {
        for (int v : d.out_neighbors(u)) r.out[u] |= std::uint64_t(1) << v;
        for (int v : d.in_neighbors(u)) r.in[u] |= std::uint64_t(1) << v;
    }
    return r;
}

bool iso_backtrack(const SmallRows& a, const SmallRows& b, std::array<int, kIsoCap>& map,
                   int depth, unsigned used) {
    if (depth == a.n) return true;
    const int da_out = std::popcount(a.out[depth]);
    const int da_in = std::popcount(a.in[depth]);
    for (int w = 0; w < b.n; ++w) {
        if (used & (1u << w)) continue;
        if (std::popcount(b.out[w]) != da_out || std::popcount(b.in[w]) != da_in) continue;
        bool ok = true;
        for (int prev = 0; prev < depth; ++prev) {
            const bool a_fwd = (a.out[depth] >> prev) & 1;
            const bool b_fwd = (b.out[w] >> map[prev]) & 1;
            const bool a_bwd = (a.out[prev] >> depth) & 1;
            const bool b_bwd = (b.out[map[prev]] >> w) & 1;
            if (a_fwd != b_fwd || a_bwd != b_bwd) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[depth] = w;
        if (iso_backtrack(a, b, map, depth + 1, used | (1u << w))) return true;
    }
    return false;
}

}  // namespace

bool is_isomorphic(const Digraph& a, const Digraph& b) {
    if (a.order() > kIsoCap || b.order() > kIsoCap)
        throw std::invalid_argument("is_isomorphic: order exceeds cap " + std::to_string(kIsoCap));
    if (a.order() != b.order() || a.arc_count() != b.arc_count()) return false;
    const SmallRows ra = small_rows(a);
    const SmallRows rb = small_rows(b);

    // degree-pair multisets must match
    std::vector<std::pair<int, int>> da, db;
    for (int v = 0; v < ra.n; ++v) {
        da.emplace_back(std::popcount(ra.out[v]), std::popcount(ra.in[v]));
        db.emplace_back(std::popcount(rb.out[v]), std::popcount(rb.in[v]));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;

    std::array<int, kIsoCap> map{};
    return iso_backtrack(ra, rb, map, 0, 0);
}

namespace {

// splitmix64; keeps generation identical across standard libraries
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace

Digraph random_digraph(int n, double arc_probability, GraphMode mode, std::uint64_t seed) {
    check_vertex_count(n);
    if (arc_probability < 0.0 || arc_probability > 1.0)
        throw std::invalid_argument("random_digraph: arc probability outside [0,1]");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> arcs;
    if (mode == GraphMode::general) {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                if (rng.unit() < arc_probability) arcs.emplace_back(u, v);
            }
    } else {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (rng.unit() < arc_probability) {
                    if (rng.next() & 1)
                        arcs.emplace_back(u, v);
                    else
                        arcs.emplace_back(v, u);
                }
            }
    }
    return Digraph::from_arcs(n, arcs);
}

bool check_invariants(const Digraph& d) {
    const int n = d.order();
    std::size_t arcs_seen = 0;
    for (int u = 0; u < n; ++u) {
        const auto& out = d.out_neighbors(u);
        if (!std::is_sorted(out.begin(), out.end())) return false;
        if (std::adjacent_find(out.begin(), out.end()) != out.end()) return false;
        for (int v : out) {
            if (v < 0 || v >= n || v == u) return false;
            const auto& in = d.in_neighbors(v);
            if (!std::binary_search(in.begin(), in.end(), u)) return false;
        }
        arcs_seen += out.size();
        const auto& in = d.in_neighbors(u);
        if (!std::is_sorted(in.begin(), in.end())) return false;
        for (int v : in) {
            if (v < 0 || v >= n || v == u) return false;
            const auto& back = d.out_neighbors(v);
            if (!std::binary_search(back.begin(), back.end(), u)) return false;
        }
    }
    return arcs_seen == d.arc_count();
}

Digraph star_digraph(int k) {
    if (k < 2) throw std::invalid_argument("star_digraph: k must be >= 2");
    std::vector<std::pair<int, int>> arcs;
    for (int leaf = 1; leaf < k; ++leaf) arcs.emplace_back(0, leaf);
    return Digraph::from_arcs(k, arcs);
}

Digraph kst_digraph(int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("kst_digraph: s and t must be >= 1");
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) arcs.emplace_back(i, s + j);
    return Digraph::from_arcs(s + t, arcs);
}

PatternSpec PatternSpec::star(int k) {
    if (k < 2) throw std::invalid_argument("pattern: star requires k >= 2");
    PatternSpec p;
    p.kind = Kind::star;
    p.k = k;
    return p;
}

PatternSpec PatternSpec::complete_bipartite(int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("pattern: kst requires s, t >= 1");
    PatternSpec p;
    p.kind = Kind::complete_bipartite;
    p.s = s;
    p.t = t;
    return p;
}

PatternSpec PatternSpec::explicit_digraph(Digraph d) {
    if (d.order() > 8) throw std::invalid_argument("pattern: explicit digraph order exceeds 8");
    PatternSpec p;
    p.kind = Kind::explicit_digraph;
    p.pattern = std::move(d);
    return p;
}

int PatternSpec::order() const {
    switch (kind) {
        case Kind::star: return k;
        case Kind::complete_bipartite: return s + t;
        case Kind::explicit_digraph: return pattern.order();
    }
    return 0;
}

Digraph PatternSpec::realize() const {
    switch (kind) {
        case Kind::star: return star_digraph(k);
        case Kind::complete_bipartite: return kst_digraph(s, t);
        case Kind::explicit_digraph: return pattern;
    }
    return Digraph();
}

std::string PatternSpec::name() const {
    switch (kind) {
        case Kind::star: return "star:" + std::to_string(k);
        case Kind::complete_bipartite: return "kst:" + std::to_string(s) + "," + std::to_string(t);
        case Kind::explicit_digraph: return "explicit:" + std::to_string(pattern.order());
    }
    return "";
}

}  // namespace stardens
