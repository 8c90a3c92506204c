#include "stardens/count.hpp"

#include "stardens/rational.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stardens {

namespace {

constexpr int kMaxVertices = 2048;
constexpr int kOracleOrderCap = 8;

using u64 = std::uint64_t;

u64 full_mask(int bits) { return bits >= 64 ? ~u64(0) : (u64(1) << bits) - 1; }

CountResult make_result(u64 copies, int n, int order) {
    CountResult r;
    r.copies = copies;
    r.pattern_order = order;
    if (n >= order && order >= 0) {
        const double denom = big_binomial(static_cast<unsigned>(n), static_cast<unsigned>(order))
                                 .convert_to<double>();
        r.density = denom > 0 ? static_cast<double>(copies) / denom : 0.0;
    }
    return r;
}

// Counting is exact in uint64; refuse inputs whose copy count could not fit.
void check_count_range(int n, int order) {
    if (n > kMaxVertices)
        throw std::invalid_argument("count: vertex count exceeds supported cap " +
                                    std::to_string(kMaxVertices));
    if (n >= order && big_binomial(static_cast<unsigned>(n), static_cast<unsigned>(order)) >
                          BigInt(UINT64_MAX))
        throw std::invalid_argument("count: C(n, pattern order) exceeds 64-bit range");
}

}  // namespace

namespace kern {

namespace {

// pairwise non-adjacent subsets of the given size, vertices taken in
// increasing order
u64 indep1(u64 cands, int need, const u64* nonadj) {
    if (need <= 0) return 1;
    if (need == 1) return static_cast<u64>(std::popcount(cands));
    u64 total = 0;
    while (std::popcount(cands) >= need) {
        const int v = std::countr_zero(cands);
        cands &= cands - 1;
        total += indep1(cands & nonadj[v], need - 1, nonadj);
    }
    return total;
}

struct KstScan1 {
    const u64* pure;
    const u64* nonadj;
    int t = 0;
    u64 total = 0;

    void sources(u64 cands, int left, u64 common) {
        if (left == 0) {
            total += indep1(common, t, nonadj);
            return;
        }
        while (std::popcount(cands) >= left) {
            const int v = std::countr_zero(cands);
            cands &= cands - 1;
            const u64 next_common = common & pure[v];
            if (std::popcount(next_common) >= t) sources(cands & nonadj[v], left - 1, next_common);
        }
    }
};

}  // namespace

u64 count_stars1(const u64* out, const u64* in, int n, int k) {
    const u64 universe = full_mask(n);
    std::array<u64, 64> nonadj;
    for (int v = 0; v < n; ++v)
        nonadj[v] = universe & ~(out[v] | in[v] | (u64(1) << v));
    u64 total = 0;
    for (int u = 0; u < n; ++u) {
        const u64 pure_out = out[u] & ~in[u];
        total += indep1(pure_out, k - 1, nonadj.data());
    }
    return total;
}

u64 count_kst1(const u64* out, const u64* in, int n, int s, int t) {
    const u64 universe = full_mask(n);
    std::array<u64, 64> nonadj;
    std::array<u64, 64> pure;
    u64 srcs = 0;
    for (int v = 0; v < n; ++v) {
        nonadj[v] = universe & ~(out[v] | in[v] | (u64(1) << v));
        pure[v] = out[v] & ~in[v];
        if (std::popcount(pure[v]) >= t) srcs |= u64(1) << v;
    }
    KstScan1 scan{pure.data(), nonadj.data(), t, 0};
    scan.sources(srcs, s, universe);
    return scan.total;
}

bool iso1(const u64* aout, const u64* ain, const u64* bout, const u64* bin, int p) {
    std::array<std::pair<int, int>, 8> da, db;
    for (int v = 0; v < p; ++v) {
        da[v] = {std::popcount(aout[v]), std::popcount(ain[v])};
        db[v] = {std::popcount(bout[v]), std::popcount(bin[v])};
    }
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.begin() + p);
    std::sort(sb.begin(), sb.begin() + p);
    if (!std::equal(sa.begin(), sa.begin() + p, sb.begin())) return false;

    std::array<int, 8> map{};
    struct Frame {
        int w = 0;
    };
    // iterative depth-first mapping of a-vertices onto unused b-vertices
    std::array<Frame, 9> stack{};
    int depth = 0;
    unsigned used = 0;
    while (true) {
        if (depth == p) return true;
        int w = stack[depth].w;
        bool advanced = false;
        for (; w < p; ++w) {
            if (used & (1u << w)) continue;
            if (db[w] != da[depth]) continue;
            bool ok = true;
            for (int prev = 0; prev < depth; ++prev) {
                const bool afwd = (aout[depth] >> prev) & 1;
                const bool bfwd = (bout[w] >> map[prev]) & 1;
                const bool abwd = (aout[prev] >> depth) & 1;
                const bool bbwd = (bout[map[prev]] >> w) & 1;
                if (afwd != bfwd || abwd != bbwd) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[depth] = w;
            used |= 1u << w;
            stack[depth].w = w + 1;
            ++depth;
            stack[depth].w = 0;
            advanced = true;
            break;
        }
        if (advanced) continue;
        if (depth == 0) return false;
        --depth;
        used &= ~(1u << map[depth]);
    }
}

u64 count_oracle1(const u64* out, const u64* in, int n, const u64* pat_out, const u64* pat_in,
                  int p) {
    if (p > n) return 0;
    int pat_arcs = 0;
    for (int v = 0; v < p; ++v) pat_arcs += std::popcount(pat_out[v]);

    std::array<int, 8> idx{};
    for (int i = 0; i < p; ++i) idx[i] = i;
    u64 copies = 0;
    while (true) {
        std::array<u64, 8> sub_out{}, sub_in{};
        int arcs = 0;
        for (int a = 0; a < p; ++a) {
            u64 o = 0, ii = 0;
            for (int b = 0; b < p; ++b) {
                o |= ((out[idx[a]] >> idx[b]) & 1) << b;
                ii |= ((in[idx[a]] >> idx[b]) & 1) << b;
            }
            sub_out[a] = o;
            sub_in[a] = ii;
            arcs += std::popcount(o);
        }
        if (arcs == pat_arcs && iso1(sub_out.data(), sub_in.data(), pat_out, pat_in, p)) ++copies;

        int i = p - 1;
        while (i >= 0 && idx[i] == n - p + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
    }
    return copies;
}

}  // namespace kern

namespace {

// ---- wide rows (n > 64): W words per vertex row ----

struct WideRows {
    int n = 0;
    int W = 0;
    std::vector<u64> out, in, nonadj, pure;

    const u64* row(const std::vector<u64>& rows, int v) const { return rows.data() + v * W; }
};

WideRows wide_rows(const Digraph& d) {
    WideRows r;
    r.n = d.order();
    r.W = (r.n + 63) / 64;
    r.out.assign(static_cast<std::size_t>(r.n) * r.W, 0);
    r.in.assign(static_cast<std::size_t>(r.n) * r.W, 0);
    r.nonadj.assign(static_cast<std::size_t>(r.n) * r.W, 0);
    r.pure.assign(static_cast<std::size_t>(r.n) * r.W, 0);
    for (int u = 0; u < r.n; ++u) {
        u64* o = r.out.data() + static_cast<std::size_t>(u) * r.W;
        u64* i = r.in.data() + static_cast<std::size_t>(u) * r.W;
        for (int v : d.out_neighbors(u)) o[v / 64] |= u64(1) << (v % 64);
        for (int v : d.in_neighbors(u)) i[v / 64] |= u64(1) << (v % 64);
    }
    for (int u = 0; u < r.n; ++u) {
        const u64* o = r.row(r.out, u);
        const u64* i = r.row(r.in, u);
        u64* na = r.nonadj.data() + static_cast<std::size_t>(u) * r.W;
        u64* pu = r.pure.data() + static_cast<std::size_t>(u) * r.W;
        for (int w = 0; w < r.W; ++w) {
            na[w] = ~(o[w] | i[w]);
            pu[w] = o[w] & ~i[w];
        }
        na[u / 64] &= ~(u64(1) << (u % 64));
        const int tail = r.n % 64;
        if (tail) na[r.W - 1] &= (u64(1) << tail) - 1;
    }
    return r;
}

int popcount_words(const u64* a, int W) {
    int c = 0;
    for (int w = 0; w < W; ++w) c += std::popcount(a[w]);
    return c;
}

// cand buffer at level `lvl` is consumed destructively; levels stacked in scratch
u64 indep_wide(u64* cand, int need, const WideRows& r, u64* scratch) {
    if (need <= 0) return 1;
    if (need == 1) return static_cast<u64>(popcount_words(cand, r.W));
    u64 total = 0;
    while (popcount_words(cand, r.W) >= need) {
        int v = -1;
        for (int w = 0; w < r.W; ++w) {
            if (cand[w]) {
                v = w * 64 + std::countr_zero(cand[w]);
                cand[w] &= cand[w] - 1;
                break;
            }
        }
        const u64* na = r.row(r.nonadj, v);
        for (int w = 0; w < r.W; ++w) scratch[w] = cand[w] & na[w];
        total += indep_wide(scratch, need - 1, r, scratch + r.W);
    }
    return total;
}

u64 count_stars_wide(const Digraph& d, int k) {
    const WideRows r = wide_rows(d);
    std::vector<u64> scratch(static_cast<std::size_t>(k + 1) * r.W);
    u64 total = 0;
    for (int u = 0; u < r.n; ++u) {
        const u64* o = r.row(r.out, u);
        const u64* i = r.row(r.in, u);
        for (int w = 0; w < r.W; ++w) scratch[w] = o[w] & ~i[w];
        total += indep_wide(scratch.data(), k - 1, r, scratch.data() + r.W);
    }
    return total;
}

struct KstScanWide {
    const WideRows& r;
    int t;
    std::vector<u64> sink_scratch;
    u64 total = 0;

    KstScanWide(const WideRows& rows, int t_) : r(rows), t(t_) {
        sink_scratch.assign(static_cast<std::size_t>(t + 2) * r.W, 0);
    }

    // cand and common live in caller-provided per-level buffers
    void sources(u64* cand, int left, const u64* common, u64* scratch) {
        if (left == 0) {
            std::copy(common, common + r.W, sink_scratch.data());
            total += indep_wide(sink_scratch.data(), t, r, sink_scratch.data() + r.W);
            return;
        }
        while (popcount_words(cand, r.W) >= left) {
            int v = -1;
            for (int w = 0; w < r.W; ++w) {
                if (cand[w]) {
                    v = w * 64 + std::countr_zero(cand[w]);
                    cand[w] &= cand[w] - 1;
                    break;
                }
            }
            u64* next_common = scratch;
            u64* next_cand = scratch + r.W;
            const u64* pu = r.row(r.pure, v);
            for (int w = 0; w < r.W; ++w) next_common[w] = common[w] & pu[w];
            if (popcount_words(next_common, r.W) < t) continue;
            const u64* na = r.row(r.nonadj, v);
            for (int w = 0; w < r.W; ++w) next_cand[w] = cand[w] & na[w];
            sources(next_cand, left - 1, next_common, scratch + 2 * r.W);
        }
    }
};

u64 count_kst_wide(const Digraph& d, int s, int t) {
    const WideRows r = wide_rows(d);
    std::vector<u64> cand(r.W, 0);
    std::vector<u64> common(r.W, 0);
    for (int v = 0; v < r.n; ++v) {
        if (popcount_words(r.row(r.pure, v), r.W) >= t)
            cand[v / 64] |= u64(1) << (v % 64);
        common[v / 64] |= u64(1) << (v % 64);
    }
    std::vector<u64> scratch(static_cast<std::size_t>(s + 1) * 2 * r.W);
    KstScanWide scan(r, t);
    scan.sources(cand.data(), s, common.data(), scratch.data());
    return scan.total;
}

u64 count_oracle_wide(const Digraph& d, const Digraph& pattern) {
    const int n = d.order();
    const int p = pattern.order();
    if (p > n) return 0;
    std::array<u64, 8> pat_out{}, pat_in{};
    for (int u = 0; u < p; ++u) {
        for (int v : pattern.out_neighbors(u)) pat_out[u] |= u64(1) << v;
        for (int v : pattern.in_neighbors(u)) pat_in[u] |= u64(1) << v;
    }
    const std::size_t pat_arcs = pattern.arc_count();

    std::vector<int> idx(p);
    for (int i = 0; i < p; ++i) idx[i] = i;
    u64 copies = 0;
    while (true) {
        std::array<u64, 8> sub_out{}, sub_in{};
        std::size_t arcs = 0;
        for (int a = 0; a < p; ++a) {
            u64 o = 0, ii = 0;
            for (int b = 0; b < p; ++b) {
                if (a == b) continue;
                if (d.has_arc(idx[a], idx[b])) {
                    o |= u64(1) << b;
                    ++arcs;
                }
                if (d.has_arc(idx[b], idx[a])) ii |= u64(1) << b;
            }
            sub_out[a] = o;
            sub_in[a] = ii;
        }
        if (arcs == pat_arcs &&
            kern::iso1(sub_out.data(), sub_in.data(), pat_out.data(), pat_in.data(), p))
            ++copies;

        int i = p - 1;
        while (i >= 0 && idx[i] == n - p + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
    }
    return copies;
}

struct SmallRowsBuf {
    std::array<u64, 64> out{};
    std::array<u64, 64> in{};
};

SmallRowsBuf small_rows(const Digraph& d) {
    SmallRowsBuf r;
    for (int u = 0; u < d.order(); ++u) {
        for (int v : d.out_neighbors(u)) r.out[u] |= u64(1) << v;
        for (int v : d.in_neighbors(u)) r.in[u] |= u64(1) << v;
    }
    return r;
}

}  // namespace

CountResult count_stars(const Digraph& d, int k) {
    if (k < 2) throw std::invalid_argument("count_stars: k must be >= 2");
    const int n = d.order();
    check_count_range(n, k);
    if (n < k) return make_result(0, n, k);
    u64 copies;
    if (n <= 64) {
        const SmallRowsBuf r = small_rows(d);
        copies = kern::count_stars1(r.out.data(), r.in.data(), n, k);
    } else {
        copies = count_stars_wide(d, k);
    }
    return make_result(copies, n, k);
}

CountResult count_kst(const Digraph& d, int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("count_kst: s and t must be >= 1");
    const int n = d.order();
    const int order = s + t;
    check_count_range(n, order);
    if (n < order) return make_result(0, n, order);
    // tiny universes: subset enumeration is the natural algorithm
    if (order <= kOracleOrderCap && n <= order + 1)
        return count_pattern_oracle(d, PatternSpec::complete_bipartite(s, t));
    u64 copies;
    if (n <= 64) {
        const SmallRowsBuf r = small_rows(d);
        copies = kern::count_kst1(r.out.data(), r.in.data(), n, s, t);
    } else {
        copies = count_kst_wide(d, s, t);
    }
    return make_result(copies, n, order);
}

CountResult count_pattern_oracle(const Digraph& d, const PatternSpec& p) {
    const int order = p.order();
    if (order > kOracleOrderCap)
        throw std::invalid_argument("count_pattern_oracle: pattern order exceeds cap " +
                                    std::to_string(kOracleOrderCap));
    const int n = d.order();
    check_count_range(n, order);
    if (n < order) return make_result(0, n, order);
    const Digraph pat = p.realize();
    u64 copies;
    if (n <= 64) {
        const SmallRowsBuf r = small_rows(d);
        std::array<u64, 8> pat_out{}, pat_in{};
        for (int u = 0; u < order; ++u) {
            for (int v : pat.out_neighbors(u)) pat_out[u] |= u64(1) << v;
            for (int v : pat.in_neighbors(u)) pat_in[u] |= u64(1) << v;
        }
        copies = kern::count_oracle1(r.out.data(), r.in.data(), n, pat_out.data(), pat_in.data(),
                                     order);
    } else {
        copies = count_oracle_wide(d, pat);
    }
    return make_result(copies, n, order);
}

CountResult count_pattern(const Digraph& d, const PatternSpec& p) {
    switch (p.kind) {
        case PatternSpec::Kind::star: return count_stars(d, p.k);
        case PatternSpec::Kind::complete_bipartite: return count_kst(d, p.s, p.t);
        case PatternSpec::Kind::explicit_digraph: return count_pattern_oracle(d, p);
    }
    throw std::invalid_argument("count_pattern: unknown pattern kind");
}

}  // namespace stardens
