#include "stardens/count.hpp"

#include "stardens/rational.hpp"
#include "stardens/search.hpp"

#include "naive_oracle.hpp"

#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

using namespace stardens;

TEST_CASE("count_stars on canonical small digraphs") {
    CHECK(count_stars(star_digraph(3), 3).copies == 1);
    CHECK(count_stars(star_digraph(3), 3).density == doctest::Approx(1.0));
    CHECK(count_stars(star_digraph(5), 5).copies == 1);

    // transitive tournament: out-neighborhoods are never independent
    const Digraph tt3 = Digraph::from_arcs(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(count_stars(tt3, 3).copies == 0);

    // k = 2 counts non-digon arcs
    const Digraph mixed = Digraph::from_arcs(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(count_stars(mixed, 2).copies == 1);

    CHECK(count_stars(Digraph(2), 3).copies == 0);  // n < k
    CHECK(count_stars(Digraph(2), 3).density == 0.0);
    CHECK_THROWS_AS(count_stars(star_digraph(3), 1), std::invalid_argument);
}

TEST_CASE("count_kst on canonical small digraphs") {
    CHECK(count_kst(kst_digraph(2, 2), 2, 2).copies == 1);
    CHECK(count_kst(kst_digraph(2, 3), 2, 3).copies == 1);
    CHECK(count_kst(kst_digraph(2, 3), 3, 2).copies == 0);
    CHECK(count_kst(star_digraph(3), 1, 2).copies == 1);  // S_3 is K_{1,2}
    CHECK_THROWS_AS(count_kst(Digraph(3), 0, 2), std::invalid_argument);
}

TEST_CASE("kst reversal duality") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const int n = 5 + static_cast<int>(seed % 3);
        const GraphMode mode = seed % 2 ? GraphMode::general : GraphMode::oriented;
        const Digraph d = random_digraph(n, 0.45, mode, seed);
        const Digraph r = reverse(d);
        CHECK(count_kst(d, 2, 3).copies == count_kst(r, 3, 2).copies);
        CHECK(count_kst(d, 1, 2).copies == count_kst(r, 2, 1).copies);
        CHECK(count_kst(d, 2, 2).copies == count_kst(r, 2, 2).copies);
    }
}

TEST_CASE("fast paths equal oracle and the independent reference") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const int n = 4 + static_cast<int>(seed % 4);
        const double p = 0.25 + 0.15 * static_cast<double>(seed % 4);
        const GraphMode mode = seed % 2 ? GraphMode::general : GraphMode::oriented;
        const Digraph d = random_digraph(n, p, mode, seed);
        for (int k : {3, 4}) {
            const std::uint64_t fast = count_stars(d, k).copies;
            CHECK(fast == count_pattern_oracle(d, PatternSpec::star(k)).copies);
            CHECK(fast == testref::naive_count(d, star_digraph(k)));
        }
        const std::uint64_t kst22 = count_kst(d, 2, 2).copies;
        CHECK(kst22 == count_pattern_oracle(d, PatternSpec::complete_bipartite(2, 2)).copies);
        CHECK(kst22 == testref::naive_count(d, kst_digraph(2, 2)));
    }
}

TEST_CASE("count_pattern dispatch: explicit equals star fast path") {
    const Digraph d = random_digraph(7, 0.5, GraphMode::oriented, 11);
    const PatternSpec exp = PatternSpec::explicit_digraph(star_digraph(4));
    CHECK(count_pattern(d, exp).copies == count_stars(d, 4).copies);

    const Digraph d5 = random_digraph(5, 0.5, GraphMode::general, 3);
    const PatternSpec e3 = PatternSpec::explicit_digraph(star_digraph(3));
    CHECK(count_pattern(d5, e3).copies == count_stars(d5, 3).copies);
}

TEST_CASE("transitive blow-up class formula") {
    // classes sized (4,3,2), arcs smaller class -> larger class
    const Digraph tmpl = Digraph::from_arcs(3, {{1, 0}, {2, 0}, {2, 1}});
    const std::vector<int> sizes{4, 3, 2};
    const Digraph b = blowup(tmpl, sizes);
    for (int k : {3, 4}) {
        std::uint64_t expected = 0;
        for (const auto& [src, snk] : tmpl.arcs())
            expected += static_cast<std::uint64_t>(sizes[src]) *
                        binomial_u64(static_cast<unsigned>(sizes[snk]), static_cast<unsigned>(k - 1));
        CHECK(count_stars(b, k).copies == expected);
        CHECK(count_stars(b, k).copies == testref::naive_count(b, star_digraph(k)));
    }
}

TEST_CASE("wide rows (n > 64) match the class formula") {
    const Digraph tmpl = Digraph::from_arcs(2, {{1, 0}});
    const Digraph b = blowup(tmpl, {50, 30});  // n = 80
    CHECK(b.order() == 80);
    CHECK(count_stars(b, 3).copies == 30ull * binomial_u64(50, 2));
    CHECK(count_kst(b, 2, 2).copies == binomial_u64(30, 2) * binomial_u64(50, 2));
    CHECK(count_kst(b, 2, 3).copies == binomial_u64(30, 2) * binomial_u64(50, 3));

    // isolated tail beyond one word leaves copies unchanged
    std::vector<std::pair<int, int>> arcs = b.arcs();
    const Digraph padded = Digraph::from_arcs(130, arcs);
    CHECK(count_stars(padded, 3).copies == count_stars(b, 3).copies);
}

TEST_CASE("oracle handles explicit patterns and rejects oversized ones") {
    const Digraph d = random_digraph(6, 0.5, GraphMode::general, 5);
    const Digraph digon = Digraph::from_arcs(2, {{0, 1}, {1, 0}});
    const PatternSpec p = PatternSpec::explicit_digraph(digon);
    CHECK(count_pattern_oracle(d, p).copies == testref::naive_count(d, digon));

    CHECK_THROWS_AS(count_stars(Digraph(2100), 3), std::invalid_argument);  // vertex cap
    // C(2048, 8) does not fit in 64 bits
    CHECK_THROWS_AS(count_stars(Digraph(2048), 8), std::invalid_argument);
}

TEST_CASE("adding an isolated vertex keeps copies, scales density") {
    const Digraph d = random_digraph(6, 0.5, GraphMode::oriented, 9);
    const Digraph padded = Digraph::from_arcs(7, d.arcs());
    const CountResult before = count_stars(d, 3);
    const CountResult after = count_stars(padded, 3);
    CHECK(before.copies == after.copies);
    // denominator grows from C(6,3)=20 to C(7,3)=35
    CHECK(after.density == doctest::Approx(before.density * 20.0 / 35.0));
}

TEST_CASE("density stays within [0,1] and exact_density matches") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Digraph d = random_digraph(7, 0.5, GraphMode::general, seed);
        const CountResult c = count_stars(d, 3);
        CHECK(c.density >= 0.0);
        CHECK(c.density <= 1.0);
        const Rational r = exact_density(c.copies, d.order(), c.pattern_order);
        CHECK(c.density == doctest::Approx(r.to_double()).epsilon(1e-12));
    }
}
