#include "stardens/io.hpp"

#include "stardens/compress.hpp"
#include "stardens/count.hpp"
#include "stardens/search.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

using namespace stardens;
using nlohmann::json;

namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

// Runs the CLI under test (path in STARDENS_CLI) and captures stdout.
CliRun run_cli(const std::string& args, bool merge_stderr = false) {
    const char* cli = std::getenv("STARDENS_CLI");
    REQUIRE_MESSAGE(cli != nullptr, "STARDENS_CLI must point at the CLI binary");
    std::string cmd = "'" + std::string(cli) + "' " + args;
    cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliRun r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json load_schema(const std::string& name) {
    const char* dir = std::getenv("STARDENS_SCHEMA_DIR");
    REQUIRE_MESSAGE(dir != nullptr, "STARDENS_SCHEMA_DIR must point at docs/schemas");
    return json::parse(read_file(std::string(dir) + "/" + name));
}

// Minimal draft-07 checker covering the keywords the shipped schemas use:
// type, required, properties, items.
bool schema_ok(const json& schema, const json& value) {
    if (schema.contains("type")) {
        const std::string t = schema["type"].get<std::string>();
        if (t == "object" && !value.is_object()) return false;
        if (t == "array" && !value.is_array()) return false;
        if (t == "string" && !value.is_string()) return false;
        if (t == "integer" && !value.is_number_integer()) return false;
        if (t == "number" && !value.is_number()) return false;
        if (t == "boolean" && !value.is_boolean()) return false;
    }
    if (schema.contains("required")) {
        if (!value.is_object()) return false;
        for (const json& key : schema["required"])
            if (!value.contains(key.get<std::string>())) return false;
    }
    if (schema.contains("properties") && value.is_object())
        for (const auto& [key, sub] : schema["properties"].items())
            if (value.contains(key) && !schema_ok(sub, value.at(key))) return false;
    if (schema.contains("items") && value.is_array())
        for (const json& element : value)
            if (!schema_ok(schema["items"], element)) return false;
    return true;
}

std::string temp_path(const std::string& name) { return "/tmp/stardens_test_" + name; }

}  // namespace

TEST_CASE("arclist round trips bit-exactly") {
    CHECK(to_arclist(star_digraph(3)) == "3 2\n0 1\n0 2\n");
    CHECK(to_arclist(Digraph(4)) == "4 0\n");

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Digraph d = random_digraph(7, 0.4, GraphMode::general, seed);
        const std::string text = to_arclist(d);
        const Digraph back = digraph_from_arclist_string(text);
        CHECK(back == d);
        CHECK(to_arclist(back) == text);
    }

    // arcs may arrive in any order
    CHECK(digraph_from_arclist_string("3 2\n0 2\n0 1\n") == star_digraph(3));
}

TEST_CASE("arclist rejects malformed input") {
    CHECK_THROWS_AS(digraph_from_arclist_string(""), std::runtime_error);
    CHECK_THROWS_AS(digraph_from_arclist_string("3"), std::runtime_error);
    CHECK_THROWS_AS(digraph_from_arclist_string("-1 0\n"), std::runtime_error);
    CHECK_THROWS_AS(digraph_from_arclist_string("3 2\n0 1\n"), std::runtime_error);      // short
    CHECK_THROWS_AS(digraph_from_arclist_string("3 1\n0 3\n"), std::runtime_error);      // range
    CHECK_THROWS_AS(digraph_from_arclist_string("3 1\n1 1\n"), std::runtime_error);      // loop
    CHECK_THROWS_AS(digraph_from_arclist_string("3 2\n0 1\n0 1\n"), std::runtime_error); // dup
    CHECK_THROWS_AS(digraph_from_arclist_string("3 1\n0 1\n9\n"), std::runtime_error);   // tail
    CHECK_THROWS_AS(digraph_from_arclist_file("/nonexistent/x.arclist"), std::runtime_error);
}

TEST_CASE("digraph json round trips") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Digraph d = random_digraph(6, 0.5, GraphMode::general, seed + 3);
        CHECK(digraph_from_json(digraph_to_json(d)) == d);
        CHECK(schema_ok(load_schema("digraph.schema.json"), digraph_to_json(d)));
    }

    CHECK_THROWS_AS(digraph_from_json(json{{"n", 3}}), std::runtime_error);
    CHECK_THROWS_AS(digraph_from_json(json{{"n", "3"}, {"arcs", json::array()}}),
                    std::runtime_error);
    CHECK_THROWS_AS(digraph_from_json(json{{"n", 3}, {"arcs", {{0}}}}), std::runtime_error);
    CHECK_THROWS_AS(digraph_from_json(json{{"n", 3}, {"arcs", {{0, 0}}}}), std::runtime_error);
    CHECK_THROWS_AS(digraph_from_json(json::array()), std::runtime_error);
}

TEST_CASE("threegraph text round trips") {
    const ThreeGraph h = aux_3graph(star_digraph(3));
    CHECK(to_threegraph_text(h) == "3 1\n0 1 2\n");
    const ThreeGraph back = threegraph_from_text(to_threegraph_text(h));
    CHECK(back.n == h.n);
    CHECK(back.triples == h.triples);

    CHECK_THROWS_AS(threegraph_from_text(""), std::runtime_error);
    CHECK_THROWS_AS(threegraph_from_text("3 1\n0 2 1\n"), std::runtime_error);  // unsorted
    CHECK_THROWS_AS(threegraph_from_text("3 1\n0 1 3\n"), std::runtime_error);  // range
    CHECK_THROWS_AS(threegraph_from_text("4 2\n0 1 2\n0 1 2\n"), std::runtime_error);
    CHECK_THROWS_AS(threegraph_from_text("3 1\n0 1 2\nx\n"), std::runtime_error);
}

TEST_CASE("pattern_from_string") {
    const PatternSpec s = pattern_from_string("star:4");
    CHECK(s.kind == PatternSpec::Kind::star);
    CHECK(s.k == 4);
    CHECK(s.name() == "star:4");

    const PatternSpec b = pattern_from_string("kst:2,3");
    CHECK(b.kind == PatternSpec::Kind::complete_bipartite);
    CHECK(b.s == 2);
    CHECK(b.t == 3);
    CHECK(b.name() == "kst:2,3");

    for (const char* bad : {"", "star", "star:", "star:x", "star:3x", "star:1", "kst:2",
                            "kst:2,", "kst:,3", "kst:2,3x", "kst:0,3", "foo:1"})
        CHECK_THROWS_AS(pattern_from_string(bad), std::runtime_error);
}

TEST_CASE("search_report_to_json carries the full report") {
    const SearchReport r = exhaustive_max(3, PatternSpec::star(3), GraphMode::oriented);
    const json j = search_report_to_json(r);
    CHECK(j["n"] == 3);
    CHECK(j["pattern"] == "star:3");
    CHECK(j["mode"] == "oriented");
    CHECK(j["max_copies"] == 1);
    CHECK(j["graphs_examined"] == 27);
    CHECK(j["density"].get<double>() == doctest::Approx(1.0));
    CHECK(digraph_from_json(j["witness"]) == r.witness);
    CHECK(schema_ok(load_schema("search.schema.json"), j));
}

TEST_CASE("cli alpha and kst text output") {
    const CliRun alpha = run_cli("alpha --k 3");
    CHECK(alpha.code == 0);
    CHECK(alpha.out.find("alpha 0.464101615") != std::string::npos);
    CHECK(alpha.out.find("x 0.366025404") != std::string::npos);
    CHECK(alpha.out.find("residual ") != std::string::npos);

    const CliRun kst = run_cli("kst --s 2 --t 2");
    CHECK(kst.code == 0);
    CHECK(kst.out.find("exact 3/8") != std::string::npos);
    CHECK(kst.out.find("value 0.375") != std::string::npos);

    const CliRun kst12 = run_cli("kst --s 1 --t 2");
    CHECK(kst12.code == 0);
    CHECK(kst12.out.find("exact") == std::string::npos);  // no closed form for min = 1
    CHECK(kst12.out.find("value 0.464101615") != std::string::npos);
}

TEST_CASE("cli count verb on a file") {
    const std::string path = temp_path("s3.arclist");
    write_file(path, to_arclist(star_digraph(3)));

    const CliRun fast = run_cli("count --pattern star:3 --in " + path);
    CHECK(fast.code == 0);
    CHECK(fast.out.find("copies 1") != std::string::npos);
    CHECK(fast.out.find("density 1") != std::string::npos);

    const CliRun oracle = run_cli("count --pattern star:3 --in " + path + " --oracle");
    CHECK(oracle.code == 0);
    CHECK(oracle.out == fast.out);

    const CliRun exact = run_cli("count --pattern star:3 --in " + path + " --exact");
    CHECK(exact.out.find("exact 1") != std::string::npos);

    std::remove(path.c_str());
}

TEST_CASE("cli construct round trips through a file") {
    const std::string path = temp_path("blowup8.arclist");
    const CliRun with_out = run_cli("construct --kind star --n 8 --k 3 --out " + path);
    CHECK(with_out.code == 0);
    CHECK(with_out.out.find("copies 31") != std::string::npos);
    CHECK(digraph_from_arclist_file(path) == iterated_blowup(8, 3));
    std::remove(path.c_str());

    // without --out the arclist goes to stdout and the summary to stderr
    const CliRun to_stdout = run_cli("construct --kind star --n 8 --k 3");
    CHECK(to_stdout.code == 0);
    CHECK(digraph_from_arclist_string(to_stdout.out) == iterated_blowup(8, 3));

    const CliRun kst_con = run_cli("construct --kind kst --n 8 --s 2 --t 2");
    CHECK(kst_con.code == 0);
    CHECK(digraph_from_arclist_string(kst_con.out) == kst_digraph(4, 4));
}

TEST_CASE("cli compress reports monotone counts") {
    const std::string path = temp_path("rand7.arclist");
    const Digraph d = random_digraph(7, 0.45, GraphMode::general, 99);
    write_file(path, to_arclist(d));

    const CliRun r = run_cli("compress --k 3 --in " + path + " --json");
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(schema_ok(load_schema("compress.schema.json"), j));
    CHECK(j["before"].get<std::uint64_t>() == count_stars(d, 3).copies);
    CHECK(j["after"].get<std::uint64_t>() >= j["before"].get<std::uint64_t>());
    const Digraph reduced = digraph_from_json(j["digraph"]);
    CHECK(all_class_pairs_joined(reduced));
    CHECK(count_stars(reduced, 3).copies == j["after"].get<std::uint64_t>());
    std::remove(path.c_str());
}

TEST_CASE("cli search json matches the library") {
    const CliRun r = run_cli("search --n 4 --pattern star:3 --mode oriented");
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(schema_ok(load_schema("search.schema.json"), j));
    CHECK(j["max_copies"] == 3);
    CHECK(j["graphs_examined"] == 729);
    const Digraph witness = digraph_from_json(j["witness"]);
    CHECK(count_stars(witness, 3).copies == 3);

    const CliRun again = run_cli("search --n 4 --pattern star:3 --mode oriented");
    CHECK(again.out == r.out);  // byte-identical reruns
}

TEST_CASE("cli aux3 text output") {
    const std::string path = temp_path("aux_s3.arclist");
    write_file(path, to_arclist(star_digraph(3)));
    const CliRun r = run_cli("aux3 --in " + path + " --check-c5");
    CHECK(r.code == 0);
    CHECK(r.out == "3 1\n0 1 2\nc5_free true\n");
    std::remove(path.c_str());
}

TEST_CASE("cli convergence emits the csv contract") {
    const CliRun r = run_cli("convergence --k 3 --n-list 10 20");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("n,construction_density,alpha,gap\n", 0) == 0);
    CHECK(r.out.find("\n10,") != std::string::npos);
    CHECK(r.out.find("\n20,") != std::string::npos);

    const std::string path = temp_path("conv.csv");
    const CliRun file_run = run_cli("convergence --k 3 --n-list 10 20 --out " + path);
    CHECK(file_run.code == 0);
    CHECK(read_file(path) == r.out);
    std::remove(path.c_str());
}

TEST_CASE("cli json outputs validate against the shipped schemas") {
    const std::string path = temp_path("schema_s3.arclist");
    write_file(path, to_arclist(star_digraph(3)));

    const std::pair<const char*, const char*> cases[] = {
        {"alpha --k 3 --json", "alpha.schema.json"},
        {"kst --s 2 --t 3 --json", "kst.schema.json"},
        {"construct --kind star --n 8 --k 3 --json", "construct.schema.json"},
        {"construct --kind kst --n 8 --s 2 --t 2 --json", "construct.schema.json"},
        {"count --pattern star:3 --in /tmp/stardens_test_schema_s3.arclist --json",
         "count.schema.json"},
        {"compress --k 3 --in /tmp/stardens_test_schema_s3.arclist --json",
         "compress.schema.json"},
        {"search --n 3 --pattern star:3 --mode general", "search.schema.json"},
        {"aux3 --in /tmp/stardens_test_schema_s3.arclist --check-c5 --json", "aux3.schema.json"},
        {"bench --suite search --json", "bench.schema.json"},
        {"convergence --k 3 --n-list 10 20 --json", "convergence.schema.json"},
    };
    for (const auto& [args, schema_name] : cases) {
        CAPTURE(args);
        const CliRun r = run_cli(args);
        CHECK(r.code == 0);
        json parsed = json::parse(r.out, nullptr, false);
        REQUIRE_FALSE(parsed.is_discarded());
        CHECK(schema_ok(load_schema(schema_name), parsed));
    }

    // deterministic bytes for a deterministic verb
    CHECK(run_cli("alpha --k 4 --json").out == run_cli("alpha --k 4 --json").out);
    std::remove(path.c_str());
}

TEST_CASE("cli exit codes") {
    CHECK(run_cli("alpha --k 2").code == 1);                    // domain error
    CHECK(run_cli("count --pattern star:3 --in /nope").code == 1);
    CHECK(run_cli("search --n 9 --pattern star:3 --mode oriented").code == 1);

    CHECK(run_cli("definitely-not-a-verb").code == 2);          // usage errors
    CHECK(run_cli("alpha").code == 2);
    CHECK(run_cli("alpha --k 3 --bogus-flag 1").code == 2);
    CHECK(run_cli("convergence --k 3 --n-list 5 4").code == 2);
    CHECK(run_cli("construct --kind star --n 8").code == 2);    // star needs --k
    CHECK(run_cli("construct --kind kst --n 8 --s 2").code == 2);

    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("alpha --help").code == 0);
}
