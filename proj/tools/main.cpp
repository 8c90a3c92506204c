// stardens CLI: every library operation behind one deterministic front end.
#include "stardens/compress.hpp"
#include "stardens/count.hpp"
#include "stardens/density.hpp"
#include "stardens/digraph.hpp"
#include "stardens/io.hpp"
#include "stardens/pattern.hpp"
#include "stardens/rational.hpp"
#include "stardens/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace stardens;

std::string fmt9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

struct UsageError {
    std::string message;
};

int run_alpha(int k, double tol, bool as_json) {
    const OptResult r = solve_alpha(k, tol);
    if (as_json) {
        json j{{"k", r.k},           {"tol", r.tolerance},          {"alpha", r.alpha},
               {"x", r.x_star},      {"residual", r.fixed_point_residual},
               {"evaluations", r.evaluations}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "alpha " << fmt9(r.alpha) << '\n'
                  << "x " << fmt9(r.x_star) << '\n'
                  << "residual " << fmt9(r.fixed_point_residual) << '\n';
    }
    return 0;
}

int run_kst(int s, int t, bool as_json) {
    const double value = kst_inducibility(s, t);
    const bool closed_form = std::min(s, t) >= 2;
    if (as_json) {
        json j{{"s", s}, {"t", t}, {"value", value}};
        if (closed_form) j["exact"] = kst_inducibility_exact(s, t).str();
        std::cout << j.dump(2) << '\n';
    } else {
        if (closed_form) std::cout << "exact " << kst_inducibility_exact(s, t).str() << '\n';
        std::cout << "value " << fmt9(value) << '\n';
    }
    return 0;
}

int run_construct(const std::string& kind, int n, int k, int s, int t, const std::string& out,
                  bool as_json) {
    Digraph d;
    PatternSpec p;
    if (kind == "star") {
        d = iterated_blowup(n, k);
        p = PatternSpec::star(k);
    } else {
        d = balanced_kst_blowup(n, s, t);
        p = PatternSpec::complete_bipartite(s, t);
    }
    const CountResult c = count_pattern(d, p);
    if (!out.empty()) write_file(out, to_arclist(d));
    if (as_json) {
        json j{{"kind", kind},
               {"n", n},
               {"copies", c.copies},
               {"density", c.density},
               {"digraph", digraph_to_json(d)}};
        if (kind == "star")
            j["k"] = k;
        else {
            j["s"] = s;
            j["t"] = t;
        }
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::ostream& summary = out.empty() ? std::cerr : std::cout;
    if (out.empty()) std::cout << to_arclist(d);
    summary << "kind " << kind << '\n'
            << "n " << n << '\n'
            << "copies " << c.copies << '\n'
            << "density " << fmt9(c.density) << '\n';
    return 0;
}

int run_count(const std::string& pattern, const std::string& in, bool oracle, bool exact,
              bool as_json) {
    const PatternSpec p = pattern_from_string(pattern);
    const Digraph d = digraph_from_arclist_file(in);
    const CountResult c = oracle ? count_pattern_oracle(d, p) : count_pattern(d, p);
    const Rational r = exact_density(c.copies, d.order(), c.pattern_order);
    if (as_json) {
        json j{{"pattern", p.name()}, {"n", d.order()},         {"copies", c.copies},
               {"density", c.density}, {"exact", r.str()},       {"oracle", oracle}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "pattern " << p.name() << '\n'
                  << "n " << d.order() << '\n'
                  << "copies " << c.copies << '\n'
                  << "density " << fmt9(c.density) << '\n';
        if (exact) std::cout << "exact " << r.str() << '\n';
    }
    return 0;
}

int run_compress(int k, const std::string& in, const std::string& out, bool as_json) {
    const Digraph d = digraph_from_arclist_file(in);
    const std::uint64_t before = count_stars(d, k).copies;
    const Digraph reduced = sort_and_orient(compress(d, k), k);
    const std::uint64_t after = count_stars(reduced, k).copies;
    const ClassPartition part = twin_partition(reduced);
    std::vector<double> profile;
    for (const std::vector<int>& c : part.classes)
        profile.push_back(static_cast<double>(c.size()) / reduced.order());
    if (!out.empty()) write_file(out, to_arclist(reduced));
    if (as_json) {
        json j{{"k", k},
               {"n", d.order()},
               {"before", before},
               {"after", after},
               {"profile", profile},
               {"digraph", digraph_to_json(reduced)}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "k " << k << '\n'
                  << "n " << d.order() << '\n'
                  << "before " << before << '\n'
                  << "after " << after << '\n'
                  << "profile";
        for (double w : profile) std::cout << ' ' << fmt9(w);
        std::cout << '\n';
    }
    return 0;
}

int run_search(int n, const std::string& pattern, const std::string& mode, int threads) {
    const PatternSpec p = pattern_from_string(pattern);
    const GraphMode m = mode == "general" ? GraphMode::general : GraphMode::oriented;
    const SearchReport r = exhaustive_max(n, p, m, threads);
    std::cout << search_report_to_json(r).dump(2) << '\n';
    return 0;
}

int run_aux3(const std::string& in, bool check_c5, bool as_json) {
    const Digraph d = digraph_from_arclist_file(in);
    const ThreeGraph h = aux_3graph(d);
    if (as_json) {
        json triples = json::array();
        for (const auto& t : h.triples) triples.push_back({t[0], t[1], t[2]});
        json j{{"n", h.n}, {"triples", std::move(triples)}};
        if (check_c5) j["c5_free"] = is_c5_free(h);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << to_threegraph_text(h);
        if (check_c5) std::cout << "c5_free " << (is_c5_free(h) ? "true" : "false") << '\n';
    }
    return 0;
}

struct BenchRow {
    std::string suite;
    std::string name;
    int n = 0;
    std::string param;
    double millis = 0.0;
};

template <typename F>
double time_ms(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

int run_bench(const std::string& suite, bool as_json) {
    std::vector<BenchRow> rows;
    if (suite == "counting") {
        for (int n : {60, 120}) {
            const Digraph d = iterated_blowup(n, 3);
            rows.push_back({suite, "stars_blowup", n, "k=3",
                            time_ms([&] { count_stars(d, 3); })});
        }
        const Digraph b = balanced_kst_blowup(60, 2, 2);
        rows.push_back({suite, "kst_blowup", 60, "s=2 t=2",
                        time_ms([&] { count_kst(b, 2, 2); })});
        const Digraph r8 = random_digraph(8, 0.5, GraphMode::general, 7);
        rows.push_back({suite, "oracle_random", 8, "star:4",
                        time_ms([&] { count_pattern_oracle(r8, PatternSpec::star(4)); })});
    } else {
        for (int n : {3, 4}) {
            rows.push_back({suite, "exhaustive_star3_oriented", n, "star:3",
                            time_ms([&] { exhaustive_max(n, PatternSpec::star(3),
                                                         GraphMode::oriented); })});
        }
        rows.push_back({suite, "exhaustive_star3_general", 3, "star:3",
                        time_ms([&] { exhaustive_max(3, PatternSpec::star(3),
                                                     GraphMode::general); })});
    }
    if (as_json) {
        json j = json::array();
        for (const BenchRow& r : rows)
            j.push_back({{"suite", r.suite},
                         {"case", r.name},
                         {"n", r.n},
                         {"param", r.param},
                         {"millis", r.millis}});
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "suite,case,n,param,millis\n";
        for (const BenchRow& r : rows)
            std::cout << r.suite << ',' << r.name << ',' << r.n << ',' << r.param << ','
                      << fmt9(r.millis) << '\n';
    }
    return 0;
}

int run_convergence(int k, const std::vector<int>& n_list, const std::string& out, bool as_json) {
    if (n_list.empty()) throw UsageError{"convergence: --n-list must be nonempty"};
    for (std::size_t i = 1; i < n_list.size(); ++i)
        if (n_list[i] <= n_list[i - 1])
            throw UsageError{"convergence: --n-list must be strictly ascending"};
    const double alpha = solve_alpha(k).alpha;
    struct Row {
        int n;
        double density;
        double gap;
    };
    std::vector<Row> rows;
    for (int n : n_list) {
        const Digraph d = iterated_blowup(n, k);
        const double density = count_stars(d, k).density;
        rows.push_back({n, density, density - alpha});
    }
    std::string text;
    if (as_json) {
        json jrows = json::array();
        for (const Row& r : rows)
            jrows.push_back({{"n", r.n}, {"construction_density", r.density}, {"gap", r.gap}});
        json j{{"k", k}, {"alpha", alpha}, {"rows", std::move(jrows)}};
        text = j.dump(2) + "\n";
    } else {
        text = "n,construction_density,alpha,gap\n";
        for (const Row& r : rows)
            text += std::to_string(r.n) + "," + fmt9(r.density) + "," + fmt9(alpha) + "," +
                    fmt9(r.gap) + "\n";
    }
    if (out.empty())
        std::cout << text;
    else
        write_file(out, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"induced star / complete-bipartite digraph density toolkit"};
    app.require_subcommand(1);

    int alpha_k = 0;
    double alpha_tol = 1e-12;
    bool alpha_json = false;
    CLI::App* alpha = app.add_subcommand("alpha", "solve for alpha_k and its maximizer x_k");
    alpha->add_option("--k", alpha_k, "star size k >= 3")->required();
    alpha->add_option("--tol", alpha_tol, "solver tolerance in (0, 1e-4]");
    alpha->add_flag("--json", alpha_json, "emit JSON");

    int kst_s = 0, kst_t = 0;
    bool kst_json = false;
    CLI::App* kst = app.add_subcommand("kst", "inducibility of K_{s,t}");
    kst->add_option("--s", kst_s, "source side size")->required();
    kst->add_option("--t", kst_t, "sink side size")->required();
    kst->add_flag("--json", kst_json, "emit JSON");

    std::string con_kind, con_out;
    int con_n = 0, con_k = 0, con_s = 0, con_t = 0;
    bool con_json = false;
    CLI::App* con = app.add_subcommand("construct", "extremal blow-up constructions");
    con->add_option("--kind", con_kind, "star | kst")
        ->required()
        ->check(CLI::IsMember({"star", "kst"}));
    con->add_option("--n", con_n, "vertex count")->required();
    con->add_option("--k", con_k, "star size (kind star)");
    con->add_option("--s", con_s, "source side (kind kst)");
    con->add_option("--t", con_t, "sink side (kind kst)");
    con->add_option("--out", con_out, "write arclist here instead of stdout");
    con->add_flag("--json", con_json, "emit JSON");

    std::string count_pattern_text, count_in;
    bool count_oracle = false, count_exact = false, count_json = false;
    CLI::App* count = app.add_subcommand("count", "count induced copies in an arclist digraph");
    count->add_option("--pattern", count_pattern_text, "star:K or kst:S,T")->required();
    count->add_option("--in", count_in, "arclist v1 input file")->required();
    count->add_flag("--oracle", count_oracle, "use the subset-enumeration oracle");
    count->add_flag("--exact", count_exact, "also print the exact rational density");
    count->add_flag("--json", count_json, "emit JSON");

    int comp_k = 0;
    std::string comp_in, comp_out;
    bool comp_json = false;
    CLI::App* comp = app.add_subcommand("compress", "twin-merge and orient toward a blow-up");
    comp->add_option("--k", comp_k, "star size k >= 2")->required();
    comp->add_option("--in", comp_in, "arclist v1 input file")->required();
    comp->add_option("--out", comp_out, "write transformed arclist here");
    comp->add_flag("--json", comp_json, "emit JSON");

    int search_n = 0, search_threads = 1;
    std::string search_pattern_text, search_mode = "oriented";
    bool search_json = false;
    CLI::App* search = app.add_subcommand("search", "exhaustive maximum over all labeled digraphs");
    search->add_option("--n", search_n, "vertex count (<= 6 oriented, <= 5 general)")->required();
    search->add_option("--pattern", search_pattern_text, "star:K or kst:S,T")->required();
    search->add_option("--mode", search_mode, "oriented | general")
        ->check(CLI::IsMember({"oriented", "general"}));
    search->add_option("--threads", search_threads, "worker threads");
    search->add_flag("--json", search_json, "emit JSON (always on for this verb)");

    std::string aux_in;
    bool aux_check = false, aux_json = false;
    CLI::App* aux = app.add_subcommand("aux3", "auxiliary 3-graph of S_3 triples");
    aux->add_option("--in", aux_in, "arclist v1 input file")->required();
    aux->add_flag("--check-c5", aux_check, "also report tight-C5 freeness");
    aux->add_flag("--json", aux_json, "emit JSON");

    std::string bench_suite;
    bool bench_json = false;
    CLI::App* bench = app.add_subcommand("bench", "timing table");
    bench->add_option("--suite", bench_suite, "counting | search")
        ->required()
        ->check(CLI::IsMember({"counting", "search"}));
    bench->add_flag("--json", bench_json, "emit JSON");

    int conv_k = 0;
    std::vector<int> conv_ns;
    std::string conv_out;
    bool conv_json = false;
    CLI::App* conv = app.add_subcommand("convergence", "construction density vs alpha_k table");
    conv->add_option("--k", conv_k, "star size k >= 3")->required();
    conv->add_option("--n-list", conv_ns, "ascending construction sizes")->required();
    conv->add_option("--out", conv_out, "write CSV here instead of stdout");
    conv->add_flag("--json", conv_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(alpha)) return run_alpha(alpha_k, alpha_tol, alpha_json);
        if (app.got_subcommand(kst)) return run_kst(kst_s, kst_t, kst_json);
        if (app.got_subcommand(con)) {
            if (con_kind == "star" && con->count("--k") == 0)
                throw UsageError{"construct --kind star requires --k"};
            if (con_kind == "kst" && (con->count("--s") == 0 || con->count("--t") == 0))
                throw UsageError{"construct --kind kst requires --s and --t"};
            return run_construct(con_kind, con_n, con_k, con_s, con_t, con_out, con_json);
        }
        if (app.got_subcommand(count))
            return run_count(count_pattern_text, count_in, count_oracle, count_exact, count_json);
        if (app.got_subcommand(comp)) return run_compress(comp_k, comp_in, comp_out, comp_json);
        if (app.got_subcommand(search))
            return run_search(search_n, search_pattern_text, search_mode, search_threads);
        if (app.got_subcommand(aux)) return run_aux3(aux_in, aux_check, aux_json);
        if (app.got_subcommand(bench)) return run_bench(bench_suite, bench_json);
        if (app.got_subcommand(conv)) return run_convergence(conv_k, conv_ns, conv_out, conv_json);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.message << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
