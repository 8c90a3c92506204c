#include "stardens/io.hpp"

#include "stardens/rational.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stardens {

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw std::runtime_error("malformed arclist: " + what);
}

void expect_eof(std::istream& is) {
    std::string tail;
    if (is >> tail) malformed("trailing content '" + tail + "'");
}

}  // namespace

std::string to_arclist(const Digraph& d) {
    std::ostringstream os;
    os << d.order() << ' ' << d.arc_count() << '\n';
    for (const auto& [u, v] : d.arcs()) os << u << ' ' << v << '\n';
    return os.str();
}

Digraph digraph_from_arclist(std::istream& is) {
    long long n = 0, m = 0;
    if (!(is >> n)) malformed("missing vertex count");
    if (!(is >> m)) malformed("missing arc count");
    if (n < 0) malformed("negative vertex count");
    if (m < 0) malformed("negative arc count");
    std::vector<std::pair<int, int>> arcs;
    std::set<std::pair<int, int>> seen;
    arcs.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(is >> u >> v)) malformed("expected " + std::to_string(m) + " arcs");
        if (u < 0 || v < 0 || u >= n || v >= n)
            malformed("arc endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v) malformed("loop at vertex " + std::to_string(u));
        if (!seen.emplace(static_cast<int>(u), static_cast<int>(v)).second)
            malformed("duplicate arc " + std::to_string(u) + " " + std::to_string(v));
        arcs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    expect_eof(is);
    return Digraph::from_arcs(static_cast<int>(n), arcs);
}

Digraph digraph_from_arclist_string(const std::string& text) {
    std::istringstream is(text);
    return digraph_from_arclist(is);
}

Digraph digraph_from_arclist_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open file: " + path);
    return digraph_from_arclist(is);
}

nlohmann::json digraph_to_json(const Digraph& d) {
    nlohmann::json arcs = nlohmann::json::array();
    for (const auto& [u, v] : d.arcs()) arcs.push_back({u, v});
    return {{"n", d.order()}, {"arcs", std::move(arcs)}};
}

Digraph digraph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("arcs"))
        malformed("json digraph needs fields 'n' and 'arcs'");
    if (!j["n"].is_number_integer()) malformed("json field 'n' must be an integer");
    if (!j["arcs"].is_array()) malformed("json field 'arcs' must be an array");
    std::ostringstream text;
    text << j["n"].get<long long>() << ' ' << j["arcs"].size() << '\n';
    for (const nlohmann::json& a : j["arcs"]) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() ||
            !a[1].is_number_integer())
            malformed("each arc must be a [u, v] integer pair");
        text << a[0].get<long long>() << ' ' << a[1].get<long long>() << '\n';
    }
    return digraph_from_arclist_string(text.str());
}

std::string to_threegraph_text(const ThreeGraph& h) {
    std::ostringstream os;
    os << h.n << ' ' << h.triples.size() << '\n';
    for (const auto& t : h.triples) os << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    return os.str();
}

ThreeGraph threegraph_from_text(const std::string& text) {
    std::istringstream is(text);
    long long n = 0, m = 0;
    if (!(is >> n >> m)) throw std::runtime_error("malformed threegraph: missing header");
    if (n < 0 || m < 0) throw std::runtime_error("malformed threegraph: negative header");
    ThreeGraph h;
    h.n = static_cast<int>(n);
    std::set<std::array<int, 3>> seen;
    for (long long i = 0; i < m; ++i) {
        long long a = 0, b = 0, c = 0;
        if (!(is >> a >> b >> c))
            throw std::runtime_error("malformed threegraph: expected " + std::to_string(m) +
                                     " triples");
        if (a < 0 || c >= n || !(a < b && b < c))
            throw std::runtime_error("malformed threegraph: triple must be ascending in range");
        const std::array<int, 3> t{static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)};
        if (!seen.insert(t).second)
            throw std::runtime_error("malformed threegraph: duplicate triple");
        h.triples.push_back(t);
    }
    std::string tail;
    if (is >> tail) throw std::runtime_error("malformed threegraph: trailing content");
    return h;
}

nlohmann::json search_report_to_json(const SearchReport& r) {
    const int order = r.pattern.order();
    const double denom =
        r.n >= order
            ? big_binomial(static_cast<unsigned>(r.n), static_cast<unsigned>(order))
                  .convert_to<double>()
            : 0.0;
    return {{"n", r.n},
            {"pattern", r.pattern.name()},
            {"mode", r.mode == GraphMode::oriented ? "oriented" : "general"},
            {"max_copies", r.max_copies},
            {"graphs_examined", r.graphs_examined},
            {"density", denom > 0 ? static_cast<double>(r.max_copies) / denom : 0.0},
            {"witness", digraph_to_json(r.witness)}};
}

PatternSpec pattern_from_string(const std::string& text) {
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
        const std::string kind = text.substr(0, colon);
        const std::string rest = text.substr(colon + 1);
        try {
            if (kind == "star") {
                std::size_t used = 0;
                const int k = std::stoi(rest, &used);
                if (used == rest.size()) return PatternSpec::star(k);
            } else if (kind == "kst") {
                const auto comma = rest.find(',');
                if (comma != std::string::npos) {
                    std::size_t us = 0, ut = 0;
                    const std::string s_part = rest.substr(0, comma);
                    const std::string t_part = rest.substr(comma + 1);
                    const int s = std::stoi(s_part, &us);
                    const int t = std::stoi(t_part, &ut);
                    if (us == s_part.size() && ut == t_part.size())
                        return PatternSpec::complete_bipartite(s, t);
                }
            }
        } catch (const std::invalid_argument&) {
        } catch (const std::out_of_range&) {
        }
    }
    throw std::runtime_error("unrecognized pattern '" + text + "': expected star:K or kst:S,T");
}

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open file for writing: " + path);
    os << contents;
    if (!os) throw std::runtime_error("write failed: " + path);
}

}  // namespace stardens
