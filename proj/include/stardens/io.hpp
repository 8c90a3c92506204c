// File formats: arclist v1 text, digraph JSON, ThreeGraph text, SearchReport
// JSON, and pattern string parsing.
#pragma once

#include "stardens/digraph.hpp"
#include "stardens/pattern.hpp"
#include "stardens/search.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace stardens {

// arclist v1: first line "n <count>", then one "<u> <v>" line per arc,
// 0-indexed. Arcs in any order; duplicates rejected on read. The writer emits
// arcs sorted, so the round trip is bit-exact on the arc set.
std::string to_arclist(const Digraph& d);
Digraph digraph_from_arclist(std::istream& is);
Digraph digraph_from_arclist_string(const std::string& text);
Digraph digraph_from_arclist_file(const std::string& path);

// {"n": int, "arcs": [[u, v], ...]}
nlohmann::json digraph_to_json(const Digraph& d);
Digraph digraph_from_json(const nlohmann::json& j);

// "n <count>" then one "a b c" line per triple, ascending within the line.
std::string to_threegraph_text(const ThreeGraph& h);
ThreeGraph threegraph_from_text(const std::string& text);

nlohmann::json search_report_to_json(const SearchReport& r);

// "star:K", "kst:S,T"
PatternSpec pattern_from_string(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace stardens
