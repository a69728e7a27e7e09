#pragma once

#include <iosfwd>
#include <string>

#include "ie/analysis.hpp"
#include "ie/entropy.hpp"
#include "ie/extremal.hpp"
#include "ie/graph.hpp"

namespace ie {

struct ParseError : GraphError {
    ParseError(const std::string& what, int line)
        : GraphError(what + " (line " + std::to_string(line) + ")"), line_number(line) {}
    int line_number;
};

// Edge-list format: first line "K L [bn=<index>]", then L lines "u v"
// (0-based). '#' starts a comment line.
Graph parse_edge_list(std::istream& in);

// DOT subset: undirected "graph { a -- b; }"; a node statement with the
// attribute bn=true marks the base node.
Graph parse_dot(std::istream& in);

// Dispatches on content: DOT when the first token is "graph".
Graph parse_graph(std::istream& in);
Graph load_graph(const std::string& path);

// All numeric output is fixed at 9 decimal places so byte-identical reruns
// are guaranteed.
std::string format_double(double x);

enum class OutputFormat { Json, Csv, Table };

std::string render_ie(const IEVector& v, const std::string& name, OutputFormat fmt);
std::string ie_csv_header();
std::string ie_csv_row(const IEVector& v, const std::string& name);
std::string render_report(const ExtremalReport& rep, OutputFormat fmt);

}  // namespace ie
