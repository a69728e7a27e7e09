#include "ie/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace ie {

namespace {

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

int parse_int(const std::string& token, int line) {
    try {
        std::size_t used = 0;
        int value = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + token + "'", line);
    }
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;

    auto next_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++line_no;
            if (!blank_or_comment(line)) {
                out = line;
                return true;
            }
        }
        return false;
    };

    std::string header;
    if (!next_line(header)) throw ParseError("missing header line", line_no + 1);
    std::istringstream hs(header);
    std::string ktok, ltok, extra;
    if (!(hs >> ktok >> ltok)) throw ParseError("header must be 'K L [bn=<index>]'", line_no);
    const int k = parse_int(ktok, line_no);
    const int l = parse_int(ltok, line_no);
    if (k < 1) throw ParseError("vertex count must be positive", line_no);

    Graph g(k);
    if (hs >> extra) {
        if (extra.rfind("bn=", 0) != 0)
            throw ParseError("unexpected header token '" + extra + "'", line_no);
        g.base_node = parse_int(extra.substr(3), line_no);
    }

    for (int i = 0; i < l; ++i) {
        std::string edge_line;
        if (!next_line(edge_line))
            throw ParseError("expected " + std::to_string(l) + " edges, got " +
                                 std::to_string(i),
                             line_no + 1);
        std::istringstream es(edge_line);
        std::string utok, vtok;
        if (!(es >> utok >> vtok))
            throw ParseError("edge line must be 'u v'", line_no);
        const int u = parse_int(utok, line_no);
        const int v = parse_int(vtok, line_no);
        if (u < 0 || u >= k || v < 0 || v >= k)
            throw ParseError("edge endpoint out of range", line_no);
        g.add_edge(u, v);
        std::string trailing;
        if (es >> trailing)
            throw ParseError("unexpected token '" + trailing + "'", line_no);
    }
    return g;
}

Graph parse_dot(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());

    // Tokenize: identifiers, '--', '{', '}', ';', '[', ']', '='.
    struct Token {
        std::string value;
        int line;
    };
    std::vector<Token> tokens;
    int line = 1;
    for (std::size_t i = 0; i < text.size();) {
        char c = text[i];
        if (c == '\n') ++line;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
            tokens.push_back({"--", line});
            i += 2;
            continue;
        }
        if (std::string("{};[]=,").find(c) != std::string::npos) {
            tokens.push_back({std::string(1, c), line});
            ++i;
            continue;
        }
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                       text[j] == '_'))
                ++j;
            tokens.push_back({text.substr(i, j - i), line});
            i = j;
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line);
    }

    std::size_t pos = 0;
    auto peek = [&]() -> const Token* { return pos < tokens.size() ? &tokens[pos] : nullptr; };
    auto expect = [&](const std::string& v) {
        if (!peek() || peek()->value != v)
            throw ParseError("expected '" + v + "'", peek() ? peek()->line : line);
        ++pos;
    };

    expect("graph");
    if (peek() && peek()->value != "{") ++pos;  // optional graph name
    expect("{");

    std::map<std::string, int> ids;
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> bn_nodes;

    auto node_id = [&](const std::string& name) {
        auto [it, inserted] = ids.emplace(name, static_cast<int>(names.size()));
        if (inserted) names.push_back(name);
        return it->second;
    };

    while (peek() && peek()->value != "}") {
        const Token head = *peek();
        ++pos;
        int u = node_id(head.value);
        if (peek() && peek()->value == "--") {
            while (peek() && peek()->value == "--") {
                ++pos;
                if (!peek()) throw ParseError("edge without target", head.line);
                int v = node_id(peek()->value);
                ++pos;
                edges.emplace_back(u, v);
                u = v;
            }
        } else if (peek() && peek()->value == "[") {
            ++pos;
            while (peek() && peek()->value != "]") {
                std::string key = peek()->value;
                ++pos;
                expect("=");
                if (!peek()) throw ParseError("attribute without value", head.line);
                std::string value = peek()->value;
                ++pos;
                if (key == "bn" && value == "true") bn_nodes.push_back(u);
                if (peek() && peek()->value == ",") ++pos;
            }
            expect("]");
        }
        if (peek() && peek()->value == ";") ++pos;
    }
    expect("}");

    if (names.empty()) throw ParseError("graph has no vertices", 1);
    Graph g(static_cast<int>(names.size()));
    for (auto [u, v] : edges) g.add_edge(u, v);
    g.labels = names;
    if (!bn_nodes.empty()) g.base_node = bn_nodes.front();
    return g;
}

Graph parse_graph(std::istream& in) {
    // Peek at the first non-space word.
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    std::istringstream probe(text);
    std::string first;
    probe >> first;
    std::istringstream again(text);
    if (first == "graph") return parse_dot(again);
    return parse_edge_list(again);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open '" + path + "'");
    return parse_graph(in);
}

std::string format_double(double x) {
    if (x == 0) x = 0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", x);
    return buf;
}

std::string ie_csv_header() {
    return "name,H11,H12,H1,H21,H22,H23,H2,Hm,phi";
}

std::string ie_csv_row(const IEVector& v, const std::string& name) {
    std::ostringstream out;
    out << name;
    for (double x : {v.h11, v.h12, v.h1, v.h21, v.h22, v.h23, v.h2, v.amplitude, v.phase})
        out << ',' << format_double(x);
    return out.str();
}

std::string render_ie(const IEVector& v, const std::string& name, OutputFormat fmt) {
    std::ostringstream out;
    switch (fmt) {
        case OutputFormat::Json:
            out << "{\"name\":\"" << name << "\""
                << ",\"H11\":" << format_double(v.h11)
                << ",\"H12\":" << format_double(v.h12)
                << ",\"H1\":" << format_double(v.h1)
                << ",\"H21\":" << format_double(v.h21)
                << ",\"H22\":" << format_double(v.h22)
                << ",\"H23\":" << format_double(v.h23)
                << ",\"H2\":" << format_double(v.h2)
                << ",\"Hm\":" << format_double(v.amplitude)
                << ",\"phi\":" << format_double(v.phase) << "}";
            break;
        case OutputFormat::Csv:
            out << ie_csv_row(v, name);
            break;
        case OutputFormat::Table:
            out << name << "\n"
                << "  H11 = " << format_double(v.h11) << "\n"
                << "  H12 = " << format_double(v.h12) << "\n"
                << "  H1  = " << format_double(v.h1) << "\n"
                << "  H21 = " << format_double(v.h21) << "\n"
                << "  H22 = " << format_double(v.h22) << "\n"
                << "  H23 = " << format_double(v.h23) << "\n"
                << "  H2  = " << format_double(v.h2) << "\n"
                << "  Hm  = " << format_double(v.amplitude) << "\n"
                << "  phi = " << format_double(v.phase);
            break;
    }
    return out.str();
}

std::string render_report(const ExtremalReport& rep, OutputFormat fmt) {
    std::ostringstream out;
    if (fmt == OutputFormat::Json) {
        out << "{\"gaps\":[";
        for (std::size_t i = 0; i < rep.gaps.size(); ++i) {
            const auto& g = rep.gaps[i];
            if (i) out << ',';
            out << "{\"component\":\"" << g.name << "\""
                << ",\"achieved\":" << format_double(g.achieved)
                << ",\"bound\":" << format_double(g.bound)
                << ",\"gap\":" << format_double(g.gap) << "}";
        }
        out << "],\"rho_extr\":" << format_double(rep.vertex.rho_extr)
            << ",\"M\":" << rep.max_contour_vertices
            << ",\"H1_extr\":" << format_double(rep.h1_extr)
            << ",\"H2_extr\":" << format_double(rep.h2_extr) << ",\"notes\":[";
        for (std::size_t i = 0; i < rep.notes.size(); ++i) {
            if (i) out << ',';
            out << '"' << rep.notes[i] << '"';
        }
        out << "]}";
    } else {
        out << "component,achieved,bound,gap\n";
        for (const auto& g : rep.gaps)
            out << g.name << ',' << format_double(g.achieved) << ','
                << format_double(g.bound) << ',' << format_double(g.gap) << '\n';
        out << "rho_extr," << format_double(rep.vertex.rho_extr) << ",,\n";
    }
    return out.str();
}

}  // namespace ie
