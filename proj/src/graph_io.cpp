#include "zagreb/graph_io.hpp"

#include "zagreb/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace zagreb {

namespace {

std::vector<std::string> split_ws(const std::string &line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string token;
    while (in >> token) {
        tokens.push_back(token);
    }
    return tokens;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    GraphBuilder builder;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        std::vector<std::string> tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#') {
            continue;
        }
        if (tokens.size() == 1) {
            const std::string &token = tokens.front();
            if (token.size() < 2 || token.back() != ':') {
                throw ParseError(line_no, "expected \"u v\" or \"v:\", got \"" + token + "\"");
            }
            builder.add_vertex(VertexLabel::original(token.substr(0, token.size() - 1)));
            continue;
        }
        if (tokens.size() != 2) {
            throw ParseError(line_no, "expected two tokens, got " + std::to_string(tokens.size()));
        }
        if (tokens[0] == tokens[1]) {
            throw ParseError(line_no, "self-loop at \"" + tokens[0] + "\"");
        }
        VertexLabel u = VertexLabel::original(tokens[0]);
        VertexLabel v = VertexLabel::original(tokens[1]);
        if (builder.has_edge(u, v)) {
            throw ParseError(line_no, "duplicate edge {" + tokens[0] + ", " + tokens[1] + "}");
        }
        builder.add_edge(u, v);
    }
    return builder.build();
}

std::string emit_edge_list(const Graph &g) {
    std::ostringstream out;
    for (const VertexLabel &v : g.vertices()) {
        if (g.degree(v) == 0) {
            out << v.token() << ":\n";
        }
    }
    for (const auto &[u, v] : g.edges()) {
        out << u.token() << " " << v.token() << "\n";
    }
    return out.str();
}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::size_t triangle_bits(std::size_t n) {
    return n * (n - 1) / 2;
}

std::size_t graph6_body_chars(std::size_t n) {
    return (triangle_bits(n) + 5) / 6;
}

unsigned decode_char(char c, std::size_t pos) {
    unsigned value = static_cast<unsigned char>(c);
    if (value < 63 || value > 126) {
        throw ParseError("graph6: invalid character at offset " + std::to_string(pos));
    }
    return value - 63;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    // One graph per input; trailing newline tolerated.
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    if (text.substr(0, kGraph6Header.size()) == kGraph6Header) {
        text.remove_prefix(kGraph6Header.size());
    }
    if (text.empty()) {
        throw ParseError("graph6: empty input");
    }

    std::size_t pos = 0;
    std::size_t n = 0;
    unsigned first = decode_char(text[pos], pos);
    ++pos;
    if (first != 63) {
        n = first;
    } else {
        // '~' escape: 18-bit order in the next three characters.
        if (text.size() < 4) {
            throw ParseError("graph6: truncated order field");
        }
        if (static_cast<unsigned char>(text[1]) == 126) {
            throw ParseError("graph6: orders beyond 258047 are not supported");
        }
        n = 0;
        for (; pos < 4; ++pos) {
            n = (n << 6) | decode_char(text[pos], pos);
        }
    }

    std::size_t expected = graph6_body_chars(n);
    if (text.size() - pos != expected) {
        throw ParseError("graph6: body length " + std::to_string(text.size() - pos) +
                         " does not fit order " + std::to_string(n) + " (expected " +
                         std::to_string(expected) + ")");
    }

    std::vector<VertexLabel> labels;
    labels.reserve(n);
    GraphBuilder builder;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(VertexLabel::original(std::to_string(i)));
        builder.add_vertex(labels.back());
    }

    std::size_t bit = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++bit) {
            unsigned group = decode_char(text[pos + bit / 6], pos + bit / 6);
            if ((group >> (5 - bit % 6)) & 1U) {
                builder.add_edge(labels[i], labels[j]);
            }
        }
    }
    return builder.build();
}

std::string emit_graph6(const Graph &g) {
    const std::size_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw DomainError("graph6: orders beyond 258047 are not supported");
    }

    // Vertices in sorted label order; upper triangle column by column.
    const auto &adj = g.adjacency_indices();
    unsigned group = 0;
    std::size_t bits_in_group = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            bool edge = std::binary_search(adj[i].begin(), adj[i].end(),
                                           static_cast<std::uint32_t>(j));
            group = (group << 1) | (edge ? 1U : 0U);
            if (++bits_in_group == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                bits_in_group = 0;
            }
        }
    }
    if (bits_in_group > 0) {
        group <<= (6 - bits_in_group);
        out.push_back(static_cast<char>(group + 63));
    }
    return out;
}

namespace {

std::string dot_quote(const std::string &token) {
    std::string out = "\"";
    for (char c : token) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
        }
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

} // namespace

std::string emit_dot(const Graph &g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (const VertexLabel &v : g.vertices()) {
        out << "  " << dot_quote(v.token()) << ";\n";
    }
    for (const auto &[u, v] : g.edges()) {
        out << "  " << dot_quote(u.token()) << " -- " << dot_quote(v.token()) << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace zagreb
