#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace zagreb {

enum class LabelKind : std::uint8_t {
    Original,      // vertex of an input graph
    SubdivisionOf, // midpoint vertex placed on an edge {a, b}
    EdgeVertex,    // line-graph vertex standing for an edge {a, b}
    CutCopy,       // cut-vertex companion vertex in a line cut-vertex graph
};

// Vertex identity used everywhere. Operator outputs keep the provenance of
// each vertex (which edge or cut vertex it came from) so compositions like
// line_graph(subdivision(g)) stay reproducible and debuggable.
//
// Endpoint pairs are stored in canonical (token-sorted) order, so
// edge_vertex("b", "a") == edge_vertex("a", "b").
class VertexLabel {
public:
    static VertexLabel original(std::string name);
    static VertexLabel subdivision_of(std::string endpoint_a, std::string endpoint_b);
    static VertexLabel edge_vertex(std::string endpoint_a, std::string endpoint_b);
    static VertexLabel cut_copy(std::string name);

    LabelKind kind() const { return kind_; }

    // First component: the name for Original/CutCopy, endpoint A otherwise.
    const std::string &first() const { return a_; }
    // Endpoint B for SubdivisionOf/EdgeVertex, empty otherwise.
    const std::string &second() const { return b_; }

    // Deterministic printable form, unique per label within a valid graph:
    //   Original      -> name
    //   SubdivisionOf -> s(a,b)
    //   EdgeVertex    -> e(a,b)
    //   CutCopy       -> c(name)
    const std::string &token() const { return token_; }

    bool operator==(const VertexLabel &other) const {
        return kind_ == other.kind_ && a_ == other.a_ && b_ == other.b_;
    }
    // Orders by rendered token (ties broken structurally so distinct labels
    // never compare equivalent).
    std::strong_ordering operator<=>(const VertexLabel &other) const;

private:
    VertexLabel(LabelKind kind, std::string a, std::string b);

    LabelKind kind_;
    std::string a_;
    std::string b_;
    std::string token_;
};

} // namespace zagreb
