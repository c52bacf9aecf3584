#include "zagreb/vertex_label.hpp"

#include "zagreb/errors.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace zagreb {

namespace {

void require_token(const std::string &name) {
    if (name.empty()) {
        throw InvalidParameterError("vertex token must be non-empty");
    }
    for (unsigned char c : name) {
        if (std::isspace(c)) {
            throw InvalidParameterError("vertex token must be whitespace-free: \"" + name + "\"");
        }
    }
}

} // namespace

VertexLabel::VertexLabel(LabelKind kind, std::string a, std::string b)
    : kind_(kind), a_(std::move(a)), b_(std::move(b)) {
    switch (kind_) {
    case LabelKind::Original:
        token_ = a_;
        break;
    case LabelKind::SubdivisionOf:
        token_ = "s(" + a_ + "," + b_ + ")";
        break;
    case LabelKind::EdgeVertex:
        token_ = "e(" + a_ + "," + b_ + ")";
        break;
    case LabelKind::CutCopy:
        token_ = "c(" + a_ + ")";
        break;
    }
}

VertexLabel VertexLabel::original(std::string name) {
    require_token(name);
    return VertexLabel(LabelKind::Original, std::move(name), "");
}

VertexLabel VertexLabel::subdivision_of(std::string endpoint_a, std::string endpoint_b) {
    require_token(endpoint_a);
    require_token(endpoint_b);
    if (endpoint_b < endpoint_a) {
        std::swap(endpoint_a, endpoint_b);
    }
    return VertexLabel(LabelKind::SubdivisionOf, std::move(endpoint_a), std::move(endpoint_b));
}

VertexLabel VertexLabel::edge_vertex(std::string endpoint_a, std::string endpoint_b) {
    require_token(endpoint_a);
    require_token(endpoint_b);
    if (endpoint_b < endpoint_a) {
        std::swap(endpoint_a, endpoint_b);
    }
    return VertexLabel(LabelKind::EdgeVertex, std::move(endpoint_a), std::move(endpoint_b));
}

VertexLabel VertexLabel::cut_copy(std::string name) {
    require_token(name);
    return VertexLabel(LabelKind::CutCopy, std::move(name), "");
}

std::strong_ordering VertexLabel::operator<=>(const VertexLabel &other) const {
    if (auto cmp = token_ <=> other.token_; cmp != 0) {
        return cmp;
    }
    if (auto cmp = kind_ <=> other.kind_; cmp != 0) {
        return cmp;
    }
    if (auto cmp = a_ <=> other.a_; cmp != 0) {
        return cmp;
    }
    return b_ <=> other.b_;
}

} // namespace zagreb
