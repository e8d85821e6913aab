#include "hyperbinary/hbgraph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "hyperbinary/errors.hpp"

namespace hyperbinary {

std::string_view to_string(ArcLabel label) {
    return label == ArcLabel::SingleTail ? "single" : "double";
}

std::vector<Reduction> single_step_reductions(const HbWord& word) {
    if (!is_hyperbinary(word)) {
        throw DomainError("not a hyperbinary expansion: " + word.str());
    }
    std::vector<Reduction> out;
    if (word.empty()) {
        return out;
    }
    const auto digits = word.digits();
    if (digits[0] == 2) {
        std::vector<Digit> child{1, 0};
        child.insert(child.end(), digits.begin() + 1, digits.end());
        out.push_back({HbWord(std::move(child)), ArcLabel::SingleTail, 0});
    }
    for (std::size_t i = 0; i + 1 < digits.size(); ++i) {
        if (digits[i + 1] != 2 || digits[i] == 2) {
            continue;
        }
        std::vector<Digit> child(digits.begin(), digits.end());
        if (digits[i] == 0) {
            child[i] = 1;
            child[i + 1] = 0;
            out.push_back({HbWord(std::move(child)), ArcLabel::SingleTail, i});
        } else {
            child[i] = 2;
            child[i + 1] = 0;
            out.push_back({HbWord(std::move(child)), ArcLabel::DoubleTail, i});
        }
    }
    return out;
}

HbGraph::HbGraph(Integer n, std::vector<HbWord> vertices, std::vector<Arc> arcs, VertexId source,
                 VertexId sink)
    : n_(std::move(n)),
      vertices_(std::move(vertices)),
      arcs_(std::move(arcs)),
      source_(source),
      sink_(sink),
      out_(vertices_.size()),
      in_(vertices_.size()) {
    if (source_ >= vertices_.size() || sink_ >= vertices_.size()) {
        throw DomainError("source/sink outside the vertex set");
    }
    index_.reserve(vertices_.size());
    for (VertexId id = 0; id < vertices_.size(); ++id) {
        index_.emplace(vertices_[id], id);
    }
    for (ArcId id = 0; id < arcs_.size(); ++id) {
        const Arc& a = arcs_[id];
        if (a.tail >= vertices_.size() || a.head >= vertices_.size() || a.tail == a.head) {
            throw DomainError("malformed arc");
        }
        out_[a.tail].push_back(id);
        in_[a.head].push_back(id);
    }
}

std::optional<VertexId> HbGraph::find(const HbWord& word) const {
    auto it = index_.find(word);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::optional<ArcId> HbGraph::find_arc(VertexId tail, VertexId head) const {
    for (ArcId id : out_.at(tail)) {
        if (arcs_[id].head == head) {
            return id;
        }
    }
    return std::nullopt;
}

std::vector<HbWord> enumerate_expansions(const Integer& n, std::size_t limit) {
    std::unordered_set<HbWord, HbWordHash> seen;
    std::deque<HbWord> frontier;
    HbWord start = minimal_expansion(n);
    seen.insert(start);
    frontier.push_back(std::move(start));
    while (!frontier.empty()) {
        HbWord word = std::move(frontier.front());
        frontier.pop_front();
        for (Reduction& r : single_step_reductions(word)) {
            if (seen.insert(r.child).second) {
                if (seen.size() > limit) {
                    throw SizeLimitError("H(" + to_string(n) + ") exceeds the limit of " +
                                         std::to_string(limit) + " expansions");
                }
                frontier.push_back(std::move(r.child));
            }
        }
    }
    std::vector<HbWord> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

HbGraph build_graph(const Integer& n, std::size_t limit) {
    std::vector<HbWord> vertices = enumerate_expansions(n, limit);
    std::unordered_map<HbWord, VertexId, HbWordHash> index;
    index.reserve(vertices.size());
    for (VertexId id = 0; id < vertices.size(); ++id) {
        index.emplace(vertices[id], id);
    }
    std::vector<Arc> arcs;
    for (VertexId tail = 0; tail < vertices.size(); ++tail) {
        for (const Reduction& r : single_step_reductions(vertices[tail])) {
            arcs.push_back({tail, index.at(r.child), r.label, r.position});
        }
    }
    const VertexId source = index.at(minimal_expansion(n));
    const VertexId sink = index.at(binary_expansion(n));
    return HbGraph(n, std::move(vertices), std::move(arcs), source, sink);
}

GraphCounts counts(const HbGraph& graph) {
    const auto b = static_cast<std::uint64_t>(graph.vertex_count());
    const auto a = static_cast<std::uint64_t>(graph.arc_count());
    return {b, a, static_cast<std::int64_t>(a) - static_cast<std::int64_t>(b) + 1};
}

HbGraph descendants_subgraph(const HbGraph& graph, VertexId start) {
    if (start >= graph.vertex_count()) {
        throw DomainError("unknown vertex id " + std::to_string(start));
    }
    std::vector<bool> reached(graph.vertex_count(), false);
    std::vector<VertexId> stack{start};
    reached[start] = true;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (ArcId id : graph.out_arcs(v)) {
            const VertexId head = graph.arc(id).head;
            if (!reached[head]) {
                reached[head] = true;
                stack.push_back(head);
            }
        }
    }
    // Ids in the parent are already shortlex-sorted, so relabelling keeps the order.
    std::vector<VertexId> relabel(graph.vertex_count(), 0);
    std::vector<HbWord> vertices;
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        if (reached[v]) {
            relabel[v] = vertices.size();
            vertices.push_back(graph.vertex(v));
        }
    }
    std::vector<Arc> arcs;
    for (const Arc& a : graph.arcs()) {
        if (reached[a.tail] && reached[a.head]) {
            arcs.push_back({relabel[a.tail], relabel[a.head], a.label, a.position});
        }
    }
    VertexId sink = relabel[start];
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        if (reached[v] && graph.out_arcs(v).empty()) {
            sink = relabel[v];
        }
    }
    return HbGraph(graph.n(), std::move(vertices), std::move(arcs), relabel[start], sink);
}

std::string export_dot(const HbGraph& graph, std::span<const std::size_t> places) {
    if (!places.empty() && places.size() != graph.arc_count()) {
        throw DomainError("place list does not match the arc count");
    }
    std::ostringstream out;
    out << "digraph \"A(" << graph.n() << ")\" {\n";
    for (const HbWord& w : graph.vertices()) {
        out << "  \"" << w.display() << "\";\n";
    }
    for (ArcId id = 0; id < graph.arc_count(); ++id) {
        const Arc& a = graph.arc(id);
        out << "  \"" << graph.vertex(a.tail).display() << "\" -> \""
            << graph.vertex(a.head).display() << "\" [label=\""
            << (a.label == ArcLabel::SingleTail ? "s" : "d") << "\"";
        if (!places.empty()) {
            out << ", place=" << places[id];
        }
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_json(const HbGraph& graph) {
    nlohmann::ordered_json doc;
    // n may exceed 64 bits; keep it exact as a JSON number only when it fits.
    if (graph.n() <= std::numeric_limits<std::uint64_t>::max()) {
        doc["n"] = graph.n().convert_to<std::uint64_t>();
    } else {
        doc["n"] = to_string(graph.n());
    }
    auto vertices = nlohmann::ordered_json::array();
    for (const HbWord& w : graph.vertices()) {
        vertices.push_back(w.str());
    }
    doc["vertices"] = std::move(vertices);
    auto arcs = nlohmann::ordered_json::array();
    for (const Arc& a : graph.arcs()) {
        arcs.push_back({{"tail", a.tail},
                        {"head", a.head},
                        {"label", std::string(to_string(a.label))},
                        {"position", a.position}});
    }
    doc["arcs"] = std::move(arcs);
    return doc.dump() + "\n";
}

} // namespace hyperbinary
