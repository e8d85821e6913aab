#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hyperbinary/hbword.hpp"
#include "hyperbinary/integer.hpp"

namespace hyperbinary {

/// SingleTail is the reduction 02 -> 10 (or a leading 2 -> 10), DoubleTail is 12 -> 20.
enum class ArcLabel { SingleTail, DoubleTail };

std::string_view to_string(ArcLabel label);

using VertexId = std::size_t;
using ArcId = std::size_t;

inline constexpr std::size_t kDefaultVertexLimit = 1'000'000;

struct Reduction {
    HbWord child;
    ArcLabel label;
    std::size_t position; // leftmost digit of the parent that is modified
};

struct Arc {
    VertexId tail;
    VertexId head;
    ArcLabel label;
    std::size_t position;

    friend bool operator==(const Arc&, const Arc&) = default;
};

/// All children of a hyperbinary expansion by one single-step reduction, by ascending position.
std::vector<Reduction> single_step_reductions(const HbWord& word);

/// The edge-labeled graph A(n), or an induced subgraph of it.
///
/// Vertices are kept in shortlex order and arcs in (tail, position) order, so
/// ids are deterministic. Immutable once built.
class HbGraph {
public:
    HbGraph(Integer n, std::vector<HbWord> vertices, std::vector<Arc> arcs, VertexId source,
            VertexId sink);

    const Integer& n() const { return n_; }
    std::span<const HbWord> vertices() const { return vertices_; }
    std::span<const Arc> arcs() const { return arcs_; }
    const HbWord& vertex(VertexId id) const { return vertices_.at(id); }
    const Arc& arc(ArcId id) const { return arcs_.at(id); }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t arc_count() const { return arcs_.size(); }
    VertexId source() const { return source_; }
    VertexId sink() const { return sink_; }

    std::span<const ArcId> out_arcs(VertexId id) const { return out_.at(id); }
    std::span<const ArcId> in_arcs(VertexId id) const { return in_.at(id); }

    std::optional<VertexId> find(const HbWord& word) const;
    std::optional<ArcId> find_arc(VertexId tail, VertexId head) const;

private:
    Integer n_;
    std::vector<HbWord> vertices_;
    std::vector<Arc> arcs_;
    VertexId source_;
    VertexId sink_;
    std::vector<std::vector<ArcId>> out_;
    std::vector<std::vector<ArcId>> in_;
    std::unordered_map<HbWord, VertexId, HbWordHash> index_;
};

/// H(n) in shortlex order, as the reduction closure of the minimal expansion.
/// Throws SizeLimitError when more than `limit` expansions would be produced.
std::vector<HbWord> enumerate_expansions(const Integer& n, std::size_t limit = kDefaultVertexLimit);

HbGraph build_graph(const Integer& n, std::size_t limit = kDefaultVertexLimit);

struct GraphCounts {
    std::uint64_t b; // vertices
    std::uint64_t a; // arcs
    std::int64_t v;  // cyclomatic number a - b + 1
};

GraphCounts counts(const HbGraph& graph);

/// Subgraph induced by `start` and everything reachable from it; `start` becomes the source.
HbGraph descendants_subgraph(const HbGraph& graph, VertexId start);

/// Graphviz rendering. When `places` is given (one entry per arc) each edge also
/// carries a place=<k> attribute.
std::string export_dot(const HbGraph& graph, std::span<const std::size_t> places = {});

/// {"n":..., "vertices":[...], "arcs":[{"tail":i,"head":j,"label":"single"|"double","position":p}]}
std::string export_json(const HbGraph& graph);

} // namespace hyperbinary
