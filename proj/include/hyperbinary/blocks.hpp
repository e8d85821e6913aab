#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperbinary/hbgraph.hpp"
#include "hyperbinary/hbword.hpp"
#include "hyperbinary/integer.hpp"

namespace hyperbinary {

enum class BlockKind { Type1, Type2 };

/// Type1 is the word 1^t 2, Type2 is 2^t (t >= 1).
struct Block {
    BlockKind kind;
    std::size_t t;

    std::size_t word_length() const { return kind == BlockKind::Type1 ? t + 1 : t; }
    HbWord word() const;
    Integer value() const { return hyperbinary::value(word()); }

    friend bool operator==(const Block&, const Block&) = default;
};

struct BlockDecomposition {
    std::vector<Block> blocks;
    std::size_t trailing_ones = 0;

    /// Concatenation of the block words followed by the trailing 1s.
    HbWord word() const;

    friend bool operator==(const BlockDecomposition&, const BlockDecomposition&) = default;
};

/// Factors a minimal expansion into blocks with no two consecutive Type2 blocks,
/// plus a tail of 1s. Throws DomainError if the word contains a 0.
BlockDecomposition decompose(const HbWord& minimal);

/// Lines "T1 t=<k>" / "T2 t=<k>" followed by "tail=1^<m>".
std::string format_decomposition(const BlockDecomposition& decomposition);

/// A(value of the block word): a directed path graph.
HbGraph block_path_graph(const Block& block);

/// A(n) for even n together with its embedding into the box product of the
/// block path graphs.
class PlacedGraph {
public:
    PlacedGraph(HbGraph graph, BlockDecomposition decomposition, std::vector<HbGraph> factor_graphs,
                std::vector<std::vector<VertexId>> factors, std::vector<std::size_t> places);

    const HbGraph& graph() const { return graph_; }
    const BlockDecomposition& decomposition() const { return decomposition_; }
    std::size_t block_count() const { return decomposition_.blocks.size(); }
    const HbGraph& factor_graph(std::size_t index) const { return factor_graphs_.at(index); }

    /// Vertex ids (one per block, into the factor graphs) of the image of `v`.
    std::span<const VertexId> factors(VertexId v) const { return factors_.at(v); }
    std::vector<HbWord> factor_words(VertexId v) const;
    /// 1-based place of every arc.
    std::span<const std::size_t> places() const { return places_; }

private:
    HbGraph graph_;
    BlockDecomposition decomposition_;
    std::vector<HbGraph> factor_graphs_;
    std::vector<std::vector<VertexId>> factors_;
    std::vector<std::size_t> places_;
};

/// Joins a factor tuple into a word: every factor but the last is truncated on
/// its last digit when the following factor is a long expansion.
HbWord assemble(std::span<const HbWord> factors);

/// Throws DomainError for odd n and SizeLimitError as build_graph does.
/// Throws InvariantViolation if some vertex has no valid factor tuple or an arc
/// does not move exactly one coordinate along a like-labelled factor arc.
PlacedGraph embed(const Integer& n, std::size_t limit = kDefaultVertexLimit);

/// 1-based index of the factor on which the reduction `arc` occurs.
std::size_t place_map(const PlacedGraph& placed, ArcId arc);

struct EmbeddingReport {
    bool injective = false;
    bool label_preserving = false;
    bool induced = false;
    std::size_t image_size = 0;
    std::size_t expected_size = 0;

    bool ok() const { return injective && label_preserving && induced && image_size == expected_size; }
};

/// Checks the embedding against the full box product of the block path graphs.
EmbeddingReport verify_embedding(const PlacedGraph& placed, const Integer& expected_size);

/// Partial arc map, sorted by domain arc.
using ArcMap = std::vector<std::pair<ArcId, ArcId>>;

/// For e = (x,y): sends each other out-arc (x,x') to the unique (y,y') with (x',y') an arc.
/// Throws InvariantViolation if such an arc is missing or not unique.
ArcMap place_preserving_map(const HbGraph& graph, ArcId e);

/// Composition of the single-arc maps along `path`, restricting the domain as
/// needed. An empty path gives the identity on the out-arcs of `start`.
/// Throws DomainError if `path` is not a directed path from `start`.
ArcMap place_preserving_through_path(const HbGraph& graph, VertexId start, std::span<const ArcId> path);

/// A directed path whose every arc avoids the image of the place-preserving map
/// through its predecessor. Returns false for sequences that are not directed paths.
bool is_checking_path(const HbGraph& graph, std::span<const ArcId> path);

struct PathConstraints {
    std::optional<std::size_t> length;
    std::optional<ArcLabel> first;
    std::optional<ArcLabel> second;
    std::optional<ArcLabel> last;
};

/// Every maximal checking path starting with `first_arc` that meets the
/// constraints, found by exhaustive search, in arc-id order.
std::vector<std::vector<ArcId>> maximal_checking_paths_from(const HbGraph& graph, ArcId first_arc,
                                                            const PathConstraints& constraints = {});

} // namespace hyperbinary
