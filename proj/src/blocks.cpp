#include "hyperbinary/blocks.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "hyperbinary/errors.hpp"

namespace hyperbinary {

HbWord Block::word() const {
    if (t == 0) {
        throw DomainError("block length must be positive");
    }
    std::vector<Digit> digits;
    if (kind == BlockKind::Type1) {
        digits.assign(t, 1);
        digits.push_back(2);
    } else {
        digits.assign(t, 2);
    }
    return HbWord(std::move(digits));
}

HbWord BlockDecomposition::word() const {
    HbWord out;
    for (const Block& b : blocks) {
        out = out + b.word();
    }
    return out + HbWord(std::vector<Digit>(trailing_ones, 1));
}

BlockDecomposition decompose(const HbWord& minimal) {
    const auto digits = minimal.digits();
    if (std::find(digits.begin(), digits.end(), Digit{0}) != digits.end()) {
        throw DomainError("not a minimal expansion (contains 0): " + minimal.str());
    }
    BlockDecomposition out;
    std::size_t i = 0;
    while (i < digits.size()) {
        std::size_t j = i;
        while (j < digits.size() && digits[j] == digits[i]) {
            ++j;
        }
        const std::size_t run = j - i;
        if (digits[i] == 2) {
            out.blocks.push_back({BlockKind::Type2, run});
            i = j;
        } else if (j == digits.size()) {
            out.trailing_ones = run;
            i = j;
        } else {
            // 1^run followed by a 2: the 2 closes a Type1 block, further 2s start a Type2 block.
            out.blocks.push_back({BlockKind::Type1, run});
            i = j + 1;
        }
    }
    return out;
}

std::string format_decomposition(const BlockDecomposition& decomposition) {
    std::ostringstream out;
    for (const Block& b : decomposition.blocks) {
        out << (b.kind == BlockKind::Type1 ? "T1" : "T2") << " t=" << b.t << '\n';
    }
    out << "tail=1^" << decomposition.trailing_ones << '\n';
    return out.str();
}

HbGraph block_path_graph(const Block& block) {
    return build_graph(block.value());
}

PlacedGraph::PlacedGraph(HbGraph graph, BlockDecomposition decomposition,
                         std::vector<HbGraph> factor_graphs,
                         std::vector<std::vector<VertexId>> factors, std::vector<std::size_t> places)
    : graph_(std::move(graph)),
      decomposition_(std::move(decomposition)),
      factor_graphs_(std::move(factor_graphs)),
      factors_(std::move(factors)),
      places_(std::move(places)) {
    if (factors_.size() != graph_.vertex_count() || places_.size() != graph_.arc_count() ||
        factor_graphs_.size() != decomposition_.blocks.size()) {
        throw DomainError("inconsistent placed graph");
    }
}

std::vector<HbWord> PlacedGraph::factor_words(VertexId v) const {
    std::vector<HbWord> out;
    const auto ids = factors(v);
    out.reserve(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        out.push_back(factor_graphs_[i].vertex(ids[i]));
    }
    return out;
}

HbWord assemble(std::span<const HbWord> factors) {
    HbWord out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const bool next_long =
            i + 1 < factors.size() && length_class(factors[i + 1]) == LengthClass::Long;
        if (next_long) {
            if (factors[i].empty() || factors[i].back() != 0) {
                throw DomainError("factor followed by a long expansion must end with 0");
            }
            out = out + factors[i].drop_last();
        } else {
            out = out + factors[i];
        }
    }
    return out;
}

namespace {

// Reads the factor tuple of `word` right to left. Factor i has its last digit at
// a fixed offset (the total length of the blocks after it); a 1 just above its
// short span can only be the leading digit of a long expansion, since
// expansions of an even number end in 0 or 2.
std::optional<std::vector<HbWord>> split_factors(const HbWord& word, std::span<const Block> blocks) {
    const std::size_t r = blocks.size();
    std::vector<std::size_t> offset(r, 0);
    for (std::size_t i = r; i-- > 1;) {
        offset[i - 1] = offset[i] + blocks[i].word_length();
    }
    const std::size_t len = word.size();
    auto digit_at = [&](std::size_t pos) -> std::optional<Digit> {
        if (pos >= len) {
            return std::nullopt;
        }
        return word[len - 1 - pos];
    };

    std::vector<HbWord> factors(r);
    bool next_long = false;
    for (std::size_t i = r; i-- > 0;) {
        const std::size_t low = offset[i];
        const std::size_t span = blocks[i].word_length();
        bool is_long = false;
        if (i == 0) {
            if (len == low + span + 1 && digit_at(low + span) == Digit{1}) {
                is_long = true;
            } else if (len != low + span) {
                return std::nullopt;
            }
        } else {
            is_long = digit_at(low + span) == Digit{1};
        }
        std::vector<Digit> digits;
        if (is_long) {
            digits.push_back(1);
        }
        for (std::size_t pos = low + span; pos-- > low + 1;) {
            const auto d = digit_at(pos);
            if (!d) {
                return std::nullopt;
            }
            digits.push_back(*d);
        }
        if (next_long) {
            digits.push_back(0);
        } else {
            const auto d = digit_at(low);
            if (!d) {
                return std::nullopt;
            }
            digits.push_back(*d);
        }
        factors[i] = HbWord(std::move(digits));
        next_long = is_long;
    }
    return factors;
}

} // namespace

PlacedGraph embed(const Integer& n, std::size_t limit) {
    if (n < 0 || (n & 1) != 0) {
        throw DomainError("embed requires an even nonnegative integer, got " + to_string(n));
    }
    HbGraph graph = build_graph(n, limit);
    BlockDecomposition decomposition = decompose(minimal_expansion(n));
    std::vector<HbGraph> factor_graphs;
    for (const Block& b : decomposition.blocks) {
        factor_graphs.push_back(block_path_graph(b));
    }

    std::vector<std::vector<VertexId>> factors(graph.vertex_count());
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        const HbWord& word = graph.vertex(v);
        const auto split = split_factors(word, decomposition.blocks);
        if (!split) {
            throw InvariantViolation("no factor tuple for " + word.display());
        }
        for (std::size_t i = 0; i < split->size(); ++i) {
            const auto id = factor_graphs[i].find((*split)[i]);
            if (!id) {
                throw InvariantViolation("factor " + (*split)[i].display() + " of " +
                                         word.display() + " is not an expansion of block " +
                                         std::to_string(i + 1));
            }
            factors[v].push_back(*id);
        }
        if (assemble(*split) != word) {
            throw InvariantViolation("factor tuple of " + word.display() + " does not reassemble");
        }
    }

    std::vector<std::size_t> places(graph.arc_count(), 0);
    for (ArcId id = 0; id < graph.arc_count(); ++id) {
        const Arc& a = graph.arc(id);
        std::optional<std::size_t> moved;
        for (std::size_t i = 0; i < factor_graphs.size(); ++i) {
            if (factors[a.tail][i] == factors[a.head][i]) {
                continue;
            }
            if (moved) {
                throw InvariantViolation("arc moves more than one factor");
            }
            moved = i;
        }
        if (!moved) {
            throw InvariantViolation("arc leaves every factor fixed");
        }
        const HbGraph& fg = factor_graphs[*moved];
        const auto factor_arc = fg.find_arc(factors[a.tail][*moved], factors[a.head][*moved]);
        if (!factor_arc || fg.arc(*factor_arc).label != a.label) {
            throw InvariantViolation("arc is not a like-labelled factor arc");
        }
        places[id] = *moved + 1;
    }
    return PlacedGraph(std::move(graph), std::move(decomposition), std::move(factor_graphs),
                       std::move(factors), std::move(places));
}

std::size_t place_map(const PlacedGraph& placed, ArcId arc) {
    if (arc >= placed.graph().arc_count()) {
        throw DomainError("unknown arc id " + std::to_string(arc));
    }
    return placed.places()[arc];
}

EmbeddingReport verify_embedding(const PlacedGraph& placed, const Integer& expected_size) {
    const HbGraph& g = placed.graph();
    const std::size_t r = placed.block_count();
    EmbeddingReport report;
    report.expected_size = expected_size.convert_to<std::size_t>();

    std::map<std::vector<VertexId>, VertexId> image;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto f = placed.factors(v);
        image.emplace(std::vector<VertexId>(f.begin(), f.end()), v);
    }
    report.image_size = image.size();
    report.injective = image.size() == g.vertex_count();

    report.label_preserving = true;
    for (ArcId id = 0; id < g.arc_count(); ++id) {
        const Arc& a = g.arc(id);
        const std::size_t i = placed.places()[id];
        if (i == 0 || i > r) {
            report.label_preserving = false;
            continue;
        }
        const HbGraph& fg = placed.factor_graph(i - 1);
        const auto fa = fg.find_arc(placed.factors(a.tail)[i - 1], placed.factors(a.head)[i - 1]);
        if (!fa || fg.arc(*fa).label != a.label) {
            report.label_preserving = false;
        }
    }

    // Every box-product arc between two image tuples must come from exactly one arc of A(n).
    report.induced = true;
    for (const auto& [tuple, v] : image) {
        for (std::size_t i = 0; i < r; ++i) {
            const HbGraph& fg = placed.factor_graph(i);
            for (ArcId fa : fg.out_arcs(tuple[i])) {
                std::vector<VertexId> next = tuple;
                next[i] = fg.arc(fa).head;
                auto it = image.find(next);
                if (it == image.end()) {
                    continue;
                }
                const auto arc = g.find_arc(v, it->second);
                if (!arc || g.arc(*arc).label != fg.arc(fa).label) {
                    report.induced = false;
                }
            }
        }
    }
    return report;
}

ArcMap place_preserving_map(const HbGraph& graph, ArcId e) {
    const Arc& through = graph.arc(e);
    ArcMap out;
    for (ArcId ex : graph.out_arcs(through.tail)) {
        if (ex == e) {
            continue;
        }
        const VertexId x_child = graph.arc(ex).head;
        std::optional<ArcId> match;
        for (ArcId ey : graph.out_arcs(through.head)) {
            if (!graph.find_arc(x_child, graph.arc(ey).head)) {
                continue;
            }
            if (match) {
                throw InvariantViolation("place-preserving image is not unique");
            }
            match = ey;
        }
        if (!match) {
            throw InvariantViolation("place-preserving image does not exist");
        }
        out.emplace_back(ex, *match);
    }
    return out;
}

namespace {

bool is_directed_path(const HbGraph& graph, std::span<const ArcId> path) {
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (path[i] >= graph.arc_count()) {
            return false;
        }
        if (i > 0 && graph.arc(path[i - 1]).head != graph.arc(path[i]).tail) {
            return false;
        }
    }
    return true;
}

bool in_image(const ArcMap& map, ArcId arc) {
    return std::any_of(map.begin(), map.end(), [&](const auto& p) { return p.second == arc; });
}

} // namespace

ArcMap place_preserving_through_path(const HbGraph& graph, VertexId start,
                                     std::span<const ArcId> path) {
    if (start >= graph.vertex_count() || !is_directed_path(graph, path) ||
        (!path.empty() && graph.arc(path.front()).tail != start)) {
        throw DomainError("not a directed path from the given vertex");
    }
    ArcMap current;
    for (ArcId id : graph.out_arcs(start)) {
        current.emplace_back(id, id);
    }
    for (ArcId e : path) {
        const ArcMap step = place_preserving_map(graph, e);
        ArcMap next;
        for (const auto& [from, to] : current) {
            auto it = std::find_if(step.begin(), step.end(),
                                   [&](const auto& p) { return p.first == to; });
            if (it != step.end()) {
                next.emplace_back(from, it->second);
            }
        }
        current = std::move(next);
    }
    return current;
}

bool is_checking_path(const HbGraph& graph, std::span<const ArcId> path) {
    if (!is_directed_path(graph, path)) {
        return false;
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (in_image(place_preserving_map(graph, path[i]), path[i + 1])) {
            return false;
        }
    }
    return true;
}

namespace {

class CheckingPathSearch {
public:
    CheckingPathSearch(const HbGraph& graph, const PathConstraints& constraints)
        : graph_(graph), constraints_(constraints) {}

    std::vector<std::vector<ArcId>> run(ArcId first) {
        for (ArcId before : graph_.in_arcs(graph_.arc(first).tail)) {
            if (!in_image(map_through(before), first)) {
                return {}; // extendable backwards, so nothing starting at `first` is maximal
            }
        }
        path_.push_back(first);
        extend();
        return std::move(found_);
    }

private:
    const ArcMap& map_through(ArcId e) {
        auto it = cache_.find(e);
        if (it == cache_.end()) {
            it = cache_.emplace(e, place_preserving_map(graph_, e)).first;
        }
        return it->second;
    }

    void extend() {
        const ArcId last = path_.back();
        bool extended = false;
        for (ArcId next : graph_.out_arcs(graph_.arc(last).head)) {
            if (in_image(map_through(last), next)) {
                continue;
            }
            extended = true;
            path_.push_back(next);
            extend();
            path_.pop_back();
        }
        if (!extended && accepted()) {
            found_.push_back(path_);
        }
    }

    bool accepted() const {
        const auto label = [&](std::size_t i) { return graph_.arc(path_[i]).label; };
        if (constraints_.length && path_.size() != *constraints_.length) {
            return false;
        }
        if (constraints_.first && label(0) != *constraints_.first) {
            return false;
        }
        if (constraints_.second && (path_.size() < 2 || label(1) != *constraints_.second)) {
            return false;
        }
        if (constraints_.last && label(path_.size() - 1) != *constraints_.last) {
            return false;
        }
        return true;
    }

    const HbGraph& graph_;
    const PathConstraints& constraints_;
    std::unordered_map<ArcId, ArcMap> cache_;
    std::vector<ArcId> path_;
    std::vector<std::vector<ArcId>> found_;
};

} // namespace

std::vector<std::vector<ArcId>> maximal_checking_paths_from(const HbGraph& graph, ArcId first_arc,
                                                            const PathConstraints& constraints) {
    if (first_arc >= graph.arc_count()) {
        throw DomainError("unknown arc id " + std::to_string(first_arc));
    }
    return CheckingPathSearch(graph, constraints).run(first_arc);
}

} // namespace hyperbinary
