#include "hyperbinary/iso.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <tuple>

#include "hyperbinary/errors.hpp"

namespace hyperbinary {

namespace {

using Signature = std::array<std::size_t, 5>;

std::vector<std::size_t> depths(const HbGraph& g) {
    std::vector<std::size_t> depth(g.vertex_count(), 0);
    std::vector<bool> seen(g.vertex_count(), false);
    std::deque<VertexId> queue{g.source()};
    seen[g.source()] = true;
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        for (ArcId a : g.out_arcs(v)) {
            const VertexId h = g.arc(a).head;
            if (!seen[h]) {
                seen[h] = true;
                depth[h] = depth[v] + 1;
                queue.push_back(h);
            }
        }
    }
    return depth;
}

std::vector<Signature> signatures(const HbGraph& g, bool ignore_labels) {
    const auto depth = depths(g);
    std::vector<Signature> out(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        Signature s{depth[v], 0, 0, 0, 0};
        for (ArcId a : g.out_arcs(v)) {
            ++s[!ignore_labels && g.arc(a).label == ArcLabel::DoubleTail ? 2 : 1];
        }
        for (ArcId a : g.in_arcs(v)) {
            ++s[!ignore_labels && g.arc(a).label == ArcLabel::DoubleTail ? 4 : 3];
        }
        out[v] = s;
    }
    return out;
}

bool same_label(const HbGraph& lhs, ArcId a, const HbGraph& rhs, ArcId b, bool ignore_labels) {
    return ignore_labels || lhs.arc(a).label == rhs.arc(b).label;
}

class IsoSearch {
public:
    IsoSearch(const HbGraph& lhs, const HbGraph& rhs, const IsoOptions& options)
        : lhs_(lhs),
          rhs_(rhs),
          options_(options),
          lhs_sig_(signatures(lhs, options.ignore_labels)),
          rhs_sig_(signatures(rhs, options.ignore_labels)),
          map_(lhs.vertex_count(), kUnmapped),
          used_(rhs.vertex_count(), false) {
        // BFS order from the source: each later vertex has an already-placed in-neighbour.
        std::vector<bool> seen(lhs.vertex_count(), false);
        std::deque<VertexId> queue{lhs.source()};
        seen[lhs.source()] = true;
        while (!queue.empty()) {
            const VertexId v = queue.front();
            queue.pop_front();
            order_.push_back(v);
            for (ArcId a : lhs.out_arcs(v)) {
                const VertexId h = lhs.arc(a).head;
                if (!seen[h]) {
                    seen[h] = true;
                    queue.push_back(h);
                }
            }
        }
    }

    std::optional<IsoWitness> run() {
        if (order_.size() != lhs_.vertex_count()) {
            return std::nullopt; // not everything reachable from the source; not an A(n)
        }
        auto sorted = [](std::vector<Signature> s) {
            std::sort(s.begin(), s.end());
            return s;
        };
        if (sorted(lhs_sig_) != sorted(rhs_sig_)) {
            return std::nullopt;
        }
        if (!try_assign(lhs_.source(), rhs_.source())) {
            return std::nullopt;
        }
        if (!place(1)) {
            return std::nullopt;
        }
        return IsoWitness{map_};
    }

private:
    static constexpr VertexId kUnmapped = static_cast<VertexId>(-1);

    bool place(std::size_t index) {
        if (index == order_.size()) {
            return true;
        }
        const VertexId v = order_[index];
        // Candidates: heads of like-labelled out-arcs of the image of a placed in-neighbour.
        ArcId anchor = lhs_.in_arcs(v).front();
        for (ArcId a : lhs_.in_arcs(v)) {
            if (map_[lhs_.arc(a).tail] != kUnmapped) {
                anchor = a;
                break;
            }
        }
        const VertexId anchor_image = map_[lhs_.arc(anchor).tail];
        for (ArcId b : rhs_.out_arcs(anchor_image)) {
            if (!same_label(lhs_, anchor, rhs_, b, options_.ignore_labels)) {
                continue;
            }
            const VertexId w = rhs_.arc(b).head;
            if (!try_assign(v, w)) {
                continue;
            }
            if (place(index + 1)) {
                return true;
            }
            map_[v] = kUnmapped;
            used_[w] = false;
        }
        return false;
    }

    bool try_assign(VertexId v, VertexId w) {
        if (++trials_ > options_.budget) {
            throw BudgetExceeded("isomorphism search exceeded its budget of " +
                                 std::to_string(options_.budget) + " trials");
        }
        if (used_[w] || lhs_sig_[v] != rhs_sig_[w]) {
            return false;
        }
        // Arcs to placed vertices must correspond one to one, with labels.
        std::size_t placed_lhs = 0;
        for (ArcId a : lhs_.out_arcs(v)) {
            const VertexId h = map_[lhs_.arc(a).head];
            if (h == kUnmapped) {
                continue;
            }
            ++placed_lhs;
            const auto b = rhs_.find_arc(w, h);
            if (!b || !same_label(lhs_, a, rhs_, *b, options_.ignore_labels)) {
                return false;
            }
        }
        for (ArcId a : lhs_.in_arcs(v)) {
            const VertexId t = map_[lhs_.arc(a).tail];
            if (t == kUnmapped) {
                continue;
            }
            ++placed_lhs;
            const auto b = rhs_.find_arc(t, w);
            if (!b || !same_label(lhs_, a, rhs_, *b, options_.ignore_labels)) {
                return false;
            }
        }
        std::size_t placed_rhs = 0;
        for (ArcId b : rhs_.out_arcs(w)) {
            placed_rhs += used_[rhs_.arc(b).head] ? 1 : 0;
        }
        for (ArcId b : rhs_.in_arcs(w)) {
            placed_rhs += used_[rhs_.arc(b).tail] ? 1 : 0;
        }
        if (placed_lhs != placed_rhs) {
            return false;
        }
        map_[v] = w;
        used_[w] = true;
        return true;
    }

    const HbGraph& lhs_;
    const HbGraph& rhs_;
    const IsoOptions& options_;
    std::vector<Signature> lhs_sig_;
    std::vector<Signature> rhs_sig_;
    std::vector<VertexId> order_;
    std::vector<VertexId> map_;
    std::vector<bool> used_;
    std::uint64_t trials_ = 0;
};

} // namespace

std::optional<IsoWitness> labeled_iso(const HbGraph& lhs, const HbGraph& rhs,
                                      const IsoOptions& options) {
    if (lhs.vertex_count() != rhs.vertex_count() || lhs.arc_count() != rhs.arc_count()) {
        return std::nullopt;
    }
    return IsoSearch(lhs, rhs, options).run();
}

bool verify_witness(const HbGraph& lhs, const HbGraph& rhs, const IsoWitness& witness,
                    bool ignore_labels) {
    if (witness.mapping.size() != lhs.vertex_count() ||
        lhs.vertex_count() != rhs.vertex_count() || lhs.arc_count() != rhs.arc_count()) {
        return false;
    }
    std::vector<VertexId> inverse(rhs.vertex_count(), static_cast<VertexId>(-1));
    for (VertexId v = 0; v < witness.mapping.size(); ++v) {
        const VertexId w = witness.mapping[v];
        if (w >= rhs.vertex_count() || inverse[w] != static_cast<VertexId>(-1)) {
            return false;
        }
        inverse[w] = v;
    }
    for (ArcId a = 0; a < lhs.arc_count(); ++a) {
        const Arc& arc = lhs.arc(a);
        const auto b = rhs.find_arc(witness.mapping[arc.tail], witness.mapping[arc.head]);
        if (!b || !same_label(lhs, a, rhs, *b, ignore_labels)) {
            return false;
        }
    }
    for (ArcId b = 0; b < rhs.arc_count(); ++b) {
        const Arc& arc = rhs.arc(b);
        const auto a = lhs.find_arc(inverse[arc.tail], inverse[arc.head]);
        if (!a || !same_label(lhs, *a, rhs, b, ignore_labels)) {
            return false;
        }
    }
    return true;
}

bool iso_closed_form(const Integer& m, const Integer& n) {
    Integer larger = m > n ? m : n;
    const Integer& smaller = m > n ? n : m;
    while (larger > smaller && (larger & 1) != 0) {
        larger = (larger - 1) >> 1;
    }
    return larger == smaller;
}

EvenCore even_core(const Integer& n) {
    if (n < 0) {
        throw DomainError("even_core of a negative integer");
    }
    EvenCore out{n, 0};
    while ((out.core & 1) != 0) {
        out.core = (out.core - 1) >> 1;
        ++out.t;
    }
    return out;
}

IsoWitness a10_automorphism() {
    const HbGraph g = build_graph(10);
    IsoWitness w;
    w.mapping.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const std::string word = g.vertex(v).str();
        const std::string image = word == "210" ? "1002" : word == "1002" ? "210" : word;
        const auto id = g.find(HbWord::parse(image));
        if (!id) {
            throw InvariantViolation("A(10) lacks the expansion " + image);
        }
        w.mapping[v] = *id;
    }
    if (!verify_witness(g, g, w)) {
        throw InvariantViolation("swapping 210 and 1002 is not an automorphism of A(10)");
    }
    return w;
}

} // namespace hyperbinary
