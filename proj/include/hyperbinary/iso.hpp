#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hyperbinary/hbgraph.hpp"
#include "hyperbinary/integer.hpp"

namespace hyperbinary {

/// mapping[v] is the vertex of the second graph that v of the first graph goes to.
struct IsoWitness {
    std::vector<VertexId> mapping;

    friend bool operator==(const IsoWitness&, const IsoWitness&) = default;
};

struct IsoOptions {
    bool ignore_labels = false;
    std::uint64_t budget = 50'000'000; // candidate trials before BudgetExceeded
};

/// Backtracking search for a (by default edge-labeled) directed-graph
/// isomorphism, anchored source to source and pruned by depth and per-label
/// degrees. Returns the first witness in search order.
std::optional<IsoWitness> labeled_iso(const HbGraph& lhs, const HbGraph& rhs,
                                      const IsoOptions& options = {});

/// Checks that `witness` is a bijection carrying arcs onto arcs in both directions.
bool verify_witness(const HbGraph& lhs, const HbGraph& rhs, const IsoWitness& witness,
                    bool ignore_labels = false);

/// True iff m = 2^t n + 2^t - 1 or n = 2^t m + 2^t - 1 for some t >= 0.
bool iso_closed_form(const Integer& m, const Integer& n);

struct EvenCore {
    Integer core;  // even
    std::size_t t; // number of stripped trailing binary 1s
};

/// n = 2^t core + 2^t - 1 with core even.
EvenCore even_core(const Integer& n);

/// The automorphism of A(10) swapping 210 and 1002. Throws InvariantViolation
/// if it does not verify.
IsoWitness a10_automorphism();

} // namespace hyperbinary
