#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperbinary/integer.hpp"

namespace hyperbinary {

using CountFunction = std::function<Integer(const Integer&)>;

struct NamedRoute {
    std::string name;
    CountFunction fn;
};

/// The five b algorithms plus the enumeration oracle |H(n)| ("enum").
std::vector<NamedRoute> default_b_routes();
/// Recursion ("rec") and built-graph ("graph") routes for v and a.
std::vector<NamedRoute> default_v_routes();
std::vector<NamedRoute> default_a_routes();

struct VerifyOptions {
    std::uint64_t max = 2048;
    unsigned workers = 1;
    std::vector<NamedRoute> b_routes = default_b_routes();
    std::vector<NamedRoute> v_routes = default_v_routes();
    std::vector<NamedRoute> a_routes = default_a_routes();
};

struct Counterexample {
    std::uint64_t n;
    std::string function; // "b", "v" or "a"
    std::vector<std::pair<std::string, Integer>> values;

    /// "counterexample n=<n> <fn>: name=value ..."
    std::string describe() const;
};

/// Checks every route against every other for all n in [0, max]. Returns the
/// counterexample with the smallest n, independent of the worker count.
std::optional<Counterexample> verify_range(const VerifyOptions& options);

} // namespace hyperbinary
