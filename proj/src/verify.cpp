#include "hyperbinary/verify.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <thread>

#include "hyperbinary/hbgraph.hpp"
#include "hyperbinary/stern.hpp"

namespace hyperbinary {

std::vector<NamedRoute> default_b_routes() {
    std::vector<NamedRoute> routes;
    for (BAlgorithm algo : kAllBAlgorithms) {
        routes.push_back({std::string(to_string(algo)),
                          [algo](const Integer& n) { return b_with(algo, n); }});
    }
    routes.push_back({"enum", [](const Integer& n) {
                          return Integer(enumerate_expansions(n).size());
                      }});
    return routes;
}

std::vector<NamedRoute> default_v_routes() {
    return {{"rec", [](const Integer& n) { return cyclomatic_number(n); }},
            {"graph", [](const Integer& n) { return Integer(counts(build_graph(n)).v); }}};
}

std::vector<NamedRoute> default_a_routes() {
    return {{"rec", [](const Integer& n) { return arc_count(n); }},
            {"graph", [](const Integer& n) { return Integer(counts(build_graph(n)).a); }}};
}

std::string Counterexample::describe() const {
    std::ostringstream out;
    out << "counterexample n=" << n << ' ' << function << ':';
    for (const auto& [name, value] : values) {
        out << ' ' << name << '=' << value;
    }
    return out.str();
}

namespace {

std::optional<Counterexample> check_routes(std::uint64_t n, const std::string& function,
                                           const std::vector<NamedRoute>& routes) {
    std::vector<std::pair<std::string, Integer>> values;
    bool agree = true;
    for (const NamedRoute& route : routes) {
        values.emplace_back(route.name, route.fn(Integer(n)));
        agree = agree && values.back().second == values.front().second;
    }
    if (agree) {
        return std::nullopt;
    }
    return Counterexample{n, function, std::move(values)};
}

std::optional<Counterexample> check_one(std::uint64_t n, const VerifyOptions& options) {
    if (auto c = check_routes(n, "b", options.b_routes)) {
        return c;
    }
    if (auto c = check_routes(n, "v", options.v_routes)) {
        return c;
    }
    return check_routes(n, "a", options.a_routes);
}

} // namespace

std::optional<Counterexample> verify_range(const VerifyOptions& options) {
    const unsigned workers = std::max(1u, options.workers);
    std::optional<Counterexample> best;
    std::mutex mutex;
    // Strided shards; each worker stops once it passes the best n found so far.
    auto work = [&](unsigned shard) {
        for (std::uint64_t n = shard; n <= options.max; n += workers) {
            {
                std::lock_guard lock(mutex);
                if (best && best->n < n) {
                    return;
                }
            }
            if (auto c = check_one(n, options)) {
                std::lock_guard lock(mutex);
                if (!best || c->n < best->n) {
                    best = std::move(c);
                }
                return;
            }
        }
    };
    if (workers == 1) {
        work(0);
        return best;
    }
    std::vector<std::jthread> pool;
    for (unsigned shard = 0; shard < workers; ++shard) {
        pool.emplace_back(work, shard);
    }
    pool.clear();
    return best;
}

} // namespace hyperbinary
