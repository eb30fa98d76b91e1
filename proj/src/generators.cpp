#include "cyclecert/generators.hpp"

#include <sstream>

#include "cyclecert/rng.hpp"

namespace cyclecert {

Graph make_complete(int n) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, std::move(edges));
}

Graph make_complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph::from_edges(a + b, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3) throw Error("cycle graph needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, std::move(edges));
}

Graph make_path(int n) {
    if (n < 1) throw Error("path graph needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, std::move(edges));
}

Graph make_petersen() {
    // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, 5 + i);
    }
    return Graph::from_edges(10, std::move(edges));
}

Graph make_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0) throw Error("gnp needs n >= 0");
    if (p < 0.0 || p > 1.0) throw Error("gnp needs p in [0, 1]");
    SeededRng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.bernoulli(p)) edges.emplace_back(i, j);
    return Graph::from_edges(n, std::move(edges));
}

ConditionedGraph make_gnp_conditioned(
    int n, double p, const std::function<bool(const GraphProfile&)>& accept,
    std::uint64_t seed, int max_trials) {
    for (int t = 0; t < max_trials; ++t) {
        Graph g = make_gnp(n, p, mix_seed(seed, static_cast<std::uint64_t>(t)));
        GraphProfile prof = profile_graph(g);
        if (accept(prof))
            return ConditionedGraph{std::move(g), prof, t + 1};
    }
    throw GenerationError("no graph satisfied the condition after " +
                              std::to_string(max_trials) + " trials (n = " +
                              std::to_string(n) + ", p = " + std::to_string(p) + ")",
                          max_trials);
}

Graph make_from_spec(const std::string& spec, std::uint64_t seed) {
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto parse_ints = [&args](int want) {
        std::vector<long long> vals;
        std::istringstream in(args);
        std::string tok;
        while (std::getline(in, tok, ',')) vals.push_back(std::stoll(tok));
        if (static_cast<int>(vals.size()) != want)
            throw ParseError("model '" + args + "' needs " + std::to_string(want) +
                             " argument(s)");
        return vals;
    };
    try {
        if (kind == "complete") return make_complete(static_cast<int>(parse_ints(1)[0]));
        if (kind == "cycle") return make_cycle(static_cast<int>(parse_ints(1)[0]));
        if (kind == "path") return make_path(static_cast<int>(parse_ints(1)[0]));
        if (kind == "petersen") return make_petersen();
        if (kind == "bipartite") {
            auto v = parse_ints(2);
            return make_complete_bipartite(static_cast<int>(v[0]), static_cast<int>(v[1]));
        }
        if (kind == "gnp") {
            auto comma = args.find(',');
            if (comma == std::string::npos)
                throw ParseError("gnp needs n,p");
            int n = static_cast<int>(std::stoll(args.substr(0, comma)));
            double p = std::stod(args.substr(comma + 1));
            return make_gnp(n, p, seed);
        }
    } catch (const std::invalid_argument&) {
        throw ParseError("bad model arguments: '" + spec + "'");
    } catch (const std::out_of_range&) {
        throw ParseError("bad model arguments: '" + spec + "'");
    }
    throw ParseError("unknown model: '" + kind + "'");
}

} // namespace cyclecert
