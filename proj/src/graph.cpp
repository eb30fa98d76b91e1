#include "cyclecert/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cyclecert {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edge_list) {
    if (n < 0) throw Error("vertex count must be non-negative");
    for (auto& [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error("edge endpoint out of range: (" + std::to_string(u) +
                        ", " + std::to_string(v) + ") with n = " + std::to_string(n));
        if (u == v)
            throw Error("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edge_list);
    g.adj_.assign(n, {});
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& row : g.adj_) std::sort(row.begin(), row.end());
    if (n <= kBitsetCap && n > 0) {
        g.words_ = (n + 63) / 64;
        g.bits_.assign(static_cast<std::size_t>(n) * g.words_, 0);
        for (auto [u, v] : g.edges_) {
            g.bits_[static_cast<std::size_t>(u) * g.words_ + v / 64] |= 1ULL << (v % 64);
            g.bits_[static_cast<std::size_t>(v) * g.words_ + u / 64] |= 1ULL << (u % 64);
        }
    }
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    if (words_ > 0)
        return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
    const auto& row = adj_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

namespace {

// One "a b" line already split into numbers, with its source line for
// error reporting.
struct NumberLine {
    long long a, b;
    int line;
};

std::vector<NumberLine> tokenize(const std::string& text) {
    std::vector<NumberLine> out;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
        while (!raw.empty() && (raw.back() == '\r' || std::isspace(static_cast<unsigned char>(raw.back()))))
            raw.pop_back();
        std::istringstream fields(raw);
        std::string first, second, extra;
        if (!(fields >> first)) continue;
        if (!(fields >> second))
            throw ParseError("expected two integers, got one", lineno);
        if (fields >> extra)
            throw ParseError("expected two integers, got more", lineno);
        NumberLine nl{0, 0, lineno};
        const std::pair<const std::string*, long long*> slots[] = {{&first, &nl.a},
                                                                   {&second, &nl.b}};
        for (auto [tok, dst] : slots) {
            std::size_t used = 0;
            try {
                *dst = std::stoll(*tok, &used);
            } catch (const std::exception&) {
                throw ParseError("not an integer: '" + *tok + "'", lineno);
            }
            if (used != tok->size())
                throw ParseError("not an integer: '" + *tok + "'", lineno);
            if (*dst < 0)
                throw ParseError("negative value: '" + *tok + "'", lineno);
        }
        out.push_back(nl);
    }
    return out;
}

} // namespace

Graph parse_edge_list(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError("no data");

    // Header test: first line (a, b) is a header iff all later ids fit
    // below a and the edge-line count matches b.
    bool header = lines.size() >= 1;
    if (header) {
        long long a = lines[0].a, b = lines[0].b;
        if (static_cast<long long>(lines.size()) - 1 != b) header = false;
        for (std::size_t i = 1; header && i < lines.size(); ++i)
            if (lines[i].a >= a || lines[i].b >= a) header = false;
    }

    long long n = 0;
    std::vector<std::pair<int, int>> edges;
    std::size_t start = 0;
    if (header) {
        n = lines[0].a;
        if (n > 100'000'000) throw ParseError("vertex count too large", lines[0].line);
        start = 1;
    } else {
        for (const auto& nl : lines) n = std::max({n, nl.a + 1, nl.b + 1});
    }
    for (std::size_t i = start; i < lines.size(); ++i) {
        const auto& nl = lines[i];
        if (nl.a >= n || nl.b >= n)
            throw ParseError("vertex id out of range", nl.line);
        if (nl.a == nl.b)
            throw ParseError("self-loop at vertex " + std::to_string(nl.a), nl.line);
        edges.emplace_back(static_cast<int>(nl.a), static_cast<int>(nl.b));
    }
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

std::string serialize(const Graph& g) {
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string graph_digest(const Graph& g) {
    std::uint64_t h = 14695981039346656037ULL;
    for (char c : serialize(g)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) out[i] = hex[h & 0xf];
    return out;
}

PathWitness::PathWitness(const Graph& host, std::vector<int> vertices)
    : host_(&host), verts_(std::move(vertices)) {
    if (verts_.empty()) throw Error("path witness needs at least one vertex");
}

CycleWitness::CycleWitness(const Graph& host, std::vector<int> vertices)
    : host_(&host), verts_(std::move(vertices)) {
    if (verts_.empty()) throw Error("cycle witness needs at least one vertex");
    // Canonicalize: smallest vertex first, then the smaller neighbour next.
    auto it = std::min_element(verts_.begin(), verts_.end());
    std::rotate(verts_.begin(), it, verts_.end());
    if (verts_.size() >= 3 && verts_.back() < verts_[1])
        std::reverse(verts_.begin() + 1, verts_.end());
}

namespace {

VerificationReport verify_sequence(const Graph& g, const std::vector<int>& seq,
                                   bool closed) {
    VerificationReport rep;
    auto fail = [&rep](std::string why) {
        rep.ok = false;
        rep.first_violation = std::move(why);
        return rep;
    };
    if (closed && seq.size() < 3)
        return fail("cycle has fewer than 3 vertices");
    for (int v : seq)
        if (v < 0 || v >= g.num_vertices())
            return fail("vertex " + std::to_string(v) + " out of range");
    std::vector<int> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end())
        return fail("vertex " + std::to_string(*it) + " repeated");
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (!g.has_edge(seq[i], seq[i + 1]))
            return fail("missing edge (" + std::to_string(seq[i]) + ", " +
                        std::to_string(seq[i + 1]) + ")");
    if (closed && !g.has_edge(seq.back(), seq.front()))
        return fail("missing closing edge (" + std::to_string(seq.back()) + ", " +
                    std::to_string(seq.front()) + ")");
    return rep;
}

} // namespace

VerificationReport verify_path(const PathWitness& p) {
    return verify_sequence(p.host(), p.vertices(), false);
}

VerificationReport verify_cycle(const CycleWitness& c) {
    return verify_sequence(c.host(), c.vertices(), true);
}

PathWitness grow_path_greedy(const Graph& g, int start) {
    if (start < 0 || start >= g.num_vertices())
        throw Error("start vertex out of range");
    std::vector<char> used(g.num_vertices(), 0);
    std::vector<int> seq{start};
    used[start] = 1;
    for (;;) {
        int cur = seq.back(), next = -1;
        for (int w : g.neighbors(cur))
            if (!used[w]) { next = w; break; }
        if (next < 0) break;
        used[next] = 1;
        seq.push_back(next);
    }
    return PathWitness(g, std::move(seq));
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> to_new(g.num_vertices(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.num_vertices())
            throw Error("vertex out of range in induced_subgraph");
        if (to_new[v] != -1)
            throw Error("duplicate vertex in induced_subgraph");
        to_new[v] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (int v : vertices)
        for (int w : g.neighbors(v))
            if (v < w && to_new[w] != -1)
                edges.emplace_back(to_new[v], to_new[w]);
    return InducedSubgraph{Graph::from_edges(static_cast<int>(vertices.size()), std::move(edges)),
                           vertices, std::move(to_new)};
}

} // namespace cyclecert
