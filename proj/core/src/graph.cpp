#include "frcodes/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "frcodes/errors.hpp"

namespace fr {

RegularGraph::RegularGraph(int n) : n_(n) {
    if (n < 0) throw InvalidArgumentError("vertex count must be non-negative");
    adj_.assign(static_cast<std::size_t>(n),
                std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
}

int RegularGraph::degree(int v) const {
    if (v < 1 || v > n_) throw InvalidArgumentError("vertex out of range");
    const auto& row = adj_[static_cast<std::size_t>(v - 1)];
    return static_cast<int>(std::accumulate(row.begin(), row.end(), 0));
}

bool RegularGraph::has_edge(int a, int b) const {
    if (a < 1 || a > n_ || b < 1 || b > n_) throw InvalidArgumentError("vertex out of range");
    return adj_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] != 0;
}

void RegularGraph::add_edge(int a, int b) {
    if (a < 1 || a > n_ || b < 1 || b > n_)
        throw InvalidArgumentError("edge endpoint out of range");
    if (a == b) throw InvalidArgumentError("self-loops are not allowed");
    if (has_edge(a, b))
        throw InvalidArgumentError("duplicate edge {" + std::to_string(a) + "," +
                                   std::to_string(b) + "}");
    adj_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = 1;
    adj_[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] = 1;
    ++edge_count_;
}

void RegularGraph::remove_edge(int a, int b) {
    if (!has_edge(a, b))
        throw InvalidArgumentError("edge {" + std::to_string(a) + "," +
                                   std::to_string(b) + "} not present");
    adj_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = 0;
    adj_[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] = 0;
    --edge_count_;
}

std::vector<std::pair<int, int>> RegularGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int a = 1; a <= n_; ++a)
        for (int b = a + 1; b <= n_; ++b)
            if (has_edge(a, b)) out.emplace_back(a, b);
    return out;
}

bool RegularGraph::is_regular(int d) const {
    for (int v = 1; v <= n_; ++v)
        if (degree(v) != d) return false;
    return true;
}

IncidenceMatrix RegularGraph::adjacency_matrix() const {
    IncidenceMatrix m(n_, n_);
    for (const auto& [a, b] : edges()) {
        m.set(a - 1, b - 1, true);
        m.set(b - 1, a - 1, true);
    }
    return m;
}

namespace {

// Adds the ring edges of `side` (a list of vertex ids): a full cycle for
// three or more vertices, a single edge for two, nothing for fewer.
void add_cycle(RegularGraph& g, const std::vector<int>& side) {
    const std::size_t k = side.size();
    if (k == 2) {
        g.add_edge(side[0], side[1]);
    } else if (k >= 3) {
        for (std::size_t i = 0; i < k; ++i)
            g.add_edge(side[i], side[(i + 1) % k]);
    }
}

struct SplitState {
    RegularGraph* g;
    int d;
    std::vector<int> cross;  // cross-set degree per vertex, 1-based
};

bool below_total(const SplitState& s, int v) { return s.g->degree(v) < s.d; }

}  // namespace

RegularGraph build_regular_graph_split(int n, int d) {
    if (n < 2 || (static_cast<long long>(n) * d) % 2 != 0 || d < 2 || d >= n - 1)
        throw InvalidArgumentError("split construction requires n*d even and 2 <= d < n-1, got n=" +
                                   std::to_string(n) + " d=" + std::to_string(d));

    RegularGraph g(n);
    std::vector<int> u_side, v_side;
    for (int v = 1; v <= n / 2; ++v) u_side.push_back(v);
    for (int v = n / 2 + 1; v <= n; ++v) v_side.push_back(v);

    const int cross_target = d / 2;
    const int intra_target = d - cross_target;

    // Phase 1: a cycle on each side; odd n gets one extra chord on the
    // larger side so its degree deficit lands on whole edges.
    add_cycle(g, u_side);
    add_cycle(g, v_side);
    if (n % 2 == 1) {
        bool added = false;
        for (std::size_t i = 0; i < v_side.size() && !added; ++i)
            for (std::size_t j = i + 1; j < v_side.size() && !added; ++j)
                if (!g.has_edge(v_side[i], v_side[j]) && g.degree(v_side[i]) < d &&
                    g.degree(v_side[j]) < d) {
                    g.add_edge(v_side[i], v_side[j]);
                    added = true;
                }
    }

    SplitState s{&g, d, std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};

    // Phase 2: round-robin cross edges; u_i meets the t-th cyclic successor
    // of its opposite vertex. A vertex is eligible while it is below both
    // its cross target and total degree d.
    const auto cross_ok = [&](int v) {
        return s.cross[static_cast<std::size_t>(v)] < cross_target && below_total(s, v);
    };
    const int max_rounds = n * d + static_cast<int>(v_side.size()) + 1;
    for (int t = 0, stale = 0;
         stale < static_cast<int>(v_side.size()) && t < max_rounds; ++t) {
        bool progress = false;
        bool any_below = false;
        for (std::size_t i = 0; i < u_side.size(); ++i) {
            const int u = u_side[i];
            const int v = v_side[(i + static_cast<std::size_t>(t)) % v_side.size()];
            if (!cross_ok(u)) continue;
            any_below = true;
            if (!cross_ok(v) || g.has_edge(u, v)) continue;
            g.add_edge(u, v);
            ++s.cross[static_cast<std::size_t>(u)];
            ++s.cross[static_cast<std::size_t>(v)];
            progress = true;
        }
        if (!any_below) break;
        stale = progress ? 0 : stale + 1;
    }

    // Phase 3: intra-set chords between the two lowest-(degree, index)
    // vertices still below the intra target.
    for (const auto& side : {u_side, v_side}) {
        const auto intra_degree = [&](int v) {
            return g.degree(v) - s.cross[static_cast<std::size_t>(v)];
        };
        while (true) {
            std::vector<int> candidates;
            for (int v : side)
                if (intra_degree(v) < intra_target && below_total(s, v))
                    candidates.push_back(v);
            std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
                return std::pair(g.degree(a), a) < std::pair(g.degree(b), b);
            });
            bool connected = false;
            for (std::size_t i = 0; i < candidates.size() && !connected; ++i)
                for (std::size_t j = i + 1; j < candidates.size() && !connected; ++j)
                    if (!g.has_edge(candidates[i], candidates[j])) {
                        g.add_edge(candidates[i], candidates[j]);
                        connected = true;
                    }
            if (!connected) break;
        }
    }

    // Phase 4: repair. Connect deficient non-adjacent pairs; when the
    // deficient set is a clique, swap one edge off two saturated vertices.
    for (long long guard = 0;; ++guard) {
        if (guard > static_cast<long long>(n) * d)
            throw NotCompletableError(0, "repair phase did not converge");

        std::vector<int> deficient;
        for (int v = 1; v <= n; ++v)
            if (g.degree(v) < d) deficient.push_back(v);
        if (deficient.empty()) break;
        std::sort(deficient.begin(), deficient.end(), [&](int a, int b) {
            return std::pair(g.degree(a), a) < std::pair(g.degree(b), b);
        });

        bool connected = false;
        for (std::size_t i = 0; i < deficient.size() && !connected; ++i)
            for (std::size_t j = i + 1; j < deficient.size() && !connected; ++j)
                if (!g.has_edge(deficient[i], deficient[j])) {
                    g.add_edge(deficient[i], deficient[j]);
                    connected = true;
                }
        if (connected) continue;

        const int x = deficient[0];
        const int y = deficient.size() >= 2 ? deficient[1] : deficient[0];
        bool swapped = false;
        for (const auto& [a, b] : g.edges()) {
            if (a == x || a == y || b == x || b == y) continue;
            if (!g.has_edge(a, x) && !g.has_edge(b, y)) {
                g.remove_edge(a, b);
                g.add_edge(a, x);
                g.add_edge(b, y);
                swapped = true;
                break;
            }
            if (!g.has_edge(b, x) && !g.has_edge(a, y)) {
                g.remove_edge(a, b);
                g.add_edge(b, x);
                g.add_edge(a, y);
                swapped = true;
                break;
            }
        }
        if (!swapped)
            throw NotCompletableError(x, "no augmenting edge swap for deficient vertices");
    }

    return g;
}

RegularGraph circulant_graph(int n, int d) {
    if (n < 2 || d < 1 || d >= n || (static_cast<long long>(n) * d) % 2 != 0)
        throw InvalidArgumentError("circulant requires n*d even and 1 <= d < n, got n=" +
                                   std::to_string(n) + " d=" + std::to_string(d));
    RegularGraph g(n);
    for (int offset = 1; offset <= d / 2; ++offset)
        for (int v = 1; v <= n; ++v) {
            const int w = (v - 1 + offset) % n + 1;
            if (!g.has_edge(v, w)) g.add_edge(v, w);
        }
    if (d % 2 == 1)
        for (int v = 1; v <= n / 2; ++v) g.add_edge(v, v + n / 2);
    return g;
}

FrCode graph_to_fr(const RegularGraph& graph, std::string provenance) {
    const int n = graph.vertex_count();
    if (n < 1) throw InvalidArgumentError("empty graph");
    const int d = graph.degree(1);
    if (d < 1 || !graph.is_regular(d))
        throw InvalidArgumentError("graph is not d-regular with d >= 1");

    FrCode code;
    code.params = FrParams{n, graph.edge_count(), d, 2};
    code.provenance = std::move(provenance);
    code.nodes.assign(static_cast<std::size_t>(n), {});
    int label = 0;
    for (const auto& [a, b] : graph.edges()) {
        ++label;
        code.nodes[static_cast<std::size_t>(a - 1)].push_back(label);
        code.nodes[static_cast<std::size_t>(b - 1)].push_back(label);
    }
    require_valid(code);
    return code;
}

RegularGraph fr_to_graph(const FrCode& code) {
    require_valid(code);
    if (code.params.rho != 2)
        throw InvalidArgumentError("only rho = 2 codes are edge labelings of a graph");
    RegularGraph g(code.params.n);
    std::vector<std::vector<int>> holders(static_cast<std::size_t>(code.params.theta));
    for (int i = 0; i < code.params.n; ++i)
        for (int packet : code.nodes[static_cast<std::size_t>(i)])
            holders[static_cast<std::size_t>(packet - 1)].push_back(i + 1);
    for (int packet = 1; packet <= code.params.theta; ++packet) {
        const auto& h = holders[static_cast<std::size_t>(packet - 1)];
        if (h.size() != 2)
            throw InvalidArgumentError("packet " + std::to_string(packet) +
                                       " is not held by exactly two nodes");
        if (g.has_edge(h[0], h[1]))
            throw InvalidArgumentError("packets " + std::to_string(packet) +
                                       " and an earlier one share the same node pair");
        g.add_edge(h[0], h[1]);
    }
    return g;
}

std::string to_dot(const RegularGraph& graph) {
    std::string out = "graph G {\n";
    for (int v = 1; v <= graph.vertex_count(); ++v)
        out += "  v" + std::to_string(v) + ";\n";
    for (const auto& [a, b] : graph.edges())
        out += "  v" + std::to_string(a) + " -- v" + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace fr
