#pragma once

#include <string>
#include <utility>
#include <vector>

#include "frcodes/code.hpp"
#include "frcodes/matrix.hpp"

namespace fr {

/// Simple undirected graph on vertices 1..n. Edges are unordered pairs
/// {a,b} with a < b; self-loops and duplicates are rejected at insertion.
class RegularGraph {
  public:
    RegularGraph() = default;
    explicit RegularGraph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }
    int degree(int v) const;
    bool has_edge(int a, int b) const;

    /// Throws InvalidArgumentError on loops, out-of-range vertices or
    /// duplicate edges.
    void add_edge(int a, int b);
    void remove_edge(int a, int b);

    /// Edges as (a,b) pairs with a < b, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    /// True iff every vertex has degree exactly d.
    bool is_regular(int d) const;

    IncidenceMatrix adjacency_matrix() const;

    friend bool operator==(const RegularGraph&, const RegularGraph&) = default;

  private:
    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::vector<std::uint8_t>> adj_;
};

/// Split-cycle construction: vertices are divided into two halves, each
/// half gets a cycle (plus one chord on the odd half when n is odd), cross
/// edges are added round-robin until every vertex has floor(d/2) cross
/// neighbors, chords top up the intra-half degree to ceil(d/2), and a final
/// repair pass connects or edge-swaps any vertices still short of d.
///
/// pre: n*d even, 2 <= d < n-1. Deterministic for fixed (n, d).
/// Throws NotCompletableError when the repair pass cannot finish.
RegularGraph build_regular_graph_split(int n, int d);

/// Cycle-offset fallback generator: connects every vertex to its 1..d/2
/// cyclic neighbours, plus the diameter matching when d is odd. Always
/// succeeds under the precondition n*d even, 1 <= d < n.
RegularGraph circulant_graph(int n, int d);

/// Edge-labeling view of a d-regular graph as an FR code: packets are the
/// edges numbered 1..n*d/2 in lexicographic order and node v stores the
/// labels of its incident edges. Result has rho = 2.
FrCode graph_to_fr(const RegularGraph& graph, std::string provenance = "graph");

/// Inverse view for rho = 2 codes whose packets each sit on two distinct
/// nodes with no repeated node pair: packet p becomes the edge joining its
/// two holders. Rejects codes that are not edge-labelings of a simple graph.
RegularGraph fr_to_graph(const FrCode& code);

/// Undirected DOT with vertices named v1..vn and edges emitted in
/// lexicographic order; byte-stable for golden-file comparison.
std::string to_dot(const RegularGraph& graph);

}  // namespace fr
