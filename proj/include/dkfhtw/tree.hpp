#pragma once

#include <vector>

namespace dkfhtw {

/// Binary-hierarchy tree mirroring the dyadic wavelet levels.
///
/// External nodes v_{k,l} (l = 0..L-1, k = 1..2^l) each carry one physical
/// bond for coordinate c_{k,l}; internal nodes w_{k,l} (l = 0..L-2) carry
/// none. Edges: (w_{k,l}, v_{k,l}) plus (w_{k,l}, v_{2k-1,l+1}) and
/// (w_{k,l}, v_{2k,l+1}). Rooted at v_{1,0}.
///
/// Node ids: externals first in (l,k)-lexicographic order (so an external
/// node's id equals its coordinate's flat index (2^l - 1) + (k - 1)), then
/// internals in (l,k) order.
struct FhtwTree {
    struct Node {
        bool external = false;
        int level = 0;
        int k = 1;        // 1-based position within the level
        int coord = -1;   // flat coordinate index for externals, -1 otherwise
        int parent_edge = -1;          // -1 at the root
        std::vector<int> edges;        // incident edges, ascending edge id (core mode order)
        std::vector<int> child_edges;  // subset of `edges` pointing away from the root
    };
    struct Edge {
        int parent = -1;
        int child = -1;
    };

    int levels = 0; // L
    int dim = 0;    // number of external nodes = 2^L - 1
    int root = 0;
    std::vector<Node> nodes;
    std::vector<Edge> edges;
    /// External coordinates under the child endpoint of each edge, ascending.
    std::vector<std::vector<int>> child_coords;
    /// Node ids in post-order (children before parents), root last.
    std::vector<int> post_order;

    int node_count() const { return static_cast<int>(nodes.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    /// Coordinates of the component containing `nbr` when edge `e` is cut,
    /// where `nbr` must be an endpoint of `e`. Ascending order.
    std::vector<int> side_coords(int e, int nbr) const;

    /// The endpoint of edge `e` other than node `n`.
    int other_end(int e, int n) const {
        return edges[e].parent == n ? edges[e].child : edges[e].parent;
    }

    bool same_shape(const FhtwTree& o) const { return levels == o.levels; }
};

/// Builds the tree for L >= 2 dyadic levels (2^L - 1 coordinates).
FhtwTree build_tree(int levels);

} // namespace dkfhtw
