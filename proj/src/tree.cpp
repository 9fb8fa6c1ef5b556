#include "dkfhtw/tree.hpp"

#include <algorithm>
#include <string>

#include "dkfhtw/errors.hpp"

namespace dkfhtw {

namespace {

int ext_id(int l, int k) { return (1 << l) - 1 + (k - 1); }

} // namespace

FhtwTree build_tree(int levels) {
    if (levels < 2)
        throw ConfigError("build_tree: need at least 2 levels, got " + std::to_string(levels));
    FhtwTree t;
    t.levels = levels;
    t.dim = (1 << levels) - 1;
    const int n_int = (1 << (levels - 1)) - 1;
    t.nodes.resize(t.dim + n_int);

    for (int l = 0; l < levels; ++l)
        for (int k = 1; k <= (1 << l); ++k) {
            FhtwTree::Node& n = t.nodes[ext_id(l, k)];
            n.external = true;
            n.level = l;
            n.k = k;
            n.coord = ext_id(l, k);
        }
    auto int_id = [&](int l, int k) { return t.dim + (1 << l) - 1 + (k - 1); };
    for (int l = 0; l <= levels - 2; ++l)
        for (int k = 1; k <= (1 << l); ++k) {
            FhtwTree::Node& n = t.nodes[int_id(l, k)];
            n.external = false;
            n.level = l;
            n.k = k;
        }

    // Edges per internal node: to v_{k,l} (child = internal node), then to
    // the two finer externals (children of the internal node).
    auto add_edge = [&](int parent, int child) {
        int e = static_cast<int>(t.edges.size());
        t.edges.push_back({parent, child});
        t.nodes[parent].edges.push_back(e);
        t.nodes[child].edges.push_back(e);
        t.nodes[child].parent_edge = e;
        t.nodes[parent].child_edges.push_back(e);
        return e;
    };
    for (int l = 0; l <= levels - 2; ++l)
        for (int k = 1; k <= (1 << l); ++k) {
            int w = int_id(l, k);
            add_edge(ext_id(l, k), w);
            add_edge(w, ext_id(l + 1, 2 * k - 1));
            add_edge(w, ext_id(l + 1, 2 * k));
        }
    t.root = ext_id(0, 1);

    for (auto& n : t.nodes) {
        std::sort(n.edges.begin(), n.edges.end());
        std::sort(n.child_edges.begin(), n.child_edges.end());
    }

    // Post-order via explicit stack.
    t.post_order.reserve(t.nodes.size());
    std::vector<std::pair<int, std::size_t>> stack;
    stack.emplace_back(t.root, 0);
    while (!stack.empty()) {
        auto& [node, next_child] = stack.back();
        const auto& kids = t.nodes[node].child_edges;
        if (next_child < kids.size()) {
            int child = t.edges[kids[next_child]].child;
            ++next_child;
            stack.emplace_back(child, 0);
        } else {
            t.post_order.push_back(node);
            stack.pop_back();
        }
    }

    // Coordinates under each edge's child endpoint, bottom-up.
    t.child_coords.resize(t.edges.size());
    for (int node : t.post_order) {
        if (node == t.root) continue;
        const FhtwTree::Node& n = t.nodes[node];
        std::vector<int>& coords = t.child_coords[n.parent_edge];
        if (n.external) coords.push_back(n.coord);
        for (int ce : n.child_edges)
            coords.insert(coords.end(), t.child_coords[ce].begin(), t.child_coords[ce].end());
        std::sort(coords.begin(), coords.end());
    }
    return t;
}

std::vector<int> FhtwTree::side_coords(int e, int nbr) const {
    if (nbr == edges[e].child) return child_coords[e];
    std::vector<int> out;
    out.reserve(dim - child_coords[e].size());
    const auto& sub = child_coords[e];
    std::size_t p = 0;
    for (int c = 0; c < dim; ++c) {
        if (p < sub.size() && sub[p] == c) {
            ++p;
        } else {
            out.push_back(c);
        }
    }
    return out;
}

} // namespace dkfhtw
