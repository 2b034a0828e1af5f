#ifndef FLOC_GRAPH_HPP
#define FLOC_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "floc/errors.hpp"
#include "floc/vertex_set.hpp"

namespace floc {

/// Finite undirected connected graph with hop-count distances precomputed by
/// BFS from every vertex.  Vertices are dense ids 0..n-1; display labels keep
/// the conventional names of the instance family (v1..vk on cycles,
/// coordinate tuples on hypergrids).  Immutable after construction.
class graph {
public:
    static constexpr int max_vertices = 64;

    /// Path with m vertices 0-1-...-(m-1).
    static graph path(int m);

    /// Cycle C_k; label "vi" maps to id i-1, edges close the ring v_k-v_1.
    static graph cycle(int k);

    /// Tree from an explicit edge list; rejects cycles and disconnected input.
    static graph tree(const std::vector<std::pair<int, int>>& edges);

    /// Cartesian product of paths; dims must have >= 2 entries, all >= 2.
    /// Coordinates are 1-based in labels and map to ids in row-major order
    /// (last coordinate varies fastest).
    static graph hypergrid(const std::vector<int>& dims);

    /// Arbitrary connected graph from an edge list.
    static graph custom(const std::vector<std::pair<int, int>>& edges);

    int size() const { return n_; }
    int distance(int v, int w) const { return dist_[static_cast<std::size_t>(v) * n_ + w]; }
    bool adjacent(int v, int w) const { return distance(v, w) == 1; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool is_tree() const { return edges_.size() + 1 == static_cast<std::size_t>(n_); }

    const std::vector<int>& neighbours(int v) const { return adj_[v]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::string& label(int v) const { return labels_[v]; }
    const std::string& name() const { return name_; }
    vertex_set all_vertices() const { return vertex_set::full(n_); }

    /// Renders a vertex subset as "{v3,v4,v5}" using the display labels.
    std::string format(vertex_set s) const;

private:
    graph(std::vector<std::pair<int, int>> edges, int n, std::vector<std::string> labels,
          std::string name);

    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> dist_;  // row-major n*n
    std::vector<std::string> labels_;
    std::string name_;
};

/// Injective map from the vertices of a pattern graph into a host graph such
/// that all pairwise distances are preserved exactly.
struct embedding {
    std::vector<int> map;  // pattern id -> host id
};

/// Exhaustive backtracking search for a distance-preserving embedding of
/// pattern into host.  Candidates are tried in increasing host id, so the
/// returned embedding is deterministic; an empty result is a proof that no
/// such embedding exists.
std::optional<embedding> find_dp_embedding(const graph& pattern, const graph& host);

/// True iff m maps every pattern pair (u,w) to a host pair at equal distance.
bool is_distance_preserving(const graph& pattern, const graph& host, const embedding& m);

/// All distance-preserving permutations of the vertex set, found by
/// backtracking over images.  Intended for small graphs (n <= 12).
std::vector<std::vector<int>> automorphisms(const graph& g);

}  // namespace floc

#endif
