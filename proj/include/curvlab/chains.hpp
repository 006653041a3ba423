#ifndef CURVLAB_CHAINS_HPP
#define CURVLAB_CHAINS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "curvlab/planar_map.hpp"

namespace curvlab {

class chain_error : public std::runtime_error {
public:
    explicit chain_error(const std::string& what) : std::runtime_error(what) {}
};

// A maximal run of linked special triangles. Consconsecutive triangles
// alternately share a corner vertex (whose faces alternate triangle,
// pentagon, triangle, heptagon) and an edge with triangles on both sides.
// Closed chains have length divisible by four; open runs end where a
// neighbor stops being a special triangle.
struct Chain {
    std::vector<FaceId> triangles; // in traversal order
    std::vector<VertexId> vertex_joints;
    std::vector<EdgeId> edge_joints;
    bool closed = false;

    int length() const { return static_cast<int>(triangles.size()); }
    // distinct vertices and edges of the supporting complex
    std::vector<VertexId> support_vertices(const PlanarMap& m) const;
    std::vector<EdgeId> support_edges(const PlanarMap& m) const;
};

// Partitions all special triangles into maximal chains.
std::vector<Chain> find_chains(const PlanarMap& m);

// Cuts the sphere along a closed chain's support and replaces the smaller
// side with a mirrored copy of the larger side. The result has
// 2 * max(n1, n2) + |support vertices| vertices and revalidates as a sphere
// map (and as a positively curved graph when the input is one).
PlanarMap chain_surgery(const PlanarMap& m, const Chain& chain);

} // namespace curvlab

#endif
