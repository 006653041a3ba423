#ifndef CURVLAB_GENERATORS_HPP
#define CURVLAB_GENERATORS_HPP

#include <stdexcept>
#include <string>

#include "curvlab/planar_map.hpp"

namespace curvlab {

class generator_error : public std::runtime_error {
public:
    explicit generator_error(const std::string& what) : std::runtime_error(what) {}
};

// Canonical rotation systems for the two excluded infinite families.
PlanarMap prism(int n);
PlanarMap antiprism(int n);

// Small reference polyhedra used throughout the tests.
PlanarMap tetrahedron();
PlanarMap cube();
PlanarMap octahedron();
PlanarMap icosahedron();
PlanarMap dodecahedron();

// The 208-vertex graph built around a closed chain of linked triangle pairs:
// 130 triangles, 26 pentagons, 26 heptagons and two 39-gons.
PlanarMap graph208_chain();

// A positively curved graph with one face of size exactly n, 8 <= n <= 41:
// an open run of the same banding closed off by two cap patches. The band
// run is chosen maximal; n - 8, 9 or 10 left over selects 4- or 5-edge caps.
// Sizes 8..10 use the one-diamond degenerate patch.
PlanarMap g_family(int n);

// The 208-vertex graph with 3-, 4-, 11- and 13-sided faces: eight 13-gon
// "flowers" paired by shared squares, six satellite square units, and 24
// connecting 11-gons, arranged like the vertices, edges and faces of a cube.
PlanarMap graph208_quilt();

// Hand-assembled examples of a face meeting a vertex twice (sizes 10, 11):
// two triangulated flaps joined by a single edge the outer face walks twice.
PlanarMap multi_incidence_example(int face_size);

} // namespace curvlab

#endif
