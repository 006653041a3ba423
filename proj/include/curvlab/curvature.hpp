#ifndef CURVLAB_CURVATURE_HPP
#define CURVLAB_CURVATURE_HPP

#include "curvlab/planar_map.hpp"
#include "curvlab/rational.hpp"

namespace curvlab {

// K(v) = 1 - deg(v)/2 + sum over the faces at v (with multiplicity) of 1/|f|.
Rational curvature(const PlanarMap& m, VertexId v);

// Curvature of an abstract face vector.
Rational curvature_of(const FaceVector& fv);

// Sum over all vertices; equals 2 exactly for every sphere map.
Rational total_curvature(const PlanarMap& m);

// K(v) - 2/209, the margin against the critical per-vertex average.
Rational excess(const PlanarMap& m, VertexId v);
Rational excess_of(const FaceVector& fv);

// The critical average curvature 2/209.
Rational critical_curvature();

} // namespace curvlab

#endif
