#include "curvlab/curvature.hpp"

namespace curvlab {

Rational curvature_of(const FaceVector& fv) {
    Rational k = rat(1) - rat(static_cast<long>(fv.size()), 2);
    for (int s : fv) k += rat(1, s);
    return k;
}

Rational curvature(const PlanarMap& m, VertexId v) { return curvature_of(m.vtype(v)); }

Rational total_curvature(const PlanarMap& m) {
    Rational sum;
    for (VertexId v = 0; v < m.vertex_count(); ++v) sum += curvature(m, v);
    return sum;
}

Rational critical_curvature() { return rat(2, 209); }

Rational excess_of(const FaceVector& fv) { return curvature_of(fv) - critical_curvature(); }

Rational excess(const PlanarMap& m, VertexId v) { return curvature(m, v) - critical_curvature(); }

} // namespace curvlab
