#ifndef CURVLAB_CLASSIFY_HPP
#define CURVLAB_CLASSIFY_HPP

#include <string>
#include <vector>

#include "curvlab/planar_map.hpp"
#include "curvlab/rational.hpp"

namespace curvlab {

class classify_error : public std::runtime_error {
public:
    explicit classify_error(const std::string& what) : std::runtime_error(what) {}
};

enum class VertexClass {
    DFace,              // whole unit to the first auxiliary target
    DDFace,             // whole unit to the second auxiliary target
    Big,                // touches a face with at least 42 sides
    Regular,            // whole unit to one designated incident face size
    SemiRegular,        // split between two targets by a fixed ratio
    TS,                 // all incident faces are triangles or squares
    PotentiallySpecial, // handled by one of the special probe rules
};

const char* to_string(VertexClass c);

// Sub-case for semi-regular vertices whose designated size has multiplicity
// two in the face vector.
enum class SemiRegularCase {
    SingleWhole,   // designated size, multiplicity one: r to it, rest to aux
    DoubleSame,    // one face carries both incidences: r + r to it
    DoubleSplit,   // two distinct faces of that size: r to each
    TwoSizes,      // two designated sizes m, n with shares r and 1-r
};

struct VertexClassification {
    VertexClass tag;
    // Regular: n set. SemiRegular: n (and m for TwoSizes) with share r going
    // to the m-sized (or only) designated face.
    int n = 0;
    int m = 0;
    Rational r;
    SemiRegularCase subcase = SemiRegularCase::SingleWhole;
    bool aux_remainder = false; // SingleWhole puts 1-r on the aux target
};

// The class is a function of the face vector alone. Evaluates every table
// membership and asserts that exactly one matches; throws classify_error on
// an inadmissible, uncovered or doubly covered vector.
VertexClass classify_vector(const FaceVector& fv);

// Classifies from the face vector alone except for the alpha/beta refinement
// of (3,11,13) vertices and the placement sub-cases, which consult the map.
VertexClassification classify(const PlanarMap& m, VertexId v);

struct AlphaBetaMarking {
    std::vector<char> alpha, beta; // per vertex; both zero off (3,11,13)
    std::vector<EdgeId> blue_edges;
};

// An edge whose sides have sizes 11 and 13 has both endpoints with face
// vector (3,11,13); it is blue iff for both endpoints the face across the
// endpoint's triangle has size 11. Endpoints of blue edges are beta, all
// other (3,11,13) vertices are alpha.
AlphaBetaMarking mark_alpha_beta(const PlanarMap& m);
std::vector<EdgeId> blue_edges(const PlanarMap& m);

struct TSData {
    std::vector<EdgeId> ets;  // boundary edges of v's faces not incident to v
    std::vector<FaceId> fts;  // faces of size 11/40/41 sharing an edge with ets
    int nts = 0;              // |fts|, at most 3
};

TSData ts_data(const PlanarMap& m, VertexId v);

// Triangles all of whose corners have face vector (3,3,5,7).
std::vector<FaceId> red_triangles(const PlanarMap& m);
bool is_red_triangle(const PlanarMap& m, FaceId f);

// True iff vfaces(v) is cyclically (3,x,3,y): the two triangles at v are not
// adjacent. Requires degree 4 with exactly two triangles.
bool triangles_alternate(const PlanarMap& m, VertexId v);

} // namespace curvlab

#endif
