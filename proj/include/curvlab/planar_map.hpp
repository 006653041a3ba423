#ifndef CURVLAB_PLANAR_MAP_HPP
#define CURVLAB_PLANAR_MAP_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace curvlab {

using VertexId = int;
using DartId = int;
using EdgeId = int;
using FaceId = int;

enum class MapError {
    NonSymmetricAdjacency,
    LoopEdge,
    MultiEdge,
    NotConnected,
    NotSphere,
    UnknownId,
    NotATriangle,
    NotIncident,
    InconsistentFaces,
};

class map_error : public std::runtime_error {
public:
    map_error(MapError code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    MapError code() const { return code_; }

private:
    MapError code_;
};

// Sorted multiset of the face sizes around a vertex.
using FaceVector = std::vector<int>;
// Pair of face sizes on the two sides of an edge, sorted.
using SideVector = std::array<int, 2>;

// A connected simple graph 2-cell embedded in the oriented sphere,
// represented as a rotation system on darts (directed edge ends).
//
// Conventions: rotation lists are counterclockwise, the face walk is
// successor(d) = rot(twin(d)), and every orbit of the successor is one face.
// Maps are immutable after construction; all queries are read-only and safe
// to call concurrently.
class PlanarMap {
public:
    // rotation_lists[v] lists the neighbors of v in counterclockwise order.
    // Validates symmetry, simplicity, connectivity and the sphere condition
    // V - E + F = 2.
    static PlanarMap build(const std::vector<std::vector<VertexId>>& rotation_lists);

    int vertex_count() const { return static_cast<int>(vertex_dart_.size()); }
    int edge_count() const { return dart_count() / 2; }
    int face_count() const { return static_cast<int>(face_dart_.size()); }
    int dart_count() const { return static_cast<int>(twin_.size()); }

    DartId twin(DartId d) const { return twin_[d]; }
    DartId rot(DartId d) const { return rot_[d]; }
    DartId rot_inv(DartId d) const { return rot_inv_[d]; }
    DartId successor(DartId d) const { return rot_[twin_[d]]; }
    VertexId origin(DartId d) const { return origin_[d]; }
    VertexId head(DartId d) const { return origin_[twin_[d]]; }
    FaceId face_of(DartId d) const { return face_[d]; }
    EdgeId edge_of(DartId d) const { return edge_[d]; }

    DartId vertex_dart(VertexId v) const { check_vertex(v); return vertex_dart_[v]; }
    DartId face_dart(FaceId f) const { check_face(f); return face_dart_[f]; }
    DartId edge_dart(EdgeId e) const { check_edge(e); return edge_dart_[e]; }

    int degree(VertexId v) const { check_vertex(v); return degree_[v]; }
    int face_size(FaceId f) const { check_face(f); return face_size_[f]; }

    // Darts with origin v, in counterclockwise order.
    std::vector<DartId> vdarts(VertexId v) const;
    // Darts of the face orbit, in walk order.
    std::vector<DartId> fdarts(FaceId f) const;

    // Cyclic multiset of the faces around v, with multiplicity, in rotation
    // order. The face reported at dart d is the one containing d.
    std::vector<FaceId> vfaces(VertexId v) const;
    std::vector<EdgeId> vedges(VertexId v) const;
    std::vector<VertexId> neighbors(VertexId v) const;

    // Sorted face vector and its cyclic (rotation-ordered) variant.
    FaceVector vtype(VertexId v) const;
    std::vector<int> vtype_cyclic(VertexId v) const;

    SideVector etype(EdgeId e) const;
    std::array<VertexId, 2> everts(EdgeId e) const;
    std::array<FaceId, 2> efaces(EdgeId e) const;

    // Cyclic multisets around a face, in walk order, with multiplicity.
    std::vector<VertexId> fverts(FaceId f) const;
    std::vector<EdgeId> fedges(FaceId f) const;

    // Edge between u and v, or -1.
    EdgeId find_edge(VertexId u, VertexId v) const;

    // The face across the edge of triangle t opposite to vertex v.
    FaceId opp(VertexId v, FaceId t) const;

    // Counterclockwise neighbor lists, suitable for PlanarMap::build.
    std::vector<std::vector<VertexId>> rotation_lists() const;

    // Same map with all rotation cycles reversed (the mirror image).
    PlanarMap mirrored() const;
    // Same map with vertices renamed by perm (perm[v] = new id).
    PlanarMap relabeled(const std::vector<VertexId>& perm) const;

    // Canonical encoding of the dart structure, invariant under relabeling
    // (orientation-preserving). Two maps are dart-isomorphic iff their
    // canonical encodings are equal.
    std::vector<int> canonical_encoding() const;
    bool isomorphic_to(const PlanarMap& other, bool allow_mirror = true) const;

    int max_face_size() const;

private:
    PlanarMap() = default;
    void derive_faces();
    void check_vertex(VertexId v) const {
        if (v < 0 || v >= vertex_count()) throw map_error(MapError::UnknownId, "unknown vertex id");
    }
    void check_face(FaceId f) const {
        if (f < 0 || f >= face_count()) throw map_error(MapError::UnknownId, "unknown face id");
    }
    void check_edge(EdgeId e) const {
        if (e < 0 || e >= edge_count()) throw map_error(MapError::UnknownId, "unknown edge id");
    }

    std::vector<DartId> twin_, rot_, rot_inv_;
    std::vector<VertexId> origin_;
    std::vector<EdgeId> edge_;
    std::vector<FaceId> face_;
    std::vector<DartId> vertex_dart_, face_dart_, edge_dart_;
    std::vector<int> degree_, face_size_;
};

// Builds a map from a list of faces, each given as a cyclic vertex sequence.
// Individual face orientations may be arbitrary; a globally consistent
// orientation is found by propagation. Every edge must be used by exactly two
// face sides, or, with complete_boundary, the unmatched sides must close up
// into boundary cycles visiting each vertex at most once; those cycles are
// added as faces. The result is re-validated through PlanarMap::build.
PlanarMap assemble_from_faces(int vertex_count, const std::vector<std::vector<VertexId>>& faces,
                              bool complete_boundary = false);

} // namespace curvlab

#endif
