#include <doctest.h>

#include <sstream>

#include "curvlab/generators.hpp"
#include "curvlab/planar_map.hpp"
#include "curvlab/rotmap_io.hpp"

using namespace curvlab;

namespace {

std::vector<std::vector<VertexId>> tetra_lists() {
    return {{1, 2, 3}, {2, 0, 3}, {0, 1, 3}, {0, 2, 1}};
}

} // namespace

TEST_CASE("tetrahedron rotation lists build a sphere map") {
    PlanarMap m = PlanarMap::build(tetra_lists());
    CHECK(m.vertex_count() == 4);
    CHECK(m.edge_count() == 6);
    CHECK(m.face_count() == 4);
    for (FaceId f = 0; f < m.face_count(); ++f) CHECK(m.face_size(f) == 3);
}

TEST_CASE("triangular prism counts") {
    PlanarMap m = prism(3);
    CHECK(m.vertex_count() == 6);
    CHECK(m.edge_count() == 9);
    CHECK(m.face_count() == 5);
}

TEST_CASE("torus-style rotation system is rejected") {
    // K4 with uniformly shifted rotations embeds on the torus: V - E + F = 0
    std::vector<std::vector<VertexId>> lists(4);
    for (int v = 0; v < 4; ++v)
        for (int d = 1; d <= 3; ++d) lists[v].push_back((v + d) % 4);
    CHECK_THROWS_AS(PlanarMap::build(lists), map_error);
    try {
        PlanarMap::build(lists);
    } catch (const map_error& e) {
        CHECK(e.code() == MapError::NotSphere);
    }
}

TEST_CASE("input validation errors") {
    CHECK_THROWS_AS(PlanarMap::build({{1}, {0}, {3}, {2}}), map_error); // disconnected
    try {
        PlanarMap::build({{1}, {0}, {3}, {2}});
    } catch (const map_error& e) {
        CHECK(e.code() == MapError::NotConnected);
    }
    try {
        PlanarMap::build({{1, 1}, {0, 0}});
    } catch (const map_error& e) {
        CHECK(e.code() == MapError::MultiEdge);
    }
    try {
        PlanarMap::build({{0, 1}, {0}});
    } catch (const map_error& e) {
        CHECK(e.code() == MapError::LoopEdge);
    }
    try {
        PlanarMap::build({{1, 2}, {0}, {1}});
    } catch (const map_error& e) {
        CHECK(e.code() == MapError::NonSymmetricAdjacency);
    }
}

TEST_CASE("cube vertex types") {
    PlanarMap m = cube();
    for (VertexId v = 0; v < m.vertex_count(); ++v) {
        CHECK(m.vtype(v) == FaceVector{4, 4, 4});
        CHECK(m.degree(v) == 3);
    }
}

TEST_CASE("antiprism vertex types") {
    PlanarMap m = antiprism(5);
    for (VertexId v = 0; v < m.vertex_count(); ++v)
        CHECK(m.vtype(v) == FaceVector{3, 3, 3, 5});
}

TEST_CASE("opp on the tetrahedron") {
    PlanarMap m = PlanarMap::build(tetra_lists());
    for (VertexId v = 0; v < 4; ++v) {
        for (FaceId t : m.vfaces(v)) {
            FaceId o = m.opp(v, t);
            CHECK(m.face_size(o) == 3);
            // the opposite face avoids neither sharing: it is the face whose
            // vertex set misses v exactly when the map is K4
            auto vs = m.fverts(o);
            CHECK(std::count(vs.begin(), vs.end(), v) == 0);
        }
    }
}

TEST_CASE("opp rejects bad arguments") {
    PlanarMap m = cube();
    CHECK_THROWS_AS(m.opp(0, m.vfaces(0)[0]), map_error); // squares are not triangles
    PlanarMap t = PlanarMap::build(tetra_lists());
    FaceId far = -1;
    for (FaceId f = 0; f < t.face_count(); ++f) {
        auto vs = t.fverts(f);
        if (std::count(vs.begin(), vs.end(), 0) == 0) far = f;
    }
    CHECK_THROWS_AS(t.opp(0, far), map_error);
}

TEST_CASE("opp around antiprism vertices") {
    // tracing the rotation system: the two triangles flanking the 6-gon have
    // triangles across them, the middle one faces the opposite 6-gon
    PlanarMap m = antiprism(6);
    for (VertexId v = 0; v < m.vertex_count(); ++v) {
        auto faces = m.vfaces(v);
        int i6 = -1;
        for (int i = 0; i < 4; ++i)
            if (m.face_size(faces[i]) == 6) i6 = i;
        FaceId middle = faces[(i6 + 2) % 4];
        FaceId side1 = faces[(i6 + 1) % 4];
        FaceId side2 = faces[(i6 + 3) % 4];
        CHECK(m.face_size(m.opp(v, side1)) == 3);
        CHECK(m.face_size(m.opp(v, side2)) == 3);
        FaceId across = m.opp(v, middle);
        CHECK(m.face_size(across) == 6);
        CHECK(across != faces[i6]);
    }
}

TEST_CASE("face walks close after exactly the face size") {
    PlanarMap m = antiprism(7);
    for (FaceId f = 0; f < m.face_count(); ++f) {
        DartId d0 = m.face_dart(f);
        DartId d = d0;
        for (int i = 0; i < m.face_size(f); ++i) d = m.successor(d);
        CHECK(d == d0);
    }
}

TEST_CASE("multi-incidence multiplicities are preserved") {
    PlanarMap m = multi_incidence_example(10);
    int big = -1;
    for (FaceId f = 0; f < m.face_count(); ++f)
        if (m.face_size(f) == 10) big = f;
    REQUIRE(big >= 0);
    auto vs = m.fverts(big);
    int doubled = 0;
    for (VertexId v = 0; v < m.vertex_count(); ++v) {
        auto faces = m.vfaces(v);
        int mult = static_cast<int>(std::count(faces.begin(), faces.end(), big));
        if (mult == 2) {
            ++doubled;
            CHECK(std::count(vs.begin(), vs.end(), v) == 2);
        }
    }
    CHECK(doubled == 2);
    // the joining edge appears twice on the boundary
    auto es = m.fedges(big);
    std::sort(es.begin(), es.end());
    bool repeat = false;
    for (size_t i = 1; i < es.size(); ++i)
        if (es[i] == es[i - 1]) repeat = true;
    CHECK(repeat);
}

TEST_CASE("rotmap round trip is dart-isomorphic") {
    for (auto make : {+[] { return prism(7); }, +[] { return antiprism(4); },
                      +[] { return multi_incidence_example(11); }}) {
        PlanarMap m = make();
        std::string text = rotmap_string(m);
        std::istringstream in(text);
        PlanarMap back = read_rotmap(in);
        CHECK(back.isomorphic_to(m, false));
        CHECK(rotmap_string(back) == text);
    }
}

TEST_CASE("rotmap parse errors carry positions") {
    std::istringstream bad("rotmap 1\n0: 1 2\n1: 0\n2: 1\n");
    CHECK_THROWS_AS(read_rotmap(bad), map_error); // not symmetric
    std::istringstream bad2("rotmap 1\n0: 1 9\n1: 0\n");
    CHECK_THROWS_AS(read_rotmap(bad2), parse_error); // undeclared neighbor
    std::istringstream bad3("noheader\n");
    CHECK_THROWS_AS(read_rotmap(bad3), parse_error);
}

TEST_CASE("relabeling produces isomorphic maps") {
    PlanarMap m = antiprism(5);
    std::vector<VertexId> perm(m.vertex_count());
    for (int i = 0; i < m.vertex_count(); ++i) perm[i] = (i * 3 + 2) % m.vertex_count();
    PlanarMap r = m.relabeled(perm);
    CHECK(r.isomorphic_to(m, false));
}

TEST_CASE("assembler rejects incoherent face sets") {
    // two triangles glued along all three edges is a sphere (theta-ish), fine;
    // but a single triangle has unmatched edges
    CHECK_THROWS_AS(assemble_from_faces(3, {{0, 1, 2}}), map_error);
    // same face twice traversed the same way cannot be oriented
    CHECK_THROWS_AS(assemble_from_faces(3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}), map_error);
}
