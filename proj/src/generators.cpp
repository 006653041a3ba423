#include "curvlab/generators.hpp"

#include <array>
#include <map>
#include <vector>

namespace curvlab {

namespace {
using Cycle = std::vector<VertexId>;
using FaceList = std::vector<Cycle>;
} // namespace

PlanarMap prism(int n) {
    if (n < 3) throw generator_error("prism order must be at least 3");
    FaceList faces;
    Cycle top(n), bottom(n);
    for (int i = 0; i < n; ++i) top[i] = i;
    for (int i = 0; i < n; ++i) bottom[i] = n + (n - 1 - i);
    faces.push_back(top);
    faces.push_back(bottom);
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        faces.push_back({i, j, n + j, n + i});
    }
    return assemble_from_faces(2 * n, faces);
}

PlanarMap antiprism(int n) {
    if (n < 3) throw generator_error("antiprism order must be at least 3");
    FaceList faces;
    Cycle top(n), bottom(n);
    for (int i = 0; i < n; ++i) top[i] = i;
    for (int i = 0; i < n; ++i) bottom[i] = n + (n - 1 - i);
    faces.push_back(top);
    faces.push_back(bottom);
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        faces.push_back({i, j, n + i});
        faces.push_back({j, n + j, n + i});
    }
    return assemble_from_faces(2 * n, faces);
}

PlanarMap tetrahedron() {
    return assemble_from_faces(4, {{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {2, 3, 0}});
}

PlanarMap cube() { return prism(4); }

PlanarMap octahedron() { return antiprism(3); }

PlanarMap icosahedron() {
    // apex 0, upper ring 1..5, lower ring 6..10, apex 11
    FaceList faces;
    auto u = [](int i) { return 1 + (i % 5); };
    auto l = [](int i) { return 6 + (i % 5); };
    for (int i = 0; i < 5; ++i) faces.push_back({0, u(i), u(i + 1)});
    for (int i = 0; i < 5; ++i) {
        faces.push_back({u(i), l(i), u(i + 1)});
        faces.push_back({u(i + 1), l(i), l(i + 1)});
    }
    for (int i = 0; i < 5; ++i) faces.push_back({11, l(i + 1), l(i)});
    return assemble_from_faces(12, faces);
}

PlanarMap dodecahedron() {
    // dual of the icosahedron: one face per icosahedron vertex, listing the
    // faces around it in rotation order
    PlanarMap ico = icosahedron();
    FaceList faces;
    for (VertexId v = 0; v < ico.vertex_count(); ++v) faces.push_back(ico.vfaces(v));
    return assemble_from_faces(ico.face_count(), faces);
}

namespace {

// Shared banding for graph208_chain and g_family: a run of edge-linked
// triangle pairs ("diamonds") joined at shared corners, dressed with
// pentagons, heptagons and apex patches on both sides.
//
// Diamond i has corners j_i, q_i (one side), r_i (other side), j_{i+1}. Odd
// joints carry a heptagon on the q-side and a pentagon plus apex patch on
// the r-side; even joints the opposite. Indices are cyclic for the closed
// band and clamped for open runs, where the caps substitute for the missing
// neighbors.
struct BandBuilder {
    int m = 0;      // diamonds
    bool closed = false;
    int next_id = 0;
    FaceList faces;
    std::vector<int> j, q, r, x, y;
    std::map<int, int> t, bl, br; // up apex patches, even joints
    std::map<int, int> s, dl, dr; // down apex patches, odd joints

    int fresh() { return next_id++; }

    void alloc_core() {
        int joints = closed ? m : m + 1;
        for (int i = 0; i < joints; ++i) j.push_back(fresh());
        for (int i = 0; i < m; ++i) q.push_back(fresh());
        for (int i = 0; i < m; ++i) r.push_back(fresh());
        for (int i = 0; i < m; ++i) x.push_back(fresh());
        for (int i = 0; i < m; ++i) y.push_back(fresh());
    }

    int J(int i) const { return j[closed ? (i % m + m) % m : i]; }
    int Q(int i) const { return q[(i % m + m) % m]; }
    int R(int i) const { return r[(i % m + m) % m]; }
    int X(int i) const { return x[(i % m + m) % m]; }
    int Y(int i) const { return y[(i % m + m) % m]; }

    bool interior(int i) const { return closed || (i >= 1 && i <= m - 1); }

    void chain_triangles() {
        for (int i = 0; i < m; ++i) {
            faces.push_back({J(i), Q(i), R(i)});
            faces.push_back({Q(i), J(i + 1), R(i)});
        }
    }

    // pentagon + apex patch above even joints, below odd joints
    void apex_units() {
        for (int i = 0; i < (closed ? m : m); ++i) {
            if (!interior(i)) continue;
            if (i % 2 == 0) {
                int ti = t[i] = fresh(), bli = bl[i] = fresh(), bri = br[i] = fresh();
                faces.push_back({X(i - 1), Q(i - 1), J(i), Q(i), X(i)}); // pentagon
                faces.push_back({X(i - 1), X(i), ti});
                faces.push_back({X(i), bri, ti});
                faces.push_back({X(i - 1), bli, ti});
            } else {
                int si = s[i] = fresh(), dli = dl[i] = fresh(), dri = dr[i] = fresh();
                faces.push_back({Y(i - 1), R(i - 1), J(i), R(i), Y(i)}); // pentagon
                faces.push_back({Y(i - 1), Y(i), si});
                faces.push_back({Y(i), dri, si});
                faces.push_back({Y(i - 1), dli, si});
            }
        }
    }

    // heptagons opposite the pentagons; bl/br roles may be provided by caps
    void heptagons(const std::map<int, int>& bl_role, const std::map<int, int>& br_role,
                   const std::map<int, int>& dl_role, const std::map<int, int>& dr_role) {
        auto pick = [](const std::map<int, int>& own, const std::map<int, int>& role, int k) {
            auto it = own.find(k);
            if (it != own.end()) return it->second;
            auto jt = role.find(k);
            if (jt == role.end()) throw generator_error("missing apex role " + std::to_string(k));
            return jt->second;
        };
        for (int i = 0; i < m; ++i) {
            if (!interior(i)) continue;
            int ip = closed ? (i + 1) % m : i + 1;
            int im = closed ? (i - 1 + m) % m : i - 1;
            if (i % 2 == 1) {
                faces.push_back({Q(i - 1), J(i), Q(i), X(i), pick(bl, bl_role, ip),
                                 pick(br, br_role, im), X(i - 1)});
            } else {
                faces.push_back({R(i - 1), J(i), R(i), Y(i), pick(dl, dl_role, ip),
                                 pick(dr, dr_role, im), Y(i - 1)});
            }
        }
    }
};

} // namespace

PlanarMap graph208_chain() {
    BandBuilder b;
    b.m = 26;
    b.closed = true;
    b.alloc_core();
    b.chain_triangles();
    b.apex_units();
    b.heptagons({}, {}, {}, {});
    // the two 39-gon rims
    Cycle outer, inner;
    for (int i = 0; i < 26; i += 2) {
        outer.push_back(b.bl[i]);
        outer.push_back(b.t[i]);
        outer.push_back(b.br[i]);
    }
    for (int i = 1; i < 26; i += 2) {
        inner.push_back(b.dl[i]);
        inner.push_back(b.s[i]);
        inner.push_back(b.dr[i]);
    }
    b.faces.push_back(outer);
    b.faces.push_back(inner);
    return assemble_from_faces(b.next_id, b.faces);
}

namespace {

// One-diamond patch covering outer sizes 8..10.
PlanarMap small_family(int n) {
    BandBuilder b;
    b.m = 1;
    b.alloc_core();
    b.chain_triangles();
    int j0 = b.J(0), j1 = b.J(1), q0 = b.Q(0), r0 = b.R(0), x0 = b.X(0), y0 = b.Y(0);
    int A = b.fresh(), B = b.fresh(), A2 = b.fresh(), B2 = b.fresh();
    int C = b.fresh(), D = b.fresh(), C2 = b.fresh(), D2 = b.fresh();
    b.faces.push_back({x0, q0, j0, A, B});   // left pentagon, q side
    b.faces.push_back({y0, r0, j0, A2, B2}); // left pentagon, r side
    b.faces.push_back({j0, A, A2});
    b.faces.push_back({j1, q0, x0, C, D});
    b.faces.push_back({D2, j1, r0, y0, C2});
    b.faces.push_back({j1, D, D2});
    if (n >= 9) {
        int M = b.fresh();
        b.faces.push_back({x0, B, M});
        b.faces.push_back({x0, M, C});
    } else {
        b.faces.push_back({x0, B, C});
    }
    if (n >= 10) {
        int M = b.fresh();
        b.faces.push_back({y0, B2, M});
        b.faces.push_back({y0, M, C2});
    } else {
        b.faces.push_back({y0, B2, C2});
    }
    return assemble_from_faces(b.next_id, b.faces, true);
}

} // namespace

PlanarMap g_family(int n) {
    if (n < 8 || n > 41) throw generator_error("family size out of range 8..41");
    if (n <= 10) return small_family(n);

    // n = 3k + capL + capR with caps of 4 or 5 outer edges, k maximal
    int k = (n - 8) / 3;
    int rem = n - 3 * k; // 8, 9 or 10
    int capL = rem >= 9 ? 5 : 4;
    int capR = rem == 10 ? 5 : 4;
    int m = k + 1; // diamonds

    BandBuilder b;
    b.m = m;
    b.alloc_core();
    b.chain_triangles();
    b.apex_units();

    std::map<int, int> bl_role, br_role, dl_role, dr_role;

    // left cap at joint 0: q-side needs the heptagon b-role, r-side only the
    // pentagon; the cap pentagon pair meets in a triangle at the joint
    int c1 = b.fresh(), c2 = b.fresh(), gammaL = b.fresh(), phiL = b.fresh();
    br_role[0] = gammaL;
    {
        int x0 = b.X(0);
        if (capL == 5) {
            int epsL = b.fresh();
            b.faces.push_back({x0, gammaL, epsL});
            b.faces.push_back({x0, epsL, phiL});
        } else {
            b.faces.push_back({x0, gammaL, phiL});
        }
        b.faces.push_back({phiL, x0, b.Q(0), b.J(0), c1});
        b.faces.push_back({c2, b.J(0), b.R(0), b.Y(0), b.dl.at(1)});
        b.faces.push_back({b.J(0), c1, c2});
    }

    // right cap at joint m: the incomplete side depends on the parity of m
    int c3 = b.fresh(), c4 = b.fresh(), roleR = b.fresh(), phiR = b.fresh();
    {
        int xm = b.X(m - 1), ym = b.Y(m - 1);
        if (m % 2 == 1) {
            // q-side ends with a full apex patch; r-side needs the d-role
            dl_role[m] = roleR;
            if (capR == 5) {
                int epsR = b.fresh();
                b.faces.push_back({ym, roleR, epsR});
                b.faces.push_back({ym, epsR, phiR});
            } else {
                b.faces.push_back({ym, roleR, phiR});
            }
            b.faces.push_back({b.br.at(m - 1), xm, b.Q(m - 1), b.J(m), c3});
            b.faces.push_back({phiR, ym, b.R(m - 1), b.J(m), c4});
            b.faces.push_back({b.J(m), c4, c3});
        } else {
            bl_role[m] = roleR;
            if (capR == 5) {
                int epsR = b.fresh();
                b.faces.push_back({xm, roleR, epsR});
                b.faces.push_back({xm, epsR, phiR});
            } else {
                b.faces.push_back({xm, roleR, phiR});
            }
            b.faces.push_back({c3, b.J(m), b.Q(m - 1), xm, phiR});
            b.faces.push_back({b.dr.at(m - 1), ym, b.R(m - 1), b.J(m), c4});
            b.faces.push_back({b.J(m), c4, c3});
        }
    }
    b.heptagons(bl_role, br_role, dl_role, dr_role);
    return assemble_from_faces(b.next_id, b.faces, true);
}

namespace {

// Building blocks of the quilt graph: a 13-gon "flower" with its triangle
// collar, paired through shared squares, plus satellite square units.
struct Flower {
    int t;
    std::array<int, 13> v; // v[1..12]
    std::array<int, 6> w;  // w[1..5]
    int p, q;
};

} // namespace

PlanarMap graph208_quilt() {
    int next = 0;
    auto fresh = [&next] { return next++; };
    FaceList faces;

    // cube scaffolding: vertex = (i, j, k), faces x-, x+, y-, y+, z-, z+
    auto vid = [](int i, int jj, int k) { return i + 2 * jj + 4 * k; };
    enum { FXN = 0, FXP = 1, FYN = 2, FYP = 3, FZN = 4, FZP = 5 };

    std::array<Flower, 8> fl;
    for (int c = 0; c < 8; ++c) {
        fl[c].t = fresh();
        for (int i = 1; i <= 12; ++i) fl[c].v[i] = fresh();
        for (int i = 1; i <= 5; ++i) fl[c].w[i] = fresh();
        fl[c].p = fresh();
        fl[c].q = fresh();
    }
    // satellite units: per cube face, P per boundary edge and z per corner
    struct Unit {
        std::array<int, 4> P, z;
    };
    std::array<Unit, 6> un;
    for (int f = 0; f < 6; ++f)
        for (int i = 0; i < 4; ++i) {
            un[f].P[i] = fresh();
            un[f].z[i] = fresh();
        }

    // flower interiors
    for (int c = 0; c < 8; ++c) {
        const Flower& F = fl[c];
        Cycle tg;
        tg.push_back(F.t);
        for (int i = 1; i <= 12; ++i) tg.push_back(F.v[i]);
        faces.push_back(tg); // the 13-gon
        faces.push_back({F.t, F.v[1], F.p});
        faces.push_back({F.p, F.t, F.q});
        faces.push_back({F.t, F.q, F.v[12]});
        for (int k = 1; k <= 5; ++k) faces.push_back({F.v[2 * k], F.v[2 * k + 1], F.w[k]});
    }
    // dimer squares along vertical cube edges
    for (int i = 0; i < 2; ++i)
        for (int jj = 0; jj < 2; ++jj) {
            const Flower& A = fl[vid(i, jj, 0)];
            const Flower& B = fl[vid(i, jj, 1)];
            faces.push_back({A.p, A.q, B.p, B.q});
        }

    // cube face boundaries: edges in cyclic order with the corner after each
    // edge; an edge is (corner, corner)
    struct CubeEdge {
        int a, b; // cube vertex ids
        bool vertical;
    };
    auto face_cycle = [&](int f) {
        // returns 4 corners in cyclic order; edge i joins corner i-1 and i
        std::array<int, 4> c{};
        switch (f) {
            case FXN: c = {vid(0, 0, 0), vid(0, 1, 0), vid(0, 1, 1), vid(0, 0, 1)}; break;
            case FXP: c = {vid(1, 0, 0), vid(1, 0, 1), vid(1, 1, 1), vid(1, 1, 0)}; break;
            case FYN: c = {vid(0, 0, 0), vid(0, 0, 1), vid(1, 0, 1), vid(1, 0, 0)}; break;
            case FYP: c = {vid(0, 1, 0), vid(1, 1, 0), vid(1, 1, 1), vid(0, 1, 1)}; break;
            case FZN: c = {vid(0, 0, 0), vid(1, 0, 0), vid(1, 1, 0), vid(0, 1, 0)}; break;
            default:  c = {vid(0, 0, 1), vid(0, 1, 1), vid(1, 1, 1), vid(1, 0, 1)}; break;
        }
        return c;
    };

    // unit interiors: square and corner triangles
    for (int f = 0; f < 6; ++f) {
        faces.push_back({un[f].P[0], un[f].P[1], un[f].P[2], un[f].P[3]});
        for (int i = 0; i < 4; ++i)
            faces.push_back({un[f].P[i], un[f].P[(i + 1) % 4], un[f].z[i]});
    }

    // port bookkeeping per flower: ports 1..6 in rotation order around the
    // flower; port -> (cube edge key, cube face). Vertical ports are 1 and 6.
    // k = 0 flowers start at the x face, k = 1 flowers at the y face.
    auto faces_of_vertex = [&](int cv) {
        int i = cv & 1, jj = (cv >> 1) & 1, k = (cv >> 2) & 1;
        int fx = i ? FXP : FXN, fy = jj ? FYP : FYN, fz = k ? FZP : FZN;
        return std::array<int, 3>{fx, fy, fz};
    };
    auto edge_key = [](int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };

    struct Port {
        std::pair<int, int> edge;
        int face;
    };
    // port table: per cube vertex, ports[1..6]
    std::map<int, std::array<Port, 7>> ports;
    for (int cv = 0; cv < 8; ++cv) {
        int i = cv & 1, jj = (cv >> 1) & 1, k = (cv >> 2) & 1;
        auto [fx, fy, fz] = faces_of_vertex(cv);
        int other_x = vid(1 - i, jj, k); // along the x-direction edge
        int other_y = vid(i, 1 - jj, k); // along the y-direction edge
        int other_z = vid(i, jj, 1 - k); // along the vertical edge
        auto ex = edge_key(cv, other_x), ey = edge_key(cv, other_y), ez = edge_key(cv, other_z);
        std::array<Port, 7> P{};
        if (k == 0) {
            P[1] = {ez, fx};
            P[2] = {ey, fx};
            P[3] = {ey, fz};
            P[4] = {ex, fz};
            P[5] = {ex, fy};
            P[6] = {ez, fy};
        } else {
            P[1] = {ez, fy};
            P[2] = {ex, fy};
            P[3] = {ex, fz};
            P[4] = {ey, fz};
            P[5] = {ey, fx};
            P[6] = {ez, fx};
        }
        ports[cv] = P;
    }
    auto port_of = [&](int cv, std::pair<int, int> e, int f) {
        for (int p = 1; p <= 6; ++p)
            if (ports[cv][p].edge == e && ports[cv][p].face == f) return p;
        throw generator_error("missing quilt port");
    };
    // the unit corner contact of flower cv on face f: w1, w3 or w5 by which
    // consecutive port pair shares f
    auto contact_w = [&](int cv, int f) {
        for (int p = 1; p <= 5; ++p)
            if (ports[cv][p].face == f && ports[cv][p + 1].face == f) return p; // w_p
        throw generator_error("missing quilt contact");
    };
    // corner index of cube vertex cv on face f
    auto corner_index = [&](int f, int cv) {
        auto cyc = face_cycle(f);
        for (int i = 0; i < 4; ++i)
            if (cyc[i] == cv) return i;
        throw generator_error("cube vertex not on face");
    };
    // unit P index for cube edge e on face f: edge i of the face joins
    // corners i and i+1 of face_cycle
    auto p_index = [&](int f, std::pair<int, int> e) {
        auto cyc = face_cycle(f);
        for (int i = 0; i < 4; ++i)
            if (edge_key(cyc[i], cyc[(i + 1) % 4]) == e) return i;
        throw generator_error("cube edge not on face");
    };
    // with corner triangles [P_i, P_{i+1}, z_i], z_i touches corners i+1
    auto z_index = [&](int f, int cv) {
        auto cyc = face_cycle(f);
        for (int i = 0; i < 4; ++i)
            if (cyc[(i + 1) % 4] == cv) return i;
        throw generator_error("cube vertex not on face");
    };

    // the 24 eleven-gons, one per (cube edge, incident face)
    struct EdgeRec {
        std::pair<int, int> e;
        bool vertical;
        std::array<int, 2> fs;
    };
    std::vector<EdgeRec> cube_edges;
    for (int cv = 0; cv < 8; ++cv) {
        int i = cv & 1, jj = (cv >> 1) & 1, k = (cv >> 2) & 1;
        if (i == 0)
            cube_edges.push_back({edge_key(cv, vid(1, jj, k)), false,
                                  {jj ? FYP : FYN, k ? FZP : FZN}});
        if (jj == 0)
            cube_edges.push_back({edge_key(cv, vid(i, 1, k)), false,
                                  {i ? FXP : FXN, k ? FZP : FZN}});
        if (k == 0)
            cube_edges.push_back({edge_key(cv, vid(i, jj, 1)), true,
                                  {i ? FXP : FXN, jj ? FYP : FYN}});
    }

    for (const auto& rec : cube_edges) {
        for (int f : rec.fs) {
            int a = rec.e.first, bb = rec.e.second;
            int Pid = un[f].P[p_index(f, rec.e)];
            int za = un[f].z[z_index(f, a)];
            int zb = un[f].z[z_index(f, bb)];
            if (rec.vertical) {
                // end elevens: p-side of the port-1 flower, q-side of the
                // port-6 flower, crossing the dimer square
                int A = (port_of(a, rec.e, f) == 1) ? a : bb;
                int B = (A == a) ? bb : a;
                if (port_of(B, rec.e, f) != 6) throw generator_error("bad vertical port pairing");
                const Flower& FA = fl[A];
                const Flower& FB = fl[B];
                int zA = un[f].z[z_index(f, A)], zB = un[f].z[z_index(f, B)];
                faces.push_back({FA.p, FA.v[1], FA.v[2], FA.w[1], zA, Pid, zB, FB.w[5], FB.v[11],
                                 FB.v[12], FB.q});
            } else {
                // middle elevens
                auto side = [&](int cv) {
                    int p = port_of(cv, rec.e, f);
                    // ports 2..5 use collar vertices w_{p-1}..w_p; the z side
                    // is w_{p-1} for even p, w_p for odd p
                    const Flower& F = fl[cv];
                    bool z_low = (p % 2 == 0);
                    std::array<int, 4> seq{};
                    if (z_low)
                        seq = {F.w[p - 1], F.v[2 * p - 1], F.v[2 * p], F.w[p]};
                    else
                        seq = {F.w[p], F.v[2 * p], F.v[2 * p - 1], F.w[p - 1]};
                    return seq; // z-contact first, direct-contact last
                };
                auto sa = side(a), sb = side(bb);
                faces.push_back({Pid, za, sa[0], sa[1], sa[2], sa[3], sb[3], sb[2], sb[1], sb[0], zb});
            }
        }
    }

    return assemble_from_faces(next, faces);
}

PlanarMap multi_incidence_example(int face_size) {
    if (face_size != 10 && face_size != 11)
        throw generator_error("multi-incidence examples exist for sizes 10 and 11");
    int next = 0;
    auto fresh = [&next] { return next++; };
    FaceList faces;

    // a triangulated flap whose rim the outer face walks once, entering and
    // leaving at the anchor vertex
    auto flap = [&](int rim) {
        int anchor = fresh();
        std::vector<int> bs;
        for (int i = 0; i < rim; ++i) bs.push_back(fresh());
        int c = fresh();
        faces.push_back({anchor, bs[0], bs[rim - 1]});
        faces.push_back({bs[0], c, bs[rim - 1]});
        for (int i = 0; i + 1 < rim; ++i) faces.push_back({bs[i], bs[i + 1], c});
        std::vector<int> walk{anchor};
        for (int i = 0; i < rim; ++i) walk.push_back(bs[i]);
        walk.push_back(anchor);
        return walk;
    };

    auto walk_a = flap(3);
    auto walk_b = flap(face_size == 10 ? 3 : 4);

    // the outer face walks both rims and crosses the connecting edge twice
    Cycle outer;
    for (int v : walk_a) outer.push_back(v);
    for (int v : walk_b) outer.push_back(v);
    faces.push_back(outer);
    return assemble_from_faces(next, faces);
}

} // namespace curvlab
