#include "curvlab/chains.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <queue>
#include <set>

#include "curvlab/classify.hpp"
#include "curvlab/pairing.hpp"

namespace curvlab {

namespace {

// the corner of a special triangle whose triangles are not adjacent in its
// rotation, or -1 if it is not unique
VertexId joint_vertex(const PlanarMap& m, FaceId tri) {
    VertexId found = -1;
    for (VertexId v : m.fverts(tri)) {
        if (triangles_alternate(m, v)) {
            if (found >= 0) return -1;
            found = v;
        }
    }
    return found;
}

// the edge of the triangle with triangles on both sides, or -1
EdgeId joint_edge(const PlanarMap& m, FaceId tri) {
    EdgeId found = -1;
    for (EdgeId e : m.fedges(tri)) {
        auto t = m.etype(e);
        if (t[0] == 3 && t[1] == 3) {
            if (found >= 0) return -1;
            found = e;
        }
    }
    return found;
}

FaceId step_via_edge(const PlanarMap& m, FaceId tri) {
    EdgeId e = joint_edge(m, tri);
    if (e < 0) return -1;
    auto fs = m.efaces(e);
    return fs[0] == tri ? fs[1] : fs[0];
}

FaceId step_via_vertex(const PlanarMap& m, FaceId tri) {
    VertexId v = joint_vertex(m, tri);
    if (v < 0) return -1;
    for (FaceId f : m.vfaces(v))
        if (f != tri && m.face_size(f) == 3) return f;
    return -1;
}

} // namespace

std::vector<VertexId> Chain::support_vertices(const PlanarMap& m) const {
    std::set<VertexId> s;
    for (FaceId t : triangles)
        for (VertexId v : m.fverts(t)) s.insert(v);
    return {s.begin(), s.end()};
}

std::vector<EdgeId> Chain::support_edges(const PlanarMap& m) const {
    std::set<EdgeId> s;
    for (FaceId t : triangles)
        for (EdgeId e : m.fedges(t)) s.insert(e);
    return {s.begin(), s.end()};
}

std::vector<Chain> find_chains(const PlanarMap& m) {
    auto reds = red_triangles(m);
    std::set<FaceId> red_set(reds.begin(), reds.end());
    std::set<FaceId> seen;
    std::vector<Chain> out;

    auto is_linkable = [&](FaceId f) { return f >= 0 && red_set.count(f) > 0; };

    for (FaceId start : reds) {
        if (seen.count(start)) continue;
        Chain chain;
        chain.triangles.push_back(start);
        seen.insert(start);

        // forward through the shared edge first, then alternate
        bool closed = false;
        bool via_edge = true;
        FaceId cur = start;
        while (true) {
            FaceId nt = via_edge ? step_via_edge(m, cur) : step_via_vertex(m, cur);
            if (nt == start && !via_edge) {
                closed = true;
                break;
            }
            if (!is_linkable(nt) || seen.count(nt)) break;
            if (via_edge)
                chain.edge_joints.push_back(joint_edge(m, cur));
            else
                chain.vertex_joints.push_back(joint_vertex(m, cur));
            chain.triangles.push_back(nt);
            seen.insert(nt);
            cur = nt;
            via_edge = !via_edge;
        }
        if (closed) {
            // the closing link is the shared corner of the last and first
            // triangles; pairs (2k, 2k+1) then share edge_joints[k] and
            // diamonds k, k+1 meet at vertex_joints[k]
            chain.vertex_joints.push_back(joint_vertex(m, start));
            chain.closed = true;
        } else {
            // extend backwards through the vertex link of the start triangle
            via_edge = false;
            cur = start;
            std::vector<FaceId> prefix;
            std::vector<VertexId> vj;
            std::vector<EdgeId> ej;
            while (true) {
                FaceId nt = via_edge ? step_via_edge(m, cur) : step_via_vertex(m, cur);
                if (!is_linkable(nt) || seen.count(nt)) break;
                if (via_edge)
                    ej.push_back(joint_edge(m, cur));
                else
                    vj.push_back(joint_vertex(m, cur));
                prefix.push_back(nt);
                seen.insert(nt);
                cur = nt;
                via_edge = !via_edge;
            }
            std::reverse(prefix.begin(), prefix.end());
            prefix.insert(prefix.end(), chain.triangles.begin(), chain.triangles.end());
            chain.triangles = std::move(prefix);
            std::reverse(vj.begin(), vj.end());
            std::reverse(ej.begin(), ej.end());
            vj.insert(vj.end(), chain.vertex_joints.begin(), chain.vertex_joints.end());
            ej.insert(ej.end(), chain.edge_joints.begin(), chain.edge_joints.end());
            chain.vertex_joints = std::move(vj);
            chain.edge_joints = std::move(ej);
        }
        out.push_back(std::move(chain));
    }
    return out;
}

PlanarMap chain_surgery(const PlanarMap& m, const Chain& chain) {
    if (!chain.closed) throw chain_error("surgery requires a closed chain");
    std::set<FaceId> tri_set(chain.triangles.begin(), chain.triangles.end());
    auto sup_edges_v = chain.support_edges(m);
    std::set<EdgeId> sup_edges(sup_edges_v.begin(), sup_edges_v.end());
    auto sup_verts_v = chain.support_vertices(m);
    std::set<VertexId> sup_verts(sup_verts_v.begin(), sup_verts_v.end());

    // label the two complementary regions by flooding face adjacency across
    // non-support edges
    std::vector<int> region(m.face_count(), -1);
    int regions = 0;
    for (FaceId f0 = 0; f0 < m.face_count(); ++f0) {
        if (region[f0] >= 0 || tri_set.count(f0)) continue;
        int id = regions++;
        std::queue<FaceId> q;
        q.push(f0);
        region[f0] = id;
        while (!q.empty()) {
            FaceId f = q.front();
            q.pop();
            for (EdgeId e : m.fedges(f)) {
                if (sup_edges.count(e)) continue;
                for (FaceId g : m.efaces(e)) {
                    if (g == f || tri_set.count(g) || region[g] >= 0) continue;
                    region[g] = id;
                    q.push(g);
                }
            }
        }
    }
    if (regions != 2)
        throw chain_error("chain support does not separate the sphere into two regions");

    auto interior_count = [&](int id) {
        int n = 0;
        for (VertexId v = 0; v < m.vertex_count(); ++v) {
            if (sup_verts.count(v)) continue;
            if (region[m.face_of(m.vertex_dart(v))] == id) ++n;
        }
        return n;
    };
    int n0 = interior_count(0), n1 = interior_count(1);
    int keep = n0 >= n1 ? 0 : 1;

    // Boundary walks of the two sides: around the chain, the shared corners
    // alternate with the shared-edge endpoint facing each side.
    const int diamonds = chain.length() / 2;
    if (static_cast<int>(chain.edge_joints.size()) != diamonds ||
        static_cast<int>(chain.vertex_joints.size()) != diamonds)
        throw chain_error("inconsistent chain bookkeeping");
    auto side_of = [&](VertexId v) {
        for (FaceId f : m.vfaces(v))
            if (!tri_set.count(f)) return region[f];
        throw chain_error("shared-edge endpoint with no side faces");
    };
    const int T = 2 * diamonds;
    std::array<std::vector<VertexId>, 2> walk;
    walk[0].resize(T);
    walk[1].resize(T);
    for (int k = 0; k < diamonds; ++k) {
        auto vs = m.everts(chain.edge_joints[k]);
        int s0 = side_of(vs[0]), s1 = side_of(vs[1]);
        if (s0 == s1) throw chain_error("shared edge does not separate the sides");
        walk[s0][2 * k] = vs[0];
        walk[s1][2 * k] = vs[1];
        walk[0][2 * k + 1] = walk[1][2 * k + 1] = chain.vertex_joints[k];
    }
    // the side face along each boundary step
    auto face_sizes = [&](int side) {
        std::vector<int> out(T);
        for (int t = 0; t < T; ++t) {
            EdgeId e = m.find_edge(walk[side][t], walk[side][(t + 1) % T]);
            if (e < 0) throw chain_error("boundary walk is not a closed path");
            auto fs = m.efaces(e);
            FaceId f = tri_set.count(fs[0]) ? fs[1] : fs[0];
            out[t] = m.face_size(f);
        }
        return out;
    };

    int other = 1 - keep;
    auto keep_sizes = face_sizes(keep);
    std::vector<FaceId> keep_faces;
    for (FaceId f = 0; f < m.face_count(); ++f)
        if (!tri_set.count(f) && region[f] == keep) keep_faces.push_back(f);

    // Try the structure-matching alignments of the replaced side's boundary
    // onto the kept side's until the glued map validates.
    for (int dir : {0, 1}) {
        std::vector<VertexId> ow = walk[other];
        std::vector<int> osz = face_sizes(other); // indexed by original positions
        if (dir) {
            std::reverse(ow.begin(), ow.end());
            std::rotate(ow.begin(), ow.end() - 1, ow.end()); // keep slot parity
        }
        for (int shift = 0; shift < T; shift += 2) {
            bool match = true;
            for (int t = 0; t < T && match; ++t) {
                int kt = (t + shift) % T;
                if (m.vtype(ow[t]) != m.vtype(walk[keep][kt])) match = false;
                int of = dir ? osz[(T - t - 1 + T) % T] : osz[t];
                // compare the face between positions t, t+1 of the reindexed
                // walk against the kept side
                int kf = keep_sizes[kt];
                if (of != kf) match = false;
            }
            if (!match) continue;

            std::map<VertexId, VertexId> phi; // kept boundary -> other boundary
            bool consistent = true;
            for (int t = 0; t < T && consistent; ++t) {
                VertexId from = walk[keep][(t + shift) % T];
                auto [it, fresh] = phi.emplace(from, ow[t]);
                if (!fresh && it->second != ow[t]) consistent = false;
            }
            if (!consistent) continue;

            std::vector<std::vector<VertexId>> faces;
            for (FaceId f : chain.triangles) faces.push_back(m.fverts(f));
            for (FaceId f : keep_faces) faces.push_back(m.fverts(f));
            int next_id = m.vertex_count();
            std::map<VertexId, VertexId> copy_id;
            auto mirror_of = [&](VertexId v) {
                auto bt = phi.find(v);
                if (bt != phi.end()) return bt->second;
                auto it = copy_id.find(v);
                if (it != copy_id.end()) return it->second;
                int id = next_id++;
                copy_id.emplace(v, id);
                return id;
            };
            std::vector<std::vector<VertexId>> mirrored;
            bool usable = true;
            for (FaceId f : keep_faces) {
                auto cyc = m.fverts(f);
                std::reverse(cyc.begin(), cyc.end());
                for (auto& v : cyc) {
                    if (sup_verts.count(v) && !phi.count(v)) usable = false;
                    v = mirror_of(v);
                }
                mirrored.push_back(std::move(cyc));
            }
            if (!usable) continue;
            faces.insert(faces.end(), mirrored.begin(), mirrored.end());

            std::map<VertexId, VertexId> dense;
            for (auto& cyc : faces)
                for (auto& v : cyc) {
                    auto it = dense.find(v);
                    if (it == dense.end())
                        it = dense.emplace(v, static_cast<int>(dense.size())).first;
                    v = it->second;
                }
            try {
                PlanarMap glued = assemble_from_faces(static_cast<int>(dense.size()), faces);
                if (validate_pcc(m).pass() && !validate_pcc(glued).pass()) continue;
                return glued;
            } catch (const map_error&) {
                continue;
            }
        }
    }
    throw chain_error("boundary structures of the two sides do not match");
}

} // namespace curvlab
