#include "curvlab/planar_map.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace curvlab {

PlanarMap PlanarMap::build(const std::vector<std::vector<VertexId>>& rotation_lists) {
    const int n = static_cast<int>(rotation_lists.size());
    // position of neighbor w in v's list
    std::vector<std::map<VertexId, int>> pos(n);
    for (VertexId v = 0; v < n; ++v) {
        for (int i = 0; i < static_cast<int>(rotation_lists[v].size()); ++i) {
            VertexId w = rotation_lists[v][i];
            if (w < 0 || w >= n)
                throw map_error(MapError::UnknownId,
                                "vertex " + std::to_string(v) + " lists unknown neighbor " + std::to_string(w));
            if (w == v)
                throw map_error(MapError::LoopEdge, "loop at vertex " + std::to_string(v));
            if (!pos[v].emplace(w, i).second)
                throw map_error(MapError::MultiEdge,
                                "vertex " + std::to_string(v) + " lists neighbor " + std::to_string(w) + " twice");
        }
    }
    std::vector<int> start(n + 1, 0);
    for (VertexId v = 0; v < n; ++v) start[v + 1] = start[v] + static_cast<int>(rotation_lists[v].size());
    const int dart_count = start[n];

    PlanarMap m;
    m.twin_.assign(dart_count, -1);
    m.rot_.assign(dart_count, -1);
    m.rot_inv_.assign(dart_count, -1);
    m.origin_.assign(dart_count, -1);
    m.vertex_dart_.assign(n, -1);
    m.degree_.assign(n, 0);

    for (VertexId v = 0; v < n; ++v) {
        const int deg = static_cast<int>(rotation_lists[v].size());
        m.degree_[v] = deg;
        if (deg > 0) m.vertex_dart_[v] = start[v];
        for (int i = 0; i < deg; ++i) {
            DartId d = start[v] + i;
            m.origin_[d] = v;
            m.rot_[d] = start[v] + (i + 1) % deg;
            m.rot_inv_[d] = start[v] + (i + deg - 1) % deg;
            VertexId w = rotation_lists[v][i];
            auto it = pos[w].find(v);
            if (it == pos[w].end())
                throw map_error(MapError::NonSymmetricAdjacency,
                                "vertex " + std::to_string(v) + " lists " + std::to_string(w) +
                                    " but not conversely");
            m.twin_[d] = start[w] + it->second;
        }
    }

    // edges = twin orbits
    m.edge_.assign(dart_count, -1);
    for (DartId d = 0; d < dart_count; ++d) {
        if (m.edge_[d] >= 0) continue;
        EdgeId e = static_cast<int>(m.edge_dart_.size());
        m.edge_dart_.push_back(d);
        m.edge_[d] = e;
        m.edge_[m.twin_[d]] = e;
    }

    // connectivity over darts (twin and rot generate a transitive action)
    if (n == 0) throw map_error(MapError::NotConnected, "empty graph");
    if (dart_count == 0) {
        if (n > 1) throw map_error(MapError::NotConnected, "isolated vertices");
        throw map_error(MapError::NotSphere, "single vertex with no darts is not a 2-cell embedding");
    }
    for (VertexId v = 0; v < n; ++v)
        if (m.degree_[v] == 0) throw map_error(MapError::NotConnected, "isolated vertex " + std::to_string(v));
    {
        std::vector<char> seen(dart_count, 0);
        std::queue<DartId> q;
        q.push(0);
        seen[0] = 1;
        int cnt = 0;
        while (!q.empty()) {
            DartId d = q.front();
            q.pop();
            ++cnt;
            for (DartId nd : {m.twin_[d], m.rot_[d]}) {
                if (!seen[nd]) {
                    seen[nd] = 1;
                    q.push(nd);
                }
            }
        }
        if (cnt != dart_count) throw map_error(MapError::NotConnected, "graph is not connected");
    }

    m.derive_faces();

    const long euler = static_cast<long>(n) - m.edge_count() + m.face_count();
    if (euler != 2)
        throw map_error(MapError::NotSphere,
                        "V-E+F = " + std::to_string(euler) + ", embedding is not spherical");
    return m;
}

void PlanarMap::derive_faces() {
    const int dn = dart_count();
    face_.assign(dn, -1);
    face_dart_.clear();
    face_size_.clear();
    for (DartId d0 = 0; d0 < dn; ++d0) {
        if (face_[d0] >= 0) continue;
        FaceId f = static_cast<int>(face_dart_.size());
        face_dart_.push_back(d0);
        int size = 0;
        DartId d = d0;
        do {
            face_[d] = f;
            ++size;
            d = successor(d);
        } while (d != d0);
        face_size_.push_back(size);
    }
}

std::vector<DartId> PlanarMap::vdarts(VertexId v) const {
    check_vertex(v);
    std::vector<DartId> out;
    out.reserve(degree_[v]);
    DartId d0 = vertex_dart_[v], d = d0;
    do {
        out.push_back(d);
        d = rot_[d];
    } while (d != d0);
    return out;
}

std::vector<DartId> PlanarMap::fdarts(FaceId f) const {
    check_face(f);
    std::vector<DartId> out;
    out.reserve(face_size_[f]);
    DartId d0 = face_dart_[f], d = d0;
    do {
        out.push_back(d);
        d = successor(d);
    } while (d != d0);
    return out;
}

std::vector<FaceId> PlanarMap::vfaces(VertexId v) const {
    std::vector<FaceId> out;
    for (DartId d : vdarts(v)) out.push_back(face_[d]);
    return out;
}

std::vector<EdgeId> PlanarMap::vedges(VertexId v) const {
    std::vector<EdgeId> out;
    for (DartId d : vdarts(v)) out.push_back(edge_[d]);
    return out;
}

std::vector<VertexId> PlanarMap::neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (DartId d : vdarts(v)) out.push_back(head(d));
    return out;
}

FaceVector PlanarMap::vtype(VertexId v) const {
    FaceVector t;
    for (FaceId f : vfaces(v)) t.push_back(face_size_[f]);
    std::sort(t.begin(), t.end());
    return t;
}

std::vector<int> PlanarMap::vtype_cyclic(VertexId v) const {
    std::vector<int> t;
    for (FaceId f : vfaces(v)) t.push_back(face_size_[f]);
    return t;
}

SideVector PlanarMap::etype(EdgeId e) const {
    auto fs = efaces(e);
    SideVector t{face_size_[fs[0]], face_size_[fs[1]]};
    if (t[0] > t[1]) std::swap(t[0], t[1]);
    return t;
}

std::array<VertexId, 2> PlanarMap::everts(EdgeId e) const {
    check_edge(e);
    DartId d = edge_dart_[e];
    return {origin_[d], head(d)};
}

std::array<FaceId, 2> PlanarMap::efaces(EdgeId e) const {
    check_edge(e);
    DartId d = edge_dart_[e];
    return {face_[d], face_[twin_[d]]};
}

std::vector<VertexId> PlanarMap::fverts(FaceId f) const {
    std::vector<VertexId> out;
    for (DartId d : fdarts(f)) out.push_back(origin_[d]);
    return out;
}

std::vector<EdgeId> PlanarMap::fedges(FaceId f) const {
    std::vector<EdgeId> out;
    for (DartId d : fdarts(f)) out.push_back(edge_[d]);
    return out;
}

EdgeId PlanarMap::find_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    for (DartId d : vdarts(u))
        if (head(d) == v) return edge_[d];
    return -1;
}

FaceId PlanarMap::opp(VertexId v, FaceId t) const {
    check_vertex(v);
    check_face(t);
    if (face_size_[t] != 3) throw map_error(MapError::NotATriangle, "opp: face is not a triangle");
    bool incident = false;
    DartId far = -1;
    for (DartId d : fdarts(t)) {
        if (origin_[d] == v)
            incident = true;
        else if (head(d) != v)
            far = d; // the edge of t avoiding v
    }
    if (!incident || far < 0) throw map_error(MapError::NotIncident, "opp: vertex not incident to triangle");
    return face_[twin_[far]];
}

std::vector<std::vector<VertexId>> PlanarMap::rotation_lists() const {
    std::vector<std::vector<VertexId>> out(vertex_count());
    for (VertexId v = 0; v < vertex_count(); ++v) out[v] = neighbors(v);
    return out;
}

PlanarMap PlanarMap::mirrored() const {
    auto lists = rotation_lists();
    for (auto& l : lists) std::reverse(l.begin(), l.end());
    return build(lists);
}

PlanarMap PlanarMap::relabeled(const std::vector<VertexId>& perm) const {
    std::vector<std::vector<VertexId>> lists(vertex_count());
    auto old_lists = rotation_lists();
    for (VertexId v = 0; v < vertex_count(); ++v) {
        auto& l = lists[perm[v]];
        for (VertexId w : old_lists[v]) l.push_back(perm[w]);
    }
    return build(lists);
}

std::vector<int> PlanarMap::canonical_encoding() const {
    // Breadth-first canonical numbering of darts started from every dart;
    // the lexicographically least trace is the canonical encoding. The trace
    // records, per visited dart, the labels of rot(d) and twin(d).
    const int dn = dart_count();
    std::vector<int> best;
    std::vector<int> label(dn);
    for (DartId d0 = 0; d0 < dn; ++d0) {
        std::fill(label.begin(), label.end(), -1);
        std::vector<DartId> order;
        order.reserve(dn);
        label[d0] = 0;
        order.push_back(d0);
        std::vector<int> trace;
        trace.reserve(2 * dn);
        bool worse = false, decided = best.empty();
        for (int i = 0; i < dn && !worse; ++i) {
            DartId d = order[i];
            for (DartId nd : {rot_[d], twin_[d]}) {
                if (label[nd] < 0) {
                    label[nd] = static_cast<int>(order.size());
                    order.push_back(nd);
                }
                trace.push_back(label[nd]);
                if (!decided) {
                    size_t k = trace.size() - 1;
                    if (trace[k] < best[k]) {
                        decided = true; // strictly better, keep going
                    } else if (trace[k] > best[k]) {
                        worse = true;
                        break;
                    }
                }
            }
        }
        if (!worse && (best.empty() || trace < best)) best = std::move(trace);
    }
    return best;
}

bool PlanarMap::isomorphic_to(const PlanarMap& other, bool allow_mirror) const {
    if (vertex_count() != other.vertex_count() || edge_count() != other.edge_count() ||
        face_count() != other.face_count())
        return false;
    auto mine = canonical_encoding();
    if (mine == other.canonical_encoding()) return true;
    if (!allow_mirror) return false;
    return mine == other.mirrored().canonical_encoding();
}

int PlanarMap::max_face_size() const {
    return *std::max_element(face_size_.begin(), face_size_.end());
}

PlanarMap assemble_from_faces(int vertex_count, const std::vector<std::vector<VertexId>>& faces,
                              bool complete_boundary) {
    struct Side {
        int face;
        int pos;
    };
    // undirected edge -> the (up to two) face sides using it
    std::map<std::pair<VertexId, VertexId>, std::vector<Side>> uses;
    auto key = [](VertexId a, VertexId b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    };
    const int nf = static_cast<int>(faces.size());
    for (int f = 0; f < nf; ++f) {
        const auto& cyc = faces[f];
        if (cyc.size() < 2) throw map_error(MapError::InconsistentFaces, "degenerate face cycle");
        for (int i = 0; i < static_cast<int>(cyc.size()); ++i) {
            VertexId a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            if (a == b) throw map_error(MapError::LoopEdge, "face cycle repeats a vertex consecutively");
            uses[key(a, b)].push_back({f, i});
        }
    }
    for (auto& [k, v] : uses) {
        size_t need_min = complete_boundary ? 1 : 2;
        if (v.size() < need_min || v.size() > 2)
            throw map_error(MapError::InconsistentFaces,
                            "edge " + std::to_string(k.first) + "-" + std::to_string(k.second) +
                                " bounds " + std::to_string(v.size()) + " face sides");
    }

    // Choose a flip state per face so every directed edge occurs exactly once.
    std::vector<int> flip(nf, -1);
    auto directed = [&](int f, int pos, bool flipped) {
        const auto& cyc = faces[f];
        VertexId a = cyc[pos], b = cyc[(pos + 1) % cyc.size()];
        return flipped ? std::make_pair(b, a) : std::make_pair(a, b);
    };
    for (int seed = 0; seed < nf; ++seed) {
        if (flip[seed] >= 0) continue;
        flip[seed] = 0;
        std::queue<int> q;
        q.push(seed);
        while (!q.empty()) {
            int f = q.front();
            q.pop();
            const auto& cyc = faces[f];
            for (int i = 0; i < static_cast<int>(cyc.size()); ++i) {
                auto& sides = uses[key(cyc[i], cyc[(i + 1) % cyc.size()])];
                if (sides.size() == 1) continue; // boundary edge, no constraint
                Side a = sides[0], b = sides[1];
                Side self = (a.face == f && a.pos == i) ? a : b;
                Side peer = (a.face == f && a.pos == i) ? b : a;
                if (peer.face == f && peer.pos == self.pos) continue;
                auto mine = directed(f, self.pos, flip[f]);
                if (peer.face == f) {
                    // Same face uses this edge twice (a bridge): the two
                    // traversals must already be opposite under one flip state.
                    auto other = directed(f, peer.pos, flip[f]);
                    if (other != std::make_pair(mine.second, mine.first))
                        throw map_error(MapError::InconsistentFaces, "face traverses an edge twice same way");
                    continue;
                }
                // peer must traverse the edge in the reverse direction
                auto peer_raw = directed(peer.face, peer.pos, false);
                int need = (peer_raw == std::make_pair(mine.second, mine.first)) ? 0 : 1;
                if (flip[peer.face] < 0) {
                    flip[peer.face] = need;
                    q.push(peer.face);
                } else if (flip[peer.face] != need) {
                    throw map_error(MapError::InconsistentFaces, "faces cannot be coherently oriented");
                }
            }
        }
    }

    // Oriented face cycles now induce the rotation: the successor of the
    // directed edge (u -> v) inside its face determines rot at v.
    std::map<std::pair<VertexId, VertexId>, std::pair<VertexId, VertexId>> succ;
    for (int f = 0; f < nf; ++f) {
        std::vector<VertexId> cyc = faces[f];
        if (flip[f]) std::reverse(cyc.begin() + 1, cyc.end());
        const int k = static_cast<int>(cyc.size());
        for (int i = 0; i < k; ++i) {
            auto cur = std::make_pair(cyc[i], cyc[(i + 1) % k]);
            auto nxt = std::make_pair(cyc[(i + 1) % k], cyc[(i + 2) % k]);
            if (!succ.emplace(cur, nxt).second)
                throw map_error(MapError::InconsistentFaces, "directed edge used twice");
        }
    }

    if (complete_boundary) {
        // Unmatched directions chain into the implied boundary faces.
        std::map<VertexId, std::pair<VertexId, VertexId>> missing; // origin -> directed edge
        for (auto& [de, _] : succ) {
            auto rev = std::make_pair(de.second, de.first);
            if (succ.count(rev)) continue;
            if (!missing.emplace(rev.first, rev).second)
                throw map_error(MapError::InconsistentFaces,
                                "boundary is ambiguous at vertex " + std::to_string(rev.first));
        }
        while (!missing.empty()) {
            auto start = missing.begin()->second;
            std::vector<VertexId> cyc;
            auto cur = start;
            do {
                cyc.push_back(cur.first);
                missing.erase(cur.first);
                auto it = missing.find(cur.second);
                if (it == missing.end()) {
                    if (cur.second == start.first) break;
                    throw map_error(MapError::InconsistentFaces, "boundary does not close");
                }
                cur = it->second;
            } while (true);
            const int k = static_cast<int>(cyc.size());
            if (k < 2) throw map_error(MapError::InconsistentFaces, "degenerate boundary");
            for (int i = 0; i < k; ++i)
                succ.emplace(std::make_pair(cyc[i], cyc[(i + 1) % k]),
                             std::make_pair(cyc[(i + 1) % k], cyc[(i + 2) % k]));
        }
    }

    // rot(u -> v) = successor, inside its face, of (v -> u); chain rot to
    // recover each vertex's counterclockwise neighbor list.
    std::vector<std::vector<VertexId>> lists(vertex_count);
    std::vector<char> done(vertex_count, 0);
    for (auto& [de, _] : succ) {
        VertexId u = de.first;
        if (done[u]) continue;
        done[u] = 1;
        auto cur = de;
        do {
            lists[u].push_back(cur.second);
            auto it = succ.find({cur.second, cur.first});
            if (it == succ.end()) throw map_error(MapError::InconsistentFaces, "unmatched directed edge");
            cur = it->second;
            if (static_cast<int>(lists[u].size()) > vertex_count)
                throw map_error(MapError::InconsistentFaces, "rotation does not close at vertex " + std::to_string(u));
        } while (cur != de);
    }
    return PlanarMap::build(lists);
}

} // namespace curvlab
