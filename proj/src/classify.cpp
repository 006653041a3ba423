#include "curvlab/classify.hpp"

#include <algorithm>
#include <set>

#include "curvlab/admissible.hpp"
#include "curvlab/curvature.hpp"

namespace curvlab {

const char* to_string(VertexClass c) {
    switch (c) {
        case VertexClass::DFace: return "dface";
        case VertexClass::DDFace: return "ddface";
        case VertexClass::Big: return "big";
        case VertexClass::Regular: return "regular";
        case VertexClass::SemiRegular: return "semi-regular";
        case VertexClass::TS: return "ts";
        case VertexClass::PotentiallySpecial: return "potentially-special";
    }
    return "?";
}

namespace {

bool is_fv(const FaceVector& fv, std::initializer_list<int> want) {
    return fv.size() == want.size() && std::equal(fv.begin(), fv.end(), want.begin());
}

// (x, y, a) with fixed x <= y and one free slot
bool match3(const FaceVector& fv, int x, int y, int* a) {
    if (fv.size() != 3) return false;
    // fv sorted; the free entry can sit anywhere relative to x, y
    FaceVector rest = fv;
    for (int f : {x, y}) {
        auto it = std::find(rest.begin(), rest.end(), f);
        if (it == rest.end()) return false;
        rest.erase(it);
    }
    *a = rest[0];
    return true;
}

bool match4(const FaceVector& fv, int x, int y, int z, int* a) {
    if (fv.size() != 4) return false;
    FaceVector rest = fv;
    for (int f : {x, y, z}) {
        auto it = std::find(rest.begin(), rest.end(), f);
        if (it == rest.end()) return false;
        rest.erase(it);
    }
    *a = rest[0];
    return true;
}

bool is_ts_vector(const FaceVector& fv) {
    return std::all_of(fv.begin(), fv.end(), [](int s) { return s == 3 || s == 4; });
}

bool is_ddface_vector(const FaceVector& fv) {
    int a;
    if (match3(fv, 3, 3, &a) && a >= 5 && a <= 10) return true;
    if (match3(fv, 3, 5, &a) && a >= 5 && a <= 10) return true;
    if (match3(fv, 3, 6, &a) && a >= 6 && a <= 10 && a != 7) return true;
    if (match3(fv, 3, 12, &a) && a >= 5 && a <= 10) return true;
    if (match3(fv, 3, 13, &a) && a >= 5 && a <= 10) return true;
    if (match3(fv, 3, 19, &a) && (a == 3 || a == 6 || a == 7 || a == 8)) return true;
    if (match3(fv, 4, 4, &a) && a >= 6 && a <= 41 && a != 7 && a != 11 && a != 13 && a != 19)
        return true;
    if (match3(fv, 4, 6, &a) && (a == 6 || a == 8 || a == 9 || a == 10)) return true;
    if (match3(fv, 5, 5, &a) && a >= 5 && a <= 9) return true;
    if (is_fv(fv, {5, 6, 6})) return true;
    if (is_fv(fv, {3, 3, 3, 19})) return true;
    if (match4(fv, 3, 3, 4, &a) && a >= 8 && a <= 10) return true;
    if (match4(fv, 3, 3, 5, &a) && (a == 5 || a == 6)) return true;
    return false;
}

bool is_dface_vector(const FaceVector& fv) {
    return is_fv(fv, {5, 6, 7}) || is_fv(fv, {3, 3, 5, 7});
}

bool is_semi_regular_vector(const FaceVector& fv) {
    int a;
    if (is_fv(fv, {3, 5, 11}) || is_fv(fv, {3, 11, 11}) || is_fv(fv, {3, 11, 13}) ||
        is_fv(fv, {4, 5, 5}) || is_fv(fv, {4, 5, 19}) || is_fv(fv, {4, 7, 7}))
        return true;
    if (match3(fv, 3, 5, &a) && a >= 14 && a <= 39) return true;
    if (match3(fv, 4, 5, &a) && (a == 7 || a == 11)) return true;
    return false;
}

bool is_probe_vector(const FaceVector& fv) {
    int a;
    if (match3(fv, 3, 3, &a) && (a == 11 || a == 12)) return true;
    if (match3(fv, 3, 4, &a) && a >= 5 && a <= 41) return true;
    if (fv.size() == 3 && fv[0] == 3) {
        int x = fv[1], y = fv[2];
        if ((x == 6 && y == 7) || (x >= 7 && x <= 10 && y >= x && y <= 10)) return true;
    }
    if (is_fv(fv, {4, 5, 6})) return true;
    if (match4(fv, 3, 3, 3, &a) && a >= 5 && a <= 12) return true;
    if (match4(fv, 3, 3, 4, &a) && a >= 5 && a <= 7) return true;
    if (is_fv(fv, {3, 4, 4, 5})) return true;
    if (is_fv(fv, {3, 3, 3, 3, 5})) return true;
    return false;
}

// Designated size for a regular vertex, or 0.
int regular_size(const FaceVector& fv) {
    int a;
    if (match3(fv, 3, 3, &a) && a >= 13 && a <= 41 && a != 19) return a;
    if (match3(fv, 3, 5, &a) && (a == 40 || a == 41)) return a;
    if (match3(fv, 3, 6, &a) && a >= 14 && a <= 41 && a != 19) return a;
    if (match3(fv, 3, 7, &a) && a >= 14 && a <= 41 && a != 19) return a;
    if (match3(fv, 3, 11, &a) && a >= 6 && a <= 12 && a != 11) return 11;
    if (match3(fv, 3, 8, &a) && a >= 14 && a <= 23 && a != 19) return a;
    if (match3(fv, 3, 9, &a) && a >= 14 && a <= 17) return a;
    if (is_fv(fv, {3, 10, 14})) return 14;
    if (match3(fv, 4, 4, &a) && (a == 5 || a == 7 || a == 11 || a == 13 || a == 19)) return a;
    if (match3(fv, 4, 5, &a) && a >= 8 && a <= 18 && a != 11) return 5;
    if (is_fv(fv, {4, 6, 7})) return 7;
    if (is_fv(fv, {4, 6, 11})) return 11;
    if (match3(fv, 4, 7, &a) && (a == 8 || a == 9)) return 7;
    if (match4(fv, 3, 3, 3, &a) && a >= 13 && a <= 41 && a != 19) return a;
    if (is_fv(fv, {3, 3, 4, 11})) return 11;
    return 0;
}

} // namespace

bool triangles_alternate(const PlanarMap& m, VertexId v) {
    auto cyc = m.vtype_cyclic(v);
    if (cyc.size() != 4) return false;
    int tris = static_cast<int>(std::count(cyc.begin(), cyc.end(), 3));
    if (tris != 2) return false;
    return (cyc[0] == 3 && cyc[2] == 3) || (cyc[1] == 3 && cyc[3] == 3);
}

AlphaBetaMarking mark_alpha_beta(const PlanarMap& m) {
    AlphaBetaMarking mark;
    mark.alpha.assign(m.vertex_count(), 0);
    mark.beta.assign(m.vertex_count(), 0);
    for (EdgeId e = 0; e < m.edge_count(); ++e) {
        auto t = m.etype(e);
        if (t[0] != 11 || t[1] != 13) continue;
        auto vs = m.everts(e);
        for (VertexId v : vs)
            if (!is_fv(m.vtype(v), {3, 11, 13}))
                throw classify_error("endpoint of an (11,13) edge lacks face vector (3,11,13)");
        bool blue = true;
        for (VertexId v : vs) {
            FaceId tri = -1;
            for (FaceId f : m.vfaces(v))
                if (m.face_size(f) == 3) tri = f;
            if (m.face_size(m.opp(v, tri)) != 11) blue = false;
        }
        if (blue) {
            mark.blue_edges.push_back(e);
            mark.beta[vs[0]] = mark.beta[vs[1]] = 1;
        }
    }
    for (VertexId v = 0; v < m.vertex_count(); ++v)
        if (!mark.beta[v] && is_fv(m.vtype(v), {3, 11, 13})) mark.alpha[v] = 1;
    return mark;
}

std::vector<EdgeId> blue_edges(const PlanarMap& m) { return mark_alpha_beta(m).blue_edges; }

VertexClass classify_vector(const FaceVector& raw) {
    FaceVector fv = raw;
    std::sort(fv.begin(), fv.end());
    if (!is_admissible(fv)) throw classify_error("inadmissible face vector");
    if (fv.back() >= 42) return VertexClass::Big;
    struct Hit {
        VertexClass tag;
        bool on;
    };
    const Hit hits[] = {
        {VertexClass::DFace, is_dface_vector(fv)},
        {VertexClass::TS, is_ts_vector(fv)},
        {VertexClass::DDFace, is_ddface_vector(fv)},
        {VertexClass::Regular, regular_size(fv) != 0},
        {VertexClass::SemiRegular, is_semi_regular_vector(fv)},
        {VertexClass::PotentiallySpecial, is_probe_vector(fv)},
    };
    int count = 0;
    VertexClass out = VertexClass::Big;
    for (const auto& h : hits)
        if (h.on) {
            ++count;
            out = h.tag;
        }
    if (count != 1)
        throw classify_error("face vector covered by " + std::to_string(count) + " classes");
    return out;
}

VertexClassification classify(const PlanarMap& m, VertexId v) {
    FaceVector fv = m.vtype(v);
    VertexClassification out;
    out.tag = classify_vector(fv);
    if (out.tag == VertexClass::Big || out.tag == VertexClass::DFace ||
        out.tag == VertexClass::TS || out.tag == VertexClass::DDFace ||
        out.tag == VertexClass::PotentiallySpecial)
        return out;
    if (out.tag == VertexClass::Regular) {
        out.n = regular_size(fv);
        return out;
    }

    // semi-regular rows
    int a;
    auto map_subcase = [&](int n) {
        // designated size with multiplicity two: either one face twice or two
        // distinct faces once each
        out.n = n;
        std::vector<FaceId> hits;
        for (FaceId f : m.vfaces(v))
            if (m.face_size(f) == n) hits.push_back(f);
        if (hits.size() != 2) throw classify_error("expected doubled size in face vector");
        out.subcase = hits[0] == hits[1] ? SemiRegularCase::DoubleSame : SemiRegularCase::DoubleSplit;
    };
    if (is_fv(fv, {3, 5, 11})) {
        out.tag = VertexClass::SemiRegular;
        out.n = 11;
        out.r = rat(1, 2);
        out.aux_remainder = true;
        return out;
    }
    if (match3(fv, 3, 5, &a) && a >= 14 && a <= 19) {
        out.tag = VertexClass::SemiRegular;
        out.subcase = SemiRegularCase::TwoSizes;
        out.m = 5;
        out.n = a;
        out.r = rat(1, 2);
        return out;
    }
    if (match3(fv, 3, 5, &a) && a >= 20 && a <= 39) {
        out.tag = VertexClass::SemiRegular;
        out.n = a;
        out.r = rat(1, 2);
        out.aux_remainder = true;
        return out;
    }
    if (is_fv(fv, {3, 11, 11})) {
        out.tag = VertexClass::SemiRegular;
        out.r = rat(1, 2);
        map_subcase(11);
        return out;
    }
    if (is_fv(fv, {3, 11, 13})) {
        out.tag = VertexClass::SemiRegular;
        out.subcase = SemiRegularCase::TwoSizes;
        out.m = 11;
        out.n = 13;
        auto mark = mark_alpha_beta(m);
        out.r = mark.beta[v] ? rat(3, 7) : rat(1, 7);
        return out;
    }
    if (is_fv(fv, {4, 5, 5})) {
        out.tag = VertexClass::SemiRegular;
        out.r = rat(1, 2);
        map_subcase(5);
        return out;
    }
    if (match3(fv, 4, 5, &a) && (a == 7 || a == 11)) {
        out.tag = VertexClass::SemiRegular;
        out.subcase = SemiRegularCase::TwoSizes;
        out.m = 5;
        out.n = a;
        out.r = rat(1, 2);
        return out;
    }
    if (is_fv(fv, {4, 5, 19})) {
        out.tag = VertexClass::SemiRegular;
        out.subcase = SemiRegularCase::TwoSizes;
        out.m = 5;
        out.n = 19;
        out.r = rat(3, 4);
        return out;
    }
    if (is_fv(fv, {4, 7, 7})) {
        out.tag = VertexClass::SemiRegular;
        out.r = rat(1, 2);
        map_subcase(7);
        return out;
    }

    throw classify_error("semi-regular face vector without a matching row");
}

TSData ts_data(const PlanarMap& m, VertexId v) {
    if (!is_ts_vector(m.vtype(v))) throw classify_error("vertex is not a TS-vertex");
    TSData out;
    auto own_edges = m.vedges(v);
    std::set<EdgeId> own(own_edges.begin(), own_edges.end());
    std::set<EdgeId> ets;
    for (FaceId f : m.vfaces(v))
        for (EdgeId e : m.fedges(f))
            if (!own.count(e)) ets.insert(e);
    out.ets.assign(ets.begin(), ets.end());
    std::set<FaceId> fts;
    for (EdgeId e : out.ets)
        for (FaceId f : m.efaces(e)) {
            int s = m.face_size(f);
            if (s == 11 || s == 40 || s == 41) fts.insert(f);
        }
    out.fts.assign(fts.begin(), fts.end());
    out.nts = static_cast<int>(out.fts.size());
    if (out.nts > 3) throw classify_error("TS-vertex sees more than three large faces");
    return out;
}

bool is_red_triangle(const PlanarMap& m, FaceId f) {
    if (m.face_size(f) != 3) return false;
    for (VertexId v : m.fverts(f))
        if (!is_fv(m.vtype(v), {3, 3, 5, 7})) return false;
    return true;
}

std::vector<FaceId> red_triangles(const PlanarMap& m) {
    std::vector<FaceId> out;
    for (FaceId f = 0; f < m.face_count(); ++f)
        if (is_red_triangle(m, f)) out.push_back(f);
    return out;
}

} // namespace curvlab
