#include "curvlab/pairing.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>

#include "curvlab/admissible.hpp"
#include "curvlab/curvature.hpp"

namespace curvlab {

bool is_discharge_face_size(int size) {
    switch (size) {
        case 3: case 4: case 6: case 8: case 9: case 10: case 12: return false;
        default: return size >= 3;
    }
}

std::string DischargeTarget::str() const {
    switch (kind) {
        case Partial: return "partial";
        case DoublePartial: return "double-partial";
        default: return "face:" + std::to_string(face);
    }
}

Rational Pairing::row_sum(VertexId v) const {
    Rational s;
    for (const auto& e : rows[v]) s += e.value;
    return s;
}

Rational Pairing::value(VertexId v, const DischargeTarget& t) const {
    Rational s;
    for (const auto& e : rows[v])
        if (e.target == t) s += e.value;
    return s;
}

std::vector<DischargeTarget> Pairing::targets() const {
    std::set<DischargeTarget> set;
    for (const auto& row : rows)
        for (const auto& e : row)
            if (!e.value.is_zero()) set.insert(e.target);
    return {set.begin(), set.end()};
}

std::vector<VertexId> Pairing::contributors(const DischargeTarget& t) const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < static_cast<int>(rows.size()); ++v)
        if (!value(v, t).is_zero()) out.push_back(v);
    return out;
}

namespace {

bool is_fv(const FaceVector& fv, std::initializer_list<int> want) {
    return fv.size() == want.size() && std::equal(fv.begin(), fv.end(), want.begin());
}

std::vector<FaceId> faces_of_size_at(const PlanarMap& m, VertexId v, int size) {
    std::vector<FaceId> out;
    for (FaceId f : m.vfaces(v))
        if (m.face_size(f) == size) out.push_back(f);
    return out;
}

FaceId unique_face_of_size_at(const PlanarMap& m, VertexId v, int size) {
    auto fs = faces_of_size_at(m, v, size);
    if (fs.size() != 1)
        throw pairing_error("vertex " + std::to_string(v) + " has " + std::to_string(fs.size()) +
                            " incidences with size-" + std::to_string(size) + " faces, expected one");
    return fs[0];
}

// The face on the other side of edge (u,w) from kappa.
FaceId face_across(const PlanarMap& m, VertexId u, VertexId w, FaceId kappa) {
    EdgeId e = m.find_edge(u, w);
    if (e < 0) throw pairing_error("expected edge is missing");
    auto fs = m.efaces(e);
    if (fs[0] == kappa) return fs[1];
    if (fs[1] == kappa) return fs[0];
    throw pairing_error("edge does not bound the expected face");
}

// Corners of the square kappa as seen from v: (n1, v2, n2) where n1, n2 are
// the two kappa-neighbors of v and v2 is the opposite corner.
struct SquareAt {
    VertexId n1, v2, n2;
};
SquareAt square_at(const PlanarMap& m, VertexId v, FaceId kappa) {
    auto vs = m.fverts(kappa);
    if (vs.size() != 4) throw pairing_error("expected a square face");
    int i = -1;
    for (int k = 0; k < 4; ++k)
        if (vs[k] == v) i = k;
    if (i < 0) throw pairing_error("vertex not on the expected square");
    return {vs[(i + 1) % 4], vs[(i + 2) % 4], vs[(i + 3) % 4]};
}

class PairingBuilder {
public:
    explicit PairingBuilder(const PlanarMap& m) : m_(m) { p_.rows.resize(m.vertex_count()); }

    Pairing run() {
        for (VertexId v = 0; v < m_.vertex_count(); ++v) handle(v);
        return std::move(p_);
    }

private:
    void add(VertexId v, DischargeTarget t, Rational val, const std::string& rule) {
        if (val.sign() < 0) throw pairing_error("negative pairing value");
        if (val.is_zero()) return;
        if (t.kind == DischargeTarget::Face && !is_discharge_face_size(m_.face_size(t.face)))
            throw pairing_error("pairing into ineligible face size " +
                                std::to_string(m_.face_size(t.face)));
        for (auto& e : p_.rows[v])
            if (e.target == t) {
                e.value += val;
                e.rule += "+" + rule;
                return;
            }
        p_.rows[v].push_back({t, val, rule});
    }

    void add_face(VertexId v, FaceId f, Rational val, const std::string& rule) {
        add(v, DischargeTarget::face_target(f), val, rule);
    }

    // asserts that all candidate special targets coincide, returns it
    FaceId merge_targets(VertexId v, const std::vector<FaceId>& cand, const char* rule) {
        std::set<FaceId> distinct(cand.begin(), cand.end());
        if (distinct.size() > 1)
            throw pairing_error(std::string("rule conflict at vertex ") + std::to_string(v) +
                                " (" + rule + "): multiple distinct special targets");
        return *distinct.begin();
    }

    void handle(VertexId v) {
        auto cls = classify(m_, v);
        switch (cls.tag) {
            case VertexClass::DFace:
                add(v, DischargeTarget::partial(), rat(1), "row-dface");
                return;
            case VertexClass::DDFace:
                add(v, DischargeTarget::double_partial(), rat(1), "row-ddface");
                return;
            case VertexClass::Big:
                add(v, DischargeTarget::double_partial(), rat(1), "row-big");
                return;
            case VertexClass::Regular:
                add_face(v, unique_face_of_size_at(m_, v, cls.n), rat(1), "row-regular");
                return;
            case VertexClass::SemiRegular:
                handle_semi_regular(v, cls);
                return;
            case VertexClass::TS:
                handle_ts(v);
                return;
            case VertexClass::PotentiallySpecial:
                handle_special(v);
                return;
        }
    }

    void handle_semi_regular(VertexId v, const VertexClassification& cls) {
        switch (cls.subcase) {
            case SemiRegularCase::SingleWhole:
                add_face(v, unique_face_of_size_at(m_, v, cls.n), cls.r, "row-semi");
                add(v, DischargeTarget::double_partial(), rat(1) - cls.r, "row-semi");
                return;
            case SemiRegularCase::DoubleSame: {
                auto fs = faces_of_size_at(m_, v, cls.n);
                add_face(v, fs[0], cls.r + cls.r, "row-semi-double");
                return;
            }
            case SemiRegularCase::DoubleSplit: {
                auto fs = faces_of_size_at(m_, v, cls.n);
                add_face(v, fs[0], cls.r, "row-semi-split");
                add_face(v, fs[1], cls.r, "row-semi-split");
                return;
            }
            case SemiRegularCase::TwoSizes:
                add_face(v, unique_face_of_size_at(m_, v, cls.m), cls.r, "row-semi");
                add_face(v, unique_face_of_size_at(m_, v, cls.n), rat(1) - cls.r, "row-semi");
                return;
        }
    }

    void handle_ts(VertexId v) {
        auto data = ts_data(m_, v);
        for (FaceId f : data.fts) add_face(v, f, rat(1, 3), "rule-ts");
        add(v, DischargeTarget::double_partial(), rat(3 - data.nts, 3), "rule-ts");
    }

    void handle_special(VertexId v) {
        FaceVector fv = m_.vtype(v);
        int a;
        auto strip = [&](std::initializer_list<int> prefix, int* out) {
            FaceVector rest = fv;
            for (int x : prefix) {
                auto it = std::find(rest.begin(), rest.end(), x);
                if (it == rest.end()) return false;
                rest.erase(it);
            }
            if (rest.size() != 1) return false;
            *out = rest[0];
            return true;
        };

        if (fv.size() == 3 && strip({3, 3}, &a) && (a == 11 || a == 12)) {
            rule_two_triangles(v, a);
            return;
        }
        if (fv.size() == 3 && strip({3, 4}, &a) && a >= 5 && a <= 41) {
            rule_triangle_square(v, a);
            return;
        }
        if (fv.size() == 3 && fv[0] == 3 &&
            ((fv[1] == 6 && fv[2] == 7) || (fv[1] >= 7 && fv[2] >= fv[1] && fv[2] <= 10))) {
            rule_triangle_two_mids(v, fv[1], fv[2]);
            return;
        }
        if (is_fv(fv, {4, 5, 6})) {
            rule_456(v);
            return;
        }
        if (fv.size() == 4 && strip({3, 3, 3}, &a) && a >= 5 && a <= 12) {
            rule_three_triangles(v, a);
            return;
        }
        if (fv.size() == 4 && strip({3, 3, 4}, &a) && a >= 5 && a <= 7) {
            rule_334(v, a);
            return;
        }
        if (is_fv(fv, {3, 4, 4, 5})) {
            rule_3445(v);
            return;
        }
        if (is_fv(fv, {3, 3, 3, 3, 5})) {
            rule_33335(v);
            return;
        }
        throw pairing_error("unclassifiable vertex " + std::to_string(v));
    }

    // face vector (3,3,a), a in {11,12}: probe the faces across both
    // triangles for an 11-gon
    void rule_two_triangles(VertexId v, int a) {
        Rational r = a == 11 ? rat(1, 2) : rat(1);
        std::vector<FaceId> cand;
        for (FaceId t : faces_of_size_at(m_, v, 3)) {
            FaceId f = m_.opp(v, t);
            if (m_.face_size(f) == 11) cand.push_back(f);
        }
        if (a == 11) add_face(v, unique_face_of_size_at(m_, v, 11), rat(1, 2), "row-33a");
        if (!cand.empty())
            add_face(v, merge_targets(v, cand, "33a"), r, "rule-33a");
        else
            add(v, DischargeTarget::double_partial(), r, "rule-33a");
    }

    // face vector (3,4,a), 5 <= a <= 41
    void rule_triangle_square(VertexId v, int a) {
        FaceId tau = unique_face_of_size_at(m_, v, 3);
        FaceId kappa = unique_face_of_size_at(m_, v, 4);
        auto sq = square_at(m_, v, kappa);
        // n1/n2: the kappa-neighbor across an edge shared with the triangle
        VertexId v1, v3;
        {
            EdgeId e1 = m_.find_edge(v, sq.n1);
            auto fs = m_.efaces(e1);
            bool n1_on_tau = fs[0] == tau || fs[1] == tau;
            v1 = n1_on_tau ? sq.n1 : sq.n2;
            v3 = n1_on_tau ? sq.n2 : sq.n1;
        }
        FaceId f1 = m_.opp(v, tau);
        FaceId f2 = face_across(m_, v1, sq.v2, kappa);
        FaceId f3 = face_across(m_, sq.v2, v3, kappa);

        bool whole = (a == 8 || a == 9 || a == 10 || a == 12);
        if (a != 6) {
            Rational r = whole ? rat(1) : rat(1, 2);
            std::vector<FaceId> cand;
            for (FaceId f : {f1, f2})
                if (m_.face_size(f) == 11) cand.push_back(f);
            if (!cand.empty())
                add_face(v, merge_targets(v, cand, "34a"), r, "rule-34a");
            else
                add(v, DischargeTarget::double_partial(), r, "rule-34a");
            if (!whole) add_face(v, unique_face_of_size_at(m_, v, a), rat(1, 2), "row-34a");
        } else {
            std::set<FaceId> av;
            for (FaceId f : {f1, f2, f3})
                if (m_.face_size(f) == 11) av.insert(f);
            if (av.size() >= 3)
                throw pairing_error("rule conflict at vertex " + std::to_string(v) +
                                    " (34a): three distinct 11-gon targets");
            for (FaceId f : av) add_face(v, f, rat(1, 2), "rule-34a");
            add(v, DischargeTarget::double_partial(),
                rat(2 - static_cast<long>(av.size()), 2), "rule-34a");
        }
    }

    // face vector (3,a,b) with 6 <= a <= 10, 7 <= b <= 10: probe across the
    // triangle for a large face
    void rule_triangle_two_mids(VertexId v, int a, int b) {
        FaceId tau = unique_face_of_size_at(m_, v, 3);
        FaceId f = m_.opp(v, tau);
        int fs = m_.face_size(f);
        bool half = (a == 7 && (b == 8 || b == 9));
        Rational r = half ? rat(1, 2) : rat(1);
        bool special;
        if (a == 6 && b == 7)
            special = (fs == 40 || fs == 41);
        else
            special = (fs >= 14 && fs <= 41 && fs != 19);
        if (special)
            add_face(v, f, r, "rule-3ab");
        else
            add(v, DischargeTarget::double_partial(), r, "rule-3ab");
        if (half) add_face(v, unique_face_of_size_at(m_, v, 7), rat(1, 2), "row-3ab");
    }

    void rule_456(VertexId v) {
        FaceId kappa = unique_face_of_size_at(m_, v, 4);
        FaceId six = unique_face_of_size_at(m_, v, 6);
        auto sq = square_at(m_, v, kappa);
        VertexId v1;
        {
            EdgeId e1 = m_.find_edge(v, sq.n1);
            auto fs = m_.efaces(e1);
            v1 = (fs[0] == six || fs[1] == six) ? sq.n1 : sq.n2;
        }
        FaceId f1 = face_across(m_, v1, sq.v2, kappa);
        if (m_.face_size(f1) == 11)
            add_face(v, f1, rat(1, 2), "rule-456");
        else
            add(v, DischargeTarget::double_partial(), rat(1, 2), "rule-456");
        add_face(v, unique_face_of_size_at(m_, v, 5), rat(1, 2), "row-456");
    }

    // face vector (3,3,3,a), 5 <= a <= 12
    void rule_three_triangles(VertexId v, int a) {
        auto faces = m_.vfaces(v);
        int i = -1;
        for (int k = 0; k < 4; ++k)
            if (m_.face_size(faces[k]) == a) i = k;
        if (i < 0) throw pairing_error("expected face is missing");
        FaceId tau1 = faces[(i + 1) % 4];
        FaceId tau2 = faces[(i + 2) % 4]; // the middle triangle, opposite f
        FaceId tau3 = faces[(i + 3) % 4];
        FaceId f1 = m_.opp(v, tau1), f2 = m_.opp(v, tau2), f3 = m_.opp(v, tau3);

        if (a == 5) {
            int s = m_.face_size(f2);
            if (s == 11 || s == 40 || s == 41)
                add_face(v, f2, rat(1), "rule-333a");
            else
                add(v, DischargeTarget::double_partial(), rat(1), "rule-333a");
            return;
        }
        if (a >= 6 && a <= 10) {
            if (m_.face_size(f2) == 11)
                add_face(v, f2, rat(1), "rule-333a");
            else
                add(v, DischargeTarget::double_partial(), rat(1), "rule-333a");
            return;
        }
        // a in {11, 12}
        Rational r = a == 11 ? rat(1, 3) : rat(1, 2);
        if (a == 11) add_face(v, faces[i], rat(1, 3), "row-333a");
        std::set<FaceId> av;
        for (FaceId f : {f1, f2, f3})
            if (m_.face_size(f) == 11) av.insert(f);
        if (av.size() >= 3)
            throw pairing_error("rule conflict at vertex " + std::to_string(v) +
                                " (333a): three distinct 11-gon targets");
        if (av.size() == 2) {
            for (FaceId f : av) add_face(v, f, r, "rule-333a");
        } else if (av.size() == 1) {
            add_face(v, *av.begin(), r, "rule-333a");
            add(v, DischargeTarget::double_partial(), r, "rule-333a");
        } else {
            add(v, DischargeTarget::double_partial(), r + r, "rule-333a");
        }
    }

    // face vector (3,3,4,a), a in {5,6,7}
    void rule_334(VertexId v, int a) {
        Rational r = a == 5 ? rat(1, 2) : (a == 7 ? rat(3, 4) : rat(1, 2));
        bool adjacent_triangles = !triangles_alternate(m_, v);
        std::set<FaceId> av;
        int a_v = 0;
        if (adjacent_triangles) {
            auto faces = m_.vfaces(v);
            int i = -1;
            for (int k = 0; k < 4; ++k)
                if (m_.face_size(faces[k]) == a) i = k;
            // orient so that kappa is the square cyclically adjacent to f
            int dir = m_.face_size(faces[(i + 1) % 4]) == 4 ? 1 : 3;
            FaceId kappa = faces[(i + dir) % 4];
            FaceId tau2 = faces[(i + 2 * dir) % 4];
            if (m_.face_size(kappa) != 4 || m_.face_size(tau2) != 3)
                throw pairing_error("unexpected face layout at vertex " + std::to_string(v));
            auto sq = square_at(m_, v, kappa);
            VertexId v1, v3;
            {
                EdgeId e1 = m_.find_edge(v, sq.n1);
                auto fs = m_.efaces(e1);
                bool n1_on_tau2 = fs[0] == tau2 || fs[1] == tau2;
                v1 = n1_on_tau2 ? sq.n1 : sq.n2;
                v3 = n1_on_tau2 ? sq.n2 : sq.n1;
            }
            FaceId f1 = m_.opp(v, tau2);
            FaceId f2 = face_across(m_, v1, sq.v2, kappa);
            FaceId f3 = face_across(m_, sq.v2, v3, kappa);
            if (a == 6) {
                for (FaceId f : {f1, f2, f3})
                    if (m_.face_size(f) == 11) av.insert(f);
                if (av.size() >= 3)
                    throw pairing_error("rule conflict at vertex " + std::to_string(v) +
                                        " (334a): three distinct 11-gon targets");
                a_v = static_cast<int>(av.size());
            } else {
                for (FaceId f : {f1, f2})
                    if (m_.face_size(f) == 11) av.insert(f);
                if (av.size() > 1)
                    throw pairing_error("rule conflict at vertex " + std::to_string(v) +
                                        " (334a): distinct 11-gon targets");
                a_v = static_cast<int>(av.size());
            }
        }
        if (a == 6) {
            for (FaceId f : av) add_face(v, f, rat(1, 2), "rule-334a");
            add(v, DischargeTarget::double_partial(), rat(2 - a_v, 2), "rule-334a");
            return;
        }
        if (a_v == 1)
            add_face(v, *av.begin(), r, "rule-334a");
        else
            add(v, DischargeTarget::double_partial(), r, "rule-334a");
        add_face(v, unique_face_of_size_at(m_, v, a), rat(1) - r, "row-334a");
    }

    void rule_3445(VertexId v) {
        FaceId penta = unique_face_of_size_at(m_, v, 5);
        if (triangles_square_alternate(v)) {
            FaceId tau = unique_face_of_size_at(m_, v, 3);
            FaceId f1 = m_.opp(v, tau);
            if (m_.face_size(f1) == 11 && !excluded_neighbor(v, penta)) {
                add_face(v, f1, rat(1), "rule-3445");
                return;
            }
        }
        add_face(v, penta, rat(1), "row-3445");
    }

    // for (3,4,4,5): true iff the cyclic order is <4,3,4,5>
    bool triangles_square_alternate(VertexId v) {
        auto cyc = m_.vtype_cyclic(v);
        int i = -1;
        for (int k = 0; k < 4; ++k)
            if (cyc[k] == 3) i = k;
        // triangle flanked by the two squares
        return cyc[(i + 1) % 4] == 4 && cyc[(i + 3) % 4] == 4;
    }

    // exclusion set for the pentagon-neighbor probe of (3,4,4,5): either
    // neighbor across a (4,5)-edge having face vector (4,5,a), 14 <= a <= 19
    bool excluded_neighbor(VertexId v, FaceId penta) {
        (void)penta;
        int found = 0;
        bool excluded = false;
        for (DartId d : m_.vdarts(v)) {
            auto t = m_.etype(m_.edge_of(d));
            if (t[0] != 4 || t[1] != 5) continue;
            ++found;
            FaceVector wt = m_.vtype(m_.head(d));
            if (wt.size() == 3 && wt[0] == 4 && wt[1] == 5 && wt[2] >= 14 && wt[2] <= 19)
                excluded = true;
        }
        if (found != 2)
            throw pairing_error("expected two (4,5) edges at vertex " + std::to_string(v));
        return excluded;
    }

    void rule_33335(VertexId v) {
        auto faces = m_.vfaces(v);
        auto darts = m_.vdarts(v);
        int i = -1;
        for (int k = 0; k < 5; ++k)
            if (m_.face_size(faces[k]) == 5) i = k;
        FaceId tau1 = faces[(i + 1) % 5];
        FaceId tau2 = faces[(i + 2) % 5];
        FaceId tau3 = faces[(i + 3) % 5];
        FaceId tau4 = faces[(i + 4) % 5];
        (void)tau1;
        (void)tau4;
        // the edge at dart k separates faces[k] and faces[k+1]
        VertexId w1 = m_.head(darts[i]);             // between f and tau1
        VertexId w4 = m_.head(darts[(i + 4) % 5]);   // between tau4 and f
        FaceId f2 = m_.opp(v, tau2);
        FaceId f3 = m_.opp(v, tau3);

        auto in_set = [&](VertexId w) {
            FaceVector t = m_.vtype(w);
            return is_fv(t, {3, 4, 5}) || is_fv(t, {3, 3, 4, 5}) || is_fv(t, {3, 4, 4, 5});
        };
        std::set<FaceId> cand;
        if (in_set(w1) && m_.face_size(f2) == 11) cand.insert(f2);
        if (in_set(w4) && m_.face_size(f3) == 11) cand.insert(f3);
        for (FaceId f : {f2, f3}) {
            int s = m_.face_size(f);
            if (s == 40 || s == 41) cand.insert(f);
        }
        if (cand.size() > 1)
            throw pairing_error("rule conflict at vertex " + std::to_string(v) +
                                " (33335): multiple special targets");
        if (!cand.empty())
            add_face(v, *cand.begin(), rat(1), "rule-33335");
        else
            add(v, DischargeTarget::double_partial(), rat(1), "rule-33335");
    }

    const PlanarMap& m_;
    Pairing p_;
};

} // namespace

Pairing build_pairing(const PlanarMap& m) { return PairingBuilder(m).run(); }

FaceContribution face_contribution(const PlanarMap& m, const Pairing& p, const DischargeTarget& t) {
    FaceContribution out;
    for (VertexId v = 0; v < m.vertex_count(); ++v) {
        Rational w = p.value(v, t);
        if (w.is_zero()) continue;
        out.mass += w;
        Rational term = excess(m, v) * w;
        out.c += term;
        if (term.sign() >= 0)
            out.c_plus += term;
        else
            out.c_minus += term;
    }
    return out;
}

Rational face_class_bound(int size) {
    if (size == 5) return Rational::parse("0.002");
    if (size == 7) return Rational::parse("0.0095");
    if (size == 11) return Rational::parse("0.0003");
    if (size == 13) return Rational::parse("0.00003");
    if (size == 19) return Rational::parse("0.0065");
    if (size == 40 || size == 41) return Rational::parse("0.011");
    if (size >= 14 && size <= 39) return Rational::parse("0.0002");
    throw pairing_error("no contribution bound for face size " + std::to_string(size));
}

Rational partial_bound() { return -rat(2, 209); }
Rational double_partial_bound() { return Rational::parse("0.0006"); }

bool is_prism(const PlanarMap& m) {
    int v = m.vertex_count();
    if (v % 2 || v < 6) return false;
    int n = v / 2;
    FaceVector want{4, 4, n};
    std::sort(want.begin(), want.end());
    for (VertexId u = 0; u < v; ++u)
        if (m.vtype(u) != want) return false;
    if (m.edge_count() != 3 * n || m.face_count() != n + 2) return false;
    int big = 0, square = 0;
    for (FaceId f = 0; f < m.face_count(); ++f) {
        if (m.face_size(f) == n) ++big;
        if (m.face_size(f) == 4) ++square;
    }
    return n == 4 ? square == 6 : (big == 2 && square == n);
}

bool is_antiprism(const PlanarMap& m) {
    int v = m.vertex_count();
    if (v % 2 || v < 6) return false;
    int n = v / 2;
    FaceVector want{3, 3, 3, n};
    std::sort(want.begin(), want.end());
    for (VertexId u = 0; u < v; ++u)
        if (m.vtype(u) != want) return false;
    if (m.edge_count() != 4 * n || m.face_count() != 2 * n + 2) return false;
    int big = 0, tri = 0;
    for (FaceId f = 0; f < m.face_count(); ++f) {
        if (m.face_size(f) == n) ++big;
        if (m.face_size(f) == 3) ++tri;
    }
    return n == 3 ? tri == 8 : (big == 2 && tri == 2 * n);
}

AuditReport validate_pcc(const PlanarMap& m) {
    AuditReport rep;
    auto& val = rep.section("validation");

    bool deg_ok = true, curv_ok = true, adm_ok = true;
    for (VertexId v = 0; v < m.vertex_count(); ++v) {
        if (m.degree(v) < 3) {
            deg_ok = false;
            val.add("degree", false, "vertex " + std::to_string(v) + " has degree " +
                                          std::to_string(m.degree(v)));
        }
        Rational k = curvature(m, v);
        if (k.sign() <= 0) {
            curv_ok = false;
            val.add("curvature-positive", false,
                    "vertex " + std::to_string(v) + " has K = " + k.str());
        }
        bool adm;
        try {
            adm = is_admissible(m.vtype(v));
        } catch (const admissible_error&) {
            adm = false;
        }
        if (!adm) {
            adm_ok = false;
            val.add("admissible", false, "vertex " + std::to_string(v) + " has inadmissible face vector");
        }
    }
    if (deg_ok) val.add("degree", true);
    if (curv_ok) val.add("curvature-positive", true);
    if (adm_ok) val.add("admissible", true);

    bool prism = is_prism(m), anti = is_antiprism(m);
    val.add("not-prism", !prism, prism ? "map is a prism" : "");
    val.add("not-antiprism", !anti, anti ? "map is an antiprism" : "");

    int mf = m.max_face_size();
    val.add("max-face-41", mf <= 41, "largest face has " + std::to_string(mf) + " sides");

    auto& str = rep.section("structure");
    bool multi_ok = true;
    for (FaceId f = 0; f < m.face_count(); ++f) {
        auto vs = m.fverts(f);
        std::set<VertexId> distinct(vs.begin(), vs.end());
        if (distinct.size() != vs.size()) {
            int s = m.face_size(f);
            if (s < 7 || s > 11) {
                multi_ok = false;
                str.add("multi-incidence-size", false,
                        "face " + std::to_string(f) + " of size " + std::to_string(s) +
                            " repeats a vertex");
            }
        }
    }
    if (multi_ok) str.add("multi-incidence-size", true);

    // adjacent vertices on large faces must share that face along the edge
    bool close_ok = true;
    for (EdgeId e = 0; e < m.edge_count(); ++e) {
        auto vs = m.everts(e);
        for (FaceId f : m.vfaces(vs[0])) {
            if (m.face_size(f) < 20) continue;
            for (FaceId g : m.vfaces(vs[1])) {
                if (m.face_size(g) < 20) continue;
                auto fe = m.fedges(f);
                bool on = std::find(fe.begin(), fe.end(), e) != fe.end();
                if (f != g || !on) {
                    close_ok = false;
                    str.add("large-faces-close", false,
                            "edge " + std::to_string(e) + " joins large faces " + std::to_string(f) +
                                " and " + std::to_string(g) + " improperly");
                }
            }
        }
    }
    if (close_ok) str.add("large-faces-close", true);

    // a small face shares at most one edge with the large faces
    bool share_ok = true;
    for (FaceId k = 0; k < m.face_count(); ++k) {
        if (m.face_size(k) > 6) continue;
        std::set<std::pair<EdgeId, FaceId>> hits;
        for (EdgeId e : m.fedges(k)) {
            for (FaceId f : m.efaces(e))
                if (f != k && m.face_size(f) >= 20) hits.insert({e, f});
        }
        if (hits.size() > 1) {
            share_ok = false;
            str.add("two-edge-sharing", false,
                    "face " + std::to_string(k) + " shares several edges with large faces");
        }
    }
    if (share_ok) str.add("two-edge-sharing", true);

    auto& curv = rep.section("curvature");
    Rational total = total_curvature(m);
    curv.add("total-curvature", total == rat(2), "sum K = " + total.str());
    return rep;
}

namespace {

int audit_thread_count(int jobs) {
    const char* env = std::getenv("CURVLAB_THREADS");
    int n = env ? std::atoi(env) : static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    return std::min(n, std::max(jobs, 1));
}

} // namespace

AuditReport global_audit(const PlanarMap& m, const Pairing& p) {
    AuditReport rep = validate_pcc(m);

    auto& pair_sec = rep.section("pairing");
    bool rows_ok = true, nonneg_ok = true;
    for (VertexId v = 0; v < m.vertex_count(); ++v) {
        Rational s = p.row_sum(v);
        if (s != rat(1)) {
            rows_ok = false;
            pair_sec.add("rowsum", false, "vertex " + std::to_string(v) + " pairs to total " + s.str());
        }
        for (const auto& e : p.rows[v])
            if (e.value.sign() < 0) nonneg_ok = false;
    }
    if (rows_ok) pair_sec.add("rowsum", true);
    pair_sec.add("nonnegative", nonneg_ok);

    auto& bounds = rep.section("bounds");
    Rational total;
    auto targets = p.targets();
    std::vector<FaceContribution> contrib(targets.size());
    {
        int jobs = static_cast<int>(targets.size());
        int nthreads = audit_thread_count(jobs);
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < jobs; i = next.fetch_add(1))
                    contrib[i] = face_contribution(m, p, targets[i]);
            });
        for (auto& th : pool) th.join();
    }
    bool faces_ok = true, partial_ok = true, dpartial_ok = true, count_ok = true;
    for (size_t i = 0; i < targets.size(); ++i) {
        const auto& t = targets[i];
        const auto& fc = contrib[i];
        total += fc.c;
        if (fc.mass.is_zero()) continue;
        if (t.kind == DischargeTarget::Face) {
            Rational bound = face_class_bound(m.face_size(t.face));
            if (fc.c < bound) {
                faces_ok = false;
                bounds.add("face-bound", false,
                           t.str() + " size " + std::to_string(m.face_size(t.face)) + ": c = " +
                               fc.c.str() + " < " + bound.str());
            }
        } else if (t.kind == DischargeTarget::DoublePartial) {
            if (fc.c < double_partial_bound()) {
                dpartial_ok = false;
                bounds.add("double-partial-bound", false, "c = " + fc.c.str());
            }
        } else {
            if (fc.c < partial_bound()) {
                partial_ok = false;
                bounds.add("partial-bound", false, "c = " + fc.c.str());
            }
            // mass counts the critical vertices; it may not exceed 210
            if (fc.mass > rat(210)) {
                count_ok = false;
                bounds.add("critical-count", false, "partial mass = " + fc.mass.str());
            }
        }
    }
    if (faces_ok) bounds.add("face-bound", true);
    if (partial_ok) bounds.add("partial-bound", true);
    if (dpartial_ok) bounds.add("double-partial-bound", true);
    if (count_ok) bounds.add("critical-count", true);

    Rational expect = rat(2) * (rat(209) - rat(m.vertex_count())) / rat(209);
    bounds.add("total-identity", total == expect,
               "sum c = " + total.str() + ", expected " + expect.str());
    return rep;
}

AuditReport global_audit(const PlanarMap& m) { return global_audit(m, build_pairing(m)); }

EdgeRefinement edge_refinement(const PlanarMap& m, const Pairing& p, FaceId f) {
    const int n = m.face_size(f);
    if (n < 14 || n > 41 || n == 19)
        throw pairing_error("edge refinement is defined for sizes 14..41 except 19");
    DischargeTarget t = DischargeTarget::face_target(f);

    EdgeRefinement out;
    out.has_bucket = (n == 40 || n == 41);
    // the (3,N)-edges of f
    std::map<EdgeId, int> edge_index;
    for (EdgeId e : m.fedges(f)) {
        auto ty = m.etype(e);
        if (ty[0] == 3 && ty[1] == n) {
            if (!edge_index.count(e)) {
                edge_index[e] = static_cast<int>(out.edges.size());
                out.edges.push_back(e);
            }
        }
    }
    out.edge_c.assign(out.edges.size(), Rational());

    auto contributors = p.contributors(t);
    if (contributors.empty()) throw pairing_error("face has zero mass");
    std::set<VertexId> boundary;
    for (VertexId v : m.fverts(f)) boundary.insert(v);

    for (VertexId v : contributors) {
        Rational w = p.value(v, t);
        Rational cv = excess(m, v);
        if (boundary.count(v)) {
            FaceVector fv = m.vtype(v);
            int threes = static_cast<int>(std::count(fv.begin(), fv.end(), 3));
            if (threes == 0) throw pairing_error("unexpected boundary contributor");
            // boundary edges of v on f that are (3,N)-edges
            std::vector<EdgeId> mine;
            for (EdgeId e : m.vedges(v))
                if (edge_index.count(e)) mine.push_back(e);
            bool two = threes >= 2;
            if (static_cast<int>(mine.size()) != (two ? 2 : 1))
                throw pairing_error("unexpected (3,N)-edge count at boundary vertex " +
                                    std::to_string(v));
            for (EdgeId e : mine)
                out.edge_c[edge_index[e]] += cv * (two ? w / rat(2) : w);
        } else {
            FaceVector fv = m.vtype(v);
            bool bucketed = out.has_bucket &&
                            (std::all_of(fv.begin(), fv.end(), [](int s) { return s == 3 || s == 4; }) ||
                             is_fv(fv, {3, 3, 3, 5}) || is_fv(fv, {3, 3, 3, 3, 5}));
            if (bucketed) {
                out.bucket_c += cv * w;
                continue;
            }
            // triangle-anchored special: its triangle shares one edge with f
            FaceId tau = unique_face_of_size_at(m, v, 3);
            EdgeId anchor = -1;
            for (EdgeId e : m.fedges(tau))
                if (edge_index.count(e)) anchor = e;
            if (anchor < 0) throw pairing_error("special contributor has no anchor edge on the face");
            out.edge_c[edge_index[anchor]] += cv * w;
        }
    }
    for (const auto& c : out.edge_c) out.total += c;
    out.total += out.bucket_c;
    return out;
}

std::vector<SideVector> face_side_profile(const PlanarMap& m, FaceId f) {
    std::vector<SideVector> out;
    for (EdgeId e : m.fedges(f)) out.push_back(m.etype(e));
    return out;
}

} // namespace curvlab
