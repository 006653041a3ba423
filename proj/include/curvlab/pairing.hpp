#ifndef CURVLAB_PAIRING_HPP
#define CURVLAB_PAIRING_HPP

#include <map>
#include <string>
#include <vector>

#include "curvlab/classify.hpp"
#include "curvlab/planar_map.hpp"
#include "curvlab/rational.hpp"
#include "curvlab/report.hpp"

namespace curvlab {

class pairing_error : public std::runtime_error {
public:
    explicit pairing_error(const std::string& what) : std::runtime_error(what) {}
};

// A discharge target: an ordinary face of eligible size, or one of the two
// auxiliary targets. Eligible face sizes exclude {3,4,6,8,9,10,12}.
struct DischargeTarget {
    enum Kind { Face, Partial, DoublePartial } kind = Face;
    FaceId face = -1;

    static DischargeTarget face_target(FaceId f) { return {Face, f}; }
    static DischargeTarget partial() { return {Partial, -1}; }
    static DischargeTarget double_partial() { return {DoublePartial, -1}; }

    friend bool operator<(const DischargeTarget& a, const DischargeTarget& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.face < b.face;
    }
    friend bool operator==(const DischargeTarget& a, const DischargeTarget& b) {
        return a.kind == b.kind && a.face == b.face;
    }
    std::string str() const;
};

bool is_discharge_face_size(int size);

struct PairingEntry {
    DischargeTarget target;
    Rational value;
    std::string rule; // which table row or special rule produced it
};

// The mass-distribution over discharge targets: unit row sums, nonnegative
// entries, provenance per entry.
struct Pairing {
    std::vector<std::vector<PairingEntry>> rows; // per vertex

    Rational row_sum(VertexId v) const;
    Rational value(VertexId v, const DischargeTarget& t) const;
    // All targets that appear with nonzero value anywhere.
    std::vector<DischargeTarget> targets() const;
    // Vertices pairing into t with nonzero value.
    std::vector<VertexId> contributors(const DischargeTarget& t) const;
};

Pairing build_pairing(const PlanarMap& m);

struct FaceContribution {
    Rational mass;    // total pairing into the target
    Rational c;       // sum of excess(v) * pairing(v, target)
    Rational c_plus;  // positive part
    Rational c_minus; // negative part
};

FaceContribution face_contribution(const PlanarMap& m, const Pairing& p, const DischargeTarget& t);

// Verifies the unit row sums, the global identity
//   sum over targets of c(t) = 2 (209 - V) / 209,
// every per-class lower bound for nonzero-mass targets, and the auxiliary
// target bounds. Structural face checks are part of validate_pcc.
AuditReport global_audit(const PlanarMap& m);
AuditReport global_audit(const PlanarMap& m, const Pairing& p);

// Per-class exact lower bound for c(t) at nonzero mass, by face size
// (0 = Partial, -1 = DoublePartial sentinel keys are not used here; see the
// dedicated accessors).
Rational face_class_bound(int size);
Rational partial_bound();        // -2/209
Rational double_partial_bound(); // 0.0006

// Localized decomposition of c(f) onto the (3,|f|)-edges of f, for
// 14 <= |f| <= 41, |f| != 19 and nonzero mass. For |f| in {40,41} the
// special contributors that are not triangle-anchored go to an extra bucket.
struct EdgeRefinement {
    std::vector<EdgeId> edges;          // the (3,N)-edges of f
    std::vector<Rational> edge_c;       // their localized contributions
    bool has_bucket = false;
    Rational bucket_c;                  // extra bucket (sizes 40, 41 only)
    Rational total;                     // equals c(f) exactly
};

EdgeRefinement edge_refinement(const PlanarMap& m, const Pairing& p, FaceId f);

// Cyclic sequence of side vectors around a face, in walk order.
std::vector<SideVector> face_side_profile(const PlanarMap& m, FaceId f);

// Full PCC validation: positive curvature everywhere, min degree 3, not a
// prism or an antiprism, max face size at most 41, plus the structural
// rigidity checks on multi-incident faces and close large faces.
AuditReport validate_pcc(const PlanarMap& m);
bool is_prism(const PlanarMap& m);
bool is_antiprism(const PlanarMap& m);

} // namespace curvlab

#endif
