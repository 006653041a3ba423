#ifndef CURVLAB_ADMISSIBLE_HPP
#define CURVLAB_ADMISSIBLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "curvlab/planar_map.hpp"
#include "curvlab/rational.hpp"

namespace curvlab {

class admissible_error : public std::runtime_error {
public:
    explicit admissible_error(const std::string& what) : std::runtime_error(what) {}
};

// One row of the admissible face-vector table: a fixed multiset prefix plus
// at most one bounded or unbounded free slot. The family (3,a,b) with
// 3 <= a <= 6 and b free carries a second, bounded slot.
struct AdmissibleFamily {
    std::vector<int> fixed;             // fixed entries, sorted
    std::optional<std::pair<int, int>> mid;  // bounded extra slot (lo, hi), if any
    bool has_free = false;              // one trailing slot a
    int lo = 0;                         // lower bound for a
    std::optional<int> hi;              // nullopt = unbounded

    bool unbounded() const { return has_free && !hi; }
    std::string text() const;
    bool contains(const FaceVector& fv) const;
    bool operator==(const AdmissibleFamily& o) const {
        return fixed == o.fixed && mid == o.mid && has_free == o.has_free && lo == o.lo && hi == o.hi;
    }
};

// True iff the multiset has degree at most 5 and strictly positive curvature.
// Entries below 3 are rejected with admissible_error.
bool is_admissible(const FaceVector& fv);

// Regenerates the full table of admissible face vectors by direct
// enumeration, grouping the three genuinely unbounded families (one of them,
// (3,a,b) with a <= 6, with two parameters) symbolically.
std::vector<AdmissibleFamily> enumerate_admissible();

// For an unbounded family, a positive lower bound on the curvature over all
// instantiations (the limit value); used to certify the symbolic tail.
Rational unbounded_family_curvature_floor(const AdmissibleFamily& fam);

} // namespace curvlab

#endif
