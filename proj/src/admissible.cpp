#include "curvlab/admissible.hpp"

#include <algorithm>

#include "curvlab/curvature.hpp"

namespace curvlab {

bool is_admissible(const FaceVector& fv) {
    for (int s : fv)
        if (s < 3) throw admissible_error("face vector entry below three");
    if (fv.size() < 3 || fv.size() > 5) return false;
    FaceVector t = fv;
    std::sort(t.begin(), t.end());
    return curvature_of(t).sign() > 0;
}

std::string AdmissibleFamily::text() const {
    std::string s = "(";
    for (size_t i = 0; i < fixed.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(fixed[i]);
    }
    if (mid) {
        if (!fixed.empty()) s += ",";
        s += "a";
    }
    if (has_free) {
        if (!fixed.empty() || mid) s += ",";
        s += mid ? "b" : "a";
    }
    s += ")";
    if (mid) {
        s += " " + std::to_string(mid->first) + "<=a<=" + std::to_string(mid->second);
        s += hi ? ", a<=b<=" + std::to_string(*hi) : ", a<=b";
    } else if (has_free) {
        s += " " + std::to_string(lo) + "<=a";
        if (hi) s += "<=" + std::to_string(*hi);
    }
    return s;
}

bool AdmissibleFamily::contains(const FaceVector& fv) const {
    FaceVector t = fv;
    std::sort(t.begin(), t.end());
    size_t want = fixed.size() + (mid ? 1 : 0) + (has_free ? 1 : 0);
    if (t.size() != want) return false;
    // fixed entries must appear; remove them as a sorted-multiset prefix match
    FaceVector rest = t;
    for (int f : fixed) {
        auto it = std::find(rest.begin(), rest.end(), f);
        if (it == rest.end()) return false;
        rest.erase(it);
    }
    std::sort(rest.begin(), rest.end());
    if (mid) {
        if (rest.size() != 2) return false;
        int a = rest[0], b = rest[1];
        // try both assignments of (a-slot, b-slot)
        auto fits = [&](int mval, int fval) {
            if (mval < mid->first || mval > mid->second) return false;
            if (fval < mval) return false;
            if (hi && fval > *hi) return false;
            return true;
        };
        return fits(a, b) || fits(b, a);
    }
    if (has_free) {
        if (rest.size() != 1) return false;
        int a = rest[0];
        if (a < lo) return false;
        if (hi && a > *hi) return false;
        return true;
    }
    return rest.empty();
}

namespace {

// Largest s with base + 1/s > 0, given base < 0; -1 if none at least min_s.
int largest_extra(const Rational& base, int min_s) {
    // 1/s > -base  <=>  s < 1/(-base)
    Rational inv = rat(1) / (-base);
    // floor(inv), minus one when inv is integral
    mpz_class q = inv.num() / inv.den();
    long limit = q.get_si();
    if (inv == Rational(mpq_class(q))) limit -= 1;
    if (limit < min_s) return -1;
    return static_cast<int>(limit);
}

void emit(std::vector<AdmissibleFamily>& out, std::vector<int> fixed, int lo, std::optional<int> hi) {
    // Ranges of at most two values at degree 3 appear as fully fixed rows.
    if (hi && fixed.size() == 2 && *hi - lo <= 1) {
        for (int a = lo; a <= *hi; ++a) {
            AdmissibleFamily fam;
            fam.fixed = fixed;
            fam.fixed.push_back(a);
            out.push_back(fam);
        }
        return;
    }
    AdmissibleFamily fam;
    fam.fixed = std::move(fixed);
    fam.has_free = true;
    fam.lo = lo;
    fam.hi = hi;
    out.push_back(fam);
}

} // namespace

std::vector<AdmissibleFamily> enumerate_admissible() {
    std::vector<AdmissibleFamily> out;

    // degree 3: (x, y, a), a >= y
    {
        // x = 3, y <= 6 all have nonnegative curvature limit: one grouped
        // two-parameter family (3,a,b), 3 <= a <= 6, b >= a.
        AdmissibleFamily fam;
        fam.fixed = {3};
        fam.mid = std::make_pair(3, 6);
        fam.has_free = true;
        fam.lo = 3;
        out.push_back(fam);
    }
    for (int x = 3; x <= 5; ++x) {
        for (int y = std::max(x, x == 3 ? 7 : x);; ++y) {
            Rational base = rat(1) - rat(3, 2) + rat(1, x) + rat(1, y);
            if (base.sign() >= 0) {
                if (x == 3 && y <= 6) continue; // grouped above
                emit(out, {x, y}, y, std::nullopt);
                continue;
            }
            int top = largest_extra(base, y);
            if (top < 0) break;
            emit(out, {x, y}, y, top);
        }
    }
    // degree 4: smallest entry must be 3
    for (int x = 3; x <= 4; ++x) {
        for (int y = x;; ++y) {
            Rational base = rat(1) - rat(2) + rat(1, 3) + rat(1, x) + rat(1, y);
            if (base.sign() >= 0) {
                emit(out, {3, x, y}, y, std::nullopt);
                continue;
            }
            int top = largest_extra(base, y);
            if (top < 0) break;
            emit(out, {3, x, y}, y, top);
        }
        if (x == 4) break; // (3,5,5,a) and beyond are empty
    }
    // degree 5: (3,3,3,3,a) only
    {
        Rational base = rat(1) - rat(5, 2) + rat(4, 3);
        int top = largest_extra(base, 3);
        emit(out, {3, 3, 3, 3}, 3, top);
    }

    // degree >= 6 is impossible: 1 - d/2 + d/3 <= 0 for d >= 6; asserted,
    // not enumerated.
    std::sort(out.begin(), out.end(), [](const AdmissibleFamily& a, const AdmissibleFamily& b) {
        size_t da = a.fixed.size() + (a.mid ? 1 : 0) + (a.has_free ? 1 : 0);
        size_t db = b.fixed.size() + (b.mid ? 1 : 0) + (b.has_free ? 1 : 0);
        if (da != db) return da < db;
        if (a.fixed != b.fixed) return a.fixed < b.fixed;
        return a.lo < b.lo;
    });
    return out;
}

Rational unbounded_family_curvature_floor(const AdmissibleFamily& fam) {
    if (!fam.unbounded()) throw admissible_error("family is bounded");
    // K(a) = limit + 1/a, strictly decreasing in a; the limit certifies the
    // symbolic tail: every instantiation exceeds it.
    auto limit_for = [&](const std::vector<int>& fixed) {
        Rational k = rat(1) - rat(static_cast<long>(fixed.size() + 1), 2);
        for (int s : fixed) k += rat(1, s);
        return k;
    };
    if (fam.mid) {
        Rational best = limit_for({fam.fixed[0], fam.mid->first});
        for (int m = fam.mid->first; m <= fam.mid->second; ++m) {
            Rational l = limit_for({fam.fixed[0], m});
            if (l < best) best = l;
        }
        return best;
    }
    return limit_for(fam.fixed);
}

} // namespace curvlab
