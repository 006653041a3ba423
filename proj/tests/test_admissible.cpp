#include <doctest.h>

#include "curvlab/admissible.hpp"
#include "curvlab/curvature.hpp"

using namespace curvlab;

namespace {

AdmissibleFamily fam(std::vector<int> fixed, int lo, std::optional<int> hi) {
    AdmissibleFamily f;
    f.fixed = std::move(fixed);
    f.has_free = true;
    f.lo = lo;
    f.hi = hi;
    return f;
}

AdmissibleFamily fam_fixed(std::vector<int> fixed) {
    AdmissibleFamily f;
    f.fixed = std::move(fixed);
    return f;
}

// the transcription the regenerated table must reproduce row for row
std::vector<AdmissibleFamily> transcription() {
    std::vector<AdmissibleFamily> t;
    AdmissibleFamily two;
    two.fixed = {3};
    two.mid = std::make_pair(3, 6);
    two.has_free = true;
    two.lo = 3;
    t.push_back(two);                       // (3,a,b), 3<=a<=6
    t.push_back(fam({3, 7}, 7, 41));
    t.push_back(fam({3, 8}, 8, 23));
    t.push_back(fam({3, 9}, 9, 17));
    t.push_back(fam({3, 10}, 10, 14));
    t.push_back(fam({3, 11}, 11, 13));
    t.push_back(fam({4, 4}, 4, std::nullopt));
    t.push_back(fam({4, 5}, 5, 19));
    t.push_back(fam({4, 6}, 6, 11));
    t.push_back(fam({4, 7}, 7, 9));
    t.push_back(fam({5, 5}, 5, 9));
    t.push_back(fam_fixed({5, 6, 6}));
    t.push_back(fam_fixed({5, 6, 7}));
    t.push_back(fam({3, 3, 3}, 3, std::nullopt));
    t.push_back(fam({3, 3, 4}, 4, 11));
    t.push_back(fam({3, 3, 5}, 5, 7));
    t.push_back(fam({3, 4, 4}, 4, 5));
    t.push_back(fam({3, 3, 3, 3}, 3, 5));
    return t;
}

} // namespace

TEST_CASE("regenerated table matches the transcription row for row") {
    auto fams = enumerate_admissible();
    auto want = transcription();
    REQUIRE(fams.size() == 18);
    // compare as sets of rows (the canonical order is degree, then entries)
    auto key = [](const AdmissibleFamily& f) { return f.text(); };
    std::vector<std::string> a, b;
    for (const auto& f : fams) a.push_back(key(f));
    for (const auto& f : want) b.push_back(key(f));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
}

TEST_CASE("membership agrees with direct evaluation at the bounds") {
    CHECK(is_admissible({3, 7, 41}));
    CHECK_FALSE(is_admissible({3, 7, 42}));
    CHECK(is_admissible({3, 8, 23}));
    CHECK_FALSE(is_admissible({3, 8, 24}));
    CHECK(is_admissible({4, 5, 19}));
    CHECK_FALSE(is_admissible({4, 5, 20}));
    CHECK(is_admissible({5, 6, 7}));
    CHECK_FALSE(is_admissible({5, 6, 8}));
    CHECK_FALSE(is_admissible({3, 3, 3, 3, 3, 3})); // degree six
    CHECK_THROWS_AS(is_admissible({2, 3, 3}), admissible_error);
}

TEST_CASE("family bounds are sharp") {
    for (const auto& f : enumerate_admissible()) {
        if (!f.has_free) {
            CHECK(curvature_of(f.fixed).sign() > 0);
            continue;
        }
        if (f.mid) continue; // the two-parameter family is checked below
        FaceVector base = f.fixed;
        base.push_back(f.lo);
        CHECK(curvature_of(base).sign() > 0);
        if (f.hi) {
            FaceVector top = f.fixed;
            top.push_back(*f.hi);
            CHECK(curvature_of(top).sign() > 0);
            FaceVector beyond = f.fixed;
            beyond.push_back(*f.hi + 1);
            CHECK(curvature_of(beyond).sign() <= 0);
        } else {
            // symbolic tail: the limit certifies positivity for every size
            Rational floor = unbounded_family_curvature_floor(f);
            CHECK(floor.sign() >= 0);
            for (int a = f.lo; a < f.lo + 60; ++a) {
                FaceVector fv = f.fixed;
                fv.push_back(a);
                CHECK(curvature_of(fv) > floor);
            }
        }
    }
}

TEST_CASE("two-parameter family tail") {
    AdmissibleFamily two = enumerate_admissible().front();
    REQUIRE(two.mid.has_value());
    CHECK(unbounded_family_curvature_floor(two).sign() >= 0);
    for (int a = 3; a <= 6; ++a)
        for (int b = a; b < a + 60; ++b) CHECK(curvature_of({3, a, b}).sign() > 0);
    // just outside the grouped range the vector must fall in a bounded family
    CHECK(is_admissible({3, 7, 41}));
    CHECK_FALSE(two.contains({3, 7, 8}));
    CHECK(two.contains({3, 6, 100}));
    CHECK(two.contains({3, 3, 3}));
}

TEST_CASE("membership cross-check against enumerated families") {
    auto fams = enumerate_admissible();
    auto in_some_family = [&](const FaceVector& fv) {
        for (const auto& f : fams)
            if (f.contains(fv)) return true;
        return false;
    };
    // exhaustive over all multisets of degree 3..5 with entries up to 200
    const int cap3 = 200, cap45 = 60;
    int mismatches = 0;
    for (int a = 3; a <= cap3; ++a)
        for (int b = a; b <= cap3; ++b)
            for (int c = b; c <= cap3; ++c) {
                FaceVector fv{a, b, c};
                if (is_admissible(fv) != in_some_family(fv)) ++mismatches;
            }
    CHECK(mismatches == 0);
    for (int a = 3; a <= cap45; ++a)
        for (int b = a; b <= cap45; ++b)
            for (int c = b; c <= cap45; ++c)
                for (int d = c; d <= cap45; ++d) {
                    FaceVector fv{a, b, c, d};
                    if (is_admissible(fv) != in_some_family(fv))
                        FAIL("mismatch at degree-4 vector");
                }
    for (int a = 3; a <= 8; ++a)
        for (int b = a; b <= 8; ++b)
            for (int c = b; c <= 8; ++c)
                for (int d = c; d <= 8; ++d)
                    for (int e = d; e <= 8; ++e) {
                        FaceVector fv{a, b, c, d, e};
                        if (is_admissible(fv) != in_some_family(fv))
                            FAIL("mismatch at degree-5 vector");
                    }
}
