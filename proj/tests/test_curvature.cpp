#include <doctest.h>

#include <set>

#include "curvlab/curvature.hpp"
#include "curvlab/generators.hpp"
#include "curvlab/rotmap_io.hpp"

using namespace curvlab;

TEST_CASE("curvature of named face vectors") {
    CHECK(curvature_of({3, 3, 3}) == rat(1, 2));
    CHECK(curvature_of({3, 7, 41}) == rat(1, 1722));
    CHECK(curvature_of({5, 6, 7}) == rat(1, 105));
    CHECK(curvature_of({3, 3, 5, 7}) == rat(1, 105));
    CHECK(curvature_of({3, 11, 13}) == rat(1, 858));
    CHECK(curvature_of({3, 3, 4, 11}) == rat(1, 132));
    CHECK(curvature_of({3, 11, 11}) == rat(1, 66));
    CHECK(curvature_of({3, 3, 3, 13}) == rat(1, 13));
    CHECK(curvature_of({5, 5, 5}) == rat(1, 10)); // dodecahedron corners
}

TEST_CASE("total curvature of sphere maps is exactly two") {
    CHECK(total_curvature(icosahedron()) == rat(2));
    CHECK(total_curvature(dodecahedron()) == rat(2));
    CHECK(total_curvature(prism(40)) == rat(2));
    CHECK(total_curvature(graph208_chain()) == rat(2));
    CHECK(total_curvature(multi_incidence_example(10)) == rat(2));
}

TEST_CASE("banded 208-vertex graph curvature census") {
    PlanarMap m = graph208_chain();
    int n546 = 0, n105 = 0, n39 = 0;
    for (VertexId v = 0; v < m.vertex_count(); ++v) {
        Rational k = curvature(m, v);
        if (k == rat(1, 546))
            ++n546;
        else if (k == rat(1, 105))
            ++n105;
        else if (k == rat(1, 39))
            ++n39;
        else
            FAIL("unexpected curvature ", k.str());
    }
    CHECK(n546 == 52);
    CHECK(n105 == 130);
    CHECK(n39 == 26);
    CHECK(rat(52) * rat(1, 546) + rat(130) * rat(1, 105) + rat(26) * rat(1, 39) == rat(2));
}

TEST_CASE("excess margins against tabulated decimals") {
    CHECK(excess_of({3, 11, 13}) * rat(1, 7) > Rational::parse("-0.00121"));
    CHECK(excess_of({4, 5, 19}) * rat(3, 4) > Rational::parse("-0.00521"));
    CHECK(excess_of({3, 3, 3}).sign() > 0);
    CHECK(excess_of({3, 7, 41}) > Rational::parse("-0.009"));
    CHECK(excess_of({3, 7, 41}).sign() < 0);
    CHECK(excess_of({4, 5, 19}) == rat(1, 380) - rat(2, 209));
}

TEST_CASE("curvature is invariant under relabeling") {
    PlanarMap m = g_family(12);
    std::vector<VertexId> perm(m.vertex_count());
    for (int i = 0; i < m.vertex_count(); ++i) perm[i] = (i + 5) % m.vertex_count();
    PlanarMap r = m.relabeled(perm);
    CHECK(total_curvature(r) == rat(2));
    for (VertexId v = 0; v < m.vertex_count(); ++v)
        CHECK(curvature(m, v) == curvature(r, perm[v]));
}

TEST_CASE("rational parsing and rendering") {
    CHECK(Rational::parse("0.002") == rat(1, 500));
    CHECK(Rational::parse("-0.00521") == rat(-521, 100000));
    CHECK(Rational::parse("0.00003") == rat(3, 100000));
    CHECK(Rational::parse("34/4389").str() == "34/4389");
    CHECK(Rational::parse("-26/4389") == rat(-26, 4389));
    CHECK(rat(4, 8).str() == "1/2");
    CHECK(rat(-3, -6).str() == "1/2");
    CHECK(rat(7).str() == "7");
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse(""));
}
