#include <doctest.h>

#include "legch/io.hpp"
#include "legch/toric.hpp"

using namespace legch;

namespace {

DelzantPolytope cp2() { return preset("clifford", 3).polytope; }
DelzantPolytope square() { return preset("p1xp1", std::nullopt).polytope; }

}  // namespace

TEST_CASE("standard 2-simplex validates with 3 vertices")
{
    auto rep = validate_delzant(cp2());
    CHECK(rep.ok);
    CHECK(rep.vertices.size() == 3);
    CHECK(rep.omega_integral);
}

TEST_CASE("unit square validates with 4 vertices")
{
    auto rep = validate_delzant(square());
    CHECK(rep.ok);
    CHECK(rep.vertices.size() == 4);
}

TEST_CASE("non-primitive normal is reported")
{
    DelzantPolytope p = square();
    p.facets[0].normal = {Int(2), Int(0)};
    auto rep = validate_delzant(p);
    CHECK_FALSE(rep.ok);
    bool found = false;
    for (const auto& issue : rep.issues)
        if (issue.kind == ValidationIssue::Kind::NotPrimitive && issue.subject == 0) found = true;
    CHECK(found);
}

TEST_CASE("non-basis vertex normals are reported as not smooth")
{
    // facets x >= 0, 2y - x >= 0, 1 - y >= 0: determinant 2 at the origin
    DelzantPolytope p;
    p.dim = 2;
    p.facets.push_back({{Int(1), Int(0)}, Rat(0)});
    p.facets.push_back({{Int(-1), Int(2)}, Rat(0)});
    p.facets.push_back({{Int(0), Int(-1)}, Rat(1)});
    auto rep = validate_delzant(p);
    CHECK_FALSE(rep.ok);
    bool found = false;
    for (const auto& issue : rep.issues)
        if (issue.kind == ValidationIssue::Kind::NotSmooth) found = true;
    CHECK(found);
}

TEST_CASE("unbounded polyhedra are reported")
{
    DelzantPolytope p;
    p.dim = 2;
    p.facets.push_back({{Int(1), Int(0)}, Rat(0)});
    p.facets.push_back({{Int(0), Int(1)}, Rat(0)});
    auto rep = validate_delzant(p);
    bool found = false;
    for (const auto& issue : rep.issues)
        if (issue.kind == ValidationIssue::Kind::NotBounded) found = true;
    CHECK(found);
}

TEST_CASE("monotone fiber of the simplex and the square")
{
    auto f = monotone_fiber(cp2());
    CHECK(f.point == RatVec{Rat(1, 3), Rat(1, 3)});
    CHECK(f.facet_distance == Rat(1, 3));
    CHECK(f.tau == 3);
    CHECK(f.tame);

    auto g = monotone_fiber(square());
    CHECK(g.point == RatVec{Rat(1, 2), Rat(1, 2)});
    CHECK(g.tau == 2);
}

TEST_CASE("rectangle has no monotone point")
{
    DelzantPolytope p;
    p.dim = 2;
    p.facets.push_back({{Int(1), Int(0)}, Rat(0)});
    p.facets.push_back({{Int(-1), Int(0)}, Rat(1)});
    p.facets.push_back({{Int(0), Int(1)}, Rat(0)});
    p.facets.push_back({{Int(0), Int(-1)}, Rat(2)});
    CHECK_THROWS_AS(monotone_fiber(p), NoMonotonePoint);
}

TEST_CASE("disk potential of the worked examples")
{
    auto p = cp2();
    auto f = monotone_fiber(p);
    auto w = disk_potential(p, f);
    LaurentPoly expect(2);
    expect.add_term({Int(1), Int(0)}, 1);
    expect.add_term({Int(0), Int(1)}, 1);
    expect.add_term({Int(-1), Int(-1)}, 1);
    CHECK(w == expect);

    auto sq = square();
    auto wsq = disk_potential(sq, monotone_fiber(sq));
    LaurentPoly expect_sq(2);
    expect_sq.add_term({Int(1), Int(0)}, 1);
    expect_sq.add_term({Int(-1), Int(0)}, 1);
    expect_sq.add_term({Int(0), Int(1)}, 1);
    expect_sq.add_term({Int(0), Int(-1)}, 1);
    CHECK(wsq == expect_sq);

    auto p1 = preset("clifford", 2).polytope;  // the interval, two facets
    auto w1 = disk_potential(p1, monotone_fiber(p1));
    LaurentPoly expect_1(1);
    expect_1.add_term({Int(1)}, 1);
    expect_1.add_term({Int(-1)}, 1);
    CHECK(w1 == expect_1);
}

TEST_CASE("potential has one unit term per facet and Newton polytope the hull of normals")
{
    for (const char* name : {"clifford", "p1xp1"}) {
        auto spec = preset(name, name == std::string("clifford") ? std::optional<int>(4) : std::nullopt);
        auto f = monotone_fiber(spec.polytope);
        auto w = disk_potential(spec.polytope, f);
        CHECK(w.term_count() == spec.polytope.facets.size());
        for (const auto& [e, c] : w.terms()) CHECK(c == 1);
        for (const auto& facet : spec.polytope.facets) {
            Rat v = facet.offset;
            for (size_t i = 0; i < spec.polytope.dim; ++i)
                v += Rat(facet.normal[i]) * f.point[i];
            CHECK(v == 1 / f.tau);
        }
        std::vector<IntVec> normals;
        for (const auto& facet : spec.polytope.facets) normals.push_back(facet.normal);
        auto vertices = hull_vertices(w.support());
        auto normal_vertices = hull_vertices(normals);
        std::sort(vertices.begin(), vertices.end());
        std::sort(normal_vertices.begin(), normal_vertices.end());
        CHECK(vertices == normal_vertices);
    }
}

TEST_CASE("offset rescaling rescales the monotone data, not the potential")
{
    auto p = cp2();
    auto f = monotone_fiber(p);
    auto w = disk_potential(p, f);
    for (Rat s : {Rat(2), Rat(1, 3), Rat(5, 2)}) {
        DelzantPolytope scaled = p;
        for (auto& facet : scaled.facets) facet.offset *= s;
        auto fs = monotone_fiber(scaled);
        CHECK(fs.facet_distance == f.facet_distance * s);
        CHECK(fs.tau == f.tau / s);
        CHECK(disk_potential(scaled, fs) == w);
    }
}

TEST_CASE("tameness flag reflects tau > 1")
{
    auto p = cp2();
    for (auto& facet : p.facets) facet.offset *= 3;  // l = 1, tau = 1
    auto f = monotone_fiber(p);
    CHECK(f.tau == 1);
    CHECK_FALSE(f.tame);
}
