#include "pltopo/errors.hpp"
#include "pltopo/linalg.hpp"
#include "pltopo/polyhedron.hpp"

#include "nets.hpp"

#include <doctest.h>

using namespace pltopo;
using pltopo::testing::q;

namespace {

Polyhedron quadrant()
{
    Polyhedron p(2);
    p.add_inequality({q(1), q(0)}, 0);
    p.add_inequality({q(0), q(1)}, 0);
    return p;
}

Polyhedron unit_square()
{
    Polyhedron p = quadrant();
    p.add_inequality({q(-1), q(0)}, 1);
    p.add_inequality({q(0), q(-1)}, 1);
    return p;
}

} // namespace

TEST_CASE("rationals parse and print exactly")
{
    CHECK(parse_rational("1/3") == q(1, 3));
    CHECK(parse_rational("-6/4") == q(-3, 2));
    CHECK(parse_rational("0.25") == q(1, 4));
    CHECK(to_string(q(-3, 2)) == "-3/2");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK(snap_dyadic(0.5) == q(1, 2));
}

TEST_CASE("solve_linear classifies systems")
{
    auto unique = solve_linear({{q(1), q(1)}, {q(1), q(-1)}}, {q(1), q(0)});
    CHECK(unique.kind == LinearSolution::Kind::Unique);
    CHECK(unique.particular == Vec{q(1, 2), q(1, 2)});

    auto param = solve_linear({{q(1), q(1)}, {q(2), q(2)}}, {q(1), q(2)});
    CHECK(param.kind == LinearSolution::Kind::Parametric);
    CHECK(param.directions.size() == 1);

    auto none = solve_linear({{q(1), q(1)}, {q(1), q(1)}}, {q(1), q(2)});
    CHECK(none.kind == LinearSolution::Kind::Inconsistent);

    CHECK(rank({{q(1), q(2)}, {q(2), q(4)}}) == 1);
    CHECK(nullspace({{q(1), q(2)}}, 2).size() == 1);
}

TEST_CASE("vrep of basic polyhedra")
{
    const Polyhedron quad = quadrant();
    const VRep& qv = quad.vrep();
    CHECK(qv.points == std::vector<Vec>{Vec{q(0), q(0)}});
    CHECK(qv.rays == std::vector<Vec>{{q(0), q(1)}, {q(1), q(0)}});
    CHECK(qv.lineality.empty());

    const Polyhedron square = unit_square();
    const VRep& sv = square.vrep();
    CHECK(sv.points.size() == 4);
    CHECK(sv.rays.empty());
    CHECK(unit_square().bounded());

    Polyhedron half(2);
    half.add_inequality({q(0), q(1)}, 0);
    CHECK(half.vertices().empty());
    CHECK_FALSE(half.pointed());
    REQUIRE(half.vrep().lineality.size() == 1);
    CHECK(rank({half.vrep().lineality[0], {q(1), q(0)}}) == 1);
    CHECK(half.vrep().rays == std::vector<Vec>{{q(0), q(1)}});
    CHECK(half.dimension() == 2);
}

TEST_CASE("normal span")
{
    Polyhedron half(2);
    half.add_inequality({q(0), q(1)}, 0);
    CHECK(rank(normal_span(half), 2) == 1);
    CHECK(rank(normal_span(unit_square()), 2) == 2);
    CHECK(normal_span(Polyhedron(2)).empty());
}

TEST_CASE("strict feasibility")
{
    // Rows encode <a, x> + b < 0.
    CHECK(strict_feasible({{{q(1)}, q(0)}}, 1));
    CHECK_FALSE(strict_feasible({{{q(1)}, q(0)}, {{q(-1)}, q(0)}}, 1));
    // {x < 0, y < 0, x + y > 1} is empty.
    CHECK_FALSE(strict_feasible({{{q(1), q(0)}, q(0)}, {{q(0), q(1)}, q(0)}, {{q(-1), q(-1)}, q(1)}}, 2));
    // {x < 0, y > 0, x + y > 1} is not: (-1, 3).
    CHECK(strict_feasible({{{q(1), q(0)}, q(0)}, {{q(0), q(-1)}, q(0)}, {{q(-1), q(-1)}, q(1)}}, 2));
}

TEST_CASE("intersection and containment")
{
    Polyhedron box(2);
    box.add_inequality({q(-1), q(0)}, 1);
    box.add_inequality({q(0), q(-1)}, 1);
    Polyhedron sq = intersect(quadrant(), box);
    CHECK(sq.contains(unit_square()));
    CHECK(unit_square().contains(sq));

    Polyhedron a(1), b(1);
    a.add_inequality({q(1)}, -1);
    b.add_inequality({q(-1)}, 0);
    CHECK(intersect(a, b).empty());

    Polyhedron p = quadrant();
    Polyhedron pp = intersect(p, p);
    CHECK((pp.contains(p) && p.contains(pp)));
}

TEST_CASE("minkowski reconstruction on random polyhedra")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Polyhedron p(2);
        for (int k = 0; k < 4; ++k)
            p.add_inequality({sample_parameter(rng, SamplingScheme::Uniform), sample_parameter(rng, SamplingScheme::Uniform)},
                             sample_parameter(rng, SamplingScheme::Uniform) + 1);
        if (p.empty())
            continue;
        const VRep& v = p.vrep();
        for (const auto& x : v.points)
            CHECK(p.contains(x));
        // vertex + rays and lineality stay inside
        for (const auto& x : v.points) {
            for (const auto& r : v.rays)
                CHECK(p.contains(add(x, scale(r, 7))));
            for (const auto& l : v.lineality) {
                CHECK(p.contains(add(x, scale(l, 5))));
                CHECK(p.contains(sub(x, scale(l, 5))));
            }
        }
        const Vec ri = p.relative_interior_point();
        CHECK(p.contains(ri));
    }
}

TEST_CASE("hull facets")
{
    const HullFacets h = convex_hull_facets({{q(0), q(0)}, {q(1), q(0)}, {q(0), q(1)}, {q(1), q(1)}});
    CHECK(h.dimension == 2);
    CHECK(h.facets.size() == 4);
    CHECK(affine_dimension({{q(0), q(0)}, {q(1), q(1)}, {q(2), q(2)}}) == 1);
}
