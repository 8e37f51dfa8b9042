#include "pltopo/compact.hpp"
#include "pltopo/errors.hpp"
#include "pltopo/homology.hpp"

#include "nets.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace pltopo;
using namespace pltopo::testing;

namespace {

SimplicialComplex hollow_triangle()
{
    SimplicialComplex s;
    s.add({0, 1});
    s.add({1, 2});
    s.add({0, 2});
    return s;
}

using Sizes = std::vector<std::size_t>;

} // namespace

TEST_CASE("betti numbers of small complexes")
{
    CHECK(betti(hollow_triangle()) == Sizes{1, 1});
    SimplicialComplex pts;
    pts.add({0});
    pts.add({1});
    CHECK(betti(pts) == Sizes{2});

    // Annulus: two triangles of vertices 0..2 (inner) and 3..5 (outer).
    SimplicialComplex ann;
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t j = (i + 1) % 3;
        ann.add({i, j, i + 3});
        Simplex t{j, i + 3, j + 3};
        std::sort(t.begin(), t.end());
        ann.add(t);
    }
    CHECK(resize_ranks(betti(ann), 3) == Sizes{1, 1, 0});
    CHECK(euler_characteristic(ann) == 0);
}

TEST_CASE("relative betti")
{
    SimplicialComplex edge;
    edge.add({0, 1});
    SimplicialComplex ends;
    ends.add({0});
    ends.add({1});
    // The endpoints span the edge, so the pair is not full.
    CHECK(relative_betti(edge, ends, false) == Sizes{0, 1});
    CHECK(fullness_violation(edge, ends).has_value());

    SimplicialComplex tri;
    tri.add({0, 1, 2});
    CHECK(relative_betti(tri, hollow_triangle(), false) == Sizes{0, 0, 1});
    CHECK_THROWS_AS(relative_betti(tri, hollow_triangle()), PreconditionError);
    CHECK(fullness_violation(tri, hollow_triangle()).value() == Simplex{0, 1, 2});

    CHECK(relative_betti(hollow_triangle(), SimplicialComplex{}) == Sizes{1, 1});
}

TEST_CASE("complement complex")
{
    SimplicialComplex seg;
    seg.add({0, 1});
    SimplicialComplex k;
    k.add({0});
    const SimplicialComplex c = complement_complex(seg, k);
    CHECK(c.size() == 1);
    CHECK(c.contains({1}));

    const SimplicialComplex path = complement_complex(hollow_triangle(), k);
    CHECK(path.contains({1, 2}));
    CHECK(betti(path) == Sizes{1, 0});

    CHECK(complement_complex(hollow_triangle(), hollow_triangle()).empty());
}

TEST_CASE("barycentric subdivision")
{
    SimplicialComplex tri;
    tri.add({0, 1, 2});
    const Subdivision sd = barycentric(tri);
    CHECK(sd.complex.of_dimension(2).size() == 6);
    CHECK(sd.complex.vertex_count() == 7);

    SimplicialComplex seg;
    seg.add({0, 1});
    const Subdivision ss = barycentric(seg);
    CHECK(ss.complex.of_dimension(1).size() == 2);
    CHECK(ss.complex.vertex_count() == 3);

    CHECK(betti(barycentric(hollow_triangle()).complex) == Sizes{1, 1});
    CHECK(betti(subdivide(sd, hollow_triangle())) == Sizes{1, 1});
}

TEST_CASE("pulling triangulation of polygons")
{
    const PolytopalModel square =
        build_model(2, {Polytope{{{q(0), q(0)}, {q(1), q(0)}, {q(0), q(1)}, {q(1), q(1)}}, 0, -1}});
    CHECK(square.count_of_dimension(2) == 1);
    CHECK(square.count_of_dimension(1) == 4);
    CHECK(triangulate(square).complex.of_dimension(2).size() == 2);

    std::vector<Vec> hex;
    for (int j = 0; j < 6; ++j)
        hex.push_back(rational_circle_point(std::numbers::pi * j / 3));
    const PolytopalModel h = build_model(2, {Polytope{hex, 0, -1}});
    CHECK(triangulate(h).complex.of_dimension(2).size() == 4);

    const PolytopalModel seg = build_model(1, {Polytope{{{q(0)}, {q(1)}}, 0, -1}});
    const Triangulation t = triangulate(seg);
    CHECK(t.complex.of_dimension(1).size() == 1);
    CHECK(t.complex.vertex_count() == 2);
}

TEST_CASE("large reductions stay exact")
{
    // Triangulated torus from a 5x5 grid.
    const std::size_t n = 5;
    auto v = [&](std::size_t i, std::size_t j) { return (i % n) * n + (j % n); };
    SimplicialComplex torus;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Simplex a{v(i, j), v(i + 1, j), v(i + 1, j + 1)};
            Simplex b{v(i, j), v(i, j + 1), v(i + 1, j + 1)};
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            torus.add(a);
            torus.add(b);
        }
    CHECK(betti(torus) == Sizes{1, 2, 1});
    CHECK(betti(barycentric(torus).complex) == Sizes{1, 2, 1});
}
