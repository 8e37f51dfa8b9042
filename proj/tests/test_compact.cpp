#include "pltopo/compact.hpp"
#include "pltopo/complexity.hpp"
#include "pltopo/errors.hpp"
#include "pltopo/homology.hpp"

#include "nets.hpp"

#include <doctest.h>

using namespace pltopo;
using namespace pltopo::testing;

using Sizes = std::vector<std::size_t>;

namespace {

std::vector<std::size_t> all_cells(const PolyhedralComplex& cx)
{
    std::vector<std::size_t> out(cx.cells.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = i;
    return out;
}

Sizes dims(const PolyhedralComplex& cx)
{
    Sizes out(cx.ambient_dim + 1, 0);
    for (const auto& c : cx.cells)
        ++out[c.dimension];
    return out;
}

} // namespace

TEST_CASE("level refinement of N1")
{
    const CanonicalComplex cx = build_complex(n1());
    const RefinedComplex at1 = refine_at_levels(cx, {q(1)});
    // Level curve: two rays and a segment through (0,1) and (1,0).
    CHECK(dims(at1) == Sizes{3, 9, 7});
    std::size_t from_first_quadrant = 0;
    for (std::size_t i = 0; i < at1.cells.size(); ++i)
        from_first_quadrant += at1.source[i] == cx.index.at(TernaryLabel{1, 1});
    CHECK(from_first_quadrant == 3);
    const auto level = at1.cells_in_pieces(1, 1);
    CHECK(level.size() == 5);
    for (std::size_t i : level)
        CHECK(at1.cells[i].flat);

    const RefinedComplex below = refine_at_levels(cx, {q(-1)});
    CHECK(below.cells.size() == 9);
    CHECK_THROWS_AS(refine_at_levels(cx, {q(1), q(0)}), InputError);
}

TEST_CASE("essentialization")
{
    const CanonicalComplex cx = build_complex(single_relu());
    const Essentialization e = essentialize(cx, all_cells(cx));
    REQUIRE(e.lineality.size() == 1);
    CHECK(e.lineality[0].size() == 1);
    CHECK(dims(e.complex) == Sizes{1, 2, 0});
    for (const auto& c : e.complex.cells)
        CHECK(c.geometry.pointed());

    // Pointed complexes keep their cell dimensions.
    const CanonicalComplex pc = build_complex(n1());
    const Essentialization pe = essentialize(pc, all_cells(pc));
    CHECK(dims(pe.complex) == dims(pc));
}

TEST_CASE("compact part")
{
    const CanonicalComplex cx = build_complex(n1());
    const PolytopalModel whole = compact_part(cx, all_cells(cx));
    CHECK(whole.cells.size() == 1);
    CHECK(whole.vertices == std::vector<Vec>{Vec{q(0), q(0)}});

    const auto quadrant = cx.closure({cx.index.at(TernaryLabel{1, 1})});
    CHECK(compact_part(cx, quadrant).cells.size() == 1);

    const CanonicalComplex fan = build_complex(build_fan_network(1));
    for (const auto& k : flat_components(fan)) {
        if (k.dimension != 2)
            continue;
        const PolytopalModel sq = compact_part(fan, k.cells);
        CHECK(sq.count_of_dimension(2) == 1);
        CHECK(sq.count_of_dimension(1) == 4);
        CHECK(sq.count_of_dimension(0) == 4);
    }

    const CanonicalComplex line = build_complex(single_relu());
    CHECK_THROWS_AS(compact_part(line, all_cells(line)), PreconditionError);
}

TEST_CASE("sublevel models of N1")
{
    const CanonicalComplex cx = build_complex(n1());
    CHECK(sublevel_model(cx, q(-1)).cells.empty());
    CHECK(model_betti(sublevel_model(cx, q(0))) == Sizes{1, 0, 0});
    CHECK(model_betti(sublevel_model(cx, q(1))) == Sizes{1, 0, 0});
    CHECK(model_betti(superlevel_model(cx, q(1))) == Sizes{1, 0, 0});
    CHECK(model_betti(level_model(cx, q(1))) == Sizes{1, 0, 0});
}

TEST_CASE("strip pair model at a flat component")
{
    const CanonicalComplex cx = build_complex(n1());
    const FlatComponent k = flat_components(cx).front();
    CHECK(default_epsilon(cx, q(0)) == 1);
    const PolytopalModel m = strip_pair_model(cx, k, q(1));
    // The strip is the third quadrant itself; K covers all of it.
    for (auto mark : m.marks)
        CHECK((mark & kSubMark) != 0);
    CHECK(pair_ranks(m, true) == Sizes{1, 0, 0});

    const CanonicalComplex fan = build_complex(build_fan_network(2));
    for (const auto& comp : flat_components(fan)) {
        if (comp.level != 0 || comp.dimension != 2)
            continue;
        const PolytopalModel sm = strip_pair_model(fan, comp, default_epsilon(fan, q(0)));
        std::size_t marked = 0;
        for (auto mark : sm.marks)
            marked += (mark & kSubMark) != 0;
        CHECK(marked > 0);
        CHECK(marked < sm.cells.size());
        CHECK(pair_ranks(sm, true) == Sizes{0, 2, 0});
    }
}

TEST_CASE("transversal strips collapse to their floor")
{
    for (std::uint64_t s = 0; s < 5; ++s) {
        const CanonicalComplex cx = build_complex(random_network({2, 3, 1}, s));
        const Rational m = stable_bound(cx);
        const PolytopalModel pair = band_pair_model(cx, m, m + 1, m + 2, true);
        // (F in [M, M+2], F in [M, M+1]) has trivial relative homology.
        CHECK(pair_ranks(pair, false) == Sizes{0, 0, 0});
    }
}
