#include "pltopo/ensembles.hpp"
#include "pltopo/errors.hpp"

#include "nets.hpp"

#include <doctest.h>

using namespace pltopo;
using namespace pltopo::testing;

TEST_CASE("closed-form PL Morse probability")
{
    CHECK(plmorse_probability_formula(1, 3) == q(1, 2));
    CHECK(plmorse_probability_formula(2, 3) == q(1, 8));
    CHECK(plmorse_probability_formula(2, 5) == q(1, 2));
    CHECK(plmorse_probability_formula(3, 2) == 0);
    CHECK(plmorse_probability_formula(2, 2) == 0);
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned n1 = 1; n1 <= 2 * n + 1; ++n1)
            CHECK(plmorse_probability_formula(n, n1) <= q(1, 2));
}

TEST_CASE("PL Morse Monte Carlo")
{
    const TrialSummary a = montecarlo_plmorse(1, 3, 10000, 7);
    CHECK(std::abs(to_double(a.empirical_rate) - 0.5) <= 0.02);
    const TrialSummary b = montecarlo_plmorse(2, 3, 10000, 7);
    CHECK(std::abs(to_double(b.empirical_rate) - 0.125) <= 0.015);
    const TrialSummary c = montecarlo_plmorse(3, 2, 1000, 5);
    CHECK(c.successes == 0);
    CHECK(c.empirical_rate == 0);
}

TEST_CASE("flat cell Monte Carlo")
{
    const TrialSummary a = montecarlo_flat_cell({2, 1, 1}, 10000, 3);
    CHECK(std::abs(to_double(a.empirical_rate) - 0.5) <= 0.02);
    const TrialSummary b = montecarlo_flat_cell({2, 3, 1}, 10000, 3);
    CHECK(to_double(b.empirical_rate) >= 0.125 - 0.02);
    CHECK(b.lower_bound.value() == q(1, 8));
}

TEST_CASE("Monte Carlo determinism")
{
    const auto a = to_json(montecarlo_plmorse(2, 3, 200, 1)).dump();
    const auto b = to_json(montecarlo_plmorse(2, 3, 200, 1)).dump();
    CHECK(a == b);
    CHECK(to_json(montecarlo_flat_cell({2, 3, 1}, 200, 9)) == to_json(montecarlo_flat_cell({2, 3, 1}, 200, 9)));
    CHECK(trial_seed(1, 2) != trial_seed(2, 1));
    CHECK_THROWS_AS(montecarlo_plmorse(1, 3, 0, 1), InputError);
}
