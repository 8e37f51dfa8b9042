#pragma once

#include "pltopo/network.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pltopo {

/// sum_{k=n+1}^{n1} C(n1, k) / 2^{n1}.
Rational plmorse_probability_formula(unsigned n, unsigned n1);

struct TrialSummary {
    std::string experiment;
    std::vector<std::size_t> architecture;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    SamplingScheme scheme = SamplingScheme::Gaussian;
    std::size_t successes = 0;
    Rational empirical_rate;
    std::optional<Rational> closed_form;
    /// Lower bound on the rate (flat-cell experiment).
    std::optional<Rational> lower_bound;
    /// p-hat -/+ 4 sigma, clamped to [0, 1].
    double ci_low = 0;
    double ci_high = 0;
    /// 4 sigma of the reference probability at this trial count.
    double tolerance = 0;
    bool within_tolerance = false;
    /// Draws redone because a sampled net was not generic.
    std::size_t resampled = 0;
};

/// Deterministic per-trial seed.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

/// Worker count: PLMORSE_THREADS if set, else hardware concurrency.
unsigned worker_count();

TrialSummary montecarlo_plmorse(unsigned n, unsigned n1, std::size_t trials, std::uint64_t seed,
                                SamplingScheme scheme = SamplingScheme::Gaussian);

TrialSummary montecarlo_flat_cell(const std::vector<std::size_t>& arch, std::size_t trials, std::uint64_t seed,
                                  SamplingScheme scheme = SamplingScheme::Gaussian);

nlohmann::json to_json(const TrialSummary& s);

} // namespace pltopo
