#pragma once

#include "pltopo/network.hpp"

#include <cstddef>
#include <vector>

namespace pltopo {

struct GridPredicate {
    enum class Kind { Sublevel, Superlevel, Band };
    Kind kind = Kind::Sublevel;
    /// Threshold for Sublevel/Superlevel; bounds for Band (lo <= F <= hi).
    Rational c;
    Rational lo;
    Rational hi;

    static GridPredicate sublevel(Rational c) { return {Kind::Sublevel, std::move(c), 0, 0}; }
    static GridPredicate superlevel(Rational c) { return {Kind::Superlevel, std::move(c), 0, 0}; }
    static GridPredicate band(Rational lo, Rational hi) { return {Kind::Band, 0, std::move(lo), std::move(hi)}; }
};

struct OracleResult {
    std::vector<std::size_t> betti;
    /// Smallest distance of a grid value to a predicate boundary.
    double min_margin = 0;
    std::size_t grid_points = 0;
    std::size_t top_cubes = 0;
};

/// Betti numbers of the cubical complex of grid cubes in [lo, hi] whose
/// corners all satisfy the predicate. F is evaluated in double precision at
/// the grid points; the reported margin says how far the classification is
/// from flipping. Input dimension at most 3.
OracleResult grid_oracle(const Network& net, const Vec& lo, const Vec& hi, const Rational& resolution,
                         const GridPredicate& pred);

} // namespace pltopo
