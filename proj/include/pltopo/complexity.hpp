#pragma once

#include "pltopo/compact.hpp"
#include "pltopo/complex.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace pltopo {

struct LocalComplexityRecord {
    Rational level;
    std::size_t component = 0;
    std::vector<std::size_t> cells;
    int dimension = 0;
    /// ranks[i] = rank of H_i(F <= a, F <= a minus K), i = 0..n.
    std::vector<std::size_t> ranks;
    std::size_t total = 0;
    bool h_critical = false;
};

/// Ranks of H_*(X, A) for a pair model. With `complement`, A is the part of X
/// away from the marked subcomplex; otherwise A is the marked subcomplex.
std::vector<std::size_t> pair_ranks(const PolytopalModel& model, bool complement);

/// Betti numbers of a model, padded to length ambient_dim + 1.
std::vector<std::size_t> model_betti(const PolytopalModel& model);

LocalComplexityRecord local_h_complexity(const CanonicalComplex& cx, const FlatComponent& k,
                                         std::optional<Rational> eps = std::nullopt);

std::size_t global_h_complexity(const CanonicalComplex& cx);

/// M = max |threshold| + 1, or 1 without thresholds.
Rational stable_bound(const CanonicalComplex& cx);

struct StableComplexities {
    Rational M;
    std::vector<std::size_t> sublevel_neg;
    std::vector<std::size_t> sublevel_pos;
    std::vector<std::size_t> superlevel_neg;
    std::vector<std::size_t> superlevel_pos;
};

/// With M unset the canonical stable_bound is used; any M beyond all thresholds is valid.
StableComplexities stable_complexities(const CanonicalComplex& cx, std::optional<Rational> m = std::nullopt);

struct CoarseComplexities {
    std::vector<std::size_t> sublevel;
    std::vector<std::size_t> superlevel;
    std::size_t sublevel_total = 0;
    std::size_t superlevel_total = 0;
};

CoarseComplexities coarse_complexities(const CanonicalComplex& cx, std::optional<Rational> m = std::nullopt);

struct ComponentCounts {
    /// Components of F <= -M, F <= M, F >= -M, F >= M.
    std::size_t sub_neg = 0;
    std::size_t sub_pos = 0;
    std::size_t super_neg = 0;
    std::size_t super_pos = 0;
};

ComponentCounts component_counts(const StableComplexities& s);
ComponentCounts component_counts(const CanonicalComplex& cx);

enum class VertexKind { Regular, NondegenerateCritical, DegenerateCritical };

std::string to_string(VertexKind k);

struct VertexClass {
    Vec point;
    Rational value;
    VertexKind kind = VertexKind::Regular;
    /// Meaningful for NondegenerateCritical.
    int index = 0;
};

/// Depth-2 combinatorial classification of a 0-cell. Throws UnsupportedError
/// unless the network has one hidden layer and is generic and transversal.
VertexClass classify_vertex(const CanonicalComplex& cx, std::size_t cell);

/// True iff the all-inactive region is empty. Throws UnsupportedError unless
/// the network has one hidden layer and is generic.
bool is_pl_morse_depth2(const Network& net);

struct ComplexityReport {
    std::vector<std::size_t> architecture;
    std::vector<Rational> thresholds;
    Census census;
    std::vector<LocalComplexityRecord> components;
    std::size_t global = 0;
    StableComplexities stable;
    CoarseComplexities coarse;
    ComponentCounts counts;
    bool generic = false;
    bool vertices_classified = false;
    std::string classification_note;
    std::vector<VertexClass> vertices;
    std::size_t vertex_count = 0;
    /// Informational comparisons, never enforced.
    bool coarse_le_global = false;
    bool global_le_vertex_count = false;
    /// Component-count lower bounds on the coarse totals.
    bool sublevel_count_bound = false;
    bool superlevel_count_bound = false;
};

/// Full analysis. Throws UnsupportedError for non-transversal networks.
ComplexityReport analyze(const Network& net);
ComplexityReport analyze(const CanonicalComplex& cx);

nlohmann::json to_json(const ComplexityReport& r);

} // namespace pltopo
