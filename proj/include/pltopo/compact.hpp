#pragma once

#include "pltopo/complex.hpp"

#include <cstdint>
#include <vector>

namespace pltopo {

/// Level set complex: cells of a complex split by the F-preimages of the
/// decomposition of R into points c_1 < ... < c_k and the open intervals
/// between them. Piece 2i is the interval below c_{i+1}, piece 2i+1 the point c_{i+1}.
struct RefinedComplex : PolyhedralComplex {
    std::vector<Rational> levels;
    /// Index of the unrefined cell each cell came from.
    std::vector<std::size_t> source;

    int piece_of(const Rational& value) const;
    /// Cells whose piece lies in [lo, hi].
    std::vector<std::size_t> cells_in_pieces(int lo, int hi) const;
};

/// Throws InputError unless levels are strictly increasing.
RefinedComplex refine_at_levels(const PolyhedralComplex& cx, const std::vector<Rational>& levels);

/// Cells of a face-closed subcomplex intersected with the orthogonal
/// complement of their component's lineality space.
struct Essentialization {
    PolyhedralComplex complex;
    /// Index in the input complex of each cell.
    std::vector<std::size_t> source;
    /// Connected component of each cell.
    std::vector<std::size_t> component;
    /// Per component, a basis of the lineality space projected away.
    std::vector<Matrix> lineality;
};

/// `cells` must be face-closed. Faces are recomputed on the subset.
Essentialization essentialize(const PolyhedralComplex& cx, const std::vector<std::size_t>& cells);

/// Compact polytopal complex given by vertex sets.
struct PolytopalModel {
    std::size_t ambient_dim = 0;
    /// Lexicographically sorted.
    std::vector<Vec> vertices;
    /// Sorted vertex index sets, closed under taking faces.
    std::vector<std::vector<std::size_t>> cells;
    std::vector<int> dimensions;
    /// Bitmask of distinguished subcomplexes containing each cell.
    std::vector<std::uint32_t> marks;
    /// For polytopes coming directly from a source cell, that cell; -1 for derived faces.
    std::vector<long> source;
    /// Facets of each cell, as cell indices.
    std::vector<std::vector<std::size_t>> facets;

    std::size_t count_of_dimension(int d) const;
};

/// One input polytope of a model: its points (a superset of its vertices is fine).
struct Polytope {
    std::vector<Vec> points;
    std::uint32_t marks = 0;
    long source = -1;
};

/// Builds the model spanned by the polytopes and all of their faces; faces
/// inherit the union of marks of the polytopes they bound.
PolytopalModel build_model(std::size_t ambient_dim, const std::vector<Polytope>& polytopes);

/// Union of vertex hulls K_P. Throws PreconditionError on an unpointed cell.
/// marks[i] (optional) tags the hull of cells[i].
PolytopalModel compact_part(const PolyhedralComplex& cx, const std::vector<std::size_t>& cells,
                            const std::vector<std::uint32_t>& marks = {});

/// Each cell intersected with an axis box containing every vertex strictly
/// inside it, with all faces.
PolytopalModel box_truncate(const PolyhedralComplex& cx, const std::vector<std::size_t>& cells,
                            const std::vector<std::uint32_t>& marks = {});

PolytopalModel sublevel_model(const PolyhedralComplex& cx, const Rational& c);
PolytopalModel superlevel_model(const PolyhedralComplex& cx, const Rational& c);
PolytopalModel level_model(const PolyhedralComplex& cx, const Rational& c);

/// Mark bit of the distinguished subcomplex in pair models.
inline constexpr std::uint32_t kSubMark = 1;

/// Model of the strip F in [a - eps, a] near the flat component K at level a:
/// the closed star of K in the refined strip, truncated to a box, with K
/// marked by kSubMark. Homology of (model, model minus K) equals that of
/// (F <= a, F <= a minus K). Throws PreconditionError if a threshold lies in [a - eps, a).
PolytopalModel strip_pair_model(const CanonicalComplex& cx, const FlatComponent& k, const Rational& eps);

/// Default strip width: half the gap to the next smaller threshold, or 1.
Rational default_epsilon(const CanonicalComplex& cx, const Rational& a);

/// Pair (F in [lo, hi], F in [lo, mid]) with the second part marked, lo < mid < hi.
/// Each must avoid thresholds where the excision argument needs it; callers pick
/// levels beyond every threshold.
PolytopalModel band_pair_model(const PolyhedralComplex& cx, const Rational& lo, const Rational& mid,
                               const Rational& hi, bool lower_part_marked);

} // namespace pltopo
