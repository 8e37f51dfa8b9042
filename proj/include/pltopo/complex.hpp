#pragma once

#include "pltopo/network.hpp"
#include "pltopo/polyhedron.hpp"

#include <json.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pltopo {

/// Closed image of an affine form over a polyhedron; an absent bound is infinite.
struct Interval {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
};

/// Image of `form` over P. Precondition: P nonempty.
Interval image_interval(const Polyhedron& p, const AffineForm& form);

/// True iff form restricted to the affine hull of P is constant.
bool constant_on(const Polyhedron& p, const AffineForm& form);

struct Cell {
    TernaryLabel label;
    /// Index of the piece of the real line this cell maps into after level
    /// refinement (-1 for an unrefined cell). Even = open interval, odd = point.
    int piece = -1;
    Polyhedron geometry;
    AffineForm form;
    int dimension = 0;
    bool flat = false;
    bool bounded = false;
    /// Proper faces, as indices into the owning complex.
    std::vector<std::size_t> faces;
};

struct PolyhedralComplex {
    std::size_t ambient_dim = 0;
    std::vector<Cell> cells;

    std::vector<std::size_t> cells_of_dimension(int d) const;
    /// Cells having `i` as a proper face.
    std::vector<std::size_t> cofaces(std::size_t i) const;
    /// Adds every face of every listed cell; result sorted.
    std::vector<std::size_t> closure(const std::vector<std::size_t>& ids) const;
};

/// Face relation by labels: every entry of d is 0 or agrees with c.
bool label_compatible(const TernaryLabel& d, const TernaryLabel& c);

/// Fills `faces` of every cell from labels and pieces.
void compute_faces(PolyhedralComplex& cx);

struct CanonicalComplex : PolyhedralComplex {
    Network net;
    /// Distinct F-values of flat cells, ascending.
    std::vector<Rational> thresholds;
    std::map<TernaryLabel, std::size_t> index;
};

CanonicalComplex build_complex(const Network& net);

struct ZeroCell {
    Vec point;
    Rational value;
    std::size_t cell = 0;
};

std::vector<ZeroCell> zero_cells(const CanonicalComplex& cx);

struct FlatComponent {
    Rational level;
    /// Face-closed, sorted cell indices.
    std::vector<std::size_t> cells;
    int dimension = 0;
};

/// Connected components of the flat subcomplex, ordered by level then by
/// smallest cell index.
std::vector<FlatComponent> flat_components(const CanonicalComplex& cx);

enum class EdgeOrientation { Increasing, Decreasing, Flat };

std::string to_string(EdgeOrientation o);

/// Reference direction of a 1-cell: from its lexicographically smaller vertex
/// to the larger one, along its ray, or along its line.
Vec edge_direction(const Cell& edge);

/// Orientation of F along edge_direction. Throws InputError for non-edges.
EdgeOrientation edge_orientation(const PolyhedralComplex& cx, std::size_t cell);

struct CheckResult {
    bool ok = true;
    std::string witness;
};

CheckResult is_generic(const Network& net);
CheckResult is_transversal(const Network& net);

struct Census {
    /// Indexed by dimension.
    std::vector<std::size_t> cells;
    std::vector<std::size_t> bounded;
    std::vector<std::size_t> unbounded;
};

Census census(const PolyhedralComplex& cx);

/// Cells of the subdivision induced by the first `depth` hidden layers, with
/// the post-activation map of the last of those layers on each.
struct Region {
    TernaryLabel label;
    Polyhedron geometry;
    Matrix map;
    Vec shift;
};

std::vector<Region> enumerate_regions(const Network& net, std::size_t depth);

nlohmann::json dump_complex(const CanonicalComplex& cx);

} // namespace pltopo
