#pragma once

#include "pltopo/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace pltopo {

struct PolytopalModel;

/// Sorted vertex indices.
using Simplex = std::vector<std::size_t>;

/// Finite abstract simplicial complex, closed under faces by construction.
class SimplicialComplex {
public:
    /// Adds s and all of its faces. Returns the index of s within its dimension.
    std::size_t add(Simplex s);
    std::optional<std::size_t> find(const Simplex& s) const;
    bool contains(const Simplex& s) const { return find(s).has_value(); }

    /// -1 when empty.
    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
    const std::vector<Simplex>& of_dimension(int d) const;
    std::size_t size() const;
    bool empty() const { return by_dim_.empty(); }
    std::size_t vertex_count() const { return of_dimension(0).size(); }

private:
    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<std::map<Simplex, std::size_t>> index_;
};

/// Boundary data of a finite chain complex over the integers. boundary[d][j]
/// lists (row, coefficient) pairs of the image of the j-th d-cell.
struct ChainComplex {
    std::vector<std::size_t> sizes;
    std::vector<std::vector<std::vector<std::pair<std::size_t, int>>>> boundary;
};

/// Betti numbers over Q by exact rank computation. Result has one entry per
/// dimension of the complex (empty for the empty complex).
std::vector<std::size_t> betti(const ChainComplex& cc);

std::vector<std::size_t> betti(const SimplicialComplex& sc);

/// Ranks of H_*(X, A) for a subcomplex A of X. When require_full is set,
/// throws PreconditionError naming a simplex of X spanned by A but not in A.
std::vector<std::size_t> relative_betti(const SimplicialComplex& x, const SimplicialComplex& a,
                                        bool require_full = true);

/// The first simplex of x whose vertices all lie in a but which is not in a.
std::optional<Simplex> fullness_violation(const SimplicialComplex& x, const SimplicialComplex& a);

/// Full subcomplex of sc spanned by the vertices outside K.
SimplicialComplex complement_complex(const SimplicialComplex& sc, const SimplicialComplex& k);

struct Subdivision {
    SimplicialComplex complex;
    /// origin[v] is the simplex of the source complex that vertex v is the barycenter of.
    std::vector<Simplex> origin;
};

Subdivision barycentric(const SimplicialComplex& sc);

/// Image of a subcomplex of the source under barycentric subdivision.
SimplicialComplex subdivide(const Subdivision& sd, const SimplicialComplex& sub);

struct Triangulation {
    SimplicialComplex complex;
    /// Top simplices triangulating each model cell.
    std::vector<std::vector<Simplex>> cell_simplices;
};

/// Pulling triangulation from the lexicographically smallest vertex, without
/// new vertices. Compatible across shared faces.
Triangulation triangulate(const PolytopalModel& model);

/// Union of the triangulations of the model cells whose marks intersect mask.
SimplicialComplex marked_subcomplex(const Triangulation& tri, const PolytopalModel& model, std::uint32_t mask);

/// Euler characteristic from simplex counts.
long euler_characteristic(const SimplicialComplex& sc);

/// Pads or trims a rank vector to the given length.
std::vector<std::size_t> resize_ranks(std::vector<std::size_t> ranks, std::size_t length);

} // namespace pltopo
