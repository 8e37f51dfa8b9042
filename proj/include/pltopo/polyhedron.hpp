#pragma once

#include "pltopo/rational.hpp"

#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

namespace pltopo {

/// The affine functional x -> <normal, x> + offset. Used as `>= 0` for
/// inequalities and `== 0` for equalities.
struct Constraint {
    Vec normal;
    Rational offset;

    Rational eval(const Vec& x) const { return dot(normal, x) + offset; }
    bool operator==(const Constraint& other) const = default;
};

/// Scales to an integer row with content 1. Equalities additionally get a
/// positive leading coefficient so that syntactic duplicates coincide.
Constraint canonical(Constraint c, bool equality);

/// Minkowski decomposition P = conv(points) + cone(rays) + span(lineality).
///
/// `points` are the vertices of P intersected with the orthogonal complement
/// of its lineality space; they are the vertices of P exactly when P is
/// pointed. All lists are sorted lexicographically, rays are primitive
/// integer directions.
struct VRep {
    std::vector<Vec> points;
    std::vector<Vec> rays;
    std::vector<Vec> lineality;

    bool empty() const { return points.empty(); }
};

class Polyhedron {
public:
    Polyhedron() = default;
    explicit Polyhedron(std::size_t dim);
    Polyhedron(std::size_t dim, std::vector<Constraint> equalities, std::vector<Constraint> inequalities);

    std::size_t ambient_dim() const { return dim_; }
    const std::vector<Constraint>& equalities() const { return equalities_; }
    const std::vector<Constraint>& inequalities() const { return inequalities_; }

    void add_equality(Vec normal, Rational offset);
    void add_inequality(Vec normal, Rational offset);

    /// Computed on first use; the cache is reset by any mutation.
    const VRep& vrep() const;

    bool empty() const { return vrep().empty(); }
    bool pointed() const { return vrep().lineality.empty(); }
    bool bounded() const { return vrep().rays.empty() && vrep().lineality.empty(); }
    /// Dimension of the affine hull; -1 when empty.
    int dimension() const;
    /// Vertices; empty for unpointed polyhedra.
    std::vector<Vec> vertices() const;

    bool contains(const Vec& x) const;
    /// Set containment, decided on the generators of `other`.
    bool contains(const Polyhedron& other) const;

    /// Indices of inequalities that hold with equality on all of P.
    std::vector<std::size_t> implicit_equalities() const;
    /// True iff some point satisfies the equalities and every inequality strictly.
    bool open_part_nonempty() const;
    /// A point in the relative interior. Precondition: nonempty.
    Vec relative_interior_point() const;
    /// Basis of the linear space parallel to the affine hull.
    Matrix direction_space() const;

private:
    struct Cache {
        std::once_flag once;
        VRep vrep;
    };

    void reset_cache() { cache_ = std::make_shared<Cache>(); }

    std::size_t dim_ = 0;
    std::vector<Constraint> equalities_;
    std::vector<Constraint> inequalities_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Constraint union. Throws InputError on ambient dimension mismatch.
Polyhedron intersect(const Polyhedron& p, const Polyhedron& q);

/// Basis of the normal span: the span of all constraint normals, which is the
/// orthogonal complement of the lineality space. Throws PreconditionError on
/// empty input.
Matrix normal_span(const Polyhedron& p);

/// True iff {x : <normal_j, x> + offset_j < 0 for all j} is nonempty.
bool strict_feasible(const std::vector<Constraint>& rows, std::size_t dim);

/// Facets of the convex hull of points in convex position.
struct HullFacets {
    int dimension = -1;
    /// Each facet as the sorted indices of the points it contains.
    std::vector<std::vector<std::size_t>> facets;
};

HullFacets convex_hull_facets(const std::vector<Vec>& points);

/// Dimension of the affine hull of a point set (-1 when empty).
int affine_dimension(const std::vector<Vec>& points);

} // namespace pltopo
