#include "pltopo/polyhedron.hpp"

#include "pltopo/combinatorics.hpp"
#include "pltopo/errors.hpp"
#include "pltopo/linalg.hpp"

#include <algorithm>
#include <set>

namespace pltopo {

Constraint canonical(Constraint c, bool equality)
{
    mpz_class lcm_den = c.offset.get_den();
    for (const auto& x : c.normal)
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
    mpz_class g = 0;
    auto content = [&](const Rational& x) {
        mpz_class v = x.get_num() * (lcm_den / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    };
    for (const auto& x : c.normal)
        content(x);
    content(c.offset);
    if (g == 0)
        return c;
    Rational factor(lcm_den, g);
    factor.canonicalize();
    if (equality) {
        auto lead = std::find_if(c.normal.begin(), c.normal.end(), [](const Rational& x) { return sgn(x) != 0; });
        const int s = lead != c.normal.end() ? sgn(*lead) : sgn(c.offset);
        if (s < 0)
            factor = -factor;
    }
    for (auto& x : c.normal)
        x *= factor;
    c.offset *= factor;
    return c;
}

Polyhedron::Polyhedron(std::size_t dim) : dim_(dim) {}

Polyhedron::Polyhedron(std::size_t dim, std::vector<Constraint> equalities, std::vector<Constraint> inequalities)
    : dim_(dim)
{
    for (auto& c : equalities)
        add_equality(std::move(c.normal), std::move(c.offset));
    for (auto& c : inequalities)
        add_inequality(std::move(c.normal), std::move(c.offset));
}

void Polyhedron::add_equality(Vec normal, Rational offset)
{
    if (normal.size() != dim_)
        throw InputError("equality normal has wrong dimension");
    Constraint c = canonical({std::move(normal), std::move(offset)}, true);
    if (std::find(equalities_.begin(), equalities_.end(), c) == equalities_.end()) {
        equalities_.push_back(std::move(c));
        reset_cache();
    }
}

void Polyhedron::add_inequality(Vec normal, Rational offset)
{
    if (normal.size() != dim_)
        throw InputError("inequality normal has wrong dimension");
    Constraint c = canonical({std::move(normal), std::move(offset)}, false);
    if (std::find(inequalities_.begin(), inequalities_.end(), c) == inequalities_.end()) {
        inequalities_.push_back(std::move(c));
        reset_cache();
    }
}

namespace {

// Vertex/ray enumeration by exact solution of tight-constraint subsets.
// Combinatorial cost is C(#inequalities, free dimension), which is fine for
// the small cells this library works with.
VRep compute_vrep(std::size_t dim, const std::vector<Constraint>& eqs, const std::vector<Constraint>& ineqs)
{
    VRep out;
    Matrix normals;
    for (const auto& c : eqs)
        normals.push_back(c.normal);
    for (const auto& c : ineqs)
        normals.push_back(c.normal);
    out.lineality = row_space(nullspace(normals, dim), dim);

    Matrix system;
    Vec rhs;
    for (const auto& c : eqs) {
        system.push_back(c.normal);
        rhs.push_back(-c.offset);
    }
    for (const auto& l : out.lineality) {
        system.push_back(l);
        rhs.push_back(0);
    }
    LinearSolution base;
    if (system.empty()) {
        base.kind = LinearSolution::Kind::Parametric;
        base.particular = zeros(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            Vec e = zeros(dim);
            e[i] = 1;
            base.directions.push_back(std::move(e));
        }
    } else {
        base = solve_linear(system, rhs, dim);
    }
    if (base.kind == LinearSolution::Kind::Inconsistent)
        return out;

    const Vec& x0 = base.particular;
    const Matrix& dirs = base.directions;
    const std::size_t k = dirs.size();

    // Inequalities in the coordinates t of x = x0 + sum_j t_j dirs_j.
    Matrix reduced(ineqs.size(), Vec(k));
    Vec reduced_offset(ineqs.size());
    for (std::size_t i = 0; i < ineqs.size(); ++i) {
        for (std::size_t j = 0; j < k; ++j)
            reduced[i][j] = dot(ineqs[i].normal, dirs[j]);
        reduced_offset[i] = ineqs[i].eval(x0);
    }
    auto lift = [&](const Vec& t) {
        Vec x = x0;
        for (std::size_t j = 0; j < k; ++j)
            if (sgn(t[j]) != 0)
                for (std::size_t c = 0; c < dim; ++c)
                    x[c] += t[j] * dirs[j][c];
        return x;
    };
    auto lift_direction = [&](const Vec& t) {
        Vec x = zeros(dim);
        for (std::size_t j = 0; j < k; ++j)
            if (sgn(t[j]) != 0)
                for (std::size_t c = 0; c < dim; ++c)
                    x[c] += t[j] * dirs[j][c];
        return x;
    };

    std::set<Vec, LexLess> points;
    for_each_combination(ineqs.size(), k, [&](const std::vector<std::size_t>& subset) {
        Matrix a;
        Vec b;
        for (auto i : subset) {
            a.push_back(reduced[i]);
            b.push_back(-reduced_offset[i]);
        }
        LinearSolution s;
        if (k == 0) {
            s.kind = LinearSolution::Kind::Unique;
        } else {
            s = solve_linear(a, b, k);
            if (s.kind != LinearSolution::Kind::Unique)
                return true;
        }
        const Vec t = k == 0 ? Vec{} : s.particular;
        for (std::size_t i = 0; i < ineqs.size(); ++i)
            if (sgn(dot(reduced[i], t) + reduced_offset[i]) < 0)
                return true;
        points.insert(lift(t));
        return true;
    });
    out.points.assign(points.begin(), points.end());
    if (out.points.empty() || k == 0)
        return out;

    std::set<Vec, LexLess> rays;
    for_each_combination(ineqs.size(), k - 1, [&](const std::vector<std::size_t>& subset) {
        Matrix a;
        for (auto i : subset)
            a.push_back(reduced[i]);
        Matrix null = nullspace(a, k);
        if (null.size() != 1)
            return true;
        for (int s : {1, -1}) {
            Vec d = s > 0 ? null[0] : negate(null[0]);
            bool ok = true;
            for (std::size_t i = 0; i < ineqs.size() && ok; ++i)
                ok = sgn(dot(reduced[i], d)) >= 0;
            if (ok)
                rays.insert(primitive_direction(lift_direction(d)));
        }
        return true;
    });
    out.rays.assign(rays.begin(), rays.end());
    return out;
}

} // namespace

const VRep& Polyhedron::vrep() const
{
    std::call_once(cache_->once, [this] { cache_->vrep = compute_vrep(dim_, equalities_, inequalities_); });
    return cache_->vrep;
}

int Polyhedron::dimension() const
{
    const VRep& v = vrep();
    if (v.empty())
        return -1;
    return static_cast<int>(direction_space().size());
}

Matrix Polyhedron::direction_space() const
{
    const VRep& v = vrep();
    Matrix gens;
    for (std::size_t i = 1; i < v.points.size(); ++i)
        gens.push_back(sub(v.points[i], v.points[0]));
    for (const auto& r : v.rays)
        gens.push_back(r);
    for (const auto& l : v.lineality)
        gens.push_back(l);
    return row_space(gens, dim_);
}

std::vector<Vec> Polyhedron::vertices() const
{
    const VRep& v = vrep();
    if (!v.lineality.empty())
        return {};
    return v.points;
}

bool Polyhedron::contains(const Vec& x) const
{
    if (x.size() != dim_)
        throw InputError("point has wrong dimension");
    for (const auto& c : equalities_)
        if (sgn(c.eval(x)) != 0)
            return false;
    for (const auto& c : inequalities_)
        if (sgn(c.eval(x)) < 0)
            return false;
    return true;
}

bool Polyhedron::contains(const Polyhedron& other) const
{
    if (other.dim_ != dim_)
        throw InputError("ambient dimension mismatch");
    const VRep& v = other.vrep();
    for (const auto& p : v.points)
        if (!contains(p))
            return false;
    for (const auto& r : v.rays) {
        for (const auto& c : equalities_)
            if (sgn(dot(c.normal, r)) != 0)
                return false;
        for (const auto& c : inequalities_)
            if (sgn(dot(c.normal, r)) < 0)
                return false;
    }
    for (const auto& l : v.lineality) {
        for (const auto& c : equalities_)
            if (sgn(dot(c.normal, l)) != 0)
                return false;
        for (const auto& c : inequalities_)
            if (sgn(dot(c.normal, l)) != 0)
                return false;
    }
    return true;
}

std::vector<std::size_t> Polyhedron::implicit_equalities() const
{
    const VRep& v = vrep();
    std::vector<std::size_t> out;
    if (v.empty())
        return out;
    for (std::size_t i = 0; i < inequalities_.size(); ++i) {
        const Constraint& c = inequalities_[i];
        bool tight = true;
        for (const auto& p : v.points)
            tight = tight && sgn(c.eval(p)) == 0;
        for (const auto& r : v.rays)
            tight = tight && sgn(dot(c.normal, r)) == 0;
        for (const auto& l : v.lineality)
            tight = tight && sgn(dot(c.normal, l)) == 0;
        if (tight)
            out.push_back(i);
    }
    return out;
}

bool Polyhedron::open_part_nonempty() const
{
    return !empty() && implicit_equalities().empty();
}

Vec Polyhedron::relative_interior_point() const
{
    const VRep& v = vrep();
    if (v.empty())
        throw PreconditionError("relative interior of an empty polyhedron");
    Vec x = zeros(dim_);
    for (const auto& p : v.points)
        x = add(x, p);
    x = scale(x, Rational(1, static_cast<unsigned long>(v.points.size())));
    for (const auto& r : v.rays)
        x = add(x, r);
    return x;
}

Polyhedron intersect(const Polyhedron& p, const Polyhedron& q)
{
    if (p.ambient_dim() != q.ambient_dim())
        throw InputError("intersect: ambient dimension mismatch");
    Polyhedron out = p;
    for (const auto& c : q.equalities())
        out.add_equality(c.normal, c.offset);
    for (const auto& c : q.inequalities())
        out.add_inequality(c.normal, c.offset);
    return out;
}

Matrix normal_span(const Polyhedron& p)
{
    if (p.empty())
        throw PreconditionError("normal span of an empty polyhedron");
    Matrix normals;
    for (const auto& c : p.equalities())
        normals.push_back(c.normal);
    for (const auto& c : p.inequalities())
        normals.push_back(c.normal);
    return row_space(normals, p.ambient_dim());
}

bool strict_feasible(const std::vector<Constraint>& rows, std::size_t dim)
{
    Polyhedron p(dim);
    for (const auto& r : rows) {
        if (r.normal.size() != dim)
            throw InputError("strict_feasible: row has wrong dimension");
        p.add_inequality(negate(r.normal), -r.offset);
    }
    return p.open_part_nonempty();
}

int affine_dimension(const std::vector<Vec>& points)
{
    if (points.empty())
        return -1;
    Matrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i)
        diffs.push_back(sub(points[i], points[0]));
    return static_cast<int>(rank(diffs, points[0].size()));
}

HullFacets convex_hull_facets(const std::vector<Vec>& points)
{
    HullFacets out;
    if (points.empty())
        return out;
    const std::size_t ambient = points[0].size();
    Matrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i)
        diffs.push_back(sub(points[i], points[0]));
    const RowEchelon basis = rref(diffs, ambient);
    const std::size_t k = basis.pivots.size();
    out.dimension = static_cast<int>(k);
    if (k == 0)
        return out;

    // Coordinates with respect to the reduced basis are read off at the pivots.
    std::vector<Vec> local(points.size(), Vec(k));
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t r = 0; r < k; ++r)
            local[i][r] = points[i][basis.pivots[r]] - points[0][basis.pivots[r]];

    std::set<std::vector<std::size_t>> found;
    for_each_combination(points.size(), k, [&](const std::vector<std::size_t>& subset) {
        Matrix span;
        for (std::size_t j = 1; j < subset.size(); ++j)
            span.push_back(sub(local[subset[j]], local[subset[0]]));
        Matrix null = nullspace(span, k);
        if (null.size() != 1)
            return true;
        const Vec& normal = null[0];
        const Rational level = dot(normal, local[subset[0]]);
        int side = 0;
        std::vector<std::size_t> tight;
        for (std::size_t i = 0; i < points.size(); ++i) {
            const int s = sgn(dot(normal, local[i]) - level);
            if (s == 0) {
                tight.push_back(i);
            } else if (side == 0) {
                side = s;
            } else if (side != s) {
                return true;
            }
        }
        found.insert(std::move(tight));
        return true;
    });
    out.facets.assign(found.begin(), found.end());
    return out;
}

} // namespace pltopo
