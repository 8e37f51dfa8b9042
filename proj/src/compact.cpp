#include "pltopo/compact.hpp"

#include "pltopo/errors.hpp"
#include "pltopo/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace pltopo {

int RefinedComplex::piece_of(const Rational& value) const
{
    auto it = std::lower_bound(levels.begin(), levels.end(), value);
    const int below = static_cast<int>(it - levels.begin());
    if (it != levels.end() && *it == value)
        return 2 * below + 1;
    return 2 * below;
}

std::vector<std::size_t> RefinedComplex::cells_in_pieces(int lo, int hi) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i].piece >= lo && cells[i].piece <= hi)
            out.push_back(i);
    return out;
}

RefinedComplex refine_at_levels(const PolyhedralComplex& cx, const std::vector<Rational>& levels)
{
    for (std::size_t i = 1; i < levels.size(); ++i)
        if (!(levels[i - 1] < levels[i]))
            throw InputError("refine_at_levels: levels must be strictly increasing");
    RefinedComplex out;
    out.ambient_dim = cx.ambient_dim;
    out.levels = levels;
    const int pieces = 2 * static_cast<int>(levels.size()) + 1;
    for (std::size_t i = 0; i < cx.cells.size(); ++i) {
        const Cell& c = cx.cells[i];
        auto emit = [&](int piece, Polyhedron geometry, int dimension) {
            Cell r;
            r.label = c.label;
            r.piece = piece;
            r.geometry = std::move(geometry);
            r.form = c.form;
            r.dimension = dimension;
            r.flat = c.flat || dimension == 0 || (piece % 2 == 1);
            r.bounded = r.geometry.bounded();
            out.cells.push_back(std::move(r));
            out.source.push_back(i);
        };
        if (c.flat) {
            const Rational v = c.form.at(c.geometry.relative_interior_point());
            emit(out.piece_of(v), c.geometry, c.dimension);
            continue;
        }
        // F maps the relative interior of a non-flat cell onto an open interval.
        const Interval im = image_interval(c.geometry, c.form);
        auto above_lo = [&](const Rational& x) { return !im.lo || *im.lo < x; };
        auto below_hi = [&](const Rational& x) { return !im.hi || x < *im.hi; };
        for (int p = 0; p < pieces; ++p) {
            if (p % 2 == 1) {
                const Rational& v = levels[static_cast<std::size_t>(p / 2)];
                if (above_lo(v) && below_hi(v)) {
                    Polyhedron g = c.geometry;
                    g.add_equality(c.form.gradient, c.form.constant - v);
                    emit(p, std::move(g), c.dimension - 1);
                }
                continue;
            }
            const std::size_t k = static_cast<std::size_t>(p / 2);
            const Rational* lower = k > 0 ? &levels[k - 1] : nullptr;
            const Rational* upper = k < levels.size() ? &levels[k] : nullptr;
            // Nonempty iff (lower, upper) meets (lo, hi).
            if (lower && !below_hi(*lower))
                continue;
            if (upper && !above_lo(*upper))
                continue;
            if (lower && upper && !(*lower < *upper))
                continue;
            Polyhedron g = c.geometry;
            if (lower)
                g.add_inequality(c.form.gradient, c.form.constant - *lower);
            if (upper)
                g.add_inequality(negate(c.form.gradient), *upper - c.form.constant);
            emit(p, std::move(g), c.dimension);
        }
    }
    compute_faces(out);
    return out;
}

namespace {

std::vector<std::size_t> components_of(const PolyhedralComplex& cx, const std::vector<std::size_t>& cells,
                                       std::size_t& count)
{
    std::map<std::size_t, std::size_t> local;
    for (std::size_t i = 0; i < cells.size(); ++i)
        local[cells[i]] = i;
    std::vector<std::size_t> parent(cells.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (auto f : cx.cells[cells[i]].faces) {
            auto it = local.find(f);
            if (it == local.end())
                throw PreconditionError("cell subset is not closed under faces");
            parent[find(it->second)] = find(i);
        }
    std::map<std::size_t, std::size_t> ids;
    std::vector<std::size_t> out(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        auto [it, fresh] = ids.emplace(find(i), ids.size());
        out[i] = it->second;
    }
    count = ids.size();
    return out;
}

} // namespace

Essentialization essentialize(const PolyhedralComplex& cx, const std::vector<std::size_t>& cells)
{
    Essentialization out;
    out.complex.ambient_dim = cx.ambient_dim;
    std::size_t count = 0;
    out.component = components_of(cx, cells, count);
    out.lineality.assign(count, {});
    std::vector<char> seen(count, 0);
    // Faces share the lineality space of the cells they bound, so any cell of
    // a connected component determines it.
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const std::size_t k = out.component[i];
        if (!seen[k]) {
            seen[k] = 1;
            out.lineality[k] = cx.cells[cells[i]].geometry.vrep().lineality;
        }
    }
    std::map<std::size_t, std::size_t> local;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell& c = cx.cells[cells[i]];
        Cell e = c;
        const Matrix& lin = out.lineality[out.component[i]];
        for (const auto& l : lin)
            e.geometry.add_equality(l, 0);
        e.dimension = c.dimension - static_cast<int>(lin.size());
        e.bounded = e.geometry.bounded();
        e.faces.clear();
        local[cells[i]] = i;
        out.complex.cells.push_back(std::move(e));
        out.source.push_back(cells[i]);
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (auto f : cx.cells[cells[i]].faces)
            out.complex.cells[i].faces.push_back(local.at(f));
        std::sort(out.complex.cells[i].faces.begin(), out.complex.cells[i].faces.end());
    }
    return out;
}

std::size_t PolytopalModel::count_of_dimension(int d) const
{
    return static_cast<std::size_t>(std::count(dimensions.begin(), dimensions.end(), d));
}

PolytopalModel build_model(std::size_t ambient_dim, const std::vector<Polytope>& polytopes)
{
    PolytopalModel m;
    m.ambient_dim = ambient_dim;
    std::set<Vec, LexLess> all;
    for (const auto& p : polytopes)
        all.insert(p.points.begin(), p.points.end());
    m.vertices.assign(all.begin(), all.end());
    std::map<Vec, std::size_t, LexLess> vid;
    for (std::size_t i = 0; i < m.vertices.size(); ++i)
        vid.emplace(m.vertices[i], i);

    std::map<std::vector<std::size_t>, std::size_t> cell_of;
    // Returns the cell index of the polytope spanned by `ids` (convex position
    // not required; non-vertices are dropped by the facet computation).
    std::function<std::size_t(std::vector<std::size_t>, std::uint32_t)> add;
    add = [&](std::vector<std::size_t> ids, std::uint32_t marks) -> std::size_t {
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        std::vector<Vec> pts;
        for (auto i : ids)
            pts.push_back(m.vertices[i]);
        const HullFacets hf = convex_hull_facets(pts);
        // Keep only the vertices: points lying on some facet set in every
        // facet-defining direction; a point is a vertex iff it is the only
        // common point of the facets containing it.
        std::vector<std::size_t> verts;
        if (hf.dimension <= 0) {
            verts = {ids.front()};
        } else if (hf.dimension == 1) {
            for (const auto& f : hf.facets)
                verts.push_back(ids[f.front()]);
        } else {
            std::set<std::size_t> keep;
            for (std::size_t i = 0; i < ids.size(); ++i) {
                std::vector<std::size_t> common;
                bool first = true;
                for (const auto& f : hf.facets) {
                    if (!std::binary_search(f.begin(), f.end(), i))
                        continue;
                    if (first) {
                        common = f;
                        first = false;
                    } else {
                        std::vector<std::size_t> next;
                        std::set_intersection(common.begin(), common.end(), f.begin(), f.end(),
                                              std::back_inserter(next));
                        common = std::move(next);
                    }
                }
                std::vector<Vec> cp;
                for (auto j : common)
                    cp.push_back(pts[j]);
                if (!first && affine_dimension(cp) == 0)
                    keep.insert(ids[i]);
            }
            verts.assign(keep.begin(), keep.end());
        }
        std::sort(verts.begin(), verts.end());
        if (auto it = cell_of.find(verts); it != cell_of.end()) {
            const std::size_t c = it->second;
            if ((m.marks[c] | marks) != m.marks[c]) {
                m.marks[c] |= marks;
                for (auto f : m.facets[c])
                    add(m.cells[f], marks);
            }
            return c;
        }
        const std::size_t c = m.cells.size();
        cell_of.emplace(verts, c);
        m.cells.push_back(verts);
        m.dimensions.push_back(std::max(hf.dimension, 0));
        m.marks.push_back(marks);
        m.source.push_back(-1);
        m.facets.emplace_back();
        std::vector<std::size_t> facets;
        if (hf.dimension >= 1) {
            for (const auto& f : hf.facets) {
                std::vector<std::size_t> sub;
                for (auto j : f)
                    if (std::binary_search(verts.begin(), verts.end(), ids[j]))
                        sub.push_back(ids[j]);
                facets.push_back(add(sub, marks));
            }
        }
        std::sort(facets.begin(), facets.end());
        m.facets[c] = std::move(facets);
        return c;
    };
    for (const auto& p : polytopes) {
        if (p.points.empty())
            continue;
        std::vector<std::size_t> ids;
        for (const auto& x : p.points)
            ids.push_back(vid.at(x));
        const std::size_t c = add(ids, p.marks);
        if (m.source[c] < 0)
            m.source[c] = p.source;
    }
    // Drop coordinates no cell uses and renumber, preserving the order.
    std::vector<char> used(m.vertices.size(), 0);
    for (const auto& c : m.cells)
        for (auto v : c)
            used[v] = 1;
    std::vector<std::size_t> renum(m.vertices.size());
    std::vector<Vec> kept;
    for (std::size_t i = 0; i < m.vertices.size(); ++i) {
        renum[i] = kept.size();
        if (used[i])
            kept.push_back(m.vertices[i]);
    }
    m.vertices = std::move(kept);
    for (auto& c : m.cells)
        for (auto& v : c)
            v = renum[v];
    return m;
}

namespace {

std::uint32_t mark_at(const std::vector<std::uint32_t>& marks, std::size_t i)
{
    return marks.empty() ? 0 : marks[i];
}

} // namespace

PolytopalModel compact_part(const PolyhedralComplex& cx, const std::vector<std::size_t>& cells,
                            const std::vector<std::uint32_t>& marks)
{
    std::vector<Polytope> polys;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell& c = cx.cells[cells[i]];
        if (!c.geometry.pointed())
            throw PreconditionError("compact_part: cell [" + label_string(c.label)
                                    + "] is not pointed; essentialize first");
        polys.push_back({c.geometry.vertices(), mark_at(marks, i), static_cast<long>(cells[i])});
    }
    return build_model(cx.ambient_dim, polys);
}

PolytopalModel box_truncate(const PolyhedralComplex& cx, const std::vector<std::size_t>& cells,
                            const std::vector<std::uint32_t>& marks)
{
    const std::size_t n = cx.ambient_dim;
    Vec lo(n, Rational(0));
    Vec hi(n, Rational(0));
    for (auto i : cells)
        for (const auto& p : cx.cells[i].geometry.vrep().points)
            for (std::size_t k = 0; k < n; ++k) {
                lo[k] = std::min(lo[k], p[k]);
                hi[k] = std::max(hi[k], p[k]);
            }
    std::vector<Polytope> polys;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        Polyhedron g = cx.cells[cells[i]].geometry;
        for (std::size_t k = 0; k < n; ++k) {
            Vec e = zeros(n);
            e[k] = 1;
            g.add_inequality(e, 1 - lo[k]);
            g.add_inequality(negate(e), hi[k] + 1);
        }
        polys.push_back({g.vrep().points, mark_at(marks, i), static_cast<long>(cells[i])});
    }
    return build_model(n, polys);
}

namespace {

PolytopalModel absolute_model(const PolyhedralComplex& cx, const Rational& c, int lo, int hi)
{
    const RefinedComplex rc = refine_at_levels(cx, {c});
    const auto cells = rc.cells_in_pieces(lo, hi);
    if (cells.empty()) {
        PolytopalModel empty;
        empty.ambient_dim = cx.ambient_dim;
        return empty;
    }
    const Essentialization ess = essentialize(rc, cells);
    std::vector<std::size_t> all(ess.complex.cells.size());
    std::iota(all.begin(), all.end(), 0);
    return compact_part(ess.complex, all);
}

// Essentializes a face-closed cell set and truncates it to a box.
PolytopalModel truncated_pair(const PolyhedralComplex& cx, const std::vector<std::size_t>& cells,
                              const std::vector<std::uint32_t>& marks)
{
    PolytopalModel empty;
    empty.ambient_dim = cx.ambient_dim;
    if (cells.empty())
        return empty;
    const Essentialization ess = essentialize(cx, cells);
    std::vector<std::size_t> all(ess.complex.cells.size());
    std::iota(all.begin(), all.end(), 0);
    return box_truncate(ess.complex, all, marks);
}

} // namespace

PolytopalModel sublevel_model(const PolyhedralComplex& cx, const Rational& c)
{
    return absolute_model(cx, c, 0, 1);
}

PolytopalModel superlevel_model(const PolyhedralComplex& cx, const Rational& c)
{
    return absolute_model(cx, c, 1, 2);
}

PolytopalModel level_model(const PolyhedralComplex& cx, const Rational& c)
{
    return absolute_model(cx, c, 1, 1);
}

Rational default_epsilon(const CanonicalComplex& cx, const Rational& a)
{
    auto it = std::lower_bound(cx.thresholds.begin(), cx.thresholds.end(), a);
    if (it == cx.thresholds.begin())
        return 1;
    return (a - *std::prev(it)) / 2;
}

PolytopalModel strip_pair_model(const CanonicalComplex& cx, const FlatComponent& k, const Rational& eps)
{
    if (sign(eps) <= 0)
        throw InputError("strip_pair_model: eps must be positive");
    const Rational& a = k.level;
    const Rational floor = a - eps;
    for (const auto& t : cx.thresholds)
        if (floor <= t && t < a)
            throw PreconditionError("strip_pair_model: threshold " + to_string(t) + " lies in [a - eps, a)");
    const RefinedComplex rc = refine_at_levels(cx, {floor, a});
    // Pieces 1..3 form the strip; K sits in piece 3.
    std::set<std::size_t> k_cells(k.cells.begin(), k.cells.end());
    std::vector<char> in_k(rc.cells.size(), 0);
    for (std::size_t i = 0; i < rc.cells.size(); ++i)
        in_k[i] = rc.cells[i].piece == 3 && k_cells.count(rc.source[i]) > 0 && cx.cells[rc.source[i]].flat;
    // Closed star of K: cells with a face in K, with their faces. Cells away
    // from K are excised.
    std::vector<std::size_t> star;
    for (std::size_t i = 0; i < rc.cells.size(); ++i) {
        const Cell& c = rc.cells[i];
        if (c.piece < 1 || c.piece > 3)
            continue;
        bool touches = in_k[i];
        for (auto f : c.faces)
            touches = touches || in_k[f];
        if (touches)
            star.push_back(i);
    }
    star = rc.closure(star);
    std::vector<std::uint32_t> marks;
    for (auto i : star) {
        const Cell& c = rc.cells[i];
        // Inside a bounded F-range every recession direction is F-constant.
        for (const auto& r : c.geometry.vrep().rays)
            if (sign(dot(c.form.gradient, r)) != 0)
                throw std::logic_error("strip cell has an F-varying recession direction");
        marks.push_back(in_k[i] ? kSubMark : 0);
    }
    return truncated_pair(rc, star, marks);
}

PolytopalModel band_pair_model(const PolyhedralComplex& cx, const Rational& lo, const Rational& mid,
                               const Rational& hi, bool lower_part_marked)
{
    const RefinedComplex rc = refine_at_levels(cx, {lo, mid, hi});
    const auto cells = rc.cells_in_pieces(1, 5);
    std::vector<std::uint32_t> marks;
    for (auto i : cells) {
        const int p = rc.cells[i].piece;
        const bool marked = lower_part_marked ? p <= 3 : p >= 3;
        marks.push_back(marked ? kSubMark : 0);
    }
    return truncated_pair(rc, cells, marks);
}

} // namespace pltopo
