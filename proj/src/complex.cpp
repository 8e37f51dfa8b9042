#include "pltopo/complex.hpp"

#include "pltopo/combinatorics.hpp"
#include "pltopo/errors.hpp"
#include "pltopo/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pltopo {

Interval image_interval(const Polyhedron& p, const AffineForm& form)
{
    const VRep& v = p.vrep();
    if (v.empty())
        throw PreconditionError("image of an empty polyhedron");
    Interval out;
    bool lo_inf = false;
    bool hi_inf = false;
    for (const auto& r : v.rays) {
        const int s = sign(dot(form.gradient, r));
        lo_inf = lo_inf || s < 0;
        hi_inf = hi_inf || s > 0;
    }
    for (const auto& l : v.lineality)
        if (sign(dot(form.gradient, l)) != 0)
            lo_inf = hi_inf = true;
    for (const auto& x : v.points) {
        const Rational y = form.at(x);
        if (!lo_inf && (!out.lo || y < *out.lo))
            out.lo = y;
        if (!hi_inf && (!out.hi || y > *out.hi))
            out.hi = y;
    }
    return out;
}

bool constant_on(const Polyhedron& p, const AffineForm& form)
{
    for (const auto& d : p.direction_space())
        if (sign(dot(form.gradient, d)) != 0)
            return false;
    return true;
}

std::vector<std::size_t> PolyhedralComplex::cells_of_dimension(int d) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i].dimension == d)
            out.push_back(i);
    return out;
}

std::vector<std::size_t> PolyhedralComplex::cofaces(std::size_t i) const
{
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < cells.size(); ++c)
        if (std::binary_search(cells[c].faces.begin(), cells[c].faces.end(), i))
            out.push_back(c);
    return out;
}

std::vector<std::size_t> PolyhedralComplex::closure(const std::vector<std::size_t>& ids) const
{
    std::set<std::size_t> out(ids.begin(), ids.end());
    for (auto i : ids)
        out.insert(cells[i].faces.begin(), cells[i].faces.end());
    return {out.begin(), out.end()};
}

bool label_compatible(const TernaryLabel& d, const TernaryLabel& c)
{
    if (d.size() != c.size())
        return false;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0 && d[i] != c[i])
            return false;
    return true;
}

void compute_faces(PolyhedralComplex& cx)
{
    for (auto& c : cx.cells)
        c.faces.clear();
    for (std::size_t i = 0; i < cx.cells.size(); ++i) {
        Cell& c = cx.cells[i];
        for (std::size_t j = 0; j < cx.cells.size(); ++j) {
            const Cell& d = cx.cells[j];
            if (i == j || d.dimension >= c.dimension)
                continue;
            if (!label_compatible(d.label, c.label))
                continue;
            // A point piece bounds the open intervals on either side of it.
            const bool piece_ok = d.piece == c.piece
                                  || (c.piece >= 0 && c.piece % 2 == 0 && d.piece % 2 == 1
                                      && (d.piece == c.piece - 1 || d.piece == c.piece + 1));
            if (piece_ok)
                c.faces.push_back(j);
        }
    }
}

namespace {

struct Builder {
    const Network& net;
    std::size_t depth;
    std::vector<Region> out;

    void visit(std::size_t layer, std::size_t neuron, const Polyhedron& p, TernaryLabel& label, const Matrix& in_map,
               const Vec& in_shift, Matrix& out_map, Vec& out_shift)
    {
        const std::size_t dim = net.input_dim();
        if (layer == depth) {
            out.push_back({label, p, in_map, in_shift});
            return;
        }
        const AffineLayer& al = net.layers()[layer];
        if (neuron == al.outputs()) {
            Matrix next_map = out_map;
            Vec next_shift = out_shift;
            Matrix fresh_map;
            Vec fresh_shift;
            visit(layer + 1, 0, p, label, next_map, next_shift, fresh_map, fresh_shift);
            return;
        }
        Vec grad = zeros(dim);
        Rational constant = al.bias[neuron];
        for (std::size_t k = 0; k < al.inputs(); ++k) {
            const Rational& w = al.weights[neuron][k];
            if (sign(w) == 0)
                continue;
            for (std::size_t c = 0; c < dim; ++c)
                grad[c] += w * in_map[k][c];
            constant += w * in_shift[k];
        }
        for (int s : {-1, 0, 1}) {
            Polyhedron q = p;
            if (s == 0)
                q.add_equality(grad, constant);
            else if (s > 0)
                q.add_inequality(grad, constant);
            else
                q.add_inequality(negate(grad), -constant);
            if (!q.open_part_nonempty())
                continue;
            label.push_back(static_cast<std::int8_t>(s));
            out_map.push_back(s > 0 ? grad : zeros(dim));
            out_shift.push_back(s > 0 ? constant : Rational(0));
            visit(layer, neuron + 1, q, label, in_map, in_shift, out_map, out_shift);
            out_map.pop_back();
            out_shift.pop_back();
            label.pop_back();
        }
    }
};

Matrix identity(std::size_t n)
{
    Matrix m(n, zeros(n));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

} // namespace

std::vector<Region> enumerate_regions(const Network& net, std::size_t depth)
{
    if (depth > net.depth())
        throw InputError("enumerate_regions: depth exceeds the number of hidden layers");
    Builder b{net, depth, {}};
    const std::size_t n = net.input_dim();
    TernaryLabel label;
    Matrix out_map;
    Vec out_shift;
    b.visit(0, 0, Polyhedron(n), label, identity(n), zeros(n), out_map, out_shift);
    return std::move(b.out);
}

CanonicalComplex build_complex(const Network& net)
{
    CanonicalComplex cx;
    cx.net = net;
    cx.ambient_dim = net.input_dim();
    const AffineLayer& last = net.output_layer();
    for (auto& r : enumerate_regions(net, net.depth())) {
        Cell c;
        c.label = std::move(r.label);
        c.geometry = std::move(r.geometry);
        c.form.gradient = zeros(cx.ambient_dim);
        c.form.constant = last.bias[0];
        for (std::size_t k = 0; k < last.inputs(); ++k) {
            const Rational& w = last.weights[0][k];
            c.form.gradient = add(c.form.gradient, scale(r.map[k], w));
            c.form.constant += w * r.shift[k];
        }
        c.dimension = c.geometry.dimension();
        c.flat = constant_on(c.geometry, c.form);
        c.bounded = c.geometry.bounded();
        cx.cells.push_back(std::move(c));
    }
    compute_faces(cx);
    std::set<Rational> levels;
    for (std::size_t i = 0; i < cx.cells.size(); ++i) {
        cx.index[cx.cells[i].label] = i;
        if (cx.cells[i].flat)
            levels.insert(cx.cells[i].form.at(cx.cells[i].geometry.relative_interior_point()));
    }
    cx.thresholds.assign(levels.begin(), levels.end());
    return cx;
}

std::vector<ZeroCell> zero_cells(const CanonicalComplex& cx)
{
    std::vector<ZeroCell> out;
    for (auto i : cx.cells_of_dimension(0)) {
        const Cell& c = cx.cells[i];
        const Vec p = c.geometry.vrep().points.front();
        out.push_back({p, c.form.at(p), i});
    }
    std::sort(out.begin(), out.end(), [](const ZeroCell& a, const ZeroCell& b) { return LexLess{}(a.point, b.point); });
    return out;
}

std::vector<FlatComponent> flat_components(const CanonicalComplex& cx)
{
    const std::size_t n = cx.cells.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i) {
        if (!cx.cells[i].flat)
            continue;
        for (auto f : cx.cells[i].faces)
            parent[find(f)] = find(i);
    }
    std::map<std::size_t, FlatComponent> groups;
    for (std::size_t i = 0; i < n; ++i) {
        if (!cx.cells[i].flat)
            continue;
        FlatComponent& g = groups[find(i)];
        g.cells.push_back(i);
        g.dimension = std::max(g.dimension, cx.cells[i].dimension);
    }
    std::vector<FlatComponent> out;
    for (auto& [root, g] : groups) {
        const Cell& c = cx.cells[g.cells.front()];
        g.level = c.form.at(c.geometry.relative_interior_point());
        out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(), [](const FlatComponent& a, const FlatComponent& b) {
        if (a.level != b.level)
            return a.level < b.level;
        return a.cells.front() < b.cells.front();
    });
    return out;
}

std::string to_string(EdgeOrientation o)
{
    switch (o) {
    case EdgeOrientation::Increasing:
        return "increasing";
    case EdgeOrientation::Decreasing:
        return "decreasing";
    case EdgeOrientation::Flat:
        break;
    }
    return "flat";
}

Vec edge_direction(const Cell& edge)
{
    if (edge.dimension != 1)
        throw InputError("edge_direction: cell has dimension " + std::to_string(edge.dimension));
    const VRep& v = edge.geometry.vrep();
    if (v.points.size() >= 2 && edge.geometry.pointed())
        return sub(v.points[1], v.points[0]);
    if (!v.rays.empty())
        return v.rays.front();
    return v.lineality.front();
}

EdgeOrientation edge_orientation(const PolyhedralComplex& cx, std::size_t cell)
{
    const Cell& c = cx.cells.at(cell);
    const int s = sign(dot(c.form.gradient, edge_direction(c)));
    return s > 0 ? EdgeOrientation::Increasing : (s < 0 ? EdgeOrientation::Decreasing : EdgeOrientation::Flat);
}

namespace {

AffineForm neuron_form(const AffineLayer& layer, std::size_t j, const Region& r, std::size_t dim)
{
    AffineForm f{zeros(dim), layer.bias[j]};
    for (std::size_t k = 0; k < layer.inputs(); ++k) {
        const Rational& w = layer.weights[j][k];
        if (sign(w) == 0)
            continue;
        f.gradient = add(f.gradient, scale(r.map[k], w));
        f.constant += w * r.shift[k];
    }
    return f;
}

std::string where(std::size_t layer, const Region& r)
{
    return "layer " + std::to_string(layer + 1) + " on cell [" + label_string(r.label) + "]";
}

std::string neuron_list(const std::vector<std::size_t>& ids)
{
    std::string s;
    for (auto i : ids)
        s += (s.empty() ? "" : ",") + std::to_string(i);
    return "{" + s + "}";
}

} // namespace

CheckResult is_generic(const Network& net)
{
    // Each hidden layer's solution sets, as hyperplanes in that layer's own
    // input space, must be in general position.
    for (std::size_t layer = 0; layer < net.depth(); ++layer) {
        const AffineLayer& al = net.layers()[layer];
        const std::size_t d = al.inputs();
        std::string bad;
        for (std::size_t k = 1; k <= std::min(d + 1, al.outputs()) && bad.empty(); ++k) {
            for_each_combination(al.outputs(), k, [&](const std::vector<std::size_t>& s) {
                Matrix a;
                Vec b;
                for (auto i : s) {
                    a.push_back(al.weights[i]);
                    b.push_back(-al.bias[i]);
                }
                if (k <= d && rank(a, d) != k)
                    bad = "dependent neurons " + neuron_list(s);
                else if (k == d + 1 && solve_linear(a, b, d).kind != LinearSolution::Kind::Inconsistent)
                    bad = "neurons " + neuron_list(s) + " share a point";
                return bad.empty();
            });
        }
        if (!bad.empty())
            return {false, "layer " + std::to_string(layer + 1) + ": " + bad};
    }
    return {};
}

CheckResult is_transversal(const Network& net)
{
    const std::size_t n = net.input_dim();
    for (std::size_t layer = 0; layer < net.depth(); ++layer) {
        const AffineLayer& al = net.layers()[layer];
        for (const Region& r : enumerate_regions(net, layer)) {
            for (std::size_t j = 0; j < al.outputs(); ++j) {
                const AffineForm f = neuron_form(al, j, r, n);
                if (constant_on(r.geometry, f) && sign(f.at(r.geometry.relative_interior_point())) == 0)
                    return {false, where(layer, r) + ": node map of neuron " + std::to_string(j)
                                       + " has a flat cell at level 0"};
            }
        }
    }
    return {};
}

Census census(const PolyhedralComplex& cx)
{
    Census out;
    const std::size_t slots = cx.ambient_dim + 1;
    out.cells.assign(slots, 0);
    out.bounded.assign(slots, 0);
    out.unbounded.assign(slots, 0);
    for (const auto& c : cx.cells) {
        const auto d = static_cast<std::size_t>(c.dimension);
        ++out.cells[d];
        ++(c.bounded ? out.bounded : out.unbounded)[d];
    }
    return out;
}

nlohmann::json dump_complex(const CanonicalComplex& cx)
{
    using nlohmann::json;
    json cells = json::array();
    for (std::size_t i = 0; i < cx.cells.size(); ++i) {
        const Cell& c = cx.cells[i];
        const VRep& v = c.geometry.vrep();
        json jc = {{"label", label_string(c.label)}, {"dimension", c.dimension}, {"flat", c.flat},
                   {"bounded", c.bounded}};
        json pts = json::array();
        for (const auto& p : v.points)
            pts.push_back(to_string(p));
        jc[c.geometry.pointed() ? "vertices" : "points"] = pts;
        json rays = json::array();
        for (const auto& r : v.rays)
            rays.push_back(to_string(r));
        jc["rays"] = rays;
        if (!v.lineality.empty()) {
            json lin = json::array();
            for (const auto& l : v.lineality)
                lin.push_back(to_string(l));
            jc["lineality"] = lin;
        }
        jc["gradient"] = to_string(c.form.gradient);
        jc["constant"] = to_string(c.form.constant);
        if (c.dimension == 1)
            jc["orientation"] = to_string(edge_orientation(cx, i));
        json faces = json::array();
        for (auto f : c.faces)
            faces.push_back(f);
        jc["faces"] = faces;
        cells.push_back(std::move(jc));
    }
    json thresholds = json::array();
    for (const auto& t : cx.thresholds)
        thresholds.push_back(to_string(t));
    return {{"cells", cells}, {"thresholds", thresholds}};
}

} // namespace pltopo
