#include "pltopo/svg.hpp"

#include "pltopo/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pltopo {

namespace {

struct Frame {
    double lo_x, lo_y, hi_x, hi_y;
    double scale = 80;
    double px(double x) const { return (x - lo_x) * scale; }
    double py(double y) const { return (hi_y - y) * scale; }
};

Polyhedron clip(const Polyhedron& p, const Rational& lo, const Rational& hi)
{
    Polyhedron out = p;
    for (std::size_t k = 0; k < 2; ++k) {
        Vec e = zeros(2);
        e[k] = 1;
        out.add_inequality(e, -lo);
        out.add_inequality(negate(e), hi);
    }
    return out;
}

std::vector<std::pair<double, double>> ordered_polygon(const std::vector<Vec>& verts)
{
    std::vector<std::pair<double, double>> pts;
    for (const auto& v : verts)
        pts.emplace_back(to_double(v[0]), to_double(v[1]));
    double cx = 0, cy = 0;
    for (auto [x, y] : pts) {
        cx += x;
        cy += y;
    }
    cx /= static_cast<double>(pts.size());
    cy /= static_cast<double>(pts.size());
    std::sort(pts.begin(), pts.end(), [&](auto a, auto b) {
        return std::atan2(a.second - cy, a.first - cx) < std::atan2(b.second - cy, b.first - cx);
    });
    return pts;
}

} // namespace

std::string export_svg(const CanonicalComplex& cx)
{
    if (cx.ambient_dim != 2)
        throw InputError("export-svg needs input dimension 2");
    // Box around all vertices with a margin of 2.
    Rational lo = -2, hi = 2;
    for (const auto& c : cx.cells)
        if (c.dimension == 0) {
            const Vec p = c.geometry.vertices().front();
            for (const auto& x : p) {
                lo = std::min(lo, Rational(x - 2));
                hi = std::max(hi, Rational(x + 2));
            }
        }
    Frame f{to_double(lo), to_double(lo), to_double(hi), to_double(hi)};
    const double size = (f.hi_x - f.lo_x) * f.scale;

    std::ostringstream out;
    out.precision(6);
    out << std::fixed;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
        << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n"
        << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"5\" refY=\"5\" markerWidth=\"6\" "
           "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#c03030\"/></marker></defs>\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";

    for (const auto& c : cx.cells) {
        if (c.dimension != 2 || !c.flat)
            continue;
        const auto pts = ordered_polygon(clip(c.geometry, lo, hi).vertices());
        out << "<polygon fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"none\" points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i)
            out << (i ? " " : "") << f.px(pts[i].first) << ',' << f.py(pts[i].second);
        out << "\"/>\n";
    }

    // First-layer hyperplanes as full lines across the box.
    const AffineLayer& first = cx.net.layers().front();
    for (std::size_t j = 0; j < first.outputs(); ++j) {
        Polyhedron line(2);
        line.add_equality(first.weights[j], first.bias[j]);
        const auto v = clip(line, lo, hi).vertices();
        if (v.size() < 2)
            continue;
        out << "<line x1=\"" << f.px(to_double(v[0][0])) << "\" y1=\"" << f.py(to_double(v[0][1])) << "\" x2=\""
            << f.px(to_double(v[1][0])) << "\" y2=\"" << f.py(to_double(v[1][1]))
            << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    }

    for (std::size_t i = 0; i < cx.cells.size(); ++i) {
        const Cell& c = cx.cells[i];
        if (c.dimension != 1)
            continue;
        auto v = clip(c.geometry, lo, hi).vertices();
        if (v.size() < 2)
            continue;
        std::sort(v.begin(), v.end(), LexLess{});
        const EdgeOrientation o = edge_orientation(cx, i);
        // Orient the drawn segment toward increasing F.
        Vec a = v.front(), b = v.back();
        if (sign(dot(edge_direction(c), sub(b, a))) < 0)
            std::swap(a, b);
        if (o == EdgeOrientation::Decreasing)
            std::swap(a, b);
        const double ax = f.px(to_double(a[0])), ay = f.py(to_double(a[1]));
        const double bx = f.px(to_double(b[0])), by = f.py(to_double(b[1]));
        if (o == EdgeOrientation::Flat) {
            out << "<path d=\"M" << ax << ',' << ay << " L" << bx << ',' << by
                << "\" stroke=\"#3182bd\" stroke-width=\"3\" fill=\"none\"/>\n";
        } else {
            out << "<path d=\"M" << ax << ',' << ay << " L" << (ax + bx) / 2 << ',' << (ay + by) / 2 << " L" << bx
                << ',' << by << "\" stroke=\"black\" stroke-width=\"1.5\" fill=\"none\" marker-mid=\"url(#arrow)\"/>\n";
        }
    }

    for (const auto& c : cx.cells) {
        if (c.dimension != 0)
            continue;
        const Vec p = c.geometry.vertices().front();
        out << "<circle cx=\"" << f.px(to_double(p[0])) << "\" cy=\"" << f.py(to_double(p[1]))
            << "\" r=\"3\" fill=\"" << (c.flat ? "black" : "#444444") << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace pltopo
