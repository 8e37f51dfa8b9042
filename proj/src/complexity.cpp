#include "pltopo/complexity.hpp"

#include "pltopo/errors.hpp"
#include "pltopo/homology.hpp"

#include <algorithm>
#include <map>

namespace pltopo {

std::vector<std::size_t> model_betti(const PolytopalModel& model)
{
    const std::size_t len = model.ambient_dim + 1;
    if (model.cells.empty())
        return std::vector<std::size_t>(len, 0);
    return resize_ranks(betti(triangulate(model).complex), len);
}

std::vector<std::size_t> pair_ranks(const PolytopalModel& model, bool complement)
{
    const std::size_t len = model.ambient_dim + 1;
    if (model.cells.empty())
        return std::vector<std::size_t>(len, 0);
    const Triangulation tri = triangulate(model);
    const SimplicialComplex k = marked_subcomplex(tri, model, kSubMark);
    const Subdivision sd = barycentric(tri.complex);
    const SimplicialComplex k_sd = subdivide(sd, k);
    const SimplicialComplex a = complement ? complement_complex(sd.complex, k_sd) : k_sd;
    return resize_ranks(relative_betti(sd.complex, a), len);
}

LocalComplexityRecord local_h_complexity(const CanonicalComplex& cx, const FlatComponent& k,
                                         std::optional<Rational> eps)
{
    LocalComplexityRecord r;
    r.level = k.level;
    r.cells = k.cells;
    r.dimension = k.dimension;
    const Rational e = eps ? *eps : default_epsilon(cx, k.level);
    r.ranks = pair_ranks(strip_pair_model(cx, k, e), true);
    for (auto x : r.ranks)
        r.total += x;
    r.h_critical = r.total > 0;
    return r;
}

std::size_t global_h_complexity(const CanonicalComplex& cx)
{
    std::size_t total = 0;
    for (const auto& k : flat_components(cx))
        total += local_h_complexity(cx, k).total;
    return total;
}

Rational stable_bound(const CanonicalComplex& cx)
{
    Rational m = 0;
    for (const auto& t : cx.thresholds)
        m = std::max(m, abs(t));
    return m + 1;
}

StableComplexities stable_complexities(const CanonicalComplex& cx, std::optional<Rational> m)
{
    StableComplexities s;
    s.M = m ? *m : stable_bound(cx);
    s.sublevel_neg = model_betti(sublevel_model(cx, -s.M));
    s.sublevel_pos = model_betti(sublevel_model(cx, s.M));
    s.superlevel_neg = model_betti(superlevel_model(cx, -s.M));
    s.superlevel_pos = model_betti(superlevel_model(cx, s.M));
    return s;
}

CoarseComplexities coarse_complexities(const CanonicalComplex& cx, std::optional<Rational> m)
{
    const Rational M = m ? *m : stable_bound(cx);
    const Rational M2 = M + 1;
    CoarseComplexities c;
    // Excision of F < -M' (resp. F > M') reduces both pairs to bands.
    c.sublevel = pair_ranks(band_pair_model(cx, -M2, -M, M, true), false);
    c.superlevel = pair_ranks(band_pair_model(cx, -M, M, M2, false), false);
    for (auto x : c.sublevel)
        c.sublevel_total += x;
    for (auto x : c.superlevel)
        c.superlevel_total += x;
    return c;
}

ComponentCounts component_counts(const StableComplexities& s)
{
    return {s.sublevel_neg.at(0), s.sublevel_pos.at(0), s.superlevel_neg.at(0), s.superlevel_pos.at(0)};
}

ComponentCounts component_counts(const CanonicalComplex& cx)
{
    return component_counts(stable_complexities(cx));
}

std::string to_string(VertexKind k)
{
    switch (k) {
    case VertexKind::Regular:
        return "regular";
    case VertexKind::NondegenerateCritical:
        return "nondegenerate_critical";
    case VertexKind::DegenerateCritical:
        break;
    }
    return "degenerate_critical";
}

namespace {

void require_depth2_generic(const Network& net, const char* op)
{
    if (net.depth() != 1)
        throw UnsupportedError(std::string(op) + ": only networks with one hidden layer are supported");
    if (auto g = is_generic(net); !g.ok)
        throw UnsupportedError(std::string(op) + ": network is not generic (" + g.witness + ")");
}

} // namespace

VertexClass classify_vertex(const CanonicalComplex& cx, std::size_t cell)
{
    require_depth2_generic(cx.net, "classify_vertex");
    if (auto t = is_transversal(cx.net); !t.ok)
        throw UnsupportedError("classify_vertex: network is not transversal (" + t.witness + ")");
    const Cell& v = cx.cells.at(cell);
    if (v.dimension != 0)
        throw InputError("classify_vertex: cell is not a vertex");
    VertexClass out;
    out.point = v.geometry.vrep().points.front();
    out.value = v.form.at(out.point);

    // Edges leaving v, paired by the hyperplanes containing them.
    std::map<std::vector<std::size_t>, std::vector<int>> pairs;
    bool degenerate = false;
    for (auto e : cx.cofaces(cell)) {
        const Cell& edge = cx.cells[e];
        if (edge.dimension != 1)
            continue;
        const VRep& g = edge.geometry.vrep();
        Vec away;
        if (g.points.size() == 2)
            away = sub(g.points[0] == out.point ? g.points[1] : g.points[0], out.point);
        else
            away = g.rays.front();
        const int slope = sign(dot(edge.form.gradient, away));
        degenerate = degenerate || slope == 0;
        std::vector<std::size_t> zeros_of;
        for (std::size_t i = 0; i < edge.label.size(); ++i)
            if (edge.label[i] == 0)
                zeros_of.push_back(i);
        pairs[zeros_of].push_back(slope);
    }
    if (degenerate) {
        out.kind = VertexKind::DegenerateCritical;
        return out;
    }
    int inward = 0;
    for (const auto& [key, slopes] : pairs) {
        if (slopes.size() != 2)
            throw std::logic_error("vertex edge pairing is not two-to-one");
        if (slopes[0] != slopes[1]) {
            out.kind = VertexKind::Regular;
            return out;
        }
        if (slopes[0] < 0)
            ++inward;
    }
    out.kind = VertexKind::NondegenerateCritical;
    out.index = inward;
    return out;
}

bool is_pl_morse_depth2(const Network& net)
{
    require_depth2_generic(net, "is_pl_morse_depth2");
    const AffineLayer& l = net.layers().front();
    std::vector<Constraint> rows;
    for (std::size_t j = 0; j < l.outputs(); ++j)
        rows.push_back({l.weights[j], l.bias[j]});
    return !strict_feasible(rows, net.input_dim());
}

ComplexityReport analyze(const Network& net)
{
    if (auto t = is_transversal(net); !t.ok)
        throw UnsupportedError("network is not transversal: " + t.witness);
    return analyze(build_complex(net));
}

ComplexityReport analyze(const CanonicalComplex& cx)
{
    ComplexityReport r;
    r.architecture = cx.net.architecture();
    r.thresholds = cx.thresholds;
    r.census = census(cx);
    const auto comps = flat_components(cx);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        LocalComplexityRecord rec = local_h_complexity(cx, comps[i]);
        rec.component = i;
        r.global += rec.total;
        r.components.push_back(std::move(rec));
    }
    r.stable = stable_complexities(cx);
    r.coarse = coarse_complexities(cx, r.stable.M);
    r.counts = component_counts(r.stable);
    const auto zc = zero_cells(cx);
    r.vertex_count = zc.size();
    r.generic = is_generic(cx.net).ok;
    if (cx.net.depth() != 1) {
        r.classification_note = "vertex classification needs exactly one hidden layer";
    } else if (!r.generic) {
        r.classification_note = "vertex classification needs a generic network";
    } else {
        r.vertices_classified = true;
        for (const auto& z : zc)
            r.vertices.push_back(classify_vertex(cx, z.cell));
    }
    const auto diff = [](std::size_t a, std::size_t b) { return a > b ? a - b : b - a; };
    r.coarse_le_global = r.coarse.sublevel_total <= r.global && r.coarse.superlevel_total <= r.global;
    r.global_le_vertex_count = r.global <= r.vertex_count;
    r.sublevel_count_bound = diff(r.counts.sub_neg, r.counts.sub_pos) <= r.coarse.sublevel_total;
    r.superlevel_count_bound = diff(r.counts.super_pos, r.counts.super_neg) <= r.coarse.superlevel_total;
    return r;
}

} // namespace pltopo
