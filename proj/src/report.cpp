#include "pltopo/complexity.hpp"

namespace pltopo {

namespace {

nlohmann::json rational_json(const Rational& r) { return to_string(r); }

nlohmann::json vec_json(const Vec& v)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : v)
        out.push_back(rational_json(x));
    return out;
}

} // namespace

nlohmann::json to_json(const ComplexityReport& r)
{
    nlohmann::json j;
    j["architecture"] = r.architecture;
    nlohmann::json thresholds = nlohmann::json::array();
    for (const auto& t : r.thresholds)
        thresholds.push_back(rational_json(t));
    j["thresholds"] = thresholds;
    j["census"] = {{"cells", r.census.cells}, {"bounded", r.census.bounded}, {"unbounded", r.census.unbounded}};

    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : r.components)
        comps.push_back({{"level", rational_json(c.level)},
                         {"component", c.component},
                         {"cells", c.cells},
                         {"dimension", c.dimension},
                         {"ranks", c.ranks},
                         {"total", c.total},
                         {"h_critical", c.h_critical}});
    j["components"] = comps;
    j["global"] = r.global;
    j["global_h_complexity"] = r.global;
    j["stable"] = {{"M", rational_json(r.stable.M)},
                   {"sublevel_neg", r.stable.sublevel_neg},
                   {"sublevel_pos", r.stable.sublevel_pos},
                   {"superlevel_neg", r.stable.superlevel_neg},
                   {"superlevel_pos", r.stable.superlevel_pos}};
    j["coarse"] = {{"sublevel", r.coarse.sublevel},
                   {"superlevel", r.coarse.superlevel},
                   {"sublevel_total", r.coarse.sublevel_total},
                   {"superlevel_total", r.coarse.superlevel_total}};
    j["counts"] = {{"sub_neg", r.counts.sub_neg},
                   {"sub_pos", r.counts.sub_pos},
                   {"super_neg", r.counts.super_neg},
                   {"super_pos", r.counts.super_pos}};
    j["generic"] = r.generic;
    j["vertex_count"] = r.vertex_count;
    j["vertices_classified"] = r.vertices_classified;
    if (!r.classification_note.empty())
        j["classification_note"] = r.classification_note;
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& v : r.vertices) {
        nlohmann::json e = {{"point", vec_json(v.point)}, {"value", rational_json(v.value)}, {"class", to_string(v.kind)}};
        if (v.kind == VertexKind::NondegenerateCritical)
            e["index"] = v.index;
        verts.push_back(std::move(e));
    }
    j["vertices"] = verts;
    j["flags"] = {{"coarse_le_global", r.coarse_le_global},
                  {"global_le_vertex_count", r.global_le_vertex_count},
                  {"sublevel_count_bound", r.sublevel_count_bound},
                  {"superlevel_count_bound", r.superlevel_count_bound}};
    return j;
}

} // namespace pltopo
