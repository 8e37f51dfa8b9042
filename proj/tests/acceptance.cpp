// One PASS/FAIL line per acceptance criterion. Tolerances are fixed below.
#include "pltopo/combinatorics.hpp"
#include "pltopo/compact.hpp"
#include "pltopo/complexity.hpp"
#include "pltopo/ensembles.hpp"
#include "pltopo/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cmath>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

using namespace pltopo;

namespace {

constexpr double kSigmas = 4.0;
constexpr std::size_t kMcTrials = 10000;
constexpr std::size_t kMcZeroTrials = 1000;
constexpr std::uint64_t kSeed = 20240601;

using Sizes = std::vector<std::size_t>;

std::string show(const Sizes& v)
{
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        out << (i ? "," : "") << v[i];
    out << ')';
    return out.str();
}

/// Generic, transversal random nets with the given architecture.
std::vector<Network> sample_nets(const std::vector<std::size_t>& arch, std::size_t count, std::uint64_t base)
{
    std::vector<Network> out;
    for (std::uint64_t s = base; out.size() < count; ++s) {
        Network n = random_network(arch, s);
        if (is_generic(n).ok && is_transversal(n).ok)
            out.push_back(std::move(n));
    }
    return out;
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;
std::vector<int> selected;

void criterion(int id, const std::string& name, const std::function<Outcome()>& body, double budget_s = 0)
{
    if (!selected.empty() && std::find(selected.begin(), selected.end(), id) == selected.end())
        return;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0 && secs > budget_s) {
        o.pass = false;
        o.detail += " [over time budget " + std::to_string(budget_s) + " s]";
    }
    failures += !o.pass;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << "criterion " << id << " [" << name << "]: " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail
         << " (" << secs << " s)";
    std::cout << line.str() << std::endl;
}

Outcome zaslavsky()
{
    std::size_t checked = 0;
    for (std::size_t m : {3, 4, 5}) {
        const unsigned mm = static_cast<unsigned>(m);
        for (const auto& net : sample_nets({2, m, 1}, 50, 100000 * m)) {
            const CanonicalComplex cx = build_complex(net);
            const Census c = census(cx);
            const bool ok = c.cells[2] == 1 + binomial(mm, 1) + binomial(mm, 2) && c.cells[1] == mm * mm
                            && c.cells[0] == binomial(mm, 2) && c.unbounded[1] == 2 * binomial(mm, 1);
            if (!ok)
                return {false, "count mismatch at m=" + std::to_string(m) + " census " + show(c.cells)};
            ++checked;
        }
    }
    return {true, std::to_string(checked) + " nets match region/edge/vertex/unbounded-edge closed forms"};
}

Outcome plmorse_probability()
{
    std::ostringstream d;
    bool pass = true;
    for (auto [n, n1] : {std::pair{1u, 3u}, {2u, 3u}, {2u, 5u}}) {
        const TrialSummary s = montecarlo_plmorse(n, n1, kMcTrials, kSeed);
        const double p = to_double(*s.closed_form);
        const double tol = kSigmas * std::sqrt(p * (1 - p) / kMcTrials);
        const double err = std::abs(to_double(s.empirical_rate) - p);
        pass = pass && err <= tol;
        d << "(" << n << "," << n1 << ") rate " << to_double(s.empirical_rate) << " vs " << to_string(*s.closed_form)
          << " tol " << tol << "; ";
    }
    const TrialSummary z = montecarlo_plmorse(3, 2, kMcZeroTrials, kSeed);
    pass = pass && z.successes == 0;
    d << "(3,2) successes " << z.successes << "/" << kMcZeroTrials;
    return {pass, d.str()};
}

Outcome fan_construction()
{
    std::ostringstream d;
    bool pass = true;
    for (unsigned n = 1; n <= 3; ++n) {
        const ComplexityReport r = analyze(build_complex(build_fan_network(n)));
        Sizes want(3, 0);
        want[1] = n;
        bool found = false;
        for (const auto& c : r.components)
            if (c.level == 0 && c.dimension == 2) {
                found = c.ranks == want && c.total == n;
                d << "n=" << n << " central ranks " << show(c.ranks) << "; ";
            }
        pass = pass && found;
    }
    return {pass, d.str()};
}

Outcome coarse_sharp_bound()
{
    std::ostringstream d;
    bool pass = true;
    for (unsigned m : {4u, 5u}) {
        const CoarseComplexities c = coarse_complexities(build_complex(build_coarse_bound_network(m)));
        Sizes want(3, 0);
        want[1] = m - 2;
        pass = pass && c.sublevel == want;
        d << "m=" << m << " coarse sublevel " << show(c.sublevel) << "; ";
    }
    std::size_t violations = 0, checked = 0;
    for (std::size_t m : {3, 4, 5})
        for (const auto& net : sample_nets({2, m, 1}, m == 5 ? 34 : 33, 200000 * m)) {
            const CoarseComplexities c = coarse_complexities(build_complex(net));
            violations += c.sublevel_total > m - 2 || c.superlevel_total > m - 2;
            ++checked;
        }
    pass = pass && violations == 0;
    d << checked << " random nets, " << violations << " exceed m-2";
    return {pass, d.str()};
}

Outcome lower_bounds()
{
    std::size_t violations = 0, checked = 0;
    for (std::size_t m : {2, 3, 4, 5})
        for (const auto& net : sample_nets({2, m, 1}, 25, 300000 * m)) {
            const CanonicalComplex cx = build_complex(net);
            const StableComplexities s = stable_complexities(cx);
            const ComponentCounts n = component_counts(s);
            const CoarseComplexities c = coarse_complexities(cx, s.M);
            const auto d1 = static_cast<std::size_t>(std::labs(long(n.sub_neg) - long(n.sub_pos)));
            const auto d2 = static_cast<std::size_t>(std::labs(long(n.super_pos) - long(n.super_neg)));
            violations += d1 > c.sublevel_total || d2 > c.superlevel_total;
            ++checked;
        }
    return {violations == 0, std::to_string(checked) + " nets, " + std::to_string(violations) + " violations"};
}

Outcome classification()
{
    std::size_t regular = 0, nondeg = 0, degenerate = 0, bad = 0;
    for (std::size_t m : {3, 4})
        for (const auto& net : sample_nets({2, m, 1}, 50, 400000 * m)) {
            const CanonicalComplex cx = build_complex(net);
            for (const auto& k : flat_components(cx)) {
                if (k.dimension != 0)
                    continue;
                const VertexClass v = classify_vertex(cx, k.cells.front());
                const auto r = local_h_complexity(cx, k);
                if (v.kind == VertexKind::Regular) {
                    ++regular;
                    bad += r.total != 0;
                } else if (v.kind == VertexKind::NondegenerateCritical) {
                    ++nondeg;
                    bad += r.total != 1 || r.ranks[v.index] != 1;
                } else {
                    ++degenerate;
                }
            }
            // Vertices off every flat component are regular with zero local complexity by definition.
        }
    std::ostringstream d;
    d << regular << " regular, " << nondeg << " nondegenerate, " << degenerate << " degenerate flat vertices; " << bad
      << " mismatches";
    return {bad == 0 && nondeg > 0, d.str()};
}

Rational random_in(std::mt19937_64& rng, const Rational& lo, const Rational& hi)
{
    const Rational u = Rational(static_cast<long>(rng() % 1000) + 1, 1002);
    return lo + (hi - lo) * u;
}

Outcome homotopy_invariance()
{
    std::mt19937_64 rng(kSeed);
    std::size_t gaps = 0, bad = 0;
    for (const auto& net : sample_nets({2, 4, 1}, 20, 500000)) {
        const CanonicalComplex cx = build_complex(net);
        const Rational m = stable_bound(cx);
        std::vector<Rational> cuts{-m - 1};
        cuts.insert(cuts.end(), cx.thresholds.begin(), cx.thresholds.end());
        cuts.push_back(m + 1);
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            const Rational a = random_in(rng, cuts[i], cuts[i + 1]);
            const Rational b = random_in(rng, cuts[i], cuts[i + 1]);
            bad += model_betti(sublevel_model(cx, a)) != model_betti(sublevel_model(cx, b));
            bad += model_betti(superlevel_model(cx, a)) != model_betti(superlevel_model(cx, b));
            ++gaps;
        }
        bad += model_betti(level_model(cx, m)) != model_betti(superlevel_model(cx, m));
    }
    return {bad == 0, std::to_string(gaps) + " gaps on 20 nets, " + std::to_string(bad) + " disagreements"};
}

/// Box half-width containing every vertex of the complex refined at c, plus slack.
Rational oracle_box(const CanonicalComplex& cx, const Rational& c)
{
    Rational b = 1;
    const RefinedComplex r = refine_at_levels(cx, {c});
    for (const auto& cell : r.cells)
        if (cell.dimension == 0) {
            const Vec p = cell.geometry.vertices().front();
            for (const auto& x : p)
                b = std::max(b, Rational(abs(x)));
        }
    mpz_class whole;
    mpz_cdiv_q(whole.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
    return Rational(whole) + 2;
}

enum class OracleCheck { Agree, Disagree, Unstable };

/// Grid answers on shifted and rescaled grids; a threshold is margin-safe when
/// they all coincide. Thin wedges of a level set leave isolated grid samples
/// whose presence depends on grid placement.
OracleCheck oracle_agrees(const CanonicalComplex& cx, const Rational& c, std::string& why)
{
    const Rational box = oracle_box(cx, c);
    std::optional<std::pair<Sizes, Sizes>> grid;
    for (auto [steps, shift] : {std::pair{64L, Rational(0)}, {64L, Rational(1, 3)}, {96L, Rational(2, 7)}, {128L, Rational(3, 5)}}) {
        const Rational res = box / steps;
        const Vec lo(2, Rational(-box + shift * res)), hi(2, Rational(box + shift * res));
        const Sizes sub = grid_oracle(cx.net, lo, hi, res, GridPredicate::sublevel(c)).betti;
        const Sizes sup = grid_oracle(cx.net, lo, hi, res, GridPredicate::superlevel(c)).betti;
        if (grid && (grid->first != sub || grid->second != sup))
            return OracleCheck::Unstable;
        grid = {sub, sup};
    }
    const Sizes ps = model_betti(sublevel_model(cx, c));
    const Sizes pu = model_betti(superlevel_model(cx, c));
    if (grid->first != ps || grid->second != pu) {
        why = "c=" + std::to_string(to_double(c)) + " oracle " + show(grid->first) + show(grid->second) + " pipeline "
              + show(ps) + show(pu);
        return OracleCheck::Disagree;
    }
    return OracleCheck::Agree;
}

/// Midpoint of the widest gap between thresholds and zero-cell values.
Rational safe_threshold(const CanonicalComplex& cx)
{
    std::vector<Rational> v = cx.thresholds;
    for (const auto& z : zero_cells(cx))
        v.push_back(z.value);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (v.empty())
        return 0;
    Rational best = v.front() - 1;
    Rational width = 0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i + 1] - v[i] > width) {
            width = v[i + 1] - v[i];
            best = (v[i] + v[i + 1]) / 2;
        }
    return best;
}

Outcome oracle_equivalence()
{
    std::size_t agree = 0, total = 0, unstable = 0;
    std::string why;
    auto check = [&](const CanonicalComplex& cx, const Rational& c) {
        std::string w;
        const OracleCheck r = oracle_agrees(cx, c, w);
        if (r == OracleCheck::Unstable) {
            ++unstable;
            return false;
        }
        ++total;
        if (r == OracleCheck::Agree)
            ++agree;
        else if (why.empty())
            why = w;
        return true;
    };
    const Network n1({{{{1, 0}, {0, 1}}, {0, 0}, Activation::Relu}, {{{1, 1}}, {0}, Activation::None}});
    const CanonicalComplex c1 = build_complex(n1);
    std::size_t named = 0;
    for (auto c : {Rational(-1), Rational(1, 2), Rational(1)})
        named += check(c1, c);
    const CanonicalComplex f1 = build_complex(build_fan_network(1));
    for (auto c : {Rational(-1, 4), Rational(1, 4), Rational(-3, 2), Rational(3, 2)})
        named += check(f1, c);
    const Network tl({{{{1, 0}, {0, -1}, {-1, -1}}, {0, 0, 1}, Activation::Relu}, {{{2, -3, 1}}, {0}, Activation::None}});
    const CanonicalComplex c3 = build_complex(tl);
    for (auto c : {Rational(-1, 2), Rational(1, 2), Rational(3, 2)})
        named += check(c3, c);
    std::size_t randoms = 0;
    for (const auto& net : sample_nets({2, 4, 1}, 60, 600000)) {
        if (randoms == 12)
            break;
        const CanonicalComplex cx = build_complex(net);
        const Rational c = safe_threshold(cx);
        if (oracle_box(cx, c) > 12)
            continue;
        randoms += check(cx, c);
    }
    std::ostringstream d;
    d << agree << "/" << total << " agree (" << randoms << " random nets, " << named
      << "/10 named-net thresholds); " << unstable << " grid-unstable thresholds skipped";
    if (!why.empty())
        d << "; first mismatch " << why;
    return {agree == total && randoms >= 10 && named == 10, d.str()};
}

Outcome flat_cell_probability()
{
    const TrialSummary a = montecarlo_flat_cell({2, 1, 1}, kMcTrials, kSeed);
    const double tol_a = kSigmas * std::sqrt(0.25 / kMcTrials);
    const bool pa = std::abs(to_double(a.empirical_rate) - 0.5) <= tol_a;
    const TrialSummary b = montecarlo_flat_cell({2, 3, 1}, kMcTrials, kSeed);
    const double p = 0.125;
    const double tol_b = kSigmas * std::sqrt(p * (1 - p) / kMcTrials);
    const bool pb = to_double(b.empirical_rate) >= p - tol_b;
    std::ostringstream d;
    d << "(2,1,1) rate " << to_double(a.empirical_rate) << " vs 1/2 tol " << tol_a << "; (2,3,1) rate "
      << to_double(b.empirical_rate) << " >= 1/8 - " << tol_b;
    return {pa && pb, d.str()};
}

Outcome negation_duality()
{
    std::size_t bad = 0, edges = 0;
    for (const auto& net : sample_nets({2, 4, 1}, 20, 700000)) {
        const CanonicalComplex a = build_complex(net);
        const CanonicalComplex b = build_complex(negate_output(net));
        const StableComplexities sa = stable_complexities(a), sb = stable_complexities(b);
        bad += sa.sublevel_neg != sb.superlevel_pos || sa.sublevel_pos != sb.superlevel_neg
               || sa.superlevel_neg != sb.sublevel_pos || sa.superlevel_pos != sb.sublevel_neg;
        const CoarseComplexities ca = coarse_complexities(a), cb = coarse_complexities(b);
        bad += ca.sublevel != cb.superlevel || ca.superlevel != cb.sublevel;
        for (std::size_t i : a.cells_of_dimension(1)) {
            const std::size_t j = b.index.at(a.cells[i].label);
            const auto oa = edge_orientation(a, i), ob = edge_orientation(b, j);
            const bool reversed = (oa == EdgeOrientation::Flat && ob == EdgeOrientation::Flat)
                                  || (oa == EdgeOrientation::Increasing && ob == EdgeOrientation::Decreasing)
                                  || (oa == EdgeOrientation::Decreasing && ob == EdgeOrientation::Increasing);
            bad += !reversed;
            ++edges;
        }
    }
    return {bad == 0, "20 nets, " + std::to_string(edges) + " edges, " + std::to_string(bad) + " mismatches"};
}

} // namespace

/// Optional arguments restrict the run to the listed criterion numbers.
int main(int argc, char** argv)
{
    for (int i = 1; i < argc; ++i)
        selected.push_back(std::atoi(argv[i]));
    criterion(1, "zaslavsky census", zaslavsky, 30);
    criterion(2, "PL Morse probability", plmorse_probability, 120);
    criterion(3, "fan local H1-complexity n", fan_construction, 120);
    criterion(4, "coarse sublevel bound m-2", coarse_sharp_bound);
    criterion(5, "component-count lower bounds", lower_bounds);
    criterion(6, "classification vs relative homology", classification);
    criterion(7, "homotopy invariance across transversal gaps", homotopy_invariance);
    criterion(8, "grid oracle equivalence", oracle_equivalence);
    criterion(9, "flat cell probability", flat_cell_probability);
    criterion(10, "negation duality", negation_duality);
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
