#include "pltopo/complexity.hpp"
#include "pltopo/ensembles.hpp"
#include "pltopo/errors.hpp"
#include "pltopo/network_io.hpp"
#include "pltopo/oracle.hpp"
#include "pltopo/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace pltopo;

namespace {

void emit(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write " + path);
    out << text;
}

std::vector<std::size_t> parse_arch(const std::string& text)
{
    std::vector<std::size_t> arch;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw InputError("bad architecture '" + text + "', expected e.g. 2,3,1");
        arch.push_back(v);
    }
    return arch;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact topology of ReLU network level sets"};
    app.require_subcommand(1);

    auto* analyze_cmd = app.add_subcommand("analyze", "Full complexity report for a network");
    std::string net_path, report_path;
    analyze_cmd->add_option("network", net_path, "Network JSON")->required();
    analyze_cmd->add_option("--report", report_path, "Write the report here instead of stdout");

    auto* gen_cmd = app.add_subcommand("generate", "Write a network JSON");
    unsigned fan = 0, coarse = 0;
    std::string random_arch, gen_out, gen_scheme = "gaussian";
    std::uint64_t gen_seed = 0;
    auto* fan_opt = gen_cmd->add_option("--fan", fan, "Fan construction with local complexity n");
    auto* cb_opt = gen_cmd->add_option("--coarse-bound", coarse, "Network with coarse complexity m-2");
    auto* rnd_opt = gen_cmd->add_option("--random", random_arch, "Random network, architecture like 2,3,1");
    gen_cmd->add_option("--seed", gen_seed, "Seed for --random");
    gen_cmd->add_option("--scheme", gen_scheme, "gaussian or uniform")->check(CLI::IsMember({"gaussian", "uniform"}));
    gen_cmd->add_option("--output,-o", gen_out, "Output path");
    fan_opt->excludes(cb_opt)->excludes(rnd_opt);
    cb_opt->excludes(rnd_opt);

    auto* mc_cmd = app.add_subcommand("montecarlo", "Monte Carlo experiments");
    std::vector<unsigned> plmorse;
    std::string flat_arch, mc_scheme = "gaussian", mc_out;
    std::size_t trials = 1000;
    std::uint64_t mc_seed = 0;
    auto* pl_opt = mc_cmd->add_option("--plmorse", plmorse, "n n1")->expected(2);
    auto* flat_opt = mc_cmd->add_option("--flat", flat_arch, "Architecture like 2,3,1");
    pl_opt->excludes(flat_opt);
    mc_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);
    mc_cmd->add_option("--seed", mc_seed);
    mc_cmd->add_option("--scheme", mc_scheme)->check(CLI::IsMember({"gaussian", "uniform"}));
    mc_cmd->add_option("--output,-o", mc_out);

    auto* or_cmd = app.add_subcommand("oracle", "Grid Betti numbers for cross-checks");
    std::string or_net, threshold = "0", resolution = "1/16", box = "4", mode = "sublevel", or_out;
    or_cmd->add_option("network", or_net)->required();
    or_cmd->add_option("--threshold", threshold, "Rational threshold c");
    or_cmd->add_option("--resolution", resolution, "Grid spacing");
    or_cmd->add_option("--box", box, "Half width B of the box [-B, B]^n");
    or_cmd->add_option("--mode", mode)->check(CLI::IsMember({"sublevel", "superlevel"}));
    or_cmd->add_option("--output,-o", or_out);

    auto* svg_cmd = app.add_subcommand("export-svg", "SVG drawing of a planar complex");
    std::string svg_net, svg_out;
    svg_cmd->add_option("network", svg_net)->required();
    svg_cmd->add_option("--output,-o", svg_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze_cmd) {
            const Network net = load_network(net_path);
            emit(to_json(analyze(net)).dump(2) + "\n", report_path);
        } else if (*gen_cmd) {
            std::optional<Network> net;
            if (*fan_opt)
                net = build_fan_network(fan);
            else if (*cb_opt)
                net = build_coarse_bound_network(coarse);
            else if (*rnd_opt)
                net = random_network(parse_arch(random_arch), gen_seed, parse_scheme(gen_scheme));
            else
                throw InputError("generate needs --fan, --coarse-bound or --random");
            emit(network_to_json(*net).dump(2) + "\n", gen_out);
        } else if (*mc_cmd) {
            TrialSummary s;
            if (*pl_opt)
                s = montecarlo_plmorse(plmorse[0], plmorse[1], trials, mc_seed, parse_scheme(mc_scheme));
            else if (*flat_opt)
                s = montecarlo_flat_cell(parse_arch(flat_arch), trials, mc_seed, parse_scheme(mc_scheme));
            else
                throw InputError("montecarlo needs --plmorse or --flat");
            emit(to_json(s).dump(2) + "\n", mc_out);
        } else if (*or_cmd) {
            const Network net = load_network(or_net);
            const Rational b = parse_rational(box);
            const Vec lo(net.input_dim(), Rational(-b)), hi(net.input_dim(), b);
            const Rational c = parse_rational(threshold);
            const auto pred = mode == "sublevel" ? GridPredicate::sublevel(c) : GridPredicate::superlevel(c);
            const OracleResult r = grid_oracle(net, lo, hi, parse_rational(resolution), pred);
            nlohmann::json j = {{"mode", mode},
                                {"threshold", to_string(c)},
                                {"betti", r.betti},
                                {"min_margin", r.min_margin},
                                {"grid_points", r.grid_points},
                                {"top_cubes", r.top_cubes}};
            emit(j.dump(2) + "\n", or_out);
        } else if (*svg_cmd) {
            const Network net = load_network(svg_net);
            if (net.input_dim() != 2)
                throw InputError("export-svg needs input dimension 2");
            emit(export_svg(build_complex(net)), svg_out);
        }
    } catch (const UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
