#include "pltopo/ensembles.hpp"

#include "pltopo/complex.hpp"
#include "pltopo/errors.hpp"
#include "pltopo/polyhedron.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace pltopo {

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct Outcome {
    bool success = false;
    std::size_t resampled = 0;
};

template <class Trial>
std::vector<Outcome> run_trials(std::size_t trials, const Trial& trial)
{
    std::vector<Outcome> out(trials);
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), std::max<std::size_t>(trials, 1)));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < trials; i = next++)
            out[i] = trial(i);
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w)
        pool.emplace_back(work);
    work();
    for (auto& t : pool)
        t.join();
    return out;
}

void finish(TrialSummary& s, const std::vector<Outcome>& outcomes, std::optional<Rational> reference)
{
    for (const auto& o : outcomes) {
        s.successes += o.success;
        s.resampled += o.resampled;
    }
    s.empirical_rate = Rational(static_cast<unsigned long>(s.successes), static_cast<unsigned long>(s.trials));
    s.empirical_rate.canonicalize();
    const double n = static_cast<double>(s.trials);
    const double p = to_double(s.empirical_rate);
    const double spread = 4 * std::sqrt(p * (1 - p) / n);
    s.ci_low = std::max(0.0, p - spread);
    s.ci_high = std::min(1.0, p + spread);
    if (reference) {
        const double q = to_double(*reference);
        s.tolerance = 4 * std::sqrt(q * (1 - q) / n);
    }
}

} // namespace

Rational plmorse_probability_formula(unsigned n, unsigned n1)
{
    if (n < 1 || n1 < 1)
        throw InputError("plmorse_probability_formula needs n, n1 >= 1");
    mpz_class sum = 0;
    for (unsigned k = n + 1; k <= n1; ++k) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), n1, k);
        sum += c;
    }
    mpz_class denom = 1;
    denom <<= n1;
    Rational out(sum, denom);
    out.canonicalize();
    return out;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index)
{
    return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

unsigned worker_count()
{
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("PLMORSE_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1)
            return static_cast<unsigned>(v);
    }
    return hw;
}

TrialSummary montecarlo_plmorse(unsigned n, unsigned n1, std::size_t trials, std::uint64_t seed, SamplingScheme scheme)
{
    if (trials < 1)
        throw InputError("montecarlo_plmorse needs at least one trial");
    TrialSummary s;
    s.experiment = "plmorse";
    s.architecture = {n, n1, 1};
    s.trials = trials;
    s.seed = seed;
    s.scheme = scheme;
    s.closed_form = plmorse_probability_formula(n, n1);
    const auto outcomes = run_trials(trials, [&](std::size_t i) {
        Outcome o;
        for (std::uint64_t attempt = 0;; ++attempt) {
            const Network net = random_network(s.architecture, trial_seed(seed, i) + attempt, scheme);
            if (!is_generic(net).ok) {
                ++o.resampled;
                continue;
            }
            const AffineLayer& l = net.layers().front();
            std::vector<Constraint> rows;
            for (std::size_t j = 0; j < l.outputs(); ++j)
                rows.push_back({l.weights[j], l.bias[j]});
            o.success = !strict_feasible(rows, n);
            return o;
        }
    });
    finish(s, outcomes, s.closed_form);
    s.within_tolerance = std::abs(to_double(s.empirical_rate) - to_double(*s.closed_form)) <= s.tolerance;
    return s;
}

TrialSummary montecarlo_flat_cell(const std::vector<std::size_t>& arch, std::size_t trials, std::uint64_t seed,
                                  SamplingScheme scheme)
{
    if (trials < 1)
        throw InputError("montecarlo_flat_cell needs at least one trial");
    if (arch.size() < 3)
        throw InputError("montecarlo_flat_cell needs at least one hidden layer");
    TrialSummary s;
    s.experiment = "flat_cell";
    s.architecture = arch;
    s.trials = trials;
    s.seed = seed;
    s.scheme = scheme;
    s.lower_bound = Rational(1, 1);
    for (std::size_t k = 0; k < arch[arch.size() - 2]; ++k)
        *s.lower_bound /= 2;
    const auto outcomes = run_trials(trials, [&](std::size_t i) {
        const std::uint64_t ts = trial_seed(seed, i);
        const Network net = random_network(arch, ts, scheme);
        std::mt19937_64 rng(splitmix64(ts));
        Vec x(arch.front());
        for (auto& c : x)
            c = sample_parameter(rng, scheme);
        const TernaryLabel label = activation_pattern(net, x);
        // Gradient of F on the cell with this label.
        Matrix jac;
        std::size_t offset = 0;
        const auto& layers = net.layers();
        for (std::size_t l = 0; l < layers.size(); ++l) {
            Matrix next;
            for (std::size_t r = 0; r < layers[l].outputs(); ++r) {
                Vec row = l == 0 ? layers[l].weights[r] : Vec(arch.front(), Rational(0));
                if (l > 0)
                    for (std::size_t c = 0; c < jac.size(); ++c)
                        if (sign(layers[l].weights[r][c]) != 0)
                            row = add(row, scale(jac[c], layers[l].weights[r][c]));
                if (layers[l].activation == Activation::Relu && label[offset + r] <= 0)
                    row = zeros(arch.front());
                next.push_back(std::move(row));
            }
            if (layers[l].activation == Activation::Relu)
                offset += layers[l].outputs();
            jac = std::move(next);
        }
        Outcome o;
        o.success = std::all_of(jac.front().begin(), jac.front().end(), [](const Rational& v) { return sign(v) == 0; });
        return o;
    });
    finish(s, outcomes, s.lower_bound);
    s.within_tolerance = to_double(s.empirical_rate) >= to_double(*s.lower_bound) - s.tolerance;
    return s;
}

nlohmann::json to_json(const TrialSummary& s)
{
    nlohmann::json j;
    j["experiment"] = s.experiment;
    j["architecture"] = s.architecture;
    j["trials"] = s.trials;
    j["seed"] = s.seed;
    j["scheme"] = to_string(s.scheme);
    j["successes"] = s.successes;
    j["empirical_rate"] = to_string(s.empirical_rate);
    j["empirical_rate_decimal"] = to_double(s.empirical_rate);
    if (s.closed_form)
        j["closed_form"] = to_string(*s.closed_form);
    if (s.lower_bound)
        j["lower_bound"] = to_string(*s.lower_bound);
    j["confidence"] = {{"low", s.ci_low}, {"high", s.ci_high}, {"sigmas", 4}};
    j["tolerance"] = s.tolerance;
    j["within_tolerance"] = s.within_tolerance;
    j["resampled"] = s.resampled;
    return j;
}

} // namespace pltopo
