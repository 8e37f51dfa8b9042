#include "pltopo/network.hpp"

#include "pltopo/errors.hpp"
#include "pltopo/linalg.hpp"
#include "pltopo/polyhedron.hpp"

#include <cmath>
#include <numbers>

namespace pltopo {

std::string label_string(const TernaryLabel& label)
{
    std::string out;
    out.reserve(label.size());
    for (auto v : label)
        out += v > 0 ? '+' : (v < 0 ? '-' : '0');
    return out;
}

Network::Network(std::vector<AffineLayer> layers) : layers_(std::move(layers))
{
    if (layers_.empty())
        throw InputError("network has no layers");
    for (std::size_t l = 0; l < layers_.size(); ++l) {
        const AffineLayer& layer = layers_[l];
        if (layer.weights.empty())
            throw InputError("layer " + std::to_string(l) + " has no rows");
        if (layer.bias.size() != layer.weights.size())
            throw InputError("layer " + std::to_string(l) + " bias length differs from row count");
        const std::size_t cols = layer.weights.front().size();
        if (cols == 0)
            throw InputError("layer " + std::to_string(l) + " has no columns");
        for (std::size_t r = 0; r < layer.weights.size(); ++r)
            if (layer.weights[r].size() != cols)
                throw InputError("layer " + std::to_string(l) + " row " + std::to_string(r) + " has wrong length");
        if (l > 0 && cols != layers_[l - 1].outputs())
            throw InputError("layer " + std::to_string(l) + " input width does not match previous layer");
        const bool last = l + 1 == layers_.size();
        if (last && layer.activation != Activation::None)
            throw InputError("final layer must have no activation");
        if (!last && layer.activation != Activation::Relu)
            throw InputError("hidden layer " + std::to_string(l) + " must use relu");
    }
    if (layers_.back().outputs() != 1)
        throw InputError("final layer must have exactly one output");
}

std::vector<std::size_t> Network::hidden_widths() const
{
    std::vector<std::size_t> out;
    for (std::size_t l = 0; l + 1 < layers_.size(); ++l)
        out.push_back(layers_[l].outputs());
    return out;
}

std::size_t Network::total_hidden() const
{
    std::size_t n = 0;
    for (auto w : hidden_widths())
        n += w;
    return n;
}

std::vector<std::size_t> Network::architecture() const
{
    std::vector<std::size_t> out{input_dim()};
    for (const auto& layer : layers_)
        out.push_back(layer.outputs());
    return out;
}

Evaluation evaluate(const Network& net, const Vec& point)
{
    if (point.size() != net.input_dim())
        throw InputError("evaluate: point has dimension " + std::to_string(point.size()) + ", expected "
                         + std::to_string(net.input_dim()));
    Evaluation out;
    Vec current = point;
    for (const auto& layer : net.layers()) {
        Vec next(layer.outputs());
        for (std::size_t r = 0; r < layer.outputs(); ++r)
            next[r] = dot(layer.weights[r], current) + layer.bias[r];
        if (layer.activation == Activation::Relu) {
            for (auto& z : next) {
                out.preactivations.push_back(z);
                if (sign(z) < 0)
                    z = 0;
            }
        }
        current = std::move(next);
    }
    out.value = current.front();
    return out;
}

TernaryLabel activation_pattern(const Network& net, const Vec& point)
{
    const Evaluation e = evaluate(net, point);
    TernaryLabel label;
    label.reserve(e.preactivations.size());
    for (const auto& z : e.preactivations)
        label.push_back(static_cast<std::int8_t>(sign(z)));
    return label;
}

Network negate_output(const Network& net)
{
    std::vector<AffineLayer> layers = net.layers();
    AffineLayer& out = layers.back();
    for (auto& row : out.weights)
        row = negate(row);
    out.bias = negate(out.bias);
    return Network(std::move(layers));
}

Vec rational_circle_point(double phi)
{
    // Normalize to (-pi, pi].
    phi = std::remainder(phi, 2 * std::numbers::pi);
    if (phi <= -std::numbers::pi)
        phi += 2 * std::numbers::pi;
    if (std::abs(phi - std::numbers::pi) < 1e-9)
        return {Rational(-1), Rational(0)};
    // Stereographic parametrization; t = tan(phi/2) is monotone in phi, so
    // rounding t to a fine grid keeps the cyclic order of well-separated angles.
    const double t_exact = std::tan(phi / 2);
    Rational t(static_cast<long>(std::lround(t_exact * 4096.0)), 4096);
    t.canonicalize();
    const Rational t2 = t * t;
    Rational x = (1 - t2) / (1 + t2);
    Rational y = 2 * t / (1 + t2);
    return {x, y};
}

namespace {

AffineLayer tangent_layer(const std::vector<Vec>& points)
{
    AffineLayer layer;
    for (const auto& p : points) {
        layer.weights.push_back(p);
        layer.bias.push_back(-1);
    }
    layer.activation = Activation::Relu;
    return layer;
}

AffineLayer output_layer(Vec weights)
{
    AffineLayer layer;
    layer.weights.push_back(std::move(weights));
    layer.bias.push_back(0);
    layer.activation = Activation::None;
    return layer;
}

} // namespace

Network build_fan_network(unsigned n)
{
    if (n < 1)
        throw InputError("fan network needs n >= 1");
    const unsigned half = n + 1;
    std::vector<Vec> points(2 * half);
    for (unsigned j = 1; j <= half; ++j) {
        // Hidden row j is (sin(pi j/(n+1)), cos(pi j/(n+1))), i.e. the circle
        // point at angle pi/2 - pi j/(n+1).
        const double theta = std::numbers::pi * j / half;
        points[j - 1] = rational_circle_point(std::numbers::pi / 2 - theta);
    }
    // Antipodal rows stay exactly antipodal so opposite lines remain parallel.
    for (unsigned j = half + 1; j <= 2 * half; ++j)
        points[j - 1] = negate(points[j - half - 1]);
    Vec out(2 * half);
    for (unsigned j = 1; j <= 2 * half; ++j)
        out[j - 1] = j % 2 == 0 ? 1 : -1;
    return Network({tangent_layer(points), output_layer(std::move(out))});
}

Network build_coarse_bound_network(unsigned m)
{
    if (m < 3)
        throw InputError("coarse bound network needs m >= 3");
    std::vector<Vec> points(m);
    for (unsigned j = 1; j <= m; ++j) {
        const double phi = -std::numbers::pi / 2 + std::numbers::pi * j / (m + 1);
        points[j - 1] = rational_circle_point(phi);
    }
    Vec out(m);
    out[0] = -1;
    for (unsigned i = 2; i < m; ++i)
        out[i - 1] = i % 2 == 0 ? 2 : -2;
    out[m - 1] = m % 2 == 0 ? 1 : -1;
    return Network({tangent_layer(points), output_layer(std::move(out))});
}

Vec prescribe_edge_orientations(const AffineLayer& first_layer, const std::vector<int>& signs)
{
    const std::size_t m = first_layer.outputs();
    const std::size_t n = first_layer.inputs();
    if (signs.size() != m)
        throw InputError("one sign per hidden unit is required");
    for (int s : signs)
        if (s != 1 && s != -1)
            throw InputError("signs must be +1 or -1");

    std::vector<Constraint> rows;
    Polyhedron region(n);
    for (std::size_t j = 0; j < m; ++j) {
        rows.push_back({first_layer.weights[j], first_layer.bias[j]});
        region.add_inequality(negate(first_layer.weights[j]), -first_layer.bias[j]);
    }
    if (!strict_feasible(rows, n))
        throw PreconditionError("the all-inactive region is empty");
    // Local genericity at the region: each vertex lies on exactly n hyperplanes
    // with independent normals.
    for (const auto& v : region.vertices()) {
        Matrix tight;
        for (std::size_t j = 0; j < m; ++j)
            if (sign(dot(first_layer.weights[j], v) + first_layer.bias[j]) == 0)
                tight.push_back(first_layer.weights[j]);
        if (tight.size() != n || rank(tight, n) != n)
            throw PreconditionError("first layer is not generic at vertex " + to_string(v));
    }
    Vec s(m);
    for (std::size_t j = 0; j < m; ++j)
        s[j] = signs[j];
    return s;
}

std::string to_string(SamplingScheme scheme)
{
    return scheme == SamplingScheme::Gaussian ? "gaussian" : "uniform";
}

SamplingScheme parse_scheme(const std::string& name)
{
    if (name == "gaussian")
        return SamplingScheme::Gaussian;
    if (name == "uniform")
        return SamplingScheme::Uniform;
    throw InputError("unknown sampling scheme '" + name + "'");
}

Rational sample_parameter(std::mt19937_64& rng, SamplingScheme scheme)
{
    double x = 0;
    if (scheme == SamplingScheme::Gaussian) {
        std::normal_distribution<double> dist(0.0, 1.0);
        x = dist(rng);
    } else {
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        x = dist(rng);
    }
    return snap_dyadic(x);
}

Network random_network(const std::vector<std::size_t>& arch, std::uint64_t seed, SamplingScheme scheme)
{
    if (arch.empty())
        throw InputError("empty architecture");
    if (arch.size() < 2)
        throw InputError("architecture needs an input and an output width");
    for (auto w : arch)
        if (w == 0)
            throw InputError("architecture widths must be positive");
    if (arch.back() != 1)
        throw InputError("architecture must end in a single output");
    std::mt19937_64 rng(seed);
    std::vector<AffineLayer> layers;
    for (std::size_t l = 1; l < arch.size(); ++l) {
        AffineLayer layer;
        layer.weights.assign(arch[l], Vec(arch[l - 1]));
        layer.bias.assign(arch[l], Rational(0));
        for (std::size_t r = 0; r < arch[l]; ++r) {
            for (std::size_t c = 0; c < arch[l - 1]; ++c)
                layer.weights[r][c] = sample_parameter(rng, scheme);
            layer.bias[r] = sample_parameter(rng, scheme);
        }
        layer.activation = l + 1 == arch.size() ? Activation::None : Activation::Relu;
        layers.push_back(std::move(layer));
    }
    return Network(std::move(layers));
}

} // namespace pltopo
