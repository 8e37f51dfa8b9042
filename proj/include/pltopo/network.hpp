#pragma once

#include "pltopo/rational.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace pltopo {

enum class Activation { Relu, None };

struct AffineLayer {
    Matrix weights; // rows = output width, columns = input width
    Vec bias;
    Activation activation = Activation::Relu;

    std::size_t inputs() const { return weights.empty() ? 0 : weights.front().size(); }
    std::size_t outputs() const { return weights.size(); }
};

/// Per-neuron sign of the pre-activation, concatenated over hidden layers.
using TernaryLabel = std::vector<std::int8_t>;

std::string label_string(const TernaryLabel& label);

/// An affine function x -> <gradient, x> + constant.
struct AffineForm {
    Vec gradient;
    Rational constant;

    Rational at(const Vec& x) const { return dot(gradient, x) + constant; }
};

/// Fully-connected ReLU network R^n0 -> R with architecture (n0, ..., nm; 1).
///
/// Hidden layers carry ReLU, the last layer is affine with a single output.
/// Networks are immutable once constructed.
class Network {
public:
    Network() = default;
    /// Validates shapes and activations; throws InputError.
    explicit Network(std::vector<AffineLayer> layers);

    const std::vector<AffineLayer>& layers() const { return layers_; }
    std::size_t input_dim() const { return layers_.front().inputs(); }
    /// Number of hidden (ReLU) layers.
    std::size_t depth() const { return layers_.size() - 1; }
    std::vector<std::size_t> hidden_widths() const;
    std::size_t total_hidden() const;
    /// (n0, n1, ..., nm, 1)
    std::vector<std::size_t> architecture() const;

    const AffineLayer& output_layer() const { return layers_.back(); }

private:
    std::vector<AffineLayer> layers_;
};

struct Evaluation {
    Rational value;
    /// Pre-activations of all hidden neurons, layer blocks concatenated.
    Vec preactivations;
};

Evaluation evaluate(const Network& net, const Vec& point);
TernaryLabel activation_pattern(const Network& net, const Vec& point);

/// Same hidden layers, output weights and bias negated.
Network negate_output(const Network& net);

/// Depth-2 network R^2 -> R^{2n+2} -> R whose hidden units are the 2n+2 lines
/// tangent to the unit circle at (rationalized) angles pi*j/(n+1), co-oriented
/// outward, with output weights (-1)^j. The central polygon is flat at 0.
Network build_fan_network(unsigned n);

/// Depth-2 network R^2 -> R^m -> R on m cyclically ordered tangent lines whose
/// coarse bounded sublevel complexity is m - 2.
Network build_coarse_bound_network(unsigned m);

/// Output weights s for the given first layer so that the edge class leaving
/// the all-inactive region across facet i increases away from it iff
/// signs[i] = +1. Throws PreconditionError when the layer is not locally
/// generic at that region or the region is empty.
Vec prescribe_edge_orientations(const AffineLayer& first_layer, const std::vector<int>& signs);

/// Rational point on the unit circle close to angle phi, exact for multiples
/// of pi/2, in the same cyclic position as phi relative to other calls.
Vec rational_circle_point(double phi);

enum class SamplingScheme { Gaussian, Uniform };

std::string to_string(SamplingScheme scheme);
/// One symmetric-about-zero draw (standard normal or uniform on [-1, 1]), snapped to 2^-53.
Rational sample_parameter(std::mt19937_64& rng, SamplingScheme scheme);
SamplingScheme parse_scheme(const std::string& name);

/// Deterministic in (arch, seed, scheme). Parameters are i.i.d. symmetric about
/// zero, snapped to rationals with denominator 2^53.
Network random_network(const std::vector<std::size_t>& arch, std::uint64_t seed,
                       SamplingScheme scheme = SamplingScheme::Gaussian);

} // namespace pltopo
