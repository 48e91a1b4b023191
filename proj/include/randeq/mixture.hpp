#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "randeq/errors.hpp"

namespace randeq {

enum class ComponentKind { gaussian, uniform, atom };

/// One component of a one-dimensional mixture density.
/// `scale` is the standard deviation for gaussian components, the half-width
/// for uniform components and exactly 0 for atoms.
struct MixtureComponent {
    ComponentKind kind = ComponentKind::gaussian;
    double location = 0.0;
    double scale = 0.0;

    static MixtureComponent gaussian(double location, double scale) {
        return {ComponentKind::gaussian, location, scale};
    }
    static MixtureComponent uniform(double center, double half_width) {
        return {ComponentKind::uniform, center, half_width};
    }
    static MixtureComponent atom(double location) {
        return {ComponentKind::atom, location, 0.0};
    }
};

/// Weighted one-dimensional mixture of gaussian / uniform / atom components.
///
/// Immutable after construction. Densities containing atom components are
/// sample-only: pdf() rejects them, because a Dirac spike has no finite
/// density value (widen atoms on the right-hand side instead).
class MixtureDensity {
public:
    MixtureDensity(std::vector<MixtureComponent> components,
                   std::vector<double> weights);

    /// Equal-weight mixture.
    explicit MixtureDensity(std::vector<MixtureComponent> components);

    /// Single-component density with weight 1.
    static MixtureDensity single(MixtureComponent component);

    const std::vector<MixtureComponent>& components() const { return components_; }
    const std::vector<double>& weights() const { return weights_; }
    std::size_t component_count() const { return components_.size(); }
    bool has_atom() const { return has_atom_; }
    bool has_uniform() const { return has_uniform_; }

    /// Mixture density value at t. Throws AtomEvaluation if any component is
    /// an atom.
    double pdf(double t) const;

    /// Density value with far-tail components skipped: a gaussian component
    /// contributes only when |t - location| <= tau * scale, a uniform
    /// component only inside its exact support. Atoms are rejected as in
    /// pdf(). The induced error is below gaussian_pdf(tau) per component.
    double pdf_truncated(double t, double tau) const;

    /// True iff t lies within tau standard deviations of some gaussian
    /// component, inside some uniform support, or exactly on an atom.
    bool in_practical_support(double t, double tau) const;

    /// Mixture distribution function, right-continuous at atoms.
    double cdf(double t) const;

    /// Smallest t with cdf(t) >= u, resolved by bisection to 1e-12 absolute
    /// tolerance. Atom jumps are resolved exactly to the atom location.
    double quantile(double u) const;

    /// Mean of the mixture.
    double mean() const;

    /// Support bracket used for quantile bisection:
    /// [min location - 12 max scale, max location + 12 max scale].
    double bracket_lo() const { return bracket_lo_; }
    double bracket_hi() const { return bracket_hi_; }

    double max_scale() const { return max_scale_; }

private:
    std::vector<MixtureComponent> components_;
    std::vector<double> weights_;
    // Component indices sorted by location, with cumulative weight before
    // each, so cdf() can skip components far below/above t for large L.
    std::vector<std::uint32_t> order_;
    std::vector<double> weight_before_;
    double bracket_lo_ = 0.0;
    double bracket_hi_ = 0.0;
    double max_scale_ = 0.0;
    bool has_atom_ = false;
    bool has_uniform_ = false;

    void validate_and_index();
};

/// Fixed Monte Carlo draw for one sampled variable. Deterministic:
/// identical (density, count, seed) always reproduce the same values.
struct SampleSet {
    std::vector<double> values;
    std::uint64_t seed = 0;

    std::size_t count() const { return values.size(); }
};

/// Latin hypercube draw of n samples: n equal-probability strata over the
/// mixture CDF, one uniform draw per stratum, strata visited in a random
/// permutation. Atom strata collapse to the atom location exactly.
SampleSet sample_lhs(const MixtureDensity& density, std::size_t n,
                     std::uint64_t seed);

/// Exact distribution of offset + sum_k coeffs[k] * X_k for independent
/// mixture variables X_k with gaussian/atom components only: one output
/// component per element of the Cartesian product of input components.
/// Throws UnsupportedComponent if a uniform component is present.
MixtureDensity affine_combine(const std::vector<MixtureDensity>& densities,
                              std::span<const double> coeffs, double offset);

/// Component locations in stored order (the modes of each component).
std::vector<double> mode_list(const MixtureDensity& density);

} // namespace randeq
