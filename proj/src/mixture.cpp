#include "randeq/mixture.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "randeq/rng.hpp"

namespace randeq {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779399461;
constexpr double kInvSqrt2 = 0.7071067811865475244008444;
// Beyond 12 sigma a gaussian CDF is within 1e-32 of 0 or 1; treating it as
// saturated keeps cdf() exact to well below the bisection tolerance.
constexpr double kTailSigmas = 12.0;
// Loop over every component for small mixtures; switch to the sorted window
// only when L is large enough for the bookkeeping to pay off.
constexpr std::size_t kWindowThreshold = 64;

double gaussian_pdf(double t, double mu, double sigma) {
    const double z = (t - mu) / sigma;
    return kInvSqrt2Pi / sigma * std::exp(-0.5 * z * z);
}

double gaussian_cdf(double t, double mu, double sigma) {
    return 0.5 * std::erfc(-(t - mu) / sigma * kInvSqrt2);
}

double component_cdf(const MixtureComponent& c, double t) {
    switch (c.kind) {
    case ComponentKind::gaussian:
        return gaussian_cdf(t, c.location, c.scale);
    case ComponentKind::uniform: {
        if (t <= c.location - c.scale) return 0.0;
        if (t >= c.location + c.scale) return 1.0;
        return (t - (c.location - c.scale)) / (2.0 * c.scale);
    }
    case ComponentKind::atom:
        return t >= c.location ? 1.0 : 0.0;
    }
    return 0.0;
}

// Width beyond which a component's CDF saturates to 0/1.
double component_reach(const MixtureComponent& c) {
    switch (c.kind) {
    case ComponentKind::gaussian:
        return kTailSigmas * c.scale;
    case ComponentKind::uniform:
        return c.scale;
    case ComponentKind::atom:
        return 0.0;
    }
    return 0.0;
}

} // namespace

MixtureDensity::MixtureDensity(std::vector<MixtureComponent> components,
                               std::vector<double> weights)
    : components_(std::move(components)), weights_(std::move(weights)) {
    validate_and_index();
}

MixtureDensity::MixtureDensity(std::vector<MixtureComponent> components)
    : components_(std::move(components)),
      weights_(components_.size(),
               components_.empty() ? 0.0 : 1.0 / static_cast<double>(components_.size())) {
    validate_and_index();
}

MixtureDensity MixtureDensity::single(MixtureComponent component) {
    return MixtureDensity({component}, {1.0});
}

void MixtureDensity::validate_and_index() {
    if (components_.empty())
        throw std::invalid_argument("MixtureDensity: needs at least one component");
    if (components_.size() != weights_.size())
        throw std::invalid_argument("MixtureDensity: weights/components size mismatch");

    double sum = 0.0;
    for (double w : weights_) {
        if (!(w > 0.0))
            throw std::invalid_argument("MixtureDensity: weights must be positive");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("MixtureDensity: weights must sum to 1");

    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto& c : components_) {
        if (!std::isfinite(c.location) || !std::isfinite(c.scale))
            throw std::invalid_argument("MixtureDensity: non-finite component parameter");
        switch (c.kind) {
        case ComponentKind::gaussian:
        case ComponentKind::uniform:
            if (!(c.scale > 0.0))
                throw std::invalid_argument(
                    "MixtureDensity: gaussian/uniform components require scale > 0");
            break;
        case ComponentKind::atom:
            if (c.scale != 0.0)
                throw std::invalid_argument("MixtureDensity: atom components require scale = 0");
            has_atom_ = true;
            break;
        }
        if (c.kind == ComponentKind::uniform) has_uniform_ = true;
        lo = std::min(lo, c.location);
        hi = std::max(hi, c.location);
        max_scale_ = std::max(max_scale_, c.scale);
    }
    bracket_lo_ = lo - kTailSigmas * max_scale_;
    bracket_hi_ = hi + kTailSigmas * max_scale_;

    order_.resize(components_.size());
    std::iota(order_.begin(), order_.end(), 0u);
    std::stable_sort(order_.begin(), order_.end(), [&](std::uint32_t a, std::uint32_t b) {
        return components_[a].location < components_[b].location;
    });
    weight_before_.resize(components_.size() + 1);
    weight_before_[0] = 0.0;
    for (std::size_t k = 0; k < order_.size(); ++k)
        weight_before_[k + 1] = weight_before_[k] + weights_[order_[k]];
}

double MixtureDensity::pdf(double t) const {
    if (has_atom_)
        throw AtomEvaluation("pdf: density contains an atom component; sample-only");
    double acc = 0.0;
    for (std::size_t j = 0; j < components_.size(); ++j) {
        const auto& c = components_[j];
        if (c.kind == ComponentKind::gaussian) {
            acc += weights_[j] * gaussian_pdf(t, c.location, c.scale);
        } else {
            if (std::abs(t - c.location) <= c.scale)
                acc += weights_[j] / (2.0 * c.scale);
        }
    }
    return acc;
}

double MixtureDensity::pdf_truncated(double t, double tau) const {
    if (has_atom_)
        throw AtomEvaluation("pdf_truncated: density contains an atom component; sample-only");
    double acc = 0.0;
    for (std::size_t j = 0; j < components_.size(); ++j) {
        const auto& c = components_[j];
        const double d = std::abs(t - c.location);
        if (c.kind == ComponentKind::gaussian) {
            if (d <= tau * c.scale)
                acc += weights_[j] * gaussian_pdf(t, c.location, c.scale);
        } else {
            if (d <= c.scale)
                acc += weights_[j] / (2.0 * c.scale);
        }
    }
    return acc;
}

bool MixtureDensity::in_practical_support(double t, double tau) const {
    for (const auto& c : components_) {
        const double d = std::abs(t - c.location);
        switch (c.kind) {
        case ComponentKind::gaussian:
            if (d <= tau * c.scale) return true;
            break;
        case ComponentKind::uniform:
            if (d <= c.scale) return true;
            break;
        case ComponentKind::atom:
            if (d == 0.0) return true;
            break;
        }
    }
    return false;
}

double MixtureDensity::cdf(double t) const {
    const std::size_t n = components_.size();
    if (n < kWindowThreshold) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            acc += weights_[j] * component_cdf(components_[j], t);
        return acc;
    }
    // Components are scanned in location order. Everything whose support lies
    // entirely below t contributes its full weight via the prefix sum;
    // everything entirely above contributes nothing.
    const double reach = std::max(kTailSigmas * max_scale_, 0.0);
    auto lo_it = std::lower_bound(order_.begin(), order_.end(), t - reach,
                                  [&](std::uint32_t idx, double v) {
                                      return components_[idx].location < v;
                                  });
    double acc = weight_before_[static_cast<std::size_t>(lo_it - order_.begin())];
    for (auto it = lo_it; it != order_.end(); ++it) {
        const auto& c = components_[*it];
        if (c.location > t + reach) break;
        acc += weights_[*it] * component_cdf(c, t);
    }
    return acc;
}

double MixtureDensity::quantile(double u) const {
    u = std::clamp(u, 1e-300, 1.0);

    // Atom jumps first, so pure point masses resolve exactly.
    if (has_atom_) {
        for (std::size_t k = 0; k < order_.size(); ++k) {
            const auto& c = components_[order_[k]];
            if (c.kind != ComponentKind::atom) continue;
            const double loc = c.location;
            // CDF just below the atom: all continuous components plus atoms
            // strictly left of loc.
            double below = 0.0;
            double jump = 0.0;
            for (std::size_t j = 0; j < components_.size(); ++j) {
                const auto& cj = components_[j];
                if (cj.kind == ComponentKind::atom) {
                    if (cj.location < loc) below += weights_[j];
                    else if (cj.location == loc) jump += weights_[j];
                } else {
                    below += weights_[j] * component_cdf(cj, loc);
                }
            }
            if (u > below && u <= below + jump) return loc;
        }
    }

    double lo = bracket_lo_;
    double hi = bracket_hi_;
    if (lo == hi) return lo; // all-atom mixture at one point
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (cdf(mid) >= u)
            hi = mid;
        else
            lo = mid;
        if (mid == lo || mid == hi) break; // interval below double resolution
    }
    return 0.5 * (lo + hi);
}

double MixtureDensity::mean() const {
    double acc = 0.0;
    for (std::size_t j = 0; j < components_.size(); ++j)
        acc += weights_[j] * components_[j].location;
    return acc;
}

SampleSet sample_lhs(const MixtureDensity& density, std::size_t n,
                     std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_lhs: n must be >= 1");

    std::mt19937_64 eng(seed);

    // Random stratum permutation (Fisher-Yates), then one uniform draw per
    // stratum. RNG consumption order is fixed: permutation first, draws after.
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    for (std::size_t i = n - 1; i > 0; --i) {
        const std::size_t j = static_cast<std::size_t>(uniform01(eng) * static_cast<double>(i + 1));
        std::swap(perm[i], perm[std::min(j, i)]);
    }

    SampleSet out;
    out.seed = seed;
    out.values.resize(n);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = (static_cast<double>(perm[i]) + uniform01(eng)) * inv_n;
        out.values[i] = density.quantile(u);
    }
    return out;
}

MixtureDensity affine_combine(const std::vector<MixtureDensity>& densities,
                              std::span<const double> coeffs, double offset) {
    if (densities.empty())
        throw std::invalid_argument("affine_combine: needs at least one density");
    if (densities.size() != coeffs.size())
        throw std::invalid_argument("affine_combine: coeffs/densities size mismatch");
    for (const auto& d : densities)
        if (d.has_uniform())
            throw UnsupportedComponent("affine_combine: uniform components unsupported");

    std::size_t total = 1;
    for (const auto& d : densities) total *= d.component_count();

    std::vector<MixtureComponent> components;
    std::vector<double> weights;
    components.reserve(total);
    weights.reserve(total);

    // Odometer over the Cartesian product, last input fastest.
    std::vector<std::size_t> idx(densities.size(), 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
        double mean = offset;
        double var = 0.0;
        double w = 1.0;
        for (std::size_t k = 0; k < densities.size(); ++k) {
            const auto& c = densities[k].components()[idx[k]];
            mean += coeffs[k] * c.location;
            var += coeffs[k] * coeffs[k] * c.scale * c.scale;
            w *= densities[k].weights()[idx[k]];
        }
        if (var > 0.0)
            components.push_back(MixtureComponent::gaussian(mean, std::sqrt(var)));
        else
            components.push_back(MixtureComponent::atom(mean));
        weights.push_back(w);

        for (std::size_t k = densities.size(); k-- > 0;) {
            if (++idx[k] < densities[k].component_count()) break;
            idx[k] = 0;
        }
    }

    // Re-normalize: each input's weights sum to 1, so the products do too up
    // to rounding; keep the invariant tight.
    double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
    for (double& w : weights) w /= sum;
    return MixtureDensity(std::move(components), std::move(weights));
}

std::vector<double> mode_list(const MixtureDensity& density) {
    std::vector<double> modes;
    modes.reserve(density.component_count());
    for (const auto& c : density.components()) modes.push_back(c.location);
    return modes;
}

} // namespace randeq
