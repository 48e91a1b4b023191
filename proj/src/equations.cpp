#include "randeq/equations.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace randeq {

const char* family_name(Family family) {
    switch (family) {
    case Family::linear: return "linear";
    case Family::conic: return "conic";
    case Family::portfolio_gradient: return "portfolio_gradient";
    case Family::control_residual: return "control_residual";
    case Family::char_poly: return "char_poly";
    case Family::custom: return "custom";
    }
    return "unknown";
}

Family family_from_name(const std::string& name) {
    if (name == "linear") return Family::linear;
    if (name == "conic") return Family::conic;
    if (name == "portfolio_gradient") return Family::portfolio_gradient;
    if (name == "control_residual") return Family::control_residual;
    if (name == "char_poly") return Family::char_poly;
    if (name == "custom") return Family::custom;
    throw std::invalid_argument("unknown equation family: " + name);
}

int EquationSystem::slot_count() const {
    return std::accumulate(partition.begin(), partition.end(), 0);
}

int EquationSystem::block_offset(int block) const {
    int off = 0;
    for (int b = 0; b < block; ++b) off += partition[static_cast<std::size_t>(b)];
    return off;
}

void EquationSystem::validate() const {
    if (equation_count < 1 || x_dim < 1)
        throw std::invalid_argument("EquationSystem: R and n must be >= 1");
    if (partition.empty())
        throw std::invalid_argument("EquationSystem: empty partition");
    if (!is_partitioned() && partition.size() != 1)
        throw std::invalid_argument(
            "EquationSystem: partition must have one block per equation or a single joint block");
    for (int k : partition)
        if (k < 1) throw std::invalid_argument("EquationSystem: block sizes must be >= 1");

    const int joint = partition.size() == 1 ? partition[0] : -1;
    switch (family) {
    case Family::linear:
        if (!is_partitioned())
            throw std::invalid_argument("linear family requires one block per equation");
        for (int k : partition)
            if (k != x_dim)
                throw std::invalid_argument("linear family requires K_r == n");
        break;
    case Family::conic:
        if (x_dim != 2)
            throw std::invalid_argument("conic family requires n == 2");
        if (!is_partitioned())
            throw std::invalid_argument("conic family requires one block per equation");
        for (int k : partition)
            if (k != 5) throw std::invalid_argument("conic family requires K_r == 5");
        break;
    case Family::portfolio_gradient:
        if (equation_count != 2 || x_dim != 2 || joint != 3)
            throw std::invalid_argument(
                "portfolio_gradient requires R=2, n=2 and a joint block of 3 asset slots");
        break;
    case Family::control_residual:
        if (equation_count != 2 || x_dim != 2 || joint != 2)
            throw std::invalid_argument(
                "control_residual requires R=2, n=2 and a joint block of 2 state slots");
        break;
    case Family::char_poly:
        if (equation_count != 1 || x_dim != 1 || partition[0] != 6)
            throw std::invalid_argument(
                "char_poly requires R=1, n=1 and a block of 6 matrix entries");
        break;
    case Family::custom:
        if (!custom_eval)
            throw std::invalid_argument("custom family requires custom_eval");
        break;
    }
}

EquationSystem make_linear_system(int equations, int x_dim) {
    EquationSystem sys;
    sys.family = Family::linear;
    sys.equation_count = equations;
    sys.x_dim = x_dim;
    sys.partition.assign(static_cast<std::size_t>(equations), x_dim);
    sys.validate();
    return sys;
}

EquationSystem make_conic_system(int equations) {
    EquationSystem sys;
    sys.family = Family::conic;
    sys.equation_count = equations;
    sys.x_dim = 2;
    sys.partition.assign(static_cast<std::size_t>(equations), 5);
    sys.validate();
    return sys;
}

EquationSystem make_portfolio_system(const std::array<double, 3>& mu, double lambda) {
    EquationSystem sys;
    sys.family = Family::portfolio_gradient;
    sys.equation_count = 2;
    sys.x_dim = 2;
    sys.partition = {3};
    sys.params.mu = mu;
    sys.params.lambda = lambda;
    sys.validate();
    return sys;
}

EquationSystem make_control_system(double gamma, double alpha, double beta) {
    EquationSystem sys;
    sys.family = Family::control_residual;
    sys.equation_count = 2;
    sys.x_dim = 2;
    sys.partition = {2};
    sys.params.gamma = gamma;
    sys.params.alpha = alpha;
    sys.params.beta = beta;
    sys.validate();
    return sys;
}

EquationSystem make_char_poly_system() {
    EquationSystem sys;
    sys.family = Family::char_poly;
    sys.equation_count = 1;
    sys.x_dim = 1;
    sys.partition = {6};
    sys.validate();
    return sys;
}

double eval_equation(const EquationSystem& sys, int r, std::span<const double> x,
                     std::span<const double> s_r) {
    if (static_cast<int>(x.size()) != sys.x_dim)
        throw DimensionMismatch("eval_equation: |x| != n");
    if (static_cast<int>(s_r.size()) != sys.block_size(sys.block_of(r)))
        throw DimensionMismatch("eval_equation: |s_r| != K_r");

    switch (sys.family) {
    case Family::linear: {
        double acc = 0.0;
        for (std::size_t i = 0; i < s_r.size(); ++i) acc += s_r[i] * x[i];
        return acc;
    }
    case Family::conic:
        return s_r[0] * x[0] * x[0] + s_r[1] * x[0] * x[1] + s_r[2] * x[1] * x[1] +
               s_r[3] * x[0] + s_r[4] * x[1];
    case Family::portfolio_gradient: {
        // Gradient of x^T A' - (lambda/2) (c^T x)^2 in the two free weights,
        // with x3 = 1 - x1 - x2 eliminated and c the centered return spread.
        const auto& mu = sys.params.mu;
        const double lam = sys.params.lambda;
        const double c1 = (s_r[0] - mu[0]) - (s_r[2] - mu[2]);
        const double c2 = (s_r[1] - mu[1]) - (s_r[2] - mu[2]);
        const double q = c1 * x[0] + c2 * x[1];
        if (r == 0)
            return (s_r[0] - s_r[2]) - lam * (s_r[2] - mu[2]) * c1 - lam * c1 * q;
        return (s_r[1] - s_r[2]) - lam * (s_r[2] - mu[2]) * c2 - lam * c2 * q;
    }
    case Family::control_residual: {
        const double g = sys.params.gamma;
        const double a = sys.params.alpha;
        const double b = sys.params.beta;
        if (r == 0) return x[0] + g * x[1] + (1.0 - a) * s_r[0] + b * s_r[1];
        return g * x[0] + x[1] - b * s_r[0] + (1.0 - a) * s_r[1];
    }
    case Family::char_poly: {
        // s = (A11, A12, A13, A22, A23, A33), x scalar.
        const double a11 = s_r[0], a12 = s_r[1], a13 = s_r[2];
        const double a22 = s_r[3], a23 = s_r[4], a33 = s_r[5];
        const double t = x[0];
        const double trace = a11 + a22 + a33;
        const double minor_sum =
            a11 * a22 + a11 * a33 + a22 * a33 - a12 * a12 - a13 * a13 - a23 * a23;
        const double det = a11 * a22 * a33 + 2.0 * a12 * a23 * a13 - a13 * a13 * a22 -
                           a11 * a23 * a23 - a12 * a12 * a33;
        return -t * t * t + trace * t * t - minor_sum * t + det;
    }
    case Family::custom:
        return sys.custom_eval(r, x, s_r);
    }
    throw std::logic_error("eval_equation: unhandled family");
}

ModeEnumerator::ModeEnumerator(const EquationSystem& sys,
                               const std::vector<MixtureDensity>& a_densities,
                               const std::vector<MixtureDensity>& b_densities,
                               std::uint64_t cap) {
    if (static_cast<int>(a_densities.size()) != sys.slot_count())
        throw DimensionMismatch("enumerate_modes: one density per slot required");
    if (static_cast<int>(b_densities.size()) != sys.equation_count)
        throw DimensionMismatch("enumerate_modes: one density per equation required");

    const double cap_d = static_cast<double>(cap);
    double total_d = 1.0;
    for (const auto& d : a_densities) {
        a_counts_.push_back(static_cast<std::uint32_t>(d.component_count()));
        total_d *= static_cast<double>(d.component_count());
    }
    for (const auto& d : b_densities) {
        b_counts_.push_back(static_cast<std::uint32_t>(d.component_count()));
        total_d *= static_cast<double>(d.component_count());
    }
    if (total_d > cap_d)
        throw CombinationOverflow("enumerate_modes: combination count exceeds cap; use counting");
    total_ = static_cast<std::uint64_t>(total_d);
    a_cur_.assign(a_counts_.size(), 0);
    b_cur_.assign(b_counts_.size(), 0);
}

bool ModeEnumerator::next(ModeAssignment& out) {
    if (emitted_ >= total_) return false;
    out.a_indices = a_cur_;
    out.b_indices = b_cur_;
    ++emitted_;
    // Odometer increment, b indices fastest, last slot before first.
    for (std::size_t k = b_cur_.size(); k-- > 0;) {
        if (++b_cur_[k] < b_counts_[k]) return true;
        b_cur_[k] = 0;
    }
    for (std::size_t k = a_cur_.size(); k-- > 0;) {
        if (++a_cur_[k] < a_counts_[k]) return true;
        a_cur_[k] = 0;
    }
    return true; // wrapped past the last assignment; emitted_ guards the end
}

std::vector<double> solve_linear_deterministic(std::vector<double> a_matrix,
                                               std::vector<double> b) {
    const std::size_t n = b.size();
    if (a_matrix.size() != n * n)
        throw DimensionMismatch("solve_linear_deterministic: matrix must be n x n");

    double scale = 0.0;
    for (double v : a_matrix) scale = std::max(scale, std::abs(v));
    const double pivot_floor = 1e-12 * std::max(scale, 1.0);

    std::vector<std::size_t> row(n);
    std::iota(row.begin(), row.end(), 0u);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = col;
        double best_abs = std::abs(a_matrix[row[col] * n + col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double v = std::abs(a_matrix[row[r] * n + col]);
            if (v > best_abs) {
                best_abs = v;
                best = r;
            }
        }
        if (best_abs < pivot_floor)
            throw SingularSystem("solve_linear_deterministic: pivot below tolerance");
        std::swap(row[col], row[best]);

        const double pivot = a_matrix[row[col] * n + col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = a_matrix[row[r] * n + col] / pivot;
            if (factor == 0.0) continue;
            for (std::size_t c = col; c < n; ++c)
                a_matrix[row[r] * n + c] -= factor * a_matrix[row[col] * n + c];
            b[row[r]] -= factor * b[row[col]];
        }
    }

    std::vector<double> x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double acc = b[row[i]];
        for (std::size_t c = i + 1; c < n; ++c) acc -= a_matrix[row[i] * n + c] * x[c];
        x[i] = acc / a_matrix[row[i] * n + i];
    }
    return x;
}

} // namespace randeq
