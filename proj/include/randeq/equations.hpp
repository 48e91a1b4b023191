#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "randeq/errors.hpp"
#include "randeq/mixture.hpp"

namespace randeq {

enum class Family {
    linear,           // s_r . x, one block of size n per equation
    conic,            // s1 x1^2 + s2 x1 x2 + s3 x2^2 + s4 x1 + s5 x2
    portfolio_gradient, // two gradient components of the mean-variance objective
    control_residual, // discrete-time control update residual
    char_poly,        // characteristic polynomial of a symmetric 3x3 matrix
    custom,
};

const char* family_name(Family family);
Family family_from_name(const std::string& name);

/// Constants of the built-in families; unused entries stay at defaults.
struct FamilyParams {
    double gamma = 0.0;  // control: action coupling
    double alpha = 0.0;  // control: state decay
    double beta = 0.0;   // control: state cross-coupling
    double lambda = 0.0; // portfolio: risk adjustment factor
    std::array<double, 3> mu{0.0, 0.0, 0.0}; // portfolio: expected returns
};

/// R scalar equations M_r(x; s_r) over an x in R^n, with the K parameter
/// slots partitioned into per-equation blocks. A single block shared by all
/// equations (partition of size 1 with R > 1) represents the unpartitioned
/// general form; such systems have no partitioned fast path.
struct EquationSystem {
    Family family = Family::linear;
    int equation_count = 1; // R
    int x_dim = 1;          // n
    std::vector<int> partition; // block sizes K_r (or one joint block)
    FamilyParams params;
    // family == custom only: (r, x, s_block) -> M_r
    std::function<double(int, std::span<const double>, std::span<const double>)>
        custom_eval;

    int slot_count() const; // K
    bool is_partitioned() const {
        return static_cast<int>(partition.size()) == equation_count;
    }
    /// Index of the block equation r reads (r itself when partitioned, the
    /// single joint block otherwise).
    int block_of(int r) const { return is_partitioned() ? r : 0; }
    int block_offset(int block) const;
    int block_size(int block) const { return partition[static_cast<std::size_t>(block)]; }

    /// Throws std::invalid_argument when the layout does not match the family.
    void validate() const;
};

EquationSystem make_linear_system(int equations, int x_dim);
EquationSystem make_conic_system(int equations);
EquationSystem make_portfolio_system(const std::array<double, 3>& mu, double lambda);
EquationSystem make_control_system(double gamma, double alpha, double beta);
EquationSystem make_char_poly_system();

/// M_r(x; s_r) for the block slice s_r owned by equation r.
double eval_equation(const EquationSystem& sys, int r, std::span<const double> x,
                     std::span<const double> s_r);

/// One choice of mixture component per slot and per equation right-hand side.
struct ModeAssignment {
    std::vector<std::uint32_t> a_indices; // per slot
    std::vector<std::uint32_t> b_indices; // per equation
};

/// Enumerates every element of P x Q in lexicographic order (the last index
/// varies fastest, B indices after A indices). Construction throws
/// CombinationOverflow when the total count exceeds `cap`.
class ModeEnumerator {
public:
    ModeEnumerator(const EquationSystem& sys,
                   const std::vector<MixtureDensity>& a_densities,
                   const std::vector<MixtureDensity>& b_densities,
                   std::uint64_t cap);

    /// Fills `out` with the next assignment; false once exhausted.
    bool next(ModeAssignment& out);

    std::uint64_t total_count() const { return total_; }

private:
    std::vector<std::uint32_t> a_counts_;
    std::vector<std::uint32_t> b_counts_;
    std::vector<std::uint32_t> a_cur_;
    std::vector<std::uint32_t> b_cur_;
    std::uint64_t total_ = 0;
    std::uint64_t emitted_ = 0;
};

/// Solves the square system a_matrix * x = b by Gaussian elimination with
/// partial pivoting. a_matrix is row-major R x n with R == n. Throws
/// SingularSystem when a pivot falls below 1e-12 relative to the row scale.
std::vector<double> solve_linear_deterministic(std::vector<double> a_matrix,
                                               std::vector<double> b);

} // namespace randeq
