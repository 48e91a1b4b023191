#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace randeq {

/// Unsigned arbitrary-precision integer, base 1e9 limbs. Only the operations
/// the counting formulas need: multiply by a machine word, add, compare,
/// decimal and scientific rendering. Counts like 6^120 overflow any word
/// type, and the counts must stay exact.
class BigUint {
public:
    BigUint() : limbs_{0} {}
    BigUint(std::uint64_t v); // NOLINT(google-explicit-constructor)

    BigUint& mul(std::uint64_t factor);
    BigUint& add(const BigUint& other);

    static BigUint pow(std::uint64_t base, unsigned exponent);

    bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }
    bool operator==(const BigUint& other) const { return limbs_ == other.limbs_; }
    bool operator<(const BigUint& other) const;

    /// Exact decimal digits.
    std::string to_string() const;

    /// "2.3847e93"-style approximation with the given significant digits.
    std::string to_scientific(int digits = 5) const;

    /// Rounds to double; inf when out of range.
    double to_double() const;

    std::size_t digit_count() const;

private:
    // Little-endian limbs, each < 1e9; no leading zero limb except for 0.
    std::vector<std::uint32_t> limbs_;
    void trim();
};

/// #P * #Q: product over per-slot component counts times product over
/// per-equation right-hand-side counts. Either list may be empty, which
/// exposes the single-sided groupings (e.g. counting A-mode combinations
/// only).
BigUint count_systems(std::span<const std::uint64_t> l_a,
                      std::span<const std::uint64_t> l_b);

struct PartitionedCount {
    BigUint systems;            // product over equations of (prod_i L_A,r,i) * L_B,r
    BigUint distinct_equations; // sum over equations of the same per-equation count
};

/// Counts for a partitioned system: l_a_per_eq[r] lists the component counts
/// of the slots owned by equation r, l_b[r] the right-hand-side count.
PartitionedCount count_partitioned(
    const std::vector<std::vector<std::uint64_t>>& l_a_per_eq,
    std::span<const std::uint64_t> l_b);

/// Relative evaluation-cost overhead of using L mixture components instead of
/// the optimum L=3, from the L/ln(L) model: (L/ln L)/(3/ln 3) - 1.
double cost_overhead(std::uint64_t l);

} // namespace randeq
