#include "randeq/combinatorics.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace randeq {

namespace {
constexpr std::uint32_t kBase = 1000000000u;
}

BigUint::BigUint(std::uint64_t v) {
    do {
        limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
        v /= kBase;
    } while (v != 0);
}

void BigUint::trim() {
    while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::mul(std::uint64_t factor) {
    if (factor == 0) {
        limbs_.assign(1, 0);
        return *this;
    }
    // Split the factor so every partial product fits in 64 bits.
    if (factor >= kBase) {
        const std::uint64_t high = factor / kBase;
        BigUint shifted = *this;
        shifted.mul(high);
        shifted.limbs_.insert(shifted.limbs_.begin(), 0u);
        mul(factor % kBase);
        add(shifted);
        return *this;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        const std::uint64_t cur = static_cast<std::uint64_t>(limb) * factor + carry;
        limb = static_cast<std::uint32_t>(cur % kBase);
        carry = cur / kBase;
    }
    while (carry != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
        carry /= kBase;
    }
    trim();
    return *this;
}

BigUint& BigUint::add(const BigUint& other) {
    const std::size_t n = std::max(limbs_.size(), other.limbs_.size());
    limbs_.resize(n, 0u);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t cur = carry + limbs_[i];
        if (i < other.limbs_.size()) cur += other.limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur % kBase);
        carry = cur / kBase;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigUint BigUint::pow(std::uint64_t base, unsigned exponent) {
    BigUint out(1);
    for (unsigned i = 0; i < exponent; ++i) out.mul(base);
    return out;
}

bool BigUint::operator<(const BigUint& other) const {
    if (limbs_.size() != other.limbs_.size())
        return limbs_.size() < other.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != other.limbs_[i]) return limbs_[i] < other.limbs_[i];
    }
    return false;
}

std::string BigUint::to_string() const {
    std::string out = std::to_string(limbs_.back());
    char buf[10];
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
        std::snprintf(buf, sizeof buf, "%09u", limbs_[i]);
        out += buf;
    }
    return out;
}

std::size_t BigUint::digit_count() const {
    return to_string().size();
}

std::string BigUint::to_scientific(int digits) const {
    const std::string dec = to_string();
    if (dec == "0") return "0";
    const int exp = static_cast<int>(dec.size()) - 1;
    std::string mant = dec.substr(0, static_cast<std::size_t>(digits) + 1);
    while (mant.size() < static_cast<std::size_t>(digits) + 1) mant += '0';
    // Round the last kept digit.
    std::uint64_t m = std::stoull(mant);
    m = (m + 5) / 10;
    std::string ms = std::to_string(m);
    int e = exp;
    if (ms.size() > static_cast<std::size_t>(digits)) { // rounding carried over
        ms.pop_back();
        ++e;
    }
    std::string out;
    out += ms[0];
    if (ms.size() > 1) {
        out += '.';
        out += ms.substr(1);
    }
    out += 'e';
    out += std::to_string(e);
    return out;
}

double BigUint::to_double() const {
    double acc = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;)
        acc = acc * static_cast<double>(kBase) + static_cast<double>(limbs_[i]);
    return acc;
}

BigUint count_systems(std::span<const std::uint64_t> l_a,
                      std::span<const std::uint64_t> l_b) {
    BigUint out(1);
    for (auto l : l_a) {
        if (l < 1) throw std::invalid_argument("count_systems: counts must be >= 1");
        out.mul(l);
    }
    for (auto l : l_b) {
        if (l < 1) throw std::invalid_argument("count_systems: counts must be >= 1");
        out.mul(l);
    }
    return out;
}

PartitionedCount count_partitioned(
    const std::vector<std::vector<std::uint64_t>>& l_a_per_eq,
    std::span<const std::uint64_t> l_b) {
    if (l_a_per_eq.size() != l_b.size())
        throw std::invalid_argument("count_partitioned: one L_B entry per equation required");
    PartitionedCount out{BigUint(1), BigUint(0)};
    for (std::size_t r = 0; r < l_b.size(); ++r) {
        BigUint eq = count_systems(l_a_per_eq[r], l_b.subspan(r, 1));
        out.distinct_equations.add(eq);
        // systems *= eq; eq fits arbitrary size, so multiply limb-wise via
        // repeated word multiplication of the flattened factors instead.
        for (auto l : l_a_per_eq[r]) out.systems.mul(l);
        out.systems.mul(l_b[r]);
    }
    return out;
}

double cost_overhead(std::uint64_t l) {
    if (l < 2) throw std::invalid_argument("cost_overhead: L must be >= 2");
    const double x = static_cast<double>(l);
    const double ref = 3.0 / std::log(3.0);
    return (x / std::log(x)) / ref - 1.0;
}

} // namespace randeq
