#pragma once

#include <cstddef>
#include <vector>

#include "randeq/errors.hpp"

namespace randeq {

/// Rectangular evaluation grid, 1 to 3 dimensions, points at cell centers.
/// Linear indexing runs fastest over dimension 0.
struct GridSpec {
    std::vector<double> lo;
    std::vector<double> hi;
    std::vector<int> cells;

    int dim() const { return static_cast<int>(cells.size()); }
    std::size_t total_cells() const;
    double cell_width(int d) const {
        return (hi[static_cast<std::size_t>(d)] - lo[static_cast<std::size_t>(d)]) /
               cells[static_cast<std::size_t>(d)];
    }
    double cell_volume() const;
    /// Center coordinate of cell index i along dimension d.
    double center(int d, int i) const {
        return lo[static_cast<std::size_t>(d)] + (i + 0.5) * cell_width(d);
    }
    /// Multi-index of a linear cell index.
    void unflatten(std::size_t linear, int* idx) const;
    std::size_t flatten(const int* idx) const;
    /// Cell multi-index containing point p (clamped to the grid).
    void locate(const double* p, int* idx) const;
    bool contains(const double* p) const;

    void validate() const;

    bool operator==(const GridSpec&) const = default;
};

enum class MapKind { likelihood, posterior };

/// Values of the likelihood or posterior on a grid. Posterior maps are
/// normalized so that sum(values) * cell_volume == 1; likelihood maps carry
/// raw estimator values, meaningful only for relative comparison.
struct IntensityMap {
    GridSpec grid;
    std::vector<double> values;
    MapKind kind = MapKind::likelihood;
    bool normalized = false;

    double max_value() const;
};

} // namespace randeq
