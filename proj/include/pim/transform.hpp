#pragma once

#include <span>
#include <vector>

#include "pim/types.hpp"

namespace pim {

// Cyclic 2-D translation: content moves down by dy rows and right by dx
// columns, wrapping at the borders.
struct Transform {
    int dy = 0;
    int dx = 0;

    Transform normalized(int height, int width) const;
    Transform inverse(int height, int width) const;
    bool operator==(const Transform&) const = default;
};

// Discrete set of candidate transforms with a prior over them. Always
// contains the identity.
struct TransformSet {
    std::vector<Transform> transforms;
    std::vector<double> prior;

    // Centered rectangle dy ∈ [-dy_max, dy_max], dx ∈ [-dx_max, dx_max],
    // normalized to non-negative representatives, deduplicated, uniform prior.
    static TransformSet shift_rectangle(int dy_max, int dx_max, int height, int width);

    static TransformSet identity_only();

    std::size_t size() const { return transforms.size(); }
    void validate() const;
    // Index of a transform after normalization; -1 when absent.
    int find(const Transform& t, int height, int width) const;
};

// out(i,j,·) = stat((i-dy) mod I, (j-dx) mod J, ·). Mass per layer is
// preserved exactly.
EntryStatImage apply_transform(const EntryStatImage& stat, const Transform& t);

// Expected transformed log-likelihood per candidate transform: each shifted
// stat layer correlated against the per-entry log-density image, cost linear
// in the palette size.
std::vector<double> transform_scores(const SignalGrid& grid, const Palette& palette,
                                     const EntryStatImage& stat, const TransformSet& tset);

// Same, reusing a precomputed log-density stack (I*J*S).
std::vector<double> transform_scores_from_stack(std::span<const double> log_density,
                                                const EntryStatImage& stat,
                                                const TransformSet& tset);

}  // namespace pim
