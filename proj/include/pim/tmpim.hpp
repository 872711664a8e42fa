#pragma once

#include <span>
#include <vector>

#include "pim/pim_core.hpp"
#include "pim/transform.hpp"
#include "pim/types.hpp"

namespace pim {

// Transformed mixture of PIMs: class prior, per-class index priors, and a
// shared transform set.
struct TmpimModel {
    int num_classes = 0;
    std::vector<double> class_prior;
    std::vector<IndexPrior> class_pims;
    TransformSet tset;
    int palette_size = 0;

    void validate() const;
};

// Factorized posterior q(c) q(S|c) q(T|c) for one signal. q_indices lives in
// the canonical (class-map) frame; transforms map it into the observed frame.
struct TmpimPosterior {
    std::vector<double> q_class;                   // C
    std::vector<std::vector<double>> q_transform;  // C × |T|
    std::vector<Responsibilities> q_indices;       // C canonical-frame maps
    double free_energy = kNaN;
};

// Coordinate ascent on the factorized posterior: q(S|c) from the class PIM
// and the expected back-transformed likelihood, q(T|c) from transform scores,
// q(c) from the per-class free energies. Sweeps stop at inner_tol or
// inner_max_iters. A warm start continues from a previous posterior.
TmpimPosterior tmpim_e_step(const SignalGrid& grid, const Palette& palette, const TmpimModel& model,
                            const EmConfig& config, const TmpimPosterior* warm_start = nullptr);

// Observed-frame index responsibilities: q(S|c) pushed through q(T|c) and
// mixed over q(c). This is the weight map the palette M step consumes.
Responsibilities transform_aligned_responsibilities(const TmpimPosterior& post,
                                                    const TransformSet& tset);

struct TmpimFit {
    TmpimModel model;
    std::vector<Palette> palettes;  // one per signal
    std::vector<TmpimPosterior> posteriors;
    std::vector<double> free_energy_trace;
    double final_free_energy = kNaN;
};

// Outer EM: per-signal posteriors (warm started), then palette and class-PIM
// re-estimation. Classes are initialized as jittered copies of a one-class
// PIM fit; with a single class no jitter is applied, so the run continues the
// plain PIM solution.
TmpimFit fit_tmpim(std::span<const SignalGrid> grids, int num_classes, int palette_size,
                   const TransformSet& tset, const EmConfig& config);

// argmax of q(c) per signal, ties to the lowest index.
std::vector<int> cluster_assignments(std::span<const TmpimPosterior> posteriors);

}  // namespace pim
