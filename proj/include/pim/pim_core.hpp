#pragma once

#include <span>
#include <vector>

#include "pim/types.hpp"

namespace pim {

// A fitted probabilistic index map: the shared location-wise prior over
// palette indices plus one palette per training signal.
struct PimModel {
    IndexPrior prior;
    int palette_size = 0;
    std::vector<Palette> palettes;
    double final_free_energy = kNaN;
    std::vector<double> free_energy_trace;
};

// log N(x; mean, diag(var)) summed over dimensions.
double log_entry_likelihood(std::span<const double> x, const PaletteEntry& entry);

// Per-entry log-density stack for one grid: layer s holds log N(x_ij; entry s)
// at every location. Shared by the E step and the transform scorer.
std::vector<double> log_density_stack(const SignalGrid& grid, const Palette& palette);

// Posterior over indices per location: q(s_ij) ∝ p_ij(s) N(x_ij; entry s),
// normalized in the log domain with max subtraction.
Responsibilities e_step(const SignalGrid& grid, const Palette& palette, const IndexPrior& prior);

// Location-wise average of responsibilities across signals, floored and
// renormalized.
IndexPrior m_step_prior(std::span<const Responsibilities> resps, double prior_floor = 1e-6);

// Responsibility-weighted mean and diagonal scatter per entry. Entries whose
// total mass falls below 1e-6·I·J are reseeded at the worst-fit measurement.
Palette m_step_palette(const SignalGrid& grid, const Responsibilities& resps, int palette_size,
                       double variance_floor = 1e-4);

// Variational free energy of one signal: entropy minus prior and likelihood
// cross terms, with 0·log 0 = 0.
double signal_free_energy(const SignalGrid& grid, const Palette& palette, const IndexPrior& prior,
                          const Responsibilities& resps);

double free_energy(std::span<const SignalGrid> grids, std::span<const Palette> palettes,
                   const IndexPrior& prior, std::span<const Responsibilities> resps);

// -Σ_ij log Σ_s p_ij(s) N(x_ij; entry s), log-sum-exp stabilized. After an
// exact E step this equals the free energy (the bound is tight).
double exact_negative_log_likelihood(const SignalGrid& grid, const Palette& palette,
                                     const IndexPrior& prior);

// One-hot prior at each location's argmax (ties to the lowest index), floored
// and renormalized.
IndexPrior harden_prior(const IndexPrior& prior, double prior_floor = 1e-6);

// Initial prior from k-means over per-location cross-signal measurement
// profiles. Locations that co-vary across the collection land in the same
// cluster, which pins one consistent entry labeling for all signals.
IndexPrior init_prior_from_profiles(std::span<const SignalGrid> grids, int palette_size,
                                    std::uint64_t seed, double prior_floor);

// Full EM loop. The free energy is evaluated after every E step; the trace is
// non-increasing up to flooring slack. An explicit initial prior overrides the
// profile-based initialization.
PimModel fit_pim(std::span<const SignalGrid> grids, int palette_size, const EmConfig& config,
                 const IndexPrior* initial_prior = nullptr);

// Argmax readout per location, ties to the lowest index.
std::vector<int> argmax_map(const ProbMap& map);

}  // namespace pim
