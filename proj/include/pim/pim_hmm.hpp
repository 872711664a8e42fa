#pragma once

#include <span>
#include <vector>

#include "pim/pim_core.hpp"
#include "pim/types.hpp"

namespace pim {

enum class HmmTopology { LeftToRight, Ergodic };

// HMM whose states emit palette indices: p(s_ij | c_j) is a state- and
// band-conditioned categorical, while the Gaussian palettes stay local to
// each utterance and band.
struct PimHmm {
    int num_states = 0;
    int palette_size = 0;
    int bands = 0;
    std::vector<double> initial;       // K
    std::vector<double> transitions;   // K*K row-major
    std::vector<double> index_priors;  // bands*K*S

    double& prior_at(int band, int state, int s) {
        return index_priors[(static_cast<std::size_t>(band) * num_states + state) * palette_size + s];
    }
    double prior_at(int band, int state, int s) const {
        return index_priors[(static_cast<std::size_t>(band) * num_states + state) * palette_size + s];
    }
    std::span<double> prior_dist(int band, int state) {
        return {index_priors.data() + (static_cast<std::size_t>(band) * num_states + state) * palette_size,
                static_cast<std::size_t>(palette_size)};
    }
    std::span<const double> prior_dist(int band, int state) const {
        return {index_priors.data() + (static_cast<std::size_t>(band) * num_states + state) * palette_size,
                static_cast<std::size_t>(palette_size)};
    }
    double trans_at(int from, int to) const { return transitions[static_cast<std::size_t>(from) * num_states + to]; }

    void validate() const;
};

// One Gaussian palette per frequency band (entries are 1-D).
using BandPalettes = std::vector<Palette>;

struct FbResult {
    std::vector<double> gamma;  // J*K state posteriors
    std::vector<double> xi;     // (J-1)*K*K pairwise posteriors
    double log_norm = 0.0;
};

// Scaled forward-backward over log emissions.
FbResult forward_backward(std::span<const double> log_emission, std::span<const double> initial,
                          std::span<const double> transitions, int frames, int states);

struct HmmPosterior {
    FbResult fb;
    Responsibilities q_indices;  // bands × frames over S
    double free_energy = kNaN;
};

// Structured variational E step: index posteriors against the state-mixed
// log-prior, then forward-backward on the expected index log-prior emissions.
// Sweeps repeat until inner_tol or inner_max_iters; warm start continues from
// a previous posterior.
HmmPosterior hmm_e_step(const Utterance& utt, const PimHmm& model, const BandPalettes& palettes,
                        const EmConfig& config, const HmmPosterior* warm_start = nullptr);

struct PimHmmFit {
    PimHmm model;
    std::vector<BandPalettes> palettes;  // one set per utterance
    std::vector<HmmPosterior> posteriors;
    std::vector<double> free_energy_trace;
    double final_free_energy = kNaN;
};

// Full EM: per-utterance structured E steps, Baum-Welch updates for the chain,
// state/band index-prior averages, and per-utterance band palette re-fits.
// Initialization is a flat start: per-band k-means palettes canonicalized by
// ascending mean (entry = level rank) and uniform time segmentation.
PimHmmFit fit_pim_hmm(std::span<const Utterance> utterances, int num_states, int palette_size,
                      const EmConfig& config, HmmTopology topology = HmmTopology::LeftToRight);

struct FrozenInference {
    BandPalettes palettes;
    HmmPosterior posterior;
    std::vector<double> free_energy_trace;
};

// Palette + index inference with the model parameters frozen; the converged
// free energy is the classification bound.
FrozenInference infer_utterance(const Utterance& utt, const PimHmm& model, const EmConfig& config);

struct UtteranceScore {
    int best_model = 0;
    std::vector<double> bounds;  // converged free energy per candidate
};

// Scores the utterance under every candidate and returns the argmin bound,
// ties to the lowest index.
UtteranceScore classify_utterance(const Utterance& utt, std::span<const PimHmm> models,
                                  const EmConfig& config);

}  // namespace pim
