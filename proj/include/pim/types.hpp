#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pim {

// ============================================================================
// Errors
// ============================================================================

// Shape or parameter problems (mismatched axes, bad knob values).
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Structurally invalid data (empty dataset, inconsistent grids, non-finite values).
class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Malformed file contents; the message carries the offending location.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Operation invoked on an object that is not in a usable state.
class StateError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// ============================================================================
// Core containers
// ============================================================================

// An I×J grid of D-dimensional measurements: image pixels or spectrogram
// log-energies. Row-major, the measurement vector is contiguous.
struct SignalGrid {
    int height = 0;
    int width = 0;
    int dim = 1;
    std::vector<double> values;

    SignalGrid() = default;
    SignalGrid(int h, int w, int d)
        : height(h), width(w), dim(d), values(static_cast<std::size_t>(h) * w * d, 0.0) {}

    double& at(int i, int j, int d) { return values[(static_cast<std::size_t>(i) * width + j) * dim + d]; }
    double at(int i, int j, int d) const { return values[(static_cast<std::size_t>(i) * width + j) * dim + d]; }

    std::span<double> vec(int i, int j) {
        return {values.data() + (static_cast<std::size_t>(i) * width + j) * dim, static_cast<std::size_t>(dim)};
    }
    std::span<const double> vec(int i, int j) const {
        return {values.data() + (static_cast<std::size_t>(i) * width + j) * dim, static_cast<std::size_t>(dim)};
    }

    int locations() const { return height * width; }
    bool all_finite() const;
};

// Spectrograms reuse the grid type: height = frequency bands, width = frames,
// dim = 1 (log-energy).
using Utterance = SignalGrid;

// One Gaussian measurement model: mean and per-dimension variance.
struct PaletteEntry {
    std::vector<double> mean;
    std::vector<double> var;
};

// A table of S measurement models, local to one signal (or one frequency band
// of one utterance).
using Palette = std::vector<PaletteEntry>;

// Per-location distributions over S palette indices. One type serves three
// roles: the shared index prior p_ij(s), per-signal responsibilities q(s_ij),
// and soft entry-indicator stacks fed to the transform scorer.
struct ProbMap {
    int height = 0;
    int width = 0;
    int entries = 0;
    std::vector<double> probs;

    ProbMap() = default;
    ProbMap(int h, int w, int s)
        : height(h), width(w), entries(s), probs(static_cast<std::size_t>(h) * w * s, 0.0) {}

    static ProbMap uniform(int h, int w, int s);

    double& at(int i, int j, int s) { return probs[(static_cast<std::size_t>(i) * width + j) * entries + s]; }
    double at(int i, int j, int s) const { return probs[(static_cast<std::size_t>(i) * width + j) * entries + s]; }

    std::span<double> dist(int i, int j) {
        return {probs.data() + (static_cast<std::size_t>(i) * width + j) * entries, static_cast<std::size_t>(entries)};
    }
    std::span<const double> dist(int i, int j) const {
        return {probs.data() + (static_cast<std::size_t>(i) * width + j) * entries, static_cast<std::size_t>(entries)};
    }

    int locations() const { return height * width; }

    // Clamps every component from below and renormalizes each location.
    void floor_and_normalize(double floor_value);

    // True when every location's distribution sums to 1 within tol.
    bool normalized(double tol = 1e-9) const;
};

using IndexPrior = ProbMap;
using Responsibilities = ProbMap;
using EntryStatImage = ProbMap;

// ============================================================================
// EM configuration
// ============================================================================

struct EmConfig {
    double tol = 1e-6;            // relative free-energy change that stops EM
    int max_iters = 200;
    int inner_max_iters = 5;      // coordinate-ascent sweeps per E phase
    double inner_tol = 1e-7;
    std::uint64_t seed = 0;
    double variance_floor = 1e-4; // in normalized measurement units
    double prior_floor = 1e-6;
    double trans_floor = 1e-8;    // HMM initial/transition floor

    void validate() const;
};

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace pim
