#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pim/pim_core.hpp"
#include "pim/types.hpp"

namespace pim {

// How the per-frame energy map becomes a foreground mask.
struct ThresholdPolicy {
    enum class Kind { RobustMad, Fixed };
    Kind kind = Kind::RobustMad;
    double fixed_value = 0.0;

    static ThresholdPolicy robust_mad() { return {}; }
    static ThresholdPolicy fixed(double v) { return {Kind::Fixed, v}; }
    // Accepts "mad" or "fixed:<value>".
    static ThresholdPolicy parse(const std::string& text);

    // median + 3 robust sigmas (MAD scaled by 1.4826), or the fixed value.
    double threshold_for(std::span<const double> energies) const;
};

struct TestPaletteFit {
    Palette palette;
    Responsibilities resps;
    std::vector<double> free_energy_trace;
};

// Re-infers only the palette of a test frame against a frozen background
// prior. The palette starts from prior-weighted moments, which ties entry
// labels to the prior's semantics, then alternates E and palette-M steps.
TestPaletteFit infer_test_palette(const SignalGrid& grid, const IndexPrior& prior, int palette_size,
                                  const EmConfig& config);

// Per-location free-energy terms; their sum equals the frame free energy.
std::vector<double> pixelwise_free_energy(const SignalGrid& grid, const Palette& palette,
                                          const IndexPrior& prior, const Responsibilities& resps);

// Responsibility-weighted sum of palette means per location.
SignalGrid expected_background(const Responsibilities& resps, const Palette& palette);

struct ForegroundResult {
    std::vector<double> energy_map;   // I*J
    std::vector<std::uint8_t> mask;   // I*J, 0 or 1
    SignalGrid expected_background;
    Palette inferred_palette;
    Responsibilities responsibilities;
    double threshold = 0.0;
    double free_energy = kNaN;
};

// Full single-frame pipeline: palette re-inference, pixel-wise energy,
// expected background, thresholding.
ForegroundResult detect(const SignalGrid& grid, const IndexPrior& trained_prior, int palette_size,
                        const ThresholdPolicy& policy, const EmConfig& config);

}  // namespace pim
