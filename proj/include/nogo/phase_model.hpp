// phase_model.hpp
// Random-walk model of the source phase across a pulse train, Monte Carlo
// estimation of the resulting delta0 distribution against the fixed
// reference train, and the closed-form estimate of the expected distance
// with its minimum over the number of bins.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nogo/random.hpp"

namespace nogo {

// Phase diffusion between neighbouring bins: the phase increment from one
// bin centre to the next is Gaussian with variance 2 * bin_spacing /
// coherence_time (diffusion constant 1/coherence_time).
struct PhaseWalkModel {
    double coherence_time = 0.0;   // seconds; +infinity means no diffusion
    double bin_spacing = 0.0;      // seconds, centre to centre
    double step_variance = 0.0;    // rad^2, derived

    PhaseWalkModel(double coherence_time_s, double bin_spacing_s);

    // Model with a directly chosen per-step variance (rad^2).
    static PhaseWalkModel from_step_variance(double variance);
};

// Empirical delta0 distribution pooled over all prepared bins k.
struct Delta0Distribution {
    int dim = 0;
    std::vector<double> sorted_samples;    // ascending, values in [0, 1]

    // Provenance, carried into the on-disk header.
    double mean_photons = 0.0;
    double step_variance = 0.0;
    std::uint64_t seed = 0;

    std::size_t sample_count() const { return sorted_samples.size(); }
    double mean() const;
    void validate() const;                 // sortedness and range
};

// One phase walk over d bins: phases[j] = sum of the first j+1 increments,
// so the walk starts at zero just before the first bin and the last phase
// has variance d * step_variance.
std::vector<double> sample_phase_walk(const PhaseWalkModel& model, int d,
                                      RandomSource& rng);

// For each prepared bin k = 1..d, draw `samples_per_k` phase walks, build
// the phased missing-bin train, and record its delta0 to the phase-free
// reference train; samples are pooled over k and sorted. With zero step
// variance every sample equals delta0_closed_form(d, mean_photons).
Delta0Distribution delta0_distribution(const PhaseWalkModel& model, int d,
                                       double mean_photons, int samples_per_k,
                                       const RandomSource& rng);

// Interpolated order statistic (type-7 convention), q in (0, 1].
double quantile_delta0(const Delta0Distribution& dist, double q);
double empirical_quantile(const std::vector<double>& sorted_samples, double q);

// Closed-form estimate of the expected delta0 under phase noise; valid in
// the small-noise regime d * step_variance < 1, flagged otherwise.
struct ExpectedDelta {
    double value = 0.0;
    bool within_validity = true;
};

ExpectedDelta analytic_expected_delta(int d, double mean_photons,
                                      double step_variance);

// Single-photon version of the same estimate:
// 1 - sqrt((d-1)/d) + d * step_variance / 8.
double analytic_expected_delta_single_photon(int d, double step_variance);

// Exhaustive integer scan of analytic_expected_delta over [d_min, d_max];
// ties break toward smaller d. Returns (d_star, value at d_star).
std::pair<int, double> find_min_expected_delta(double mean_photons,
                                               double step_variance,
                                               int d_min, int d_max);

} // namespace nogo
