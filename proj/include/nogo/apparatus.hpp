// apparatus.hpp
// Stochastic model of the preparation and detection chain: pulse carving
// with finite extinction, attenuation folded into an overall efficiency,
// and a detector that reports the first bin with a photon or dark count
// inside the keep window, or a no-click.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nogo/random.hpp"

namespace nogo {

struct ApparatusConfig {
    int dim = 0;                       // number of time bins d
    double mean_photons = 0.0;         // per pulse train, after attenuation
    double efficiency = 0.0;           // overall detection efficiency, in [0, 1]
    double dark_rate = 0.0;            // Hz
    double keep_window = 0.0;          // s, accepted interval inside each bin
    double bin_period = 0.0;           // s, bin spacing
    double extinction = 0.0;           // linear power leakage into the blocked bin

    void validate() const;             // throws std::domain_error
};

inline constexpr int kNoClick = 0;     // outcome value in ClickRecord files

struct ClickRecord {
    std::int64_t trial_id = 0;
    int prepared_k = 0;
    std::optional<int> outcome;        // first clicked bin, or nullopt
};

// Click tallies per (prepared bin k, outcome bin j), plus no-click counts.
struct ClickCounts {
    int dim = 0;
    std::vector<std::vector<std::int64_t>> counts;   // [k-1][j-1]
    std::vector<std::int64_t> no_clicks;             // [k-1]
    std::vector<std::int64_t> trials_per_k;          // [k-1]

    void validate() const;             // conservation per preparation
};

// Mean photon number reaching the detector per bin, before efficiency:
// mean_photons/(d-1) in open bins and extinction * mean_photons/(d-1) in the
// blocked bin. Leakage adds on top; no renormalization.
std::vector<double> effective_intensities(const ApparatusConfig& config, int k);

// Exact outcome distribution of one trial: entries 0..d-1 are the
// probabilities that the first click lands in bin 1..d, entry d is the
// no-click probability. Bin j fires when its thinned photon count or its
// dark count within the keep window is nonzero.
std::vector<double> outcome_distribution(const ApparatusConfig& config, int k);

// 1 - P(no click) for one trial.
double total_click_probability(const ApparatusConfig& config, int k);

// One trial, sampled stage by stage per bin (thinning, photon presence,
// dark counts, first-click rule). Reference path; run_experiment uses the
// equivalent precomputed outcome distribution instead.
ClickRecord simulate_trial(const ApparatusConfig& config, int k, RandomSource& rng,
                           std::int64_t trial_id = 0);

// trials_per_k trials for every prepared bin k = 1..d, deterministic for a
// given source (independent substream per k).
ClickCounts run_experiment(const ApparatusConfig& config, std::int64_t trials_per_k,
                           const RandomSource& rng);

// Fraction of click events caused by exactly one photon, for Poissonian
// light and dark counts neglected: n e^{-n} / (1 - e^{-n}).
double single_photon_click_fraction(double mean_photons);

} // namespace nogo
