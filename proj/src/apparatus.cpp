#include "nogo/apparatus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nogo {

void ApparatusConfig::validate() const {
    if (dim < 2) throw std::domain_error("ApparatusConfig: dim must be at least 2");
    if (!(mean_photons > 0.0))
        throw std::domain_error("ApparatusConfig: mean_photons must be positive");
    if (!(efficiency >= 0.0 && efficiency <= 1.0))
        throw std::domain_error("ApparatusConfig: efficiency must lie in [0, 1]");
    if (dark_rate < 0.0)
        throw std::domain_error("ApparatusConfig: dark_rate must be nonnegative");
    if (!(keep_window > 0.0 && keep_window <= bin_period))
        throw std::domain_error("ApparatusConfig: need 0 < keep_window <= bin_period");
    if (!(extinction >= 0.0 && extinction < 1.0))
        throw std::domain_error("ApparatusConfig: extinction must lie in [0, 1)");
}

void ClickCounts::validate() const {
    if (static_cast<int>(counts.size()) != dim ||
        static_cast<int>(no_clicks.size()) != dim ||
        static_cast<int>(trials_per_k.size()) != dim)
        throw std::domain_error("ClickCounts: shape does not match dim");
    for (int k = 0; k < dim; ++k) {
        if (static_cast<int>(counts[k].size()) != dim)
            throw std::domain_error("ClickCounts: row length does not match dim");
        std::int64_t total = no_clicks[k];
        for (std::int64_t c : counts[k]) {
            if (c < 0) throw std::domain_error("ClickCounts: negative count");
            total += c;
        }
        if (total != trials_per_k[k])
            throw std::domain_error("ClickCounts: clicks plus no-clicks do not equal trials for k=" +
                                    std::to_string(k + 1));
    }
}

std::vector<double> effective_intensities(const ApparatusConfig& config, int k) {
    config.validate();
    if (k < 1 || k > config.dim)
        throw std::domain_error("effective_intensities: bin index outside 1..d");
    const double open = config.mean_photons / (config.dim - 1);
    std::vector<double> intensities(config.dim, open);
    intensities[k - 1] = config.extinction * open;
    return intensities;
}

std::vector<double> outcome_distribution(const ApparatusConfig& config, int k) {
    const auto intensities = effective_intensities(config, k);
    const double dark_mean = config.dark_rate * config.keep_window;

    std::vector<double> dist(config.dim + 1, 0.0);
    double survival = 1.0;   // probability that no earlier bin fired
    for (int j = 0; j < config.dim; ++j) {
        const double mean = config.efficiency * intensities[j] + dark_mean;
        const double fire = -std::expm1(-mean);
        dist[j] = survival * fire;
        survival *= 1.0 - fire;
    }
    dist[config.dim] = survival;
    return dist;
}

double total_click_probability(const ApparatusConfig& config, int k) {
    return 1.0 - outcome_distribution(config, k).back();
}

ClickRecord simulate_trial(const ApparatusConfig& config, int k, RandomSource& rng,
                           std::int64_t trial_id) {
    const auto intensities = effective_intensities(config, k);
    const double p_dark = -std::expm1(-config.dark_rate * config.keep_window);

    ClickRecord record;
    record.trial_id = trial_id;
    record.prepared_k = k;
    for (int j = 0; j < config.dim; ++j) {
        const double p_photon = -std::expm1(-config.efficiency * intensities[j]);
        bool fired = rng.uniform() < p_photon;       // any surviving photon in bin j
        if (!fired) fired = rng.uniform() < p_dark;  // dark count inside keep window
        if (fired) {
            record.outcome = j + 1;
            break;
        }
    }
    return record;
}

ClickCounts run_experiment(const ApparatusConfig& config, std::int64_t trials_per_k,
                           const RandomSource& rng) {
    config.validate();
    if (trials_per_k < 1)
        throw std::domain_error("run_experiment: trials_per_k must be at least 1");

    const int d = config.dim;
    ClickCounts result;
    result.dim = d;
    result.counts.assign(d, std::vector<std::int64_t>(d, 0));
    result.no_clicks.assign(d, 0);
    result.trials_per_k.assign(d, trials_per_k);

    std::vector<double> cumulative(d);
    for (int k = 1; k <= d; ++k) {
        const auto dist = outcome_distribution(config, k);
        double acc = 0.0;
        for (int j = 0; j < d; ++j) {
            acc += dist[j];
            cumulative[j] = acc;
        }
        const double p_click = acc;

        RandomSource stream = rng.derive(static_cast<std::uint64_t>(k));
        auto& row = result.counts[k - 1];
        std::int64_t no_click = 0;
        for (std::int64_t t = 0; t < trials_per_k; ++t) {
            const double u = stream.uniform();
            if (u >= p_click) {
                ++no_click;
                continue;
            }
            const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
            ++row[static_cast<std::size_t>(it - cumulative.begin())];
        }
        result.no_clicks[k - 1] = no_click;
    }
    result.validate();
    return result;
}

double single_photon_click_fraction(double mean_photons) {
    if (!(mean_photons > 0.0))
        throw std::domain_error("single_photon_click_fraction: mean photon number must be positive");
    return mean_photons * std::exp(-mean_photons) / -std::expm1(-mean_photons);
}

} // namespace nogo
