#include "nogo/phase_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace nogo {

PhaseWalkModel::PhaseWalkModel(double coherence_time_s, double bin_spacing_s)
    : coherence_time(coherence_time_s), bin_spacing(bin_spacing_s) {
    if (!(coherence_time > 0.0))
        throw std::domain_error("PhaseWalkModel: coherence time must be positive");
    if (!(bin_spacing > 0.0))
        throw std::domain_error("PhaseWalkModel: bin spacing must be positive");
    step_variance = 2.0 * bin_spacing / coherence_time;
}

PhaseWalkModel PhaseWalkModel::from_step_variance(double variance) {
    if (variance < 0.0)
        throw std::domain_error("PhaseWalkModel: step variance must be nonnegative");
    if (variance == 0.0)
        return PhaseWalkModel(std::numeric_limits<double>::infinity(), 1.0);
    return PhaseWalkModel(2.0 / variance, 1.0);
}

double Delta0Distribution::mean() const {
    if (sorted_samples.empty())
        throw std::domain_error("Delta0Distribution: empty distribution");
    return std::accumulate(sorted_samples.begin(), sorted_samples.end(), 0.0) /
           static_cast<double>(sorted_samples.size());
}

void Delta0Distribution::validate() const {
    if (!std::is_sorted(sorted_samples.begin(), sorted_samples.end()))
        throw std::domain_error("Delta0Distribution: samples not sorted");
    for (double v : sorted_samples)
        if (!(v >= 0.0 && v <= 1.0))
            throw std::domain_error("Delta0Distribution: sample outside [0, 1]");
}

std::vector<double> sample_phase_walk(const PhaseWalkModel& model, int d,
                                      RandomSource& rng) {
    if (d < 2) throw std::domain_error("sample_phase_walk: dimension must be at least 2");
    const double sigma = std::sqrt(model.step_variance);
    std::vector<double> phases(d);
    double phi = 0.0;
    for (int j = 0; j < d; ++j) {
        phi += rng.gaussian(sigma);
        phases[j] = phi;
    }
    return phases;
}

namespace {

// delta0 of the phased missing-bin train against the phase-free reference,
// from the open-bin phasor sum; algebraically identical to
// delta0(make_coherent_state(d, k, n, phases), make_coherent_state(d, {}, n)).
double delta0_from_phasor_sum(double re, double im, int d, double mean_photons,
                              double expm1_n) {
    const double scale = mean_photons / std::sqrt(double(d) * (d - 1.0));
    const double x = scale * re;    // Re of sum_j conj(a_j) b_j
    const double y = scale * im;    // Im
    const double ex = std::exp(x);
    const double mag = std::sqrt(ex * ex - 2.0 * ex * std::cos(y) + 1.0);
    return 1.0 - mag / expm1_n;
}

} // namespace

Delta0Distribution delta0_distribution(const PhaseWalkModel& model, int d,
                                       double mean_photons, int samples_per_k,
                                       const RandomSource& rng) {
    if (d < 2) throw std::domain_error("delta0_distribution: dimension must be at least 2");
    if (samples_per_k < 1)
        throw std::domain_error("delta0_distribution: need at least one sample per bin");
    if (!(mean_photons > 0.0))
        throw std::domain_error("delta0_distribution: mean photon number must be positive");

    const double sigma = std::sqrt(model.step_variance);
    const double expm1_n = std::expm1(mean_photons);

    Delta0Distribution dist;
    dist.dim = d;
    dist.mean_photons = mean_photons;
    dist.step_variance = model.step_variance;
    dist.seed = rng.seed();
    dist.sorted_samples.reserve(static_cast<std::size_t>(d) * samples_per_k);

    std::vector<double> cos_phi(d), sin_phi(d);
    for (int k = 1; k <= d; ++k) {
        RandomSource stream = rng.derive(static_cast<std::uint64_t>(k));
        for (int s = 0; s < samples_per_k; ++s) {
            double phi = 0.0;
            double re = 0.0, im = 0.0;
            for (int j = 0; j < d; ++j) {
                phi += stream.gaussian(sigma);
                cos_phi[j] = std::cos(phi);
                sin_phi[j] = std::sin(phi);
                re += cos_phi[j];
                im -= sin_phi[j];
            }
            re -= cos_phi[k - 1];
            im += sin_phi[k - 1];
            dist.sorted_samples.push_back(
                delta0_from_phasor_sum(re, im, d, mean_photons, expm1_n));
        }
    }
    std::sort(dist.sorted_samples.begin(), dist.sorted_samples.end());
    return dist;
}

double empirical_quantile(const std::vector<double>& sorted_samples, double q) {
    if (sorted_samples.empty())
        throw std::domain_error("empirical_quantile: empty sample set");
    if (!(q > 0.0 && q <= 1.0))
        throw std::domain_error("empirical_quantile: q must lie in (0, 1]");
    const std::size_t n = sorted_samples.size();
    const double h = (static_cast<double>(n) - 1.0) * q;
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= n) return sorted_samples.back();
    const double frac = h - static_cast<double>(lo);
    return sorted_samples[lo] + frac * (sorted_samples[lo + 1] - sorted_samples[lo]);
}

double quantile_delta0(const Delta0Distribution& dist, double q) {
    return empirical_quantile(dist.sorted_samples, q);
}

ExpectedDelta analytic_expected_delta(int d, double mean_photons,
                                      double step_variance) {
    if (d < 2) throw std::domain_error("analytic_expected_delta: dimension must be at least 2");
    if (!(mean_photons > 0.0))
        throw std::domain_error("analytic_expected_delta: mean photon number must be positive");
    if (step_variance < 0.0)
        throw std::domain_error("analytic_expected_delta: step variance must be nonnegative");

    const double n = mean_photons;
    const double noise = 1.0 - n * d * step_variance / 8.0;
    ExpectedDelta result;
    result.value =
        1.0 - (std::exp(n * std::sqrt((d - 1.0) / d)) * noise - 1.0) / std::expm1(n);
    result.within_validity = d * step_variance < 1.0;
    return result;
}

double analytic_expected_delta_single_photon(int d, double step_variance) {
    if (d < 2)
        throw std::domain_error(
            "analytic_expected_delta_single_photon: dimension must be at least 2");
    return 1.0 - std::sqrt((d - 1.0) / d) + d * step_variance / 8.0;
}

std::pair<int, double> find_min_expected_delta(double mean_photons,
                                               double step_variance,
                                               int d_min, int d_max) {
    if (d_min < 2 || d_max < d_min)
        throw std::domain_error("find_min_expected_delta: empty or invalid range");
    int best_d = d_min;
    double best = analytic_expected_delta(d_min, mean_photons, step_variance).value;
    for (int d = d_min + 1; d <= d_max; ++d) {
        const double v = analytic_expected_delta(d, mean_photons, step_variance).value;
        if (v < best) {
            best = v;
            best_d = d;
        }
    }
    return {best_d, best};
}

} // namespace nogo
