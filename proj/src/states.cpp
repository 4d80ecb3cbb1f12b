#include "nogo/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nogo {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::domain_error(msg);
}

void check_bin(int d, int k, const char* what) {
    require(d >= 2, std::string(what) + ": dimension must be at least 2");
    require(k >= 1 && k <= d,
            std::string(what) + ": bin index " + std::to_string(k) +
                " outside 1.." + std::to_string(d));
}

double norm_squared(std::span<const Complex> v) {
    double s = 0.0;
    for (const auto& c : v) s += std::norm(c);
    return s;
}

std::complex<double> amplitude_product_sum(const MultimodeCoherentState& a,
                                           const MultimodeCoherentState& b) {
    Complex s = 0.0;
    for (int j = 0; j < a.dim; ++j) s += std::conj(a.amplitudes[j]) * b.amplitudes[j];
    return s;
}

} // namespace

double MultimodeCoherentState::mean_photons() const {
    return norm_squared(amplitudes);
}

SingleExcitationState make_missing_bin_state(int d, int k) {
    check_bin(d, k, "make_missing_bin_state");
    SingleExcitationState s;
    s.dim = d;
    s.coefficients.assign(d, Complex(1.0 / std::sqrt(double(d - 1)), 0.0));
    s.coefficients[k - 1] = 0.0;
    return s;
}

SingleExcitationState make_uniform_state(int d) {
    require(d >= 2, "make_uniform_state: dimension must be at least 2");
    SingleExcitationState s;
    s.dim = d;
    s.coefficients.assign(d, Complex(1.0 / std::sqrt(double(d)), 0.0));
    return s;
}

MultimodeCoherentState make_coherent_state(int d, std::optional<int> k,
                                           double mean_photons,
                                           std::span<const double> phases) {
    require(d >= 2, "make_coherent_state: dimension must be at least 2");
    if (k) check_bin(d, *k, "make_coherent_state");
    require(mean_photons > 0.0, "make_coherent_state: mean photon number must be positive");
    require(phases.empty() || static_cast<int>(phases.size()) == d,
            "make_coherent_state: phase list must have one entry per bin");

    const int open_bins = k ? d - 1 : d;
    const double amp = std::sqrt(mean_photons / open_bins);

    MultimodeCoherentState s;
    s.dim = d;
    s.label = k;
    s.amplitudes.resize(d);
    for (int j = 0; j < d; ++j) {
        if (k && j == *k - 1) {
            s.amplitudes[j] = 0.0;
        } else if (phases.empty()) {
            s.amplitudes[j] = amp;
        } else {
            s.amplitudes[j] = std::polar(amp, phases[j]);
        }
    }
    return s;
}

std::complex<double> overlap(const SingleExcitationState& a,
                             const SingleExcitationState& b) {
    require(a.dim == b.dim, "overlap: dimension mismatch");
    Complex s = 0.0;
    for (int j = 0; j < a.dim; ++j) s += std::conj(a.coefficients[j]) * b.coefficients[j];
    return s;
}

std::complex<double> coherent_overlap(const MultimodeCoherentState& a,
                                      const MultimodeCoherentState& b) {
    require(a.dim == b.dim, "coherent_overlap: dimension mismatch");
    const double na = norm_squared(a.amplitudes);
    const double nb = norm_squared(b.amplitudes);
    return std::exp(-(na + nb) / 2.0 + amplitude_product_sum(a, b));
}

std::complex<double> vacuum_projected_overlap(const MultimodeCoherentState& a,
                                              const MultimodeCoherentState& b) {
    require(a.dim == b.dim, "vacuum_projected_overlap: dimension mismatch");
    const double na = norm_squared(a.amplitudes);
    const double nb = norm_squared(b.amplitudes);
    require(na > 0.0 && nb > 0.0,
            "vacuum_projected_overlap: undefined for vacuum input (no click is ever produced)");
    const Complex num = std::exp(amplitude_product_sum(a, b)) - 1.0;
    const double den = std::sqrt(std::expm1(na) * std::expm1(nb));
    return num / den;
}

double delta(const SingleExcitationState& a, const SingleExcitationState& b) {
    return 1.0 - std::abs(overlap(a, b));
}

double delta(const MultimodeCoherentState& a, const MultimodeCoherentState& b) {
    return 1.0 - std::abs(coherent_overlap(a, b));
}

double delta0(const MultimodeCoherentState& a, const MultimodeCoherentState& b) {
    return 1.0 - std::abs(vacuum_projected_overlap(a, b));
}

double delta0_closed_form(int d, double mean_photons) {
    require(d >= 2, "delta0_closed_form: dimension must be at least 2");
    require(mean_photons > 0.0, "delta0_closed_form: mean photon number must be positive");
    const double n = mean_photons;
    return 1.0 - std::expm1(n * std::sqrt((d - 1.0) / d)) / std::expm1(n);
}

namespace {

// Sector products T[N] = sum over per-mode occupations {m_j} with total N of
// prod_j x_j^{m_j} / m_j!, where x_j = conj(a_j) b_j. Built one mode at a
// time by convolution, so no use of the exponential closed form. The N-photon
// sector of <a|b> is then e^{-(|a|^2+|b|^2)/2} T[N].
std::vector<Complex> sector_products(const MultimodeCoherentState& a,
                                     const MultimodeCoherentState& b,
                                     int max_photons) {
    std::vector<Complex> sectors(max_photons + 1, 0.0);
    sectors[0] = 1.0;

    std::vector<double> inv_factorial(max_photons + 1, 1.0);
    for (int m = 1; m <= max_photons; ++m) inv_factorial[m] = inv_factorial[m - 1] / m;

    std::vector<Complex> next(max_photons + 1);
    std::vector<Complex> powers(max_photons + 1);
    for (int j = 0; j < a.dim; ++j) {
        const Complex x = std::conj(a.amplitudes[j]) * b.amplitudes[j];
        powers[0] = 1.0;
        for (int m = 1; m <= max_photons; ++m) powers[m] = powers[m - 1] * x;
        for (int total = 0; total <= max_photons; ++total) {
            Complex acc = 0.0;
            for (int m = 0; m <= total; ++m)
                acc += sectors[total - m] * powers[m] * inv_factorial[m];
            next[total] = acc;
        }
        sectors.swap(next);
    }
    return sectors;
}

} // namespace

std::complex<double> FockTruncation::overlap(const MultimodeCoherentState& a,
                                             const MultimodeCoherentState& b) const {
    require(a.dim == b.dim, "FockTruncation::overlap: dimension mismatch");
    require(max_photons >= 2, "FockTruncation: max_photons must be at least 2");
    const auto sectors = sector_products(a, b, max_photons);
    Complex total = 0.0;
    for (const auto& s : sectors) total += s;
    const double na = norm_squared(a.amplitudes);
    const double nb = norm_squared(b.amplitudes);
    return std::exp(-(na + nb) / 2.0) * total;
}

std::complex<double>
FockTruncation::vacuum_projected_overlap(const MultimodeCoherentState& a,
                                         const MultimodeCoherentState& b) const {
    require(a.dim == b.dim, "FockTruncation::vacuum_projected_overlap: dimension mismatch");
    require(max_photons >= 2, "FockTruncation: max_photons must be at least 2");
    const double na = norm_squared(a.amplitudes);
    const double nb = norm_squared(b.amplitudes);
    require(na > 0.0 && nb > 0.0,
            "FockTruncation::vacuum_projected_overlap: undefined for vacuum input");

    const auto cross = sector_products(a, b, max_photons);
    const auto aa = sector_products(a, a, max_photons);
    const auto bb = sector_products(b, b, max_photons);

    // Drop the vacuum sector and renormalize each state to the kept sectors.
    Complex num = 0.0;
    double wa = 0.0, wb = 0.0;
    for (int n = 1; n <= max_photons; ++n) {
        num += cross[n];
        wa += aa[n].real();
        wb += bb[n].real();
    }
    return num / std::sqrt(wa * wb);
}

} // namespace nogo
