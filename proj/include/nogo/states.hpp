// states.hpp
// Time-bin states and the two distance notions used by the no-go analysis:
// the plain overlap distance delta = 1 - |<a|b>| and its vacuum-projected
// counterpart delta0, evaluated in closed form for multimode coherent
// states. A truncated photon-number expansion (FockTruncation) provides an
// independent numerical route for validating the closed forms.
//
// Time bins are labelled 1..d throughout, matching the on-disk formats.

#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace nogo {

using Complex = std::complex<double>;

// Normalized single-photon state spread over d time bins.
struct SingleExcitationState {
    int dim = 0;
    std::vector<Complex> coefficients;   // unit 2-norm
};

// Multimode coherent state |a_1,...,a_d>, one complex amplitude per bin.
// Total mean photon number is the squared 2-norm of the amplitudes.
struct MultimodeCoherentState {
    int dim = 0;
    std::vector<Complex> amplitudes;
    std::optional<int> label;            // prepared bin k, or nullopt for the reference

    double mean_photons() const;
};

// |psi_k> with bin k removed: coefficient 0 at k, 1/sqrt(d-1) elsewhere.
SingleExcitationState make_missing_bin_state(int d, int k);

// |psi> uniform over all d bins: every coefficient 1/sqrt(d).
SingleExcitationState make_uniform_state(int d);

// Coherent pulse train of total mean photon number `mean_photons`.
// With k set, bin k carries amplitude exactly 0 and the remaining bins share
// the energy equally; with k unset all d bins share it (the reference state).
// Optional per-bin phases multiply each amplitude by e^{i phase_j}.
MultimodeCoherentState make_coherent_state(int d, std::optional<int> k,
                                           double mean_photons,
                                           std::span<const double> phases = {});

std::complex<double> overlap(const SingleExcitationState& a,
                             const SingleExcitationState& b);

// <a|b> = exp(-(|a|^2 + |b|^2)/2 + sum_j conj(a_j) b_j).
std::complex<double> coherent_overlap(const MultimodeCoherentState& a,
                                      const MultimodeCoherentState& b);

// Overlap of the two states after projecting out the vacuum component and
// renormalizing: (exp(sum_j conj(a_j) b_j) - 1) /
// sqrt((exp(|a|^2) - 1) (exp(|b|^2) - 1)). Undefined for vacuum inputs.
std::complex<double> vacuum_projected_overlap(const MultimodeCoherentState& a,
                                              const MultimodeCoherentState& b);

// delta = 1 - |<a|b>|.
double delta(const SingleExcitationState& a, const SingleExcitationState& b);
double delta(const MultimodeCoherentState& a, const MultimodeCoherentState& b);

// delta0 = 1 - |vacuum_projected_overlap(a, b)|.
double delta0(const MultimodeCoherentState& a, const MultimodeCoherentState& b);

// delta0 between a missing-bin pulse train and the reference train, both of
// total mean photon number n = mean_photons:
// 1 - (e^{n sqrt((d-1)/d)} - 1) / (e^n - 1).
double delta0_closed_form(int d, double mean_photons);

// Explicit photon-number expansion of a multimode coherent state up to
// max_photons total photons. Overlaps are accumulated sector by sector via a
// per-mode convolution, independently of the exponential closed forms above;
// this is the validation oracle for coherent_overlap and
// vacuum_projected_overlap.
struct FockTruncation {
    int max_photons = 12;

    std::complex<double> overlap(const MultimodeCoherentState& a,
                                 const MultimodeCoherentState& b) const;
    std::complex<double> vacuum_projected_overlap(const MultimodeCoherentState& a,
                                                  const MultimodeCoherentState& b) const;
};

} // namespace nogo
