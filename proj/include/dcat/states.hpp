#pragma once

#include <complex>
#include <vector>

#include "dcat/combinatorics.hpp"

namespace dcat {

// Complex value kept as (log-magnitude, phase). The per-state coherent
// amplitudes involve (1+z'z)^(N/2), which leaves double range near N ~ 600
// if held as a plain complex.
struct LogComplex {
    double log_mag = -std::numeric_limits<double>::infinity();
    double phase = 0.0;

    std::complex<double> value() const {
        double m = std::exp(log_mag);
        return {m * std::cos(phase), m * std::sin(phase)};
    }
};

// Label z in C^(D-1) of a U(D)-spin coherent state, in the chart z_0 = 1.
// Stored as magnitudes and phases; every spectral quantity downstream
// depends on the magnitudes only.
struct CSLabel {
    std::vector<double> magnitudes;  // |z_i|, i = 1..D-1
    std::vector<double> phases;      // arg z_i
    int D = 2;

    CSLabel() = default;
    CSLabel(std::vector<double> mags, std::vector<double> phs);
    // phases all zero
    explicit CSLabel(std::vector<double> mags);

    std::complex<double> component(int i) const;  // z_{i+1}, i = 0..D-2
    double herm_norm_sq() const;                  // z'z = sum |z_i|^2
    int zero_count(double tol = 1e-12) const;     // D-1 - ||z||_0
    int nonzero_count(double tol = 1e-12) const;  // ||z||_0
};

// One-quDit state w in the Bloch projective space, |w|^2 = 1.
struct BlochVector {
    std::vector<std::complex<double>> amplitudes;
};

// sqrt(N!/n!) prod z_i^{n_i} / (1+z'z)^(N/2), as log-magnitude + phase.
LogComplex cs_fock_coefficient(const CSLabel& z, const Composition& n, int N);

// <z|z'> = (1+z'z')^N / ((1+z'z)^(N/2)(1+z''z')^(N/2)); log-space internally.
std::complex<double> cs_overlap(const CSLabel& z, const CSLabel& zp, int N);

// z^b: flips the sign (phase by pi) of component i where b_i = 1.
CSLabel parity_flip(const CSLabel& z, const ParityLabel& b);

// w_0 = 1/sqrt(1+z'z) > 0, w_i = z_i w_0.
BlochVector bloch_from_cs(const CSLabel& z);

// z_i = w_i / w_0; throws chart_error at w_0 = 0 (caller must re-chart,
// which this library serves through the closed-form limit states instead).
CSLabel cs_from_bloch(const BlochVector& w);

}  // namespace dcat
