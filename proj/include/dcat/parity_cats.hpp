#pragma once

#include "dcat/states.hpp"

namespace dcat {

// Full label of a parity-adapted coherent state (DCAT): the CS label z,
// the parity character c and the particle number N.
struct CatParams {
    CSLabel z;
    ParityLabel c;
    int N = 1;

    CatParams(CSLabel z_, ParityLabel c_, int N_);
};

// One-mode harmonic-oscillator cat: |alpha| and even/odd bit.
struct HOCatParams {
    double alpha = 0.0;
    int c = 0;  // 0 even, 1 odd
};

enum class NormAlgorithm {
    signed_sum,  // 2^(1-D) sum_b chi_c(b) t_b^N, compensated summation
    fock_sum,    // all-positive parity-restricted coefficient sum
    automatic,   // fock_sum while the basis fits under the crossover cap
};

// Basis-size crossover for NormAlgorithm::automatic.
inline constexpr std::uint64_t kFockSumCrossover = 2'000'000;

// Squared norms below this are treated as exactly degenerate: the state
// is defined only as a limit and coefficient division is refused.
inline constexpr double kDegenerateNormSq = 1e-300;

// N_c(z)^2 in [0, 1]. Underflow to exactly 0 is a valid limit value.
double cat_norm_sq(const CatParams& p, NormAlgorithm alg = NormAlgorithm::automatic);

// All 2^(D-1) squared norms for one (z, N) in one pass, indexed by c.bits.
std::vector<double> cat_norm_sq_profile(const CSLabel& z, int N,
                                        NormAlgorithm alg = NormAlgorithm::automatic);

// c_n(z) / N_c(z) on the matching parity sector, exact 0 elsewhere.
// Throws degenerate_cat_error when the norm is below kDegenerateNormSq.
LogComplex cat_fock_coefficient(const CatParams& p, const Composition& n);

// z -> 0 limit state: |N-k, c_1, ..., c_{D-1}> with k = popcount(c).
Composition fock_cat_at_origin(const ParityLabel& c, int N, int D);

// |z_axis| -> infinity limit state along a coordinate axis (1-based).
Composition fock_cat_at_axis_infinity(const ParityLabel& c, int N, int axis);

// (N_c^HO)^2 = e^(-a^2) * cosh/sinh(a^2), evaluated as (1 +- e^(-2a^2))/2.
double ho_cat_norm_sq(const HOCatParams& p);

// Closed-form limits of the squared norm.
double norm_limit_origin(const ParityLabel& c);
double norm_limit_thermodynamic(const CSLabel& z, const ParityLabel& c);
double norm_limit_rescaled(const std::vector<double>& alphas, const ParityLabel& c);
// y: direction components with sum y_i^2 = 1 (see limits::direction_components).
double norm_limit_directional(const std::vector<double>& y, const ParityLabel& c, int N);

// t_b = (1 + sum (-1)^(b_i) |z_i|^2) / (1 + sum |z_i|^2) for all b.
std::vector<double> overlap_ratios(const CSLabel& z);

// x^n for integer n >= 0 by repeated squaring (deterministic across libms).
double powi(double x, int n);

}  // namespace dcat
