#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "dcat/errors.hpp"

namespace dcat {

// Occupation vector of a symmetric N-quDit Fock state: D non-negative
// counts summing to the particle number.
struct Composition {
    std::vector<int> counts;
    int total = 0;

    Composition() = default;
    explicit Composition(std::vector<int> c);

    int levels() const { return static_cast<int>(counts.size()); }
    bool operator==(const Composition&) const = default;
};

// Element of the parity group Z_2^(D-1) or of its (isomorphic) dual.
// Component convention: level index i = 1..D-1 maps to bit i-1, so the
// least-significant bit carries the parity of level 1. Spectra, CSV
// lambda columns and Walsh-Hadamard indexing all use this integer.
struct ParityLabel {
    unsigned bits = 0;
    int width = 0;

    ParityLabel() = default;
    ParityLabel(unsigned b, int w);

    int popcount() const { return std::popcount(bits); }
    bool bit(int i) const { return (bits >> i) & 1u; }
    ParityLabel operator^(const ParityLabel& o) const;
    bool operator==(const ParityLabel&) const = default;
};

// Exact binomial coefficient; throws cap_exceeded_error on uint64 overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Number of Fock basis states of D levels and N particles.
std::uint64_t composition_count(int D, int N);

// All compositions of N into D parts, in lexicographically decreasing
// order of counts. This order is the contract for every dense vector and
// matrix index in the oracle layer.
std::vector<Composition> enumerate_compositions(int D, int N);

// ln(total! / prod n_i!) via log-gamma.
double log_multinomial(const Composition& n);

// ln(k!)
double log_factorial(int k);

// chi_c(b) = (-1)^(c.b)
int character(const ParityLabel& c, const ParityLabel& b);

// Parity pattern of the occupations n_1..n_{D-1} (level 0 dropped).
ParityLabel parity_of(const Composition& n);

// out[c] = 2^(-width) sum_b (-1)^(c.b) v[b], in-place fast butterfly.
void walsh_hadamard(std::vector<double>& v, int width);

// Unnormalized transform; applying it after walsh_hadamard recovers the
// original vector exactly (Fourier inversion).
void walsh_hadamard_unnormalized(std::vector<double>& v, int width);

// Dimension helpers for the bipartition bookkeeping.
std::uint64_t sym_rep_dim(int D, int M);       // binom(M+D-1, M)
std::uint64_t full_tensor_dim(int D, int M);   // D^M
std::uint64_t dcat_count(int D);               // 2^(D-1)

}  // namespace dcat
