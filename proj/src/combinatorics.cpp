#include "dcat/combinatorics.hpp"

#include <cmath>
#include <limits>

namespace dcat {

Composition::Composition(std::vector<int> c) : counts(std::move(c)) {
    if (counts.empty()) throw usage_error("Composition: needs at least one level");
    for (int v : counts) {
        if (v < 0) throw usage_error("Composition: negative occupation");
        total += v;
    }
}

ParityLabel::ParityLabel(unsigned b, int w) : bits(b), width(w) {
    if (w < 0 || w > 31) throw usage_error("ParityLabel: width out of range");
    if (w < 31 && b >= (1u << w)) throw usage_error("ParityLabel: bits exceed width");
}

ParityLabel ParityLabel::operator^(const ParityLabel& o) const {
    if (width != o.width) throw usage_error("ParityLabel: width mismatch");
    return ParityLabel(bits ^ o.bits, width);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        std::uint64_t q = r / i, rem = r % i;
        // r = r*(n-k+i)/i done as q*(n-k+i) + rem*(n-k+i)/i to stay exact
        std::uint64_t a = n - k + i;
        if (q > std::numeric_limits<std::uint64_t>::max() / a)
            throw cap_exceeded_error("binomial: overflow");
        r = q * a + rem * a / i;
    }
    return r;
}

std::uint64_t composition_count(int D, int N) {
    if (D < 1 || N < 0) throw usage_error("composition_count: D >= 1, N >= 0 required");
    return binomial(static_cast<std::uint64_t>(N) + D - 1, D - 1);
}

std::vector<Composition> enumerate_compositions(int D, int N) {
    std::uint64_t count = composition_count(D, N);
    if (count > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max() / sizeof(void*)))
        throw cap_exceeded_error("enumerate_compositions: basis exceeds index range");
    std::vector<Composition> out;
    out.reserve(count);

    std::vector<int> cur(D, 0);
    cur[0] = N;
    out.emplace_back(cur);
    while (true) {
        // successor in decreasing lexicographic order: take one unit from the
        // rightmost non-terminal nonzero slot, dump the tail one slot right
        int j = D - 2;
        while (j >= 0 && cur[j] == 0) --j;
        if (j < 0) break;
        int rem = 0;
        for (int i = j + 1; i < D; ++i) { rem += cur[i]; cur[i] = 0; }
        cur[j] -= 1;
        cur[j + 1] = rem + 1;
        out.emplace_back(cur);
    }
    return out;
}

double log_factorial(int k) {
    return std::lgamma(static_cast<double>(k) + 1.0);
}

double log_multinomial(const Composition& n) {
    double r = log_factorial(n.total);
    for (int v : n.counts) r -= log_factorial(v);
    return r;
}

int character(const ParityLabel& c, const ParityLabel& b) {
    if (c.width != b.width) throw usage_error("character: width mismatch");
    return (std::popcount(c.bits & b.bits) & 1) ? -1 : 1;
}

ParityLabel parity_of(const Composition& n) {
    int w = n.levels() - 1;
    unsigned bits = 0;
    for (int i = 1; i <= w; ++i)
        if (n.counts[i] & 1) bits |= 1u << (i - 1);
    return ParityLabel(bits, w);
}

void walsh_hadamard_unnormalized(std::vector<double>& v, int width) {
    if (v.size() != (std::size_t{1} << width))
        throw usage_error("walsh_hadamard: length must be 2^width");
    for (std::size_t h = 1; h < v.size(); h <<= 1) {
        for (std::size_t i = 0; i < v.size(); i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                double a = v[j], b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
    }
}

void walsh_hadamard(std::vector<double>& v, int width) {
    walsh_hadamard_unnormalized(v, width);
    double scale = std::ldexp(1.0, -width);
    for (double& x : v) x *= scale;
}

std::uint64_t sym_rep_dim(int D, int M) {
    return binomial(static_cast<std::uint64_t>(M) + D - 1, M);
}

std::uint64_t full_tensor_dim(int D, int M) {
    std::uint64_t r = 1;
    for (int i = 0; i < M; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / D)
            throw cap_exceeded_error("full_tensor_dim: overflow");
        r *= D;
    }
    return r;
}

std::uint64_t dcat_count(int D) {
    if (D < 1 || D > 64) throw usage_error("dcat_count: D out of range");
    return std::uint64_t{1} << (D - 1);
}

}  // namespace dcat
