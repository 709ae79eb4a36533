#include "dcat/parity_cats.hpp"

#include <cmath>

namespace dcat {

namespace {

// Kahan-compensated accumulator.
struct Kahan {
    double sum = 0.0, comp = 0.0;
    void add(double x) {
        double y = x - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

double clamp_norm_sq(double v) {
    if (v < 0.0) return (v > -1e-13) ? 0.0 : 0.0;  // norm by construction; see note below
    return v > 1.0 ? 1.0 : v;
}
// Cancellation in the signed sum can leave a residue of either sign where the
// exact value is 0 (z on a coordinate hyperplane with the matching c bit set).
// The quantity is a squared norm, so negatives are rounded up to 0.

}  // namespace

CatParams::CatParams(CSLabel z_, ParityLabel c_, int N_)
    : z(std::move(z_)), c(c_), N(N_) {
    if (c.width != z.D - 1) throw usage_error("CatParams: parity width must be D-1");
    if (N < 1) throw usage_error("CatParams: N >= 1 required");
}

double powi(double x, int n) {
    double r = 1.0, base = x;
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

std::vector<double> overlap_ratios(const CSLabel& z) {
    int w = z.D - 1;
    std::size_t size = std::size_t{1} << w;
    std::vector<double> x(w);
    double denom = 1.0;
    for (int i = 0; i < w; ++i) {
        x[i] = z.magnitudes[i] * z.magnitudes[i];
        denom += x[i];
    }
    std::vector<double> t(size);
    for (std::size_t b = 0; b < size; ++b) {
        Kahan num;
        num.add(1.0);
        for (int i = 0; i < w; ++i) num.add((b >> i) & 1 ? -x[i] : x[i]);
        t[b] = num.sum / denom;
    }
    return t;
}

namespace {

std::vector<double> profile_signed(const CSLabel& z, int N) {
    int w = z.D - 1;
    std::size_t size = std::size_t{1} << w;
    std::vector<double> t = overlap_ratios(z);
    std::vector<double> tn(size);
    for (std::size_t b = 0; b < size; ++b) tn[b] = powi(t[b], N);

    std::vector<double> out(size);
    for (std::size_t c = 0; c < size; ++c) {
        Kahan acc;
        for (std::size_t b = 0; b < size; ++b) {
            int sign = (std::popcount(c & b) & 1) ? -1 : 1;
            acc.add(sign > 0 ? tn[b] : -tn[b]);
        }
        out[c] = clamp_norm_sq(std::ldexp(acc.sum, -w));
    }
    return out;
}

std::vector<double> profile_fock(const CSLabel& z, int N) {
    int w = z.D - 1;
    std::size_t size = std::size_t{1} << w;
    std::vector<Kahan> buckets(size);

    std::vector<double> lf(N + 1);
    for (int k = 0; k <= N; ++k) lf[k] = log_factorial(k);
    std::vector<double> lx(w);  // ln |z_i|^2; -inf marks a zero component
    for (int i = 0; i < w; ++i)
        lx[i] = z.magnitudes[i] > 0.0
                    ? 2.0 * std::log(z.magnitudes[i])
                    : -std::numeric_limits<double>::infinity();
    double lden = N * std::log1p(z.herm_norm_sq());

    for (const Composition& n : enumerate_compositions(z.D, N)) {
        double lw = lf[N] - lf[n.counts[0]] - lden;
        bool dead = false;
        unsigned bits = 0;
        for (int i = 1; i < z.D; ++i) {
            int ni = n.counts[i];
            lw -= lf[ni];
            if (ni == 0) continue;
            if (ni & 1) bits |= 1u << (i - 1);
            if (lx[i - 1] == -std::numeric_limits<double>::infinity()) {
                dead = true;
                break;
            }
            lw += ni * lx[i - 1];
        }
        if (dead) continue;
        buckets[bits].add(std::exp(lw));
    }

    std::vector<double> out(size);
    for (std::size_t c = 0; c < size; ++c) out[c] = clamp_norm_sq(buckets[c].sum);
    return out;
}

NormAlgorithm resolve(const CSLabel& z, int N, NormAlgorithm alg) {
    if (alg != NormAlgorithm::automatic) return alg;
    return composition_count(z.D, N) <= kFockSumCrossover ? NormAlgorithm::fock_sum
                                                          : NormAlgorithm::signed_sum;
}

}  // namespace

std::vector<double> cat_norm_sq_profile(const CSLabel& z, int N, NormAlgorithm alg) {
    if (N < 1) throw usage_error("cat_norm_sq_profile: N >= 1 required");
    return resolve(z, N, alg) == NormAlgorithm::fock_sum ? profile_fock(z, N)
                                                         : profile_signed(z, N);
}

double cat_norm_sq(const CatParams& p, NormAlgorithm alg) {
    return cat_norm_sq_profile(p.z, p.N, alg)[p.c.bits];
}

LogComplex cat_fock_coefficient(const CatParams& p, const Composition& n) {
    if (n.total != p.N) throw usage_error("cat_fock_coefficient: wrong particle count");
    if (n.levels() != p.z.D) throw usage_error("cat_fock_coefficient: dimension mismatch");
    if (parity_of(n) != p.c) return LogComplex{};
    double nsq = cat_norm_sq(p);
    if (nsq < kDegenerateNormSq)
        throw degenerate_cat_error(
            "cat_fock_coefficient: zero-norm projection; state exists only as a "
            "limit (see fock_cat_at_origin)");
    LogComplex cs = cs_fock_coefficient(p.z, n, p.N);
    cs.log_mag -= 0.5 * std::log(nsq);
    return cs;
}

Composition fock_cat_at_origin(const ParityLabel& c, int N, int D) {
    if (c.width != D - 1) throw usage_error("fock_cat_at_origin: width must be D-1");
    int k = c.popcount();
    if (N < k) throw usage_error("fock_cat_at_origin: N < popcount(c)");
    std::vector<int> counts(D);
    counts[0] = N - k;
    for (int i = 1; i < D; ++i) counts[i] = c.bit(i - 1) ? 1 : 0;
    return Composition(std::move(counts));
}

Composition fock_cat_at_axis_infinity(const ParityLabel& c, int N, int axis) {
    int D = c.width + 1;
    if (axis < 1 || axis > D - 1) throw usage_error("fock_cat_at_axis_infinity: axis out of range");
    int k = c.popcount();
    if (N < k) throw usage_error("fock_cat_at_axis_infinity: N < popcount(c)");
    int nc = (N - k) % 2;
    std::vector<int> counts(D);
    counts[0] = nc;
    for (int i = 1; i < D; ++i) counts[i] = c.bit(i - 1) ? 1 : 0;
    counts[axis] += N - k - nc;
    return Composition(std::move(counts));
}

double ho_cat_norm_sq(const HOCatParams& p) {
    if (!(p.alpha >= 0.0) || !std::isfinite(p.alpha))
        throw usage_error("ho_cat_norm_sq: alpha must be finite and >= 0");
    double e = std::exp(-2.0 * p.alpha * p.alpha);
    return p.c == 0 ? 0.5 * (1.0 + e) : 0.5 * (1.0 - e);
}

double norm_limit_origin(const ParityLabel& c) {
    return c.bits == 0 ? 1.0 : 0.0;
}

double norm_limit_thermodynamic(const CSLabel& z, const ParityLabel& c) {
    if (c.width != z.D - 1) throw usage_error("norm_limit_thermodynamic: width mismatch");
    int k = 0;
    for (int i = 0; i < c.width; ++i) {
        if (z.magnitudes[i] > 1e-12) {
            ++k;
        } else if (c.bit(i)) {
            return 0.0;  // delta on the zero-z sub-vector fails
        }
    }
    return std::ldexp(1.0, -k);
}

double norm_limit_rescaled(const std::vector<double>& alphas, const ParityLabel& c) {
    if (static_cast<int>(alphas.size()) != c.width)
        throw usage_error("norm_limit_rescaled: width mismatch");
    double r = 1.0;
    for (int i = 0; i < c.width; ++i)
        r *= ho_cat_norm_sq({alphas[i], c.bit(i) ? 1 : 0});
    return r;
}

double norm_limit_directional(const std::vector<double>& y, const ParityLabel& c, int N) {
    int w = c.width;
    if (static_cast<int>(y.size()) != w)
        throw usage_error("norm_limit_directional: width mismatch");
    std::size_t size = std::size_t{1} << w;
    Kahan acc;
    for (std::size_t b = 0; b < size; ++b) {
        double Y = 0.0;
        for (int i = 0; i < w; ++i) Y += ((b >> i) & 1 ? -1.0 : 1.0) * y[i] * y[i];
        double term = powi(Y, N);
        acc.add((std::popcount(c.bits & static_cast<unsigned>(b)) & 1) ? -term : term);
    }
    double v = std::ldexp(acc.sum, -w);
    return v < 0.0 ? 0.0 : v;
}

}  // namespace dcat
