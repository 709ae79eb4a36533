#include "dcat/states.hpp"

#include <cmath>

namespace dcat {

CSLabel::CSLabel(std::vector<double> mags, std::vector<double> phs)
    : magnitudes(std::move(mags)), phases(std::move(phs)),
      D(static_cast<int>(magnitudes.size()) + 1) {
    if (phases.size() != magnitudes.size())
        throw usage_error("CSLabel: magnitude/phase length mismatch");
    for (double m : magnitudes)
        if (!(m >= 0.0) || !std::isfinite(m))
            throw usage_error("CSLabel: magnitudes must be finite and >= 0");
}

CSLabel::CSLabel(std::vector<double> mags)
    : CSLabel(std::move(mags), {}) {
    phases.assign(magnitudes.size(), 0.0);
}

std::complex<double> CSLabel::component(int i) const {
    return std::polar(magnitudes[i], phases[i]);
}

double CSLabel::herm_norm_sq() const {
    double s = 0.0;
    for (double m : magnitudes) s += m * m;
    return s;
}

int CSLabel::zero_count(double tol) const {
    int k = 0;
    for (double m : magnitudes)
        if (m <= tol) ++k;
    return k;
}

int CSLabel::nonzero_count(double tol) const {
    return static_cast<int>(magnitudes.size()) - zero_count(tol);
}

LogComplex cs_fock_coefficient(const CSLabel& z, const Composition& n, int N) {
    if (n.levels() != z.D) throw usage_error("cs_fock_coefficient: dimension mismatch");
    if (n.total != N) throw usage_error("cs_fock_coefficient: composition has wrong particle count");

    LogComplex out;
    double lm = 0.5 * log_multinomial(n);
    double ph = 0.0;
    for (int i = 1; i < z.D; ++i) {
        int ni = n.counts[i];
        if (ni == 0) continue;
        double m = z.magnitudes[i - 1];
        if (m == 0.0) return out;  // exact zero, log_mag = -inf
        lm += ni * std::log(m);
        ph += ni * z.phases[i - 1];
    }
    lm -= 0.5 * N * std::log1p(z.herm_norm_sq());
    out.log_mag = lm;
    out.phase = ph;
    return out;
}

std::complex<double> cs_overlap(const CSLabel& z, const CSLabel& zp, int N) {
    if (z.D != zp.D) throw usage_error("cs_overlap: dimension mismatch");
    std::complex<double> w{0.0, 0.0};
    for (int i = 0; i + 1 < z.D; ++i)
        w += std::conj(z.component(i)) * zp.component(i);
    std::complex<double> one_plus = 1.0 + w;
    if (one_plus == 0.0) return {0.0, 0.0};
    double log_mag = N * (std::log(std::abs(one_plus))
                          - 0.5 * std::log1p(z.herm_norm_sq())
                          - 0.5 * std::log1p(zp.herm_norm_sq()));
    double phase = N * std::arg(one_plus);
    return std::polar(std::exp(log_mag), phase);
}

CSLabel parity_flip(const CSLabel& z, const ParityLabel& b) {
    if (b.width != z.D - 1) throw usage_error("parity_flip: width mismatch");
    CSLabel out = z;
    constexpr double pi = 3.14159265358979323846;
    for (int i = 0; i < b.width; ++i) {
        if (!b.bit(i)) continue;
        double p = out.phases[i] + pi;
        if (p >= 2 * pi) p -= 2 * pi;
        out.phases[i] = p;
    }
    return out;
}

BlochVector bloch_from_cs(const CSLabel& z) {
    BlochVector w;
    w.amplitudes.resize(z.D);
    double w0 = 1.0 / std::sqrt(1.0 + z.herm_norm_sq());
    w.amplitudes[0] = w0;
    for (int i = 1; i < z.D; ++i) w.amplitudes[i] = z.component(i - 1) * w0;
    return w;
}

CSLabel cs_from_bloch(const BlochVector& w) {
    if (w.amplitudes.empty()) throw usage_error("cs_from_bloch: empty vector");
    std::complex<double> w0 = w.amplitudes[0];
    if (std::norm(w0) < 1e-300)
        throw chart_error("cs_from_bloch: w_0 = 0 is outside the z_0 != 0 chart");
    int D = static_cast<int>(w.amplitudes.size());
    std::vector<double> mags(D - 1), phs(D - 1);
    for (int i = 1; i < D; ++i) {
        std::complex<double> zi = w.amplitudes[i] / w0;
        mags[i - 1] = std::abs(zi);
        phs[i - 1] = (mags[i - 1] == 0.0) ? 0.0 : std::arg(zi);
        if (phs[i - 1] < 0) phs[i - 1] += 2 * 3.14159265358979323846;
    }
    return CSLabel(std::move(mags), std::move(phs));
}

}  // namespace dcat
