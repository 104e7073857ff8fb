// Production correlation kernels, parallel over shifts. Each tau is an
// independent sum, so the profile assembles deterministically regardless of
// thread count. The serial definitional versions live in correlation.cpp
// under zacz::reference.
#include <stdexcept>

#include "zacz/correlation.hpp"

namespace zacz {

namespace {

std::vector<GaussianInt> phase_units(const PhaseSeq& seq) {
    const int step = 4 / seq.H;
    std::vector<GaussianInt> u(seq.values.size());
    for (size_t i = 0; i < u.size(); ++i) u[i] = unit_i_pow(seq.values[i] * step);
    return u;
}

std::vector<std::complex<double>> phase_floats(const PhaseSeq& seq) {
    std::vector<std::complex<double>> roots(seq.H);
    for (int k = 0; k < seq.H; ++k) roots[k] = root_to_complex(k, seq.H).value();
    std::vector<std::complex<double>> v(seq.values.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = roots[seq.values[i]];
    return v;
}

CorrProfile exact_profile(const std::vector<GaussianInt>& u, CorrKind kind, double scale) {
    const long long n = static_cast<long long>(u.size());
    if (n == 0) throw std::domain_error("empty sequence");
    CorrProfile p;
    p.kind = kind;
    p.exact = true;
    p.scale = scale;
    p.gauss.resize(n);
    if (kind == CorrKind::aperiodic) {
#pragma omp parallel for schedule(static)
        for (long long tau = 0; tau < n; ++tau) {
            GaussianInt acc{0, 0};
            for (long long i = 0; i + tau < n; ++i) acc += mul_conj(u[i], u[i + tau]);
            p.gauss[tau] = acc;
        }
    } else {
#pragma omp parallel for schedule(static)
        for (long long tau = 0; tau < n; ++tau) {
            GaussianInt acc{0, 0};
            for (long long i = 0; i < n; ++i) acc += mul_conj(u[i], u[(i + tau) % n]);
            p.gauss[tau] = acc;
        }
    }
    return p;
}

CorrProfile float_profile(const std::vector<std::complex<double>>& v, CorrKind kind) {
    const long long n = static_cast<long long>(v.size());
    if (n == 0) throw std::domain_error("empty sequence");
    CorrProfile p;
    p.kind = kind;
    p.exact = false;
    p.vals.resize(n);
    if (kind == CorrKind::aperiodic) {
#pragma omp parallel for schedule(static)
        for (long long tau = 0; tau < n; ++tau) {
            std::complex<double> acc{0.0, 0.0};
            for (long long i = 0; i + tau < n; ++i) acc += v[i] * std::conj(v[i + tau]);
            p.vals[tau] = acc;
        }
    } else {
#pragma omp parallel for schedule(static)
        for (long long tau = 0; tau < n; ++tau) {
            std::complex<double> acc{0.0, 0.0};
            for (long long i = 0; i < n; ++i) acc += v[i] * std::conj(v[(i + tau) % n]);
            p.vals[tau] = acc;
        }
    }
    return p;
}

CorrProfile phase_profile(const PhaseSeq& seq, CorrKind kind) {
    if (4 % seq.H == 0) return exact_profile(phase_units(seq), kind, 1.0);
    return float_profile(phase_floats(seq), kind);
}

}  // namespace

CorrProfile aperiodic_autocorr(const PhaseSeq& seq) {
    return phase_profile(seq, CorrKind::aperiodic);
}

CorrProfile periodic_autocorr(const PhaseSeq& seq) {
    return phase_profile(seq, CorrKind::periodic);
}

CorrProfile aperiodic_autocorr(const ComplexSeq& seq) {
    const double s = seq.scale();
    return exact_profile(seq.core, CorrKind::aperiodic, s * s);
}

CorrProfile periodic_autocorr(const ComplexSeq& seq) {
    const double s = seq.scale();
    return exact_profile(seq.core, CorrKind::periodic, s * s);
}

}  // namespace zacz
