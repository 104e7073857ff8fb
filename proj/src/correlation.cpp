#include "zacz/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zacz {

namespace reference {

std::vector<std::complex<double>> aperiodic_autocorr(const std::vector<std::complex<double>>& v) {
    const long long n = static_cast<long long>(v.size());
    std::vector<std::complex<double>> out(n);
    for (long long tau = 0; tau < n; ++tau) {
        std::complex<double> acc{0.0, 0.0};
        for (long long i = 0; i + tau < n; ++i) acc += v[i] * std::conj(v[i + tau]);
        out[tau] = acc;
    }
    return out;
}

std::vector<std::complex<double>> periodic_autocorr(const std::vector<std::complex<double>>& v) {
    const long long n = static_cast<long long>(v.size());
    std::vector<std::complex<double>> out(n);
    for (long long tau = 0; tau < n; ++tau) {
        std::complex<double> acc{0.0, 0.0};
        for (long long i = 0; i < n; ++i) acc += v[i] * std::conj(v[(i + tau) % n]);
        out[tau] = acc;
    }
    return out;
}

}  // namespace reference

bool is_complementary_pair(const PhaseSeq& a, const PhaseSeq& b, double tol) {
    if (a.n() != b.n()) throw std::domain_error("pair length mismatch");
    if (a.H != b.H) throw std::domain_error("pair phase-order mismatch");
    const CorrProfile ca = aperiodic_autocorr(a);
    const CorrProfile cb = aperiodic_autocorr(b);
    for (long long tau = 1; tau < a.n(); ++tau) {
        if (ca.exact) {
            if (!(ca.gauss[tau] + cb.gauss[tau]).is_zero()) return false;
        } else if (std::abs(ca.vals[tau] + cb.vals[tau]) > tol) {
            return false;
        }
    }
    return true;
}

bool is_complementary_pair(const PhaseSeq& a, const PhaseSeq& b) {
    return is_complementary_pair(a, b, default_tol(a.n()));
}

bool is_qam_complementary(const ComplexSeq& a, const ComplexSeq& b) {
    if (a.n() != b.n()) throw std::domain_error("pair length mismatch");
    const long long n = a.n();
    for (long long tau = 1; tau < n; ++tau) {
        GaussianInt acc{0, 0};
        for (long long i = 0; i + tau < n; ++i) {
            acc += mul_conj(a.core[i], a.core[i + tau]);
            acc += mul_conj(b.core[i], b.core[i + tau]);
        }
        if (!acc.is_zero()) return false;
    }
    return true;
}

bool ZaczReport::covers(long long lo, long long hi) const {
    if (lo > hi) return true;
    for (const auto& [a, b] : intervals)
        if (a <= lo && hi <= b) return true;
    return false;
}

long long ZaczReport::longest() const {
    long long best = 0;
    for (const auto& [a, b] : intervals) best = std::max(best, b - a + 1);
    return best;
}

ZaczReport find_zacz(const CorrProfile& profile, double tol) {
    if (profile.kind != CorrKind::periodic)
        throw std::domain_error("zone detection is defined on periodic profiles");
    if (tol < 0.0) throw std::domain_error("tolerance must be nonnegative");
    ZaczReport report;
    report.tol_used = profile.exact ? 0.0 : tol;
    const long long n = profile.n();
    long long start = -1;
    for (long long tau = 1; tau <= n; ++tau) {
        const bool zero = tau < n && profile.is_zero(tau, report.tol_used);
        if (zero && start < 0) start = tau;
        if (!zero && start >= 0) {
            report.intervals.emplace_back(start, tau - 1);
            start = -1;
        }
    }
    return report;
}

ZaczReport find_zacz(const CorrProfile& profile) {
    return find_zacz(profile, default_tol(profile.n()));
}

PartitionSums partition_sums(const GolayParams& params, long long tau) {
    params.validate();
    const long long n = params.n();
    if (tau < 1 || tau >= n) throw std::domain_error("tau must lie in [1, 2^m - 1]");
    const PhaseSeq a = generate(params);
    const int m = params.m;
    const int H = params.H;
    const int p1 = params.pi(1);
    const int pm = params.pi(m);
    const bool exact = 4 % H == 0;

    GaussianInt g[3] = {};
    std::complex<double> f[3] = {};
    std::vector<std::complex<double>> roots(H);
    if (!exact)
        for (int k = 0; k < H; ++k) roots[k] = root_to_complex(k, H).value();
    for (long long i = 0; i < n; ++i) {
        const long long j = (i + tau) % n;
        const int diff = mod_reduce(a.values[i] - a.values[j], H);
        int part;
        if (bit_msb(i, m, p1) == bit_msb(j, m, p1))
            part = 0;
        else if (bit_msb(i, m, pm) == bit_msb(j, m, pm))
            part = 1;
        else
            part = 2;
        if (exact)
            g[part] += unit_i_pow(diff * (4 / H));
        else
            f[part] += roots[diff];
    }
    PartitionSums out;
    ExactComplex* slots[3] = {&out.s1, &out.s2, &out.s3};
    for (int k = 0; k < 3; ++k)
        *slots[k] = exact ? ExactComplex::from_gauss(g[k]) : ExactComplex::from_float(f[k]);
    return out;
}

long long estimate_delay(const std::vector<std::complex<double>>& reference,
                         const std::vector<std::complex<double>>& received,
                         long long search_window) {
    const long long n = static_cast<long long>(reference.size());
    if (n == 0 || static_cast<long long>(received.size()) != n)
        throw std::domain_error("reference and received lengths must match and be nonzero");
    if (search_window < 1 || search_window > n)
        throw std::domain_error("search window must lie in [1, N]");
    long long best_tau = 0;
    double best_mag = -1.0;
    for (long long tau = 0; tau < search_window; ++tau) {
        std::complex<double> acc{0.0, 0.0};
        for (long long k = 0; k < n; ++k) acc += received[(k + tau) % n] * std::conj(reference[k]);
        const double mag = std::abs(acc);
        if (mag > best_mag) {
            best_mag = mag;
            best_tau = tau;
        }
    }
    return best_tau;
}

}  // namespace zacz
