// Aperiodic and periodic autocorrelation profiles, zero-zone detection, the
// I_1/I_2/I_3 partition diagnostics, and correlation-based delay estimation.
// Phase sequences with H | 4 and all QAM sequences take an exact
// Gaussian-integer path; other H use doubles with an explicit tolerance.
#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "zacz/golay.hpp"
#include "zacz/qam.hpp"

namespace zacz {

enum class CorrKind { aperiodic, periodic };

struct CorrProfile {
    CorrKind kind = CorrKind::aperiodic;
    bool exact = false;
    double scale = 1.0;                      // exact path: value(tau) = scale * gauss[tau]
    std::vector<GaussianInt> gauss;          // exact path storage
    std::vector<std::complex<double>> vals;  // float path storage

    long long n() const {
        return static_cast<long long>(exact ? gauss.size() : vals.size());
    }
    std::complex<double> value(long long tau) const {
        return exact ? scale * gauss[tau].to_complex() : vals[tau];
    }
    bool is_zero(long long tau, double tol = 0.0) const {
        return exact ? gauss[tau].is_zero() : std::abs(vals[tau]) <= tol;
    }
};

// default float-path tolerance; rounding across N unit terms scales with N
inline double default_tol(long long n) { return 1e-9 * static_cast<double>(n); }

CorrProfile aperiodic_autocorr(const PhaseSeq& seq);
CorrProfile periodic_autocorr(const PhaseSeq& seq);
CorrProfile aperiodic_autocorr(const ComplexSeq& seq);
CorrProfile periodic_autocorr(const ComplexSeq& seq);

// definitional double-loop evaluation over complex doubles, kept serial as the
// oracle the production kernels are tested against
namespace reference {
std::vector<std::complex<double>> aperiodic_autocorr(const std::vector<std::complex<double>>& v);
std::vector<std::complex<double>> periodic_autocorr(const std::vector<std::complex<double>>& v);
}  // namespace reference

// C_a(tau) + C_b(tau) = 0 for every tau >= 1; tol applies on the float path only
bool is_complementary_pair(const PhaseSeq& a, const PhaseSeq& b, double tol);
bool is_complementary_pair(const PhaseSeq& a, const PhaseSeq& b);  // tol = default_tol(N)

// exact by construction (Gaussian-integer cores)
bool is_qam_complementary(const ComplexSeq& a, const ComplexSeq& b);

struct ZaczReport {
    std::vector<std::pair<long long, long long>> intervals;  // maximal, disjoint, sorted
    double tol_used = 0.0;

    bool covers(long long lo, long long hi) const;
    long long longest() const;
};

// maximal vanishing intervals of a periodic profile over tau in [1, N-1];
// tol is ignored on the exact path
ZaczReport find_zacz(const CorrProfile& profile, double tol);
ZaczReport find_zacz(const CorrProfile& profile);  // tol = default_tol(N)

// sums of xi^(a_i - a_j), j = (i+tau) mod 2^m, split by agreement of bits
// pi(1) and pi(m):  I_1: i and j agree at pi(1);  I_2: disagree at pi(1),
// agree at pi(m);  I_3: the rest.  s1 + s2 + s3 = R(tau).
struct PartitionSums {
    ExactComplex s1, s2, s3;
};

PartitionSums partition_sums(const GolayParams& params, long long tau);

// argmax over tau in [0, search_window) of the cyclic cross-correlation
// magnitude; exact recovery when received = reference cyclically delayed and
// the delay's offset lands where the reference autocorrelation vanishes
long long estimate_delay(const std::vector<std::complex<double>>& reference,
                         const std::vector<std::complex<double>>& received,
                         long long search_window);

}  // namespace zacz
