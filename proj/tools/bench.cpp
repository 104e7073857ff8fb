// Times the parallel correlation kernels against the serial definitional
// reference on random inputs and cross-checks the profiles they produce.
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>

#include "zacz/correlation.hpp"
#include "zacz/qam.hpp"
#include "zacz/rng.hpp"

using namespace zacz;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void bench_phase(int m, uint64_t seed) {
    Rng rng(seed);
    PhaseSeq seq;
    seq.H = 4;
    seq.values.resize(1LL << m);
    for (int& v : seq.values) v = static_cast<int>(rng.below(4));

    auto t0 = std::chrono::steady_clock::now();
    const CorrProfile fast = periodic_autocorr(seq);
    const double t_fast = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    const auto slow = reference::periodic_autocorr(seq.to_complex());
    const double t_slow = ms_since(t0);

    double worst = 0.0;
    for (long long tau = 0; tau < fast.n(); ++tau)
        worst = std::max(worst, std::abs(fast.value(tau) - slow[tau]));
    std::cout << "phase m=" << m << " (N=" << seq.n() << "): kernel " << t_fast
              << " ms, reference " << t_slow << " ms, speedup " << t_slow / t_fast
              << "x, max deviation " << worst << '\n';
}

void bench_qam(int m, int q, uint64_t seed) {
    Rng rng(seed);
    QamParams params;
    params.q = q;
    params.base = GolayParams::identity(m, 4);
    for (int k = 0; k <= m; ++k) params.base.c[k] = static_cast<int>(rng.below(4));
    params.offsets = random_offsets(q, m, 3, rng);
    const ComplexSeq seq = qam_pair(params).first;

    auto t0 = std::chrono::steady_clock::now();
    const CorrProfile fast = periodic_autocorr(seq);
    const double t_fast = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    const auto slow = reference::periodic_autocorr(seq.to_complex());
    const double t_slow = ms_since(t0);

    double worst = 0.0;
    for (long long tau = 0; tau < fast.n(); ++tau)
        worst = std::max(worst, std::abs(fast.value(tau) - slow[tau]));
    std::cout << "qam m=" << m << " q=" << q << " (N=" << seq.n() << "): kernel " << t_fast
              << " ms, reference " << t_slow << " ms, speedup " << t_slow / t_fast
              << "x, max deviation " << worst << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    const int m = argc > 1 ? std::atoi(argv[1]) : 12;
    if (m < 4 || m > 18) {
        std::cerr << "usage: bench [m in 4..18]\n";
        return 2;
    }
    bench_phase(m, 1);
    bench_qam(std::min(m, 11), 3, 2);
    return 0;
}
