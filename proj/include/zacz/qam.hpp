// 4^q-QAM Golay complementary pairs built on a quaternary base sequence:
// A_i = gamma * sum_e r_e i^{a_{i,e}},  a_{i,e} = a_{i,0} + s_{i,e},
// b_{i,e} = a_{i,e} + mu_i, with gamma = e^{j pi/4} and weights
// r_e = 2^{q-1-e} / sqrt((4^q-1)/3).  Sequences are stored pre-rotation and
// pre-normalization as Gaussian integers so correlation zero-tests stay exact.
#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "zacz/golay.hpp"
#include "zacz/residue.hpp"
#include "zacz/rng.hpp"

namespace zacz {

enum class MuSelector { pi1, pim };  // mu_i = 2 i_{pi(1)} or 2 i_{pi(m)}

std::string to_string(MuSelector mu);
MuSelector mu_from_string(const std::string& s);

// Offset layers s_{i,e} for levels e = 1..q-1 (s_{i,0} is always 0):
//   case 1: s = d_{e,0} + d_{e,1} i_{pi(m)}, mu from pi(1)
//   case 2: s = d_{e,0} + d_{e,1} i_{pi(1)}, mu from pi(m)
//   case 3: s = d_{e,0} + d_{e,1} i_{pi(w)} + d_{e,2} i_{pi(w+1)}, either mu
struct OffsetSpec {
    int case_id = 1;
    MuSelector mu = MuSelector::pi1;
    int w = 1;                        // case 3 only
    std::vector<std::vector<int>> d;  // d[e-1] = coefficients of level e, in Z_4

    void validate(int q, int m) const;
};

struct QamParams {
    int q = 2;
    GolayParams base;  // quaternary: H = 4
    OffsetSpec offsets;

    // q = 1 is accepted (no offset levels); the pair degenerates to the plain
    // quaternary sequence times gamma
    void validate() const;
};

// values are gamma * scale() * core; core is exact
struct ComplexSeq {
    int q = 1;
    std::vector<GaussianInt> core;  // sum_e 2^{q-1-e} i^{a_{i,e}}

    long long n() const { return static_cast<long long>(core.size()); }
    double scale() const;  // 1 / sqrt((4^q-1)/3)
    std::vector<std::complex<double>> to_complex() const;
};

std::vector<double> weights(int q);

std::pair<ComplexSeq, ComplexSeq> qam_pair(const QamParams& params);

// (1+j) * core_i: the constellation points scaled to the odd-integer grid
std::vector<GaussianInt> constellation_points(const ComplexSeq& seq);
bool constellation_ok(const ComplexSeq& seq);  // odd coords within [-(2^q-1), 2^q-1]

OffsetSpec random_offsets(int q, int m, int case_id, Rng& rng,
                          std::optional<MuSelector> mu = std::nullopt, int w = -1);

}  // namespace zacz
