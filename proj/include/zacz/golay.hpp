// H-ary Golay sequences from quadratic generalized Boolean functions:
// a_i = (H/2) * sum_k i_{pi(k)} i_{pi(k+1)} + sum_k c_k i_k + c_0 (mod H),
// complementary pairing, and the permutation/affine condition families that
// guarantee zero autocorrelation zones.
#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "zacz/residue.hpp"
#include "zacz/rng.hpp"

namespace zacz {

struct Permutation {
    std::vector<int> map;  // one-based values: map[k-1] = pi(k)

    int size() const { return static_cast<int>(map.size()); }
    int operator()(int k) const { return map[k - 1]; }
    bool valid() const;
    Permutation mirrored() const;  // pi'(k) = pi(m+1-k)
};

struct GolayParams {
    int m = 4;
    int H = 2;
    Permutation pi;
    std::vector<int> c;  // c[0..m], reduced mod H

    long long n() const { return 1LL << m; }
    // m >= 1 is enough to generate; condition checks additionally need m >= 4
    void validate() const;
    static GolayParams identity(int m, int H);
};

struct PhaseSeq {
    int H = 2;
    std::vector<int> values;

    long long n() const { return static_cast<long long>(values.size()); }
    std::vector<std::complex<double>> to_complex() const;
};

PhaseSeq generate(const GolayParams& params);

// b_i = a_i + (H/2) * i_{pi(1)} + c'  --  complementary for every c'
std::pair<PhaseSeq, PhaseSeq> golay_pair(const GolayParams& params, int c_prime = 0);

enum class CondTag { A1, A2, A3, B, C1, C2, C3, C4, A1p, A2p, A3p, Bp, C1p, C2p, C3p, C4p };
enum class CondContext { golay, qam };  // selects t = H/2 vs t = 2 in the affine constraint
enum class ZoneFamily { A, B, C };

struct ConditionId {
    CondTag tag = CondTag::A1;
    CondContext context = CondContext::golay;
};

constexpr std::array<CondTag, 16> kAllTags = {
    CondTag::A1, CondTag::A2, CondTag::A3, CondTag::B,
    CondTag::C1, CondTag::C2, CondTag::C3, CondTag::C4,
    CondTag::A1p, CondTag::A2p, CondTag::A3p, CondTag::Bp,
    CondTag::C1p, CondTag::C2p, CondTag::C3p, CondTag::C4p};

bool is_primed(CondTag tag);
CondTag unprimed(CondTag tag);
ZoneFamily family_of(CondTag tag);
std::string to_string(CondTag tag);
CondTag tag_from_string(const std::string& s);

enum class AffineKind { free_c1, c1_eq_2c2, c1_eq_2c2_plus_t };

// positional constraints as (position, required value); negative positions
// count from the end (-1 means m), which makes the primed variants the exact
// mirror of the unprimed ones
struct ConditionShape {
    std::vector<std::pair<int, int>> positions;
    AffineKind affine;
};

const ConditionShape& condition_shape(CondTag tag);
int condition_slot(int position, int m);  // resolve a possibly-negative position

// every condition additionally requires 2*c_1 = 0 (mod H)
bool check_condition(const GolayParams& params, const ConditionId& cond);
std::vector<ConditionId> enumerate_conditions(const GolayParams& params);

// all (c_1, c_2) pairs mod H satisfying the condition's affine constraints;
// brute-forced jointly because 2c_1 = 0 and c_1 = 2c_2 (+t) interact for H not
// dividing 4
std::vector<std::pair<int, int>> valid_c12(CondTag tag, CondContext ctx, int H);

// seeded instance satisfying the condition, with unconstrained slots uniform
GolayParams random_satisfying(int m, int H, const ConditionId& cond, Rng& rng);

}  // namespace zacz
