// Higher-level experiments: zone prediction per condition family, zone
// verification for single instances, exhaustive or sampled parameter sweeps,
// the 16-row condition/zone audit, and the synchronization demo.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "zacz/correlation.hpp"
#include "zacz/golay.hpp"
#include "zacz/qam.hpp"

namespace zacz {

// zone sets over tau in [1, 2^m - 1]:
//   A: [1, 2^{m-2}] u [3*2^{m-2}, 2^m - 1]
//   B: [2^{m-2}, 3*2^{m-2}]
//   C: [1, 2^{m-3}] u [3*2^{m-3}, 5*2^{m-3}] u [7*2^{m-3}, 2^m - 1]
std::vector<std::pair<long long, long long>> predicted_zones(ZoneFamily family, int m);

struct ZoneCheck {
    ConditionId cond;
    std::vector<std::pair<long long, long long>> predicted;
    ZaczReport detected;
    bool holds = false;  // false is a counterexample, not a usage error
};

// requires check_condition(params, cond); QAM offsets must be case 1 or 2
// (the zone claims do not cover case 3)
ZoneCheck verify_zones_report(const GolayParams& params, const ConditionId& cond);
ZoneCheck verify_zones_report(const QamParams& params, const ConditionId& cond);
bool verify_zones(const GolayParams& params, const ConditionId& cond);
bool verify_zones(const QamParams& params, const ConditionId& cond);

enum class SweepKind { golay, qam };

struct SearchSpec {
    SweepKind kind = SweepKind::golay;
    std::vector<int> m_values;
    std::vector<int> H_values{2};  // golay sweeps
    std::vector<int> q_values{2};  // qam sweeps (base H is 4)
    std::optional<ConditionId> cond;  // keep only satisfying instances
    std::map<int, int> pi_fixed;      // position (negative = from end) -> value
    std::map<int, int> c_fixed;       // coefficient index 0..m -> value
    bool require_2c1_zero = false;
    std::vector<int> cases{1, 2, 3};          // qam offset cases in scope
    std::vector<int> w_values;                // case 3 positions; empty = 1..m-1
    std::vector<MuSelector> mu_values;        // empty = every legal choice
    std::optional<OffsetSpec> offsets_fixed;  // pin the whole offset block
    bool exhaustive = true;
    long long samples = 0;  // sampled mode
    uint64_t seed = 0;
    long long cap = 10'000'000;
};

struct SearchResult {
    GolayParams base;
    std::optional<QamParams> qam;  // engaged for qam sweeps
    ZaczReport zacz;               // periodic zones of the generated sequence
    std::vector<CondTag> conditions;  // tags the base parameters satisfy
    bool agrees = true;  // detected zones cover every matched tag's prediction
};

long long sweep_cardinality(const SearchSpec& spec);
void sweep(const SearchSpec& spec, const std::function<void(const SearchResult&)>& emit);
std::vector<SearchResult> sweep_collect(const SearchSpec& spec);

struct AuditRow {
    CondTag tag = CondTag::A1;
    std::vector<std::pair<long long, long long>> zones;  // as audited (post-mutation)
    long long instances = 0;
    long long failures = 0;
    bool pass() const { return instances > 0 && failures == 0; }
};

struct AuditReport {
    int m = 4;
    int H = 2;
    int mutated_row = -1;
    std::vector<AuditRow> rows;
    bool all_pass() const;
};

// rows in tag order A1, A1', A2, A2', ..., C4, C4'; every permutation
// consistent with the row's positions is enumerated (hence m <= 7), crossed
// with every valid (c_1, c_2) and seeded samples of the free coefficients;
// mutated_row widens that row's zone by one to prove the audit can fail
AuditReport condition_audit(int m, int H, int mutated_row = -1, uint64_t seed = 0);

constexpr std::array<CondTag, 16> kAuditOrder = {
    CondTag::A1, CondTag::A1p, CondTag::A2, CondTag::A2p,
    CondTag::A3, CondTag::A3p, CondTag::B,  CondTag::Bp,
    CondTag::C1, CondTag::C1p, CondTag::C2, CondTag::C2p,
    CondTag::C3, CondTag::C3p, CondTag::C4, CondTag::C4p};

struct SyncDemoSpec {
    int m = 6;
    int H = 2;
    ConditionId cond{CondTag::A1, CondContext::golay};
    int trials = 100;
    double noise_sigma = 0.0;  // complex noise, per-sample deviation
    long long delay = -1;      // negative: random per trial within the zone bound
    uint64_t seed = 0;
};

struct SyncDemoResult {
    long long trials = 0;
    long long correct = 0;
    std::vector<long long> true_delays;
    std::vector<long long> estimates;
};

SyncDemoResult run_sync_demo(const SyncDemoSpec& spec);

}  // namespace zacz
