#include "zacz/search.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

namespace zacz {

std::vector<std::pair<long long, long long>> predicted_zones(ZoneFamily family, int m) {
    if (m < 4) throw std::domain_error("zone predictions need m >= 4");
    const long long n = 1LL << m;
    const long long q4 = n / 4;  // 2^{m-2}
    const long long q8 = n / 8;  // 2^{m-3}
    switch (family) {
        case ZoneFamily::A: return {{1, q4}, {3 * q4, n - 1}};
        case ZoneFamily::B: return {{q4, 3 * q4}};
        case ZoneFamily::C: return {{1, q8}, {3 * q8, 5 * q8}, {7 * q8, n - 1}};
    }
    throw std::domain_error("unknown zone family");
}

namespace {

bool zones_covered(const ZaczReport& report,
                   const std::vector<std::pair<long long, long long>>& zones) {
    for (const auto& [lo, hi] : zones)
        if (!report.covers(lo, hi)) return false;
    return true;
}

ZoneCheck check_profile(const CorrProfile& profile, const ConditionId& cond, int m) {
    ZoneCheck out;
    out.cond = cond;
    out.predicted = predicted_zones(family_of(cond.tag), m);
    out.detected = find_zacz(profile);
    out.holds = zones_covered(out.detected, out.predicted);
    return out;
}

}  // namespace

ZoneCheck verify_zones_report(const GolayParams& params, const ConditionId& cond) {
    if (!check_condition(params, cond))
        throw std::domain_error("parameters do not satisfy condition " + to_string(cond.tag));
    return check_profile(periodic_autocorr(generate(params)), cond, params.m);
}

ZoneCheck verify_zones_report(const QamParams& params, const ConditionId& cond) {
    params.validate();
    if (params.offsets.case_id == 3)
        throw std::domain_error("zone claims cover offset cases 1 and 2 only");
    if (!check_condition(params.base, cond))
        throw std::domain_error("parameters do not satisfy condition " + to_string(cond.tag));
    return check_profile(periodic_autocorr(qam_pair(params).first), cond, params.base.m);
}

bool verify_zones(const GolayParams& params, const ConditionId& cond) {
    return verify_zones_report(params, cond).holds;
}

bool verify_zones(const QamParams& params, const ConditionId& cond) {
    return verify_zones_report(params, cond).holds;
}

namespace {

long long sat_mul(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    if (a > LLONG_MAX / b) return LLONG_MAX;
    return a * b;
}

struct OffsetChoice {
    int case_id = 1;
    MuSelector mu = MuSelector::pi1;
    int w = 1;
};

// one (m, H-or-q) cell of the sweep space, with every odometer dimension
// resolved so candidates are addressable by index
struct Block {
    int m = 4;
    int H = 4;
    int q = 0;  // 0 marks a golay block
    std::vector<int> fixed_slots;              // slot -> value, 0 = free
    long long perm_count = 0;
    std::vector<Permutation> perms;            // materialized on demand
    std::vector<std::vector<int>> c_choices;   // per coefficient index 0..m
    std::vector<OffsetChoice> offset_choices;  // qam: flattened case x mu x w
    long long d_combos = 1;                    // per candidate, across levels
    std::optional<OffsetSpec> offsets_fixed;

    long long count() const {
        long long t = perm_count;
        for (const auto& ch : c_choices) t = sat_mul(t, static_cast<long long>(ch.size()));
        if (q > 0) {
            t = sat_mul(t, static_cast<long long>(offset_choices.size()));
            t = sat_mul(t, d_combos);
        }
        return t;
    }
};

long long factorial_sat(int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f = sat_mul(f, i);
    return f;
}

std::vector<int> resolve_pi_fixed(const std::map<int, int>& pi_fixed, int m) {
    std::vector<int> fixed(m + 1, 0);
    std::vector<bool> used(m + 1, false);
    for (const auto& [pos, val] : pi_fixed) {
        const int slot = condition_slot(pos, m);
        if (val < 1 || val > m) throw std::domain_error("pinned permutation value out of range");
        if (fixed[slot] && fixed[slot] != val)
            throw std::domain_error("conflicting permutation position constraints");
        if (fixed[slot]) continue;
        if (used[val]) return {};  // same value pinned twice: empty space
        fixed[slot] = val;
        used[val] = true;
    }
    return fixed;
}

std::vector<Permutation> enumerate_perms(const std::vector<int>& fixed, int m) {
    std::vector<Permutation> out;
    std::vector<int> vals(m);
    for (int k = 0; k < m; ++k) vals[k] = k + 1;
    do {
        bool ok = true;
        for (int slot = 1; slot <= m && ok; ++slot)
            if (fixed[slot] && vals[slot - 1] != fixed[slot]) ok = false;
        if (ok) out.push_back(Permutation{vals});
    } while (std::next_permutation(vals.begin(), vals.end()));
    return out;
}

std::vector<int> coefficient_choices(const SearchSpec& spec, int k, int H) {
    if (auto it = spec.c_fixed.find(k); it != spec.c_fixed.end()) {
        const int v = mod_reduce(it->second, H);
        if (k == 1 && spec.require_2c1_zero && mod_reduce(2LL * v, H) != 0) return {};
        return {v};
    }
    std::vector<int> out;
    for (int v = 0; v < H; ++v) {
        if (k == 1 && spec.require_2c1_zero && mod_reduce(2LL * v, H) != 0) continue;
        out.push_back(v);
    }
    return out;
}

std::vector<MuSelector> legal_mu(const SearchSpec& spec, int case_id) {
    if (case_id == 1) return {MuSelector::pi1};
    if (case_id == 2) return {MuSelector::pim};
    if (!spec.mu_values.empty()) return spec.mu_values;
    return {MuSelector::pi1, MuSelector::pim};
}

std::vector<Block> build_blocks(const SearchSpec& spec) {
    if (spec.m_values.empty()) throw std::domain_error("sweep needs at least one m");
    for (int m : spec.m_values)
        if (m < 4) throw std::domain_error("sweeps classify conditions; m must be >= 4");
    std::vector<Block> blocks;
    const std::vector<int>& outer =
        spec.kind == SweepKind::golay ? spec.H_values : spec.q_values;
    if (outer.empty()) throw std::domain_error("sweep needs at least one H (or q)");
    for (int m : spec.m_values) {
        const std::vector<int> fixed = resolve_pi_fixed(spec.pi_fixed, m);
        for (int hq : outer) {
            Block b;
            b.m = m;
            b.H = spec.kind == SweepKind::golay ? hq : 4;
            b.q = spec.kind == SweepKind::golay ? 0 : hq;
            b.fixed_slots = fixed;
            if (fixed.empty()) {
                b.perm_count = 0;
            } else {
                int pinned = 0;
                for (int slot = 1; slot <= m; ++slot) pinned += fixed[slot] != 0;
                b.perm_count = factorial_sat(m - pinned);
            }
            for (int k = 0; k <= m; ++k)
                b.c_choices.push_back(coefficient_choices(spec, k, b.H));
            if (b.q > 0) {
                if (spec.offsets_fixed) {
                    b.offsets_fixed = spec.offsets_fixed;
                    b.offset_choices.push_back({spec.offsets_fixed->case_id,
                                                spec.offsets_fixed->mu, spec.offsets_fixed->w});
                    b.d_combos = 1;
                } else {
                    for (int case_id : spec.cases) {
                        std::vector<int> ws{0};
                        if (case_id == 3) {
                            ws.clear();
                            if (spec.w_values.empty()) {
                                for (int w = 1; w < m; ++w) ws.push_back(w);
                            } else {
                                for (int w : spec.w_values)
                                    if (w >= 1 && w < m) ws.push_back(w);
                            }
                        }
                        for (MuSelector mu : legal_mu(spec, case_id))
                            for (int w : ws) b.offset_choices.push_back({case_id, mu, w});
                    }
                    // 16 free (d0, d1) pairs per level; case 3's d2 is forced
                    b.d_combos = 1;
                    for (int e = 1; e < b.q; ++e) b.d_combos = sat_mul(b.d_combos, 16);
                }
            }
            blocks.push_back(std::move(b));
        }
    }
    return blocks;
}

OffsetSpec decode_offsets(const Block& b, long long off_idx, long long d_idx) {
    if (b.offsets_fixed) return *b.offsets_fixed;
    const OffsetChoice& ch = b.offset_choices[off_idx];
    OffsetSpec off;
    off.case_id = ch.case_id;
    off.mu = ch.mu;
    off.w = ch.case_id == 3 ? ch.w : 1;
    for (int e = b.q - 1; e >= 1; --e) {
        const int combo = static_cast<int>(d_idx % 16);
        d_idx /= 16;
        const int d0 = combo / 4;
        const int d1 = combo % 4;
        std::vector<int> row{d0, d1};
        if (ch.case_id == 3) row.push_back(mod_reduce(-2LL * d0 - d1, 4));
        off.d.insert(off.d.begin(), std::move(row));
    }
    return off;
}

struct Candidate {
    GolayParams base;
    std::optional<QamParams> qam;
};

Candidate decode(const Block& b, long long idx) {
    Candidate cand;
    long long t = idx;
    long long d_idx = 0, off_idx = 0;
    if (b.q > 0) {
        d_idx = t % b.d_combos;
        t /= b.d_combos;
        off_idx = t % static_cast<long long>(b.offset_choices.size());
        t /= static_cast<long long>(b.offset_choices.size());
    }
    GolayParams& p = cand.base;
    p.m = b.m;
    p.H = b.H;
    p.c.resize(b.m + 1);
    for (int k = b.m; k >= 0; --k) {
        const auto& ch = b.c_choices[k];
        p.c[k] = ch[t % static_cast<long long>(ch.size())];
        t /= static_cast<long long>(ch.size());
    }
    p.pi = b.perms[t];
    if (b.q > 0) {
        QamParams qp;
        qp.q = b.q;
        qp.base = p;
        qp.offsets = decode_offsets(b, off_idx, d_idx);
        cand.qam = std::move(qp);
    }
    return cand;
}

SearchResult evaluate(const Candidate& cand, CondContext ctx) {
    SearchResult r;
    r.base = cand.base;
    r.qam = cand.qam;
    const CorrProfile profile = cand.qam
        ? periodic_autocorr(qam_pair(*cand.qam).first)
        : periodic_autocorr(generate(cand.base));
    r.zacz = find_zacz(profile);
    for (CondTag tag : kAllTags)
        if (check_condition(cand.base, {tag, ctx})) r.conditions.push_back(tag);
    for (CondTag tag : r.conditions)
        if (!zones_covered(r.zacz, predicted_zones(family_of(tag), cand.base.m))) {
            r.agrees = false;
            break;
        }
    return r;
}

bool satisfies_filter(const Candidate& cand, const std::optional<ConditionId>& cond) {
    return !cond || check_condition(cand.base, *cond);
}

Candidate draw_candidate(const SearchSpec& spec, Rng& rng) {
    Candidate cand;
    GolayParams& p = cand.base;
    p.m = spec.m_values[rng.below(spec.m_values.size())];
    const std::vector<int>& outer =
        spec.kind == SweepKind::golay ? spec.H_values : spec.q_values;
    const int hq = outer[rng.below(outer.size())];
    p.H = spec.kind == SweepKind::golay ? hq : 4;

    const std::vector<int> fixed = resolve_pi_fixed(spec.pi_fixed, p.m);
    if (fixed.empty()) throw std::domain_error("position constraints admit no permutation");
    std::vector<bool> used(p.m + 1, false);
    for (int slot = 1; slot <= p.m; ++slot)
        if (fixed[slot]) used[fixed[slot]] = true;
    std::vector<int> free_vals;
    for (int v = 1; v <= p.m; ++v)
        if (!used[v]) free_vals.push_back(v);
    rng.shuffle(free_vals);
    p.pi.map.resize(p.m);
    size_t next = 0;
    for (int slot = 1; slot <= p.m; ++slot)
        p.pi.map[slot - 1] = fixed[slot] ? fixed[slot] : free_vals[next++];

    p.c.resize(p.m + 1);
    for (int k = 0; k <= p.m; ++k) {
        const std::vector<int> ch = coefficient_choices(spec, k, p.H);
        if (ch.empty()) throw std::domain_error("coefficient constraints admit no value");
        p.c[k] = ch[rng.below(ch.size())];
    }

    if (spec.kind == SweepKind::qam) {
        QamParams qp;
        qp.q = hq;
        qp.base = p;
        if (spec.offsets_fixed) {
            qp.offsets = *spec.offsets_fixed;
        } else {
            if (spec.cases.empty()) throw std::domain_error("sweep needs at least one offset case");
            const int case_id = spec.cases[rng.below(spec.cases.size())];
            const auto mus = legal_mu(spec, case_id);
            const MuSelector mu = mus[rng.below(mus.size())];
            int w = 1;
            if (case_id == 3) {
                std::vector<int> ws;
                if (spec.w_values.empty()) {
                    for (int v = 1; v < p.m; ++v) ws.push_back(v);
                } else {
                    for (int v : spec.w_values)
                        if (v >= 1 && v < p.m) ws.push_back(v);
                }
                if (ws.empty()) throw std::domain_error("no legal w position for case 3");
                w = ws[rng.below(ws.size())];
            }
            qp.offsets = random_offsets(qp.q, p.m, case_id, rng, mu, w);
        }
        cand.qam = std::move(qp);
    }
    return cand;
}

}  // namespace

long long sweep_cardinality(const SearchSpec& spec) {
    long long total = 0;
    for (const Block& b : build_blocks(spec)) {
        const long long c = b.count();
        total = total > LLONG_MAX - c ? LLONG_MAX : total + c;
    }
    return total;
}

void sweep(const SearchSpec& spec, const std::function<void(const SearchResult&)>& emit) {
    const CondContext ctx =
        spec.kind == SweepKind::golay ? CondContext::golay : CondContext::qam;

    if (!spec.exhaustive) {
        if (spec.samples < 1) throw std::domain_error("sampled mode needs samples >= 1");
        for (int m : spec.m_values)
            if (m < 4) throw std::domain_error("sweeps classify conditions; m must be >= 4");
        Rng rng(spec.seed);
        std::vector<Candidate> cands;
        cands.reserve(spec.samples);
        for (long long s = 0; s < spec.samples; ++s) {
            bool found = false;
            for (long long attempt = 0; attempt < 1'000'000; ++attempt) {
                Candidate cand = draw_candidate(spec, rng);
                if (satisfies_filter(cand, spec.cond)) {
                    cands.push_back(std::move(cand));
                    found = true;
                    break;
                }
            }
            if (!found)
                throw std::domain_error("condition filter rejected 10^6 consecutive draws");
        }
        std::vector<SearchResult> results(cands.size());
#pragma omp parallel for schedule(dynamic, 8)
        for (long long j = 0; j < static_cast<long long>(cands.size()); ++j)
            results[j] = evaluate(cands[j], ctx);
        for (const SearchResult& r : results) emit(r);
        return;
    }

    std::vector<Block> blocks = build_blocks(spec);
    long long total = 0;
    for (const Block& b : blocks) total += b.count();
    if (total > spec.cap) {
        std::ostringstream msg;
        msg << "exhaustive sweep would enumerate " << total << " candidates, over the cap of "
            << spec.cap;
        throw std::domain_error(msg.str());
    }

    constexpr long long kChunk = 8192;
    for (Block& b : blocks) {
        const long long count = b.count();
        if (count == 0) continue;
        b.perms = enumerate_perms(b.fixed_slots, b.m);
        std::vector<signed char> keep(kChunk);
        std::vector<SearchResult> buf(kChunk);
        for (long long start = 0; start < count; start += kChunk) {
            const long long len = std::min(kChunk, count - start);
#pragma omp parallel for schedule(dynamic, 16)
            for (long long j = 0; j < len; ++j) {
                const Candidate cand = decode(b, start + j);
                keep[j] = satisfies_filter(cand, spec.cond);
                if (keep[j]) buf[j] = evaluate(cand, ctx);
            }
            for (long long j = 0; j < len; ++j)
                if (keep[j]) emit(buf[j]);
        }
    }
}

std::vector<SearchResult> sweep_collect(const SearchSpec& spec) {
    std::vector<SearchResult> out;
    sweep(spec, [&](const SearchResult& r) { out.push_back(r); });
    return out;
}

bool AuditReport::all_pass() const {
    for (const AuditRow& row : rows)
        if (!row.pass()) return false;
    return true;
}

AuditReport condition_audit(int m, int H, int mutated_row, uint64_t seed) {
    if (m < 4 || m > 7)
        throw std::domain_error("audit enumerates permutations exhaustively; m must be 4..7");
    if (H < 2 || H % 2 != 0) throw std::domain_error("H must be even and >= 2");
    if (mutated_row < -1 || mutated_row > 15) throw std::domain_error("row index out of range");

    AuditReport report;
    report.m = m;
    report.H = H;
    report.mutated_row = mutated_row;
    const int free_samples = 6;

    for (int r = 0; r < 16; ++r) {
        AuditRow row;
        row.tag = kAuditOrder[r];
        const ZoneFamily family = family_of(row.tag);
        row.zones = predicted_zones(family, m);
        if (r == mutated_row) {
            // widening any stated zone by one step must be caught
            const size_t z = family == ZoneFamily::C ? 1 : 0;
            row.zones[z].second += 1;
        }

        std::vector<int> fixed(m + 1, 0);
        for (auto [pos, want] : condition_shape(row.tag).positions) {
            int slot = condition_slot(pos, m);
            if (is_primed(row.tag)) slot = m + 1 - slot;
            fixed[slot] = want;
        }
        const std::vector<Permutation> perms = enumerate_perms(fixed, m);
        const auto pairs = valid_c12(row.tag, CondContext::golay, H);

        Rng rng(seed + static_cast<uint64_t>(r) * 0x9e3779b97f4a7c15ULL);
        std::vector<GolayParams> instances;
        for (const Permutation& pi : perms)
            for (const auto& [c1, c2] : pairs)
                for (int s = 0; s < free_samples; ++s) {
                    GolayParams p;
                    p.m = m;
                    p.H = H;
                    p.pi = pi;
                    p.c.resize(m + 1);
                    for (int k = 0; k <= m; ++k) p.c[k] = static_cast<int>(rng.below(H));
                    p.c[1] = c1;
                    p.c[2] = c2;
                    instances.push_back(std::move(p));
                }

        row.instances = static_cast<long long>(instances.size());
        long long failures = 0;
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : failures)
        for (long long j = 0; j < static_cast<long long>(instances.size()); ++j) {
            const CorrProfile profile = periodic_autocorr(generate(instances[j]));
            const double tol = profile.exact ? 0.0 : default_tol(profile.n());
            bool ok = true;
            for (const auto& [lo, hi] : row.zones)
                for (long long tau = lo; tau <= hi && ok; ++tau)
                    if (!profile.is_zero(tau, tol)) ok = false;
            failures += !ok;
        }
        row.failures = failures;
        report.rows.push_back(std::move(row));
    }
    return report;
}

SyncDemoResult run_sync_demo(const SyncDemoSpec& spec) {
    if (spec.trials < 1) throw std::domain_error("need at least one trial");
    if (spec.noise_sigma < 0.0) throw std::domain_error("noise deviation must be nonnegative");
    const long long n = 1LL << spec.m;
    if (spec.delay >= n) throw std::domain_error("delay must be below 2^m");

    long long bound;  // delays the zone argument guarantees
    switch (family_of(spec.cond.tag)) {
        case ZoneFamily::C: bound = 1LL << (spec.m - 3); break;
        default: bound = 1LL << (spec.m - 2); break;
    }

    Rng rng(spec.seed);
    SyncDemoResult out;
    out.trials = spec.trials;
    const double comp_sigma = spec.noise_sigma / std::sqrt(2.0);  // per component
    for (int t = 0; t < spec.trials; ++t) {
        const GolayParams params = random_satisfying(spec.m, spec.H, spec.cond, rng);
        const std::vector<std::complex<double>> ref = generate(params).to_complex();
        const long long d =
            spec.delay >= 0 ? spec.delay : static_cast<long long>(rng.below(bound));
        std::vector<std::complex<double>> received(n);
        for (long long i = 0; i < n; ++i) {
            received[i] = ref[((i - d) % n + n) % n];
            if (spec.noise_sigma > 0.0)
                received[i] += std::complex<double>(rng.normal(comp_sigma), rng.normal(comp_sigma));
        }
        const long long est = estimate_delay(ref, received, n);
        out.true_delays.push_back(d);
        out.estimates.push_back(est);
        out.correct += est == d;
    }
    return out;
}

}  // namespace zacz
