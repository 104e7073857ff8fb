#include "zacz/golay.hpp"

#include <algorithm>
#include <stdexcept>

namespace zacz {

bool Permutation::valid() const {
    const int m = size();
    std::vector<bool> seen(m + 1, false);
    for (int v : map) {
        if (v < 1 || v > m || seen[v]) return false;
        seen[v] = true;
    }
    return m > 0;
}

Permutation Permutation::mirrored() const {
    Permutation out;
    out.map.assign(map.rbegin(), map.rend());
    return out;
}

void GolayParams::validate() const {
    if (m < 1 || m > 62) throw std::domain_error("m out of range");
    if (H < 2 || H % 2 != 0) throw std::domain_error("H must be even and >= 2");
    if (pi.size() != m || !pi.valid())
        throw std::domain_error("pi must be a permutation of 1..m");
    if (static_cast<int>(c.size()) != m + 1)
        throw std::domain_error("c must have m+1 entries (c_0..c_m)");
}

GolayParams GolayParams::identity(int m, int H) {
    GolayParams p;
    p.m = m;
    p.H = H;
    p.pi.map.resize(m);
    for (int k = 1; k <= m; ++k) p.pi.map[k - 1] = k;
    p.c.assign(m + 1, 0);
    return p;
}

std::vector<std::complex<double>> PhaseSeq::to_complex() const {
    std::vector<std::complex<double>> out(values.size());
    for (size_t i = 0; i < values.size(); ++i) out[i] = root_to_complex(values[i], H).value();
    return out;
}

PhaseSeq generate(const GolayParams& params) {
    params.validate();
    const int m = params.m;
    const int H = params.H;
    const long long n = params.n();
    PhaseSeq seq;
    seq.H = H;
    seq.values.resize(n);
    for (long long i = 0; i < n; ++i) {
        long long acc = params.c[0];
        for (int k = 1; k < m; ++k)
            acc += (H / 2) * bit_msb(i, m, params.pi(k)) * bit_msb(i, m, params.pi(k + 1));
        for (int k = 1; k <= m; ++k) acc += static_cast<long long>(params.c[k]) * bit_msb(i, m, k);
        seq.values[i] = mod_reduce(acc, H);
    }
    return seq;
}

std::pair<PhaseSeq, PhaseSeq> golay_pair(const GolayParams& params, int c_prime) {
    PhaseSeq a = generate(params);
    PhaseSeq b = a;
    const int m = params.m;
    const int H = params.H;
    for (long long i = 0; i < a.n(); ++i)
        b.values[i] = mod_reduce(a.values[i] + (H / 2LL) * bit_msb(i, m, params.pi(1)) + c_prime, H);
    return {std::move(a), std::move(b)};
}

bool is_primed(CondTag tag) { return static_cast<int>(tag) >= 8; }

CondTag unprimed(CondTag tag) {
    return is_primed(tag) ? static_cast<CondTag>(static_cast<int>(tag) - 8) : tag;
}

ZoneFamily family_of(CondTag tag) {
    switch (unprimed(tag)) {
        case CondTag::A1:
        case CondTag::A2:
        case CondTag::A3: return ZoneFamily::A;
        case CondTag::B: return ZoneFamily::B;
        default: return ZoneFamily::C;
    }
}

std::string to_string(CondTag tag) {
    static const char* base[] = {"A1", "A2", "A3", "B", "C1", "C2", "C3", "C4"};
    std::string s = base[static_cast<int>(unprimed(tag))];
    if (is_primed(tag)) s += "'";
    return s;
}

CondTag tag_from_string(const std::string& s) {
    for (CondTag tag : kAllTags) {
        const std::string name = to_string(tag);
        if (s == name) return tag;
        // accept "A1p" as an ASCII-friendly spelling of "A1'"
        if (is_primed(tag) && s == name.substr(0, name.size() - 1) + "p") return tag;
    }
    throw std::invalid_argument("unknown condition tag: " + s);
}

const ConditionShape& condition_shape(CondTag tag) {
    static const std::array<ConditionShape, 8> shapes = {{
        {{{1, 1}, {2, 2}}, AffineKind::free_c1},                  // A1
        {{{2, 2}, {3, 1}, {4, 3}}, AffineKind::c1_eq_2c2},        // A2
        {{{1, 2}, {2, 1}, {3, 3}}, AffineKind::c1_eq_2c2_plus_t}, // A3
        {{{1, 2}, {2, 1}, {3, 3}}, AffineKind::c1_eq_2c2},        // B
        {{{1, 1}, {2, 3}, {3, 2}}, AffineKind::free_c1},          // C1
        {{{1, 1}, {2, 3}, {-1, 2}}, AffineKind::free_c1},         // C2
        {{{1, 2}, {2, 4}, {3, 1}, {4, 3}}, AffineKind::c1_eq_2c2},// C3
        {{{1, 2}, {2, 3}, {3, 1}, {4, 4}}, AffineKind::c1_eq_2c2},// C4
    }};
    return shapes[static_cast<int>(unprimed(tag))];
}

int condition_slot(int position, int m) {
    int slot = position > 0 ? position : m + 1 + position;
    if (slot < 1 || slot > m) throw std::domain_error("condition position out of range");
    return slot;
}

namespace {

int affine_t(CondContext ctx, int H) { return ctx == CondContext::qam ? 2 : H / 2; }

bool affine_ok(AffineKind kind, CondContext ctx, int H, int c1, int c2) {
    if (mod_reduce(2LL * c1, H) != 0) return false;
    switch (kind) {
        case AffineKind::free_c1: return true;
        case AffineKind::c1_eq_2c2: return mod_reduce(c1 - 2LL * c2, H) == 0;
        case AffineKind::c1_eq_2c2_plus_t:
            return mod_reduce(c1 - 2LL * c2 - affine_t(ctx, H), H) == 0;
    }
    return false;
}

}  // namespace

bool check_condition(const GolayParams& params, const ConditionId& cond) {
    params.validate();
    if (params.m < 4) throw std::domain_error("conditions are defined for m >= 4");
    const ConditionShape& shape = condition_shape(cond.tag);
    const int m = params.m;
    for (auto [pos, want] : shape.positions) {
        int slot = condition_slot(pos, m);
        if (is_primed(cond.tag)) slot = m + 1 - slot;
        if (params.pi(slot) != want) return false;
    }
    const int c1 = mod_reduce(params.c[1], params.H);
    const int c2 = mod_reduce(params.c[2], params.H);
    return affine_ok(shape.affine, cond.context, params.H, c1, c2);
}

std::vector<ConditionId> enumerate_conditions(const GolayParams& params) {
    std::vector<ConditionId> out;
    for (CondContext ctx : {CondContext::golay, CondContext::qam})
        for (CondTag tag : kAllTags)
            if (check_condition(params, {tag, ctx})) out.push_back({tag, ctx});
    return out;
}

std::vector<std::pair<int, int>> valid_c12(CondTag tag, CondContext ctx, int H) {
    std::vector<std::pair<int, int>> out;
    const AffineKind kind = condition_shape(tag).affine;
    for (int c1 = 0; c1 < H; ++c1)
        for (int c2 = 0; c2 < H; ++c2)
            if (affine_ok(kind, ctx, H, c1, c2)) out.emplace_back(c1, c2);
    return out;
}

GolayParams random_satisfying(int m, int H, const ConditionId& cond, Rng& rng) {
    if (m < 4) throw std::domain_error("conditions are defined for m >= 4");
    GolayParams p = GolayParams::identity(m, H);

    std::vector<int> fixed(m + 1, 0);  // slot -> forced value, 0 = free
    std::vector<bool> used(m + 1, false);
    for (auto [pos, want] : condition_shape(cond.tag).positions) {
        int slot = condition_slot(pos, m);
        if (is_primed(cond.tag)) slot = m + 1 - slot;
        fixed[slot] = want;
        used[want] = true;
    }
    std::vector<int> free_vals;
    for (int v = 1; v <= m; ++v)
        if (!used[v]) free_vals.push_back(v);
    rng.shuffle(free_vals);
    size_t next = 0;
    for (int slot = 1; slot <= m; ++slot)
        p.pi.map[slot - 1] = fixed[slot] ? fixed[slot] : free_vals[next++];

    const auto pairs = valid_c12(cond.tag, cond.context, H);
    const auto [c1, c2] = pairs[rng.below(pairs.size())];
    for (int k = 0; k <= m; ++k) p.c[k] = static_cast<int>(rng.below(H));
    p.c[1] = c1;
    p.c[2] = c2;
    return p;
}

}  // namespace zacz
