// Command-line front end: sequence generation, correlation profiles, zone
// verification, parameter sweeps, the condition/zone audit, and a
// synchronization demo. Exit codes: 0 success, 1 verification failure,
// 2 usage or domain error.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "zacz/correlation.hpp"
#include "zacz/golay.hpp"
#include "zacz/io.hpp"
#include "zacz/qam.hpp"
#include "zacz/search.hpp"

namespace {

using namespace zacz;

struct ParamFlags {
    int m = -1;
    int H = -1;
    int q = -1;
    std::string pi;
    std::string c;
    std::string json;
    std::string offsets_file;
};

void add_param_flags(CLI::App* cmd, ParamFlags& f, bool with_qam) {
    cmd->add_option("--m", f.m, "number of index bits (length 2^m)");
    cmd->add_option("--H", f.H, "phase order (even)");
    cmd->add_option("--pi", f.pi, "permutation: array '4,2,1,3,5' or cycles '(143)'");
    cmd->add_option("--c", f.c, "affine coefficients c_0..c_m");
    cmd->add_option("--json", f.json, "JSON parameter (or sequence) file, '-' for stdin");
    if (with_qam) {
        cmd->add_option("--q", f.q, "QAM order exponent (4^q points)");
        cmd->add_option("--offsets-file", f.offsets_file, "JSON offset block for QAM levels");
    }
}

GolayParams golay_from_flags(const ParamFlags& f, int default_H) {
    if (f.m < 1) throw std::invalid_argument("--m is required (or pass --json)");
    GolayParams p = GolayParams::identity(f.m, f.H > 0 ? f.H : default_H);
    if (!f.pi.empty()) p.pi = parse_permutation(f.pi, f.m);
    if (!f.c.empty()) {
        p.c = parse_int_list(f.c);
        if (static_cast<int>(p.c.size()) != f.m + 1)
            throw std::invalid_argument("--c needs exactly m+1 entries (c_0..c_m)");
        for (int& v : p.c) v = mod_reduce(v, p.H);
    }
    p.validate();
    return p;
}

GolayParams load_golay(const ParamFlags& f, int default_H = 2) {
    if (!f.json.empty()) return golay_params_from_json(load_json_file(f.json));
    return golay_from_flags(f, default_H);
}

QamParams load_qam(const ParamFlags& f) {
    if (!f.json.empty()) return qam_params_from_json(load_json_file(f.json));
    QamParams p;
    p.base = golay_from_flags(f, 4);
    p.q = f.q > 0 ? f.q : 2;
    if (f.offsets_file.empty())
        throw std::invalid_argument("QAM parameters need --offsets-file or --json");
    p.offsets = offsets_from_json(load_json_file(f.offsets_file));
    p.validate();
    return p;
}

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot write: " + path);
    return file;
}

std::pair<long long, long long> parse_tau_range(const std::string& text, long long n) {
    if (text.empty()) return {0, n - 1};
    const size_t sep = text.find_first_of(":,");
    if (sep == std::string::npos) throw std::invalid_argument("--tau-range wants lo:hi");
    return {std::stoll(text.substr(0, sep)), std::stoll(text.substr(sep + 1))};
}

int run_generate(const ParamFlags& f, const std::string& format, const std::string& out_path) {
    const GolayParams params = load_golay(f);
    const PhaseSeq seq = generate(params);
    std::ofstream file;
    std::ostream& out = open_sink(out_path, file);
    if (format == "json") {
        Json j = to_json(seq);
        j["params"] = to_json(params);
        out << j.dump(2) << '\n';
    } else {
        out << "i,value\n";
        for (long long i = 0; i < seq.n(); ++i) out << i << ',' << seq.values[i] << '\n';
    }
    return 0;
}

int run_pair(const ParamFlags& f, int c_prime, const std::string& format,
             const std::string& out_path) {
    const GolayParams params = load_golay(f);
    const auto [a, b] = golay_pair(params, c_prime);
    std::ofstream file;
    std::ostream& out = open_sink(out_path, file);
    if (format == "json") {
        Json j{{"params", to_json(params)}, {"c_prime", c_prime}, {"a", to_json(a)},
               {"b", to_json(b)}};
        out << j.dump(2) << '\n';
    } else {
        out << "i,a,b\n";
        for (long long i = 0; i < a.n(); ++i)
            out << i << ',' << a.values[i] << ',' << b.values[i] << '\n';
    }
    return 0;
}

int run_qam(const ParamFlags& f, const std::string& format, const std::string& out_path) {
    const QamParams params = load_qam(f);
    const auto [a, b] = qam_pair(params);
    std::ofstream file;
    std::ostream& out = open_sink(out_path, file);
    if (format == "json") {
        Json j{{"params", to_json(params)}, {"a", to_json(a)}, {"b", to_json(b)}};
        out << j.dump(2) << '\n';
    } else {
        const auto av = a.to_complex();
        const auto bv = b.to_complex();
        out << "i,a_re,a_im,b_re,b_im\n";
        for (size_t i = 0; i < av.size(); ++i)
            out << i << ',' << av[i].real() << ',' << av[i].imag() << ',' << bv[i].real() << ','
                << bv[i].imag() << '\n';
    }
    return 0;
}

CorrProfile profile_of_input(const ParamFlags& f, bool periodic) {
    Json j;
    if (!f.json.empty()) {
        j = load_json_file(f.json);
    } else if (f.m > 0) {
        const GolayParams params = golay_from_flags(f, 2);
        const PhaseSeq seq = generate(params);
        return periodic ? periodic_autocorr(seq) : aperiodic_autocorr(seq);
    } else {
        j = load_json_file("-");
    }
    if (looks_like_sequence(j)) {
        if (j.contains("core")) {
            const ComplexSeq seq = complex_seq_from_json(j);
            return periodic ? periodic_autocorr(seq) : aperiodic_autocorr(seq);
        }
        const PhaseSeq seq = phase_seq_from_json(j);
        return periodic ? periodic_autocorr(seq) : aperiodic_autocorr(seq);
    }
    if (looks_like_qam_params(j)) {
        const ComplexSeq seq = qam_pair(qam_params_from_json(j)).first;
        return periodic ? periodic_autocorr(seq) : aperiodic_autocorr(seq);
    }
    const PhaseSeq seq = generate(golay_params_from_json(j));
    return periodic ? periodic_autocorr(seq) : aperiodic_autocorr(seq);
}

int run_correlate(const ParamFlags& f, bool periodic, const std::string& tau_range,
                  const std::string& format, const std::string& out_path) {
    const CorrProfile profile = profile_of_input(f, periodic);
    const auto [lo, hi] = parse_tau_range(tau_range, profile.n());
    std::ofstream file;
    std::ostream& out = open_sink(out_path, file);
    if (format == "json")
        out << profile_to_json(profile, lo, hi).dump(2) << '\n';
    else
        write_profile_csv(out, profile, lo, hi);
    return 0;
}

int run_verify(const ParamFlags& f, const std::string& cond_name, const std::string& format,
               const std::string& out_path) {
    const CondTag tag = tag_from_string(cond_name);
    bool qam_input = f.q > 0 || !f.offsets_file.empty();
    Json j;
    if (!f.json.empty()) {
        j = load_json_file(f.json);
        qam_input = looks_like_qam_params(j);
    }
    ZoneCheck check;
    if (qam_input) {
        const QamParams params = f.json.empty() ? load_qam(f) : qam_params_from_json(j);
        check = verify_zones_report(params, {tag, CondContext::qam});
    } else {
        const GolayParams params = f.json.empty() ? load_golay(f) : golay_params_from_json(j);
        check = verify_zones_report(params, {tag, CondContext::golay});
    }
    std::ofstream file;
    std::ostream& out = open_sink(out_path, file);
    if (format == "json") {
        out << to_json(check).dump(2) << '\n';
    } else {
        out << "condition " << to_string(check.cond.tag)
            << (check.cond.context == CondContext::qam ? " (qam)" : " (golay)") << '\n';
        out << "predicted zones:";
        for (const auto& [lo, hi] : check.predicted) out << " [" << lo << ',' << hi << ']';
        out << "\ndetected zones:";
        for (const auto& [lo, hi] : check.detected.intervals) out << " [" << lo << ',' << hi << ']';
        out << "\nverdict: " << (check.holds ? "zones hold" : "ZONE VIOLATION") << '\n';
    }
    return check.holds ? 0 : 1;
}

int run_search(const std::string& spec_file, const std::string& out_path) {
    if (spec_file.empty()) throw std::invalid_argument("search needs --json <spec file>");
    const SearchSpec spec = search_spec_from_json(load_json_file(spec_file));
    std::ofstream file;
    std::ostream& out = open_sink(out_path, file);
    sweep(spec, [&](const SearchResult& r) { out << to_json(r).dump() << '\n'; });
    return 0;
}

int run_audit(int m, int H, int mutate_row, uint64_t seed, const std::string& format,
              const std::string& out_path) {
    const AuditReport report = condition_audit(m, H, mutate_row, seed);
    std::ofstream file;
    std::ostream& out = open_sink(out_path, file);
    if (format == "json") {
        out << to_json(report).dump(2) << '\n';
    } else {
        out << "audit m=" << report.m << " H=" << report.H;
        if (report.mutated_row >= 0) out << " mutated_row=" << report.mutated_row;
        out << '\n';
        for (const AuditRow& row : report.rows) {
            out << to_string(row.tag) << (to_string(row.tag).size() < 3 ? "  " : " ") << "zones";
            for (const auto& [lo, hi] : row.zones) out << " [" << lo << ',' << hi << ']';
            out << "  instances " << row.instances << "  failures " << row.failures << "  "
                << (row.pass() ? "pass" : "FAIL") << '\n';
        }
        out << (report.all_pass() ? "all rows pass" : "some rows FAILED") << '\n';
    }
    return report.all_pass() ? 0 : 1;
}

int run_sync_demo(int m, int H, const std::string& cond_name, long long delay, double noise,
                  uint64_t seed, int trials, const std::string& format,
                  const std::string& out_path) {
    SyncDemoSpec spec;
    spec.m = m;
    spec.H = H;
    spec.cond = {tag_from_string(cond_name), CondContext::golay};
    spec.delay = delay;
    spec.noise_sigma = noise;
    spec.seed = seed;
    spec.trials = trials;
    const SyncDemoResult result = run_sync_demo(spec);
    std::ofstream file;
    std::ostream& out = open_sink(out_path, file);
    if (format == "json") {
        Json j{{"trials", result.trials},
               {"correct", result.correct},
               {"true_delays", result.true_delays},
               {"estimates", result.estimates}};
        out << j.dump(2) << '\n';
    } else {
        out << "recovered " << result.correct << '/' << result.trials << " delays (m=" << m
            << ", sigma=" << noise << ")\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Golay and QAM Golay sequence toolkit: construction, correlation, zero-zone "
                 "verification, search"};
    app.require_subcommand(1);

    ParamFlags gen_f, pair_f, qam_f, corr_f, verify_f;
    std::string out_path;
    const auto add_out = [&out_path](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "output path (default stdout)");
    };

    CLI::App* gen = app.add_subcommand("generate", "emit one sequence");
    add_out(gen);
    add_param_flags(gen, gen_f, false);
    std::string gen_format = "json";
    gen->add_option("--format", gen_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    CLI::App* pair = app.add_subcommand("pair", "emit a complementary pair");
    add_out(pair);
    add_param_flags(pair, pair_f, false);
    int c_prime = 0;
    pair->add_option("--c-prime", c_prime, "constant added to the second sequence");
    std::string pair_format = "json";
    pair->add_option("--format", pair_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    CLI::App* qam = app.add_subcommand("qam", "emit a QAM complementary pair");
    add_out(qam);
    add_param_flags(qam, qam_f, true);
    std::string qam_format = "json";
    qam->add_option("--format", qam_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    CLI::App* corr = app.add_subcommand("correlate", "autocorrelation profile");
    add_out(corr);
    add_param_flags(corr, corr_f, false);
    bool periodic = false, aperiodic = false;
    corr->add_flag("--periodic", periodic, "periodic profile");
    corr->add_flag("--aperiodic", aperiodic, "aperiodic profile (default)");
    std::string tau_range;
    corr->add_option("--tau-range", tau_range, "restrict output rows, lo:hi");
    std::string corr_format = "csv";
    corr->add_option("--format", corr_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    CLI::App* verify = app.add_subcommand("verify", "check predicted zero zones");
    add_out(verify);
    add_param_flags(verify, verify_f, true);
    std::string cond_name;
    verify->add_option("--cond", cond_name, "condition tag, e.g. A1 or C2'")->required();
    std::string verify_format = "text";
    verify->add_option("--format", verify_format, "text or json")->check(
        CLI::IsMember({"text", "json"}));

    CLI::App* search = app.add_subcommand("search", "sweep a parameter space (JSON-lines out)");
    add_out(search);
    std::string spec_file;
    search->add_option("--json", spec_file, "sweep specification file, '-' for stdin");

    CLI::App* audit = app.add_subcommand("audit", "verify all 16 condition/zone rows");
    add_out(audit);
    int audit_m = 4, audit_H = 2, mutate_row = -1;
    uint64_t audit_seed = 0;
    audit->add_option("--m", audit_m, "number of index bits");
    audit->add_option("--H", audit_H, "phase order");
    audit->add_option("--mutate-row", mutate_row, "widen this row's zone to prove detection");
    audit->add_option("--seed", audit_seed, "seed for free coefficients");
    std::string audit_format = "text";
    audit->add_option("--format", audit_format, "text or json")->check(
        CLI::IsMember({"text", "json"}));

    CLI::App* sync = app.add_subcommand("sync-demo", "delay recovery via correlation peak");
    add_out(sync);
    int sync_m = 6, sync_H = 2, trials = 100;
    long long delay = -1;
    double noise = 0.0;
    uint64_t sync_seed = 0;
    std::string sync_cond = "A1";
    sync->add_option("--m", sync_m, "number of index bits");
    sync->add_option("--H", sync_H, "phase order");
    sync->add_option("--cond", sync_cond, "condition family for the reference");
    sync->add_option("--delay", delay, "cyclic delay (default: random per trial)");
    sync->add_option("--noise", noise, "complex noise deviation per sample");
    sync->add_option("--seed", sync_seed, "trial seed");
    sync->add_option("--trials", trials, "number of trials");
    std::string sync_format = "text";
    sync->add_option("--format", sync_format, "text or json")->check(
        CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) return run_generate(gen_f, gen_format, out_path);
        if (*pair) return run_pair(pair_f, c_prime, pair_format, out_path);
        if (*qam) return run_qam(qam_f, qam_format, out_path);
        if (*corr) return run_correlate(corr_f, periodic && !aperiodic, tau_range, corr_format,
                                        out_path);
        if (*verify) return run_verify(verify_f, cond_name, verify_format, out_path);
        if (*search) return run_search(spec_file, out_path);
        if (*audit) return run_audit(audit_m, audit_H, mutate_row, audit_seed, audit_format,
                                     out_path);
        if (*sync) return run_sync_demo(sync_m, sync_H, sync_cond, delay, noise, sync_seed,
                                        trials, sync_format, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
