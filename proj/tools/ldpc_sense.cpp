// Command-line front end: matrix construction and inspection, LP decoding,
// sparse recovery, certificate checks, and config-driven Monte Carlo sweeps.

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <ldpcsense/bridge.hpp>
#include <ldpcsense/cclpd.hpp>
#include <ldpcsense/cover.hpp>
#include <ldpcsense/cslpd.hpp>
#include <ldpcsense/experiment.hpp>
#include <ldpcsense/nsp.hpp>
#include <ldpcsense/pseudoweight.hpp>
#include <ldpcsense/rng.hpp>
#include <ldpcsense/tanner.hpp>

namespace {

using namespace ldpcsense;

ConstructionKind kind_from_name(const std::string& name) {
    if (name == "gallager") return ConstructionKind::GallagerRegular;
    if (name == "peg") return ConstructionKind::GirthPeg;
    if (name == "random-col") return ConstructionKind::RandomColumnWeight;
    if (name == "dense-pm1") return ConstructionKind::DensePm1;
    throw CLI::ValidationError("--kind", "unknown construction kind: " + name);
}

std::vector<double> parse_doubles(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

std::vector<std::size_t> parse_sizes(const std::string& csv) {
    std::vector<std::size_t> out;
    for (double d : parse_doubles(csv)) out.push_back(static_cast<std::size_t>(d));
    return out;
}

std::string girth_to_string(const std::optional<std::size_t>& g) {
    return g ? std::to_string(*g) : std::string("infinite");
}

int cmd_construct(const std::string& kind, std::size_t dv, std::size_t dc, std::size_t n,
                  std::uint64_t seed, const std::string& out) {
    ConstructionSpec spec{kind_from_name(kind), dv, dc, n, seed};
    ConstructedMatrix cm = construct(spec);
    if (cm.binary) {
        std::cout << "constructed " << cm.binary->rows() << "x" << cm.binary->cols()
                  << " matrix, girth "
                  << girth_to_string(girth(TannerGraph::from_matrix(*cm.binary))) << "\n";
        if (!out.empty()) {
            write_alist(out, *cm.binary);
            std::cout << "wrote " << out << "\n";
        }
    } else {
        std::size_t zeros = 0, total = 0;
        for (const auto& row : cm.signed_entries)
            for (int x : row) {
                zeros += x == 0;
                ++total;
            }
        std::cout << "constructed " << cm.signed_entries.size() << "x"
                  << cm.signed_entries[0].size() << " signed matrix, zero fraction "
                  << static_cast<double>(zeros) / static_cast<double>(total) << "\n";
        if (!out.empty()) {
            std::ofstream f(out);
            for (const auto& row : cm.signed_entries) {
                for (std::size_t c = 0; c < row.size(); ++c)
                    f << row[c] << (c + 1 < row.size() ? " " : "\n");
            }
            std::cout << "wrote " << out << "\n";
        }
    }
    return 0;
}

int cmd_girth(const std::string& in, bool with_oracle) {
    TannerGraph g = TannerGraph::from_matrix(read_alist(in));
    auto bfs = girth(g);
    std::cout << "girth " << girth_to_string(bfs) << "\n";
    if (with_oracle) {
        auto oracle = girth_trace_oracle(g);
        std::cout << "trace-oracle " << girth_to_string(oracle) << " ("
                  << (oracle == bfs ? "agrees" : "DISAGREES") << ")\n";
        return oracle == bfs ? 0 : 1;
    }
    return 0;
}

int cmd_expand_check(const std::string& in, double gamma, double delta, std::size_t cap) {
    ExpansionReport r = check_expansion(TannerGraph::from_matrix(read_alist(in)), gamma, delta, cap);
    std::cout << "left degree " << r.dv << ", gamma " << gamma << ", delta " << delta << ": "
              << (r.is_expander ? "expander" : "NOT an expander") << "\n";
    if (r.witness) {
        std::cout << "witness S = {";
        for (std::size_t i = 0; i < r.witness->size(); ++i)
            std::cout << (*r.witness)[i] << (i + 1 < r.witness->size() ? "," : "");
        std::cout << "}\n";
    }
    return r.is_expander ? 0 : 1;
}

int cmd_pseudoweight(const std::string& omega_csv, const std::string& in,
                     const std::string& min_kind, std::size_t cap) {
    if (!omega_csv.empty()) {
        WeightReport r = pseudo_weights(parse_doubles(omega_csv));
        std::cout << "awgnc " << r.awgnc << "\nbsc " << r.bsc << "\nbsc_prime " << r.bsc_prime
                  << "\nbec " << r.bec << "\nmaxfrac " << r.maxfrac << "\n";
        return 0;
    }
    Gf2Matrix h = read_alist(in);
    if (min_kind == "maxfrac-lp") {
        std::cout << "min maxfrac weight (LP) " << min_maxfrac_weight(h) << "\n";
        return 0;
    }
    PseudoWeightKind kind = min_kind == "awgnc"       ? PseudoWeightKind::Awgnc
                            : min_kind == "bsc"       ? PseudoWeightKind::Bsc
                            : min_kind == "bsc-prime" ? PseudoWeightKind::BscPrime
                            : min_kind == "bec"       ? PseudoWeightKind::Bec
                                                      : PseudoWeightKind::MaxFrac;
    std::cout << "min " << min_kind << " pseudo-weight " << min_pseudoweight_enumerated(h, kind, cap)
              << "\n";
    return 0;
}

int cmd_nsp_check(const std::string& in, std::size_t k, double c, bool non_strict) {
    Gf2Matrix h = read_alist(in);
    NspCertificate cert = check_nsp_k(h.to_real(), k, c, !non_strict);
    std::cout << (cert.strict ? "strict " : "") << "NSP(k=" << k << ", C=" << c << "): "
              << (cert.holds ? "holds" : "fails") << "\n";
    if (cert.worst_case) {
        std::cout << "worst margin " << cert.worst_case->margin << " at S = {";
        for (std::size_t i = 0; i < cert.worst_case->s.size(); ++i)
            std::cout << cert.worst_case->s[i] << (i + 1 < cert.worst_case->s.size() ? "," : "");
        std::cout << "}\n";
    }
    return cert.holds ? 0 : 1;
}

int cmd_decode_cc(const std::string& in, const std::string& channel, double param,
                  const std::string& llr_csv, std::uint64_t seed) {
    Gf2Matrix h = read_alist(in);
    LlrVector l;
    if (!llr_csv.empty()) {
        l.lambda = parse_doubles(llr_csv);
    } else {
        ChannelModel ch = channel == "bsc"    ? ChannelModel::bsc(param)
                          : channel == "awgn" ? ChannelModel::awgn(param)
                                              : ChannelModel::bec(param);
        Rng rng(seed);
        Gf2Vector zero(h.cols());
        l = llr(ch, transmit(ch, zero, rng));
    }
    DecodeResult r = cclpd_decode(h, l);
    std::cout << "cost " << r.cost << ", " << (r.is_integral ? "integral" : "fractional") << "\n";
    for (std::size_t i = 0; i < r.point.size(); ++i)
        std::cout << r.point[i] << (i + 1 < r.point.size() ? " " : "\n");
    return 0;
}

int cmd_recover_cs(const std::string& in, std::size_t k, std::size_t trials, std::uint64_t seed,
                   std::size_t threads) {
    ExperimentConfig cfg;
    cfg.command = ExperimentCommand::RecoverCs;
    cfg.matrix.alist_path = in;
    cfg.sweep_name = "k";
    cfg.sweep_values = {static_cast<double>(k)};
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.threads = threads;
    std::vector<ResultRow> rows = run_experiment(cfg);
    std::cout << csv_header() << "\n" << csv_line(rows[0]) << "\n";
    return 0;
}

int cmd_bridge_check(const std::string& in, std::size_t samples, std::uint64_t seed) {
    Gf2Matrix h = read_alist(in);
    auto h_real = h.to_real();
    // Random nullspace samples via l1 LPs with zero syndrome would give 0;
    // instead take differences of feasible points of H e = H e0.
    Rng rng(seed);
    const std::size_t n = h.cols();
    double worst = 0.0;
    for (std::size_t t = 0; t < samples; ++t) {
        std::vector<double> a(n), b(n);
        for (std::size_t i = 0; i < n; ++i) a[i] = rng.real(-1.0, 1.0);
        std::vector<double> s(h.rows(), 0.0);
        for (std::size_t r = 0; r < h.rows(); ++r)
            for (std::size_t c = 0; c < n; ++c) s[r] += h_real[r][c] * a[c];
        MeasurementInstance inst;
        inst.h = h_real;
        inst.e_true = a;
        inst.s = s;
        RecoveryResult rec = cs_lpd(inst);
        std::vector<double> nu(n);
        for (std::size_t i = 0; i < n; ++i) nu[i] = a[i] - rec.e_hat[i];
        PseudoCodeword pc = bridge_map(h_real, nu);
        worst = std::min(worst, pc.cone_margin);
    }
    std::cout << "min cone margin over " << samples << " samples: " << worst << "\n";
    return worst >= -1e-9 ? 0 : 1;
}

int cmd_cover_check(const std::string& in, const std::string& what, std::size_t covers,
                    const std::string& m_csv, std::uint64_t seed) {
    Gf2Matrix h = read_alist(in);
    std::vector<std::size_t> m_set = parse_sizes(m_csv);
    Rng rng(seed);
    bool ok = false;
    if (what == "thm15") {
        std::vector<double> s(h.rows());
        for (auto& x : s) x = rng.real(-1.0, 1.0);
        ok = thm15_check(h, s, covers, m_set, seed);
    } else if (what == "cclpd") {
        std::vector<double> lambda(h.cols());
        for (auto& x : lambda) x = rng.real(-2.0, 2.0);
        ok = cclpd_graphcover_check(h, LlrVector{lambda}, covers, m_set, seed, 1 << 16);
    } else if (what == "csrel") {
        std::vector<double> s(h.rows());
        for (auto& x : s) x = rng.real(-1.0, 1.0);
        ok = csrel_lower_bound_check(h.to_real(), s, covers, m_set, seed);
    } else {
        throw CLI::ValidationError("--what", "expected thm15 | cclpd | csrel");
    }
    std::cout << what << " check over " << covers << " covers: " << (ok ? "pass" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

int cmd_experiment(const std::string& config_path, std::uint64_t seed_override, bool has_seed,
                   const std::string& out_override, std::size_t threads_override) {
    ExperimentConfig cfg = load_config(config_path);
    if (has_seed) cfg.seed = seed_override;
    if (!out_override.empty()) cfg.out = out_override;
    if (threads_override > 0) cfg.threads = threads_override;
    std::vector<ResultRow> rows = run_experiment(cfg);
    std::cout << csv_header() << "\n";
    for (const ResultRow& row : rows) std::cout << csv_line(row) << "\n";
    if (!cfg.out.empty()) {
        write_csv(cfg.out, rows);
        std::cout << "wrote " << cfg.out << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LP decoding and basis-pursuit toolkit over shared zero-one matrices"};
    app.require_subcommand(1);

    std::string kind = "gallager", in, out, omega_csv, min_kind = "maxfrac", channel = "bsc";
    std::string llr_csv, what = "thm15", m_csv = "2,3", config_path;
    std::size_t dv = 3, dc = 6, n = 24, k = 1, trials = 100, cap = 100000, covers = 20, threads = 0;
    std::size_t samples = 100;
    double gamma = 0.5, delta = 0.75, c_value = 1.0, param = 0.05;
    std::uint64_t seed = 0;
    bool with_oracle = false, non_strict = false;

    auto* construct_cmd = app.add_subcommand("construct", "build a matrix and write alist");
    construct_cmd->add_option("--kind", kind, "gallager | peg | random-col | dense-pm1");
    construct_cmd->add_option("--dv", dv, "column weight");
    construct_cmd->add_option("--dc", dc, "row weight");
    construct_cmd->add_option("--n", n, "columns");
    construct_cmd->add_option("--seed", seed, "construction seed");
    construct_cmd->add_option("--out", out, "output path");

    auto* girth_cmd = app.add_subcommand("girth", "girth of an alist matrix");
    girth_cmd->add_option("--in", in, "alist path")->required();
    girth_cmd->add_flag("--oracle", with_oracle, "also run the trace oracle");

    auto* expand_cmd = app.add_subcommand("expand-check", "brute-force expansion certificate");
    expand_cmd->add_option("--in", in)->required();
    expand_cmd->add_option("--gamma", gamma);
    expand_cmd->add_option("--delta", delta);
    expand_cmd->add_option("--cap", cap);

    auto* pw_cmd = app.add_subcommand("pseudoweight", "weights of a vector or matrix minima");
    pw_cmd->add_option("--omega", omega_csv, "comma-separated nonnegative vector");
    pw_cmd->add_option("--in", in, "alist path (for minima)");
    pw_cmd->add_option("--min-kind", min_kind, "awgnc | bsc | bsc-prime | bec | maxfrac | maxfrac-lp");
    pw_cmd->add_option("--cap", cap);

    auto* nsp_cmd = app.add_subcommand("nsp-check", "nullspace property verification");
    nsp_cmd->add_option("--in", in)->required();
    nsp_cmd->add_option("--k", k);
    nsp_cmd->add_option("--C", c_value);
    nsp_cmd->add_flag("--non-strict", non_strict);

    auto* dec_cmd = app.add_subcommand("decode-cc", "LP-decode one received vector");
    dec_cmd->add_option("--in", in)->required();
    dec_cmd->add_option("--channel", channel, "bsc | awgn | bec");
    dec_cmd->add_option("--param", param, "epsilon / snr / p");
    dec_cmd->add_option("--llr", llr_csv, "explicit LLR vector (skips simulation)");
    dec_cmd->add_option("--seed", seed);

    auto* rec_cmd = app.add_subcommand("recover-cs", "basis-pursuit recovery rate at one k");
    rec_cmd->add_option("--in", in)->required();
    rec_cmd->add_option("--k", k);
    rec_cmd->add_option("--trials", trials);
    rec_cmd->add_option("--seed", seed);
    rec_cmd->add_option("--threads", threads);

    auto* bridge_cmd = app.add_subcommand("bridge-check", "nullspace-to-cone certificates");
    bridge_cmd->add_option("--in", in)->required();
    bridge_cmd->add_option("--samples", samples);
    bridge_cmd->add_option("--seed", seed);

    auto* cover_cmd = app.add_subcommand("cover-check", "graph-cover reformulation checks");
    cover_cmd->add_option("--in", in)->required();
    cover_cmd->add_option("--what", what, "thm15 | cclpd | csrel");
    cover_cmd->add_option("--covers", covers);
    cover_cmd->add_option("--M", m_csv, "comma-separated cover degrees");
    cover_cmd->add_option("--seed", seed);

    auto* exp_cmd = app.add_subcommand("experiment", "config-driven Monte Carlo sweep");
    exp_cmd->add_option("--config", config_path, "JSON config (schema 1)")->required();
    auto* seed_opt = exp_cmd->add_option("--seed", seed, "override config seed");
    exp_cmd->add_option("--out", out, "override output path");
    exp_cmd->add_option("--threads", threads, "override worker count");

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct_cmd->parsed()) return cmd_construct(kind, dv, dc, n, seed, out);
        if (girth_cmd->parsed()) return cmd_girth(in, with_oracle);
        if (expand_cmd->parsed()) return cmd_expand_check(in, gamma, delta, cap);
        if (pw_cmd->parsed()) return cmd_pseudoweight(omega_csv, in, min_kind, cap);
        if (nsp_cmd->parsed()) return cmd_nsp_check(in, k, c_value, non_strict);
        if (dec_cmd->parsed()) return cmd_decode_cc(in, channel, param, llr_csv, seed);
        if (rec_cmd->parsed()) return cmd_recover_cs(in, k, trials, seed, threads);
        if (bridge_cmd->parsed()) return cmd_bridge_check(in, samples, seed);
        if (cover_cmd->parsed()) return cmd_cover_check(in, what, covers, m_csv, seed);
        if (exp_cmd->parsed())
            return cmd_experiment(config_path, seed, seed_opt->count() > 0, out, threads);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
