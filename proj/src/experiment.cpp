#include "ldpcsense/experiment.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ldpcsense/cclpd.hpp"
#include "ldpcsense/cslpd.hpp"
#include "ldpcsense/rng.hpp"

namespace ldpcsense {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) throw std::invalid_argument("config: unknown key \"" + key + "\" in " + where);
    }
}

ConstructionKind parse_kind(const std::string& kind) {
    if (kind == "gallager") return ConstructionKind::GallagerRegular;
    if (kind == "peg") return ConstructionKind::GirthPeg;
    if (kind == "random-col") return ConstructionKind::RandomColumnWeight;
    if (kind == "dense-pm1") return ConstructionKind::DensePm1;
    throw std::invalid_argument("config: unknown construction kind \"" + kind + "\"");
}

void run_parallel(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& fn) {
    threads = std::max<std::size_t>(1, std::min(threads, count));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

struct TrialOutcome {
    bool success = false;
    double err_l1 = 0.0, err_l2 = 0.0, err_linf = 0.0;
};

std::string format_sig12(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

}  // namespace

Gf2Matrix MatrixSource::load() const {
    if (alist_path) return read_alist(*alist_path);
    if (!spec) throw std::invalid_argument("MatrixSource: neither construction nor alist given");
    ConstructedMatrix cm = construct(*spec);
    if (!cm.binary) throw std::invalid_argument("MatrixSource: construction is not a binary matrix");
    return *cm.binary;
}

std::string MatrixSource::describe() const {
    if (alist_path) return "alist:" + *alist_path;
    std::ostringstream os;
    switch (spec->kind) {
        case ConstructionKind::GallagerRegular: os << "gallager"; break;
        case ConstructionKind::GirthPeg: os << "peg"; break;
        case ConstructionKind::RandomColumnWeight: os << "random-col"; break;
        case ConstructionKind::DensePm1: os << "dense-pm1"; break;
    }
    os << "(dv=" << spec->dv << ",dc=" << spec->dc << ",n=" << spec->n << ",seed=" << spec->seed
       << ")";
    return os.str();
}

ExperimentConfig parse_config(const std::string& json_text) {
    json root = json::parse(json_text);
    reject_unknown_keys(root,
                        {"schema", "command", "matrix", "sweep", "trials", "seed", "out",
                         "threads", "amplitude", "timing"},
                        "top level");
    if (!root.contains("schema") || root["schema"] != 1)
        throw std::invalid_argument("config: missing or unsupported schema (expected 1)");

    ExperimentConfig cfg;
    std::string command = root.at("command").get<std::string>();
    if (command == "recover-cs")
        cfg.command = ExperimentCommand::RecoverCs;
    else if (command == "decode-cc")
        cfg.command = ExperimentCommand::DecodeCc;
    else
        throw std::invalid_argument("config: unknown command \"" + command + "\"");

    const json& matrix = root.at("matrix");
    if (matrix.contains("alist")) {
        reject_unknown_keys(matrix, {"alist"}, "matrix");
        cfg.matrix.alist_path = matrix["alist"].get<std::string>();
    } else {
        reject_unknown_keys(matrix, {"kind", "dv", "dc", "n", "seed"}, "matrix");
        ConstructionSpec spec;
        spec.kind = parse_kind(matrix.at("kind").get<std::string>());
        spec.dv = matrix.at("dv").get<std::size_t>();
        spec.dc = matrix.at("dc").get<std::size_t>();
        spec.n = matrix.at("n").get<std::size_t>();
        spec.seed = matrix.value("seed", 0ull);
        cfg.matrix.spec = spec;
    }

    const json& sweep = root.at("sweep");
    if (sweep.size() != 1) throw std::invalid_argument("config: sweep must hold exactly one axis");
    for (const auto& [key, values] : sweep.items()) {
        static const char* axes[] = {"k", "alpha", "epsilon", "snr", "p"};
        bool ok = false;
        for (const char* a : axes) ok = ok || key == a;
        if (!ok) throw std::invalid_argument("config: unknown sweep axis \"" + key + "\"");
        cfg.sweep_name = key;
        cfg.sweep_values = values.get<std::vector<double>>();
    }
    if (cfg.sweep_values.empty()) throw std::invalid_argument("config: sweep grid is empty");

    cfg.trials = root.at("trials").get<std::size_t>();
    if (cfg.trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    cfg.seed = root.value("seed", 0ull);
    cfg.out = root.value("out", std::string{});
    cfg.threads = root.value("threads", 0ull);
    cfg.amplitude = root.value("amplitude", 1.0);
    cfg.timing = root.value("timing", false);

    bool cs = cfg.command == ExperimentCommand::RecoverCs;
    bool cs_axis = cfg.sweep_name == "k" || cfg.sweep_name == "alpha";
    if (cs != cs_axis)
        throw std::invalid_argument("config: sweep axis \"" + cfg.sweep_name +
                                    "\" does not match the command");
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::size_t resolve_threads(std::size_t requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("LDPC_SENSE_THREADS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& config) {
    Gf2Matrix h = config.matrix.load();
    const std::size_t n = h.cols();
    std::vector<std::vector<double>> h_real = h.to_real();
    const std::size_t threads = resolve_threads(config.threads);

    std::vector<ResultRow> rows;
    for (std::size_t point = 0; point < config.sweep_values.size(); ++point) {
        double value = config.sweep_values[point];
        auto start = std::chrono::steady_clock::now();
        std::vector<TrialOutcome> outcomes(config.trials);
        std::uint64_t point_seed = derive_seed(config.seed, 0x1000 + point);

        if (config.command == ExperimentCommand::RecoverCs) {
            std::size_t k = config.sweep_name == "k"
                                ? static_cast<std::size_t>(std::llround(value))
                                : static_cast<std::size_t>(
                                      std::llround(value * static_cast<double>(n)));
            if (k > n) throw std::invalid_argument("run_experiment: k exceeds n");
            run_parallel(config.trials, threads, [&](std::size_t trial) {
                Rng rng(derive_seed(point_seed, trial));
                std::vector<double> e(n, 0.0);
                for (std::size_t i : rng.sample_without_replacement(k, n))
                    e[i] = config.amplitude * rng.signed_unit();
                MeasurementInstance inst = MeasurementInstance::from_error(h_real, e);
                RecoveryResult rec = cs_lpd(inst);
                TrialOutcome& out = outcomes[trial];
                out.success = rec.exact;
                for (std::size_t i = 0; i < n; ++i) {
                    double d = std::abs(rec.e_hat[i] - e[i]);
                    out.err_l1 += d;
                    out.err_l2 += d * d;
                    out.err_linf = std::max(out.err_linf, d);
                }
                out.err_l2 = std::sqrt(out.err_l2);
            });
        } else {
            ChannelModel ch = config.sweep_name == "epsilon" ? ChannelModel::bsc(value)
                              : config.sweep_name == "snr"   ? ChannelModel::awgn(value)
                                                             : ChannelModel::bec(value);
            Gf2Vector zero(n);  // all-zero transmission; the polytope is symmetric
            run_parallel(config.trials, threads, [&](std::size_t trial) {
                Rng rng(derive_seed(point_seed, trial));
                std::vector<double> y = transmit(ch, zero, rng);
                DecodeResult dec = cclpd_decode(h, llr(ch, y));
                TrialOutcome& out = outcomes[trial];
                out.success = true;
                for (std::size_t i = 0; i < n; ++i) {
                    double d = std::abs(dec.point[i]);
                    if (d > 1e-6) out.success = false;
                    out.err_l1 += d;
                    out.err_l2 += d * d;
                    out.err_linf = std::max(out.err_linf, d);
                }
                out.err_l2 = std::sqrt(out.err_l2);
            });
        }

        ResultRow row;
        row.command = config.command == ExperimentCommand::RecoverCs ? "recover-cs" : "decode-cc";
        row.matrix = config.matrix.describe();
        row.n = n;
        row.m = h.rows();
        row.param_name = config.sweep_name;
        row.param_value = value;
        row.trials = config.trials;
        row.seed = config.seed;
        std::size_t successes = 0;
        for (const TrialOutcome& out : outcomes) {
            successes += out.success;
            row.mean_error_l1 += out.err_l1;
            row.mean_error_l2 += out.err_l2;
            row.mean_error_linf += out.err_linf;
        }
        row.success_rate = static_cast<double>(successes) / static_cast<double>(config.trials);
        row.mean_error_l1 /= static_cast<double>(config.trials);
        row.mean_error_l2 /= static_cast<double>(config.trials);
        row.mean_error_linf /= static_cast<double>(config.trials);
        // timing off (the default) keeps the CSV byte-identical across runs
        row.wall_time_s =
            config.timing
                ? std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
                : 0.0;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string csv_header() {
    return "command,matrix,n,m,param_name,param_value,trials,success_rate,"
           "mean_error_l1,mean_error_l2,mean_error_linf,wall_time_s,seed";
}

std::string csv_line(const ResultRow& row) {
    std::ostringstream os;
    os << row.command << ',' << row.matrix << ',' << row.n << ',' << row.m << ','
       << row.param_name << ',' << format_sig12(row.param_value) << ',' << row.trials << ','
       << format_sig12(row.success_rate) << ',' << format_sig12(row.mean_error_l1) << ','
       << format_sig12(row.mean_error_l2) << ',' << format_sig12(row.mean_error_linf) << ','
       << format_sig12(row.wall_time_s) << ',' << row.seed;
    return os.str();
}

void write_csv(const std::string& path, const std::vector<ResultRow>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_csv: cannot open " + path);
    out << csv_header() << "\n";
    for (const ResultRow& row : rows) out << csv_line(row) << "\n";
}

}  // namespace ldpcsense
