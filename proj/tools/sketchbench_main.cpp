// Command-line front end: bench (throughput), accuracy, memory, and gen
// (Zipf trace emission). Reports land on stdout or in the file named by
// --out as CSV.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sketchbench/bench.hpp"
#include "sketchbench/trace.hpp"

namespace {

using namespace sketchbench;

struct CommonOptions {
    std::vector<std::string> algos;
    std::string trace_path;
    std::string zipf_spec;
    double p = 0.01;
    double epsilon = 0.01;
    double delta = 0.01;
    std::uint32_t runs = 13;
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> capacity;
    std::string out_path;
    bool no_warmup = false;
};

ZipfSpec parse_zipf(const std::string& text) {
    // n,universe,alpha,seed
    std::istringstream in(text);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(in, field, ',')) {
        fields.push_back(field);
    }
    if (fields.size() != 4) {
        throw std::invalid_argument("--zipf expects n,universe,alpha,seed");
    }
    ZipfSpec spec;
    try {
        std::size_t used = 0;
        spec.n_items = std::stoull(fields[0], &used);
        if (used != fields[0].size()) throw std::invalid_argument("");
        spec.universe = std::stoull(fields[1], &used);
        if (used != fields[1].size()) throw std::invalid_argument("");
        spec.alpha = std::stod(fields[2], &used);
        if (used != fields[2].size()) throw std::invalid_argument("");
        spec.seed = std::stoull(fields[3], &used);
        if (used != fields[3].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("--zipf expects n,universe,alpha,seed as numbers");
    }
    return spec;
}

std::vector<Algorithm> parse_algos(const std::vector<std::string>& raw) {
    std::vector<Algorithm> out;
    for (const std::string& entry : raw) {
        std::istringstream in(entry);
        std::string name;
        while (std::getline(in, name, ',')) {
            if (name == "all") {
                return all_algorithms();
            }
            const auto algo = algorithm_from_string(name);
            if (!algo) {
                throw std::invalid_argument("unknown algorithm '" + name + "'");
            }
            out.push_back(*algo);
        }
    }
    if (out.empty()) {
        throw std::invalid_argument("no algorithm given; use --algo");
    }
    return out;
}

Trace resolve_trace(const CommonOptions& opts) {
    const bool have_path = !opts.trace_path.empty();
    const bool have_zipf = !opts.zipf_spec.empty();
    if (have_path == have_zipf) {
        throw std::invalid_argument("exactly one of --trace and --zipf is required");
    }
    if (have_path) {
        return Trace::load(opts.trace_path);
    }
    return Trace::zipf(parse_zipf(opts.zipf_spec));
}

BenchConfig make_config(const CommonOptions& opts, Algorithm algorithm) {
    BenchConfig cfg;
    cfg.algorithm = algorithm;
    cfg.p = opts.p;
    cfg.epsilon = opts.epsilon;
    cfg.delta = opts.delta;
    cfg.runs = opts.runs;
    cfg.base_seed = opts.seed;
    cfg.capacity = opts.capacity;
    cfg.warmup = !opts.no_warmup;
    return cfg;
}

void emit(const BenchReport& report, const std::string& out_path) {
    const std::string csv = report.to_csv();
    if (out_path.empty()) {
        std::cout << csv;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + out_path);
    }
    out << csv;
    if (!out) {
        throw std::runtime_error("write failure on " + out_path);
    }
}

void add_common_options(CLI::App* cmd, CommonOptions& opts, bool with_warmup) {
    cmd->add_option("--algo", opts.algos,
                    "algorithm name(s), comma separated; 'all' for every one");
    cmd->add_option("--trace", opts.trace_path, "trace file, one key per line");
    cmd->add_option("--zipf", opts.zipf_spec, "synthetic trace spec: n,universe,alpha,seed");
    cmd->add_option("--p", opts.p, "sampling probability for nitro variants");
    cmd->add_option("--epsilon", opts.epsilon, "CMS width / Space Saving budget parameter");
    cmd->add_option("--delta", opts.delta, "CMS depth parameter");
    cmd->add_option("--runs", opts.runs, "repetitions to aggregate");
    cmd->add_option("--seed", opts.seed, "base seed; run r uses seed + r");
    cmd->add_option("--capacity", opts.capacity, "cuckoo capacity override");
    cmd->add_option("--out", opts.out_path, "CSV output path (default stdout)");
    if (with_warmup) {
        cmd->add_flag("--no-warmup", opts.no_warmup, "skip the discarded warm-up pass");
    }
}

int run_bench(const CommonOptions& opts, const std::vector<std::string>& protocols) {
    const std::vector<Algorithm> algos = parse_algos(opts.algos);
    const Trace trace = resolve_trace(opts);
    std::vector<ThroughputProtocol> protos;
    for (const std::string& entry : protocols) {
        std::istringstream in(entry);
        std::string name;
        while (std::getline(in, name, ',')) {
            const auto proto = throughput_protocol_from_string(name);
            if (!proto) {
                throw std::invalid_argument("unknown protocol '" + name + "'");
            }
            protos.push_back(*proto);
        }
    }
    if (protos.empty()) {
        protos.push_back(ThroughputProtocol::write_only);
    }
    BenchReport report;
    for (const Algorithm algo : algos) {
        for (const ThroughputProtocol proto : protos) {
            report.merge(run_throughput(make_config(opts, algo), trace, proto));
        }
    }
    report.sort_rows();
    emit(report, opts.out_path);
    return 0;
}

int run_accuracy_cmd(const CommonOptions& opts) {
    const std::vector<Algorithm> algos = parse_algos(opts.algos);
    const Trace trace = resolve_trace(opts);
    BenchReport report;
    for (const Algorithm algo : algos) {
        report.merge(run_accuracy(make_config(opts, algo), trace));
    }
    report.sort_rows();
    emit(report, opts.out_path);
    return 0;
}

int run_memory_cmd(const CommonOptions& opts) {
    const std::vector<Algorithm> algos = parse_algos(opts.algos);
    const Trace trace = resolve_trace(opts);
    BenchReport report;
    for (const Algorithm algo : algos) {
        report.merge(run_memory(make_config(opts, algo), trace));
    }
    report.sort_rows();
    emit(report, opts.out_path);
    return 0;
}

int run_gen(const std::string& zipf_spec, const std::string& out_path) {
    if (zipf_spec.empty()) {
        throw std::invalid_argument("gen requires --zipf");
    }
    if (out_path.empty()) {
        throw std::invalid_argument("gen requires --out");
    }
    const Trace trace = Trace::zipf(parse_zipf(zipf_spec));
    trace.save(out_path);
    std::fprintf(stderr, "wrote %llu items (%llu uniques) to %s\n",
                 static_cast<unsigned long long>(trace.stats().n_items),
                 static_cast<unsigned long long>(trace.stats().n_uniques),
                 out_path.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"frequency-sketch benchmark harness"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::vector<std::string> protocols;

    CLI::App* bench = app.add_subcommand("bench", "throughput protocols");
    add_common_options(bench, opts, true);
    bench->add_option("--protocol", protocols,
                      "write_only | write_read | read_only, comma separated");

    CLI::App* accuracy = app.add_subcommand("accuracy", "error metrics, three schedules");
    add_common_options(accuracy, opts, false);

    CLI::App* memory = app.add_subcommand("memory", "table footprint after a write pass");
    add_common_options(memory, opts, false);

    std::string gen_zipf;
    std::string gen_out;
    CLI::App* gen = app.add_subcommand("gen", "emit a Zipf trace file");
    gen->add_option("--zipf", gen_zipf, "n,universe,alpha,seed")->required();
    gen->add_option("--out", gen_out, "output path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (bench->parsed()) {
            return run_bench(opts, protocols);
        }
        if (accuracy->parsed()) {
            return run_accuracy_cmd(opts);
        }
        if (memory->parsed()) {
            return run_memory_cmd(opts);
        }
        if (gen->parsed()) {
            return run_gen(gen_zipf, gen_out);
        }
    } catch (const std::exception& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 1;
    }
    return 0;
}
