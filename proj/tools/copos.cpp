// copos: command-line front end for tensor copositivity detection.
//
// Exit codes: 0 copositive / sigma-certified / prescreen passed,
//             1 not copositive / prescreen failed,
//             2 undecided,
//             3 runtime failure, 64 usage error, 65 malformed input.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "copos/detector.hpp"
#include "copos/errors.hpp"
#include "copos/experiments.hpp"
#include "copos/instances.hpp"
#include "copos/io.hpp"
#include "copos/prescreen.hpp"
#include "copos/spectral.hpp"

namespace {

using copos::io::json;

constexpr int kExitRuntime = 3;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

struct Source {
    std::string path;
    std::string gen;
    std::size_t m = 3;
    std::size_t n = 3;
    double eta = 0.0;
    std::uint64_t seed = 0;

    void add_options(CLI::App* cmd) {
        cmd->add_option("file", path, "tensor or polynomial JSON file");
        cmd->add_option("--gen", gen,
                        "generator: ones, identity, eta-ones, random, motzkin, robinson, choi-lam, example3-b");
        cmd->add_option("--m", m, "order");
        cmd->add_option("--n", n, "dimension");
        cmd->add_option("--eta", eta, "shift for eta-ones");
        cmd->add_option("--seed", seed, "seed for random generators");
    }

    copos::SymmetricTensor load() const {
        if (!path.empty() && !gen.empty()) throw copos::DomainError("give either a file or --gen, not both");
        if (!path.empty()) return copos::io::read_tensor_file(path);
        if (gen.empty()) throw copos::DomainError("no tensor source: give a file or --gen");
        if (gen == "ones") return copos::ones_tensor(m, n);
        if (gen == "identity") return copos::identity_tensor(m, n);
        if (gen == "eta-ones") return copos::eta_shift(eta, copos::ones_tensor(m, n));
        if (gen == "random") return copos::random_tensor(m, n, seed);
        if (gen == "example3-b") return copos::random_tensor_negative_corner(m, n, seed);
        if (gen == "motzkin") return copos::motzkin_tensor();
        if (gen == "robinson") return copos::robinson_tensor();
        if (gen == "choi-lam") return copos::choi_lam_tensor();
        throw copos::DomainError("unknown generator \"" + gen + "\"");
    }

    json describe() const {
        if (!path.empty()) return {{"file", path}};
        json d = {{"gen", gen}};
        if (gen == "ones" || gen == "identity" || gen == "eta-ones" || gen == "random" || gen == "example3-b") {
            d["m"] = m;
            d["n"] = n;
        }
        if (gen == "eta-ones") d["eta"] = eta;
        if (gen == "random" || gen == "example3-b") d["seed"] = seed;
        return d;
    }
};

void emit(const json& doc, const std::string& out) {
    const std::string text = doc.dump(2);
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw std::runtime_error("cannot write " + out);
        f << text << '\n';
    }
    std::cout << text << '\n';
}

int verdict_exit_code(copos::VerdictKind kind) {
    switch (kind) {
        case copos::VerdictKind::Copositive:
        case copos::VerdictKind::SigmaCertified: return 0;
        case copos::VerdictKind::NotCopositive: return 1;
        case copos::VerdictKind::Undecided: return 2;
    }
    return kExitRuntime;
}

copos::Vector parse_point(const std::string& text) {
    copos::Vector x;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) x.push_back(std::stod(item));
    return x;
}

struct DetectArgs {
    Source source;
    copos::DetectorConfig cfg;
    double sigma = 0.0;
    bool no_prescreen = false;
    std::size_t grid_depth = 4;
    std::string out;
};

int run_detect(const DetectArgs& args) {
    const auto start = std::chrono::steady_clock::now();
    const copos::SymmetricTensor a = args.source.load();

    json record = {{"input", args.source.describe()},
                   {"config",
                    {{"max_iterations", args.cfg.max_iterations},
                     {"tolerance", args.cfg.tolerance},
                     {"sigma", args.sigma},
                     {"min_diameter", args.cfg.min_diameter},
                     {"prescreen", !args.no_prescreen},
                     {"certificate", args.cfg.retain_certificate}}}};

    copos::Verdict verdict;
    bool decided_by_prescreen = false;
    record["prescreen"] = nullptr;
    if (!args.no_prescreen) {
        copos::PrescreenOptions popt;
        popt.grid_depth = args.grid_depth;
        popt.tolerance = args.cfg.tolerance;
        const copos::PrescreenReport report = copos::run_prescreen(a, popt);
        record["prescreen"] = copos::io::prescreen_to_json(report);
        if (!report.passed) {
            decided_by_prescreen = true;
            verdict.kind = copos::VerdictKind::NotCopositive;
            verdict.sigma = args.sigma;
            verdict.tolerance = args.cfg.tolerance;
            verdict.witness = report.witness;
            verdict.min_vertex_value = report.value;
        }
    }
    if (!decided_by_prescreen) {
        verdict = args.sigma > 0.0 ? copos::detect_with_relaxation(a, args.sigma, args.cfg)
                                   : copos::detect(a, args.cfg);
    }
    record["verdict"] = copos::io::verdict_to_json(verdict);
    if (verdict.kind == copos::VerdictKind::Undecided) {
        const auto stall = copos::check_boundary_zero_stall(a, verdict);
        record["diagnostic"] = {{"min_vertex_value", stall.min_vertex_value},
                                {"near_zero", stall.near_zero},
                                {"threshold", stall.threshold}};
        std::cerr << "undecided after " << verdict.iterations << " cells";
        if (stall.near_zero) {
            std::cerr << "; vertex values approach zero, so the tensor may be copositive with a zero on the simplex";
        }
        std::cerr << "; retry with --sigma (e.g. --sigma 0.001) to test sigma-copositivity\n";
    }
    record["wall_time"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(record, args.out);
    return verdict_exit_code(verdict.kind);
}

struct PrescreenArgs {
    Source source;
    double tolerance = 1e-12;
    std::size_t grid_depth = 4;
    std::string zero_point;
    std::string pencil;
    std::size_t pencil_depth = 2;
    std::string out;
};

int run_prescreen_cmd(const PrescreenArgs& args) {
    const copos::SymmetricTensor a = args.source.load();
    copos::PrescreenOptions opt;
    opt.grid_depth = args.grid_depth;
    opt.tolerance = args.tolerance;
    if (!args.zero_point.empty()) opt.zero_point = parse_point(args.zero_point);
    copos::PrescreenReport report = copos::run_prescreen(a, opt);
    if (report.passed && !args.pencil.empty()) {
        const copos::SymmetricTensor b = copos::io::read_tensor_file(args.pencil);
        const auto samples = copos::lattice_pairs(a.dim(), args.pencil_depth);
        report = copos::pencil_refute(a, b, samples, args.tolerance);
    }
    emit(copos::io::prescreen_to_json(report), args.out);
    return report.passed ? 0 : 1;
}

struct SpectralArgs {
    Source source;
    copos::SpectralOptions options;
    std::string out;
};

int run_spectral(const SpectralArgs& args) {
    const copos::SymmetricTensor b = args.source.load();
    emit(copos::io::spectral_to_json(copos::spectral_radius(b, args.options)), args.out);
    return 0;
}

int run_gen(const Source& source, const std::string& out) {
    emit(copos::io::tensor_to_json(source.load()), out);
    return 0;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string result_label(const copos::Verdict& v) {
    switch (v.kind) {
        case copos::VerdictKind::Copositive:
        case copos::VerdictKind::SigmaCertified: return "Yes";
        case copos::VerdictKind::NotCopositive: return "No";
        case copos::VerdictKind::Undecided: return ">" + std::to_string(v.iterations);
    }
    return "?";
}

int run_table(int id, std::uint64_t seed_base) {
    namespace ex = copos::experiments;
    bool all_match = true;
    if (id == 1) {
        std::printf("%-3s %-3s %-6s | %-6s %-6s | %-6s %-6s\n", "m", "n", "eta", "IT", "ref", "result", "ref");
        for (const auto& r : ex::run_eta_ones()) {
            const bool ok = ex::matches(r.expected, r.verdict);
            all_match = all_match && ok;
            const std::string ref_it = r.reference_iterations ? std::to_string(*r.reference_iterations) : ">100";
            const bool it_differs = r.reference_iterations && *r.reference_iterations != r.verdict.iterations;
            std::printf("%-3zu %-3zu %-6s | %-6zu %-6s | %-6s %-6s%s%s\n", r.order, r.dim, fmt_double(r.eta).c_str(),
                        r.verdict.iterations, ref_it.c_str(), result_label(r.verdict).c_str(),
                        ex::to_string(r.expected).c_str(), ok ? "" : "  MISMATCH",
                        it_differs ? "  (iteration count differs)" : "");
        }
    } else if (id == 2) {
        std::printf("%-3s %-3s %-7s | %-5s %-5s | %-6s %-6s | %-4s %-4s %-4s\n", "m", "n", "eta", "MinIT", "MaxIT",
                    "refMin", "refMax", "Nyes", "Nno", "Nund");
        for (const auto& r : ex::run_random_shift(seed_base)) {
            const std::size_t trials = r.verdicts.size();
            const bool ok = r.expected == ex::Expected::Yes ? r.yes == trials : r.no == trials;
            all_match = all_match && ok;
            const std::string eta = "rho" + std::string(r.offset < 0 ? "" : "+") + std::to_string(int(r.offset));
            std::printf("%-3zu %-3zu %-7s | %-5zu %-5zu | %-6zu %-6zu | %-4zu %-4zu %-4zu%s\n", r.order, r.dim,
                        eta.c_str(), r.min_iterations, r.max_iterations, r.reference_min, r.reference_max, r.yes,
                        r.no, r.undecided, ok ? "" : "  MISMATCH");
        }
    } else if (id == 3) {
        std::printf("%-3s %-3s %-6s | %-5s %-5s | %-4s %-4s\n", "m", "n", "tensor", "MinIT", "MaxIT", "Nyes", "Nno");
        for (const auto& r : ex::run_random_sign(seed_base)) {
            const std::size_t trials = r.verdicts.size();
            const bool ok = (r.negative_corner ? r.no == trials : r.yes == trials) && r.max_iterations == 1;
            all_match = all_match && ok;
            std::printf("%-3zu %-3zu %-6s | %-5zu %-5zu | %-4zu %-4zu%s\n", r.order, r.dim,
                        r.negative_corner ? "B" : "A", r.min_iterations, r.max_iterations, r.yes, r.no,
                        ok ? "" : "  MISMATCH");
        }
    } else {
        throw CLI::ValidationError("table", "unknown table id " + std::to_string(id) + " (expected 1, 2 or 3)");
    }
    return all_match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Copositivity detection for real symmetric tensors"};
    app.require_subcommand(1);

    DetectArgs detect_args;
    auto* detect_cmd = app.add_subcommand("detect", "decide copositivity by simplicial branch and bound");
    detect_args.source.add_options(detect_cmd);
    detect_cmd->add_option("--max-iter", detect_args.cfg.max_iterations, "cell budget")->check(CLI::PositiveNumber);
    detect_cmd->add_option("--tol", detect_args.cfg.tolerance, "sign tolerance")->check(CLI::NonNegativeNumber);
    detect_cmd->add_option("--sigma", detect_args.sigma, "test A + sigma*E instead of A")
        ->check(CLI::NonNegativeNumber);
    detect_cmd->add_option("--min-diameter", detect_args.cfg.min_diameter, "give up on cells smaller than this")
        ->check(CLI::NonNegativeNumber);
    detect_cmd->add_flag("--no-prescreen", detect_args.no_prescreen, "skip the necessary-condition checks");
    detect_cmd->add_flag("--certificate", detect_args.cfg.retain_certificate, "include certified cells in output");
    detect_cmd->add_option("--grid-depth", detect_args.grid_depth, "prescreen lattice depth")
        ->check(CLI::PositiveNumber);
    detect_cmd->add_option("--out", detect_args.out, "also write the run record here");

    PrescreenArgs pre_args;
    auto* pre_cmd = app.add_subcommand("prescreen", "run the necessary-condition refuters");
    pre_args.source.add_options(pre_cmd);
    pre_cmd->add_option("--tol", pre_args.tolerance, "sign tolerance")->check(CLI::NonNegativeNumber);
    pre_cmd->add_option("--grid-depth", pre_args.grid_depth, "lattice depth")->check(CLI::PositiveNumber);
    pre_cmd->add_option("--zero-point", pre_args.zero_point, "comma-separated zero of the form");
    pre_cmd->add_option("--pencil", pre_args.pencil, "second tensor for the convex-pencil refuter");
    pre_cmd->add_option("--pencil-depth", pre_args.pencil_depth, "lattice depth for pencil samples")
        ->check(CLI::PositiveNumber);
    pre_cmd->add_option("--out", pre_args.out, "also write the report here");

    SpectralArgs spec_args;
    auto* spec_cmd = app.add_subcommand("spectral", "spectral radius of a nonnegative tensor");
    spec_args.source.add_options(spec_cmd);
    spec_cmd->add_option("--tol", spec_args.options.tolerance, "bound gap")->check(CLI::PositiveNumber);
    spec_cmd->add_option("--max-iter", spec_args.options.max_iterations, "iteration budget")
        ->check(CLI::PositiveNumber);
    spec_cmd->add_option("--out", spec_args.out, "also write the result here");

    Source gen_source;
    std::string gen_out;
    auto* gen_cmd = app.add_subcommand("gen", "write a generated tensor as JSON");
    gen_source.add_options(gen_cmd);
    gen_cmd->add_option("--out", gen_out, "output file");

    int table_id = 0;
    std::uint64_t table_seed = 2016;
    auto* table_cmd = app.add_subcommand("table", "rerun a benchmark table (1, 2 or 3)");
    table_cmd->add_option("id", table_id, "table id")->required();
    table_cmd->add_option("--seed", table_seed, "seed base for random tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*detect_cmd) return run_detect(detect_args);
        if (*pre_cmd) return run_prescreen_cmd(pre_args);
        if (*spec_cmd) return run_spectral(spec_args);
        if (*gen_cmd) return run_gen(gen_source, gen_out);
        if (*table_cmd) return run_table(table_id, table_seed);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const copos::ParseError& e) {
        std::cerr << "error: malformed input: " << e.what() << '\n';
        return kExitData;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << '\n';
        return kExitData;
    } catch (const copos::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitUsage;
}
