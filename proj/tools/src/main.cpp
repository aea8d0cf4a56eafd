#include <fstream>
#include <iostream>
#include <iterator>

#include <CLI11.hpp>

#include "ihg_cli/run.hpp"

using namespace ihg::cli;

namespace {

struct Flags {
    std::string config;
    std::string output;
    std::optional<int> K;
    std::optional<double> tol;
    std::optional<std::uint64_t> seed;
    std::optional<int> samples;
    std::string format = "json";
    std::optional<int> ell;
    std::string sigma;
    std::string solution = "F";
    std::string relation;
    std::optional<int> k;
    std::string representation = "both";
    std::optional<int> searchBound;
    std::optional<int> n;
};

void addCommon(CLI::App *cmd, Flags &f)
{
    cmd->add_option("--config", f.config, "JSON job file ('-' reads stdin)");
    cmd->add_option("--output", f.output, "write the report here instead of stdout");
    cmd->add_option("--K", f.K, "truncation order (default 20)");
    cmd->add_option("--tol", f.tol, "quadrature tolerance (default 1e-9)");
    cmd->add_option("--seed", f.seed, "seed for sampled points (default 0)");
    cmd->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

Json readConfig(const std::string &path)
{
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) {
            throw InputError("cannot open config file " + path);
        }
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Incomplete Delta_1 x Delta_{n-1} hypergeometric system: evaluation and verification"};
    app.require_subcommand(1);
    Flags f;

    struct Spec {
        const char *name;
        const char *help;
    };
    const Spec specs[] = {
        {"eval-fd", "Lauricella F_D partial sum"},
        {"eval-f", "series solution F(beta; x)"},
        {"eval-phi", "integral Phi(beta; x) by adaptive quadrature"},
        {"eval-psi", "homogeneous basis series Psi^(l)(x)"},
        {"verify-system", "residuals of F, Psi or Phi in the system"},
        {"verify-contiguity", "contiguity relations on Phi and F"},
        {"check-nonresonance", "bounded T-nonresonance certificate search"},
        {"check-syzygy", "exact syzygy conditions on the boundary term"},
        {"classify-domain", "U_0 membership and the sigma with x in sigma(U)"},
        {"weyl-verify", "exact reductions of the operators L1 and L2"},
        {"sweep", "parameter grid sweep of F against Phi"},
    };
    for (const Spec &s : specs) {
        CLI::App *cmd = app.add_subcommand(s.name, s.help);
        addCommon(cmd, f);
        const std::string name = s.name;
        if (name == "eval-psi" || name == "verify-system") {
            cmd->add_option("--ell", f.ell, "basis index l (1-based)");
            cmd->add_option("--sigma", f.sigma, "column permutation, e.g. 2,1");
        }
        if (name == "verify-system") {
            cmd->add_option("--solution", f.solution, "F, Psi or Phi")->check(CLI::IsMember({"F", "Psi", "Phi"}));
        }
        if (name == "verify-system" || name == "verify-contiguity") {
            cmd->add_option("--samples", f.samples, "number of sampled points when none are given");
        }
        if (name == "verify-contiguity") {
            cmd->add_option("--relation", f.relation, "down1k, up1k, down2k, up2k, up-en1 or down-en1");
            cmd->add_option("--k", f.k, "column index k (1-based); default every k");
            cmd->add_option("--representation", f.representation, "phi, series or both")
                ->check(CLI::IsMember({"phi", "series", "both"}));
        }
        if (name == "check-nonresonance") {
            cmd->add_option("--search-bound", f.searchBound, "cone norm bound (default 2K)");
        }
        if (name == "weyl-verify" || name == "check-syzygy") {
            cmd->add_option("--n", f.n, "number of columns");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kPass : kInvalidInput;
    }

    JobConfig cfg;
    cfg.command = app.get_subcommands().front()->get_name();
    RunResult result;
    try {
        if (!f.config.empty()) {
            applyConfigJson(cfg, readConfig(f.config));
        }
        if (f.K) {
            cfg.K = *f.K;
        }
        if (f.tol) {
            cfg.tol = *f.tol;
        }
        if (f.seed) {
            cfg.seed = *f.seed;
        }
        if (f.samples) {
            cfg.samples = *f.samples;
        }
        if (f.ell) {
            cfg.ell = *f.ell - 1;
        }
        if (f.k) {
            cfg.k = *f.k - 1;
        }
        if (f.n) {
            cfg.weylN = *f.n;
        }
        if (!f.sigma.empty()) {
            cfg.sigma = parsePermutation(f.sigma, cfg.params.n);
        }
        cfg.searchBound = f.searchBound;
        cfg.solution = f.solution;
        cfg.relation = f.relation;
        cfg.representation = f.representation;
        cfg.output = f.output;
        cfg.format = f.format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
        result = run(cfg);
    } catch (const InputError &e) {
        std::cerr << "ihg: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const Json::exception &e) {
        std::cerr << "ihg: " << e.what() << '\n';
        return kInvalidInput;
    }

    if (result.report.contains("error")) {
        std::cerr << "ihg: " << result.report["error"].get<std::string>() << '\n';
    }
    if (cfg.output.empty()) {
        std::cout << result.text;
    } else {
        std::ofstream out(cfg.output);
        if (!out) {
            std::cerr << "ihg: cannot write " << cfg.output << '\n';
            return kInvalidInput;
        }
        out << result.text;
    }
    return result.exitCode;
}
