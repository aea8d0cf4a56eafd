#include "ihg_cli/config.hpp"

#include <algorithm>

namespace ihg::cli {

namespace {

int intField(const Json &j, const char *key)
{
    if (!j.at(key).is_number_integer()) {
        throw InputError(std::string(key) + ": expected an integer");
    }
    return j.at(key).get<int>();
}

double doubleField(const Json &j, const char *key)
{
    if (!j.at(key).is_number()) {
        throw InputError(std::string(key) + ": expected a number");
    }
    return j.at(key).get<double>();
}

std::vector<Complex> complexList(const Json &j, const std::string &what)
{
    return complexVectorFromJson(j, what);
}

} // namespace

void applyConfigJson(JobConfig &cfg, const Json &j)
{
    if (!j.is_object()) {
        throw InputError("config: expected a JSON object");
    }
    if (j.contains("alpha")) {
        SystemParams p;
        p.alpha = complexVectorFromJson(j.at("alpha"), "alpha");
        p.n = j.contains("n") ? intField(j, "n") : static_cast<int>(p.alpha.size());
        if (p.n != static_cast<int>(p.alpha.size())) {
            throw InputError("alpha must have n entries");
        }
        p.gamma = j.contains("gamma") ? complexFromJson(j.at("gamma"), "gamma") : Complex{};
        p.a = j.contains("a") ? complexFromJson(j.at("a"), "a") : Complex{};
        p.b = j.contains("b") ? complexFromJson(j.at("b"), "b") : Complex(1.0, 0.0);
        cfg.params = p;
        cfg.haveParams = true;
    } else if (j.contains("n")) {
        cfg.params.n = intField(j, "n");
    }
    const int n = cfg.params.n;
    if (j.contains("x")) {
        cfg.points.push_back(pointFromJson(j.at("x"), n, "x"));
    }
    if (j.contains("points")) {
        const Json &pts = j.at("points");
        if (!pts.is_array()) {
            throw InputError("points: expected an array of points");
        }
        for (std::size_t i = 0; i < pts.size(); ++i) {
            cfg.points.push_back(pointFromJson(pts[i], n, "points[" + std::to_string(i) + "]"));
        }
    }
    if (j.contains("points_csv")) {
        for (Point &x : pointsFromCsv(j.at("points_csv").get<std::string>(), n)) {
            cfg.points.push_back(x);
        }
    }
    if (j.contains("K")) {
        cfg.K = intField(j, "K");
    }
    if (j.contains("tol")) {
        cfg.tol = doubleField(j, "tol");
    }
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned()) {
            throw InputError("seed: expected a nonnegative integer");
        }
        cfg.seed = j.at("seed").get<std::uint64_t>();
    }
    if (j.contains("samples")) {
        cfg.samples = intField(j, "samples");
    }
    if (j.contains("fd")) {
        const Json &f = j.at("fd");
        FDParams p;
        p.a = complexFromJson(f.at("a"), "fd.a");
        p.b = complexList(f.at("b"), "fd.b");
        p.c = complexFromJson(f.at("c"), "fd.c");
        cfg.fd = p;
        cfg.fdZ = complexList(f.at("z"), "fd.z");
    }
    if (j.contains("grid")) {
        const Json &g = j.at("grid");
        if (g.contains("alpha")) {
            for (std::size_t i = 0; i < g.at("alpha").size(); ++i) {
                cfg.grid.alpha.push_back(complexList(g.at("alpha")[i], "grid.alpha[" + std::to_string(i) + "]"));
            }
        }
        if (g.contains("gamma")) {
            cfg.grid.gamma = complexList(g.at("gamma"), "grid.gamma");
        }
        if (g.contains("a")) {
            cfg.grid.a = complexList(g.at("a"), "grid.a");
        }
        if (g.contains("b")) {
            cfg.grid.b = complexList(g.at("b"), "grid.b");
        }
    }
}

void validate(const JobConfig &cfg)
{
    static const std::vector<std::string> known{"eval-fd",          "eval-f",         "eval-phi",
                                                "eval-psi",         "verify-system",  "verify-contiguity",
                                                "check-nonresonance", "check-syzygy", "classify-domain",
                                                "weyl-verify",      "sweep"};
    if (std::find(known.begin(), known.end(), cfg.command) == known.end()) {
        throw InputError("unknown command '" + cfg.command + "'");
    }
    if (cfg.K < 0 || cfg.K > 200) {
        throw InputError("K must lie in [0, 200]");
    }
    if (!(cfg.tol > 0.0)) {
        throw InputError("tol must be positive");
    }
    if (cfg.samples < 1) {
        throw InputError("samples must be positive");
    }
    const std::string &c = cfg.command;
    if (c == "eval-fd") {
        if (!cfg.fd) {
            throw InputError("eval-fd needs an \"fd\" block");
        }
        if (cfg.fd->b.size() != cfg.fdZ.size()) {
            throw InputError("fd.b and fd.z must have the same length");
        }
        return;
    }
    if (c == "weyl-verify" || c == "check-syzygy") {
        return;
    }
    if (!cfg.haveParams) {
        throw InputError(c + " needs parameters (alpha, gamma, a, b)");
    }
    try {
        cfg.params.validate();
    } catch (const DomainError &e) {
        throw InputError(e.what());
    }
    const bool needsPoint = c == "eval-f" || c == "eval-phi" || c == "eval-psi" || c == "classify-domain";
    if (needsPoint && cfg.points.empty()) {
        throw InputError(c + " needs a point \"x\"");
    }
    if (cfg.ell < 0 || cfg.ell >= cfg.params.n) {
        throw InputError("ell must lie in [1, n]");
    }
    if (cfg.k && (*cfg.k < 0 || *cfg.k >= cfg.params.n)) {
        throw InputError("k must lie in [1, n]");
    }
}

} // namespace ihg::cli
