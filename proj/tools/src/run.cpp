#include "ihg_cli/run.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ihg/contiguity.hpp"
#include "ihg/gkz_basis.hpp"
#include "ihg/lauricella.hpp"
#include "ihg/residuals.hpp"
#include "ihg/syzygy.hpp"
#include "ihg/system.hpp"
#include "ihg/weyl_generators.hpp"
#include "ihg_cli/sampling.hpp"

namespace ihg::cli {

namespace {

constexpr double kSeriesResidualTol = 1e-12;
constexpr double kIntegralResidualTol = 1e-6;

Json paramsJson(const SystemParams &p)
{
    Json j;
    j["n"] = p.n;
    j["alpha"] = complexVectorToJson(p.alpha);
    j["gamma"] = complexToJson(p.gamma);
    j["a"] = complexToJson(p.a);
    j["b"] = complexToJson(p.b);
    return j;
}

Json warningsJson(const std::vector<std::string> &w)
{
    Json a = Json::array();
    for (const auto &s : w) {
        a.push_back(s);
    }
    return a;
}

Json permutationJson(const std::vector<int> &perm)
{
    Json a = Json::array();
    for (int v : perm) {
        a.push_back(v + 1);
    }
    return a;
}

Json residualJson(const ResidualReport &r)
{
    Json j;
    j["pass"] = r.pass;
    j["tolerance"] = r.tolerance;
    j["reliable_order"] = r.reliableOrder;
    Json eqs = Json::object();
    for (const auto &e : r.entries) {
        Json x;
        x["family"] = e.family;
        x["max_abs"] = e.maxAbs;
        x["max_relative"] = e.maxRelative;
        x["compared"] = e.comparedTerms;
        x["pass"] = e.pass;
        eqs[e.equation] = x;
    }
    j["equations"] = eqs;
    return j;
}

std::vector<Point> pointsOrSamples(const JobConfig &cfg)
{
    if (!cfg.points.empty()) {
        return cfg.points;
    }
    return samplePointsU0(cfg.params.n, cfg.params.a, cfg.params.b, cfg.samples, cfg.seed);
}

Json pointsJson(const std::vector<Point> &pts)
{
    Json a = Json::array();
    for (const Point &x : pts) {
        a.push_back(pointToJson(x));
    }
    return a;
}

int runEvalFD(const JobConfig &cfg, Json &out)
{
    const FDResult r = evalFD(*cfg.fd, cfg.fdZ, cfg.K);
    out["value"] = complexToJson(r.value);
    out["K"] = cfg.K;
    out["last_shell_delta"] = r.lastShellDelta;
    out["converged"] = r.converged;
    out["warnings"] = warningsJson(r.warnings);
    return kPass;
}

int runEvalF(const JobConfig &cfg, Json &out)
{
    const SeriesValue v = evalF(cfg.params, cfg.points.front(), cfg.K);
    out["value"] = complexToJson(v.value);
    out["reliable_order"] = v.reliableOrder;
    out["converged"] = v.converged;
    out["u0_radius"] = u0Radius(cfg.params, cfg.points.front());
    out["warnings"] = warningsJson(v.warnings);
    return kPass;
}

int runEvalPhi(const JobConfig &cfg, Json &out)
{
    const IntegralValue v = evalPhi(cfg.params, cfg.points.front(), cfg.tol);
    out["value"] = complexToJson(v.value);
    out["error_estimate"] = v.errorEstimate;
    out["intervals"] = v.intervals;
    out["converged"] = v.converged;
    out["warnings"] = warningsJson(v.warnings);
    return kPass;
}

int runEvalPsi(const JobConfig &cfg, Json &out)
{
    const SeriesValue v = cfg.sigma ? permuteBasis(cfg.params, *cfg.sigma, cfg.ell, cfg.points.front(), cfg.K)
                                    : evalPsi(cfg.params, cfg.ell, cfg.points.front(), cfg.K);
    out["ell"] = cfg.ell + 1;
    if (cfg.sigma) {
        out["sigma"] = permutationJson(*cfg.sigma);
    }
    out["value"] = complexToJson(v.value);
    out["reliable_order"] = v.reliableOrder;
    out["converged"] = v.converged;
    out["warnings"] = warningsJson(v.warnings);
    return kPass;
}

int runVerifySystem(const JobConfig &cfg, Json &out)
{
    const SystemParams &p = cfg.params;
    out["solution"] = cfg.solution;
    ResidualReport rep;
    if (cfg.solution == "F") {
        rep = verifySeriesResiduals(p, particularSeries(p, cfg.K), Inhomogeneity::BoundaryTerm, kSeriesResidualTol);
    } else if (cfg.solution == "Psi") {
        const TruncatedSeries s =
            cfg.sigma ? permutedPsiSeries(p, *cfg.sigma, cfg.ell, cfg.K) : psiSeries(p, cfg.ell, cfg.K);
        out["ell"] = cfg.ell + 1;
        if (cfg.sigma) {
            out["sigma"] = permutationJson(*cfg.sigma);
        }
        rep = verifySeriesResiduals(p, s, Inhomogeneity::Zero, kSeriesResidualTol);
    } else if (cfg.solution == "Phi") {
        const auto pts = pointsOrSamples(cfg);
        out["points"] = pointsJson(pts);
        out["quadrature_tol"] = cfg.tol;
        rep = verifyIntegralResiduals(p, pts, cfg.tol, kIntegralResidualTol);
    } else {
        throw InputError("solution must be F, Psi or Phi");
    }
    out["K"] = cfg.K;
    out["residuals"] = residualJson(rep);
    out["pass"] = rep.pass;
    return rep.pass ? kPass : kCheckFailed;
}

int runVerifyContiguity(const JobConfig &cfg, Json &out)
{
    std::vector<Relation> rels;
    if (cfg.relation.empty()) {
        rels = allRelations();
    } else {
        const auto r = parseRelation(cfg.relation);
        if (!r) {
            throw InputError("unknown relation '" + cfg.relation + "'");
        }
        rels.push_back(*r);
    }
    std::vector<Representation> reps;
    if (cfg.representation == "phi" || cfg.representation == "both") {
        reps.push_back(Representation::Integral);
    }
    if (cfg.representation == "series" || cfg.representation == "both") {
        reps.push_back(Representation::Series);
    }
    if (reps.empty()) {
        throw InputError("representation must be phi, series or both");
    }
    const auto pts = pointsOrSamples(cfg);
    ContiguityOptions opts;
    opts.K = cfg.K;
    opts.quadTol = cfg.tol;
    out["K"] = cfg.K;
    out["quadrature_tol"] = cfg.tol;
    out["points"] = pointsJson(pts);
    Json results = Json::array();
    bool pass = true;
    for (Relation r : rels) {
        for (int k = 0; k < cfg.params.n; ++k) {
            if (cfg.k && *cfg.k != k) {
                continue;
            }
            for (Representation rep : reps) {
                const ContiguityReport c = verifyContiguity(cfg.params, pts, r, k, rep, opts);
                Json j;
                j["relation"] = relationName(r);
                j["k"] = k + 1;
                j["representation"] = representationName(rep);
                j["threshold"] = c.threshold;
                j["max_relative_gap"] = c.maxRelGap;
                j["pass"] = c.pass;
                Json samples = Json::array();
                for (const auto &s : c.samples) {
                    samples.push_back({{"lhs", complexToJson(s.lhs)},
                                       {"rhs", complexToJson(s.rhs)},
                                       {"abs_gap", s.absGap},
                                       {"rel_gap", s.relGap}});
                }
                j["samples"] = samples;
                results.push_back(j);
                pass = pass && c.pass;
            }
        }
    }
    out["relations"] = results;
    out["pass"] = pass;
    return pass ? kPass : kCheckFailed;
}

int runNonresonance(const JobConfig &cfg, Json &out)
{
    const int bound = cfg.searchBound.value_or(2 * cfg.K);
    const NonresonanceResult r = checkTNonresonant(cfg.params, bound);
    out["nonresonant"] = r.nonresonant;
    out["search_bound"] = r.searchBound;
    out["certificate"] = r.nonresonant ? "bounded: no witness with |m|, |m'| <= search_bound" : "witness";
    if (r.witness) {
        const auto &w = *r.witness;
        Json d = Json::array();
        for (int i = 0; i < 2; ++i) {
            Json row = Json::array();
            for (int j = 0; j < cfg.params.n; ++j) {
                row.push_back(w.difference(i, j));
            }
            d.push_back(row);
        }
        out["witness"] = {{"ell", w.ell + 1},      {"ell_prime", w.ellPrime + 1}, {"sign", w.sign},
                          {"sign_prime", w.signPrime}, {"m", w.m},               {"m_prime", w.mPrime},
                          {"difference", d}};
    } else {
        out["witness"] = nullptr;
    }
    return kPass;
}

int runSyzygy(const JobConfig &cfg, Json &out)
{
    const int n = cfg.weylN > 0 ? cfg.weylN : cfg.params.n;
    if (n < 1 || n > 6) {
        throw InputError("check-syzygy: n must lie in [1, 6]");
    }
    const SyzygyReport r = checkSyzygyConditions(n);
    out["n"] = n;
    Json conds = Json::array();
    for (const auto &c : r.conditions) {
        conds.push_back({{"name", c.name}, {"kind", c.kind}, {"pass", c.pass}, {"residual_terms", c.residualTerms}});
    }
    out["conditions"] = conds;
    out["syz1"] = r.syz1;
    out["syz2"] = r.syz2;
    const SyzygyReport control =
        checkSyzygyConditions(n, PowerProductSum<ParamPoly>::boundaryFunction(n).multipliedByX(0, 0));
    out["negative_control"] = {{"perturbation", "x11 * g"}, {"syz1", control.syz1}, {"syz2", control.syz2}};
    out["pass"] = r.pass;
    return r.pass ? kPass : kCheckFailed;
}

int runClassify(const JobConfig &cfg, Json &out)
{
    Json a = Json::array();
    for (const Point &x : cfg.points) {
        const DomainReport d = classifyDomain(x, cfg.params.a, cfg.params.b);
        Json j;
        j["ratios"] = d.ratios;
        j["bound"] = std::isfinite(d.bound) ? Json(d.bound) : Json(nullptr);
        j["in_u0"] = d.inU0;
        j["distinct"] = d.distinct;
        j["sigma"] = d.sigma ? permutationJson(*d.sigma) : Json(nullptr);
        a.push_back(j);
    }
    out["points"] = a;
    return kPass;
}

int runWeyl(const JobConfig &cfg, Json &out)
{
    const int n = cfg.weylN > 0 ? cfg.weylN : cfg.params.n;
    if (n < 1 || n > 8) {
        throw InputError("weyl-verify: n must lie in [1, 8]");
    }
    out["n"] = n;
    Json entries = Json::array();
    bool pass = true;
    for (const WeylVerifyEntry &e : weylVerify(n)) {
        entries.push_back({{"k", e.k + 1},
                           {"L1_ok", e.l1Ok},
                           {"L2_ok", e.l2Ok},
                           {"variant_used", {{"L1", e.l1Variant}, {"L2", e.l2Variant}}},
                           {"L1_literal_ok", e.l1LiteralOk},
                           {"L2_literal_ok", e.l2LiteralOk}});
        pass = pass && e.l1Ok && e.l2Ok;
    }
    out["entries"] = entries;
    out["pass"] = pass;
    return pass ? kPass : kCheckFailed;
}

void flattenInto(const Json &j, const std::string &path, std::ostringstream &os)
{
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            flattenInto(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            flattenInto(j[i], path + "[" + std::to_string(i) + "]", os);
        }
    } else if (j.is_number_float()) {
        os << path << ',' << formatDouble(j.get<double>()) << '\n';
    } else if (j.is_string()) {
        std::string s = j.get<std::string>();
        std::replace(s.begin(), s.end(), ',', ';');
        os << path << ',' << s << '\n';
    } else {
        os << path << ',' << j.dump() << '\n';
    }
}

} // namespace

std::string flattenCsv(const Json &report)
{
    std::ostringstream os;
    os << "key,value\n";
    flattenInto(report, "", os);
    return os.str();
}

Json sweepRows(const JobConfig &cfg)
{
    const SystemParams &base = cfg.params;
    const auto alphas = cfg.grid.alpha.empty() ? std::vector<std::vector<Complex>>{base.alpha} : cfg.grid.alpha;
    const auto gammas = cfg.grid.gamma.empty() ? std::vector<Complex>{base.gamma} : cfg.grid.gamma;
    const auto as = cfg.grid.a.empty() ? std::vector<Complex>{base.a} : cfg.grid.a;
    const auto bs = cfg.grid.b.empty() ? std::vector<Complex>{base.b} : cfg.grid.b;
    Json rows = Json::array();
    int index = 0;
    for (const auto &alpha : alphas) {
        for (const Complex &gamma : gammas) {
            for (const Complex &a : as) {
                for (const Complex &b : bs) {
                    SystemParams p = base;
                    p.alpha = alpha;
                    p.gamma = gamma;
                    p.a = a;
                    p.b = b;
                    Json row;
                    row["row"] = index;
                    row["params"] = paramsJson(p);
                    try {
                        if (static_cast<int>(alpha.size()) != base.n) {
                            throw DomainError("grid alpha has the wrong length");
                        }
                        const Point x = cfg.points.empty()
                                            ? samplePointsU0(p.n, a, b, 1, cfg.seed + static_cast<std::uint64_t>(index))
                                                  .front()
                                            : cfg.points.front();
                        row["x"] = pointToJson(x);
                        const SeriesValue f = evalF(p, x, cfg.K);
                        const IntegralValue phi = evalPhi(p, x, cfg.tol);
                        const ResidualReport res = verifySeriesResiduals(p, particularSeries(p, std::min(cfg.K, 15)),
                                                                         Inhomogeneity::BoundaryTerm);
                        double resMax = 0.0;
                        for (const auto &e : res.entries) {
                            resMax = std::max(resMax, e.maxRelative);
                        }
                        const double scale = std::abs(phi.value);
                        row["F"] = complexToJson(f.value);
                        row["Phi"] = complexToJson(phi.value);
                        row["rel_gap"] = std::abs(f.value - phi.value) / (scale > 0.0 ? scale : 1.0);
                        row["residual_max"] = resMax;
                        row["error"] = "";
                    } catch (const std::exception &e) {
                        row["error"] = e.what();
                    }
                    rows.push_back(row);
                    ++index;
                }
            }
        }
    }
    return rows;
}

std::string sweepCsv(const Json &rows, int n)
{
    std::ostringstream os;
    os << "row";
    for (int k = 1; k <= n; ++k) {
        os << ",alpha" << k << "_re,alpha" << k << "_im";
    }
    os << ",gamma_re,gamma_im,a_re,a_im,b_re,b_im,F_re,F_im,Phi_re,Phi_im,rel_gap,residual_max,error\n";
    auto pair = [&](const Json &z) {
        os << ',' << formatDouble(z[0].get<double>()) << ',' << formatDouble(z[1].get<double>());
    };
    auto blankPair = [&]() { os << ",,"; };
    for (const Json &row : rows) {
        const Json &p = row["params"];
        os << row["row"].get<int>();
        for (const Json &a : p["alpha"]) {
            pair(a);
        }
        for (int k = static_cast<int>(p["alpha"].size()); k < n; ++k) {
            blankPair();
        }
        pair(p["gamma"]);
        pair(p["a"]);
        pair(p["b"]);
        const bool ok = row["error"].get<std::string>().empty();
        if (ok) {
            pair(row["F"]);
            pair(row["Phi"]);
            os << ',' << formatDouble(row["rel_gap"].get<double>()) << ','
               << formatDouble(row["residual_max"].get<double>()) << ',';
        } else {
            blankPair();
            blankPair();
            std::string msg = row["error"].get<std::string>();
            std::replace(msg.begin(), msg.end(), ',', ';');
            std::replace(msg.begin(), msg.end(), '"', '\'');
            os << ",,,\"" << msg << '"';
        }
        os << '\n';
    }
    return os.str();
}

RunResult run(const JobConfig &cfg)
{
    RunResult result;
    Json out;
    out["command"] = cfg.command;
    try {
        validate(cfg);
        if (cfg.haveParams) {
            out["params"] = paramsJson(cfg.params);
        }
        const std::string &c = cfg.command;
        if (c == "eval-fd") {
            result.exitCode = runEvalFD(cfg, out);
        } else if (c == "eval-f") {
            result.exitCode = runEvalF(cfg, out);
        } else if (c == "eval-phi") {
            result.exitCode = runEvalPhi(cfg, out);
        } else if (c == "eval-psi") {
            result.exitCode = runEvalPsi(cfg, out);
        } else if (c == "verify-system") {
            result.exitCode = runVerifySystem(cfg, out);
        } else if (c == "verify-contiguity") {
            result.exitCode = runVerifyContiguity(cfg, out);
        } else if (c == "check-nonresonance") {
            result.exitCode = runNonresonance(cfg, out);
        } else if (c == "check-syzygy") {
            result.exitCode = runSyzygy(cfg, out);
        } else if (c == "classify-domain") {
            result.exitCode = runClassify(cfg, out);
        } else if (c == "weyl-verify") {
            result.exitCode = runWeyl(cfg, out);
        } else if (c == "sweep") {
            out["K"] = cfg.K;
            out["tol"] = cfg.tol;
            out["rows"] = sweepRows(cfg);
            result.exitCode = kPass;
        }
    } catch (const InputError &e) {
        out["error"] = e.what();
        result.exitCode = kInvalidInput;
    } catch (const DomainError &e) {
        out["error"] = e.what();
        result.exitCode = kInvalidInput;
    } catch (const PoleError &e) {
        out["error"] = e.what();
        result.exitCode = kNumericalBreakdown;
    } catch (const BranchError &e) {
        out["error"] = e.what();
        result.exitCode = kNumericalBreakdown;
    } catch (const Json::exception &e) {
        out["error"] = e.what();
        result.exitCode = kInvalidInput;
    }
    out["exit_code"] = result.exitCode;
    result.report = out;
    if (cfg.format == OutputFormat::Csv) {
        result.text = cfg.command == "sweep" && out.contains("rows") ? sweepCsv(out["rows"], cfg.params.n)
                                                                    : flattenCsv(out);
    } else {
        result.text = out.dump(2) + "\n";
    }
    return result;
}

} // namespace ihg::cli
