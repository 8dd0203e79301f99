#include "cjm/report.hpp"

#include "cjm/center.hpp"
#include "cjm/seminormal.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace cjm {

namespace {

const std::vector<std::string> kCheckOrder{"cellularity", "jm",           "separation", "seminormal",
                                           "center",      "main-theorem", "lemmas"};

struct CheckOutcome {
    std::string name;
    std::string status; // pass | fail | inapplicable
    std::string witness;
    std::string detail; // human-readable extra, not serialized
};

void require(bool ok, const std::string& why) {
    if (!ok) throw ConfigError(why);
}

AlgebraInstance build_from_config(RunConfig& cfg) {
    const std::string& f = cfg.family;
    require(f == "symmetric-group" || f == "hecke-a" || f == "ariki-koike-model" || f == "counterexample",
            "unknown family: " + f);
    if (f == "symmetric-group") {
        require(cfg.n.has_value(), "symmetric-group requires --n");
        require(!cfg.m && !cfg.q && !cfg.u, "symmetric-group takes no --m, --q or --u");
        require(*cfg.n >= 2 && *cfg.n <= 6, "symmetric-group supports n in 2..6");
        return build_group_algebra(*cfg.n);
    }
    if (f == "hecke-a") {
        require(cfg.n.has_value(), "hecke-a requires --n");
        require(cfg.q.has_value(), "hecke-a requires --q");
        require(!cfg.m && !cfg.u, "hecke-a takes no --m or --u");
        require(*cfg.n >= 2 && *cfg.n <= 5, "hecke-a supports n in 2..5");
        require(!cfg.q->is_zero(), "q must be invertible");
        require(!(*cfg.q == Rational(1)), "q = 1 is excluded for hecke-a");
        SeparationFactors sep = separation_polynomial_factors(*cfg.n, 1, *cfg.q, {Rational(1)});
        for (const auto& fac : sep.factors)
            require(!fac.value.is_zero(), "q fails the separation polynomial: " + fac.label + " = 0");
        return build_hecke_typeA(*cfg.n, *cfg.q);
    }
    if (f == "ariki-koike-model") {
        require(cfg.n.has_value() && cfg.m.has_value(), "ariki-koike-model requires --n and --m");
        require(*cfg.n >= 1 && *cfg.n <= 4, "ariki-koike-model supports n in 1..4");
        require(*cfg.m >= 1 && *cfg.m <= 3, "ariki-koike-model supports m in 1..3");
        require(cfg.q.has_value() == cfg.u.has_value(), "give both --q and --u, or neither");
        AKParams params;
        if (cfg.q) {
            std::string why;
            auto validated = make_validated_ak_params(*cfg.n, *cfg.m, *cfg.q, *cfg.u, &why);
            require(validated.has_value(), "parameters rejected: " + why);
            params = *validated;
        } else {
            params = find_valid_params(*cfg.n, *cfg.m);
            cfg.q = params.q; // echo the values actually used
            cfg.u = params.u;
        }
        return build_ak_seminormal(params);
    }
    require(!cfg.n && !cfg.m && !cfg.q && !cfg.u, "counterexample takes no parameters");
    return build_counterexample_pair();
}

std::string first_or(const std::vector<std::string>& lines, const std::string& fallback) {
    return lines.empty() ? fallback : lines.front();
}

CheckOutcome run_cellularity(const AlgebraInstance& inst) {
    VerificationReport structure = verify_algebra_structure(inst.algebra());
    VerificationReport cellular = verify_cellularity(inst.algebra(), inst.generators);
    CheckOutcome out{"cellularity", "pass", "", ""};
    if (!structure.pass || !cellular.pass) {
        out.status = "fail";
        std::vector<std::string> all = structure.failures;
        all.insert(all.end(), cellular.failures.begin(), cellular.failures.end());
        out.witness = first_or(all, "unspecified failure");
    }
    return out;
}

CheckOutcome run_jm(const AlgebraInstance& inst) {
    JmVerification v = verify_jm_axioms(inst.algebra(), inst.jm, inst.contents);
    CheckOutcome out{"jm", v.report.pass ? "pass" : "fail", "", v.orientation + " action"};
    if (!v.report.pass) out.witness = first_or(v.report.failures, "unspecified failure");
    return out;
}

CheckOutcome run_separation(const AlgebraInstance& inst) {
    SeparationCheck s = verify_separation(inst.contents, inst.algebra().datum());
    CheckOutcome out{"separation", s.pass ? "pass" : "fail", "", s.vacuous ? "vacuous, no comparable pairs" : ""};
    if (!s.pass) out.witness = s.witness;
    return out;
}

CheckOutcome run_seminormal(const AlgebraInstance& inst, nlohmann::ordered_json& gammaOut) {
    SeminormalGate gate = seminormal_applicable(inst.contents, inst.algebra().datum());
    if (!gate.applicable) return {"seminormal", "inapplicable", gate.reason, ""};
    SeminormalSystem sys = build_seminormal(inst.algebra(), inst.jm, inst.contents);
    VerificationReport rep = verify_seminormal_theorems(inst.algebra(), inst.jm, inst.contents, sys);
    const CellDatum& D = inst.algebra().datum();
    for (int g = 0; g < D.member_count(); ++g)
        gammaOut[D.member_label(g)] = sys.gamma[static_cast<std::size_t>(g)].str();
    CheckOutcome out{"seminormal", rep.pass ? "pass" : "fail", "",
                     std::to_string(D.member_count()) + " idempotents"};
    if (!rep.pass) out.witness = first_or(rep.failures, "unspecified failure");
    return out;
}

CheckOutcome run_center(const AlgebraInstance& inst, std::optional<Eigen::Index>& centerDim,
                        std::optional<Eigen::Index>& spanDim) {
    VerificationReport central = verify_prop_sym_central(inst.algebra(), inst.jm);
    VerificationReport converse = verify_prop_converse(inst.algebra(), inst.jm, inst.contents);
    centerDim = static_cast<Eigen::Index>(compute_center(inst.algebra()).size());
    spanDim = static_cast<Eigen::Index>(sym_span(inst.algebra(), inst.jm).size());
    CheckOutcome out{"center", "pass", "",
                     "center dim " + std::to_string(*centerDim) + ", symmetric span dim " + std::to_string(*spanDim)};
    if (!central.pass || !converse.pass) {
        out.status = "fail";
        std::vector<std::string> all = central.failures;
        all.insert(all.end(), converse.failures.begin(), converse.failures.end());
        out.witness = first_or(all, "unspecified failure");
    }
    return out;
}

CheckOutcome run_main_theorem(const AlgebraInstance& inst, std::optional<Eigen::Index>& centerDim,
                              std::optional<Eigen::Index>& spanDim) {
    CenterReport rep = main_theorem_check(inst.algebra(), inst.jm, inst.contents);
    if (!rep.applicable)
        return {"main-theorem", "inapplicable",
                first_or(rep.hypothesisFailures, "symmetric polynomials are not central"), ""};
    centerDim = static_cast<Eigen::Index>(rep.centerBasis.size());
    spanDim = static_cast<Eigen::Index>(rep.symSpanBasis.size());
    std::string conditions = std::string("condition one ") + (rep.conditionOne ? "true" : "false") +
                             ", condition two " + (rep.conditionTwo ? "true" : "false");
    CheckOutcome out{"main-theorem", "pass", "", conditions};
    if (!rep.notes.empty()) out.detail += "; " + rep.notes.front();
    if (!rep.equivalenceHolds) {
        out.status = "fail";
        out.witness = "equivalence broken: " + conditions;
        if (rep.collidingCells)
            out.witness += "; cells " + rep.collidingCells->first + " and " + rep.collidingCells->second +
                           " share a content multiset";
    }
    return out;
}

CheckOutcome run_lemmas(const AlgebraInstance& inst) {
    const CellDatum& D = inst.algebra().datum();
    std::vector<std::vector<Rational>> cellContents;
    for (int cell = 0; cell < D.cell_count(); ++cell)
        cellContents.push_back(inst.contents.sequence(D.global_member(cell, 0)));
    CheckOutcome out{"lemmas", "pass", "", ""};

    std::vector<SymPoly> family = lmjm1_default_family(static_cast<int>(inst.jm.size()));
    bool allDistinct = true;
    for (std::size_t a = 0; a < cellContents.size(); ++a) {
        for (std::size_t b = a + 1; b < cellContents.size(); ++b) {
            std::vector<Rational> sa = cellContents[a], sb = cellContents[b];
            std::sort(sa.begin(), sa.end());
            std::sort(sb.begin(), sb.end());
            bool equal = (sa == sb);
            if (equal) allDistinct = false;
            Lmjm1Result r = lemma_lmjm1_check(cellContents[a], cellContents[b], family);
            if (r.proportional != equal || (r.proportional && !(*r.k == Rational(1)))) {
                out.status = "fail";
                out.witness = "proportionality test disagrees with multiset comparison on cells " +
                              D.cell(static_cast<int>(a)).label + ", " + D.cell(static_cast<int>(b)).label;
                return out;
            }
        }
    }

    auto witness = lemma_lmjm2_triangularize(cellContents);
    if (witness.has_value() != allDistinct) {
        out.status = "fail";
        out.witness = witness ? "triangular family found despite equal content multisets"
                              : "no triangular family despite distinct content multisets";
        return out;
    }
    if (witness) {
        const MatrixXq& M = witness->evaluation;
        bool shapeOk = !witness->det.is_zero();
        for (Eigen::Index r = 0; r < M.rows(); ++r) {
            if (M(r, r) == Rational(0)) shapeOk = false;
            for (Eigen::Index c = 0; c < r; ++c)
                if (!(M(r, c) == Rational(0))) shapeOk = false;
        }
        if (!shapeOk) {
            out.status = "fail";
            out.witness = "triangularization is not upper triangular with nonzero diagonal";
            return out;
        }
        out.detail = "triangular family of " + std::to_string(witness->polys.size()) +
                     ", determinant " + witness->det.str();
    } else {
        out.detail = "no triangular family, consistent with equal content multisets";
    }
    return out;
}

} // namespace

std::vector<std::string> expand_checks(const std::vector<std::string>& requested) {
    bool all = false;
    for (const auto& c : requested) {
        if (c == "all") {
            all = true;
            continue;
        }
        if (std::find(kCheckOrder.begin(), kCheckOrder.end(), c) == kCheckOrder.end())
            throw ConfigError("unknown check: " + c);
    }
    std::vector<std::string> out;
    for (const auto& name : kCheckOrder)
        if (all || std::find(requested.begin(), requested.end(), name) != requested.end()) out.push_back(name);
    if (out.empty()) throw ConfigError("no checks requested");
    return out;
}

RunResult run(const RunConfig& config) {
    auto started = std::chrono::steady_clock::now();
    RunConfig cfg = config;
    std::vector<std::string> checks = expand_checks(cfg.checks);
    AlgebraInstance inst = build_from_config(cfg);
    const CellDatum& D = inst.algebra().datum();

    nlohmann::ordered_json gamma = nlohmann::ordered_json::object();
    std::optional<Eigen::Index> centerDim, spanDim;
    std::vector<CheckOutcome> outcomes;
    for (const auto& name : checks) {
        if (name == "cellularity")
            outcomes.push_back(run_cellularity(inst));
        else if (name == "jm")
            outcomes.push_back(run_jm(inst));
        else if (name == "separation")
            outcomes.push_back(run_separation(inst));
        else if (name == "seminormal")
            outcomes.push_back(run_seminormal(inst, gamma));
        else if (name == "center")
            outcomes.push_back(run_center(inst, centerDim, spanDim));
        else if (name == "main-theorem")
            outcomes.push_back(run_main_theorem(inst, centerDim, spanDim));
        else
            outcomes.push_back(run_lemmas(inst));
    }

    RunResult result;
    for (const auto& o : outcomes)
        if (o.status == "fail") result.exitCode = 1;

    nlohmann::ordered_json j;
    j["schemaVersion"] = 1;
    nlohmann::ordered_json jc;
    jc["family"] = cfg.family;
    jc["n"] = cfg.n ? nlohmann::ordered_json(*cfg.n) : nlohmann::ordered_json(nullptr);
    jc["m"] = cfg.m ? nlohmann::ordered_json(*cfg.m) : nlohmann::ordered_json(nullptr);
    jc["q"] = cfg.q ? nlohmann::ordered_json(cfg.q->str()) : nlohmann::ordered_json(nullptr);
    if (cfg.u) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& v : *cfg.u) arr.push_back(v.str());
        jc["u"] = arr;
    } else {
        jc["u"] = nullptr;
    }
    jc["checks"] = checks;
    j["config"] = jc;
    auto jchecks = nlohmann::ordered_json::array();
    for (const auto& o : outcomes) {
        nlohmann::ordered_json e;
        e["name"] = o.name;
        e["status"] = o.status;
        if (!o.witness.empty()) e["witness"] = o.witness;
        jchecks.push_back(e);
    }
    j["checks"] = jchecks;
    nlohmann::ordered_json dims;
    dims["algebra"] = static_cast<long long>(inst.algebra().dim());
    dims["center"] = centerDim ? nlohmann::ordered_json(static_cast<long long>(*centerDim))
                               : nlohmann::ordered_json(nullptr);
    dims["symSpan"] = spanDim ? nlohmann::ordered_json(static_cast<long long>(*spanDim))
                              : nlohmann::ordered_json(nullptr);
    dims["cells"] = D.cell_count();
    j["dimensions"] = dims;
    j["gamma"] = gamma;
    // Kept out of the byte-stable report; wall-clock time goes to the human
    // text instead.
    j["timingMs"] = nullptr;
    result.report = std::move(j);

    std::ostringstream human;
    human << "family " << cfg.family;
    if (cfg.n) human << "  n=" << *cfg.n;
    if (cfg.m) human << "  m=" << *cfg.m;
    if (cfg.q) human << "  q=" << cfg.q->str();
    if (cfg.u) {
        human << "  u=";
        for (std::size_t i = 0; i < cfg.u->size(); ++i) human << (i ? "," : "") << (*cfg.u)[i].str();
    }
    human << "\n";
    human << "dimension " << inst.algebra().dim() << ", cells " << D.cell_count() << ", members "
          << D.member_count() << "\n";
    for (const auto& o : outcomes) {
        human << "  " << o.name << std::string(o.name.size() < 14 ? 14 - o.name.size() : 1, ' ') << o.status;
        if (!o.detail.empty()) human << "  (" << o.detail << ")";
        if (!o.witness.empty()) human << "  [" << o.witness << "]";
        human << "\n";
    }
    if (!gamma.empty()) {
        human << "gamma:";
        for (auto it = gamma.begin(); it != gamma.end(); ++it)
            human << " " << it.key() << "=" << it.value().get<std::string>();
        human << "\n";
    }
    human << "contents:\n";
    for (int g = 0; g < D.member_count(); ++g) {
        human << "  " << D.member_label(g) << ":";
        for (int i = 1; i <= inst.contents.jm_count(); ++i)
            human << " " << inst.contents.content(g, i).str();
        human << "\n";
    }
    auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
    human << "elapsed " << elapsed.count() << " ms\n";
    result.human = human.str();
    return result;
}

std::string params_text(int n, int m) {
    AKParams params = find_valid_params(n, m);
    SeparationFactors sep = separation_polynomial_factors(n, m, params.q, params.u);
    std::ostringstream out;
    out << "n=" << n << " m=" << m << ": q = " << params.q.str() << ", u =";
    for (std::size_t i = 0; i < params.u.size(); ++i) out << (i ? "," : "") << " " << params.u[i].str();
    out << "\nseparation factors:\n";
    for (const auto& f : sep.factors) out << "  " << f.label << " = " << f.value.str() << "\n";
    out << (sep.nonzero ? "all factors nonzero\n" : "a factor vanished\n");
    return out.str();
}

} // namespace cjm
