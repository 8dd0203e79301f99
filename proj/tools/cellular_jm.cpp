#include "cjm/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

cjm::Rational parse_rational(const std::string& text, const std::string& what) {
    auto r = cjm::Rational::parse(text);
    if (!r) throw cjm::ConfigError("cannot parse " + what + ": '" + text + "'");
    return *r;
}

int run_verify(const std::string& family, int n, int m, const std::string& q, const std::string& u,
               const std::string& checks, const std::string& jsonPath) {
    cjm::RunConfig cfg;
    cfg.family = family;
    if (n >= 0) cfg.n = n;
    if (m >= 0) cfg.m = m;
    if (!q.empty()) cfg.q = parse_rational(q, "--q");
    if (!u.empty()) {
        std::vector<cjm::Rational> values;
        for (const auto& piece : split_commas(u)) values.push_back(parse_rational(piece, "--u entry"));
        cfg.u = values;
    }
    cfg.checks = split_commas(checks);

    cjm::RunResult result = cjm::run(cfg);
    std::cout << result.human;
    if (!jsonPath.empty()) {
        std::ofstream out(jsonPath, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << jsonPath << "\n";
            return 2;
        }
        out << result.report.dump(2) << "\n";
        std::cout << "report written to " << jsonPath << "\n";
    }
    return result.exitCode;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification workbench for cellular algebras with Jucys-Murphy elements"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "build an instance and run checks");
    std::string family;
    int n = -1, m = -1;
    std::string q, u, checks = "all", jsonPath;
    verify->add_option("family", family, "symmetric-group | hecke-a | ariki-koike-model | counterexample")
        ->required();
    verify->add_option("--n", n, "number of strands");
    verify->add_option("--m", m, "number of components (ariki-koike-model)");
    verify->add_option("--q", q, "deformation parameter, as p or p/q");
    verify->add_option("--u", u, "comma-separated cyclotomic parameters");
    verify->add_option("--checks", checks, "comma-separated subset of cellularity,jm,separation,seminormal,center,main-theorem,lemmas, or all");
    verify->add_option("--json", jsonPath, "write the JSON report here");

    auto* params = app.add_subcommand("params", "search deterministic valid parameters");
    int pn = 0, pm = 0;
    params->add_option("--n", pn, "number of strands")->required();
    params->add_option("--m", pm, "number of components")->required();

    try {
        app.parse(argc, argv);
        if (verify->parsed()) return run_verify(family, n, m, q, u, checks, jsonPath);
        std::cout << cjm::params_text(pn, pm);
        return 0;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const cjm::ConfigError& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
