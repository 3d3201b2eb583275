/**
 * braidcoh — exact cohomology of the braid group on three strands and the
 * modular group, with coefficients in the symmetric powers of the rank-2
 * symplectic representation.
 *
 *   braidcoh compute <group> <i> <n> [int|mod:p] [--json]
 *   braidcoh series  <name|list> [max-degree]
 *   braidcoh verify  <suite|all> [--max-degree N] [--jobs N] [--json] [--output F]
 *
 * Exit codes: 0 success, 1 verification failure, 2 usage error.
 */

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidcoh/amalgam.hpp"
#include "braidcoh/braid.hpp"
#include "braidcoh/cyclic.hpp"
#include "braidcoh/series.hpp"
#include "braidcoh/verify.hpp"

namespace {

using braidcoh::exactalg::AbelianGroup;
using braidcoh::symmod::Weight;
using nlohmann::json;

struct Coefficients {
    bool integral = true;
    long long p = 0;
};

Coefficients parse_coeff(const std::string& s) {
    if (s == "int") return {};
    if (s.rfind("mod:", 0) == 0) {
        const long long p = std::stoll(s.substr(4));
        if (!braidcoh::exactalg::is_prime(p))
            throw std::invalid_argument("coefficient modulus must be prime, got " +
                                        s.substr(4));
        return {false, p};
    }
    throw std::invalid_argument("coefficient ring must be 'int' or 'mod:p', got '" +
                                s + "'");
}

json group_to_json(const std::string& group, long long i, long long n,
                   const AbelianGroup& h) {
    json torsion = json::array();
    for (const auto& q : h.primary_decomposition()) torsion.push_back(q.str());
    return json{{"group", group},
                {"i", i},
                {"n", n},
                {"free_rank", h.free_rank()},
                {"torsion", torsion}};
}

int run_compute(const std::string& group, long long i, long long n,
                const std::string& coeff_str, bool as_json) {
    if (n < 0 || n % 2 != 0) {
        std::cerr << "error: the module degree must be even and nonnegative (the "
                     "coefficient module vanishes in odd degrees); got "
                  << n << "\n";
        return 2;
    }
    if (i < 0) {
        std::cerr << "error: the cohomological index must be nonnegative\n";
        return 2;
    }
    const Coefficients coeff = parse_coeff(coeff_str);
    const Weight w(n);

    if (group == "b3" && i > 2) {
        // top cohomological dimension of the group is 2
        std::cerr << "note: the braid group on three strands has cohomological "
                     "dimension 2, so this group vanishes\n";
        if (as_json) {
            if (coeff.integral)
                std::cout << group_to_json(group, i, n, AbelianGroup()).dump() << "\n";
            else
                std::cout << json{{"group", group}, {"i", i},     {"n", n},
                                  {"coeff", coeff_str}, {"dimension", 0}}
                                 .dump()
                          << "\n";
        } else {
            std::cout << "0\n";
        }
        return 0;
    }

    if (coeff.integral) {
        AbelianGroup h;
        if (group == "z2" || group == "z4" || group == "z6")
            h = braidcoh::cyclic::cohomology(group[1] - '0', i, w);
        else if (group == "sl2z")
            h = braidcoh::amalgam::cohomology(i, w);
        else if (group == "b3")
            h = braidcoh::braid::cohomology(i, w);
        else {
            std::cerr << "error: unknown group '" << group
                      << "' (expected z2, z4, z6, sl2z, b3)\n";
            return 2;
        }
        if (as_json)
            std::cout << group_to_json(group, i, n, h).dump() << "\n";
        else
            std::cout << h.to_string() << "\n";
        return 0;
    }

    long long dim = 0;
    if (group == "z2" || group == "z4" || group == "z6")
        dim = braidcoh::cyclic::cohomology_dimension_mod_p(group[1] - '0', i, w, coeff.p);
    else if (group == "sl2z")
        dim = braidcoh::amalgam::cohomology_dimension_mod_p(i, w, coeff.p);
    else if (group == "b3")
        dim = braidcoh::braid::cohomology_dimension_mod_p(i, w, coeff.p);
    else {
        std::cerr << "error: unknown group '" << group
                  << "' (expected z2, z4, z6, sl2z, b3)\n";
        return 2;
    }
    if (as_json)
        std::cout << json{{"group", group}, {"i", i},         {"n", n},
                          {"coeff", coeff_str}, {"dimension", dim}}
                         .dump()
                  << "\n";
    else if (dim == 0)
        std::cout << "0\n";
    else {
        std::cout << "F_" << coeff.p;
        if (dim > 1) std::cout << "^" << dim;
        std::cout << "\n";
    }
    return 0;
}

int run_series(const std::string& name, long long max_degree) {
    if (name == "list") {
        for (const auto& [id, entry] : braidcoh::series::catalog())
            std::printf("%-20s %s\n", id.c_str(), entry.description.c_str());
        return 0;
    }
    const auto& entry = braidcoh::series::catalog_entry(name); // throws on miss
    if (max_degree < 0) {
        std::cerr << "error: max degree must be nonnegative\n";
        return 2;
    }
    const auto coeffs = entry.series.expand(max_degree);
    for (long long d = 0; d <= max_degree; ++d)
        std::cout << d << "\t" << coeffs[d].str() << "\n";
    return 0;
}

json report_to_json(const braidcoh::verify::VerifyReport& rep) {
    json cases = json::array();
    for (const auto& c : rep.cases)
        cases.push_back(json{{"group", c.group},
                             {"i", c.i},
                             {"n", c.n},
                             {"coeff", c.coeff},
                             {"expected", c.expected},
                             {"computed", c.computed},
                             {"status", c.pass ? "pass" : "fail"}});
    return json{{"suite", rep.suite}, {"cases", std::move(cases)},
                {"passed", rep.passed}, {"failed", rep.failed},
                {"notes", rep.notes},   {"wall_ms", rep.wall_ms}};
}

int run_verify(const std::string& suite, long long max_degree, int jobs,
               bool as_json, const std::string& output_path) {
    bool known = suite == "all";
    for (const auto& s : braidcoh::verify::suite_names()) known = known || s == suite;
    if (!known) {
        std::cerr << "error: unknown suite '" << suite << "'; available: all";
        for (const auto& s : braidcoh::verify::suite_names()) std::cerr << " " << s;
        std::cerr << "\n";
        return 2;
    }
    if (max_degree < 0 || jobs < 1) {
        std::cerr << "error: --max-degree must be nonnegative and --jobs positive\n";
        return 2;
    }

    const auto rep = braidcoh::verify::run_suite(suite, max_degree, jobs);

    if (!output_path.empty()) {
        std::ofstream out(output_path);
        if (!out) {
            std::cerr << "error: cannot write " << output_path << "\n";
            return 2;
        }
        out << report_to_json(rep).dump(2) << "\n";
    }
    if (as_json) {
        std::cout << report_to_json(rep).dump(2) << "\n";
    } else {
        std::cout << "suite: " << rep.suite << "\n"
                  << "cases: " << rep.cases.size() << "\n"
                  << "passed: " << rep.passed << "\n"
                  << "failed: " << rep.failed << "\n"
                  << "wall time: " << rep.wall_ms << " ms\n";
        long long shown = 0;
        for (const auto& c : rep.cases) {
            if (c.pass) continue;
            if (++shown > 25) {
                std::cout << "  ... (" << rep.failed - 25 << " more failures)\n";
                break;
            }
            std::cout << "  FAIL " << c.group << " i=" << c.i << " n=" << c.n << " ["
                      << c.coeff << "]: expected " << c.expected << ", computed "
                      << c.computed << "\n";
        }
        for (const auto& note : rep.notes) std::cout << "note: " << note << "\n";
    }
    return rep.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology of the 3-strand braid group and the modular "
                 "group with symmetric-power coefficients"};
    app.require_subcommand(1);

    std::string group, coeff = "int", name, suite, output_path;
    long long i = 0, n = 0, terms = 24, max_degree = 60;
    int jobs = 1;
    bool json_compute = false, json_verify = false;

    auto* compute = app.add_subcommand("compute", "compute one cohomology group");
    compute->add_option("group,--group", group, "z2, z4, z6, sl2z, or b3")->required();
    compute->add_option("i,--coh-degree", i, "cohomological index")->required();
    compute->add_option("n,--degree", n, "module degree (even)")->required();
    compute->add_option("coeff,--coeff", coeff, "int (default) or mod:p");
    compute->add_flag("--json", json_compute, "machine-readable output");

    auto* series_cmd = app.add_subcommand("series", "expand a catalog series");
    series_cmd->add_option("name", name, "catalog identifier, or 'list'")->required();
    series_cmd->add_option("max-degree", terms, "highest degree to print (default 24)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite,--suite", suite, "suite name or 'all'")->required();
    verify->add_option("--max-degree", max_degree, "degree bound (default 60)");
    verify->add_option("--jobs", jobs, "worker threads (default 1)");
    verify->add_flag("--json", json_verify, "JSON report to stdout");
    verify->add_option("--output", output_path, "write JSON report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (compute->parsed()) return run_compute(group, i, n, coeff, json_compute);
        if (series_cmd->parsed()) return run_series(name, terms);
        if (verify->parsed())
            return run_verify(suite, max_degree, jobs, json_verify, output_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
