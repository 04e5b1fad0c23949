// lrt: exact-arithmetic checker for Lie-Rinehart triple structures.
//
// Subcommands: check, cohomology, spectral, mutate, catalog.  Instances are
// referenced by catalog name or by the path of a JSON instance file (see
// docs/schema.md).  Exit codes: 0 all requested checks pass, 1 some check
// fails, 2 input or usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "lrt/catalog.hpp"
#include "lrt/io.hpp"
#include "lrt/mutate.hpp"
#include "lrt/spectral.hpp"

using namespace lrt;
using nlohmann::ordered_json;

namespace {

TripleData resolve_instance(const std::string& ref) {
    if (std::filesystem::exists(ref)) return load_instance(ref);
    try {
        return catalog_get(ref);
    } catch (const std::invalid_argument& e) {
        throw InstanceParseError(std::string(e.what()) +
                                 " (and no such file exists)");
    }
}

struct Options {
    std::string format = "text";
    bool json() const { return format == "json"; }
};

void emit_reports(const std::vector<SuiteReport>& reports,
                  const Options& opt) {
    if (opt.json()) {
        if (reports.size() == 1) {
            std::cout << render_json(reports.front()) << "\n";
        } else {
            std::string out = "[";
            for (std::size_t i = 0; i < reports.size(); ++i) {
                if (i) out += ",";
                out += render_json(reports[i]);
            }
            out += "]";
            std::cout << out << "\n";
        }
    } else {
        for (const auto& r : reports) std::cout << render_text(r) << "\n";
    }
}

int run_check(const std::string& ref, const std::string& suite,
              std::uint64_t seed, const Options& opt) {
    const TripleData t = resolve_instance(ref);
    std::vector<SuiteReport> reports;
    auto want = [&](const char* name) {
        return suite == "all" || suite == name;
    };
    if (want("triple")) reports.push_back(check_triple(t, seed));
    if (want("multicomplex")) reports.push_back(check_multicomplex(t));
    if (want("quasi-lr")) reports.push_back(check_quasi_lr(t));
    if (want("gerstenhaber"))
        reports.push_back(check_quasi_gerstenhaber(t, seed));
    if (want("bv")) reports.push_back(check_quasi_bv(t));
    if (want("products")) reports.push_back(check_products(t, seed));
    emit_reports(reports, opt);
    for (const auto& r : reports)
        if (!r.all_pass()) return 1;
    return 0;
}

void print_dims_report(const std::string& instance, const std::string& of,
                       const ordered_json& payload, const Options& opt) {
    if (opt.json()) {
        ordered_json j;
        j["instance"] = instance;
        j["of"] = of;
        for (const auto& [k, v] : payload.items()) j[k] = v;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "instance: " << instance << "\n";
        std::cout << "of: " << of << "\n";
        for (const auto& [k, v] : payload.items())
            std::cout << k << ": " << v.dump() << "\n";
    }
}

int run_cohomology(const std::string& ref, const std::string& of,
                   const Options& opt) {
    const TripleData t = resolve_instance(ref);
    const SuiteReport pre = check_triple(t);
    if (!pre.all_pass()) {
        std::vector<SuiteReport> r = {pre};
        if (!opt.json())
            std::cout << "refusing: the structure checks fail on '" << t.name
                      << "'\n\n";
        emit_reports(r, opt);
        return 1;
    }
    ordered_json payload;
    if (of == "H" || of == "Q" || of == "quasi-lr") {
        const CohomologyLR h = cohomology_lr(t);
        if (of != "Q") payload["dims_H"] = h.dims_a;
        if (of != "H") payload["dims_Q"] = h.dims_q;
        if (!h.report.all_pass()) {
            emit_reports({h.report}, opt);
            return 1;
        }
    } else if (of == "total") {
        payload["dims"] = cohomology_of(triple_ss(t));
    } else if (of == "G") {
        try {
            const GBig g = build_G(t);
            const BigradedOp delta = build_delta_omega(t);
            const HomologyBV h = homology_bv(g, delta);
            payload["dims"] = h.dims;
            if (!h.report.all_pass()) {
                emit_reports({h.report}, opt);
                return 1;
            }
        } catch (const NotInvariantError& e) {
            std::cout << (opt.json()
                              ? std::string("{\"error\":\"") + e.what() +
                                    "\"}"
                              : std::string("refusing: ") + e.what())
                      << "\n";
            return 1;
        }
    }
    print_dims_report(t.name, of, payload, opt);
    return 0;
}

int run_spectral(const std::string& ref, const std::string& which,
                 long n_pages, const Options& opt) {
    const TripleData t = resolve_instance(ref);
    FilteredComplex fc;
    if (which == "triple") {
        fc = triple_ss(t);
    } else {
        const GBig g = build_G(t);
        fc = bv_ss(g, build_delta_omega(t));
    }
    const std::size_t rmax =
        n_pages >= 0 ? static_cast<std::size_t>(n_pages) : t.nQ + 2;
    const auto pg = pages(fc, rmax);
    std::size_t stable = pg.size() - 1;
    while (stable > 0 && pg[stable - 1].dims == pg.back().dims) --stable;
    const SuiteReport rep = convergence_check(fc, pg);

    ordered_json jpages = ordered_json::array();
    for (const auto& p : pg) {
        ordered_json jp;
        jp["r"] = p.r;
        ordered_json cells = ordered_json::array();
        ordered_json ranks = ordered_json::array();
        for (std::size_t l = 0; l < p.levels; ++l)
            for (std::size_t m = 0; m < p.length; ++m) {
                const long pp =
                    p.p_base + p.p_sign * static_cast<long>(l);
                const long qq =
                    static_cast<long>(m) - static_cast<long>(l) + p.q_base;
                if (p.dims[l][m] > 0)
                    cells.push_back({{"p", pp},
                                     {"q", qq},
                                     {"dim", p.dims[l][m]}});
                const std::size_t rk = rank(p.d[l][m]);
                if (rk > 0)
                    ranks.push_back({{"p", pp}, {"q", qq}, {"rank", rk}});
            }
        jp["cells"] = cells;
        jp["d_ranks"] = ranks;
        jpages.push_back(jp);
    }
    if (opt.json()) {
        ordered_json j;
        j["instance"] = t.name;
        j["which"] = which;
        j["pages"] = jpages;
        j["stable_from"] = stable;
        j["limit_totals"] = pg.back().totals();
        j["cohomology"] = cohomology_of(fc);
        j["convergence"] = rep.all_pass() ? "pass" : "fail";
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "instance: " << t.name << "\nfiltration: " << which
                  << "\n";
        for (const auto& jp : jpages) {
            std::cout << "page " << jp["r"] << ":";
            for (const auto& c : jp["cells"])
                std::cout << " (" << c["p"] << "," << c["q"] << "):"
                          << c["dim"];
            for (const auto& c : jp["d_ranks"])
                std::cout << " d@(" << c["p"] << "," << c["q"]
                          << ")rk" << c["rank"];
            std::cout << "\n";
        }
        std::cout << "stable from page " << stable << "\n";
        std::cout << "convergence: " << (rep.all_pass() ? "pass" : "fail")
                  << "\n";
    }
    return rep.all_pass() ? 0 : 1;
}

std::vector<std::string> failing_ids(const TripleData& t,
                                     std::uint64_t seed) {
    std::vector<std::string> out;
    for (const SuiteReport& r :
         {check_triple(t, seed), check_multicomplex(t), check_quasi_lr(t),
          check_quasi_bv(t)})
        for (const auto& c : r.checks)
            if (!c.pass) out.push_back(r.suite + "/" + c.id);
    return out;
}

int run_mutate(const std::string& ref, const std::string& target,
               std::uint64_t seed, const Options& opt) {
    const TripleData base = resolve_instance(ref);
    TripleData mutant = base;
    std::string description;
    if (target == "delta-zero") {
        for (auto& row : mutant.delta)
            for (auto& m : row) m = mutant.hZero();
        mutant.name = base.name + ".mutant";
        description = "delta zeroed";
    } else {
        mutant = mutate_random(base, seed, target, &description);
    }
    const auto before = failing_ids(base, seed);
    const auto after = failing_ids(mutant, seed);
    std::vector<std::string> flipped;
    for (const auto& id : after)
        if (std::find(before.begin(), before.end(), id) == before.end())
            flipped.push_back(id);
    for (const auto& id : before)
        if (std::find(after.begin(), after.end(), id) == after.end())
            flipped.push_back("recovered:" + id);
    if (opt.json()) {
        ordered_json j;
        j["instance"] = base.name;
        j["target"] = target;
        j["seed"] = seed;
        j["mutation"] = description;
        j["failing_before"] = before;
        j["failing_after"] = after;
        j["flipped"] = flipped;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "instance: " << base.name << "\nmutation: "
                  << description << " (target " << target << ", seed "
                  << seed << ")\n";
        std::cout << "failing before: " << before.size()
                  << ", after: " << after.size() << "\n";
        for (const auto& id : flipped) std::cout << "flipped: " << id
                                                 << "\n";
    }
    return 0;
}

int run_catalog(const Options& opt) {
    const auto names = catalog_names();
    if (opt.json()) {
        ordered_json j = ordered_json::array();
        for (const auto& n : names) {
            const TripleData t = catalog_get(n);
            j.push_back({{"name", n},
                         {"dim_A", t.A.dim},
                         {"rank_H", t.nH},
                         {"rank_Q", t.nQ},
                         {"orientation", t.orientation.has_value()}});
        }
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& n : names) {
            const TripleData t = catalog_get(n);
            std::cout << n << ": dim A = " << t.A.dim << ", rank H = "
                      << t.nH << ", rank Q = " << t.nQ
                      << (t.orientation ? ", oriented" : "") << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checker for Lie-Rinehart triple structures"};
    app.require_subcommand(1);
    Options opt;
    std::uint64_t seed = 1;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", seed, "seed for sampled checks and mutations")
        ->capture_default_str();

    std::string ref, suite = "all", of = "total", which = "triple";
    std::string target = "random";
    long n_pages = -1;

    CLI::App* c_check = app.add_subcommand("check", "run identity suites");
    c_check->add_option("instance", ref, "catalog name or file path")
        ->required();
    c_check->add_option("--suite", suite, "which suite to run")
        ->check(CLI::IsMember({"triple", "multicomplex", "quasi-lr",
                               "gerstenhaber", "bv", "products", "all"}))
        ->capture_default_str();

    CLI::App* c_coh =
        app.add_subcommand("cohomology", "graded dimension computations");
    c_coh->add_option("instance", ref, "catalog name or file path")
        ->required();
    c_coh->add_option("--of", of, "which cohomology")
        ->check(CLI::IsMember({"H", "Q", "total", "quasi-lr", "G"}))
        ->capture_default_str();

    CLI::App* c_spec =
        app.add_subcommand("spectral", "filtered-complex page computations");
    c_spec->add_option("instance", ref, "catalog name or file path")
        ->required();
    c_spec->add_option("--which", which, "filtration to use")
        ->check(CLI::IsMember({"triple", "bv"}))
        ->capture_default_str();
    c_spec->add_option("--pages", n_pages,
                       "last page to compute (default: rank Q + 2)");

    CLI::App* c_mut =
        app.add_subcommand("mutate", "perturb one structure constant");
    c_mut->add_option("instance", ref, "catalog name or file path")
        ->required();
    c_mut->add_option("--target", target, "which table to perturb")
        ->check(CLI::IsMember({"random", "bracket_H", "bracket_Q", "delta",
                               "conn_HQ", "conn_QH", "delta-zero"}))
        ->capture_default_str();

    CLI::App* c_cat =
        app.add_subcommand("catalog", "list built-in instances");

    // allow the global --format/--seed to appear after the subcommand too
    for (CLI::App* s : {c_check, c_coh, c_spec, c_mut, c_cat})
        s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_check->parsed()) return run_check(ref, suite, seed, opt);
        if (c_coh->parsed()) return run_cohomology(ref, of, opt);
        if (c_spec->parsed()) return run_spectral(ref, which, n_pages, opt);
        if (c_mut->parsed()) return run_mutate(ref, target, seed, opt);
        if (c_cat->parsed()) return run_catalog(opt);
    } catch (const InstanceParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
