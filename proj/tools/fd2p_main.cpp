#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fd2p/constructions.hpp"
#include "fd2p/structure.hpp"
#include "fd2p/suite.hpp"

namespace {

struct CommonArgs {
    uint64_t p = 0;
    uint32_t n = 1;
    std::string poly;
    uint64_t seed = 0;
    uint64_t bound = 1'000'000;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--p", args.p, "Characteristic of the coefficient field (odd prime)")
        ->required();
    cmd->add_option("--n", args.n, "Extension degree over the prime field");
    cmd->add_option("--poly", args.poly,
                    "Defining polynomial as comma-separated residues, constant term first, "
                    "including the leading 1 (e.g. 1,0,1)");
    cmd->add_option("--seed", args.seed, "Seed for all randomized checks");
    cmd->add_option("--bound", args.bound, "Group enumeration bound");
}

std::optional<std::vector<uint64_t>> parse_poly(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return fd2p::poly_from_string(s);
}

std::unique_ptr<fd2p::AlgebraContext> make_context(const CommonArgs& args) {
    auto poly = parse_poly(args.poly);
    if (poly) return std::make_unique<fd2p::AlgebraContext>(args.p, args.n, *poly);
    return std::make_unique<fd2p::AlgebraContext>(args.p, args.n);
}

int cmd_verify(const CommonArgs& args, const std::string& report_path) {
    fd2p::SuiteConfig cfg;
    cfg.p = args.p;
    cfg.n = args.n;
    cfg.poly = parse_poly(args.poly);
    cfg.seed = args.seed;
    cfg.group_bound = args.bound;
    cfg.algebra_bound = 10 * args.bound;

    fd2p::CheckReport report = fd2p::run_suite(cfg);
    for (const auto& rec : report.checks) {
        std::cout << rec.status << "\t" << rec.check_id << " (" << rec.paper_ref << ")";
        if (!rec.reason.empty()) std::cout << " -- " << rec.reason;
        std::cout << "\n";
    }
    std::cout << "summary: " << report.passed() << " pass, " << report.failed() << " fail, "
              << report.skipped() << " skipped\n";

    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) {
            std::cerr << "fd2p: cannot write report to " << report_path << "\n";
            return 2;
        }
        out << report.to_json();
    }
    return report.exit_code();
}

int cmd_basis(const CommonArgs& args, const std::string& family) {
    auto ctx = make_context(args);
    const fd2p::BasisCatalog cat = fd2p::build_catalog(*ctx);

    std::vector<fd2p::LabeledElement> elems;
    if (family == "omega") {
        elems = cat.omega;
        elems.insert(elems.end(), cat.omega_prime.begin(), cat.omega_prime.end());
    } else if (family == "unitary") {
        elems = cat.unitary;
    } else if (family == "symmetric") {
        elems = cat.symmetric;
    } else if (family == "center") {
        elems = cat.center;
    } else if (family == "d_block") {
        elems = cat.d_block;
    } else if (family == "gamma") {
        elems = cat.gamma;
    } else {
        std::cerr << "fd2p: unknown basis family '" << family
                  << "' (expected omega | unitary | symmetric | center | d_block | gamma)\n";
        return 2;
    }

    for (const auto& e : elems)
        std::cout << e.elem.serialize() << "\t" << e.elem.human() << "\n";
    return 0;
}

int cmd_factorize(const CommonArgs& args, uint64_t count, bool exhaustive) {
    auto ctx = make_context(args);
    const fd2p::BasisCatalog cat = fd2p::build_catalog(*ctx);
    const fd2p::Field& F = ctx->field();

    std::vector<fd2p::AlgebraElement> inputs;
    if (exhaustive) {
        uint64_t total =
            fd2p::saturating_pow(F.order(), 4 * ctx->l(), args.bound + 1);
        if (total > args.bound) {
            std::cerr << "fd2p: exhaustive factorization needs |1+Gamma(A)| <= --bound\n";
            return 2;
        }
        std::vector<fd2p::AlgebraElement> basis;
        for (const auto& g : cat.gamma) basis.push_back(g.elem);
        inputs = fd2p::enumerate_f_span(*ctx, basis);
        for (auto& v : inputs) v = ctx->one() + v;
    } else {
        fd2p::Rng rng(args.seed);
        for (uint64_t t = 0; t < count; ++t) {
            fd2p::AlgebraElement x = ctx->zero();
            for (const auto& g : cat.gamma)
                x = x + F.element(rng.below(F.order())) * g.elem;
            inputs.push_back(ctx->one() + x);
        }
    }

    uint64_t exact = 0;
    for (const auto& v : inputs) {
        fd2p::FactorizationTriple f = fd2p::pavesic_factorize(v);
        if (f.l_part * f.d_part * f.u_part != v) {
            std::cout << exact << "/" << inputs.size() << " exact\n";
            std::cout << "counterexample: " << v.serialize() << "\n";
            return 1;
        }
        ++exact;
    }
    std::cout << exact << "/" << inputs.size() << " exact\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unitary units of modular dihedral group algebras", "fd2p"};
    app.require_subcommand(1);

    CommonArgs verify_args;
    std::string report_path;
    CLI::App* verify = app.add_subcommand("verify", "Run the verification suite");
    add_common(verify, verify_args);
    verify->add_option("--report", report_path, "Write the JSON report to this path");

    CommonArgs basis_args;
    std::string family;
    CLI::App* basis = app.add_subcommand("basis", "Print a named basis family");
    add_common(basis, basis_args);
    basis->add_option("--family", family, "omega | unitary | symmetric | center | d_block | gamma")
        ->required();

    CommonArgs fact_args;
    uint64_t count = 100;
    bool exhaustive = false;
    CLI::App* fact = app.add_subcommand("factorize", "Round-trip Pavesic factorizations");
    add_common(fact, fact_args);
    fact->add_option("--count", count, "Number of seeded elements of 1+Gamma(A)");
    fact->add_flag("--exhaustive", exhaustive, "Factor every element of 1+Gamma(A)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(verify_args, report_path);
        if (basis->parsed()) return cmd_basis(basis_args, family);
        if (fact->parsed()) return cmd_factorize(fact_args, count, exhaustive);
    } catch (const std::invalid_argument& e) {
        std::cerr << "fd2p: configuration error: " << e.what()
                  << " (requires an odd prime characteristic p > 2)\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "fd2p: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
