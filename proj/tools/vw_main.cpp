// Command-line surface of the workbench: hyperspace construction, frame and
// algebra conversions, bisimulation, chain building, term composition and the
// property-suite runner. All file I/O is UTF-8 JSON; DOT is emitted for the
// Hasse-diagram exports.
//
// Exit codes: 0 success, 1 property failure, 2 usage/config/input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "vw/json_io.hpp"
#include "vw/suite.hpp"

namespace {

using vw::io::json;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw vw::ParseError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw vw::ParseError(std::string("invalid JSON: ") + e.what());
    }
}

struct CommonOpts {
    std::string input = "-";
    std::string variant = "convex";
    std::string format = "json";
    int max_n = 0;
    std::uint64_t seed = 0xC0FFEEull;
    int trials = 200;
};

vw::HyperLimits limits_for(int max_n) {
    vw::HyperLimits lim;
    if (max_n > 0) {
        if (max_n > vw::HyperLimits::hard_max_base)
            throw vw::ConfigError("max-n must lie in 1.." +
                                  std::to_string(vw::HyperLimits::hard_max_base));
        lim.max_base_classical = max_n;
        lim.max_base_convex = max_n;
        lim.max_base_upper_lower = max_n;
    }
    return lim;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_hyperspace(const CommonOpts& o) {
    std::string text = read_input(o.input);
    json in = parse_json(text);
    vw::Variant v = vw::variant_from_name(o.variant);
    vw::FinPoset base = in.contains("base") ? vw::io::poset_from_json(in.at("base"))
                                            : vw::io::poset_from_json(in);
    if (in.contains("variant")) v = vw::variant_from_name(in.at("variant").get<std::string>());
    vw::Hyperspace h = vw::build_hyperspace(v, base, limits_for(o.max_n));
    if (o.format == "dot") {
        std::cout << "// input " << vw::io::digest(text) << "\n" << vw::io::hyperspace_dot(h);
        return 0;
    }
    json out = vw::io::hyperspace_to_json(h);
    out["input_digest"] = vw::io::digest(text);
    emit(out);
    return 0;
}

int cmd_export_dot(const CommonOpts& o) {
    std::string text = read_input(o.input);
    vw::FinPoset p = vw::io::poset_from_json(parse_json(text));
    std::cout << "// input " << vw::io::digest(text) << "\n" << vw::io::poset_dot(p);
    return 0;
}

int cmd_dualize(const CommonOpts& o) {
    std::string text = read_input(o.input);
    vw::Coalgebra c = vw::io::coalgebra_from_json(parse_json(text));
    json out = vw::io::algebra_to_json(vw::complex_algebra(c));
    out["variant"] = vw::variant_name(c.variant);
    out["input_digest"] = vw::io::digest(text);
    emit(out);
    return 0;
}

int cmd_framify(const CommonOpts& o) {
    std::string text = read_input(o.input);
    json in = parse_json(text);
    vw::AnyAlgebra alg = vw::io::algebra_from_json(in);
    json out;
    bool roundtrip = false;
    if (std::holds_alternative<vw::ModalAlgebra>(alg)) {
        const auto& a = std::get<vw::ModalAlgebra>(alg);
        vw::Coalgebra frame = vw::atoms_frame(a);
        roundtrip = vw::complex_modal(frame) == a;
        out = vw::io::coalgebra_to_json(frame);
    } else if (std::holds_alternative<vw::PositiveModalAlgebra>(alg)) {
        const auto& a = std::get<vw::PositiveModalAlgebra>(alg);
        vw::Coalgebra frame = vw::primes_frame(a);
        roundtrip = vw::complex_positive(frame) == a;
        out = vw::io::coalgebra_to_json(frame);
    } else {
        throw vw::StructureError(
            "framify needs a modal or positive modal algebra; box- and diamond-only "
            "algebras have no frame construction here");
    }
    json iso = json::array();
    for (int i = 0; i < vw::io::coalgebra_from_json(out).states(); ++i) iso.push_back(i);
    out["roundtrip"] = json{{"holds", roundtrip}, {"isomorphism", iso}};
    out["input_digest"] = vw::io::digest(text);
    emit(out);
    return 0;
}

int cmd_bisim(const CommonOpts& o) {
    std::string text = read_input(o.input);
    vw::Coalgebra c = vw::io::coalgebra_from_json(parse_json(text));
    vw::Partition p = vw::bisim_quotient(c);
    json out = vw::io::partition_to_json(p);
    out["input_digest"] = vw::io::digest(text);
    emit(out);
    return 0;
}

int cmd_chain(const CommonOpts& o, const std::string& output_path, int depth, int max_level) {
    std::optional<vw::FinPoset> output;
    std::string digest_src = "chain";
    if (!output_path.empty()) {
        std::string text = read_input(output_path);
        digest_src = text;
        output = vw::io::poset_from_json(parse_json(text));
    }
    vw::ChainLimits lim;
    lim.hyper = limits_for(o.max_n);
    if (max_level > 0) lim.max_level_size = max_level;
    vw::ChainResult r =
        vw::terminal_chain(vw::variant_from_name(o.variant), output, depth, lim);
    json out = vw::io::chain_to_json(r);
    out["input_digest"] = vw::io::digest(digest_src);
    emit(out);
    return 0;
}

int cmd_compose_terms(const std::string& lhs_path, const std::string& rhs_path,
                      const std::string& rule) {
    std::string lhs_text = read_input(lhs_path);
    std::string rhs_text = read_input(rhs_path);
    json lhs = parse_json(lhs_text);
    json rhs = parse_json(rhs_text);

    std::vector<std::string> y_arity;
    for (const json& g : rhs.at("arity")) y_arity.push_back(g.get<std::string>());
    const json& subst = rhs.at("subst");
    auto entry = [&](const std::string& name) -> json {
        if (!subst.contains(name))
            throw vw::ParseError("substitution missing generator '" + name + "'");
        json e = subst.at(name);
        if (!e.contains("arity")) e = json{{"arity", y_arity}, {"term", e}};
        return e;
    };

    json out;
    if (rule == "00" || rule == "01") {
        vw::Rank0Term tau = vw::io::rank0_from_json(lhs);
        if (rule == "00") {
            std::vector<vw::Rank0Term> rho;
            for (const std::string& x : tau.arity) rho.push_back(vw::io::rank0_from_json(entry(x)));
            vw::Rank0Term res = vw::compose_00(tau, rho);
            if (res.arity.empty() && !y_arity.empty()) {
                // constants re-embed along the unique homomorphism
                vw::FreeBA fy = vw::free_ba(y_arity);
                res = vw::Rank0Term{y_arity, res.vals == 0 ? 0 : fy.universe()};
            }
            out = vw::io::rank0_to_json(res);
        } else {
            std::vector<vw::Rank1Term> rho;
            for (const std::string& x : tau.arity) rho.push_back(vw::io::rank1_from_json(entry(x)));
            vw::Rank1Term res = vw::compose_01(tau, rho);
            if (res.arity.empty() && !y_arity.empty()) {
                vw::FreeBA fe = vw::free_ba({});
                vw::FreeBA fy = vw::free_ba(y_arity);
                vw::OneStepMap embed = vw::lift(vw::extend(fe, fy.valuations(), {}));
                res = vw::Rank1Term{y_arity, embed(res.elem)};
            }
            out = vw::io::rank1_to_json(res);
        }
    } else if (rule == "10") {
        vw::Rank1Term gamma = vw::io::rank1_from_json(lhs);
        std::vector<vw::Rank0Term> rho;
        for (const std::string& x : gamma.arity) rho.push_back(vw::io::rank0_from_json(entry(x)));
        vw::Rank1Term res = vw::compose_10(gamma, rho);
        if (res.arity.empty() && !y_arity.empty()) {
            vw::FreeBA fe = vw::free_ba({});
            vw::FreeBA fy = vw::free_ba(y_arity);
            vw::OneStepMap embed = vw::lift(vw::extend(fe, fy.valuations(), {}));
            res = vw::Rank1Term{y_arity, embed(res.elem)};
        }
        out = vw::io::rank1_to_json(res);
    } else {
        throw vw::ConfigError("rule must be 00, 01 or 10");
    }
    out["rule"] = rule;
    out["input_digest"] = vw::io::digest(lhs_text + "\n" + rhs_text);
    emit(out);
    return 0;
}

int cmd_check(const CommonOpts& o, const std::string& suite) {
    vw::SuiteConfig cfg;
    cfg.suite = suite;
    cfg.seed = o.seed;
    cfg.trials = o.trials;
    cfg.max_n = o.max_n;
    cfg.format = o.format == "dot" ? "text" : o.format;
    cfg.validate();
    vw::Report rep = vw::run_suite(cfg);
    if (cfg.format == "json")
        std::cout << vw::report_to_json(rep).dump(2) << "\n";
    else
        std::cout << vw::report_to_text(rep);
    return rep.ok ? 0 : 1;
}

int cmd_check_axioms(const CommonOpts& o) {
    std::string text = read_input(o.input);
    vw::AnyAlgebra alg = vw::io::algebra_from_json(parse_json(text));
    vw::AxiomReport rep = std::visit([](const auto& a) { return vw::check_axioms(a); }, alg);
    json out = vw::io::axiom_report_to_json(rep);
    out["input_digest"] = vw::io::digest(text);
    emit(out);
    return rep.ok() ? 0 : 1;
}

int cmd_generation(const CommonOpts& o) {
    std::string text = read_input(o.input);
    vw::FinPoset p = vw::io::poset_from_json(parse_json(text));
    vw::GenerationReport rep =
        vw::generation_check(vw::variant_from_name(o.variant), p, limits_for(o.max_n));
    json out = vw::io::generation_report_to_json(rep);
    out["input_digest"] = vw::io::digest(text);
    emit(out);
    return rep.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite workbench for Vietoris hyperspaces, their coalgebras and dual "
                 "modal algebras"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string suite = "all";
    std::string output_path;
    std::string lhs_path, rhs_path, rule;
    int depth = 3, max_level = 0;

    auto add_common = [&](CLI::App* sub, bool with_input) {
        if (with_input)
            sub->add_option("input", o.input, "input file (default: stdin)")->capture_default_str();
        sub->add_option("--max-n", o.max_n, "lower the hyperspace base caps");
        sub->add_option("--format", o.format, "output format");
        return sub;
    };

    CLI::App* hyper = add_common(app.add_subcommand("hyperspace", "enumerate a hyperspace"), true);
    hyper->add_option("--variant", o.variant, "classical|convex|upper|lower");

    add_common(app.add_subcommand("export-dot", "Hasse diagram of a poset"), true);
    add_common(app.add_subcommand("dualize", "complex algebra of a coalgebra"), true);
    add_common(app.add_subcommand("framify", "frame of a modal or positive modal algebra"), true);
    add_common(app.add_subcommand("bisim", "behavioral-equivalence partition"), true);

    CLI::App* chain = app.add_subcommand("chain", "dualized chain with convergence report");
    chain->add_option("--variant", o.variant, "classical|convex|upper|lower");
    chain->add_option("--output", output_path, "output-poset JSON file");
    chain->add_option("--depth", depth, "levels past the terminal object");
    chain->add_option("--max-level", max_level, "cap on level sizes");
    chain->add_option("--max-n", o.max_n, "lower the hyperspace base caps");

    CLI::App* compose = app.add_subcommand("compose-terms", "substitute terms by rank rule");
    compose->add_option("--lhs", lhs_path, "term file")->required();
    compose->add_option("--rhs", rhs_path, "substitution file")->required();
    compose->add_option("--rule", rule, "00|01|10")->required();

    CLI::App* check = app.add_subcommand("check", "run the property suites");
    check->add_option("--suite", suite, "all or a module suite");
    check->add_option("--seed", o.seed, "suite seed");
    check->add_option("--trials", o.trials, "sampled-property trial count");
    check->add_option("--max-n", o.max_n, "lower the hyperspace base caps");
    check->add_option("--format", o.format, "text|json");

    CLI::App* axioms =
        add_common(app.add_subcommand("check-axioms", "evaluate the operator axioms"), true);
    (void)axioms;
    CLI::App* gen = add_common(app.add_subcommand("generation", "box/diamond generation check"),
                               true);
    gen->add_option("--variant", o.variant, "classical|convex|upper|lower");

    o.format = "json";
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand("hyperspace")) return cmd_hyperspace(o);
        if (app.got_subcommand("export-dot")) return cmd_export_dot(o);
        if (app.got_subcommand("dualize")) return cmd_dualize(o);
        if (app.got_subcommand("framify")) return cmd_framify(o);
        if (app.got_subcommand("bisim")) return cmd_bisim(o);
        if (app.got_subcommand("chain")) return cmd_chain(o, output_path, depth, max_level);
        if (app.got_subcommand("compose-terms")) return cmd_compose_terms(lhs_path, rhs_path, rule);
        if (app.got_subcommand("check")) return cmd_check(o, suite);
        if (app.got_subcommand("check-axioms")) return cmd_check_axioms(o);
        if (app.got_subcommand("generation")) return cmd_generation(o);
    } catch (const vw::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
