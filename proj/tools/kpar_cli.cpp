#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kpar/io.hpp"

using namespace kpar;
using io::json;

namespace {

struct CommonOptions {
    std::string group_spec;
    std::string sigma_spec = "ones";
    std::string out_path;
    std::string mode = "exhaustive";
    std::string field_spec = "Q";
    std::uint32_t prime = 7;
    std::uint64_t seed = 1;
    int workers = 1;
    int order_cap = kDefaultOrderCap;
    bool text = false;

    Field field() const { return field_spec == "Q" ? Field::rationals() : Field::gf(prime); }
};

void emit(const CommonOptions& opt, const json& report, const std::string& text_summary) {
    if (!opt.out_path.empty()) {
        std::ofstream out(opt.out_path);
        if (!out) throw ParseError("cannot write " + opt.out_path);
        out << report.dump(2) << "\n";
        if (opt.text) std::cout << text_summary << "\n";
        return;
    }
    if (opt.text) std::cout << text_summary << "\n";
    else std::cout << report.dump(2) << "\n";
}

FactorSet load_sigma(const CommonOptions& opt, const FiniteGroup& g) {
    if (opt.sigma_spec == "ones") return FactorSet::ones(g, opt.field());
    return io::factor_set_from_json(g, io::load_json_file(opt.sigma_spec));
}

json run_meta(const CommonOptions& opt) {
    return json{{"mode", opt.mode}, {"seed", opt.seed}, {"workers", opt.workers}};
}

int cmd_validate(const CommonOptions& opt) {
    FiniteGroup g = io::group_from_spec(opt.group_spec);
    FactorSet s = load_sigma(opt, g);
    MembershipCertificate cert = validate_membership(s, opt.order_cap);
    json rep = io::membership_to_json(cert);
    rep["meta"] = run_meta(opt);
    emit(opt, rep, cert.member ? "member of pm(G)" : "NOT a member of pm(G)");
    return cert.member ? 0 : 1;
}

int cmd_omega(const CommonOptions& opt) {
    FiniteGroup g = io::group_from_spec(opt.group_spec);
    FactorSet s = load_sigma(opt, g);
    Spectrum sp(s, opt.order_cap, ScanOptions{ScanOptions::Type2::on});
    json rep = io::omega_report_to_json(sp);
    rep["meta"] = run_meta(opt);
    std::ostringstream text;
    text << "spectrum points: " << sp.members().size() << ", dimension " << dimension(sp)
         << (rep["topologically_free"].get<bool>() ? ", topologically free"
                                                   : ", not topologically free");
    emit(opt, rep, text.str());
    return 0;
}

int cmd_decompose(const CommonOptions& opt) {
    FiniteGroup g = io::group_from_spec(opt.group_spec);
    FactorSet s = load_sigma(opt, g);
    Spectrum sp(s, opt.order_cap, ScanOptions{ScanOptions::Type2::on});
    DecompositionReport rep = decompose(sp);
    bool units_ok = true;
    for (const auto& summand : rep.summands)
        units_ok = units_ok && matrix_units_check(sp, summand);
    PsiCheckOptions popts;
    popts.seed = opt.seed;
    popts.workers = opt.workers;
    if (opt.mode == "sampled") popts.exhaustive_pair_budget = 0;
    PsiReport psi = verify_psi_isomorphism(sp, popts);
    json out = io::decomposition_to_json(sp, rep);
    out["matrix_units_ok"] = units_ok;
    out["psi"] = json{{"bijective", psi.bijective},
                      {"multiplicative", psi.multiplicative},
                      {"exhaustive", psi.exhaustive},
                      {"pairs_checked", psi.pairs_checked}};
    out["meta"] = run_meta(opt);
    std::ostringstream text;
    text << rep.summands.size() << " summand(s):";
    for (const auto& summand : rep.summands)
        text << " M_" << summand.n << "(H order " << mask_size(summand.iso.subgroup) << ")";
    text << "; dim " << rep.dim_algebra << (rep.dims_match() ? " == " : " != ")
         << rep.dim_summands;
    emit(opt, out, text.str());
    return rep.dims_match() && units_ok && psi.ok() ? 0 : 1;
}

int cmd_monoid_check(const CommonOptions& opt) {
    FiniteGroup g = io::group_from_spec(opt.group_spec);
    FactorSet s = load_sigma(opt, g);
    Spectrum sp(s, opt.order_cap, ScanOptions{ScanOptions::Type2::on});
    MonoidCheckOptions mopts;
    mopts.seed = opt.seed;
    mopts.workers = opt.workers;
    if (opt.mode == "sampled") mopts.exhaustive_triple_budget = 0;
    MonoidReport rep = verify_monoid(sp, mopts);
    json out{{"ok", rep.ok()},
             {"checks", rep.checks},
             {"exhaustive", rep.exhaustive},
             {"failures", rep.failures},
             {"meta", run_meta(opt)}};
    std::ostringstream text;
    text << (rep.ok() ? "monoid axioms hold" : "monoid axioms FAILED") << " (" << rep.checks
         << " checks)";
    emit(opt, out, text.str());
    return rep.ok() ? 0 : 1;
}

int cmd_s4_check(const CommonOptions& opt) {
    FiniteGroup g = io::group_from_spec(opt.group_spec);
    FactorSet s = load_sigma(opt, g);
    if (!is_normalized(s))
        throw PreconditionFailed("s4-check needs sigma(g,g^-1) in {0,1}");
    MembershipCertificate cert = validate_membership(s, opt.order_cap);
    if (!cert.member) {
        json out = io::membership_to_json(cert);
        out["meta"] = run_meta(opt);
        emit(opt, out, "sigma is not a member; invariance not attempted");
        return 1;
    }
    S4Report action = verify_action(g, opt.workers);
    InvarianceReport inv = verify_invariance(s, opt.workers);
    json per_perm = json::array();
    auto perms = all_perm4();
    for (int p = 0; p < 24; ++p) {
        per_perm.push_back(json{{"perm", perm4_str(perms[p])},
                                {"checks", inv.per_perm_checks[p]},
                                {"failures", inv.per_perm_failures[p]}});
    }
    json out{{"action_ok", action.ok()},
             {"action_checks", action.checks},
             {"invariance_ok", inv.ok()},
             {"triples", inv.triples},
             {"even_checks", inv.even_checks},
             {"odd_checks", inv.odd_checks},
             {"zero_checks", inv.zero_checks},
             {"per_permutation", per_perm},
             {"failures", inv.failures},
             {"meta", run_meta(opt)}};
    std::ostringstream text;
    text << (action.ok() && inv.ok() ? "action and invariance hold" : "FAILED") << " over "
         << inv.triples << " triples";
    emit(opt, out, text.str());
    return action.ok() && inv.ok() ? 0 : 1;
}

int cmd_gen_idem(const CommonOptions& opt, const std::string& gen_path) {
    FiniteGroup g = io::group_from_spec(opt.group_spec);
    IdempotentGenerator gen = io::generator_from_json(io::load_json_file(gen_path));
    FactorSet s = io::generate(g, opt.field(), gen);
    json out = io::factor_set_to_json(s);
    emit(opt, out, "generated and validated a factor set on a group of order " +
                       std::to_string(g.order()));
    return 0;
}

int cmd_dinf(const CommonOptions& opt, const std::string& gen_path, long long window,
             long long l, const std::string& index_set) {
    DInfGenerator gen = io::dinf_generator_from_json(io::load_json_file(gen_path));
    json out{{"meta", run_meta(opt)}, {"window", window}};
    std::vector<std::string> why;
    bool window_ok = window_prohibition_check(gen, window, &why);
    out["window_check"] = json{{"ok", window_ok}, {"failures", why}};
    bool all_ok = window_ok;
    std::ostringstream text;
    text << "window check " << (window_ok ? "ok" : "FAILED");
    if (!index_set.empty()) {
        std::vector<long long> I;
        std::stringstream ss(index_set);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) I.push_back(std::stoll(tok));
        auto delta = delta_membership(gen, l, I);
        auto lambda = lambda_membership(gen, l, I);
        out["delta"] = json{{"by_conditions", delta.by_conditions},
                            {"by_fixed_point", delta.by_fixed_point}};
        out["lambda"] = json{{"by_conditions", lambda.by_conditions},
                             {"by_fixed_point", lambda.by_fixed_point}};
        all_ok = all_ok && delta.agree() && lambda.agree();
        text << "; delta " << (delta.by_conditions ? "in" : "out") << ", lambda "
             << (lambda.by_conditions ? "in" : "out");
        if (delta.by_fixed_point && lambda.by_fixed_point) {
            DInfCertificate cert = freeness_certificate(gen, l, I, window);
            out["certificate"] = io::dinf_certificate_to_json(cert);
            all_ok = all_ok && cert.ok;
            text << "; certificate " << (cert.ok ? "ok" : "FAILED");
        }
    }
    emit(opt, out, text.str());
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for twisted partial group algebras of finite groups"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string gen_path, index_set;
    long long window = 6, l = 0;

    auto add_common = [&](CLI::App* cmd, bool needs_group) {
        if (needs_group)
            cmd->add_option("--group", opt.group_spec,
                            "builtin:<name>[:<param>] or a group JSON file")
                ->required();
        cmd->add_option("--sigma", opt.sigma_spec, "'ones' or a factor set JSON file");
        cmd->add_option("--out", opt.out_path, "write the JSON report here");
        cmd->add_option("--mode", opt.mode, "exhaustive or sampled")
            ->check(CLI::IsMember({"exhaustive", "sampled"}));
        cmd->add_option("--field", opt.field_spec, "coefficient field for generated tables")
            ->check(CLI::IsMember({"Q", "GF"}));
        cmd->add_option("--prime", opt.prime, "modulus for GF(p) runs");
        cmd->add_option("--seed", opt.seed, "seed for sampled runs");
        cmd->add_option("--workers", opt.workers, "worker threads for scans")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--cap", opt.order_cap, "group order cap for enumeration");
        cmd->add_flag("--text", opt.text, "print a human-readable summary");
    };

    CLI::App* validate = app.add_subcommand("validate", "membership oracle for a factor set");
    add_common(validate, true);
    CLI::App* omega = app.add_subcommand("omega", "prohibitions, spectrum, freeness report");
    add_common(omega, true);
    CLI::App* decompose_cmd =
        app.add_subcommand("decompose", "matrix-algebra decomposition and checks");
    add_common(decompose_cmd, true);
    CLI::App* monoid = app.add_subcommand("monoid-check", "inverse-monoid axiom suite");
    add_common(monoid, true);
    CLI::App* s4 = app.add_subcommand("s4-check", "coboundary invariance suite");
    add_common(s4, true);
    CLI::App* gen_idem = app.add_subcommand("gen-idem", "generate an idempotent factor set");
    add_common(gen_idem, true);
    gen_idem->add_option("--gen", gen_path, "generator JSON file")->required();
    CLI::App* dinf = app.add_subcommand("dinf", "windowed infinite-dihedral suite");
    add_common(dinf, false);
    dinf->add_option("--gen", gen_path, "zero-set generator JSON file")->required();
    dinf->add_option("--window", window, "exponent window bound");
    dinf->add_option("--l", l, "reflection exponent");
    dinf->add_option("--set", index_set, "comma-separated index set containing 0");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(opt);
        if (omega->parsed()) return cmd_omega(opt);
        if (decompose_cmd->parsed()) return cmd_decompose(opt);
        if (monoid->parsed()) return cmd_monoid_check(opt);
        if (s4->parsed()) return cmd_s4_check(opt);
        if (gen_idem->parsed()) return cmd_gen_idem(opt, gen_path);
        if (dinf->parsed()) return cmd_dinf(opt, gen_path, window, l, index_set);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
