// ginlab: command-line workbench for generic initial ideals, graded Betti
// numbers, generic annihilator numbers, Koszul homology, and lex-segment
// ideals over exact fields.
//
// Exit codes: 0 pass, 1 verdict failure, 2 input error, 3 resource guard.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "ginlab/parse.hpp"
#include "ginlab/verifier.hpp"

using nlohmann::json;
using namespace ginlab;

namespace {

struct Common {
    std::string field_override;
    int degree_guard = kDefaultDegreeGuard;
    std::string json_path; // empty: no structured output; "-": stdout
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--field", c.field_override, "override the file's field (Q or Fp:<prime>)");
    cmd->add_option("--degree-guard", c.degree_guard,
                    "abort Groebner computations beyond this degree");
    cmd->add_option("--json", c.json_path, "write the structured report to PATH ('-' for stdout)");
}

int default_degree_guard() {
    if (const char* env = std::getenv("GINLAB_DEGREE_GUARD")) {
        try {
            return std::stoi(env);
        } catch (...) {
            throw error(errc::input, "bad GINLAB_DEGREE_GUARD value");
        }
    }
    return kDefaultDegreeGuard;
}

IdealFile load_ideal(const std::string& path, const Common& c) {
    IdealFile file = parse_ideal_file(path);
    if (!c.field_override.empty()) {
        FieldSpec f = c.field_override == "Q" || c.field_override == "QQ"
                          ? FieldSpec::rationals()
                          : FieldSpec::prime(std::stol(c.field_override.substr(
                                c.field_override.rfind(':') + 1)));
        if (c.field_override.rfind("Fp:", 0) != 0 && c.field_override != "Q" &&
            c.field_override != "QQ")
            throw error(errc::input, "bad --field value '" + c.field_override + "'");
        RingCtx ctx = RingCtx::make(file.ring.n, f, file.ring.var_names);
        std::vector<Polynomial> gens;
        for (const auto& text : file.gen_texts) gens.push_back(parse_poly(ctx, text, file.order));
        file.ring = ctx;
        file.gens = std::move(gens);
    }
    return file;
}

json ring_json(const RingCtx& ctx) {
    return json{{"n", ctx.n}, {"field", ctx.field.name()}, {"vars", ctx.var_names}};
}

json inputs_json(const std::string& path, const IdealFile& file) {
    return json{{"file", path},
                {"ring", ring_json(file.ring)},
                {"order", order_name(file.order)},
                {"generators", file.gen_texts}};
}

json betti_json(const BettiTable& t) {
    json entries = json::array();
    for (const auto& [key, v] : t.entries())
        entries.push_back(json{{"i", key.first}, {"j", key.second}, {"value", v}});
    return json{{"convention",
                 t.convention() == BettiConvention::for_ideal ? "for_ideal" : "for_quotient"},
                {"entries", entries},
                {"totals", t.totals()},
                {"regularity", t.regularity()}};
}

void emit_json(const Common& c, const json& doc) {
    if (c.json_path.empty()) return;
    if (c.json_path == "-") {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::ofstream out(c.json_path);
    require(out.good(), errc::input, "cannot write '" + c.json_path + "'");
    out << doc.dump(2) << "\n";
}

void print_field_caveat(const RingCtx& ctx) {
    if (!ctx.field.is_rationals())
        std::cout << "note: computing over " << ctx.field.name()
                  << "; characteristic-0 theorems used at your own risk\n";
}

void print_betti(const RingCtx& ctx, const BettiTable& t) {
    std::cout << "graded Betti numbers ("
              << (t.convention() == BettiConvention::for_ideal ? "ideal" : "quotient")
              << " convention), field " << ctx.field.name() << "\n";
    int imax = t.max_index();
    if (imax < 0) {
        std::cout << "  (zero table)\n";
        return;
    }
    int jmin = -1, jmax = -1;
    for (const auto& [key, v] : t.entries()) {
        if (jmin < 0 || key.second < jmin) jmin = key.second;
        if (key.second > jmax) jmax = key.second;
    }
    auto cell = [](const std::string& s) {
        std::cout << std::string(s.size() >= 7 ? 1 : 7 - s.size(), ' ') << s;
    };
    cell("");
    for (int i = 0; i <= imax; ++i) cell("i=" + std::to_string(i));
    std::cout << "\n";
    cell("total:");
    for (int i = 0; i <= imax; ++i) cell(std::to_string(t.total(i)));
    std::cout << "\n";
    for (int j = jmin; j <= jmax; ++j) {
        bool any = false;
        for (int i = 0; i <= imax; ++i) any = any || t.entry(i, j) != 0;
        if (!any) continue;
        cell("deg " + std::to_string(j) + ":");
        for (int i = 0; i <= imax; ++i) {
            long v = t.entry(i, j);
            cell(v == 0 ? "." : std::to_string(v));
        }
        std::cout << "\n";
    }
}

json report_json(const TheoremReport& rep) {
    json verdicts = json::array();
    for (const auto& [k, v] : rep.verdicts) verdicts.push_back(json{{"name", k}, {"ok", v}});
    json data = json::array();
    for (const auto& [k, v] : rep.data) data.push_back(json{{"key", k}, {"value", v}});
    return json{{"theorem", rep.theorem},
                {"instance", rep.instance},
                {"seed", rep.seed},
                {"field", rep.field.name()},
                {"not_applicable", rep.not_applicable},
                {"na_reason", rep.na_reason},
                {"verdicts", verdicts},
                {"data", data},
                {"warnings", rep.warnings},
                {"passed", rep.passed()}};
}

int print_report(const TheoremReport& rep) {
    std::cout << "theorem check: " << rep.theorem << "\n";
    std::cout << "instance: " << rep.instance << "\n";
    std::cout << "seed: " << rep.seed << "  field: " << rep.field.name() << "\n";
    for (const auto& w : rep.warnings) std::cout << "warning: " << w << "\n";
    if (rep.not_applicable) {
        std::cout << "NOT APPLICABLE: " << rep.na_reason << "\n";
        return 2;
    }
    for (const auto& [k, v] : rep.verdicts)
        std::cout << "  [" << (v ? " ok " : "FAIL") << "] " << k << "\n";
    for (const auto& [k, v] : rep.data) std::cout << "  " << k << " = " << v << "\n";
    std::cout << (rep.passed() ? "PASS" : "FAIL") << "\n";
    return rep.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ginlab: gins, Betti numbers, annihilator numbers, Koszul homology, lex ideals"};
    app.require_subcommand(1);

    Common common;
    common.degree_guard = default_degree_guard();

    // betti
    auto* betti = app.add_subcommand("betti", "graded Betti numbers of an ideal");
    std::string betti_file, betti_method = "auto";
    bool betti_quotient = false;
    betti->add_option("file", betti_file, "ideal file")->required();
    betti->add_option("--method", betti_method, "auto | ek | koszul")
        ->check(CLI::IsMember({"auto", "ek", "koszul"}));
    betti->add_flag("--quotient", betti_quotient, "report beta(S/I) instead of beta(I)");
    add_common(betti, common);

    // gin
    auto* gin = app.add_subcommand("gin", "generic initial ideal");
    std::string gin_file, gin_order;
    std::uint64_t gin_seed = 0;
    GinOptions gin_opts;
    gin->add_option("file", gin_file)->required();
    gin->add_option("--seed", gin_seed, "RNG seed (required)")->required();
    gin->add_option("--trials", gin_opts.trials, "independent coordinate changes (default 3)");
    gin->add_option("--bound", gin_opts.entry_bound, "entry bound B for random changes");
    gin->add_option("--order", gin_order, "degrevlex | deglex | lex (default: file order)");
    add_common(gin, common);

    // lex
    auto* lex = app.add_subcommand("lex", "lex-segment ideal with the Hilbert function of the input");
    std::string lex_file;
    lex->add_option("file", lex_file)->required();
    add_common(lex, common);

    // alpha
    auto* alpha = app.add_subcommand("alpha", "generic annihilator numbers of S/I");
    std::string alpha_file;
    std::uint64_t alpha_seed = 0;
    alpha->add_option("file", alpha_file)->required();
    alpha->add_option("--seed", alpha_seed, "RNG seed (required)")->required();
    add_common(alpha, common);

    // check
    auto* check = app.add_subcommand("check", "verify a theorem on the given instance");
    std::string check_id;
    std::vector<std::string> check_files;
    std::uint64_t check_seed = 0;
    int check_d = -1, ci_n = 0, ci_degree = 0;
    std::string check_tau = "deglex";
    check->add_option("theorem", check_id, "bound | maximal | rigidity | lex | lowerbound | strange | ci")
        ->required()
        ->check(CLI::IsMember({"bound", "maximal", "rigidity", "lex", "lowerbound", "strange", "ci"}));
    check->add_option("files", check_files, "ideal file(s)");
    check->add_option("--seed", check_seed, "RNG seed (required)")->required();
    check->add_option("--d", check_d, "containment degree for 'strange' (default: min generator degree)");
    check->add_option("--n", ci_n, "ring size for 'ci'");
    check->add_option("--degree", ci_degree, "form degree for 'ci'");
    check->add_option("--tau", check_tau, "second term order for 'lex'");
    add_common(check, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        json doc{{"tool", "ginlab"},
                 {"config", json{{"degree_guard", common.degree_guard}}}};

        if (betti->parsed()) {
            IdealFile file = load_ideal(betti_file, common);
            GradedIdeal I = GradedIdeal::make(file.ring, file.gens);
            print_field_caveat(file.ring);
            std::optional<MonomialIdeal> mono = as_monomial_ideal(I);
            std::string method = betti_method;
            if (method == "auto") method = (mono && is_stable(*mono)) ? "ek" : "koszul";
            BettiTable t(BettiConvention::for_ideal);
            if (method == "ek") {
                require(mono.has_value(), errc::input, "--method ek needs a monomial ideal");
                t = ek_graded_betti(*mono);
            } else {
                t = graded_betti(I);
            }
            if (betti_quotient) t = t.to_quotient_view();
            std::cout << "method: " << method << "\n";
            print_betti(file.ring, t);
            doc["command"] = "betti";
            doc["inputs"] = inputs_json(betti_file, file);
            doc["config"]["method"] = method;
            doc["results"] = json{{"betti", betti_json(t)}};
            emit_json(common, doc);
            return 0;
        }

        if (gin->parsed()) {
            IdealFile file = load_ideal(gin_file, common);
            GradedIdeal I = GradedIdeal::make(file.ring, file.gens);
            TermOrder order = gin_order.empty() ? file.order : order_from_name(gin_order);
            gin_opts.degree_guard = common.degree_guard;
            GinResult res = generic_initial_ideal(I, order, gin_seed, gin_opts);
            print_field_caveat(file.ring);
            std::cout << "gin under " << order_name(order) << ", seed " << res.seed << ", trials "
                      << res.trials << ", entry bound " << gin_opts.entry_bound << "\n";
            for (const auto& w : res.warnings) std::cout << "warning: " << w << "\n";
            std::cout << res.ideal.str() << "\n";
            std::cout << "generators: " << res.ideal.gens().size() << "\n";
            doc["command"] = "gin";
            doc["inputs"] = inputs_json(gin_file, file);
            doc["config"]["seed"] = res.seed;
            doc["config"]["trials"] = res.trials;
            doc["config"]["entry_bound"] = gin_opts.entry_bound;
            json gens = json::array();
            for (const auto& u : res.ideal.gens()) gens.push_back(monomial_to_string(file.ring, u));
            doc["results"] = json{{"order", order_name(order)},
                                  {"agreed", res.agreed},
                                  {"generators", gens},
                                  {"warnings", res.warnings}};
            emit_json(common, doc);
            return 0;
        }

        if (lex->parsed()) {
            IdealFile file = load_ideal(lex_file, common);
            GradedIdeal I = GradedIdeal::make(file.ring, file.gens);
            MonomialIdeal leading = initial_ideal(I, TermOrder::degrevlex, common.degree_guard);
            int window = leading.max_degree() + 3;
            MonomialIdeal L = MonomialIdeal::zero(file.ring);
            for (int attempt = 0;; ++attempt) {
                std::vector<long> quotient_hf = hilbert_function(leading, window);
                std::vector<long> hf(static_cast<std::size_t>(window) + 1, 0);
                for (int d = 0; d <= window; ++d)
                    hf[static_cast<std::size_t>(d)] =
                        count_monomials(file.ring.n, d) - quotient_hf[static_cast<std::size_t>(d)];
                try {
                    L = lex_segment_ideal(file.ring, hf);
                    break;
                } catch (const error& e) {
                    if (e.code() != errc::window || attempt >= 6) throw;
                    window += 2;
                }
            }
            print_field_caveat(file.ring);
            std::cout << "lex-segment ideal with the Hilbert function of the input\n";
            std::cout << L.str() << "\n";
            doc["command"] = "lex";
            doc["inputs"] = inputs_json(lex_file, file);
            json gens = json::array();
            for (const auto& u : L.gens()) gens.push_back(monomial_to_string(file.ring, u));
            doc["results"] = json{{"generators", gens}, {"window", window}};
            emit_json(common, doc);
            return 0;
        }

        if (alpha->parsed()) {
            IdealFile file = load_ideal(alpha_file, common);
            GradedIdeal I = GradedIdeal::make(file.ring, file.gens);
            AnnihilatorProfile prof = annihilator_numbers(I, alpha_seed);
            print_field_caveat(file.ring);
            std::cout << "generic annihilator numbers, seed " << alpha_seed << ", degree window "
                      << prof.degree_window << (prof.certified ? " (certified)" : "") << "\n";
            std::cout << "alpha = (";
            for (int i = 1; i <= file.ring.n; ++i)
                std::cout << (i > 1 ? ", " : "") << prof.alpha[static_cast<std::size_t>(i)];
            std::cout << ")\n";
            std::optional<MonomialIdeal> mono = as_monomial_ideal(I);
            if (mono && is_stable(*mono)) {
                bool agree = alpha_from_stable(*mono).alpha == prof.alpha;
                std::cout << "stable-ideal cross-check (alpha_i = m_{n-i+1}): "
                          << (agree ? "agrees" : "DISAGREES") << "\n";
                require(agree, errc::internal, "stable-ideal annihilator cross-check failed");
            }
            doc["command"] = "alpha";
            doc["inputs"] = inputs_json(alpha_file, file);
            doc["config"]["seed"] = alpha_seed;
            std::vector<long> a(prof.alpha.begin() + 1, prof.alpha.end());
            doc["results"] = json{{"alpha", a},
                                  {"degree_window", prof.degree_window},
                                  {"certified", prof.certified}};
            emit_json(common, doc);
            return 0;
        }

        if (check->parsed()) {
            TheoremReport rep;
            IdealFile file;
            bool have_file = false;
            if (check_id == "ci") {
                require(ci_n >= 1 && ci_degree >= 1, errc::input,
                        "check ci needs --n and --degree");
                FieldSpec f = FieldSpec::rationals();
                if (!common.field_override.empty() && common.field_override != "Q" &&
                    common.field_override != "QQ")
                    f = FieldSpec::prime(std::stol(
                        common.field_override.substr(common.field_override.rfind(':') + 1)));
                rep = ci_experiment(ci_n, ci_degree, f, check_seed, common.degree_guard);
            } else {
                require(!check_files.empty(), errc::input, "check needs an ideal file");
                file = load_ideal(check_files[0], common);
                have_file = true;
                GradedIdeal I = GradedIdeal::make(file.ring, file.gens);
                if (check_id == "bound") {
                    rep = bound_check(I, check_seed);
                } else if (check_id == "maximal") {
                    rep = maximal_equivalences(I, check_seed);
                } else if (check_id == "rigidity") {
                    rep = rigidity_check(I, check_seed);
                } else if (check_id == "lex") {
                    rep = lex_comparison(I, order_from_name(check_tau), check_seed);
                } else if (check_id == "lowerbound") {
                    require(check_files.size() == 2, errc::input,
                            "check lowerbound needs two ideal files");
                    IdealFile file2 = load_ideal(check_files[1], common);
                    GradedIdeal J = GradedIdeal::make(file2.ring, file2.gens);
                    rep = lowerbound_check(I, J, check_seed);
                } else if (check_id == "strange") {
                    int d = check_d >= 1 ? check_d : I.min_gen_degree();
                    rep = strange_check(I, d, check_seed);
                } else {
                    throw error(errc::input, "unknown theorem id '" + check_id + "'");
                }
            }
            int code = print_report(rep);
            doc["command"] = "check";
            if (have_file) doc["inputs"] = inputs_json(check_files[0], file);
            doc["config"]["seed"] = check_seed;
            doc["results"] = report_json(rep);
            emit_json(common, doc);
            return code;
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case errc::input: return 2;
            default: return 3;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
