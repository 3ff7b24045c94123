#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cherednik/serialize.hpp"
#include "cherednik/suites.hpp"
#include "json.hpp"

using namespace cherednik;

namespace {

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + out_path);
    out << text;
}

int run_guarded(int (*fn)(void*), void* ctx) {
#define CHER_CATCH(T)                                                    \
    catch (const T& e) {                                                 \
        std::cerr << "error: " #T ": " << e.what() << "\n";              \
        return 2;                                                        \
    }
    try {
        return fn(ctx);
    }
    CHER_CATCH(PrecisionExhausted)
    CHER_CATCH(NotFinite)
    CHER_CATCH(NotFaithfulAction)
    CHER_CATCH(EigenvalueNotInField)
    CHER_CATCH(TwistNotZero)
    CHER_CATCH(NotClosed)
    CHER_CATCH(EtaMismatch)
    CHER_CATCH(NotInAlgebra)
    CHER_CATCH(NonTermination)
    CHER_CATCH(DivisionFailure)
    CHER_CATCH(CapTooSmall)
    CHER_CATCH(ParseError)
    CHER_CATCH(ConfigError)
    CHER_CATCH(Error)
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
#undef CHER_CATCH
}

struct Args {
    std::string config_path;
    std::string out_path;
    std::string inject;
    std::string suite;
    std::string op_text;
    std::string poly_text;
    std::string expr;
    unsigned long long seed = 0;
    bool seed_given = false;
};

Run load_run(const Args& a) { return build_run(parse_config_file(a.config_path)); }

unsigned long long effective_seed(const Args& a, const Run& run) {
    return a.seed_given ? a.seed : run.cfg.seed;
}

std::string format_suite(const SuiteReport& rep) {
    std::ostringstream os;
    os << "suite " << rep.suite << "\n";
    for (const auto& c : rep.checks) {
        os << "  [" << c.status << "] " << c.name << " (" << c.anchor << ")";
        if (!c.witness.empty()) os << " -- " << c.witness;
        os << "\n";
    }
    return os.str();
}

int cmd_reflections(void* ctx) {
    const Args& a = *static_cast<Args*>(ctx);
    Run run = load_run(a);
    const Setting& S = run.setting;
    std::ostringstream os;
    os << "group order " << S.group.size() << ", rank " << S.rank() << ", "
       << S.reflections.size() << " reflections in " << S.classes.size() << " classes\n";
    for (std::size_t cls = 0; cls < S.classes.size(); ++cls)
        for (int d : S.classes[cls]) {
            const ReflectionDatum& rd = S.reflections[std::size_t(d)];
            os << "g" << rd.g << "  alpha = " << poly_str(rd.alpha)
               << "  lambda = " << rd.lambda.str() << "  class = " << cls << "\n";
        }
    emit(a.out_path, os.str());
    return 0;
}

int cmd_verify(void* ctx) {
    const Args& a = *static_cast<Args*>(ctx);
    Run run = load_run(a);
    SuiteReport rep = run_suite(run, a.suite, effective_seed(a, run), a.inject);
    emit(a.out_path, format_suite(rep));
    return rep.all_pass() ? 0 : 1;
}

int cmd_apply(void* ctx) {
    const Args& a = *static_cast<Args*>(ctx);
    Run run = load_run(a);
    Algebra H(run.setting, run.params);
    SkewOp op = parse_skew(a.op_text, H);
    MultiPoly f = parse_poly(a.poly_text, H);
    LocalizedCoeff img = apply_to_function(run.setting.group, run.setting.arr,
                                           run.params.twist, op,
                                           LocalizedCoeff::from_poly(run.setting.arr, f));
    emit(a.out_path, localized_str(img) + "\n");
    return 0;
}

int cmd_norm(void* ctx) {
    const Args& a = *static_cast<Args*>(ctx);
    Run run = load_run(a);
    Algebra H(run.setting, run.params);
    LatticeLevel level = run.level();
    nlohmann::ordered_json doc;
    doc["level"] = {{"n", level.n}, {"m", level.m}};
    doc["certified"] = certify_cherednik_level(H, run.spec, level);
    if (!a.expr.empty()) {
        CherednikElement x = H.pbw_normal_form(parse_skew(a.expr, H));
        doc["element"] = cher_str(x);
        doc["gauge"] = element_gauge(x, run.spec, level).str();
    }
    emit(a.out_path, doc.dump(2) + "\n");
    return 0;
}

int cmd_report_all(void* ctx) {
    const Args& a = *static_cast<Args*>(ctx);
    Run run = load_run(a);
    unsigned long long seed = effective_seed(a, run);
    std::vector<SuiteReport> reports;
    for (const auto& name : suite_names())
        reports.push_back(run_suite(run, name, seed, a.inject));
    emit(a.out_path, report_json(run.cfg, seed, reports));
    for (const auto& rep : reports)
        if (!rep.all_pass()) return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Cherednik algebra toolkit"};
    app.require_subcommand(1);
    Args args;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", args.config_path, "run configuration file")->required();
        sub->add_option("--seed", args.seed, "override the configured RNG seed")
            ->each([&](const std::string&) { args.seed_given = true; });
        sub->add_option("--out", args.out_path, "write output here instead of stdout");
    };

    CLI::App* refl = app.add_subcommand("reflections", "list reflection data of the group");
    add_common(refl);

    CLI::App* verify = app.add_subcommand("verify", "run one verification suite");
    verify->add_option("suite", args.suite, "pbw | commute | presentation | tdo | norms | tower")
        ->required();
    verify->add_option("--inject", args.inject,
                       "serialized operator fed to the pbw suite as a negative control");
    add_common(verify);

    CLI::App* apply = app.add_subcommand("apply", "apply an operator to a polynomial");
    apply->add_option("operator", args.op_text, "serialized operator")->required();
    apply->add_option("polynomial", args.poly_text, "serialized polynomial")->required();
    add_common(apply);

    CLI::App* norm = app.add_subcommand("norm", "lattice certification and element gauge");
    norm->add_option("expr", args.expr, "optional serialized element");
    add_common(norm);

    CLI::App* report = app.add_subcommand("report-all", "run every suite, emit a JSON report");
    report->add_option("--inject", args.inject,
                       "serialized operator fed to the pbw suite as a negative control");
    add_common(report);

    CLI11_PARSE(app, argc, argv);

    if (refl->parsed()) return run_guarded(cmd_reflections, &args);
    if (verify->parsed()) return run_guarded(cmd_verify, &args);
    if (apply->parsed()) return run_guarded(cmd_apply, &args);
    if (norm->parsed()) return run_guarded(cmd_norm, &args);
    return run_guarded(cmd_report_all, &args);
}
