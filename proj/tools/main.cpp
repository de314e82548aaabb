#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "maxcert/certificate.hpp"
#include "maxcert/convexity.hpp"
#include "maxcert/errors.hpp"
#include "maxcert/generator.hpp"
#include "maxcert/instance_io.hpp"
#include "maxcert/kkt.hpp"
#include "maxcert/opcalc.hpp"
#include "maxcert/report.hpp"

namespace {

using namespace maxcert;

void emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + output + " for writing");
    out << text;
}

Rational cli_rational(const std::string& text, const char* flag) {
    try {
        return Rational::from_string(text);
    } catch (const ParseError& e) {
        throw ParseError(std::string(flag) + ": " + e.what());
    }
}

Vec parse_rational_list(const std::string& csv, const char* flag) {
    Vec values;
    size_t start = 0;
    while (start <= csv.size()) {
        size_t comma = csv.find(',', start);
        if (comma == std::string::npos) comma = csv.size();
        values.push_back(cli_rational(csv.substr(start, comma - start), flag));
        start = comma + 1;
    }
    return values;
}

int cmd_check(const std::string& input, const std::string& output, bool human) {
    Instance inst = load_instance(input);
    std::vector<FnVerdict> verdicts;
    for (const Fn& f : inst.functions()) {
        verdicts.push_back(
            {f.name, check_convexity(inst.magma().table(), inst.params().p(), inst.params().q(), f)});
    }
    emit(check_report(verdicts, human), output);
    for (const FnVerdict& v : verdicts) {
        if (!v.violations.empty()) return 1;
    }
    return 0;
}

int cmd_solve(const std::string& input, const std::string& method, const std::string& output,
              bool human) {
    Instance inst = load_instance(input);
    Certificate cert = [&] {
        if (method == "lp") return solve_lp(inst.functions());
        if (method == "two") {
            if (inst.functions().size() != 2) {
                throw std::invalid_argument("the two-function method needs exactly 2 functions, got " +
                                            std::to_string(inst.functions().size()));
            }
            return solve_two(inst.functions()[0], inst.functions()[1]);
        }
        return solve_recursive(inst.functions(), inst.magma(), inst.params());
    }();
    emit(certificate_report(cert, human), output);
    return cert.is_feasible() ? 0 : 1;
}

int cmd_diagnose(const std::string& input, const std::string& output, bool human) {
    Instance inst = load_instance(input);
    NfResult nf = check_nf_condition(inst.functions());
    HellyResult helly = helly_check(inst.functions());
    std::vector<LambdaPolytope> polytopes;
    polytopes.reserve(static_cast<size_t>(inst.size()));
    for (int x = 0; x < inst.size(); ++x) polytopes.push_back(lambda_polytope(inst.functions(), x));
    emit(diagnose_report(nf, helly, polytopes, human), output);
    return nf.ok ? 0 : 1;
}

int cmd_kkt(const std::string& input, const std::string& objective, int x0,
            const std::string& verify_csv, bool shift, const std::string& output, bool human) {
    Instance inst = load_instance(input);
    const std::vector<Fn>& fns = inst.functions();

    size_t obj_idx = 0;
    if (!objective.empty()) {
        bool found = false;
        for (size_t i = 0; i < fns.size(); ++i) {
            if (fns[i].name == objective) {
                obj_idx = i;
                found = true;
                break;
            }
        }
        if (!found) throw std::invalid_argument("no function named \"" + objective + "\"");
    }
    Fn f0 = fns[obj_idx];
    std::vector<Fn> constraints;
    constraints.reserve(fns.size() - 1);
    for (size_t i = 0; i < fns.size(); ++i) {
        if (i != obj_idx) constraints.push_back(fns[i]);
    }
    if (x0 < 0 || x0 >= inst.size()) {
        throw std::invalid_argument("candidate element " + std::to_string(x0) +
                                    " out of range for m=" + std::to_string(inst.size()));
    }

    if (shift) {
        const Rational c = f0.at(x0);
        if (!c.is_zero()) {
            Fn shifted = f0;
            for (Rational& v : shifted.values) v -= c;
            auto violations =
                check_convexity(inst.magma().table(), inst.params().p(), inst.params().q(), shifted);
            if (!violations.empty()) {
                throw PreconditionError("shifting the objective by " + (-c).str() +
                                        " destroys convexity: violated at (x, y) = (" +
                                        std::to_string(violations[0].x) + ", " +
                                        std::to_string(violations[0].y) + ")");
            }
            f0 = std::move(shifted);
        }
    }

    if (!verify_csv.empty()) {
        SimplexPoint lambda(parse_rational_list(verify_csv, "--verify"));
        const bool ok = kkt_verify_converse(f0, constraints, x0, lambda);
        Vec products(constraints.size());
        for (size_t i = 0; i < constraints.size(); ++i) {
            products[i] = lambda.at(static_cast<int>(i) + 1) * constraints[i].at(x0);
        }
        std::vector<Fn> family;
        family.push_back(f0);
        family.insert(family.end(), constraints.begin(), constraints.end());
        const Rational margin = verify_certificate(family, lambda).margin;
        emit(kkt_verify_report(ok, products, margin, solve_mp_bruteforce(f0, constraints), human),
             output);
        return ok ? 0 : 1;
    }

    KktResult result = kkt_multipliers(f0, constraints, x0, inst.magma(), inst.params());
    emit(kkt_forward_report(result, solve_mp_bruteforce(f0, constraints), human), output);
    return 0;
}

int cmd_gen(const GeneratorSpec& spec, const std::string& out_dir, const std::string& output,
            bool human) {
    std::filesystem::create_directories(out_dir);
    std::vector<std::string> files;
    files.reserve(static_cast<size_t>(spec.count));
    for (int i = 0; i < spec.count; ++i) {
        Instance inst = generate_instance(spec, i);
        char name[32];
        std::snprintf(name, sizeof(name), "instance_%03d.json", i);
        std::string path = (std::filesystem::path(out_dir) / name).string();
        save_instance(inst, path);
        files.push_back(std::move(path));
    }
    emit(gen_report(files, human), output);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact convexity certificates on finite operation tables"};
    app.require_subcommand(1);

    std::function<int()> action;

    // check
    auto* check = app.add_subcommand("check", "report per-function convexity verdicts");
    {
        auto opts = std::make_shared<std::tuple<std::string, std::string, bool>>();
        check->add_option("--input", std::get<0>(*opts), "instance file")->required();
        check->add_option("--output", std::get<1>(*opts), "write the report here instead of stdout");
        check->add_flag("--human", std::get<2>(*opts), "line-oriented text instead of JSON");
        check->callback([opts, &action] {
            action = [opts] { return cmd_check(std::get<0>(*opts), std::get<1>(*opts), std::get<2>(*opts)); };
        });
    }

    // solve
    auto* solve = app.add_subcommand("solve", "compute a multiplier certificate");
    {
        struct SolveOpts {
            std::string input, method = "lp", output;
            bool human = false;
        };
        auto opts = std::make_shared<SolveOpts>();
        solve->add_option("--input", opts->input, "instance file")->required();
        solve->add_option("--method", opts->method, "lp, recursive or two")
            ->check(CLI::IsMember({"lp", "recursive", "two"}));
        solve->add_option("--output", opts->output, "write the report here instead of stdout");
        solve->add_flag("--human", opts->human, "line-oriented text instead of JSON");
        solve->callback([opts, &action] {
            action = [opts] { return cmd_solve(opts->input, opts->method, opts->output, opts->human); };
        });
    }

    // diagnose
    auto* diagnose = app.add_subcommand("diagnose", "tuple condition, subset intersections, per-element constraints");
    {
        auto opts = std::make_shared<std::tuple<std::string, std::string, bool>>();
        diagnose->add_option("--input", std::get<0>(*opts), "instance file")->required();
        diagnose->add_option("--output", std::get<1>(*opts), "write the report here instead of stdout");
        diagnose->add_flag("--human", std::get<2>(*opts), "line-oriented text instead of JSON");
        diagnose->callback([opts, &action] {
            action = [opts] {
                return cmd_diagnose(std::get<0>(*opts), std::get<1>(*opts), std::get<2>(*opts));
            };
        });
    }

    // opcalc synth|eval|realize
    auto* opcalc = app.add_subcommand("opcalc", "derived-operation calculus");
    opcalc->require_subcommand(1);
    {
        struct OpcalcOpts {
            std::string p, q, lo, hi, term, input, output;
            int depth_guard = 64;
            bool human = false;
        };
        auto opts = std::make_shared<OpcalcOpts>();

        auto* synth = opcalc->add_subcommand("synth", "build a term whose ratio lands in [lo, hi]");
        synth->add_option("--p", opts->p, "base coefficient p")->required();
        synth->add_option("--q", opts->q, "base coefficient q")->required();
        synth->add_option("--lo", opts->lo, "interval lower end")->required();
        synth->add_option("--hi", opts->hi, "interval upper end")->required();
        synth->add_option("--depth-guard", opts->depth_guard, "maximum term depth (default 64)");
        synth->add_option("--output", opts->output, "write the report here instead of stdout");
        synth->add_flag("--human", opts->human, "line-oriented text instead of JSON");
        synth->callback([opts, &action] {
            action = [opts] {
                ConvexityParams params(cli_rational(opts->p, "--p"), cli_rational(opts->q, "--q"));
                OpTerm term = synthesize_ratio(params, cli_rational(opts->lo, "--lo"),
                                               cli_rational(opts->hi, "--hi"), opts->depth_guard);
                emit(opcalc_report(term, nullptr, opts->human), opts->output);
                return 0;
            };
        });

        auto* eval = opcalc->add_subcommand("eval", "coefficients and ratio of a term");
        eval->add_option("--term", opts->term, "term text, e.g. compose(swap(base),base)")->required();
        eval->add_option("--p", opts->p, "base coefficient p")->required();
        eval->add_option("--q", opts->q, "base coefficient q")->required();
        eval->add_option("--output", opts->output, "write the report here instead of stdout");
        eval->add_flag("--human", opts->human, "line-oriented text instead of JSON");
        eval->callback([opts, &action] {
            action = [opts] {
                ConvexityParams params(cli_rational(opts->p, "--p"), cli_rational(opts->q, "--q"));
                OpTerm term = OpTerm::parse(opts->term, params);
                emit(opcalc_report(term, nullptr, opts->human), opts->output);
                return 0;
            };
        });

        auto* realize_cmd = opcalc->add_subcommand("realize", "materialize a term on an instance's operation");
        realize_cmd->add_option("--term", opts->term, "term text")->required();
        realize_cmd->add_option("--input", opts->input, "instance file supplying the operation and (p, q)")
            ->required();
        realize_cmd->add_option("--output", opts->output, "write the report here instead of stdout");
        realize_cmd->add_flag("--human", opts->human, "line-oriented text instead of JSON");
        realize_cmd->callback([opts, &action] {
            action = [opts] {
                Instance inst = load_instance(opts->input);
                OpTerm term = OpTerm::parse(opts->term, inst.params());
                RealizedOp realized = realize(term, inst.magma());
                emit(opcalc_report(term, &realized, opts->human), opts->output);
                return 0;
            };
        });
    }

    // kkt
    auto* kkt = app.add_subcommand("kkt", "multipliers at a candidate solution, or converse verification");
    {
        struct KktOpts {
            std::string input, objective, verify, output;
            int x0 = 0;
            bool shift = false, human = false;
        };
        auto opts = std::make_shared<KktOpts>();
        kkt->add_option("--input", opts->input, "instance file")->required();
        kkt->add_option("--objective", opts->objective,
                        "objective function name (default: the first function)");
        kkt->add_option("--x0", opts->x0, "candidate element index")->required();
        kkt->add_option("--verify", opts->verify,
                        "comma-separated multipliers: verify instead of solving");
        kkt->add_flag("--shift-objective", opts->shift,
                      "subtract f0(x0) from the objective; fails if convexity is lost");
        kkt->add_option("--output", opts->output, "write the report here instead of stdout");
        kkt->add_flag("--human", opts->human, "line-oriented text instead of JSON");
        kkt->callback([opts, &action] {
            action = [opts] {
                return cmd_kkt(opts->input, opts->objective, opts->x0, opts->verify, opts->shift,
                               opts->output, opts->human);
            };
        });
    }

    // gen
    auto* gen = app.add_subcommand("gen", "write seeded instance files");
    {
        struct GenOpts {
            std::string kind = "random-table", p = "1", q = "1", strategy = "structured";
            std::string out_dir, output;
            int m = 3, count = 1, n_functions = 2;
            std::uint64_t seed = 0;
            bool human = false;
        };
        auto opts = std::make_shared<GenOpts>();
        gen->add_option("--kind", opts->kind, "operation shape")
            ->check(CLI::IsMember({"random-table", "cyclic-addition", "max-semilattice"}));
        gen->add_option("--m", opts->m, "ground-set size")->required();
        gen->add_option("--p", opts->p, "convexity coefficient p");
        gen->add_option("--q", opts->q, "convexity coefficient q");
        gen->add_option("--strategy", opts->strategy, "function generation strategy")
            ->check(CLI::IsMember({"rejection", "repair", "structured"}));
        gen->add_option("--seed", opts->seed, "stream seed; same seed, same files");
        gen->add_option("--count", opts->count, "number of instances");
        gen->add_option("--n-functions", opts->n_functions, "family size per instance");
        gen->add_option("--out-dir", opts->out_dir, "directory for the instance files")->required();
        gen->add_option("--output", opts->output, "write the summary here instead of stdout");
        gen->add_flag("--human", opts->human, "line-oriented text instead of JSON");
        gen->callback([opts, &action] {
            action = [opts] {
                GeneratorSpec spec;
                spec.magma_kind = opts->kind == "cyclic-addition"    ? MagmaKind::cyclic_addition
                                  : opts->kind == "max-semilattice" ? MagmaKind::max_semilattice
                                                                    : MagmaKind::random_table;
                spec.m = opts->m;
                spec.p = cli_rational(opts->p, "--p");
                spec.q = cli_rational(opts->q, "--q");
                spec.fn_strategy = opts->strategy == "rejection" ? FnStrategy::rejection
                                   : opts->strategy == "repair" ? FnStrategy::repair
                                                                : FnStrategy::structured;
                spec.seed = opts->seed;
                spec.count = opts->count;
                spec.n_functions = opts->n_functions;
                return cmd_gen(spec, opts->out_dir, opts->output, opts->human);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
