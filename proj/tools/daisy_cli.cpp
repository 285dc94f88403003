// daisy: constructions, bounds and checks for daisy-free hypergraphs.
//
// JSON goes to stdout, human-readable summaries to stderr.
// Exit codes: 0 success, 1 failed verification or claim, 2 usage error.

#include "daisy/daisy.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace daisy;

constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t budget_from_env()
{
    const char* text = std::getenv("DAISY_BUDGET");
    if (text == nullptr || *text == '\0') {
        return default_enumeration_budget;
    }
    char* end = nullptr;
    unsigned long long v = std::strtoull(text, &end, 10);
    if (*end != '\0' || v == 0) {
        throw UsageError(std::string("DAISY_BUDGET must be a positive integer, got '") + text + "'");
    }
    return v;
}

Integer parse_integer(const std::string& text)
{
    try {
        Integer z(text, 10);
        return z;
    }
    catch (const std::invalid_argument&) {
        throw UsageError("not an integer: '" + text + "'");
    }
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

Json witness_json(const DaisyCheck& check)
{
    if (!check.witness) {
        return nullptr;
    }
    Json w;
    w["vertex_set"] = check.witness->vertex_set;
    w["contained_edges"] = check.witness->contained_edges;
    return w;
}

struct Globals {
    unsigned threads = 0;
    std::uint64_t budget = default_enumeration_budget;
};

// ---------------------------------------------------------------------------
// construct

struct ConstructArgs {
    unsigned n = 0;
    unsigned r = 0;
    unsigned t = 2;
    unsigned j = 0;
    unsigned s = 0;
    unsigned fibers = 2;
    unsigned residue = 0;
    unsigned count = 1;
    std::vector<unsigned> classes;
    std::optional<unsigned> verify;
    std::string out;
};

int finish_construct(const std::string& kind, const UniformHypergraph& g, const ConstructArgs& a,
                     const Globals& glob)
{
    if (!a.out.empty()) {
        save_edge_list(a.out, g);
    }
    Json j;
    j["kind"] = kind;
    j["n"] = g.n();
    j["r"] = g.r();
    j["edges"] = g.edge_count();
    if (!a.out.empty()) {
        j["out"] = a.out;
    }
    std::cerr << kind << ": " << g.edge_count() << " edges on " << g.n() << " vertices";
    int code = 0;
    if (a.verify) {
        DaisyCheck check = is_daisy_free(g, *a.verify, resolve_threads(glob.threads));
        j["verify"] = {{"k", *a.verify}, {"result", check.free ? "FREE" : "NOT_FREE"}, {"witness", witness_json(check)}};
        std::cerr << ", " << (check.free ? "FREE" : "NOT FREE");
        code = check.free ? 0 : exit_failure;
    }
    std::cerr << '\n';
    emit(j);
    return code;
}

void add_construct(CLI::App& app, std::function<int()>& action, const Globals& glob)
{
    auto* cmd = app.add_subcommand("construct", "build a daisy-free hypergraph and optionally verify it");
    cmd->require_subcommand(1);
    auto args = std::make_shared<ConstructArgs>();

    auto common = [args](CLI::App* sub) {
        sub->add_option("--verify", args->verify, "check H_k^r-freeness for this k");
        sub->add_option("-o,--out", args->out, "edge-list output path");
    };

    auto* shift = cmd->add_subcommand("shift", "cyclic shift graph G(n,r,t,j)");
    shift->add_option("--n", args->n)->required();
    shift->add_option("--r", args->r)->required();
    shift->add_option("--t", args->t)->capture_default_str();
    shift->add_option("--j", args->j)->capture_default_str();
    common(shift);
    shift->callback([&action, args, &glob] {
        action = [args, &glob] {
            auto g = build_shift_graph({args->n, args->r, args->t, args->j}, glob.budget, resolve_threads(glob.threads));
            return finish_construct("shift", g, *args, glob);
        };
    });

    auto* residue = cmd->add_subcommand("residue", "union of residue classes of element sums");
    residue->add_option("--n", args->n)->required();
    residue->add_option("--r", args->r)->required();
    auto* classes = residue->add_option("--classes", args->classes, "residues to include")->delimiter(',');
    residue->add_option("--count", args->count, "take the largest classes")->excludes(classes);
    common(residue);
    residue->callback([&action, args, &glob] {
        action = [args, &glob] {
            auto cls = args->classes.empty() ? best_residue_classes(args->n, args->r, args->count, glob.budget)
                                             : args->classes;
            return finish_construct("residue", residue_class_graph(args->n, args->r, cls, glob.budget), *args, glob);
        };
    });

    auto* augment = cmd->add_subcommand("augment", "augmented blow-up of G(n,r,2,j)");
    augment->add_option("--n", args->n)->required();
    augment->add_option("--r", args->r)->required();
    augment->add_option("--j", args->j, "shift of the base graph")->capture_default_str();
    augment->add_option("--fibers", args->fibers, "fiber size")->capture_default_str();
    augment->add_option("--residue", args->residue, "residue for sets meeting few fibers")->capture_default_str();
    common(augment);
    augment->callback([&action, args, &glob] {
        action = [args, &glob] {
            unsigned threads = resolve_threads(glob.threads);
            auto base = build_shift_graph({args->n, args->r, 2, args->j}, glob.budget, threads);
            auto g = augmented_blowup(base, args->fibers, args->residue, glob.budget, threads);
            return finish_construct("augment", g, *args, glob);
        };
    });

    auto* h44 = cmd->add_subcommand("h44", "recursive H_4^4-free construction");
    h44->add_option("--s", args->s)->required();
    common(h44);
    h44->callback([&action, args, &glob] {
        action = [args, &glob] { return finish_construct("h44", h44_recursive_graph(args->s), *args, glob); };
    });
}

// ---------------------------------------------------------------------------
// bound

struct BoundArgs {
    unsigned n = 0;
    unsigned r = 0;
    unsigned k = 3;
    unsigned s = 1;
    unsigned M = 16;
    std::string ex;
    std::string h_path;
    unsigned daisy_k = 0;
};

void add_bound(CLI::App& app, std::function<int()>& action, const Globals& glob)
{
    auto* cmd = app.add_subcommand("bound", "evaluate an exact lower bound");
    cmd->require_subcommand(1);
    auto a = std::make_shared<BoundArgs>();
    auto n = [a](CLI::App* s) { s->add_option("--n", a->n)->required(); };
    auto r = [a](CLI::App* s) { s->add_option("--r", a->r)->required(); };
    auto k = [a](CLI::App* s) { s->add_option("--k", a->k)->capture_default_str(); };
    auto ex = [a](CLI::App* s) { s->add_option("--ex", a->ex, "lower bound on ex(n)")->required(); };
    auto report = [&action](std::function<BoundReport()> make) {
        action = [make] {
            BoundReport rep = make();
            std::cerr << rep.id() << " = " << rep.decimal() << '\n';
            emit(to_json(rep));
            return 0;
        };
    };

    auto* c1 = cmd->add_subcommand("c1", "averaging bound over shifts");
    n(c1), r(c1), k(c1);
    c1->callback([a, report, &glob] {
        report([a, &glob] { return bound_C1(a->n, a->r, a->k, glob.budget, resolve_threads(glob.threads)); });
    });

    auto* c3a = cmd->add_subcommand("c3a", "closed form for k = 3");
    n(c3a), r(c3a);
    c3a->callback([a, report] { report([a] { return bound_C3a(a->n, a->r); }); });

    auto* t3 = cmd->add_subcommand("t3", "one augmented blow-up step");
    ex(t3), n(t3), r(t3), k(t3);
    t3->callback([a, report] { report([a] { return bound_T3(parse_integer(a->ex), a->n, a->r, a->k); }); });

    auto* rec = cmd->add_subcommand("recurs", "s augmented blow-up steps");
    ex(rec), n(rec), r(rec), k(rec);
    rec->add_option("--s", a->s)->capture_default_str();
    rec->callback([a, report] {
        report([a] { return bound_recurs(parse_integer(a->ex), a->n, a->r, a->k, a->s); });
    });

    auto* cinf = cmd->add_subcommand("cinf", "density from the infinite recursion");
    ex(cinf), n(cinf), r(cinf), k(cinf);
    cinf->add_option("--M", a->M, "terms kept in each series")->capture_default_str();
    cinf->callback([a, report] {
        report([a] { return pi_Cinf(parse_integer(a->ex), a->n, a->r, a->k, a->M); });
    });

    auto* blowup = cmd->add_subcommand("blowup", "density of the blow-up of an n-vertex graph");
    ex(blowup), n(blowup), r(blowup);
    blowup->callback([a, report] { report([a] { return pi_blowup(parse_integer(a->ex), a->n, a->r); }); });

    auto* pir = cmd->add_subcommand("pi-r", "max_n r! C(n,r) / n^(r+1) with its sandwich");
    r(pir);
    pir->callback([a, &action] {
        action = [a] {
            PiR p = pi_r(a->r);
            Sandwich s = pi_r_sandwich(p);
            Json j = to_json(pi_r_report(p));
            j["sandwich"] = {{"lower", to_fraction_string(s.lower)},
                             {"upper", to_fraction_string(s.upper)},
                             {"lower_decimal", to_decimal_floor(s.lower, 8)},
                             {"upper_decimal", to_decimal_floor(s.upper, 8)},
                             {"holds", s.lower_holds && s.upper_holds}};
            std::cerr << "pi_" << p.r << " = " << to_decimal_floor(p.value, 8) << " at n = " << p.n_star << ", sandwich "
                      << (s.lower_holds && s.upper_holds ? "holds" : "FAILS") << '\n';
            emit(j);
            return s.lower_holds && s.upper_holds ? 0 : exit_failure;
        };
    });

    auto* pair = cmd->add_subcommand("pair", "(k-1) pi_r");
    r(pair), k(pair);
    pair->callback([a, report] { report([a] { return bound_pair(a->r, a->k); }); });

    auto* chrom = cmd->add_subcommand("chrom", "chromatic bound for a pair-covering H");
    n(chrom), r(chrom);
    auto* hopt = chrom->add_option("--graph", a->h_path, "edge list of H");
    chrom->add_option("--daisy", a->daisy_k, "use H_k^r for this k")->excludes(hopt);
    chrom->callback([a, report] {
        report([a] {
            if (a->h_path.empty() && a->daisy_k == 0) {
                throw UsageError("chrom needs --graph or --daisy");
            }
            auto h = a->h_path.empty() ? daisy_hypergraph(a->r, a->daisy_k) : load_edge_list(a->h_path);
            return bound_chrom(a->n, a->r, h);
        });
    });
}

// ---------------------------------------------------------------------------
// optimize, fx, spacing, profile, verify, reproduce

Pipeline parse_pipeline(const std::string& name)
{
    if (name == "c3a-blowup") {
        return {Pipeline::Kind::C3aBlowup};
    }
    if (name == "c3a-t3-blowup") {
        return {Pipeline::Kind::C3aT3Blowup};
    }
    const std::string head = "c3a-recurs";
    const std::string tail = "-blowup";
    if (name.size() > head.size() + tail.size() && name.starts_with(head) && name.ends_with(tail)) {
        std::string digits = name.substr(head.size(), name.size() - head.size() - tail.size());
        if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 2) {
            unsigned s = static_cast<unsigned>(std::stoul(digits));
            if (s >= 1) {
                return {Pipeline::Kind::C3aRecursBlowup, s};
            }
        }
    }
    throw UsageError("unknown pipeline '" + name + "' (c3a-blowup, c3a-t3-blowup, c3a-recurs<s>-blowup)");
}

void add_optimize(CLI::App& app, std::function<int()>& action)
{
    struct Args {
        unsigned r = 0;
        unsigned k = 3;
        std::string pipeline = "c3a-blowup";
        bool csv = false;
    };
    auto a = std::make_shared<Args>();
    auto* cmd = app.add_subcommand("optimize", "scan n for the best density bound");
    cmd->add_option("--r", a->r)->required();
    cmd->add_option("--k", a->k)->capture_default_str();
    cmd->add_option("--pipeline", a->pipeline)->capture_default_str();
    cmd->add_flag("--csv", a->csv, "print the scan as CSV instead of JSON");
    cmd->callback([a, &action] {
        action = [a] {
            OptimizeResult res = optimize_n(a->r, a->k, parse_pipeline(a->pipeline));
            std::cerr << res.pipeline.name() << ": best n = " << res.n_star << " (n/r^2 = " << res.ratio
                      << "), density >= " << res.best.density().decimal() << '\n';
            if (a->csv) {
                std::vector<BoundReport> scan;
                for (const auto& [n, rep] : res.scan) {
                    scan.push_back(rep);
                }
                std::cout << bounds_csv(scan);
                return 0;
            }
            Json chain = Json::array();
            for (const auto& rep : res.best.chain) {
                chain.push_back(to_json(rep));
            }
            Json refs = Json::array();
            for (const auto& c : reference_constants(a->r, a->k)) {
                refs.push_back({{"name", c.name}, {"value", c.value}, {"kind", c.kind}});
            }
            Json j;
            j["r"] = res.r;
            j["k"] = res.k;
            j["pipeline"] = res.pipeline.name();
            j["n_star"] = res.n_star;
            j["ratio"] = res.ratio;
            j["density"] = to_json(res.best.density());
            j["chain"] = std::move(chain);
            j["reference"] = std::move(refs);
            emit(j);
            return 0;
        };
    });
}

void add_fx(CLI::App& app, std::function<int()>& action)
{
    struct Args {
        std::optional<double> x;
        bool max = false;
        unsigned M = 64;
        bool csv = false;
        double from = 0.2;
        double to = 3.0;
        unsigned points = 281;
    };
    auto a = std::make_shared<Args>();
    auto* cmd = app.add_subcommand("fx", "evaluate or maximize F(x) and f(x)");
    auto* xo = cmd->add_option("--x", a->x, "point at which to enclose F and f")->check(CLI::PositiveNumber);
    auto* mo = cmd->add_flag("--max", a->max, "maximize f and F")->excludes(xo);
    cmd->add_option("--M", a->M, "series terms")->capture_default_str();
    auto* co = cmd->add_flag("--csv", a->csv, "print an F curve as CSV")->excludes(xo)->excludes(mo);
    cmd->add_option("--from", a->from)->capture_default_str()->needs(co);
    cmd->add_option("--to", a->to)->capture_default_str()->needs(co);
    cmd->add_option("--points", a->points)->capture_default_str()->needs(co);
    cmd->callback([a, &action] {
        action = [a] {
            if (a->csv) {
                std::cout << F_curve_csv(a->from, a->to, a->points, a->M);
                return 0;
            }
            if (a->x) {
                long double x = *a->x;
                Json j;
                j["x"] = *a->x;
                j["M"] = a->M;
                j["F"] = to_json(eval_F(x, a->M));
                j["f"] = to_json(eval_f(x));
                std::cerr << "F(" << *a->x << ") in [" << format_real(eval_F(x, a->M).lo, 12) << ", "
                          << format_real(eval_F(x, a->M).hi, 12) << "]\n";
                emit(j);
                return 0;
            }
            if (!a->max) {
                throw UsageError("fx needs --x, --max or --csv");
            }
            Maximum big = maximize_F(a->M);
            Maximum small = maximize_f();
            Json j;
            j["F"] = {{"x_star", static_cast<double>(big.x)}, {"M", a->M}, {"value", to_json(big.value)}};
            j["f"] = {{"x0", static_cast<double>(small.x)},
                      {"value", to_json(small.value)},
                      {"n_over_r2", static_cast<double>(1.0L / (2.0L * small.x))}};
            std::cerr << "max F at x = " << format_real(big.x, 8) << ", F >= " << format_real(big.value.lo, 12)
                      << "\nmax f at x = " << format_real(small.x, 8) << ", f >= " << format_real(small.value.lo, 12)
                      << '\n';
            emit(j);
            return 0;
        };
    });
}

void add_spacing(CLI::App& app, std::function<int()>& action, const Globals& glob)
{
    struct Args {
        unsigned r = 0;
        unsigned t = 2;
        std::uint64_t samples = 1'000'000;
        std::uint64_t seed = 0;
        bool csv = false;
    };
    auto a = std::make_shared<Args>();
    auto* cmd = app.add_subcommand("spacing", "Monte Carlo estimate of the shortest arc holding t of r points");
    cmd->add_option("--r", a->r)->required();
    cmd->add_option("--t", a->t)->capture_default_str();
    cmd->add_option("--samples", a->samples)->capture_default_str();
    cmd->add_option("--seed", a->seed)->required();
    cmd->add_flag("--csv", a->csv);
    cmd->callback([a, &action, &glob] {
        action = [a, &glob] {
            SpacingEstimate est = estimate_spacing(a->r, a->t, a->samples, a->seed, resolve_threads(glob.threads));
            std::cerr << "e(" << a->r << "," << a->t << ") ~ " << format_real(est.mean, 8) << " +- "
                      << format_real(est.std_error, 3) << '\n';
            if (a->csv) {
                std::cout << spacing_csv(std::span(&est, 1));
                return 0;
            }
            Json j = to_json(est);
            if (a->t == 2 || a->t == a->r) {
                auto closed = spacing_closed_forms(a->r);
                Rational exact = a->t == 2 ? closed.e_two : closed.e_all;
                j["closed_form"] = to_fraction_string(exact);
                j["z_score"] = (est.mean - exact.get_d()) / est.std_error;
            }
            emit(j);
            return 0;
        };
    });
}

void add_profile(CLI::App& app, std::function<int()>& action, const Globals& glob)
{
    struct Args {
        unsigned n = 0;
        unsigned r = 0;
        unsigned t = 2;
        std::string cache;
    };
    auto a = std::make_shared<Args>();
    auto* cmd = app.add_subcommand("profile", "edge counts of G(n,r,t,j) for every shift j");
    cmd->add_option("--n", a->n)->required();
    cmd->add_option("--r", a->r)->required();
    cmd->add_option("--t", a->t)->capture_default_str();
    cmd->add_option("--cache", a->cache, "directory for cached profiles");
    cmd->callback([a, &action, &glob] {
        action = [a, &glob] {
            ShiftProfile p = cached_shift_profile(a->n, a->r, a->t, a->cache, glob.budget, resolve_threads(glob.threads));
            std::cerr << "best shift j = " << p.best_j << " with " << p.best_count << " edges; average "
                      << to_decimal_floor(p.average, 4) << '\n';
            emit(to_json(p));
            return 0;
        };
    });
}

void add_verify(CLI::App& app, std::function<int()>& action, const Globals& glob)
{
    struct Args {
        std::string in;
        unsigned k = 3;
    };
    auto a = std::make_shared<Args>();
    auto* cmd = app.add_subcommand("verify", "check an edge list for H_k^r-freeness");
    cmd->add_option("--in", a->in)->required()->check(CLI::ExistingFile);
    cmd->add_option("--k", a->k)->required();
    cmd->callback([a, &action, &glob] {
        action = [a, &glob] {
            UniformHypergraph g = load_edge_list(a->in);
            DaisyCheck check = is_daisy_free(g, a->k, resolve_threads(glob.threads));
            Json j;
            j["n"] = g.n();
            j["r"] = g.r();
            j["edges"] = g.edge_count();
            j["k"] = a->k;
            j["result"] = check.free ? "FREE" : "NOT_FREE";
            j["witness"] = witness_json(check);
            std::cerr << (check.free ? "FREE" : "NOT FREE") << '\n';
            emit(j);
            return check.free ? 0 : exit_failure;
        };
    });
}

void add_reproduce(CLI::App& app, std::function<int()>& action, const Globals& glob)
{
    auto opt = std::make_shared<ReproductionOptions>();
    auto cache = std::make_shared<std::string>();
    auto* cmd = app.add_subcommand("reproduce", "recompute every quoted value and compare");
    cmd->add_option("--cache", *cache, "directory for cached shift profiles");
    cmd->add_option("--samples", opt->samples, "Monte Carlo samples per estimate")->capture_default_str();
    cmd->add_option("--seed", opt->seed)->capture_default_str();
    cmd->callback([opt, cache, &action, &glob] {
        action = [opt, cache, &glob] {
            opt->cache_dir = *cache;
            opt->threads = resolve_threads(glob.threads);
            opt->budget = glob.budget;
            ReproductionReport rep = reproduce_all(*opt);
            std::cerr << format_table(rep);
            emit(to_json(rep));
            return rep.ok() ? 0 : exit_failure;
        };
    });
}

int run(int argc, char** argv)
{
    CLI::App app{"Constructions and exact bounds for daisy-free hypergraphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals glob;
    std::function<int()> action;
    app.add_option("--threads", glob.threads, "worker threads (0: all cores)")->capture_default_str();

    add_construct(app, action, glob);
    add_bound(app, action, glob);
    add_optimize(app, action);
    add_fx(app, action);
    add_spacing(app, action, glob);
    add_profile(app, action, glob);
    add_verify(app, action, glob);
    add_reproduce(app, action, glob);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        glob.budget = budget_from_env();
        return action ? action() : exit_usage;
    }
    catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << " (raise DAISY_BUDGET to allow it)\n";
        return exit_usage;
    }
    catch (const LimitExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
