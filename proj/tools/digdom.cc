#include <digdom/arc_list.hh>
#include <digdom/families.hh>
#include <digdom/products.hh>
#include <digdom/solvers.hh>
#include <digdom/verify.hh>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace digdom;

using std::cerr;
using std::cout;
using std::endl;
using std::string;

namespace
{
    /// A file if one exists at this path, otherwise a family spec.
    auto load_operand(const string & operand) -> Digraph
    {
        if (std::filesystem::exists(operand))
            return read_arc_list_file(operand);
        return make_family(operand);
    }

    auto with_output(const string & path, const std::function<void(std::ostream &)> & f) -> void
    {
        if (path.empty() || path == "-") {
            f(cout);
            cout.flush();
            return;
        }
        std::ofstream out(path);
        if (! out)
            throw std::runtime_error("cannot open '" + path + "' for writing");
        f(out);
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Exact domination, packing and product tools for digraphs"};
    app.require_subcommand(1);
    app.fallthrough();

    long long timeout_ms = 60'000;
    bool no_timing = false;
    app.add_option("--timeout-ms", timeout_ms, "Per-solve time budget in milliseconds")->capture_default_str();
    app.add_flag("--no-timing", no_timing, "Write elapsed times as 0 for byte-stable output");

    auto * invariants = app.add_subcommand("invariants", "Compute gamma, gamma_t, rho and rho_open with witnesses");
    string input, family;
    invariants->add_option("input", input, "Arc-list file");
    invariants->add_option("--family", family, "Family spec instead of a file, e.g. Gm:3");

    auto * product = app.add_subcommand("product", "Write the Cartesian or direct product of two digraphs");
    string op, lhs, rhs, product_out;
    product->add_option("op", op, "cart or direct")->required()->check(CLI::IsMember({"cart", "direct"}));
    product->add_option("lhs", lhs, "Arc-list file or family spec")->required();
    product->add_option("rhs", rhs, "Arc-list file or family spec")->required();
    product->add_option("--out", product_out, "Output file (default stdout)");

    auto * family_cmd = app.add_subcommand("family", "Write a named construction as an arc list");
    string family_spec, family_out;
    family_cmd->add_option("spec", family_spec, "Family spec, e.g. Hm:3 or ditree:n=6,seed=42,w=1/1/1")->required();
    family_cmd->add_option("--out", family_out, "Output file (default stdout)");

    auto * verify = app.add_subcommand("verify", "Run a verification suite and write JSON-lines records");
    string config_path, verify_out;
    unsigned jobs = 0;
    std::optional<std::uint64_t> seed;
    bool print_default = false;
    verify->add_option("config", config_path, "Suite config file (default: the built-in suite)");
    verify->add_option("--jobs", jobs, "Worker threads (overrides the config)");
    verify->add_option("--out", verify_out, "Records file (default stdout)");
    verify->add_option("--seed", seed, "Suite seed (overrides the config)");
    verify->add_flag("--print-default", print_default, "Print the built-in suite config and exit");

    auto * search = app.add_subcommand("search-acyclic", "Compare rho and gamma over exhaustive and random DAGs");
    AcyclicSearch acyclic;
    string search_out;
    search->add_option("--max-n", acyclic.exhaustive_max_n, "Exhaustive DAGs up to this order (at most 5)")
        ->capture_default_str();
    search->add_option("--count", acyclic.random_count, "Number of random DAGs")->capture_default_str();
    search->add_option("--random-max-n", acyclic.random_max_n, "Largest random DAG order")->capture_default_str();
    search->add_option("--seed", acyclic.seed, "Random seed")->capture_default_str();
    search->add_option("--out", search_out, "Records file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    SolveOptions solve{std::chrono::milliseconds(timeout_ms)};
    bool timing = ! no_timing;

    try {
        if (invariants->parsed()) {
            if (input.empty() == family.empty()) {
                cerr << "invariants: give exactly one of an input file or --family" << endl;
                return 2;
            }
            Digraph d = family.empty() ? read_arc_list_file(input) : make_family(family);
            string id = family.empty() ? input : to_string(parse_family_spec(family));
            auto report = compute_invariants(d, id, solve);
            cout << to_json(report, d, timing).dump() << endl;
            bool timed_out = report.gamma.status == SolveStatus::timeout || report.rho.status == SolveStatus::timeout ||
                report.rho_open.status == SolveStatus::timeout ||
                (report.gamma_t && report.gamma_t->status == SolveStatus::timeout);
            return timed_out ? 3 : 0;
        }

        if (product->parsed()) {
            auto g = load_operand(lhs), h = load_operand(rhs);
            auto p = op == "cart" ? cartesian_product(g, h) : direct_product(g, h);
            with_output(product_out, [&](std::ostream & out) { write_arc_list(out, p.digraph); });
            return 0;
        }

        if (family_cmd->parsed()) {
            auto d = make_family(family_spec);
            with_output(family_out, [&](std::ostream & out) { write_arc_list(out, d); });
            return 0;
        }

        if (verify->parsed()) {
            if (print_default) {
                cout << default_suite_text();
                return 0;
            }
            SuiteConfig config;
            try {
                if (config_path.empty())
                    config = parse_suite_config_text(default_suite_text());
                else {
                    std::ifstream in(config_path);
                    if (! in) {
                        cerr << "verify: cannot read '" << config_path << "'" << endl;
                        return 2;
                    }
                    config = parse_suite_config(in);
                }
            }
            catch (const std::exception & e) {
                cerr << "verify: malformed config: " << e.what() << endl;
                return 2;
            }
            if (jobs > 0)
                config.jobs = jobs;
            if (seed)
                config.seed = *seed;
            if (app.get_option("--timeout-ms")->count() > 0)
                config.options.timeout = std::chrono::milliseconds(timeout_ms);

            SuiteSummary summary;
            with_output(verify_out, [&](std::ostream & out) {
                summary = run_suite(
                    config, [&](const VerificationRecord & r) { out << to_json_line(r, timing) << '\n'; },
                    [&](const string & error) { cerr << "verify: instance error: " << error << endl; });
            });
            cerr << summary_json(summary).dump() << endl;
            return summary.theorem_failures > 0 ? 1 : 0;
        }

        if (search->parsed()) {
            CheckOptions options;
            options.timeout = solve.timeout;
            std::size_t counterexamples = 0, records = 0;
            with_output(search_out, [&](std::ostream & out) {
                search_acyclic_problem(acyclic, options, [&](const VerificationRecord & r) {
                    ++records;
                    if (r.verdict == Verdict::fails)
                        ++counterexamples;
                    out << to_json_line(r, timing) << '\n';
                });
            });
            cerr << "{\"records\":" << records << ",\"rho_below_gamma\":" << counterexamples << "}" << endl;
            return 0;
        }
    }
    catch (const ParseError & e) {
        cerr << "parse error: " << e.what() << endl;
        return 2;
    }
    catch (const std::exception & e) {
        cerr << "error: " << e.what() << endl;
        return 2;
    }
    return 0;
}
