#include "cli.hh"

#include <packbound/bounds.hh>
#include <packbound/enumerate.hh>
#include <packbound/families.hh>
#include <packbound/graph6.hh>
#include <packbound/graph_io.hh>
#include <packbound/report.hh>
#include <packbound/solvers.hh>
#include <packbound/verifier.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>

using namespace packbound;
using nlohmann::json;

namespace
{
    struct UsageError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    struct Config
    {
        std::string input = "-";
        std::optional<int> k;
        std::optional<int> t;
        std::optional<int> n;
        std::string format;
        bool exhaustive = false;
        std::optional<std::uint64_t> node_limit;
        int jobs = 1;
        bool all_connected = false;
        std::string recognize;
        std::string generate;
        std::uint64_t seed = 1;
        int count = 1;
        std::string claim;
        std::string verdicts_path;
        std::string tight_csv_path;
        bool timing = false;
    };

    auto solve_options(const Config & c) -> SolveOptions
    {
        SolveOptions opts;
        opts.force_exhaustive = c.exhaustive;
        opts.node_limit = c.node_limit;
        if (! opts.node_limit)
            if (const char * env = std::getenv("PACKBOUND_NODE_LIMIT"); env && *env) {
                try {
                    std::size_t used = 0;
                    auto value = std::stoull(env, &used);
                    if (used != std::string(env).size() || 0 == value)
                        throw std::invalid_argument(env);
                    opts.node_limit = value;
                }
                catch (const std::exception &) {
                    throw UsageError("PACKBOUND_NODE_LIMIT must be a positive integer");
                }
            }
        return opts;
    }

    auto read_input(const Config & c, std::istream & in) -> std::vector<GraphRecord>
    {
        if (c.input == "-")
            return read_graphs(in);
        std::ifstream file(c.input);
        if (! file)
            throw UsageError("cannot open input '" + c.input + "'");
        return read_graphs(file);
    }

    auto graph_name(const Graph & g) -> json
    {
        if (g.order() > graph6_max_order)
            return nullptr;
        return to_graph6(g);
    }

    // Malformed records are reported with their line number; returns how many there were.
    auto report_malformed(const std::vector<GraphRecord> & records, std::ostream & err) -> int
    {
        int bad = 0;
        for (const auto & r : records)
            if (! r.graph) {
                err << "line " << r.line << ": " << r.error << '\n';
                ++bad;
            }
        return bad;
    }

    auto format_or(const Config & c, const std::string & fallback) -> std::string
    {
        return c.format.empty() ? fallback : c.format;
    }

    auto emit_rows(const std::vector<json> & rows, const std::string & format, std::ostream & out) -> void
    {
        if (format == "json") {
            for (const auto & row : rows)
                out << row.dump() << '\n';
            return;
        }

        if (format == "csv") {
            if (rows.empty())
                return;
            bool first = true;
            for (const auto & [key, _] : rows.front().items()) {
                out << (first ? "" : ",") << key;
                first = false;
            }
            out << '\n';
        }
        for (const auto & row : rows) {
            bool first = true;
            for (const auto & [key, value] : row.items()) {
                if (format == "csv")
                    out << (first ? "" : ",") << (value.is_string() ? value.get<std::string>() : value.dump());
                else
                    out << (first ? "" : " ") << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump());
                first = false;
            }
            out << '\n';
        }
    }

    auto run_invariants(const Config & c, std::istream & in, std::ostream & out, std::ostream & err) -> int
    {
        auto records = read_input(c, in);
        auto opts = solve_options(c);
        int failures = report_malformed(records, err);
        if (c.k && *c.k < 1)
            throw UsageError("--k must be at least 1");

        std::vector<json> rows;
        for (const auto & r : records) {
            if (! r.graph)
                continue;
            const auto & g = *r.graph;
            json row{{"graph", graph_name(g)}, {"n", g.order()}, {"m", g.edge_count()}};
            try {
                row["rho"] = packing_number(g, opts).value;
                row["rho_o"] = open_packing_number(g, opts).value;
                row["gamma"] = tuple_domination_number(g, 1, opts).value;
                if (g.order() == 0 || g.min_degree() >= 1)
                    row["gamma_x2"] = tuple_domination_number(g, 2, opts).value;
                else
                    row["gamma_x2"] = nullptr;
                if (c.k) {
                    row["L" + std::to_string(*c.k)] = limited_packing_number(g, *c.k, opts).value;
                    if (*c.k >= 3) {
                        auto key = "gamma_x" + std::to_string(*c.k);
                        if (g.order() == 0 || g.min_degree() >= *c.k - 1)
                            row[key] = tuple_domination_number(g, *c.k, opts).value;
                        else
                            row[key] = nullptr;
                    }
                }
            }
            catch (const NodeLimitExceeded & e) {
                err << "line " << r.line << ": " << e.what() << '\n';
                ++failures;
                continue;
            }
            rows.push_back(std::move(row));
        }
        emit_rows(rows, format_or(c, "json"), out);
        return failures > 0 ? cli::exit_usage : cli::exit_ok;
    }

    auto run_bounds(const Config & c, std::istream & in, std::ostream & out, std::ostream & err) -> int
    {
        auto records = read_input(c, in);
        auto opts = solve_options(c);
        int failures = report_malformed(records, err);
        if (c.k && *c.k < 1)
            throw UsageError("--k must be at least 1");
        auto format = format_or(c, "json");

        for (const auto & r : records) {
            if (! r.graph)
                continue;
            const auto & g = *r.graph;
            try {
                json evaluations = json::array();
                evaluations.push_back(to_json(assess(l2_pendant_bound(g), limited_packing_number(g, 2, opts).value)));

                int lo = c.k ? *c.k : 1, hi = c.k ? *c.k : g.max_degree();
                for (int k = lo; k <= hi; ++k)
                    evaluations.push_back(to_json(assess(lk_order_size_bound(g, k), limited_packing_number(g, k, opts).value)));

                long rho = packing_number(g, opts).value, rho_o = open_packing_number(g, opts).value;
                evaluations.push_back(to_json(assess(open_packing_order_size_bound(g), rho_o)));
                evaluations.push_back(to_json(assess(open_packing_min_degree_bound(g), rho_o)));
                evaluations.push_back(to_json(assess(packing_min_degree_bound(g), rho)));

                std::optional<DoubleDominationValues> values;
                if (g.order() > 0 && g.min_degree() >= 1)
                    values = DoubleDominationValues{tuple_domination_number(g, 2, opts).value, rho};
                auto dd = double_domination_bounds(g, values);
                for (const auto & e : dd.evaluations)
                    evaluations.push_back(to_json(e));

                json thresholds = json::object();
                for (int k = 1; k <= g.max_degree() + 1; ++k)
                    thresholds[std::to_string(k)] = lk_trivial_threshold(g, k);

                json row{{"graph", graph_name(g)}, {"bounds", evaluations}, {"lk_trivial_threshold", thresholds}};
                if (dd.dominates_prior)
                    row["dominates_prior"] = *dd.dominates_prior;

                if (format == "json")
                    out << row.dump() << '\n';
                else {
                    out << row["graph"].get<std::string>() << '\n';
                    for (const auto & e : evaluations) {
                        out << "  " << e["bound"].get<std::string>();
                        if (e.contains("k"))
                            out << "[k=" << e["k"].get<int>() << "]";
                        if (e["applicable"].get<bool>())
                            out << " value=" << e["value"]["exact"].get<std::string>() << " invariant=" << e["invariant"].dump()
                                << (e["tight"].get<bool>() ? " tight" : (e["holds"].get<bool>() ? " holds" : " VIOLATED"));
                        else
                            out << " inapplicable (" << e["reason"].get<std::string>() << ")";
                        out << '\n';
                    }
                }
            }
            catch (const NodeLimitExceeded & e) {
                err << "line " << r.line << ": " << e.what() << '\n';
                ++failures;
            }
        }
        return failures > 0 ? cli::exit_usage : cli::exit_ok;
    }

    auto run_family(const Config & c, std::istream & in, std::ostream & out, std::ostream & err) -> int
    {
        if (c.recognize.empty() == c.generate.empty())
            throw UsageError("family needs exactly one of --recognize or --generate");

        if (! c.generate.empty()) {
            auto kind = parse_family_kind(c.generate);
            std::mt19937_64 rng(c.seed);
            auto format = format_or(c, "text");
            for (int i = 0; i < c.count; ++i) {
                FamilyParams params;
                switch (kind) {
                    case FamilyKind::omega:
                        if (! c.k)
                            throw UsageError("--generate omega needs --k");
                        params = sample_omega(*c.k, rng);
                        break;
                    case FamilyKind::sigma:
                        params = sample_sigma(rng);
                        break;
                    case FamilyKind::gamma:
                        params = sample_gamma(c.t.value_or(1), c.k.value_or(1), rng);
                        break;
                    case FamilyKind::gamma_prime:
                        params = sample_gamma_prime(c.t.value_or(1), c.k.value_or(1), rng);
                        break;
                }
                auto g = generate_family(params);
                if (format == "json")
                    out << json{{"family", to_string(kind)}, {"graph", graph_name(g)}, {"n", g.order()}, {"m", g.edge_count()}}.dump() << '\n';
                else
                    out << to_graph6(g) << '\n';
            }
            return cli::exit_ok;
        }

        auto kind = parse_family_kind(c.recognize);
        if (kind == FamilyKind::omega && ! c.k)
            throw UsageError("--recognize omega needs --k");

        auto records = read_input(c, in);
        int failures = report_malformed(records, err);
        for (const auto & r : records) {
            if (! r.graph)
                continue;
            const auto & g = *r.graph;
            json row{{"graph", graph_name(g)}, {"family", to_string(kind)}};
            try {
                std::optional<FamilyWitness> w;
                switch (kind) {
                    case FamilyKind::omega:       w = recognize_omega(g, *c.k); break;
                    case FamilyKind::sigma:       w = recognize_sigma(g); break;
                    case FamilyKind::gamma:       w = recognize_gamma(g); break;
                    case FamilyKind::gamma_prime: w = recognize_gamma_prime(g); break;
                }
                row["member"] = w.has_value();
                row["witness"] = w ? to_json(*w) : json(nullptr);
                if (w)
                    row["certificate_valid"] = check_certificate(g, *w);
            }
            catch (const std::invalid_argument & e) {
                err << "line " << r.line << ": " << e.what() << '\n';
                ++failures;
                continue;
            }
            out << row.dump() << '\n';
        }
        return failures > 0 ? cli::exit_usage : cli::exit_ok;
    }

    auto run_enumerate(const Config & c, std::ostream & out) -> int
    {
        if (! c.n)
            throw UsageError("enumerate needs --n");
        for (const auto & g : enumerate_connected(*c.n))
            out << to_graph6(g) << '\n';
        return cli::exit_ok;
    }

    auto stream_records(const Config & c, std::istream & in) -> std::vector<GraphRecord>
    {
        if (c.n) {
            std::vector<GraphRecord> records;
            for (auto & g : enumerate_connected(*c.n))
                records.push_back(GraphRecord{0, std::move(g), {}});
            return records;
        }
        if (c.all_connected)
            throw UsageError("--all-connected needs --n");
        return read_input(c, in);
    }

    auto verify_options(const Config & c) -> VerifyOptions
    {
        VerifyOptions opts;
        opts.solve = solve_options(c);
        if (c.k) {
            if (*c.k < 1)
                throw UsageError("--k must be at least 1");
            opts.k_range = std::pair{*c.k, *c.k};
        }
        return opts;
    }

    auto run_verify(const Config & c, std::istream & in, std::ostream & out, std::ostream & err) -> int
    {
        auto records = stream_records(c, in);
        report_malformed(records, err);
        auto report = verify_stream(records, verify_options(c), c.jobs);

        if (! c.verdicts_path.empty()) {
            std::ofstream file(c.verdicts_path);
            if (! file)
                throw UsageError("cannot write '" + c.verdicts_path + "'");
            for (const auto & v : report.verdicts)
                file << to_json(v).dump() << '\n';
        }
        if (! c.tight_csv_path.empty()) {
            std::ofstream file(c.tight_csv_path);
            if (! file)
                throw UsageError("cannot write '" + c.tight_csv_path + "'");
            file << tight_instances_csv(report.summary);
        }

        auto format = format_or(c, "json");
        const auto & s = report.summary;
        if (format == "json")
            out << to_json(s, c.timing).dump(2) << '\n';
        else if (format == "csv")
            out << tight_instances_csv(s);
        else {
            out << "graphs processed: " << s.graphs_processed << '\n'
                << "malformed records: " << s.malformed_records << '\n'
                << "violations: " << s.violations() << '\n'
                << "findings: " << s.findings() << '\n';
            for (const auto & [claim, counts] : s.counts)
                out << "  " << to_string(claim) << ": holds=" << counts.holds << " tight=" << counts.tight
                    << " violated=" << counts.violated << " inapplicable=" << counts.inapplicable
                    << " finding=" << counts.finding << '\n';
            if (c.timing)
                out << "wall seconds: " << s.wall_seconds << '\n';
        }

        for (const auto & v : report.verdicts)
            if (v.status == VerdictStatus::violated)
                err << "VIOLATED " << to_json(v).dump() << '\n';
        return s.violations() > 0 ? cli::exit_violation : cli::exit_ok;
    }

    auto run_hunt(const Config & c, std::istream & in, std::ostream & out, std::ostream & err) -> int
    {
        if (c.claim.empty())
            throw UsageError("hunt needs --claim");
        auto claim = parse_claim_id(c.claim);
        auto records = stream_records(c, in);
        report_malformed(records, err);
        auto tight = hunt_tight(claim, records, verify_options(c), c.jobs);

        auto format = format_or(c, "text");
        if (format == "json")
            out << json{{"claim", to_string(claim)}, {"tight", tight}}.dump() << '\n';
        else if (format == "csv") {
            out << "claim,graph6\n";
            for (const auto & g : tight)
                out << to_string(claim) << ',' << g << '\n';
        }
        else
            for (const auto & g : tight)
                out << g << '\n';
        return cli::exit_ok;
    }
}

auto packbound::cli::run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Exact packing and domination invariants, bounds, extremal families and sweeps", "packbound"};
    app.require_subcommand(1);
    Config c;

    auto add_common = [&] (CLI::App * sub, bool solver) {
        sub->add_option("--input,-i", c.input, "graph6 or edge-list file, '-' for standard input");
        sub->add_option("--format,-f", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
        if (solver) {
            sub->add_flag("--exhaustive", c.exhaustive, "use the exhaustive subset oracle instead of branch and bound");
            sub->add_option("--node-limit", c.node_limit, "search node cap (default: $PACKBOUND_NODE_LIMIT)")->check(CLI::PositiveNumber);
        }
    };

    auto * invariants = app.add_subcommand("invariants", "rho, rho_o, gamma, gamma_x2 and optionally L_k per graph");
    add_common(invariants, true);
    invariants->add_option("--k", c.k, "also report L_k (and gamma_xk for k >= 3)");

    auto * bounds = app.add_subcommand("bounds", "evaluate every bound against the exact invariants");
    add_common(bounds, true);
    bounds->add_option("--k", c.k, "restrict the L_k order/size bound to this k");

    auto * family = app.add_subcommand("family", "recognise or generate extremal family members");
    add_common(family, false);
    family->add_option("--recognize", c.recognize, "omega, sigma, gamma or gamma-prime");
    family->add_option("--generate", c.generate, "omega, sigma, gamma or gamma-prime");
    family->add_option("--k", c.k, "family parameter k");
    family->add_option("--t", c.t, "number of core components for gamma / gamma-prime");
    family->add_option("--seed", c.seed, "random seed for --generate");
    family->add_option("--count", c.count, "number of members to generate")->check(CLI::PositiveNumber);

    auto * enumerate = app.add_subcommand("enumerate", "all connected graphs on n vertices as graph6");
    enumerate->add_option("--n", c.n, "order, 1..7")->required();

    auto add_stream = [&] (CLI::App * sub) {
        add_common(sub, true);
        sub->add_option("--n", c.n, "sweep all connected graphs of this order instead of reading input");
        sub->add_flag("--all-connected", c.all_connected, "with --n: every connected graph of that order");
        sub->add_option("--k", c.k, "restrict per-k claims to this k");
        sub->add_option("--jobs,-j", c.jobs, "worker threads")->check(CLI::PositiveNumber);
    };

    auto * verify = app.add_subcommand("verify", "check every claim over a graph stream");
    add_stream(verify);
    verify->add_option("--verdicts", c.verdicts_path, "write one JSON verdict per line to this file");
    verify->add_option("--tight-csv", c.tight_csv_path, "write the tight-instance table to this file");
    verify->add_flag("--timing", c.timing, "include wall time in the summary");

    auto * hunt = app.add_subcommand("hunt", "list graphs attaining equality in a claim");
    add_stream(hunt);
    hunt->add_option("--claim", c.claim, "claim id, e.g. thm2.1")->required();

    std::vector<const char *> argv{"packbound"};
    for (const auto & a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    }

    try {
        if (invariants->parsed())
            return run_invariants(c, in, out, err);
        if (bounds->parsed())
            return run_bounds(c, in, out, err);
        if (family->parsed())
            return run_family(c, in, out, err);
        if (enumerate->parsed())
            return run_enumerate(c, out);
        if (verify->parsed())
            return run_verify(c, in, out, err);
        if (hunt->parsed())
            return run_hunt(c, in, out, err);
    }
    catch (const UsageError & e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::invalid_argument & e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
