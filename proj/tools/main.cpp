#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "hcp/acceptance.hpp"
#include "hcp/charpoly.hpp"
#include "hcp/chipfiring.hpp"
#include "hcp/firing_graph.hpp"
#include "hcp/macaulay.hpp"
#include "hcp/output.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitOracleMismatch = 3;
constexpr int kExitNotPolynomial = 4;

struct CharpolyArgs {
    std::string family;
    std::vector<int> params;
    std::string format = "text";
    std::vector<std::string> verify_at;
    std::string out_file;
};

void write_output(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream os(out_file);
    if (!os) throw CLI::ValidationError("--out", "cannot open '" + out_file + "'");
    os << text;
}

int run_charpoly(const CharpolyArgs& args) {
    std::optional<hcp::FactoredCharPoly> poly;
    std::optional<hcp::UniformHypergraph> graph;
    std::vector<std::string> param_strings;
    try {
        if (args.family == "path") {
            if (args.params.size() != 2) throw std::invalid_argument("path needs: <n> <k>");
            poly = hcp::charpoly_path(args.params[0], args.params[1]);
            graph = hcp::make_hyperpath(args.params[0], args.params[1]);
        } else if (args.family == "star") {
            if (args.params.size() != 2) throw std::invalid_argument("star needs: <m> <k>");
            poly = hcp::charpoly_star(args.params[0], args.params[1]);
            graph = hcp::make_hyperstar(args.params[0], args.params[1]);
        } else if (args.family == "starlike") {
            if (args.params.size() < 2)
                throw std::invalid_argument("starlike needs: <k> <n_1> [n_2 ...]");
            int k = args.params[0];
            std::vector<int> arms(args.params.begin() + 1, args.params.end());
            poly = hcp::charpoly_starlike(k, arms);
            graph = hcp::make_starlike(k, arms);
        } else {
            throw std::invalid_argument("unknown family '" + args.family + "'");
        }
        for (int p : args.params) param_strings.push_back(std::to_string(p));
    } catch (const hcp::NotPolynomialError& e) {
        std::cerr << "error: assembly is not a polynomial: " << e.what() << "\n";
        return kExitNotPolynomial;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    hcp::OutputDocument doc = hcp::make_document(*poly, args.family, param_strings);

    bool oracle_mismatch = false;
    if (!args.verify_at.empty()) {
        doc.kind = "report";
        std::vector<hcp::Rat> lambdas;
        try {
            for (const auto& s : args.verify_at) lambdas.push_back(hcp::parse_rational(s));
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }
        hcp::Int cols = hcp::macaulay_size(graph->num_vertices(),
                                           graph->num_vertices() * (graph->k() - 2) + 1);
        if (cols > hcp::kMacaulayColumnGuard) {
            doc.notes.push_back("verification skipped: instance outside the oracle range (" +
                                cols.get_str() + " Macaulay columns)");
        } else {
            hcp::VerifyReport rep = hcp::verify_formula(*graph, *poly, lambdas);
            for (const auto& item : rep.items) {
                doc.verifications.push_back({item.lambda0.get_str(), item.formula_value.get_str(),
                                             item.oracle_value.get_str(), item.equal});
            }
            oracle_mismatch = !rep.all_equal;
        }
    }

    std::ostringstream out;
    if (args.format == "json") {
        out << hcp::to_json(doc);
    } else {
        if (args.format == "latex") {
            out << hcp::render_latex(*poly) << "\n";
        } else {
            out << hcp::render_text(*poly) << "\n";
        }
        out << "total degree: " << doc.total_degree << "\n";
        for (const auto& v : doc.verifications) {
            out << "verify lambda=" << v.lambda0 << ": formula=" << v.formula_value
                << " oracle=" << v.oracle_value << (v.equal ? " (verified)" : " (MISMATCH)")
                << "\n";
        }
        for (const auto& n : doc.notes) out << "note: " << n << "\n";
    }
    write_output(out.str(), args.out_file);
    return oracle_mismatch ? kExitOracleMismatch : 0;
}

std::vector<int> parse_config_list(const std::string& csv) {
    std::vector<int> values;
    std::string token;
    std::istringstream is(csv);
    while (std::getline(is, token, ',')) values.push_back(std::stoi(token));
    return values;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact factored characteristic polynomials of uniform hyperpaths, hyperstars "
                 "and starlike hypergraphs, with a chip-firing engine and a Macaulay-resultant "
                 "verification oracle"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    CharpolyArgs cp_args;
    auto* cp = app.add_subcommand("charpoly", "compute a factored characteristic polynomial");
    cp->add_option("family", cp_args.family, "path | star | starlike")->required();
    cp->add_option("params", cp_args.params,
                   "path: n k;  star: m k;  starlike: k n_1 [n_2 ...]")
        ->required();
    cp->add_option("--format", cp_args.format, "text | json | latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    cp->add_option("--verify-at", cp_args.verify_at,
                   "rational lambda values to check against the Macaulay oracle");
    cp->add_option("--out", cp_args.out_file, "write output to a file instead of stdout");

    auto* cf = app.add_subcommand("chipfire", "dollar-game utilities");
    cf->require_subcommand(1);

    int crit_k = 0;
    auto* cf_critical = cf->add_subcommand("critical", "count critical configurations on K_k");
    cf_critical->add_option("k", crit_k, "complete graph order")->required();

    int strata_n = 0, strata_k = 0;
    auto* cf_strata = cf->add_subcommand("strata", "exhaustive stratum counts on P_n^k");
    cf_strata->add_option("n", strata_n, "number of edges")->required();
    cf_strata->add_option("k", strata_k, "uniformity")->required();

    int fg_n = 0, fg_k = 0;
    std::string fg_config, fg_dot;
    auto* cf_graph = cf->add_subcommand("firing-graph", "build the firing graph of a stable root");
    cf_graph->add_option("n", fg_n, "number of edges")->required();
    cf_graph->add_option("k", fg_k, "uniformity")->required();
    cf_graph->add_option("--config", fg_config,
                         "comma-separated chips for vertices 1..n(k-1); bank is vertex 0")
        ->required();
    cf_graph->add_option("--dot", fg_dot, "write the graph in DOT format to this file");

    std::string level = "quick";
    bool inject_fault = false;
    auto* st = app.add_subcommand("selftest", "run the built-in verification suite");
    st->add_option("--level", level, "quick | full")->check(CLI::IsMember({"quick", "full"}));
    st->add_flag("--inject-fault", inject_fault)->group("");  // negative-control hook

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (cp->parsed()) return run_charpoly(cp_args);

        if (cf_critical->parsed()) {
            std::cout << hcp::critical_configs_Kk(crit_k).size() << "\n";
            return 0;
        }
        if (cf_strata->parsed()) {
            auto counts = hcp::count_strata(strata_n, strata_k);
            std::cout << "[";
            for (size_t i = 0; i < counts.size(); ++i) {
                if (i) std::cout << ", ";
                std::cout << counts[i].get_str();
            }
            std::cout << "]\n";
            return 0;
        }
        if (cf_graph->parsed()) {
            auto path = hcp::make_hyperpath(fg_n, fg_k);
            std::vector<int> values = parse_config_list(fg_config);
            if (static_cast<int>(values.size()) != fg_n * (fg_k - 1)) {
                std::cerr << "error: --config needs " << fg_n * (fg_k - 1) << " values\n";
                return kExitUsage;
            }
            auto c0 = hcp::Configuration::omitted_bank(values, 0);
            auto fg = hcp::FiringGraph::build(path, c0);
            std::cout << "nodes: " << fg.nodes().size() << ", arrows: " << fg.arrows().size()
                      << ", stratum: " << fg.stratum() << "\n";
            auto report = fg.validate_structure();
            std::cout << "cycles of length " << fg_k << ": " << report.cycles_found
                      << (report.ok ? " (structure ok)" : " (STRUCTURE VIOLATION)") << "\n";
            if (!fg_dot.empty()) {
                std::ofstream os(fg_dot);
                if (!os) {
                    std::cerr << "error: cannot open '" << fg_dot << "'\n";
                    return kExitUsage;
                }
                os << fg.to_dot();
            }
            return 0;
        }
        if (st->parsed()) {
            hcp::AcceptanceOptions opts;
            opts.full = (level == "full");
            opts.inject_fault = inject_fault;
            auto results = hcp::run_acceptance(opts);
            std::cout << hcp::format_results(results);
            bool oracle_failed = false, not_polynomial = false, any_failed = false;
            for (const auto& r : results) {
                if (r.passed) continue;
                any_failed = true;
                if (r.index == 7) oracle_failed = true;
                if (r.index == 3) not_polynomial = true;
            }
            if (oracle_failed) return kExitOracleMismatch;
            if (not_polynomial) return kExitNotPolynomial;
            return any_failed ? 1 : 0;
        }
    } catch (const hcp::NotPolynomialError& e) {
        std::cerr << "error: assembly is not a polynomial: " << e.what() << "\n";
        return kExitNotPolynomial;
    } catch (const std::length_error& e) {
        std::cerr << "error: enumeration guard: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
