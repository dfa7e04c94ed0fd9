#include "cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <ostream>
#include <thread>

#include "gqpieri/enumerate.hpp"
#include "gqpieri/hecke.hpp"
#include "gqpieri/pieri.hpp"
#include "gqpieri/shapes.hpp"
#include "gqpieri/tableaux.hpp"
#include "gqpieri/verify.hpp"

namespace gqpieri::cli {

namespace {

int default_jobs() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void print_terms(std::ostream& out, const std::vector<PieriTerm>& terms,
                 bool machine) {
    if (machine) {
        for (const PieriTerm& t : terms)
            out << "mu=" << t.mu.str() << " coeff=" << t.coeff
                << " beta=" << t.beta << "\n";
        return;
    }
    std::size_t width = 2;
    for (const PieriTerm& t : terms) width = std::max(width, t.mu.str().size());
    out << std::left << std::setw(static_cast<int>(width) + 2) << "mu"
        << std::setw(7) << "coeff" << "beta\n";
    for (const PieriTerm& t : terms)
        out << std::left << std::setw(static_cast<int>(width) + 2) << t.mu.str()
            << std::setw(7) << t.coeff << t.beta << "\n";
}

int run_checked(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"strict decomposition tableaux and the GQ Pieri rule"};
    app.require_subcommand(1);

    std::string lambda_text, mu_text, window_text, tableau_text;
    std::string format = "ascii";
    int p = 0, q = 0, length = 0, a = 0, b = 0;
    int max_cells = -1;
    int max_part = 5, max_len = 3, max_p = 5;
    std::size_t limit = 1000;
    int jobs = default_jobs();
    bool machine = false, fail_fast = false;

    CLI::App* cmd_pieri = app.add_subcommand("pieri", "expand GQ_lambda * GQ_p");
    cmd_pieri->add_option("--lambda", lambda_text, "strict partition")->required();
    cmd_pieri->add_option("--p", p, "row length p")->required();
    cmd_pieri->add_flag("--machine", machine, "machine-readable records");

    CLI::App* cmd_count =
        app.add_subcommand("sdt-count", "count SDT of shape mu for w(lambda,1,p)");
    cmd_count->add_option("--mu", mu_text, "shape")->required();
    cmd_count->add_option("--lambda", lambda_text, "inner strict partition")->required();
    cmd_count->add_option("--p", p, "row length p")->required();
    cmd_count->add_option("--jobs", jobs, "worker count");

    CLI::App* cmd_list =
        app.add_subcommand("sdt-list", "list SDT of shape mu for w(lambda,1,p)");
    cmd_list->add_option("--mu", mu_text, "shape")->required();
    cmd_list->add_option("--lambda", lambda_text, "inner strict partition")->required();
    cmd_list->add_option("--p", p, "row length p")->required();
    cmd_list->add_option("--format", format, "ascii or latex")
        ->check(CLI::IsMember({"ascii", "latex"}));
    cmd_list->add_option("--limit", limit, "retention cap");
    cmd_list->add_flag("--machine", machine, "one tableau per line, no rendering");

    CLI::App* cmd_words =
        app.add_subcommand("hecke-words", "all Hecke words of a given length");
    cmd_words->add_option("--window", window_text, "window notation, e.g. -2,3,1")
        ->required();
    cmd_words->add_option("--length", length, "word length")->required();

    CLI::App* cmd_trap = app.add_subcommand(
        "trapezoid", "SDT counts for the trapezoid product GQ_lambda * GQ_tau(a,b)");
    cmd_trap->add_option("--lambda", lambda_text, "strict partition")->required();
    cmd_trap->add_option("--a", a, "trapezoid height")->required();
    cmd_trap->add_option("--b", b, "trapezoid base parameter")->required();
    cmd_trap->add_option("--max-cells", max_cells, "largest |mu| scanned");
    cmd_trap->add_flag("--machine", machine, "machine-readable records");

    CLI::App* cmd_verify = app.add_subcommand(
        "verify-theorem", "enumeration against the coefficient recursion");
    cmd_verify->add_option("--max-part", max_part, "largest part of lambda");
    cmd_verify->add_option("--max-len", max_len, "most parts of lambda");
    cmd_verify->add_option("--max-p", max_p, "largest p");
    cmd_verify->add_option("--jobs", jobs, "worker count");
    cmd_verify->add_flag("--fail-fast", fail_fast, "stop at the first mismatch");

    CLI::App* cmd_comm = app.add_subcommand(
        "verify-commutativity", "two-step expansions commute in p and q");
    cmd_comm->add_option("--lambda", lambda_text, "single shape to check");
    cmd_comm->add_option("--p", p, "first row length");
    cmd_comm->add_option("--q", q, "second row length");
    cmd_comm->add_option("--max-part", max_part, "sweep bound when no shape given");
    cmd_comm->add_option("--max-len", max_len, "sweep bound when no shape given");
    cmd_comm->add_option("--max-p", max_p, "sweep bound when no shape given");

    CLI::App* cmd_render = app.add_subcommand("render", "pretty-print a tableau");
    cmd_render->add_option("--tableau", tableau_text, "rows like \"2,0;1\"")
        ->required();
    cmd_render->add_option("--format", format, "ascii or latex")
        ->check(CLI::IsMember({"ascii", "latex"}));

    std::vector<const char*> argv;
    argv.push_back("gqpieri");
    for (const std::string& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    RenderFormat render_format =
        format == "latex" ? RenderFormat::Latex : RenderFormat::Ascii;

    if (cmd_pieri->parsed()) {
        PieriExpansion expansion =
            pieri_expansion(StrictPartition::parse(lambda_text), p);
        print_terms(out, expansion.terms, machine);
        return 0;
    }

    if (cmd_count->parsed()) {
        EnumerateOptions options;
        options.jobs = jobs;
        SdtQuery query{StrictPartition::parse(mu_text),
                       pieri_target(StrictPartition::parse(lambda_text), p)};
        out << enumerate_sdt(query, options).count << "\n";
        return 0;
    }

    if (cmd_list->parsed()) {
        EnumerateOptions options;
        options.keep_tableaux = true;
        options.limit = limit;
        SdtQuery query{StrictPartition::parse(mu_text),
                       pieri_target(StrictPartition::parse(lambda_text), p)};
        EnumerationReport report = enumerate_sdt(query, options);
        for (const ShiftedTableau& t : *report.tableaux) {
            if (machine)
                out << t.str() << "\n";
            else
                out << render(t, render_format) << "\n";
        }
        out << "count=" << report.count;
        if (report.truncated) out << " truncated=1";
        out << "\n";
        return 0;
    }

    if (cmd_words->parsed()) {
        SignedPermutation w = SignedPermutation::parse(window_text);
        for (const HeckeWord& word : hecke_words(w, length))
            out << word_str(word) << "\n";
        return 0;
    }

    if (cmd_trap->parsed()) {
        ConjectureTable table =
            conjecture_table(StrictPartition::parse(lambda_text), a, b, max_cells);
        std::vector<PieriTerm> terms;
        for (const ConjectureRow& row : table.rows)
            terms.push_back({row.mu, row.count, row.beta});
        print_terms(out, terms, machine);
        if (table.matches_pieri.has_value() && !*table.matches_pieri) {
            err << "trapezoid table disagrees with the Pieri expansion\n";
            return 1;
        }
        return 0;
    }

    if (cmd_verify->parsed()) {
        SweepConfig config{max_part, max_len, max_p, jobs, fail_fast};
        VerificationReport report = check_theorem(config);
        out << report.str();
        return report.passed() ? 0 : 1;
    }

    if (cmd_comm->parsed()) {
        bool pass = true;
        long long checked = 0;
        if (!lambda_text.empty()) {
            if (p < 1 || q < 1) {
                err << "verify-commutativity needs --p and --q with --lambda\n";
                return 2;
            }
            pass = check_commutativity(StrictPartition::parse(lambda_text), p, q);
            if (!pass)
                out << "lambda=" << lambda_text << " p=" << p << " q=" << q
                    << " commutes=false\n";
            ++checked;
        } else {
            for (const StrictPartition& lambda :
                 strict_partitions_in_box(max_part, max_len)) {
                for (int pp = 1; pp <= max_p; ++pp)
                    for (int qq = pp; qq <= max_p; ++qq) {
                        ++checked;
                        if (!check_commutativity(lambda, pp, qq)) {
                            pass = false;
                            out << "lambda=" << lambda.str() << " p=" << pp
                                << " q=" << qq << " commutes=false\n";
                        }
                    }
            }
        }
        out << "checked=" << checked << " " << (pass ? "ok" : "failed") << "\n";
        return pass ? 0 : 1;
    }

    if (cmd_render->parsed()) {
        out << render(ShiftedTableau::parse(tableau_text), render_format);
        return 0;
    }

    err << "no command\n";
    return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_checked(args, out, err);
    } catch (const InvalidArgs& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace gqpieri::cli
