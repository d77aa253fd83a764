#include "evchar/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "evchar/acceptance.hpp"
#include "evchar/characters.hpp"
#include "evchar/ev_sets.hpp"
#include "evchar/identities.hpp"
#include "evchar/laurent.hpp"
#include "evchar/partition.hpp"
#include "evchar/paths.hpp"
#include "evchar/qseries.hpp"
#include "evchar/symfunc.hpp"

namespace evchar {

namespace {

using json = nlohmann::ordered_json;

struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void guard_size(const RunConfig& cfg, int n, const std::string& what) {
    if (n > cfg.max_n)
        throw GuardError(what + " = " + std::to_string(n) + " exceeds the size guard max_n = " +
                         std::to_string(cfg.max_n) + " (raise with --max-n)");
}

// Exact values can exceed 2^53, so reports carry them as decimal strings.
json num(const BigInt& v) { return v.str(); }
json num(const BigRat& v) { return to_string(v); }

json partition_list(const std::vector<Partition>& ps) {
    json arr = json::array();
    for (const Partition& p : ps) arr.push_back(p.str());
    return arr;
}

json report_json(const IdentityReport& r, json parameters) {
    return json{{"identity", r.name},
                {"parameters", std::move(parameters)},
                {"lhs", num(r.lhs)},
                {"rhs", num(r.rhs)},
                {"difference", num(r.difference)},
                {"holds", r.holds}};
}

void emit_report(const RunConfig& cfg, std::ostream& out, const IdentityReport& r,
                 json parameters) {
    if (cfg.output == "text") {
        out << r.name << " [" << r.params << "]\n"
            << "  lhs        = " << to_string(r.lhs) << "\n"
            << "  rhs        = " << to_string(r.rhs) << "\n"
            << "  difference = " << to_string(r.difference) << "\n"
            << "  holds      = " << (r.holds ? "true" : "false") << "\n";
    } else {
        out << report_json(r, std::move(parameters)).dump(2) << "\n";
    }
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

void emit_table(const RunConfig& cfg, std::ostream& out, const TableReport& t) {
    if (cfg.output == "csv") {
        out << csv_quote("mu \\ lambda~");
        for (const Partition& col : t.columns) out << ',' << csv_quote(col.str());
        out << '\n';
        for (size_t r = 0; r < t.rows.size(); ++r) {
            out << csv_quote(t.rows[r].str());
            for (const BigInt& v : t.cells[r]) out << ',' << v;
            out << '\n';
        }
        auto line = [&](const std::string& label, const std::vector<BigInt>& vals) {
            out << csv_quote(label);
            for (const BigInt& v : vals) out << ',' << v;
            out << '\n';
        };
        line("Multiplicity", t.multiplicities);
        line("Column Sum", t.column_sums);
        line("Weight", t.weights);
        line("Total", t.totals);
        out << csv_quote("Grand Total") << ',' << t.grand_total << '\n';
        line("Row (" + t.rhs_row.str() + ")", t.rhs_cells);
        out << csv_quote("Unsigned Row Total") << ',' << t.rhs_total << '\n';
        return;
    }
    if (cfg.output == "text") {
        auto cell = [&](const std::string& s) { out << std::setw(12) << s; };
        cell("mu \\ l~");
        for (const Partition& col : t.columns) cell("[" + col.str() + "]");
        out << '\n';
        for (size_t r = 0; r < t.rows.size(); ++r) {
            cell("[" + t.rows[r].str() + "]");
            for (const BigInt& v : t.cells[r]) cell(v.str());
            out << '\n';
        }
        auto row = [&](const std::string& label, const std::vector<BigInt>& vals) {
            cell(label);
            for (const BigInt& v : vals) cell(v.str());
            out << '\n';
        };
        row("ColumnSum", t.column_sums);
        row("Weight", t.weights);
        row("Total", t.totals);
        out << "Grand total " << t.grand_total << "; unsigned (" << t.rhs_row.str()
            << ")-row total " << t.rhs_total << "\n";
        return;
    }
    json cells = json::array();
    for (size_t r = 0; r < t.rows.size(); ++r) {
        json row = json::array();
        for (const BigInt& v : t.cells[r]) row.push_back(num(v));
        cells.push_back(std::move(row));
    }
    json mult = json::array(), sums = json::array(), weights = json::array(),
         totals = json::array(), rhs_cells = json::array();
    for (const BigInt& v : t.multiplicities) mult.push_back(num(v));
    for (const BigInt& v : t.column_sums) sums.push_back(num(v));
    for (const BigInt& v : t.weights) weights.push_back(num(v));
    for (const BigInt& v : t.totals) totals.push_back(num(v));
    for (const BigInt& v : t.rhs_cells) rhs_cells.push_back(num(v));
    out << json{{"which", t.which},
                {"lambda", t.lambda.str()},
                {"rows", partition_list(t.rows)},
                {"columns", partition_list(t.columns)},
                {"multiplicities", mult},
                {"cells", cells},
                {"column_sums", sums},
                {"weights", weights},
                {"totals", totals},
                {"grand_total", num(t.grand_total)},
                {"rhs_row", t.rhs_row.str()},
                {"rhs_cells", rhs_cells},
                {"rhs_unsigned_total", num(t.rhs_total)}}
               .dump(2)
        << "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    if (const char* env = std::getenv("EVCHAR_CACHE")) cfg.cache_path = env;

    CLI::App app{"exact character sums over doubled-part multisets and even column sets"};
    app.require_subcommand(1);
    app.add_option("--max-n", cfg.max_n, "size guard for partition parameters")
        ->check(CLI::PositiveNumber);
    app.add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--cache", cfg.cache_path,
                   "character cache file (default: $EVCHAR_CACHE); loaded if present, "
                   "saved on exit");
    app.add_option("--output", cfg.output, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    std::string mu_text, lambda_text, path_text, tableau_text, mode = "all";
    int n = 0, N = 0, two_n = 0, which = 1, order = 0, all_n = 0, c_param = 1, d_param = 1;
    bool cols = false, enumerate = false;
    std::string level = "quick";

    auto* cmd_char = app.add_subcommand("char", "character value chi^mu_lambda");
    cmd_char->add_option("--mu", mu_text)->required();
    cmd_char->add_option("--lambda", lambda_text)->required();

    auto* cmd_ev = app.add_subcommand("ev", "doubled-part multiset of a partition");
    cmd_ev->add_option("--lambda", lambda_text)->required();

    auto* cmd_columns = app.add_subcommand("columns", "even-row or even-column sets");
    cmd_columns->add_option("--N", N)->required();
    cmd_columns->add_option("--two-n", two_n)->required();
    cmd_columns->add_flag("--cols", cols, "even columns instead of even rows");

    auto* cmd_table = app.add_subcommand("table", "reproduce a character table block");
    cmd_table->add_option("--which", which)->check(CLI::IsMember({1, 2}))->required();

    auto* cmd_strong = app.add_subcommand("verify-strong", "per-partition identity");
    cmd_strong->add_option("--lambda", lambda_text)->required();
    cmd_strong->add_option("--N", N)->required();

    auto* cmd_q1 = app.add_subcommand("verify-q1", "z-weighted aggregate identity");
    cmd_q1->add_option("--n", n)->required();
    cmd_q1->add_option("--N", N)->required();

    auto* cmd_n1 = app.add_subcommand("verify-n1", "single-column identity");
    auto* n1_lambda = cmd_n1->add_option("--lambda", lambda_text);
    auto* n1_all = cmd_n1->add_option("--all-n", all_n, "check every partition of n <= this");
    n1_lambda->excludes(n1_all);

    auto* cmd_closed = app.add_subcommand("closed-form", "aggregate single-column closed form");
    cmd_closed->add_option("--n", n)->required();

    auto* cmd_riordan = app.add_subcommand("riordan", "Riordan paths");
    cmd_riordan->add_option("--n", n)->required();
    cmd_riordan->add_flag("--enumerate", enumerate);

    auto* cmd_ballot = app.add_subcommand("ballot", "three-candidate ballot sequences");
    cmd_ballot->add_option("--n", n)->required();

    auto* cmd_bijection = app.add_subcommand("bijection", "Riordan path <-> tableau");
    auto* bij_path = cmd_bijection->add_option("--path", path_text, "steps over U,F,D");
    auto* bij_tab =
        cmd_bijection->add_option("--tableau", tableau_text, "JSON array of tableau rows");
    bij_path->excludes(bij_tab);

    auto* cmd_thm32 = app.add_subcommand("thm32", "signed power-sum identity in the m-basis");
    cmd_thm32->add_option("--lambda", lambda_text)->required();

    auto* cmd_acd = app.add_subcommand("acd", "single-column sum for lambda=(c^d)");
    cmd_acd->add_option("--c", c_param)->required();
    cmd_acd->add_option("--d", d_param)->required();
    cmd_acd->add_option("--mode", mode)->check(CLI::IsMember({"chars", "closed", "all"}));

    auto* cmd_bcd = app.add_subcommand("bcd", "three-row signed sum for lambda=(c^d)");
    cmd_bcd->add_option("--c", c_param)->required();
    cmd_bcd->add_option("--d", d_param)->required();
    cmd_bcd->add_option("--mode", mode)
        ->check(CLI::IsMember({"chars", "closed", "ct_intermediate", "all"}));

    auto* cmd_qseries = app.add_subcommand("qseries", "truncated q-series identity");
    cmd_qseries->add_option("--N", N)->required();
    cmd_qseries->add_option("--order", order)->required();

    auto* cmd_suite = app.add_subcommand("suite", "verification suite");
    cmd_suite->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));

    // global flags (--output, --workers, ...) may follow the subcommand
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("evchar");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    }

    CharEngine engine;
    if (!cfg.cache_path.empty()) {
        std::string warning;
        engine.load_cache(cfg.cache_path, &warning);
        if (!warning.empty()) err << "warning: " << warning << "\n";
    }
    auto save_cache = [&]() {
        if (!cfg.cache_path.empty()) engine.save_cache(cfg.cache_path);
    };

    if (cmd_char->parsed()) {
        Partition mu = parse_cli_partition(mu_text);
        Partition lambda = parse_cli_partition(lambda_text);
        guard_size(cfg, (mu.size() + 1) / 2, "|mu|/2");
        BigInt value = engine.chi(mu, lambda);
        if (cfg.output == "text")
            out << value << "\n";
        else
            out << json{{"mu", mu.str()}, {"lambda", lambda.str()}, {"value", num(value)}}.dump(2)
                << "\n";
        save_cache();
    } else if (cmd_ev->parsed()) {
        Partition lambda = parse_cli_partition(lambda_text);
        guard_size(cfg, lambda.size(), "|lambda|");
        WeightedPartitions w = ev(lambda);
        if (cfg.output == "text") {
            for (const auto& [p, mult] : w) out << "(" << p.str() << ") x " << mult << "\n";
        } else {
            json arr = json::array();
            for (const auto& [p, mult] : w)
                arr.push_back(json{{"partition", p.str()},
                                   {"multiplicity", mult.convert_to<long>()}});
            out << arr.dump(2) << "\n";
        }
    } else if (cmd_columns->parsed()) {
        guard_size(cfg, (two_n + 1) / 2, "two_n/2");
        std::vector<Partition> set = cols ? r_even_cols(N, two_n) : r_even_rows(N, two_n);
        if (cfg.output == "text") {
            for (const Partition& p : set) out << p.str() << "\n";
        } else {
            out << json{{"N", N},
                        {"two_n", two_n},
                        {"kind", cols ? "even_columns" : "even_rows"},
                        {"partitions", partition_list(set)}}
                       .dump(2)
                << "\n";
        }
    } else if (cmd_table->parsed()) {
        TableReport t = reproduce_table(engine, which, cfg.workers);
        emit_table(cfg, out, t);
        save_cache();
    } else if (cmd_strong->parsed()) {
        Partition lambda = parse_cli_partition(lambda_text);
        guard_size(cfg, lambda.size(), "|lambda|");
        IdentityReport r = strong_sides(engine, lambda, N, cfg.workers);
        emit_report(cfg, out, r, json{{"lambda", lambda.str()}, {"N", N}});
        save_cache();
    } else if (cmd_q1->parsed()) {
        guard_size(cfg, n, "n");
        IdentityReport r = q1_sides(engine, n, N, cfg.workers);
        emit_report(cfg, out, r, json{{"n", n}, {"N", N}});
        save_cache();
    } else if (cmd_n1->parsed()) {
        if (n1_lambda->count() == 0 && n1_all->count() == 0)
            throw CLI::ValidationError("verify-n1", "need --lambda or --all-n");
        if (n1_all->count()) {
            guard_size(cfg, all_n, "n");
            json reports = json::array();
            long checked = 0;
            bool all_hold = true;
            for (int m = 1; m <= all_n; ++m)
                for (const Partition& lambda : partitions_of(m)) {
                    IdentityReport r = conj_n1_check(engine, lambda, cfg.workers);
                    ++checked;
                    if (!r.holds) {
                        all_hold = false;
                        reports.push_back(report_json(r, json{{"lambda", lambda.str()}}));
                    }
                }
            if (cfg.output == "text")
                out << (all_hold ? "holds for all " + std::to_string(checked)
                                 : "FAILS for " + std::to_string(reports.size()) + " of " +
                                       std::to_string(checked))
                    << " partitions of n <= " << all_n << "\n";
            else
                out << json{{"max_n", all_n},
                            {"checked", checked},
                            {"all_hold", all_hold},
                            {"failures", reports}}
                           .dump(2)
                    << "\n";
        } else {
            Partition lambda = parse_cli_partition(lambda_text);
            guard_size(cfg, lambda.size(), "|lambda|");
            IdentityReport r = conj_n1_check(engine, lambda, cfg.workers);
            emit_report(cfg, out, r, json{{"lambda", lambda.str()}});
        }
        save_cache();
    } else if (cmd_closed->parsed()) {
        guard_size(cfg, n, "n");
        IdentityReport r = closed_form_sum(engine, n, cfg.workers);
        emit_report(cfg, out, r, json{{"n", n}});
        save_cache();
    } else if (cmd_riordan->parsed()) {
        guard_size(cfg, (n + 1) / 2, "n/2");
        std::vector<LatticePath> paths = riordan_enumerate(n);
        if (cfg.output == "text") {
            out << paths.size() << "\n";
            if (enumerate)
                for (const LatticePath& p : paths) out << p.steps << "\n";
        } else {
            json j{{"n", n}, {"count", paths.size()}};
            if (enumerate) {
                json arr = json::array();
                for (const LatticePath& p : paths) arr.push_back(p.steps);
                j["paths"] = arr;
            }
            out << j.dump(2) << "\n";
        }
    } else if (cmd_ballot->parsed()) {
        guard_size(cfg, (n + 1) / 2, "n/2");
        std::vector<BallotSequence> seqs = ballot_enumerate(n);
        long matching = 0;
        for (const auto& b : seqs)
            if (b.matching_parity()) ++matching;
        if (cfg.output == "text")
            out << seqs.size() << " sequences, " << matching << " with matching parity\n";
        else
            out << json{{"n", n},
                        {"total", seqs.size()},
                        {"matching_parity", matching}}
                       .dump(2)
                << "\n";
    } else if (cmd_bijection->parsed()) {
        if (bij_path->count() == 0 && bij_tab->count() == 0)
            throw CLI::ValidationError("bijection", "need --path or --tableau");
        StandardTableau t;
        LatticePath p;
        if (bij_path->count()) {
            p = LatticePath{path_text};
            t = riordan_to_tableau(p);
        } else {
            json rows = json::parse(tableau_text);
            for (const auto& row : rows) t.rows.push_back(row.get<std::vector<int>>());
            p = tableau_to_riordan(t);
        }
        json rows = json::array();
        for (const auto& row : t.rows) rows.push_back(row);
        if (cfg.output == "text") {
            out << p.steps << "\n" << rows.dump() << "\n";
        } else {
            out << json{{"path", p.steps}, {"tableau", rows}, {"shape", t.shape().str()}}.dump(2)
                << "\n";
        }
    } else if (cmd_thm32->parsed()) {
        Partition lambda = parse_cli_partition(lambda_text);
        guard_size(cfg, lambda.size(), "|lambda|");
        bool holds = ev_power_identity_holds(lambda);
        if (cfg.output == "text")
            out << (holds ? "true" : "false") << "\n";
        else
            out << json{{"lambda", lambda.str()}, {"holds", holds}}.dump(2) << "\n";
    } else if (cmd_acd->parsed() || cmd_bcd->parsed()) {
        const bool is_a = cmd_acd->parsed();
        if (c_param < 1 || d_param < 1)
            throw CLI::ValidationError("acd/bcd", "--c and --d must be >= 1");
        guard_size(cfg, c_param * d_param, "c*d");
        json j{{"c", c_param}, {"d", d_param}};
        auto one_mode = [&](SumMode m) {
            return is_a ? a_single_column(c_param, d_param, m, engine)
                        : b_three_row_sum(c_param, d_param, m, engine);
        };
        if (mode == "chars" || mode == "all") j["chars"] = num(one_mode(SumMode::kChars));
        if (mode == "closed" || (mode == "all" && (is_a || c_param > 1)))
            j["closed"] = num(one_mode(SumMode::kClosed));
        if (!is_a && c_param == 1 && mode == "all")
            j["closed_riordan_route"] = num((BigInt(1) << d_param) * riordan_count(d_param));
        if (!is_a && (mode == "ct_intermediate" || mode == "all"))
            j["ct_intermediate"] = num(one_mode(SumMode::kCtIntermediate));
        bool agree = true;
        std::string first;
        for (const auto& [key, value] : j.items())
            if (value.is_string()) {
                if (first.empty()) first = value.get<std::string>();
                else if (value.get<std::string>() != first) agree = false;
            }
        if (mode == "all") j["modes_agree"] = agree;
        if (cfg.output == "text") {
            for (const auto& [key, value] : j.items())
                out << key << " = " << (value.is_string() ? value.get<std::string>() : value.dump())
                    << "\n";
        } else {
            out << j.dump(2) << "\n";
        }
        save_cache();
    } else if (cmd_qseries->parsed()) {
        guard_size(cfg, order, "order");
        if (N < 1) throw CLI::ValidationError("qseries", "--N must be >= 1");
        auto [lhs, rhs] = conj_q_sides(engine, N, order, cfg.workers);
        json lc = json::array(), rc = json::array();
        for (int k = 0; k <= order; ++k) {
            lc.push_back(to_string(lhs.at(k)));
            rc.push_back(to_string(rhs.at(k)));
        }
        if (cfg.output == "text") {
            out << "lhs:";
            for (int k = 0; k <= order; ++k) out << " " << to_string(lhs.at(k));
            out << "\nrhs:";
            for (int k = 0; k <= order; ++k) out << " " << to_string(rhs.at(k));
            out << "\nequal: " << (lhs == rhs ? "true" : "false") << "\n";
        } else {
            out << json{{"N", N},
                        {"order", order},
                        {"lhs_coeffs", lc},
                        {"rhs_coeffs", rc},
                        {"equal", lhs == rhs}}
                       .dump(2)
                << "\n";
        }
        save_cache();
    } else if (cmd_suite->parsed()) {
        SuiteLevel sl = (level == "full") ? SuiteLevel::kFull : SuiteLevel::kQuick;
        bool all_passed = true;
        run_acceptance(engine, sl, cfg.workers, [&](const CriterionResult& r) {
            out << format_result_line(r) << "\n";
            all_passed = all_passed && r.passed;
        });
        out << (all_passed ? "suite: all criteria passed" : "suite: some criteria FAILED")
            << "\n";
        save_cache();
    }
    return kExitOk;
}

}  // namespace

Partition parse_cli_partition(const std::string& text) {
    if (text.find('^') == std::string::npos) return Partition::parse(text);
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t caret = tok.find('^');
        std::string base = tok.substr(0, caret);
        int repeat = 1;
        if (caret != std::string::npos) {
            std::string exp = tok.substr(caret + 1);
            if (exp.empty() || exp.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("bad exponent in partition text: " + tok);
            repeat = std::stoi(exp);
            if (repeat < 1 || repeat > 1000)
                throw std::invalid_argument("exponent out of range in partition text: " + tok);
        }
        if (base.empty() || base.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad part in partition text: " + tok);
        int value = std::stoi(base);
        if (value < 1) throw std::invalid_argument("partition parts must be positive");
        for (int i = 0; i < repeat; ++i) parts.push_back(value);
    }
    if (!std::is_sorted(parts.rbegin(), parts.rend()))
        throw std::invalid_argument("partition parts must be weakly decreasing");
    return Partition(std::move(parts));
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run(args, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const GuardError& e) {
        err << "guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace evchar
