#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cubic/canonical.hpp"
#include "cubic/coloring.hpp"
#include "cubic/counting.hpp"
#include "cubic/error.hpp"
#include "cubic/families.hpp"
#include "cubic/generate.hpp"
#include "cubic/io.hpp"
#include "cubic/report.hpp"
#include "cubic/sequences.hpp"
#include "cubic/verify.hpp"

namespace cubic::cli {

constexpr const char* kVersion = "1.0.0";

namespace detail {

using nlohmann::json;

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::MalformedInput, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::MalformedInput, "cannot write " + path);
    out << content;
}

inline std::vector<Graph> read_graphs(const std::string& path, const std::string& format) {
    std::string content = read_file(path);
    std::vector<Graph> graphs;
    if (format == "edges") {
        graphs.push_back(decode_edge_list(content));
        return graphs;
    }
    std::istringstream lines(content);
    std::string line;
    while (std::getline(lines, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        graphs.push_back(decode_graph6(line));
    }
    if (graphs.empty()) fail(ErrorKind::MalformedInput, "no graphs in " + path);
    return graphs;
}

inline int default_jobs() {
    if (const char* env = std::getenv("CUBIC_CENSUS_JOBS")) {
        int jobs = std::atoi(env);
        if (jobs >= 1) return jobs;
    }
    return 1;
}

inline json count_json(const std::optional<i128>& value, const char* algorithm) {
    if (!value) return nullptr;
    return json{{"value", to_string(*value)}, {"algorithm", algorithm}};
}

inline json bound_json(const std::optional<BoundCheck>& bound) {
    if (!bound) return nullptr;
    return json{{"lhs", to_string(bound->lhs)},
                {"rhs", to_string(bound->rhs)},
                {"holds", bound->holds},
                {"equality", bound->equality}};
}

inline json report_document(const std::string& command, json params, json rows, long long checked,
                            long long failed) {
    return json{{"version", kVersion},
                {"command", command},
                {"params", std::move(params)},
                {"rows", std::move(rows)},
                {"summary",
                 {{"checked", checked}, {"passed", checked - failed}, {"failed", failed}}}};
}

inline int run_count(const std::string& in, const std::string& format, const std::string& what,
                     bool as_json, std::ostream& out) {
    std::vector<Graph> graphs = read_graphs(in, format);
    json rows = json::array();
    long long failed = 0;
    for (const Graph& g : graphs) {
        CountReport report = count_report(g);
        bool bounds_ok = (!report.bound_6_pow || report.bound_6_pow->holds) &&
                         (!report.bound_m_n || report.bound_m_n->holds);
        if (!bounds_ok) ++failed;
        if (as_json) {
            rows.push_back(json{{"graph", encode_graph6(g)},
                                {"canonical", report.canonical_g6},
                                {"counts",
                                 {{"pm", count_json(report.pm_count, "matching-backtrack-memo")},
                                  {"two_factors", count_json(report.two_factor_count, "edge-backtrack")},
                                  {"cycles", count_json(report.cycle_count, "cycle-space-gray")},
                                  {"coloring_formula",
                                   count_json(report.coloring_formula_count, "gray-coloring-sum")}}},
                                {"bounds",
                                 {{"pm_cubed_le_6_pow_n", bound_json(report.bound_6_pow)},
                                  {"pm_le_m_n", bound_json(report.bound_m_n)}}}});
            continue;
        }
        auto print_one = [&](const std::optional<i128>& value, const char* label) {
            if (what != "all") {
                if (!value) fail(ErrorKind::PreconditionViolated, std::string(label) + " not applicable");
                out << to_string(*value) << '\n';
            } else if (value) {
                out << label << ' ' << to_string(*value) << '\n';
            }
        };
        if (what == "pm") print_one(report.pm_count, "pm");
        else if (what == "2f") print_one(report.two_factor_count, "2f");
        else if (what == "cycles") print_one(report.cycle_count, "cycles");
        else if (what == "formula") print_one(report.coloring_formula_count, "formula");
        else {
            print_one(report.pm_count, "pm");
            print_one(report.two_factor_count, "2f");
            print_one(report.cycle_count, "cycles");
            print_one(report.coloring_formula_count, "formula");
        }
    }
    if (as_json) {
        json doc = report_document("count", json{{"in", in}, {"format", format}, {"what", what}},
                                   std::move(rows), static_cast<long long>(graphs.size()), failed);
        out << doc.dump(2) << '\n';
    }
    return failed > 0 ? 1 : 0;
}

inline int run_family(const std::string& name, std::optional<int> parameter, const std::string& out_path,
                      const std::string& format, std::ostream& out) {
    FamilySpec spec{};
    bool needs_parameter = true;
    if (name == "Mn") spec.kind = FamilyKind::Mn;
    else if (name == "MCk") spec.kind = FamilyKind::MCk;
    else if (name == "MOEBIUS") spec.kind = FamilyKind::Moebius;
    else if (name == "PRISM") spec.kind = FamilyKind::Prism;
    else {
        needs_parameter = false;
        if (name == "K4") spec.kind = FamilyKind::K4;
        else if (name == "K33") spec.kind = FamilyKind::K33;
        else if (name == "CUBE") spec.kind = FamilyKind::Cube;
        else if (name == "PETERSEN") spec.kind = FamilyKind::Petersen;
        else fail(ErrorKind::ParameterOutOfRange, "unknown family " + name);
    }
    if (needs_parameter) {
        if (!parameter) fail(ErrorKind::ParameterOutOfRange, name + " requires --n");
        spec.parameter = *parameter;
    }
    Graph g = named_graph(spec);
    write_file(out_path, format == "edges" ? encode_edge_list(g) : encode_graph6(g) + "\n");
    out << "wrote " << out_path << ": " << g.num_vertices << " vertices, " << g.num_edges()
        << " edges\n";
    return 0;
}

inline int run_search(int vertices, bool bipartite, int jobs, const std::string& report_path,
                      std::ostream& out) {
    std::vector<Graph> census = generate_connected_cubic(vertices, bipartite, jobs);
    std::vector<CensusRecord> records(census.size());
    cubic::detail::run_indexed(jobs, census.size(), [&](std::size_t i) {
        records[i].canon = canonical_form(census[i]);
        records[i].num_vertices = census[i].num_vertices;
        records[i].bipartite = classify(census[i]).is_bipartite;
        records[i].report.canonical_g6 = records[i].canon.bytes;
        records[i].report.pm_count = count_perfect_matchings(census[i]);
    });
    i128 max_pm = 0;
    for (const auto& r : records) max_pm = std::max(max_pm, *r.report.pm_count);
    for (auto& r : records) r.extremal = *r.report.pm_count == max_pm;

    json rows = json::array();
    for (const CensusRecord& r : records) {
        rows.push_back(json{{"g6", r.canon.bytes},
                            {"vertices", r.num_vertices},
                            {"bipartite", r.bipartite},
                            {"pm", json{{"value", to_string(*r.report.pm_count)},
                                        {"algorithm", "matching-backtrack-memo"}}},
                            {"extremal", r.extremal}});
    }
    json doc = report_document("search",
                               json{{"vertices", vertices}, {"bipartite", bipartite}},
                               std::move(rows), static_cast<long long>(census.size()), 0);
    write_file(report_path, doc.dump(2) + "\n");
    out << census.size() << " isomorphism classes on " << vertices << " vertices"
        << (bipartite ? " (bipartite only)" : "") << "; max pm = " << to_string(max_pm) << '\n';
    return 0;
}

inline int run_verify(const std::string& suite, std::optional<int> max_n, std::ostream& out) {
    int jobs = default_jobs();
    TheoremSummary summary;
    if (suite == "aa") summary = verify_aa(max_n.value_or(8), jobs);
    else if (suite == "bb") summary = verify_bb(max_n.value_or(6), jobs);
    else if (suite == "af") summary = verify_af(max_n.value_or(8), jobs);
    else if (suite == "lemma1") summary = verify_lemma1(max_n.value_or(40));
    else if (suite == "cc") summary = verify_cc(max_n.value_or(14), jobs);
    else fail(ErrorKind::ParameterOutOfRange, "unknown suite " + suite);

    long long checked = 0, failed = 0;
    for (const auto& row : summary.rows) {
        out << (row.failed == 0 ? "[PASS] " : "[FAIL] ") << row.name << ": checked=" << row.checked
            << " failed=" << row.failed << '\n';
        for (const auto& message : row.failures) out << "       " << message << '\n';
        checked += row.checked;
        failed += row.failed;
    }
    out << "summary: checked=" << checked << " passed=" << (checked - failed)
        << " failed=" << failed << '\n';
    return failed > 0 ? 1 : 0;
}

inline int run_table(int max_r, bool csv, std::ostream& out) {
    if (max_r < 4) fail(ErrorKind::ParameterOutOfRange, "--max-r must be at least 4");
    SequenceTable psi = psi_table(max_r);
    if (csv) {
        out << "r,psi_lower_bound,two_pow_r_minus_1,aldred_thomassen_bound\n";
        for (int r = psi.first_index; r <= psi.last_index(); ++r)
            out << r << ',' << to_string(psi.at(r)) << ',' << to_string(ipow(2, r - 1)) << ','
                << to_string(15 * ipow(2, r - 4)) << '\n';
        return 0;
    }
    out << "r psi_lower_bound 2^(r-1) (15/16)*2^r\n";
    for (int r = psi.first_index; r <= psi.last_index(); ++r)
        out << r << ' ' << to_string(psi.at(r)) << ' ' << to_string(ipow(2, r - 1)) << ' '
            << to_string(15 * ipow(2, r - 4)) << '\n';
    return 0;
}

}  // namespace detail

/// Entry point shared by the binary and the tests. Exit codes: 0 success and
/// all assertions passing, 1 verification failure, 2 usage or input error.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact counting and extremal verification for cubic graphs"};
    app.require_subcommand(1);

    auto* count = app.add_subcommand("count", "count matchings, 2-factors, cycles on input graphs");
    std::string count_in, count_format = "g6", count_what;
    bool count_json_flag = false;
    count->add_option("--in", count_in, "input file")->required();
    count->add_option("--format", count_format)->check(CLI::IsMember({"g6", "edges"}));
    count->add_option("--what", count_what)->required()
        ->check(CLI::IsMember({"pm", "2f", "cycles", "formula", "all"}));
    count->add_flag("--json", count_json_flag, "emit a JSON report document");

    auto* family = app.add_subcommand("family", "write a named family member to a file");
    std::string family_name, family_out, family_format = "g6";
    int family_n = 0;
    bool family_n_set = false;
    family->add_option("--name", family_name)->required()
        ->check(CLI::IsMember({"Mn", "MCk", "K4", "K33", "CUBE", "MOEBIUS", "PRISM", "PETERSEN"}));
    family->add_option("--n", family_n)->each([&](const std::string&) { family_n_set = true; });
    family->add_option("--out", family_out, "output file")->required();
    family->add_option("--format", family_format)->check(CLI::IsMember({"g6", "edges"}));

    auto* search = app.add_subcommand("search", "isomorphism-free census of connected cubic graphs");
    int search_vertices = 0, search_jobs = detail::default_jobs();
    bool search_bipartite = false;
    std::string search_report;
    search->add_option("--vertices", search_vertices)->required();
    search->add_flag("--bipartite", search_bipartite);
    search->add_option("--jobs", search_jobs)->check(CLI::PositiveNumber);
    search->add_option("--report", search_report, "JSON report path")->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string verify_suite;
    int verify_max_n = -1;
    verify->add_option("--suite", verify_suite)->required()
        ->check(CLI::IsMember({"aa", "bb", "af", "lemma1", "cc"}));
    verify->add_option("--max-n", verify_max_n);

    auto* table = app.add_subcommand("table", "print the psi lower-bound table");
    bool table_psi = false, table_csv = false;
    int table_max_r = 0;
    table->add_flag("--psi", table_psi);
    table->add_option("--max-r", table_max_r)->required();
    table->add_flag("--csv", table_csv);

    std::vector<const char*> argv;
    argv.push_back("cubic");
    for (const auto& arg : args) argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (count->parsed())
            return detail::run_count(count_in, count_format, count_what, count_json_flag, out);
        if (family->parsed())
            return detail::run_family(family_name,
                                      family_n_set ? std::optional<int>(family_n) : std::nullopt,
                                      family_out, family_format, out);
        if (search->parsed())
            return detail::run_search(search_vertices, search_bipartite, search_jobs, search_report, out);
        if (verify->parsed())
            return detail::run_verify(verify_suite,
                                      verify_max_n >= 0 ? std::optional<int>(verify_max_n) : std::nullopt,
                                      out);
        if (table->parsed()) {
            if (!table_psi) fail(ErrorKind::ParameterOutOfRange, "table requires --psi");
            return detail::run_table(table_max_r, table_csv, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace cubic::cli
