#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "roughdxl/parser.hpp"
#include "roughdxl/session.hpp"
#include "roughdxl/transform.hpp"

namespace roughdxl::cli {

namespace {

constexpr int kOk = 0;
constexpr int kLoadError = 1;
constexpr int kQueryError = 2;

void repl(Session& session, std::istream& in, std::ostream& out, std::ostream& err, bool interactive) {
    std::string line;
    while (true) {
        if (interactive) out << "?- " << std::flush;
        if (!std::getline(in, line)) break;
        if (line.starts_with(":export")) {
            out << export_definite(session.program());
            continue;
        }
        auto result = session.step(line);
        out << result.output;
        err << result.diagnostic;
        if (result.quit) break;
    }
    if (interactive) out << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err,
        bool interactive) {
    CLI::App app{"Rough relations defined by extended logic programs: load programs and decision tables, "
                 "then ask rough queries."};
    app.name("roughdxl");

    std::vector<std::string> programs;
    std::vector<std::string> tables;
    std::vector<std::string> queries;
    bool export_flag = false;
    auto* program_opt = app.add_option("--program,-p", programs, "DXL program file (repeatable)");
    auto* table_opt = app.add_option("--table,-t", tables, "decision table as <file.csv>:<predicate> (repeatable)");
    auto* query_opt = app.add_option("--query,-q", queries, "rough query (repeatable); omit to start the REPL");
    app.add_flag("--export-definite", export_flag,
                 "print the renamed definite program (negations spelled p_neg) after loading");
    for (auto* opt : {program_opt, table_opt, query_opt}) opt->take_all()->allow_extra_args(false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    Session session;
    std::map<const CLI::Option*, std::size_t> seen;
    int status = kOk;

    for (const CLI::Option* opt : app.parse_order()) {
        const std::size_t k = seen[opt]++;
        if (opt == program_opt) {
            try {
                session.load_program_file(programs.at(k));
            } catch (const std::exception& e) {
                err << "error: " << e.what() << "\n";
                return kLoadError;
            }
        } else if (opt == table_opt) {
            const std::string& spec = tables.at(k);
            const auto colon = spec.rfind(':');
            if (colon == std::string::npos || colon == 0 || colon + 1 == spec.size()) {
                err << "error: --table expects <file>:<predicate>, got '" << spec << "'\n";
                return kLoadError;
            }
            try {
                session.load_table(spec.substr(0, colon), spec.substr(colon + 1));
            } catch (const std::exception& e) {
                err << "error: " << e.what() << "\n";
                return kLoadError;
            }
        } else if (opt == query_opt) {
            const std::string& q = queries.at(k);
            try {
                out << render(session.query(q)) << "\n";
            } catch (const ParseError& e) {
                err << "error: query '" << q << "': " << e.what() << "\n";
                status = kQueryError;
            } catch (const std::exception& e) {
                err << "error: query '" << q << "': " << e.what() << "\n";
                status = kQueryError;
            }
        }
    }

    if (export_flag) out << export_definite(session.program());
    if (queries.empty() && !export_flag) repl(session, in, out, err, interactive);
    return status;
}

}  // namespace roughdxl::cli
