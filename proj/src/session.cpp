#include "roughdxl/session.hpp"

#include <fstream>
#include <sstream>

#include "roughdxl/parser.hpp"
#include "roughdxl/transform.hpp"

namespace roughdxl {

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoadError(path.string() + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> words(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

constexpr std::string_view kHelp =
    ":load <file>           add the rules of a program file\n"
    ":table <file> <pred>   add the facts of a decision table as <pred>\n"
    ":model                 print the least model, one literal per line\n"
    ":relations             list predicates with region sizes\n"
    ":quit                  leave\n"
    "anything else is read as a rough query, e.g. lower(p(X)), boundary(p(X)), p(a)?\n";

}  // namespace

void Session::invalidate() noexcept {
    db_.reset();
    store_.reset();
}

void Session::load_program_text(std::string_view text) {
    Program parsed = parse_program(text);
    program_.merge(parsed);
    invalidate();
}

void Session::load_program_file(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    try {
        load_program_text(text);
    } catch (const ParseError& e) {
        throw LoadError(path.string() + ":" + e.what());
    } catch (const ProgramError& e) {
        throw LoadError(path.string() + ": " + e.what());
    }
}

void Session::add_table(const DecisionTable& table) {
    const std::size_t arity = table.attributes.size();
    if (auto it = program_.signature().find(table.predicate); it != program_.signature().end() && it->second != arity)
        throw ProgramError(ProgramError::Kind::arity_conflict,
                           "table predicate '" + table.predicate + "' has arity " + std::to_string(arity) +
                               " but the program uses arity " + std::to_string(it->second));
    if (auto it = declared_.find(table.predicate); it != declared_.end() && it->second != arity)
        throw ProgramError(ProgramError::Kind::arity_conflict,
                           "table predicate '" + table.predicate + "' has arity " + std::to_string(arity) +
                               " but an earlier table declared arity " + std::to_string(it->second));
    program_.merge(to_program(table));
    declared_.emplace(table.predicate, arity);
    invalidate();
}

void Session::load_table(const std::filesystem::path& path, const std::string& predicate) {
    try {
        add_table(roughdxl::load_table(path, predicate));
    } catch (const IngestError& e) {
        throw LoadError(path.string() + ": " + e.what());
    } catch (const ProgramError& e) {
        throw LoadError(path.string() + ": " + e.what());
    }
}

Signature Session::signature() const {
    Signature out = program_.signature();
    out.insert(declared_.begin(), declared_.end());
    return out;
}

void Session::materialize() {
    if (db_) return;
    FactStore store = least_fact_store(to_definite(program_));
    RoughDatabase db = build_database(to_dxl_model(store.to_model()), signature());
    store_ = std::move(store);
    db_ = std::move(db);
    ++materializations_;
}

const RoughDatabase& Session::database() {
    materialize();
    return *db_;
}

const FactStore& Session::fact_store() {
    materialize();
    return *store_;
}

Answer Session::query(std::string_view text) {
    const RoughQuery q = parse_query(text);
    return answer(database(), q);
}

Session::StepResult Session::step(std::string_view raw) {
    StepResult result;
    const std::string_view line = trim(raw);
    if (line.empty()) return result;

    try {
        if (line.front() != ':') {
            result.output = render(query(line)) + "\n";
            return result;
        }
        const auto args = words(line);
        const std::string& cmd = args.front();
        if (cmd == ":quit" || cmd == ":q") {
            result.quit = true;
        } else if (cmd == ":help") {
            result.output = std::string(kHelp);
        } else if (cmd == ":load") {
            if (args.size() != 2) throw std::invalid_argument("usage: :load <file>");
            load_program_file(args[1]);
        } else if (cmd == ":table") {
            if (args.size() != 3) throw std::invalid_argument("usage: :table <file> <predicate>");
            load_table(args[1], args[2]);
        } else if (cmd == ":model") {
            result.output = dump_regions(database());
        } else if (cmd == ":relations") {
            result.output = summarize_relations(database());
        } else {
            throw std::invalid_argument("unknown command " + cmd + " (try :help)");
        }
    } catch (const std::exception& e) {
        result.output.clear();
        result.diagnostic = std::string("error: ") + e.what() + "\n";
    }
    return result;
}

}  // namespace roughdxl
