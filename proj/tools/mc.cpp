// mc: command-line front end for the mcinv library.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcinv.hpp"

namespace {

using json = nlohmann::json;
using namespace mcinv;

constexpr int schema_version = 1;

enum ExitCode { ok = 0, property_failure = 1, undecided = 2, usage = 3 };

std::string word_text(const std::optional<Word>& w) { return !w || w->empty() ? std::string("e") : w->str(); }

std::vector<std::string> family_words(const RootSystem& rs, const Family& y)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < y.size(); ++i)
        out.push_back(y.word(i) ? word_text(y.word(i)) : word_text(reduced_word(rs, y[i])));
    return out;
}

json root_set_coords(const RootSystem& rs, const RootSet& s)
{
    json arr = json::array();
    s.for_each([&](int i) {
        json coords = json::array();
        for (const auto& c : rs.root(i).coords) coords.push_back(c.str());
        arr.push_back(coords);
    });
    return arr;
}

void emit_json(const json& j, const std::string& path)
{
    if (path.empty()) return;
    if (path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << "\n";
}

unsigned resolve_threads(unsigned flag)
{
    if (flag > 0) return flag;
    if (const char* env = std::getenv("MC_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

// ---- table ------------------------------------------------------------------

struct TableRow {
    TypeId type;
    int positive = 0;
    std::string mc;      // value or "≥ v"
    std::string source;  // theorem / search / embedded family
    int family_size = 0;
    std::optional<bool> verified;
    std::string note;
};

std::pair<std::string, std::string> known_value(const TypeId& t)
{
    const int n = t.rank;
    switch (t.family) {
    case 'A': return {std::to_string((n + 1) * (n + 1) / 4), "theorem"};
    case 'B':
    case 'C': return {std::to_string(n * (n - 1) / 2 + 1), "theorem"};
    case 'D': return {std::to_string(n * (n - 1) / 2), "theorem"};
    case 'E': return {">= " + std::to_string(n == 6 ? 16 : n == 7 ? 27 : 36), "embedded family"};
    case 'F': return {"6", "search"};
    case 'H': return n == 3 ? std::pair<std::string, std::string>{"5", "search"}
                            : std::pair<std::string, std::string>{">= 8", "embedded family"};
    default: return {"2", "theorem"};
    }
}

std::vector<TypeId> default_table_types()
{
    std::vector<TypeId> out;
    for (const char* s : {"A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2", "B3", "B4", "B5", "B6", "C3", "C4", "D4",
                          "D5", "D6", "E6", "E7", "E8", "F4", "G2", "H3", "H4", "I2:5", "I2:7", "I2:8"})
        out.push_back(TypeId::parse(s));
    return out;
}

int cmd_table(const std::string& types_arg, bool verify, const std::string& format, const std::string& json_path,
              double time_budget, unsigned threads)
{
    std::vector<TypeId> types;
    if (types_arg.empty()) {
        types = default_table_types();
    } else {
        std::stringstream ss(types_arg);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) types.push_back(TypeId::parse(item));
    }
    std::vector<TableRow> rows;
    bool all_ok = true;
    for (const auto& t : types) {
        const RootSystem rs(t);
        TableRow row;
        row.type = t;
        row.positive = rs.num_positive();
        std::tie(row.mc, row.source) = known_value(t);
        const Family y = y_family(rs);
        row.family_size = static_cast<int>(y.size());
        if (verify) {
            bool good = is_minimal_inversion_complete(rs, y) && y.size() == expected_family_size(t);
            if (row.source == "search") {
                SearchConfig cfg;
                cfg.time_budget = time_budget;
                cfg.threads = threads;
                const auto r = search_mc(rs, cfg);
                good = good && r.status == SearchStatus::exact && std::to_string(r.value) == row.mc;
                row.note = "search " + std::to_string(r.value) + " " + to_string(r.status);
            }
            row.verified = good;
            all_ok = all_ok && good;
        }
        rows.push_back(row);
    }

    json j;
    j["schema_version"] = schema_version;
    j["rows"] = json::array();
    for (const auto& r : rows) {
        json e{{"type", r.type.str()}, {"positive_roots", r.positive}, {"mc", r.mc}, {"source", r.source},
               {"family_size", r.family_size}};
        if (r.verified) e["verified"] = *r.verified;
        if (!r.note.empty()) e["note"] = r.note;
        j["rows"].push_back(e);
    }
    emit_json(j, json_path);
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "type,positive_roots,mc,source,family_size" << (verify ? ",verified" : "") << "\n";
        for (const auto& r : rows) {
            std::cout << r.type.str() << "," << r.positive << "," << r.mc << "," << r.source << "," << r.family_size;
            if (r.verified) std::cout << "," << (*r.verified ? "yes" : "no");
            std::cout << "\n";
        }
    } else {
        std::cout << std::left << std::setw(8) << "type" << std::setw(8) << "|D+|" << std::setw(10) << "MC"
                  << std::setw(18) << "source" << std::setw(6) << "|Y|" << (verify ? "verified" : "") << "\n";
        for (const auto& r : rows) {
            std::cout << std::left << std::setw(8) << r.type.str() << std::setw(8) << r.positive << std::setw(10)
                      << r.mc << std::setw(18) << r.source << std::setw(6) << r.family_size;
            if (r.verified) std::cout << (*r.verified ? "yes" : "NO");
            if (!r.note.empty()) std::cout << "  (" << r.note << ")";
            std::cout << "\n";
        }
    }
    return all_ok ? ok : property_failure;
}

// ---- verify -----------------------------------------------------------------

Family load_family(const RootSystem& rs, const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot read family file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    std::vector<Word> words;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        const json j = json::parse(text);
        if (!j.contains("witness_words")) throw Error("JSON family file needs a witness_words array");
        for (const auto& w : j["witness_words"]) {
            const std::string s = w.get<std::string>();
            words.push_back(s == "e" ? Word{} : parse_word(s));
        }
    } else {
        words = parse_word_list(text);
    }
    return family_from_words(rs, words, Provenance::loaded).family;
}

int cmd_verify(const std::string& type_arg, const std::string& family_arg, const std::string& format,
               const std::string& json_path)
{
    const RootSystem rs(TypeId::parse(type_arg));
    Family y;
    std::vector<std::size_t> nonreduced;
    bool paper = family_arg == "paper";
    if (paper) {
        auto wf = y_family_detailed(rs, FamilyId{rs.type(), 1});
        y = std::move(wf.family);
        nonreduced = wf.nonreduced;
    } else {
        y = load_family(rs, family_arg);
    }
    const bool complete = is_inversion_complete(rs, y);
    const bool minimal = is_minimal_inversion_complete(rs, y);
    const bool antichain = is_weak_antichain(y);
    const bool unique = minimal && essential_set_is_unique(rs, y);
    std::optional<ConditionsReport> cond;
    RootSet ess(rs.num_positive());
    if (minimal) {
        ess = paper ? essential_set_of_family(rs, FamilyId{rs.type(), 1}) : detail::lowest_essential_set(rs, y);
        cond = check_essential_conditions(rs, ess);
    }
    const bool conditions_ok = !cond || cond->none_failed();
    const bool good = minimal && antichain && conditions_ok;

    json j{{"schema_version", schema_version},
           {"type", rs.type().str()},
           {"family", paper ? "paper" : family_arg},
           {"provenance", to_string(y.provenance())},
           {"size", y.size()},
           {"complete", complete},
           {"minimal", minimal},
           {"antichain", antichain},
           {"essential_set_unique", unique},
           {"nonreduced_words", nonreduced},
           {"witness_words", family_words(rs, y)}};
    if (cond) {
        j["essential_set_coords"] = root_set_coords(rs, ess);
        j["conditions"] = {{"cond1", to_string(cond->cond1)},
                           {"cond2", to_string(cond->cond2)},
                           {"cond3", to_string(cond->cond3)}};
    }
    emit_json(j, json_path);
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        if (minimal) std::cout << "minimal inversion complete, |Y|=" << y.size();
        else if (complete) std::cout << "inversion complete but not minimal, |Y|=" << y.size();
        else std::cout << "not inversion complete, |Y|=" << y.size();
        std::cout << ", antichain: " << (antichain ? "yes" : "no") << "\n";
        if (cond)
            std::cout << "essential set conditions: (1) " << to_string(cond->cond1) << ", (2) "
                      << to_string(cond->cond2) << ", (3) " << to_string(cond->cond3) << "\n";
        if (minimal) std::cout << "essential set unique: " << (unique ? "yes" : "no") << "\n";
        if (!nonreduced.empty()) std::cout << "non-reduced words: " << nonreduced.size() << "\n";
    }
    return good ? ok : property_failure;
}

// ---- search -----------------------------------------------------------------

int cmd_search(const std::string& type_arg, SearchConfig cfg, bool brute, const std::string& format,
               const std::string& json_path)
{
    const RootSystem rs(TypeId::parse(type_arg));
    const SearchResult r = brute ? brute_force_mc(rs) : search_mc(rs, cfg);
    json j{{"schema_version", schema_version},
           {"type", rs.type().str()},
           {"rank", rs.rank()},
           {"value", r.value},
           {"status", to_string(r.status)},
           {"witness_words", family_words(rs, r.witness)},
           {"essential_set_coords", root_set_coords(rs, r.essential_set)},
           {"nodes", r.stats.nodes + r.stats.cover_nodes},
           {"elapsed_ms", r.stats.elapsed_ms}};
    emit_json(j, json_path);
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << rs.type().str() << ": MC = " << r.value << " (" << to_string(r.status) << ")\n";
        std::cout << "witness:\n";
        for (const auto& w : family_words(rs, r.witness)) std::cout << "  " << w << "\n";
        std::cout << "nodes: " << r.stats.nodes + r.stats.cover_nodes << ", elapsed: " << std::fixed
                  << std::setprecision(1) << r.stats.elapsed_ms << " ms\n";
    }
    if (!is_minimal_inversion_complete(rs, r.witness)) return property_failure;
    return r.status == SearchStatus::budget_exhausted ? undecided : ok;
}

// ---- abelian ----------------------------------------------------------------

RootSet parse_index_set(const RootSystem& rs, const std::string& text)
{
    RootSet s(rs.num_positive());
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" ") == std::string::npos) continue;
        s.insert(std::stoi(item));
    }
    return s;
}

int cmd_abelian(const std::string& type_arg, const std::string& mode, const std::string& set_arg, std::size_t samples,
                std::uint64_t seed, const SearchConfig& cfg, const std::string& format, const std::string& json_path)
{
    const RootSystem rs(TypeId::parse(type_arg));
    json j{{"schema_version", schema_version}, {"type", rs.type().str()}, {"mode", mode}};
    int code = ok;
    std::ostringstream text;
    if (mode == "max-strong") {
        const auto r = max_strongly_abelian(rs, cfg);
        j["value"] = r.value;
        j["status"] = to_string(r.status);
        j["witness_coords"] = root_set_coords(rs, r.witness);
        j["nodes"] = r.nodes;
        j["elapsed_ms"] = r.elapsed_ms;
        text << rs.type().str() << ": maximal strongly abelian set has " << r.value << " roots (" << to_string(r.status)
             << ")\n";
        r.witness.for_each([&](int i) { text << "  " << rs.coords_str(i) << "\n"; });
        if (r.status != SearchStatus::exact) code = undecided;
    } else if (mode == "check") {
        const RootSet s = parse_index_set(rs, set_arg);
        const bool ab = is_abelian(rs, s);
        const auto sa = is_strongly_abelian(rs, s);
        j["set_coords"] = root_set_coords(rs, s);
        j["abelian"] = ab;
        j["strongly_abelian"] = sa.strongly_abelian;
        text << "abelian: " << (ab ? "yes" : "no") << ", strongly abelian: " << (sa.strongly_abelian ? "yes" : "no")
             << "\n";
        if (sa.certificate) {
            const auto& c = *sa.certificate;
            j["certificate"] = {{"alpha", rs.coords_str(c.alpha)}, {"beta", rs.coords_str(c.beta)},
                                {"gamma", rs.coords_str(c.gamma)}, {"s", c.s.str()}, {"t", c.t.str()}};
            text << "  " << rs.coords_str(c.gamma) << " = (" << c.s.str() << ")*" << rs.coords_str(c.alpha) << " + ("
                 << c.t.str() << ")*" << rs.coords_str(c.beta) << "\n";
        }
    } else if (mode == "ade") {
        const auto r = ade_equivalence_check(rs, samples, seed);
        j["ok"] = r.ok;
        j["samples"] = r.samples;
        j["abelian_samples"] = r.abelian_samples;
        j["seed"] = seed;
        if (r.counterexample) j["counterexample_coords"] = root_set_coords(rs, *r.counterexample);
        text << rs.type().str() << ": " << r.samples << " samples, " << (r.ok ? "no violations" : "VIOLATION") << "\n";
        if (!r.ok) code = property_failure;
    } else {
        throw Error("unknown abelian mode " + mode);
    }
    emit_json(j, json_path);
    if (format == "json") std::cout << j.dump(2) << "\n";
    else std::cout << text.str();
    return code;
}

// ---- roots ------------------------------------------------------------------

int cmd_roots(const std::string& type_arg, const std::string& format)
{
    const RootSystem rs(TypeId::parse(type_arg));
    json j{{"schema_version", schema_version}, {"type", rs.type().str()}, {"roots", json::array()}};
    for (int i = 0; i < rs.num_positive(); ++i) {
        json e{{"index", i}, {"coords", rs.coords_str(i)}, {"height", rs.height(i).str()}};
        if (rs.root(i).eps) e["eps"] = rs.eps_str(i);
        j["roots"].push_back(e);
    }
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return ok;
    }
    for (const auto& e : j["roots"]) {
        std::cout << std::setw(4) << e["index"].get<int>() << "  " << std::left << std::setw(24)
                  << e["coords"].get<std::string>() << std::right;
        if (e.contains("eps")) std::cout << "  " << e["eps"].get<std::string>();
        std::cout << "\n";
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Minimal inversion complete sets in finite reflection groups"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string json_path;
    unsigned threads = 0;
    std::uint64_t seed = 20240531;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--json", json_path, "Also write JSON to this file ('-' for stdout)");
    };

    std::string type_arg, family_arg = "paper", types_arg, mode = "max-strong", set_arg;
    bool verify_flag = false, brute = false, no_pruning = false, no_seed = false;
    SearchConfig cfg;
    std::size_t samples = 10000;

    auto* table = app.add_subcommand("table", "Known MC values per type");
    table->add_option("--types", types_arg, "Comma-separated types (default: a standard range)");
    table->add_flag("--verify", verify_flag, "Re-verify families and searched values");
    table->add_option("--time-budget", cfg.time_budget, "Seconds per search");
    table->add_option("--threads", threads, "Worker threads (falls back to MC_THREADS)");
    add_common(table);

    auto* verify = app.add_subcommand("verify", "Verify a family");
    verify->add_option("--type", type_arg, "Type, e.g. A5, B3, I2:7, H4")->required();
    verify->add_option("--family", family_arg, "'paper' or a word-list / search JSON file");
    add_common(verify);

    auto* search = app.add_subcommand("search", "Compute MC by essential-set search");
    search->add_option("--type", type_arg, "Type")->required();
    search->add_option("--k-min", cfg.k_min, "Smallest size of interest");
    search->add_option("--k-max", cfg.k_max, "Largest size scanned");
    search->add_option("--time-budget", cfg.time_budget, "Seconds");
    search->add_option("--node-budget", cfg.node_budget, "Search nodes");
    search->add_option("--pool-cap", cfg.pool_cap, "Witness pool cap per root");
    search->add_option("--threads", threads, "Worker threads (falls back to MC_THREADS)");
    search->add_flag("--no-pruning", no_pruning, "Skip the necessary-condition checks");
    search->add_flag("--no-seed", no_seed, "Do not start from the known family");
    search->add_flag("--brute-force", brute, "Use the brute-force oracle (tiny groups only)");
    add_common(search);

    auto* abelian = app.add_subcommand("abelian", "Abelian and strongly abelian sets");
    abelian->add_option("--type", type_arg, "Type")->required();
    abelian->add_option("--mode", mode, "max-strong | check | ade")
        ->check(CLI::IsMember({"max-strong", "check", "ade"}));
    abelian->add_option("--set", set_arg, "Root indices for --mode check, e.g. 0,3");
    abelian->add_option("--samples", samples, "Random subsets for --mode ade");
    abelian->add_option("--seed", seed, "Random seed");
    abelian->add_option("--time-budget", cfg.time_budget, "Seconds");
    add_common(abelian);

    auto* roots = app.add_subcommand("roots", "List positive roots with their indices");
    roots->add_option("--type", type_arg, "Type")->required();
    add_common(roots);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : usage;
    }

    try {
        cfg.threads = resolve_threads(threads);
        cfg.use_conditions_pruning = !no_pruning;
        cfg.seed_with_family = !no_seed;
        if (*table) return cmd_table(types_arg, verify_flag, format, json_path, cfg.time_budget, cfg.threads);
        if (*verify) return cmd_verify(type_arg, family_arg, format, json_path);
        if (*search) return cmd_search(type_arg, cfg, brute, format, json_path);
        if (*abelian) return cmd_abelian(type_arg, mode, set_arg, samples, seed, cfg, format, json_path);
        if (*roots) return cmd_roots(type_arg, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}
