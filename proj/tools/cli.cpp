#include "cli.hpp"

#include "dissoc/branching.hpp"
#include "dissoc/errors.hpp"
#include "dissoc/families.hpp"
#include "dissoc/graph6.hpp"
#include "dissoc/harness.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>

namespace dissoc::cli {

namespace {

using nlohmann::json;

enum class Format { table, json, csv };

struct Globals {
    Format format = Format::table;
    std::uint64_t seed = 1;
    bool allow_long = false;
    std::optional<std::size_t> limit;
};

struct Record {
    std::size_t line;
    std::string text;
};

struct InputSource {
    std::vector<std::string> inline_graphs;
    std::string file;
};

std::vector<Record> read_records(const InputSource& src, std::istream& in)
{
    std::vector<Record> out;
    auto push = [&](std::size_t line, std::string text) {
        while (!text.empty() && (text.back() == '\r' || text.back() == '\n' || text.back() == ' ')) text.pop_back();
        if (text.rfind(">>graph6<<", 0) == 0) text.erase(0, 10);
        if (!text.empty()) out.push_back({line, std::move(text)});
    };
    if (!src.inline_graphs.empty()) {
        for (std::size_t i = 0; i < src.inline_graphs.size(); ++i) push(i + 1, src.inline_graphs[i]);
        return out;
    }
    std::ifstream file;
    std::istream* stream = &in;
    if (!src.file.empty() && src.file != "-") {
        file.open(src.file);
        if (!file) throw Error("cannot open input file '" + src.file + "'");
        stream = &file;
    }
    std::string line;
    for (std::size_t n = 1; std::getline(*stream, line); ++n) push(n, line);
    return out;
}

// Parses a record and enforces the enumeration cap; throws on failure.
Graph load(const Record& r)
{
    auto g = parse_graph6(r.text);
    check_enumeration_cap(g);
    return g;
}

json set_json(VertexSet s) { return s.members(); }

std::string set_text(VertexSet s)
{
    std::string out;
    s.for_each([&](int v) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    });
    return out;
}

// Collects per-line failures; good lines keep processing.
struct Errors {
    json items = json::array();
    void add(std::size_t line, const std::string& message) { items.push_back({{"line", line}, {"message", message}}); }
    bool any() const { return !items.empty(); }
    void print(std::ostream& err) const
    {
        for (const auto& e : items)
            err << "line " << e["line"].get<std::size_t>() << ": " << e["message"].get<std::string>() << '\n';
    }
};

int finish(const Globals& g, json doc, Errors& errors, std::ostream& out, std::ostream& err)
{
    if (g.format == Format::json) {
        doc["errors"] = errors.items;
        out << doc.dump(2) << '\n';
    } else {
        errors.print(err);
    }
    return errors.any() ? 1 : 0;
}

int cmd_count(const Globals& g, const InputSource& src, std::istream& in, std::ostream& out, std::ostream& err)
{
    Errors errors;
    json results = json::array();
    if (g.format == Format::csv) out << "line,graph6,n,phi,phi_max,psi\n";
    if (g.format == Format::table)
        out << std::left << std::setw(6) << "line" << std::setw(20) << "graph6" << std::right << std::setw(4) << "n"
            << std::setw(10) << "phi" << std::setw(10) << "phi_max" << std::setw(5) << "psi" << '\n';
    for (const auto& rec : read_records(src, in)) {
        try {
            const auto graph = load(rec);
            const auto r = count(graph);
            results.push_back({{"line", rec.line},
                               {"graph6", rec.text},
                               {"n", graph.order()},
                               {"phi", r.phi},
                               {"phi_max", r.phi_max},
                               {"psi", r.psi}});
            if (g.format == Format::csv)
                out << rec.line << ',' << rec.text << ',' << graph.order() << ',' << r.phi << ',' << r.phi_max << ','
                    << r.psi << '\n';
            if (g.format == Format::table)
                out << std::left << std::setw(6) << rec.line << std::setw(20) << rec.text << std::right << std::setw(4)
                    << graph.order() << std::setw(10) << r.phi << std::setw(10) << r.phi_max << std::setw(5) << r.psi
                    << '\n';
        } catch (const std::exception& e) {
            errors.add(rec.line, e.what());
        }
    }
    return finish(g, {{"command", "count"}, {"results", results}}, errors, out, err);
}

int cmd_enumerate(const Globals& g, const InputSource& src, std::istream& in, std::ostream& out, std::ostream& err)
{
    Errors errors;
    json results = json::array();
    if (g.format == Format::csv) out << "line,graph6,index,members\n";
    for (const auto& rec : read_records(src, in)) {
        try {
            const auto graph = load(rec);
            const auto family = enumerate_maximal(graph);
            const std::size_t shown = std::min(family.size(), g.limit.value_or(family.size()));
            const bool truncated = shown < family.size();
            json sets = json::array();
            if (g.format == Format::table)
                out << rec.text << " (n=" << graph.order() << ", phi=" << family.size() << ")\n";
            for (std::size_t i = 0; i < shown; ++i) {
                const auto s = family.sets()[i];
                sets.push_back(set_json(s));
                if (g.format == Format::table) out << "  " << set_text(s) << '\n';
                if (g.format == Format::csv) out << rec.line << ',' << rec.text << ',' << i << ',' << set_text(s) << '\n';
            }
            if (truncated) {
                if (g.format == Format::table)
                    out << "  ... truncated (" << shown << " of " << family.size() << ")\n";
                if (g.format == Format::csv)
                    out << rec.line << ',' << rec.text << ",truncated," << shown << " of " << family.size() << '\n';
            }
            results.push_back({{"line", rec.line},
                               {"graph6", rec.text},
                               {"n", graph.order()},
                               {"count", family.size()},
                               {"sets", sets},
                               {"truncated", truncated}});
        } catch (const std::exception& e) {
            errors.add(rec.line, e.what());
        }
    }
    return finish(g, {{"command", "enumerate"}, {"results", results}}, errors, out, err);
}

int cmd_max(const Globals& g, const InputSource& src, std::istream& in, std::ostream& out, std::ostream& err)
{
    Errors errors;
    json results = json::array();
    if (g.format == Format::csv) out << "line,graph6,n,psi,set\n";
    for (const auto& rec : read_records(src, in)) {
        try {
            const auto graph = load(rec);
            const auto best = maximum_dissociation_set(graph);
            results.push_back({{"line", rec.line},
                               {"graph6", rec.text},
                               {"n", graph.order()},
                               {"psi", best.size()},
                               {"set", set_json(best)}});
            if (g.format == Format::csv)
                out << rec.line << ',' << rec.text << ',' << graph.order() << ',' << best.size() << ','
                    << set_text(best) << '\n';
            if (g.format == Format::table)
                out << rec.text << "  psi=" << best.size() << "  " << to_string(best) << '\n';
        } catch (const std::exception& e) {
            errors.add(rec.line, e.what());
        }
    }
    return finish(g, {{"command", "max"}, {"results", results}}, errors, out, err);
}

int cmd_gen(const Globals& g, const std::vector<std::string>& specs, int copies, std::ostream& out, std::ostream& err)
{
    json graphs = json::array();
    std::vector<std::pair<std::string, std::string>> lines;
    try {
        for (const auto& text : specs) {
            auto spec = parse_family_spec(text);
            if (copies != 1) spec = FamilySpec::times(copies, spec);
            const auto graph = build(spec);
            lines.emplace_back(text, serialize_graph6(graph));
            graphs.push_back({{"spec", to_string(spec)}, {"graph6", lines.back().second}, {"n", graph.order()}});
        }
    } catch (const std::exception& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }
    if (g.format == Format::json) {
        out << json{{"command", "gen"}, {"graphs", graphs}}.dump(2) << '\n';
    } else if (g.format == Format::csv) {
        out << "spec,graph6\n";
        for (const auto& [spec, g6] : lines) out << '"' << spec << "\"," << g6 << '\n';
    } else {
        for (const auto& [spec, g6] : lines) out << g6 << '\n';
    }
    return 0;
}

void print_reports(const Globals& g, const std::vector<harness::Report>& reports, std::ostream& out)
{
    bool passed = true;
    json suites = json::array();
    for (const auto& r : reports) {
        passed = passed && r.passed();
        suites.push_back(harness::to_json(r));
    }
    if (g.format == Format::json) {
        json violations = json::array();
        for (const auto& s : suites)
            for (const auto& v : s["violations"]) violations.push_back(v);
        out << json{{"command", "verify"}, {"passed", passed}, {"suites", suites}, {"violations", violations}}.dump(2)
            << '\n';
        return;
    }
    if (g.format == Format::csv) out << "suite,checks,violations,elapsed_ms,status\n";
    for (const auto& r : reports) {
        if (g.format == Format::csv) {
            out << r.suite << ',' << r.checks << ',' << r.violations.size() << ',' << r.elapsed_ms << ','
                << (r.passed() ? "pass" : "fail") << '\n';
            continue;
        }
        out << std::left << std::setw(14) << r.suite << std::right << std::setw(10) << r.checks << " checks"
            << std::setw(6) << r.violations.size() << " violations" << std::setw(10) << std::fixed
            << std::setprecision(1) << r.elapsed_ms << " ms  " << (r.passed() ? "PASS" : "FAIL") << '\n';
        for (const auto& v : r.violations) out << "    " << v.check << " [" << v.witness << "] " << v.detail << '\n';
        if (r.suite == "bounds" && r.details.contains("sweep_all")) {
            const auto& s = r.details["sweep_all"];
            out << "    order " << s["order"] << " max phi " << s["max_value"] << " over "
                << s["extremal_graph6"].size() << " extremal classes:";
            for (const auto& c : s["extremal_graph6"]) out << ' ' << c.get<std::string>();
            out << '\n';
        }
    }
}

struct VerifyArgs {
    std::string suite = "all";
    int order_max = 6;
    int n_max = 20;
    int t_max = 3;
    int trials = 200;
};

int cmd_verify(const Globals& g, const VerifyArgs& a, std::ostream& out, std::ostream& err)
{
    std::vector<harness::Report> reports;
    const bool all = a.suite == "all";
    try {
        if (all || a.suite == "paths-cycles") reports.push_back(harness::verify_path_cycle_bounds(a.n_max));
        if (all || a.suite == "families") reports.push_back(harness::verify_family_values(a.t_max));
        if (all || a.suite == "recurrences")
            reports.push_back(harness::verify_recurrences({.trials = a.trials, .seed = g.seed}));
        if (all || a.suite == "bounds") {
            harness::BoundsOptions opts;
            opts.seed = g.seed;
            opts.allow_long = g.allow_long;
            reports.push_back(harness::verify_asymptotic_bounds(a.order_max, opts));
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    print_reports(g, reports, out);
    for (const auto& r : reports)
        if (!r.passed()) return 1;
    return 0;
}

struct SweepArgs {
    int order = 5;
    std::string filter = "all";
    std::string quantity = "phi";
    unsigned threads = 0;
};

int cmd_sweep(const Globals& g, const SweepArgs& a, std::ostream& out, std::ostream& err)
{
    harness::ExtremalRecord r;
    try {
        harness::SweepOptions opts;
        opts.allow_long = g.allow_long;
        opts.threads = a.threads;
        r = harness::sweep(a.order, harness::parse_sweep_filter(a.filter), harness::parse_quantity(a.quantity), opts);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    if (g.format == Format::json) {
        out << harness::to_json(r).dump(2) << '\n';
    } else if (g.format == Format::csv) {
        out << "order,filter,quantity,max_value,canonical,representative,labeled_count\n";
        for (const auto& c : r.extremal)
            out << r.order << ',' << harness::to_string(r.filter) << ',' << harness::to_string(r.quantity) << ','
                << r.max_value << ',' << c.canonical << ',' << c.representative << ',' << c.labeled_count << '\n';
    } else {
        out << "order " << r.order << " filter " << harness::to_string(r.filter) << " " << harness::to_string(r.quantity)
            << ": max " << r.max_value << " (" << r.graphs_admitted << " of " << r.graphs_scanned
            << " labeled graphs admitted)\n";
        for (const auto& c : r.extremal)
            out << "  " << c.canonical << "  e.g. " << c.representative << "  (" << c.labeled_count << " labeled)\n";
        for (const auto& v : r.violations) out << "  violation: " << v << '\n';
    }
    return r.violations.empty() ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Maximal and maximum dissociation set toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    const std::map<std::string, Format> formats{{"table", Format::table}, {"json", Format::json}, {"csv", Format::csv}};
    app.add_option("--format", g.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--seed", g.seed, "Seed for randomized suites");
    app.add_flag("--allow-long", g.allow_long, "Permit order-8 exhaustive sweeps");
    std::size_t limit = 0;
    auto* limit_opt = app.add_option("--limit", limit, "Maximum number of sets to list per graph");

    InputSource src;
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("graphs", src.inline_graphs, "graph6 strings (default: read lines from --input or stdin)");
        sub->add_option("-i,--input", src.file, "File with one graph6 per line ('-' for stdin)");
    };
    auto* count_cmd = app.add_subcommand("count", "Count maximal and maximum dissociation sets");
    add_input(count_cmd);
    auto* enum_cmd = app.add_subcommand("enumerate", "List every maximal dissociation set");
    add_input(enum_cmd);
    auto* max_cmd = app.add_subcommand("max", "Find a maximum dissociation set");
    add_input(max_cmd);

    std::vector<std::string> specs;
    int copies = 1;
    auto* gen_cmd = app.add_subcommand("gen", "Emit graph6 for named graph families");
    gen_cmd->add_option("specs", specs, "path:N cycle:N complete:N kmn:M,N kstar:M,I union:(A;B;...)")->required();
    gen_cmd->add_option("--copies", copies, "Emit the disjoint union of this many copies")
        ->check(CLI::Range(1, 64));

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
    verify_cmd->add_option("suite", va.suite, "bounds | families | recurrences | paths-cycles | all")
        ->check(CLI::IsMember({"bounds", "families", "recurrences", "paths-cycles", "all"}));
    verify_cmd->add_option("--order-max", va.order_max, "Largest order for exhaustive bound checks");
    verify_cmd->add_option("--n-max", va.n_max, "Largest path/cycle order");
    verify_cmd->add_option("--t-max", va.t_max, "Largest family parameter t");
    verify_cmd->add_option("--trials", va.trials, "Random graphs for the recurrence suite");

    SweepArgs sa;
    auto* sweep_cmd = app.add_subcommand("sweep", "Exhaustive extremal sweep over labeled graphs");
    sweep_cmd->add_option("--order", sa.order, "Graph order")->required();
    sweep_cmd->add_option("--filter", sa.filter, "all | triangle-free | bipartite | connected (comma list)");
    sweep_cmd->add_option("--quantity", sa.quantity, "phi | phi_max");
    sweep_cmd->add_option("--threads", sa.threads, "Worker threads (0: all cores)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        for (auto* sub : app.get_subcommands())
            if (sub->parsed()) err << sub->help();
        return 2;
    }
    if (limit_opt->count() > 0) g.limit = limit;

    try {
        if (count_cmd->parsed()) return cmd_count(g, src, in, out, err);
        if (enum_cmd->parsed()) return cmd_enumerate(g, src, in, out, err);
        if (max_cmd->parsed()) return cmd_max(g, src, in, out, err);
        if (gen_cmd->parsed()) return cmd_gen(g, specs, copies, out, err);
        if (verify_cmd->parsed()) return cmd_verify(g, va, out, err);
        if (sweep_cmd->parsed()) return cmd_sweep(g, sa, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace dissoc::cli
