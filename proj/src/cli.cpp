#include "facering/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "facering/corpus.hpp"
#include "facering/criteria.hpp"
#include "facering/document.hpp"
#include "facering/error.hpp"
#include "facering/limits.hpp"
#include "facering/report.hpp"

namespace facering {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr std::uint64_t default_seed = 20261017;

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream f(path);
    if (!f)
        throw InputError(path + ": cannot write");
    f << text;
}

// Emits JSON to the report path when given; stdout gets the text rendering (or the JSON with --json).
void emit(const ordered_json& j, const std::string& text, const std::string& report_path, bool json_stdout,
          std::ostream& out)
{
    if (!report_path.empty())
        write_text(report_path, j.dump(2) + "\n");
    if (json_stdout)
        out << j.dump(2) << "\n";
    else
        out << text;
}

int cmd_analyze(const std::string& input, const std::string& fields, std::optional<int> d_max,
                const std::string& report_path, bool report_only, bool json_stdout, std::ostream& out)
{
    const auto doc = read_document(input);
    AnalysisOptions options{parse_field_list(fields), d_max, report_only};
    const auto result = analyze(doc, options);
    emit(result.report, render_text(result.report), report_path, json_stdout, out);
    return result.problems.empty() ? 0 : 2;
}

ComplexDocument load_arg(const std::string& path)
{
    return read_document(path);
}

int parse_int(const std::string& s, const char* what)
{
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used == s.size())
            return v;
    } catch (const std::exception&) {
    }
    throw InputError(std::string(what) + ": expected an integer, got '" + s + "'");
}

int cmd_gen(const std::string& family, const std::vector<std::string>& args, const std::string& name,
            const std::string& out_path, std::ostream& out)
{
    auto need = [&](std::size_t count) {
        if (args.size() != count)
            throw InputError("gen " + family + ": expected " + std::to_string(count) + " argument(s)");
    };
    ComplexDocument doc;
    if (family == "simplex_boundary") {
        need(1);
        doc = ComplexDocument::from_complex("simplex_boundary_" + args[0], simplex_boundary(parse_int(args[0], "n")));
    } else if (family == "simplex") {
        need(1);
        doc = ComplexDocument::from_complex("simplex_" + args[0], simplex(parse_int(args[0], "n")));
    } else if (family == "points") {
        need(1);
        doc = ComplexDocument::from_complex("points_" + args[0], points(parse_int(args[0], "m")));
    } else if (family == "cycle") {
        need(1);
        doc = ComplexDocument::from_complex("cycle_" + args[0], cycle(parse_int(args[0], "m")));
    } else if (family == "cone") {
        need(1);
        const auto base = load_arg(args[0]);
        doc = ComplexDocument::from_complex("cone(" + base.name + ")", cone(base.complex()));
    } else if (family == "suspension") {
        need(1);
        const auto base = load_arg(args[0]);
        doc = ComplexDocument::from_complex("suspension(" + base.name + ")", suspension(base.complex()));
    } else if (family == "join") {
        need(2);
        const auto a = load_arg(args[0]), b = load_arg(args[1]);
        if (a.m + b.m > max_vertices)
            throw InputError("gen join: more than " + std::to_string(max_vertices) + " labels");
        doc = ComplexDocument::from_complex("join(" + a.name + "," + b.name + ")", join(a.complex(), b.complex()));
    } else if (family == "rp2_6") {
        need(0);
        doc = ComplexDocument::from_complex("rp2_6", rp2_6());
    } else if (family == "random") {
        need(3);
        const int m = parse_int(args[0], "m");
        double density = 0;
        try {
            std::size_t used = 0;
            density = std::stod(args[1], &used);
            if (used != args[1].size())
                throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw InputError("gen random: density must be a number");
        }
        std::uint64_t seed = 0;
        try {
            std::size_t used = 0;
            seed = std::stoull(args[2], &used);
            if (used != args[2].size() || args[2].front() == '-')
                throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw InputError("gen random: seed must be a non-negative integer");
        }
        doc = ComplexDocument::from_complex("random_" + args[0] + "_" + args[1] + "_" + args[2],
                                            random_complex(m, density, seed));
        doc.metadata = ordered_json{{"seed", seed}, {"density", density}};
    } else {
        throw InputError("gen: unknown family '" + family + "'");
    }
    if (!name.empty())
        doc.name = name;
    const std::string text = serialize_document(doc);
    if (out_path.empty())
        out << text;
    else
        write_text(out_path, text);
    return 0;
}

// metadata.expected.<field>.<property> = bool, compared with the computed algebraic verdicts.
void check_recorded(const std::map<std::string, ordered_json>& expected, CrossValidationReport& rep,
                    const std::map<std::string, SimplicialComplex>& complexes)
{
    for (const auto& e : rep.entries) {
        auto it = expected.find(e.complex_name);
        if (it == expected.end() || !it->second.contains(e.field))
            continue;
        const auto& want = it->second[e.field];
        const std::pair<const char*, bool> computed[] = {
            {"CM", e.cm}, {"Gorenstein", e.gorenstein}, {"GorensteinStar", e.gorenstein_star}};
        for (const auto& [prop, value] : computed) {
            if (!want.contains(prop))
                continue;
            auto& tally = rep.checks["recorded_verdicts"];
            ++tally.checked;
            if (!want[prop].is_boolean() || want[prop].get<bool>() != value) {
                ++tally.failed;
                rep.counterexamples.push_back({"recorded_verdicts", e.complex_name, e.field,
                                               std::string(prop) + " recorded " + want[prop].dump() + ", computed " +
                                                   (value ? "true" : "false"),
                                               complexes.at(e.complex_name)});
            }
        }
    }
}

int cmd_crossval(const std::string& dir, const std::string& fields, std::optional<std::uint64_t> seed_flag,
                 int random_count, const std::string& report_path, bool json_stdout, std::ostream& out)
{
    const auto field_list = parse_field_list(fields);
    std::vector<NamedComplex> corpus;
    std::map<std::string, ordered_json> expected;
    std::map<std::string, SimplicialComplex> by_name;
    std::optional<std::uint64_t> seed;
    if (dir.empty()) {
        seed = seed_flag.value_or(default_seed);
        corpus = named_corpus();
        auto extra = random_corpus(random_count, 6, *seed);
        corpus.insert(corpus.end(), extra.begin(), extra.end());
    } else {
        if (!fs::is_directory(dir))
            throw InputError(dir + ": not a directory");
        seed = seed_flag;
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(dir))
            if (entry.is_regular_file() && entry.path().extension() == ".json")
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& path : files) {
            auto doc = read_document(path);
            std::string name = doc.name.empty() ? path.stem().string() : doc.name;
            if (by_name.contains(name))
                throw InputError(path.string() + ": duplicate complex name '" + name + "'");
            if (doc.metadata.is_object() && doc.metadata.contains("expected"))
                expected[name] = doc.metadata["expected"];
            corpus.push_back({name, doc.complex()});
        }
    }
    for (const auto& c : corpus)
        by_name.emplace(c.name, c.complex);
    auto rep = cross_validate(corpus, field_list, seed);
    check_recorded(expected, rep, by_name);
    emit(crossval_json(rep), render_crossval_text(rep), report_path, json_stdout, out);
    return rep.ok() ? 0 : 2;
}

int cmd_limits(const std::string& input, const std::string& functor, int degree, int value_dim,
               const std::string& fields, const std::string& report_path, bool json_stdout, std::ostream& out)
{
    if (degree < 0)
        throw InputError("limits: degree must be non-negative");
    if (value_dim < 0)
        throw InputError("limits: value dimension must be non-negative");
    const auto doc = read_document(input);
    const auto k = doc.complex();
    bool ok = true;
    ordered_json j;
    j["schema"] = report_schema;
    j["tool"] = "facering";
    j["version"] = tool_version();
    j["name"] = doc.name;
    j["functor"] = functor;
    std::ostringstream text;
    text << doc.name << ": " << functor << " functor\n";
    ordered_json blocks = ordered_json::array();
    for (const auto& field : parse_field_list(fields)) {
        ordered_json b;
        b["field"] = field.name();
        text << "  [" << field.name() << "]\n";
        if (functor == "star") {
            ordered_json degrees = ordered_json::array();
            for (int d = 0; d <= degree; ++d) {
                const auto s = star_identity(k, field, d);
                ok = ok && s.holds;
                degrees.push_back({{"degree", d}, {"limits", s.limits}, {"expected", s.expected}, {"holds", s.holds}});
                text << "    degree " << d << ": lim =";
                for (auto x : s.limits)
                    text << " " << x;
                text << (s.holds ? "  (star identity holds)\n" : "  (star identity FAILS)\n");
            }
            b["star"] = degrees;
        } else {
            const auto phi = functor == "constant" ? constant_functor(k, field, value_dim)
                                                   : atomic_functor(k, field, value_dim);
            const auto lim = higher_limit_dims(build_normalized_complex(phi));
            b["limits"] = lim;
            text << "    lim =";
            for (auto x : lim)
                text << " " << x;
            text << "\n";
        }
        ordered_json chain = ordered_json::array();
        for (const auto& row : atomic_chain(k, field)) {
            ok = ok && row.holds;
            chain.push_back({{"degree", row.degree},
                             {"cohomology", row.cohomology},
                             {"constant", row.constant_limit},
                             {"atomic", row.atomic_limit},
                             {"holds", row.holds}});
            text << "    H^" << row.degree << " = " << row.cohomology << ", constant lim = " << row.constant_limit
                 << ", atomic lim^" << row.degree + 1 << " = " << row.atomic_limit << (row.holds ? "" : "  FAILS")
                 << "\n";
        }
        b["constant_atomic_chain"] = chain;
        blocks.push_back(b);
    }
    j["fields"] = blocks;
    j["ok"] = ok;
    emit(j, text.str(), report_path, json_stdout, out);
    return ok ? 0 : 2;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cohen-Macaulay and Gorenstein tests for Stanley-Reisner rings", "facering"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version());

    std::string fields = "f2,f3,q";
    std::string report_path;
    bool json_stdout = false;

    auto* analyze_cmd = app.add_subcommand("analyze", "Decide CM / Gorenstein / Gorenstein* for one complex");
    std::string input;
    std::optional<int> d_max;
    bool report_only = false;
    analyze_cmd->add_option("input", input, "Complex document (JSON)")->required();
    analyze_cmd->add_option("-f,--fields", fields, "Comma-separated fields: f2,f3,f5,fp:<p>,q");
    analyze_cmd->add_option("--dmax", d_max, "Largest internal degree for Koszul Tor")->check(CLI::NonNegativeNumber);
    analyze_cmd->add_option("-r,--report", report_path, "Write the JSON report here");
    analyze_cmd->add_flag("--report-only", report_only, "Record disagreements instead of failing");
    analyze_cmd->add_flag("--json", json_stdout, "Print JSON instead of text");

    auto* gen_cmd = app.add_subcommand("gen", "Write a complex document from a named family");
    std::string family, out_path, name;
    std::vector<std::string> gen_args;
    gen_cmd->add_option("family", family,
                        "simplex_boundary N | simplex N | points M | cycle M | cone DOC | suspension DOC | "
                        "join DOC DOC | rp2_6 | random M DENSITY SEED")
        ->required();
    gen_cmd->add_option("args", gen_args, "Family parameters");
    gen_cmd->add_option("-o,--out", out_path, "Output path (stdout when omitted)");
    gen_cmd->add_option("--name", name, "Override the document name");

    auto* cv_cmd = app.add_subcommand("crossval", "Differential test of both routes over a corpus");
    std::string dir;
    std::optional<std::uint64_t> seed;
    int random_count = 200;
    cv_cmd->add_option("corpus", dir, "Directory of complex documents (built-in corpus when omitted)");
    cv_cmd->add_option("-f,--fields", fields, "Comma-separated fields");
    cv_cmd->add_option("--seed", seed, "Seed of the random part of the built-in corpus");
    cv_cmd->add_option("--random", random_count, "Number of random complexes in the built-in corpus")
        ->check(CLI::NonNegativeNumber);
    cv_cmd->add_option("-r,--report", report_path, "Write the JSON report here");
    cv_cmd->add_flag("--json", json_stdout, "Print JSON instead of text");

    auto* lim_cmd = app.add_subcommand("limits", "Higher limits over the face poset");
    std::string functor = "star";
    int degree = 3;
    int value_dim = 1;
    lim_cmd->add_option("input", input, "Complex document (JSON)")->required();
    lim_cmd->add_option("--functor", functor, "star, constant or atomic")
        ->check(CLI::IsMember({"star", "constant", "atomic"}));
    lim_cmd->add_option("--degree", degree, "Star functor: internal degrees 0..D")->check(CLI::NonNegativeNumber);
    lim_cmd->add_option("--dim", value_dim, "Constant / atomic value dimension")->check(CLI::NonNegativeNumber);
    lim_cmd->add_option("-f,--fields", fields, "Comma-separated fields");
    lim_cmd->add_option("-r,--report", report_path, "Write the JSON report here");
    lim_cmd->add_flag("--json", json_stdout, "Print JSON instead of text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    try {
        if (*analyze_cmd)
            return cmd_analyze(input, fields, d_max, report_path, report_only, json_stdout, out);
        if (*gen_cmd)
            return cmd_gen(family, gen_args, name, out_path, out);
        if (*cv_cmd)
            return cmd_crossval(dir, fields, seed, random_count, report_path, json_stdout, out);
        if (*lim_cmd)
            return cmd_limits(input, functor, degree, value_dim, fields, report_path, json_stdout, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ConsistencyError& e) {
        err << "disagreement: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

} // namespace facering
