#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "facering/cli.hpp"
#include "facering/corpus.hpp"
#include "facering/document.hpp"
#include "facering/error.hpp"
#include "facering/report.hpp"

using namespace facering;
namespace fs = std::filesystem;

namespace {

const fs::path data_dir = FACERING_TEST_DATA;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "facering");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& tag)
{
    auto p = fs::temp_directory_path() / ("facering_test_" + tag);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_CASE("document round trip")
{
    for (const auto& [name, k] : named_corpus()) {
        auto doc = ComplexDocument::from_complex(name, k);
        auto back = parse_document(serialize_document(doc));
        CHECK(back == doc);
        CHECK(back.complex() == k);
    }
    auto doc = ComplexDocument::from_complex("r", random_complex(5, 0.5, 3));
    doc.metadata = {{"seed", 3}, {"note", "x"}};
    CHECK(parse_document(serialize_document(doc)) == doc);
}

TEST_CASE("document errors name their location")
{
    auto expect_error = [](const std::string& text, const std::string& fragment) {
        try {
            parse_document(text, "t.json");
            FAIL("no error for " << text);
        } catch (const InputError& e) {
            INFO(e.what());
            CHECK(std::string(e.what()).find(fragment) != std::string::npos);
        }
    };
    expect_error("{\"name\": \"x\", \"m\": 2, ", "malformed JSON");
    expect_error("[1, 2]", "t.json");
    expect_error(R"({"name": "x", "m": 2, "facets": [[1, 3]]})", "facets[0][1]");
    expect_error(R"({"name": "x", "m": 2, "facets": [[1, 1]]})", "facets[0]");
    expect_error(R"({"name": "x", "facets": [[1]]})", "m");
    expect_error(R"({"name": "x", "m": 2, "facets": "no"})", "facets");
    CHECK_THROWS_AS(read_document(data_dir / "missing.json"), InputError);
}

TEST_CASE("gen writes canonical documents")
{
    auto pts = run({"gen", "points", "4"});
    CHECK(pts.code == 0);
    auto doc = parse_document(pts.out);
    CHECK(doc.m == 4);
    CHECK(doc.facets == std::vector<std::vector<int>>{{1}, {2}, {3}, {4}});

    auto sb = parse_document(run({"gen", "simplex_boundary", "3"}).out);
    CHECK(sb.m == 4);
    CHECK(sb.complex() == simplex_boundary(3));

    auto rp = parse_document(run({"gen", "rp2_6"}).out);
    CHECK(rp.complex() == rp2_6());
    CHECK(rp.facets.size() == 10);

    auto r1 = run({"gen", "random", "6", "0.5", "42"});
    auto r2 = run({"gen", "random", "6", "0.5", "42"});
    CHECK(r1.out == r2.out);
    CHECK(parse_document(r1.out).metadata["seed"] == 42);

    auto dir = scratch_dir("gen");
    CHECK(run({"gen", "cycle", "4", "-o", (dir / "c4.json").string()}).code == 0);
    auto cone_doc = parse_document(run({"gen", "cone", (dir / "c4.json").string()}).out);
    CHECK(cone_doc.complex() == cone(cycle(4)));
    auto join_doc = parse_document(run({"gen", "join", (dir / "c4.json").string(), (dir / "c4.json").string()}).out);
    CHECK(join_doc.complex() == join(cycle(4), cycle(4)));

    CHECK(run({"gen", "cycle", "2"}).code == 1);
    CHECK(run({"gen", "nonsense"}).code == 1);
    CHECK(run({"gen", "points", "x"}).code == 1);
}

TEST_CASE("analyze exit codes and verdicts")
{
    auto dir = scratch_dir("analyze");
    run({"gen", "simplex_boundary", "3", "-o", (dir / "s3.json").string()});
    auto r = run({"analyze", (dir / "s3.json").string(), "-f", "f2,f3,q", "--json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    REQUIRE(j["fields"].size() == 3);
    for (const auto& block : j["fields"])
        for (const auto& v : block["verdicts"]) {
            CHECK(v["agree"] == true);
            if (v["property"] == "GorensteinStar") {
                CHECK(v["topological"]["holds"] == true);
                CHECK(v["algebraic"]["holds"] == true);
            }
        }

    run({"gen", "rp2_6", "-o", (dir / "rp.json").string()});
    auto rp = run({"analyze", (dir / "rp.json").string(), "-f", "f2", "--json"});
    CHECK(rp.code == 0);
    auto rj = nlohmann::json::parse(rp.out);
    const auto& cm = rj["fields"][0]["verdicts"][0];
    CHECK(cm["property"] == "CM");
    CHECK(cm["topological"]["holds"] == false);
    CHECK(cm["algebraic"]["holds"] == false);

    CHECK(run({"analyze", (data_dir / "malformed.json").string()}).code == 1);
    CHECK(run({"analyze", (data_dir / "bad_label.json").string()}).code == 1);
    CHECK(run({"analyze", (dir / "absent.json").string()}).code == 1);
    CHECK(run({"analyze", (dir / "s3.json").string(), "-f", "f4"}).code == 1);
    CHECK(run({"analyze", (dir / "s3.json").string(), "--dmax", "-2"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
}

TEST_CASE("reports are byte stable")
{
    auto dir = scratch_dir("stable");
    run({"gen", "random", "6", "0.6", "9", "-o", (dir / "k.json").string()});
    auto a = run({"analyze", (dir / "k.json").string(), "-r", (dir / "a.json").string()});
    auto b = run({"analyze", (dir / "k.json").string(), "-r", (dir / "b.json").string()});
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(slurp(dir / "a.json") == slurp(dir / "b.json"));
    CHECK_FALSE(slurp(dir / "a.json").empty());
    auto j = nlohmann::json::parse(slurp(dir / "a.json"));
    CHECK(j["seed"] == 9);
}

TEST_CASE("crossval exit codes")
{
    auto good = run({"crossval", (data_dir / "corpus_good").string(), "--json"});
    CHECK(good.code == 0);
    auto gj = nlohmann::json::parse(good.out);
    CHECK(gj["counterexamples"].empty());

    auto bad = run({"crossval", (data_dir / "corpus_corrupted").string(), "--json"});
    CHECK(bad.code == 2);
    auto bj = nlohmann::json::parse(bad.out);
    REQUIRE(bj["counterexamples"].size() == 1);
    const auto& ce = bj["counterexamples"][0];
    CHECK(ce["complex"] == "rp2_6");
    CHECK(ce["field"] == "f2");
    // the offending complex comes back as a loadable document
    CHECK(parse_document(ce["document"].dump()).complex() == rp2_6());

    auto empty = scratch_dir("empty_corpus");
    auto e = run({"crossval", empty.string(), "--json"});
    CHECK(e.code == 0);
    auto ej = nlohmann::json::parse(e.out);
    CHECK(ej["complexes"] == 0);

    CHECK(run({"crossval", (empty / "nope").string()}).code == 1);

    auto builtin = run({"crossval", "--random", "20", "-f", "f2,q"});
    CHECK(builtin.code == 0);
}

TEST_CASE("limits command")
{
    auto dir = scratch_dir("limits");
    run({"gen", "simplex_boundary", "2", "-o", (dir / "t.json").string()});
    auto star = run({"limits", (dir / "t.json").string(), "--functor", "star", "--degree", "3", "--json"});
    CHECK(star.code == 0);
    auto sj = nlohmann::json::parse(star.out);
    for (const auto& block : sj["fields"]) {
        REQUIRE(block["star"].size() == 4);
        for (const auto& id : block["star"])
            CHECK(id["holds"] == true);
    }

    auto atomic = run({"limits", (dir / "t.json").string(), "--functor", "atomic", "-f", "q", "--json"});
    CHECK(atomic.code == 0);
    auto aj = nlohmann::json::parse(atomic.out);
    CHECK(aj["fields"][0]["limits"] == nlohmann::json::array({0, 0, 1}));

    CHECK(run({"limits", (dir / "t.json").string(), "--degree", "-1"}).code == 1);
    CHECK(run({"limits", (dir / "t.json").string(), "--functor", "weird"}).code == 1);
    CHECK(run({"limits", (data_dir / "malformed.json").string()}).code == 1);
}

TEST_CASE("field lists")
{
    auto fs_ = parse_field_list("f2,f3,q");
    REQUIRE(fs_.size() == 3);
    CHECK(fs_[2].is_rational());
    CHECK(parse_field_list("fp:101")[0].characteristic() == 101);
    CHECK(parse_field_list("f5")[0].characteristic() == 5);
    CHECK_THROWS_AS(parse_field_list("f4"), InputError);
    CHECK_THROWS_AS(parse_field_list("fp:9"), InputError);
    CHECK_THROWS_AS(parse_field_list(""), InputError);
}
