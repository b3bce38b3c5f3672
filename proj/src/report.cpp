#include "facering/report.hpp"

#include <sstream>

#include "facering/error.hpp"
#include "facering/face_ring.hpp"
#include "facering/homology.hpp"
#include "facering/regularity.hpp"

#ifndef FACERING_VERSION
#define FACERING_VERSION "0.0.0"
#endif

namespace facering {

using nlohmann::ordered_json;

std::string tool_version()
{
    return FACERING_VERSION;
}

std::vector<FieldSpec> parse_field_list(const std::string& text)
{
    std::vector<FieldSpec> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty())
            out.push_back(FieldSpec::parse(item));
    if (out.empty())
        throw InputError("empty field list");
    return out;
}

namespace {

ordered_json faces_json(const std::vector<Face>& faces)
{
    ordered_json j = ordered_json::array();
    for (Face f : faces)
        j.push_back(f.vertices());
    return j;
}

ordered_json route_json(const RouteResult& r)
{
    ordered_json j;
    j["holds"] = r.holds;
    if (!r.holds)
        j["witness"] = r.witness;
    return j;
}

ordered_json cohomology_json(const CohomologyDims& h)
{
    ordered_json j;
    j["first_degree"] = -1;
    j["dims"] = h.dims;
    return j;
}

} // namespace

AnalysisResult analyze(const ComplexDocument& doc, const AnalysisOptions& options)
{
    const SimplicialComplex k = doc.complex();
    const int n = k.order();
    const int d_max = options.d_max.value_or(default_tor_degree(n));
    if (d_max < 0)
        throw InputError("d_max must be non-negative");
    const auto core = core_decomposition(k);

    AnalysisResult result;
    ordered_json& r = result.report;
    r["schema"] = report_schema;
    r["tool"] = "facering";
    r["version"] = tool_version();
    r["name"] = doc.name;
    r["m"] = doc.m;
    if (doc.metadata.is_object() && doc.metadata.contains("seed"))
        r["seed"] = doc.metadata["seed"];
    r["report_only"] = options.report_only;

    ordered_json profile;
    profile["dim"] = k.dim();
    profile["n"] = n;
    profile["f_vector"] = k.f_vector();
    profile["pure"] = k.is_pure();
    profile["reduced"] = core.is_reduced;
    profile["cone_points"] = core.apex.vertices();
    profile["used_vertices"] = k.used_vertices();
    profile["facets"] = faces_json(k.facets());
    profile["minimal_missing_faces"] = faces_json(minimal_missing_faces(k));
    r["profile"] = profile;

    auto problem = [&](const std::string& what) {
        if (!options.report_only)
            throw ConsistencyError(doc.name + ": " + what);
        result.problems.push_back(what);
    };

    ordered_json blocks = ordered_json::array();
    ordered_json findings = ordered_json::array();
    const auto hs = hilbert_series(k);
    for (const auto& field : options.fields) {
        ordered_json b;
        b["field"] = field.name();
        const auto h = reduced_cohomology_dims(k, field);
        b["reduced_cohomology"] = cohomology_json(h);

        ordered_json links = ordered_json::array();
        for (Face sigma : k.faces()) {
            const auto lk = link(k, sigma);
            ordered_json e;
            e["face"] = sigma.vertices();
            e["link_dim"] = lk.dim();
            e["reduced_cohomology"] = reduced_cohomology_dims(lk, field).dims;
            links.push_back(e);
        }
        b["link_cohomology"] = links;

        ordered_json hj;
        hj["numerator"] = hs.numerator.coefficients();
        hj["denominator_exponent"] = hs.denominator_exponent;
        b["hilbert_series"] = hj;

        const auto a = quotient_algebra(k, field);
        const auto c = classify(k, a);
        b["quotient_dims"] = a.dims();
        b["socle_dims"] = c.socle;
        ordered_json fr;
        fr["free"] = c.freeness.is_free;
        if (c.freeness.witness_degree)
            fr["witness_degree"] = *c.freeness.witness_degree;
        fr["quotient_series"] = c.freeness.quotient_series.coefficients();
        fr["expected_series"] = c.freeness.expected_series.coefficients();
        b["freeness"] = fr;
        ordered_json pd;
        pd["holds"] = c.pd.is_pd;
        pd["top_degree"] = c.pd.top_degree;
        b["poincare_duality"] = pd;

        const auto tor = koszul_tor_dims(k, field, d_max);
        ordered_json tj;
        tj["max_degree"] = d_max;
        tj["dims"] = tor.dims;
        b["tor"] = tj;

        ordered_json checks;
        bool tor0 = true;
        for (int d = 0; d <= d_max; ++d)
            tor0 = tor0 && tor.at(0, d) == a.dim(d);
        checks["tor0_matches_quotient"] = tor0;
        if (!tor0)
            problem("Tor^0 differs from the quotient algebra over " + field.name());

        bool higher_vanish = true;
        std::optional<int> first_tor1;
        for (int j = 1; j <= n; ++j)
            for (int d = 0; d <= d_max; ++d)
                if (tor.at(j, d) != 0) {
                    higher_vanish = false;
                    if (j == 1 && !first_tor1)
                        first_tor1 = d;
                }
        if (c.freeness.is_free) {
            checks["free_implies_tor_vanishing"] = higher_vanish;
            if (!higher_vanish)
                problem("free over " + field.name() + " but some higher Tor is nonzero");
            const int top = n * (n + 1) / 2;
            const bool law = a.top_degree() <= top && a.dim(top) == h.at(n - 1);
            checks["cm_top_degree"] = law;
            if (!law)
                problem("top degree of the quotient disagrees with H^{n-1} over " + field.name());
        } else if (*c.freeness.witness_degree + n <= d_max) {
            const bool ok = first_tor1 && *first_tor1 <= *c.freeness.witness_degree + n;
            checks["tor1_detects_non_freeness"] = ok;
            if (!ok)
                problem("not free over " + field.name() + " but Tor^-1 vanishes up to the witness bound");
        }
        b["checks"] = checks;

        ordered_json verdicts = ordered_json::array();
        for (const auto& v : c.verdicts) {
            ordered_json vj;
            vj["property"] = property_name(v.property);
            vj["topological"] = route_json(v.topological);
            vj["algebraic"] = route_json(v.algebraic);
            vj["agree"] = v.agree;
            verdicts.push_back(vj);
            if (v.agree)
                continue;
            const std::string msg = property_name(v.property) + " routes disagree over " + field.name() + ": " +
                                    (v.topological.holds ? v.algebraic.witness : v.topological.witness);
            if (v.property == Property::Gorenstein)
                findings.push_back(msg);
            else
                problem(msg);
        }
        b["verdicts"] = verdicts;
        blocks.push_back(b);
    }
    r["fields"] = blocks;
    r["findings"] = findings;
    r["problems"] = result.problems;
    r["agree"] = result.problems.empty();
    return result;
}

namespace {

std::string join_ints(const ordered_json& arr)
{
    std::string s;
    for (const auto& x : arr) {
        if (!s.empty())
            s += " ";
        s += x.dump();
    }
    return s;
}

} // namespace

std::string render_text(const ordered_json& r)
{
    std::ostringstream out;
    const auto& p = r["profile"];
    out << r["name"].get<std::string>() << ": m=" << r["m"] << " dim=" << p["dim"] << " f=(" << join_ints(p["f_vector"])
        << ")" << (p["pure"].get<bool>() ? " pure" : " impure") << (p["reduced"].get<bool>() ? " reduced" : " cone")
        << "\n";
    for (const auto& b : r["fields"]) {
        out << "  [" << b["field"].get<std::string>() << "] H~ from -1: " << join_ints(b["reduced_cohomology"]["dims"])
            << " | A: " << join_ints(b["quotient_dims"]) << " | socle: " << join_ints(b["socle_dims"]) << "\n";
        for (const auto& v : b["verdicts"]) {
            out << "    " << v["property"].get<std::string>() << ": topological "
                << (v["topological"]["holds"].get<bool>() ? "yes" : "no") << ", algebraic "
                << (v["algebraic"]["holds"].get<bool>() ? "yes" : "no") << (v["agree"].get<bool>() ? "" : "  DISAGREE")
                << "\n";
        }
    }
    for (const auto& f : r["findings"])
        out << "  finding: " << f.get<std::string>() << "\n";
    for (const auto& f : r["problems"])
        out << "  problem: " << f.get<std::string>() << "\n";
    return out.str();
}

ordered_json crossval_json(const CrossValidationReport& rep)
{
    ordered_json j;
    j["schema"] = report_schema;
    j["tool"] = "facering";
    j["version"] = tool_version();
    if (rep.seed)
        j["seed"] = *rep.seed;
    j["complexes"] = rep.complexes;
    j["fields"] = rep.fields;
    ordered_json checks = ordered_json::object();
    for (const auto& [id, t] : rep.checks) {
        ordered_json c;
        c["checked"] = t.checked;
        c["failed"] = t.failed;
        checks[id] = c;
    }
    j["checks"] = checks;
    auto examples = [](const std::vector<Counterexample>& list) {
        ordered_json arr = ordered_json::array();
        for (const auto& c : list) {
            ordered_json e;
            e["check"] = c.check;
            e["complex"] = c.complex_name;
            e["field"] = c.field;
            e["detail"] = c.detail;
            e["document"] = document_json(ComplexDocument::from_complex(c.complex_name, c.complex));
            arr.push_back(e);
        }
        return arr;
    };
    j["counterexamples"] = examples(rep.counterexamples);
    j["findings"] = examples(rep.findings);
    ordered_json entries = ordered_json::array();
    for (const auto& e : rep.entries) {
        ordered_json x;
        x["complex"] = e.complex_name;
        x["field"] = e.field;
        x["CM"] = e.cm;
        x["Gorenstein"] = e.gorenstein;
        x["GorensteinStar"] = e.gorenstein_star;
        entries.push_back(x);
    }
    j["entries"] = entries;
    j["ok"] = rep.ok();
    return j;
}

std::string render_crossval_text(const CrossValidationReport& rep)
{
    std::ostringstream out;
    out << "cross-validation: " << rep.complexes << " complexes";
    if (rep.seed)
        out << ", seed " << *rep.seed;
    out << "\n";
    for (const auto& [id, t] : rep.checks)
        out << "  " << id << ": " << t.checked << " checked, " << t.failed << " failed\n";
    for (const auto& c : rep.counterexamples)
        out << "  COUNTEREXAMPLE " << c.check << " on " << c.complex_name << " over " << c.field << ": " << c.detail
            << "\n";
    for (const auto& c : rep.findings)
        out << "  finding " << c.check << " on " << c.complex_name << " over " << c.field << ": " << c.detail << "\n";
    return out.str();
}

} // namespace facering
