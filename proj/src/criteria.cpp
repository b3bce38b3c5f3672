#include "facering/criteria.hpp"

#include <algorithm>
#include <unordered_map>

#include "facering/error.hpp"
#include "facering/homology.hpp"

namespace facering {

std::string property_name(Property p)
{
    switch (p) {
    case Property::CM:
        return "CM";
    case Property::Gorenstein:
        return "Gorenstein";
    case Property::GorensteinStar:
        return "GorensteinStar";
    }
    return "?";
}

namespace {

// Returns the first degree violating the link condition, if any.
std::optional<int> link_failure(const SimplicialComplex& lk, const FieldSpec& field, bool spherical)
{
    const auto h = reduced_cohomology_dims(lk, field);
    const int top = lk.dim();
    for (int i = -1; i < top; ++i)
        if (h.at(i) != 0)
            return i;
    if (spherical && h.at(top) != 1)
        return top;
    return std::nullopt;
}

CriterionResult link_criterion(const SimplicialComplex& k, const FieldSpec& field, bool spherical)
{
    for (Face sigma : k.faces())
        if (auto bad = link_failure(link(k, sigma), field, spherical))
            return {false, LinkWitness{sigma, *bad}};
    return {true, std::nullopt};
}

RouteResult from_criterion(const CriterionResult& r, const std::string& what)
{
    if (r.holds)
        return {true, ""};
    return {false, what + " fails at link of " + r.witness->face.to_string() + " in degree " +
                       std::to_string(r.witness->degree)};
}

std::string freeness_witness(const FreenessResult& f)
{
    return "Hilbert series mismatch at degree " + std::to_string(*f.witness_degree);
}

} // namespace

CriterionResult reisner_check(const SimplicialComplex& k, const FieldSpec& field)
{
    return link_criterion(k, field, false);
}

CriterionResult spherical_check(const SimplicialComplex& k, const FieldSpec& field)
{
    return link_criterion(k, field, true);
}

const Verdict& Classification::verdict(Property p) const
{
    for (const auto& v : verdicts)
        if (v.property == p)
            return v;
    throw std::out_of_range("classification lacks " + property_name(p));
}

Classification classify(const SimplicialComplex& k, const FieldSpec& field)
{
    return classify(k, quotient_algebra(k, field));
}

Classification classify(const SimplicialComplex& k, const QuotientAlgebra& a)
{
    const FieldSpec& field = a.field();
    Classification c{field, {}, freeness_check(k, a), socle_dims(a), 0, pd_check(a), false};
    for (auto s : c.socle)
        c.socle_total += s;
    if (c.pd.is_pd != (c.socle_total == 1))
        throw ConsistencyError("Poincare duality test and socle dimension disagree on " + to_string(k));
    const auto core = core_decomposition(k);
    c.reduced = core.is_reduced;

    const bool free = c.freeness.is_free;
    const bool socle_one = c.socle_total == 1;
    auto algebraic_gorenstein = [&]() -> RouteResult {
        if (!free)
            return {false, freeness_witness(c.freeness)};
        if (!socle_one)
            return {false, "socle dimension " + std::to_string(c.socle_total)};
        return {true, ""};
    };

    RouteResult cm_alg = free ? RouteResult{true, ""} : RouteResult{false, freeness_witness(c.freeness)};
    RouteResult cm_top = from_criterion(reisner_check(k, field), "Reisner condition");
    c.verdicts.push_back({Property::CM, field, cm_top, cm_alg, cm_top.holds == cm_alg.holds});

    RouteResult g_alg = algebraic_gorenstein();
    RouteResult g_top = from_criterion(spherical_check(core.core, field), "core sphericity");
    c.verdicts.push_back({Property::Gorenstein, field, g_top, g_alg, g_top.holds == g_alg.holds});

    RouteResult gs_alg = algebraic_gorenstein();
    if (gs_alg.holds && !c.reduced)
        gs_alg = {false, "cone points " + core.apex.to_string()};
    RouteResult gs_top = from_criterion(spherical_check(k, field), "sphericity");
    c.verdicts.push_back({Property::GorensteinStar, field, gs_top, gs_alg, gs_top.holds == gs_alg.holds});
    return c;
}

void require_agreement(const SimplicialComplex& k, const Classification& c)
{
    for (Property p : {Property::CM, Property::GorensteinStar}) {
        const Verdict& v = c.verdict(p);
        if (v.agree)
            continue;
        const RouteResult& rejecting = v.topological.holds ? v.algebraic : v.topological;
        throw ConsistencyError(property_name(p) + " routes disagree over " + c.field.name() + " on " + to_string(k) +
                               ": " + rejecting.witness);
    }
}

namespace {

struct LinkVerdicts {
    bool cm;
    bool gorenstein_star;
};

// Algebraic verdicts of links, shared across faces and complexes with the same compacted shape.
class LinkCache {
public:
    explicit LinkCache(FieldSpec field) : field_(field) {}

    const LinkVerdicts& get(const SimplicialComplex& lk)
    {
        auto compacted = compact(lk).complex;
        std::string key = std::to_string(compacted.vertex_count());
        for (Face f : compacted.faces())
            key += "," + std::to_string(f.bits());
        auto it = cache_.find(key);
        if (it != cache_.end())
            return it->second;
        auto a = quotient_algebra(compacted, field_);
        const bool free = freeness_check(compacted, a).is_free;
        long long socle = 0;
        for (auto s : socle_dims(a))
            socle += s;
        const bool gs = free && socle == 1 && core_decomposition(compacted).is_reduced;
        return cache_.emplace(std::move(key), LinkVerdicts{free, gs}).first->second;
    }

private:
    FieldSpec field_;
    std::unordered_map<std::string, LinkVerdicts> cache_;
};

} // namespace

CrossValidationReport cross_validate(const std::vector<NamedComplex>& corpus, const std::vector<FieldSpec>& fields,
                                     std::optional<std::uint64_t> seed)
{
    CrossValidationReport report;
    report.seed = seed;
    report.complexes = corpus.size();
    for (const auto& f : fields)
        report.fields.push_back(f.name());
    if (corpus.empty())
        return report;

    for (const auto& field : fields) {
        LinkCache cache(field);
        for (const auto& [name, k] : corpus) {
            auto check = [&](const std::string& id, bool ok, const std::string& detail) {
                auto& tally = report.checks[id];
                ++tally.checked;
                if (!ok) {
                    ++tally.failed;
                    report.counterexamples.push_back({id, name, field.name(), detail, k});
                }
            };

            const auto c = classify(k, field);
            const auto& cm = c.verdict(Property::CM);
            const auto& gor = c.verdict(Property::Gorenstein);
            const auto& gs = c.verdict(Property::GorensteinStar);
            const bool cm_alg = cm.algebraic.holds;
            const bool gs_alg = gs.algebraic.holds;
            report.entries.push_back({name, field.name(), cm_alg, gor.algebraic.holds, gs_alg});

            check("cm_routes_agree", cm.agree,
                  "topological " + std::to_string(cm.topological.holds) + ", algebraic " + std::to_string(cm_alg));
            check("gorenstein_star_routes_agree", gs.agree,
                  "topological " + std::to_string(gs.topological.holds) + ", algebraic " + std::to_string(gs_alg));
            check("pd_equals_socle_one", c.pd.is_pd == (c.socle_total == 1),
                  "socle dimension " + std::to_string(c.socle_total));
            if (!gor.agree)
                report.findings.push_back({"gorenstein_routes_agree", name, field.name(),
                                           "core sphericity " + std::to_string(gor.topological.holds) +
                                               ", algebraic " + std::to_string(gor.algebraic.holds),
                                           k});
            if (cm_alg)
                check("cm_implies_pure", k.is_pure(), "CM complex with facets of different orders");

            const auto h = reduced_cohomology_dims(k, field);
            const int n = k.order();

            // Proper links, algebraic route.
            bool links_cm = true, links_gs = true;
            for (Face tau : k.faces()) {
                if (tau.empty())
                    continue;
                const auto& lv = cache.get(link(k, tau));
                links_cm = links_cm && lv.cm;
                links_gs = links_gs && lv.gorenstein_star;
            }
            bool low_vanishing = true;
            for (int r = -1; r < n - 1; ++r)
                low_vanishing = low_vanishing && h.at(r) == 0;
            check("cm_link_recursion", cm_alg == (links_cm && low_vanishing),
                  "CM " + std::to_string(cm_alg) + ", links CM " + std::to_string(links_cm) +
                      ", low cohomology vanishes " + std::to_string(low_vanishing));

            bool sphere_cohomology = true;
            for (int r = -1; r <= n - 1; ++r)
                sphere_cohomology = sphere_cohomology && h.at(r) == (r == n - 1 ? 1 : 0);
            check("gorenstein_star_link_recursion", gs_alg == (links_gs && sphere_cohomology),
                  "Gorenstein* " + std::to_string(gs_alg) + ", links Gorenstein* " + std::to_string(links_gs) +
                      ", sphere cohomology " + std::to_string(sphere_cohomology));

            if (cm_alg)
                check("cm_links_cm", links_cm, "a proper link is not CM");
            if (gs_alg)
                check("gorenstein_star_links_gorenstein_star", links_gs, "a proper link is not Gorenstein*");

            if (gor.algebraic.holds) {
                const long long top = h.at(n - 1);
                check("gorenstein_reduced_iff_top_cohomology",
                      c.reduced ? top == 1 : top == 0,
                      "reduced " + std::to_string(c.reduced) + ", top cohomology " + std::to_string(top));
            }

            if (gs.topological.holds)
                for (int i : k.used_vertices()) {
                    const auto deletion = full_subcomplex(k, Face::vertex(i));
                    const bool ok = reisner_check(deletion, field).holds &&
                                    reduced_cohomology_dims(deletion, field).at(n - 1) == 0;
                    check("spherical_deletion_cm", ok, "deleting vertex " + std::to_string(i));
                }
        }
    }
    return report;
}

} // namespace facering
