#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "facering/complex.hpp"
#include "facering/corpus.hpp"
#include "facering/field.hpp"
#include "facering/regularity.hpp"

namespace facering {

enum class Property { CM, Gorenstein, GorensteinStar };

std::string property_name(Property p);

/// First failing link in canonical face order, with the offending cohomological degree.
struct LinkWitness {
    Face face;
    int degree;
};

struct CriterionResult {
    bool holds;
    std::optional<LinkWitness> witness;
};

/// For every σ ∈ K (σ = ∅ included): H̃^i(link σ) = 0 for i < dim link σ.
CriterionResult reisner_check(const SimplicialComplex& k, const FieldSpec& field);
/// For every σ ∈ K: H̃^i(link σ) is F for i = dim link σ and 0 below.
CriterionResult spherical_check(const SimplicialComplex& k, const FieldSpec& field);

struct RouteResult {
    bool holds;
    std::string witness;  // empty when holds
};

struct Verdict {
    Property property;
    FieldSpec field;
    RouteResult topological;
    RouteResult algebraic;
    bool agree;
};

struct Classification {
    FieldSpec field;
    std::vector<Verdict> verdicts;  // CM, Gorenstein, GorensteinStar
    FreenessResult freeness;
    std::vector<long long> socle;
    long long socle_total;
    PdResult pd;
    bool reduced;

    const Verdict& verdict(Property p) const;
};

/// Throws ConsistencyError when pd_check and the socle test disagree.
Classification classify(const SimplicialComplex& k, const FieldSpec& field);
Classification classify(const SimplicialComplex& k, const QuotientAlgebra& a);

/// Throws ConsistencyError with the witness if the CM or Gorenstein* routes disagree.
void require_agreement(const SimplicialComplex& k, const Classification& c);

struct CheckTally {
    long long checked = 0;
    long long failed = 0;
};

struct Counterexample {
    std::string check;
    std::string complex_name;
    std::string field;
    std::string detail;
    SimplicialComplex complex;
};

struct CorpusEntry {
    std::string complex_name;
    std::string field;
    bool cm;
    bool gorenstein;
    bool gorenstein_star;
};

struct CrossValidationReport {
    std::optional<std::uint64_t> seed;
    std::size_t complexes = 0;
    std::vector<std::string> fields;
    std::map<std::string, CheckTally> checks;
    std::vector<Counterexample> counterexamples;
    std::vector<Counterexample> findings;  // plain Gorenstein route mismatches
    std::vector<CorpusEntry> entries;

    bool ok() const { return counterexamples.empty(); }
};

/// Runs both routes on every (K, F) and checks the structural identities relating them.
CrossValidationReport cross_validate(const std::vector<NamedComplex>& corpus, const std::vector<FieldSpec>& fields,
                                     std::optional<std::uint64_t> seed = std::nullopt);

} // namespace facering
