#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "facering/complex.hpp"
#include "facering/exact_matrix.hpp"
#include "facering/sparse.hpp"

namespace facering {

/// Ascending: maps Φ(σ) -> Φ(τ) for σ ⊂ τ. Descending: maps Φ(τ) -> Φ(σ).
enum class Direction { Ascending, Descending };

/// Finite-dimensional functor on the face poset of K (optionally without ∅), given by
/// its values on faces and its matrices on covering pairs σ ⊂ τ with |τ| = |σ| + 1.
class PosetFunctor {
public:
    using CoverMaps = std::map<std::pair<std::uint64_t, std::uint64_t>, ExactMatrix>;

    /// dims[i] is the value dimension at objects()[i]; covers is keyed by (σ.bits(), τ.bits()).
    /// Missing cover maps are zero. Throws InputError on shape or functoriality violations.
    PosetFunctor(SimplicialComplex k, FieldSpec field, Direction direction, bool includes_empty_face,
                 std::vector<std::size_t> dims, CoverMaps covers);

    const SimplicialComplex& complex() const { return complex_; }
    const FieldSpec& field() const { return field_; }
    Direction direction() const { return direction_; }
    bool includes_empty_face() const { return includes_empty_face_; }
    /// Faces of K (∅ only if included), canonical order.
    const std::vector<Face>& objects() const { return objects_; }
    std::size_t dim(Face f) const;

    /// Composite along σ ⊂ ... ⊂ τ adding vertices in ascending order; identity when σ = τ.
    ExactMatrix map_between(Face sigma, Face tau) const;

private:
    ExactMatrix cover(Face sigma, Face tau) const;
    void check_functoriality() const;

    SimplicialComplex complex_;
    FieldSpec field_;
    Direction direction_;
    bool includes_empty_face_;
    std::vector<Face> objects_;
    std::map<std::uint64_t, std::size_t> dims_;
    CoverMaps covers_;
};

/// Cochains on strictly increasing chains c_0 < ... < c_r of the category (⊂ for descending
/// functors, ⊃ for ascending ones) with value Φ(c_0).
class NormalizedCochainComplex {
public:
    using Chain = std::vector<Face>;
    using Delta = std::variant<SparseMatrix<PrimeField>, SparseMatrix<RationalField>>;

    const FieldSpec& field() const { return field_; }
    /// Largest r with a chain of length r; -1 when there are no objects.
    int top_degree() const { return static_cast<int>(chains_.size()) - 1; }
    const std::vector<Chain>& chains(int r) const { return chains_.at(r); }
    std::size_t cochain_dim(int r) const;
    /// δ_r : C^r -> C^{r+1} as a (dim C^{r+1}) × (dim C^r) matrix.
    const Delta& delta(int r) const { return deltas_.at(r); }
    std::size_t delta_rank(int r) const;

private:
    friend NormalizedCochainComplex build_normalized_complex(const PosetFunctor&);

    explicit NormalizedCochainComplex(FieldSpec f) : field_(f) {}

    FieldSpec field_;
    std::vector<std::vector<Chain>> chains_;
    std::vector<std::size_t> dims_;
    std::vector<Delta> deltas_;
};

/// Throws ConsistencyError if δ∘δ ≠ 0.
NormalizedCochainComplex build_normalized_complex(const PosetFunctor& phi);

/// dim lim^i for i = 0..top_degree.
std::vector<long long> higher_limit_dims(const NormalizedCochainComplex& cx);

/// M = F^dim at every nonempty face with identity maps.
PosetFunctor constant_functor(const SimplicialComplex& k, const FieldSpec& field, std::size_t dim);
/// M = F^dim at ∅ and 0 elsewhere, on the poset including ∅.
PosetFunctor atomic_functor(const SimplicialComplex& k, const FieldSpec& field, std::size_t dim);
/// σ ↦ F(st σ)_d on nonempty faces, with restriction maps that kill monomials leaving the smaller star.
PosetFunctor star_functor(const SimplicialComplex& k, const FieldSpec& field, int degree);

struct StarIdentity {
    int degree;
    std::vector<long long> limits;
    std::vector<long long> expected;
    bool holds;
};

/// lim^i of the star functor in internal degree d against dim F(K)_d (d > 0) or dim H^i(K) (d = 0).
StarIdentity star_identity(const SimplicialComplex& k, const FieldSpec& field, int degree);

struct AtomicChain {
    int degree;  // i >= 1
    long long cohomology;
    long long constant_limit;
    long long atomic_limit;
    bool holds;
};

/// H^i(K) = lim^i(constant) = lim^{i+1}(atomic) for 1 <= i <= max(n, 1).
std::vector<AtomicChain> atomic_chain(const SimplicialComplex& k, const FieldSpec& field);

} // namespace facering
