#pragma once

#include <optional>
#include <vector>

#include "facering/complex.hpp"
#include "facering/exact_matrix.hpp"
#include "facering/face_ring.hpp"
#include "facering/polynomial.hpp"

namespace facering {

/// The elementary symmetric polynomials θ_1..θ_n of F(K), θ_j = Σ v_τ over j-faces τ.
struct ThetaSystem {
    int n;
    std::vector<FaceRingDegree> bases;          // bases[j-1] = monomial_basis(K, j)
    std::vector<std::vector<long long>> coords;  // coords[j-1] in bases[j-1]
    std::vector<std::vector<Face>> terms;        // the faces τ with |τ| = j
};

/// Throws ConsistencyError if some e_j with j > n fails to vanish in F(K).
ThetaSystem theta_system(const SimplicialComplex& k);

/// Finite-dimensional graded algebra A = F(L) / (θ_1, ..., θ_r) with standard-monomial bases.
///
/// A is built one degree at a time as a quotient of V_1 ⊗ A_{d-1}; the multiplication maps
/// A_{d-1} -> A_d by each used vertex variable are recorded along the way, and every other
/// structure (projections, products, socle) is derived from them.
class QuotientAlgebra {
public:
    const FieldSpec& field() const { return field_; }
    const SimplicialComplex& complex() const { return complex_; }
    int theta_count() const { return theta_count_; }

    /// Last nonzero degree D.
    int top_degree() const { return static_cast<int>(bases_.size()) - 1; }
    std::vector<long long> dims() const;
    long long dim(int d) const;
    IntPoly hilbert_polynomial() const { return IntPoly(dims()); }
    /// Standard monomials representing a basis of A_d.
    const std::vector<Monomial>& basis(int d) const { return bases_.at(d); }
    /// Used vertices of the complex; ghost variables act as zero.
    const std::vector<int>& generators() const { return generators_; }

    /// (·v_i): A_d -> A_{d+1}. Zero for ghost vertices.
    ExactMatrix multiplication(int vertex, int d) const;
    /// Same map for generators()[g], without a copy; requires 0 <= d <= top_degree().
    const ExactMatrix& generator_action(std::size_t g, int d) const { return mult_.at(g).at(d); }
    /// Position of a vertex in generators(), or -1 for ghosts.
    int generator_index(int vertex) const;
    /// Coordinates of the class of a monomial in A_{deg}.
    ExactVector normal_form(const Monomial& mono) const;
    /// Matrix of F(L)_d -> A_d in the monomial basis of F(L)_d.
    ExactMatrix projection_matrix(int d) const;
    /// Coordinates of the product of basis elements a ∈ A_p and b ∈ A_q.
    ExactVector product(int p, std::size_t a, int q, std::size_t b) const;

private:
    friend QuotientAlgebra quotient_algebra(const SimplicialComplex&, int, const FieldSpec&);

    QuotientAlgebra(SimplicialComplex k, FieldSpec f, int r) : complex_(std::move(k)), field_(f), theta_count_(r) {}

    SimplicialComplex complex_;
    FieldSpec field_;
    int theta_count_;
    std::vector<int> generators_;
    std::vector<std::vector<Monomial>> bases_;
    std::vector<std::vector<ExactMatrix>> mult_;  // mult_[g][d]: A_d -> A_{d+1}, g indexes generators_
};

/// A = F(K)/(θ_1..θ_n).
QuotientAlgebra quotient_algebra(const SimplicialComplex& k, const FieldSpec& field);
/// F(L) modulo the first `theta_count` elementary symmetric polynomials restricted to L.
QuotientAlgebra quotient_algebra(const SimplicialComplex& l, int theta_count, const FieldSpec& field);

struct FreenessResult {
    bool is_free;
    std::optional<int> witness_degree;
    IntPoly quotient_series;  // Hilb(A)
    IntPoly expected_series;  // Hilb(F(K)) · Π_{j=1..n} (1 - t^j)
};

/// Hilb(A) == Hilb(F(K)) · Π(1 - t^j) decides whether θ is a regular sequence.
FreenessResult freeness_check(const SimplicialComplex& k, const QuotientAlgebra& a);
FreenessResult freeness_check(const SimplicialComplex& k, const FieldSpec& field);

/// dim of ∩_i ker(·v_i : A_d -> A_{d+1}) for d = 0..D.
std::vector<long long> socle_dims(const QuotientAlgebra& a);

struct PdResult {
    bool is_pd;
    int top_degree;
};

/// Poincaré duality: dim A_D = 1 and all pairings A_k × A_{D-k} -> A_D are perfect.
PdResult pd_check(const QuotientAlgebra& a);

/// dims[j][d] = dim Tor^{-j}_P(F(K), F)_d for 0 <= j <= n and 0 <= d <= max_degree.
struct TorTable {
    int n;
    int max_degree;
    std::vector<std::vector<long long>> dims;

    long long at(int j, int d) const { return dims.at(j).at(d); }
};

/// n(n+1)/2 + n.
int default_tor_degree(int n);

/// Homology of the Koszul complex F(K) ⊗ Λ(x_1..x_n) with d(x_i) = θ_i.
TorTable koszul_tor_dims(const SimplicialComplex& k, const FieldSpec& field, int max_degree);

/// dims of F(L) / (θ^K · F(L)) where θ^K_j is reduced into F(L). Requires L ⊆ K on the same labels.
std::vector<long long> ambient_quotient_dims(const SimplicialComplex& k, const SimplicialComplex& l,
                                             const FieldSpec& field);

} // namespace facering
