#pragma once

#include <vector>

#include "facering/complex.hpp"
#include "facering/exact_matrix.hpp"

namespace facering {

/// Augmented simplicial cochain complex. Degree d has the faces of order d+1 as basis
/// (degree -1 is {∅}); coboundary[d+1] is δ_d : C^d -> C^{d+1}.
struct CochainComplexData {
    int top_degree;                        // dim K
    std::vector<std::vector<Face>> bases;  // bases[d+1], d = -1..dim K
    std::vector<ExactMatrix> coboundary;   // coboundary[d+1], d = -1..dim K-1

    const std::vector<Face>& basis(int d) const { return bases[d + 1]; }
    const ExactMatrix& delta(int d) const { return coboundary[d + 1]; }
};

/// Reduced Betti numbers dim H̃^d(K; F) for d = -1..dim K.
struct CohomologyDims {
    std::vector<long long> dims;  // dims[d+1]

    long long at(int d) const
    {
        return d + 1 < 0 || d + 1 >= static_cast<int>(dims.size()) ? 0 : dims[d + 1];
    }
    int min_degree() const { return -1; }
    int max_degree() const { return static_cast<int>(dims.size()) - 2; }
    friend bool operator==(const CohomologyDims&, const CohomologyDims&) = default;
};

/// Integer coboundary matrices with sign (-1)^k for dropping the k-th vertex (0-based).
std::vector<std::vector<std::vector<int>>> integer_coboundaries(const SimplicialComplex& k);

CochainComplexData coboundary_matrices(const SimplicialComplex& k, const FieldSpec& field);
CohomologyDims reduced_cohomology_dims(const SimplicialComplex& k, const FieldSpec& field);

/// Unreduced dim H^i(K; F); H^0 counts connected components.
long long cohomology_dim(const SimplicialComplex& k, const FieldSpec& field, int degree);

} // namespace facering
