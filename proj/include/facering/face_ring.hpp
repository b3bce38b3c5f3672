#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "facering/complex.hpp"
#include "facering/exact_matrix.hpp"
#include "facering/polynomial.hpp"

namespace facering {

/// Monomial in the vertex variables v_1..v_m; exponents[i-1] is the power of v_i.
/// Degrees are algebraic (deg v_i = 1), half the topological grading.
struct Monomial {
    std::vector<int> exponents;

    static Monomial one(int m) { return {std::vector<int>(m, 0)}; }
    static Monomial variable(int m, int i);
    /// v_σ = product of v_j over j in σ.
    static Monomial squarefree(int m, Face sigma);

    int degree() const;
    Face support() const;
    Monomial times(const Monomial& other) const;
    Monomial times_variable(int i) const;
    std::string to_string() const;

    /// Canonical basis order: lexicographically descending exponent vectors (v_1^d first).
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exponents > b.exponents; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Basis of F(K)_d: monomials of degree d whose support is a face of K.
struct FaceRingDegree {
    int degree;
    std::vector<Monomial> basis;

    std::optional<std::size_t> index_of(const Monomial& mono) const;
    std::size_t size() const { return basis.size(); }
};

/// numerator(t) / (1 - t)^denominator_exponent, with the denominator kept at exponent n.
struct HilbertSeries {
    IntPoly numerator;
    int denominator_exponent;

    long long coefficient(int d) const;
    std::vector<long long> expand(int max_degree) const;
    /// Numerator rewritten over (1 - t)^exponent (exponent >= denominator_exponent).
    IntPoly numerator_over(int exponent) const;
    friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

/// True when v_i has support in K (it lies in the complex).
bool monomial_in_complex(const SimplicialComplex& k, const Monomial& mono);

FaceRingDegree monomial_basis(const SimplicialComplex& k, int degree);
HilbertSeries hilbert_series(const SimplicialComplex& k);
/// Matrix of multiplication by v_i from F(K)_d to F(K)_{d+1} in monomial bases.
ExactMatrix multiplication_matrix(const SimplicialComplex& k, int vertex, int degree, const FieldSpec& field);

} // namespace facering
