#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "facering/complex.hpp"

namespace facering {

/// ∂Δⁿ: all proper subsets of {1..n+1}.
SimplicialComplex simplex_boundary(int n);
/// Δⁿ on {1..n+1}.
SimplicialComplex simplex(int n);
/// m isolated vertices.
SimplicialComplex points(int m);
/// The m-gon, m >= 3.
SimplicialComplex cycle(int m);
/// Path with m vertices, m >= 1.
SimplicialComplex path(int m);
/// Cone with apex m+1.
SimplicialComplex cone(const SimplicialComplex& k);
/// Join with two points.
SimplicialComplex suspension(const SimplicialComplex& k);
/// Six-vertex projective plane.
SimplicialComplex rp2_6();

/// Each nonempty S ⊆ {1..m} becomes a generating face with probability density^|S|.
/// Portable: only raw mt19937_64 outputs are used.
SimplicialComplex random_complex(int m, double density, std::uint64_t seed);

struct NamedComplex {
    std::string name;
    SimplicialComplex complex;
};

/// Small hand-picked complexes covering the base cases.
std::vector<NamedComplex> named_corpus();
/// `count` random complexes on 1..max_m vertices; member i uses seed + i.
std::vector<NamedComplex> random_corpus(int count, int max_m, std::uint64_t seed);

} // namespace facering
