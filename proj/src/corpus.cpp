#include "facering/corpus.hpp"

#include <cmath>
#include <random>

#include "facering/error.hpp"

namespace facering {

namespace {

// Face enumeration is exponential in m; generators stay well inside that.
constexpr int max_generated_vertices = 24;

void check_size(int m, const char* what)
{
    if (m < 1 || m > max_generated_vertices)
        throw InputError(std::string(what) + ": vertex count must be in 1.." + std::to_string(max_generated_vertices));
}

} // namespace

SimplicialComplex simplex_boundary(int n)
{
    if (n < 1)
        throw InputError("simplex_boundary: n must be at least 1");
    check_size(n + 1, "simplex_boundary");
    const Face all = Face::range(n + 1);
    std::vector<Face> gens;
    for (int i = 1; i <= n + 1; ++i)
        gens.push_back(all.minus(Face::vertex(i)));
    return SimplicialComplex::closure(n + 1, gens);
}

SimplicialComplex simplex(int n)
{
    if (n < 0)
        throw InputError("simplex: n must be non-negative");
    check_size(n + 1, "simplex");
    return SimplicialComplex::full_simplex(n + 1, Face::range(n + 1));
}

SimplicialComplex points(int m)
{
    check_size(m, "points");
    std::vector<Face> gens;
    for (int i = 1; i <= m; ++i)
        gens.push_back(Face::vertex(i));
    return SimplicialComplex::closure(m, gens);
}

SimplicialComplex cycle(int m)
{
    if (m < 3)
        throw InputError("cycle: need at least 3 vertices");
    check_size(m, "cycle");
    std::vector<Face> gens;
    for (int i = 1; i <= m; ++i)
        gens.push_back(Face::vertex(i) | Face::vertex(i % m + 1));
    return SimplicialComplex::closure(m, gens);
}

SimplicialComplex path(int m)
{
    check_size(m, "path");
    if (m == 1)
        return points(1);
    std::vector<Face> gens;
    for (int i = 1; i < m; ++i)
        gens.push_back(Face::vertex(i) | Face::vertex(i + 1));
    return SimplicialComplex::closure(m, gens);
}

SimplicialComplex cone(const SimplicialComplex& k)
{
    return join(k, points(1));
}

SimplicialComplex suspension(const SimplicialComplex& k)
{
    return join(k, points(2));
}

SimplicialComplex rp2_6()
{
    return SimplicialComplex::from_facets(6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                              {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}});
}

SimplicialComplex random_complex(int m, double density, std::uint64_t seed)
{
    check_size(m, "random");
    if (!(density >= 0.0 && density <= 1.0))
        throw InputError("random: density must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Face> gens;
    const std::uint64_t subsets = std::uint64_t{1} << m;
    for (std::uint64_t s = 1; s < subsets; ++s) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < std::pow(density, std::popcount(s)))
            gens.push_back(Face(s));
    }
    return SimplicialComplex::closure(m, gens);
}

std::vector<NamedComplex> named_corpus()
{
    std::vector<NamedComplex> out;
    out.push_back({"void_face", SimplicialComplex(1)});
    for (int m = 1; m <= 4; ++m)
        out.push_back({"points_" + std::to_string(m), points(m)});
    for (int n = 1; n <= 4; ++n)
        out.push_back({"simplex_boundary_" + std::to_string(n), simplex_boundary(n)});
    out.push_back({"simplex_2", simplex(2)});
    out.push_back({"cone_simplex_boundary_2", cone(simplex_boundary(2))});
    out.push_back({"rp2_6", rp2_6()});
    out.push_back({"path_2", path(2)});
    out.push_back({"path_3", path(3)});
    out.push_back({"path_4", path(4)});
    out.push_back({"cycle_5", cycle(5)});
    out.push_back({"two_edges", SimplicialComplex::from_facets(4, {{1, 2}, {3, 4}})});
    out.push_back({"suspension_cycle_4", suspension(cycle(4))});
    out.push_back({"bowtie", SimplicialComplex::from_facets(5, {{1, 2, 3}, {3, 4, 5}})});
    out.push_back({"triangle_with_tail", SimplicialComplex::from_facets(4, {{1, 2, 3}, {3, 4}})});
    return out;
}

std::vector<NamedComplex> random_corpus(int count, int max_m, std::uint64_t seed)
{
    static constexpr double densities[] = {0.35, 0.55, 0.75};
    std::vector<NamedComplex> out;
    for (int i = 0; i < count; ++i) {
        const int m = 1 + i % max_m;
        const double density = densities[(i / max_m) % 3];
        const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
        out.push_back({"random_" + std::to_string(m) + "_" + std::to_string(i), random_complex(m, density, s)});
    }
    return out;
}

} // namespace facering
