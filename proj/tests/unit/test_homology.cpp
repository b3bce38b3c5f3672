#include <catch2/catch_amalgamated.hpp>

#include "facering/corpus.hpp"
#include "facering/homology.hpp"
#include "support/common.hpp"

using namespace facering;
using testing_support::small_fields;

namespace {

oracle::IntMatrix to_int(const std::vector<std::vector<int>>& m)
{
    oracle::IntMatrix out;
    for (const auto& row : m)
        out.emplace_back(row.begin(), row.end());
    return out;
}

// rank over F_p (p = 0 for Q) from the Smith invariants of an integer matrix
std::size_t snf_rank(const oracle::IntMatrix& m, long long p)
{
    std::size_t r = 0;
    for (const auto& d : oracle::smith_invariants(m))
        if (d != 0 && (p == 0 || mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p)) == 0))
            ++r;
    return r;
}

std::vector<long long> snf_cohomology(const SimplicialComplex& k, long long p)
{
    auto ints = integer_coboundaries(k);
    std::vector<long long> sizes;
    for (int d = -1; d <= k.dim(); ++d)
        sizes.push_back(static_cast<long long>(k.faces_of_order(d + 1).size()));
    std::vector<std::size_t> ranks;
    for (const auto& m : ints)
        ranks.push_back(m.empty() || m[0].empty() ? 0 : snf_rank(to_int(m), p));
    std::vector<long long> out;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        long long h = sizes[i];
        if (i < ranks.size())
            h -= static_cast<long long>(ranks[i]);
        if (i >= 1)
            h -= static_cast<long long>(ranks[i - 1]);
        out.push_back(h);
    }
    return out;
}

} // namespace

TEST_CASE("coboundary of the void complex")
{
    auto c = coboundary_matrices(SimplicialComplex(2), FieldSpec::prime(2));
    CHECK(c.top_degree == -1);
    CHECK(c.bases.size() == 1);
    CHECK(c.coboundary.empty());
    CHECK(reduced_cohomology_dims(SimplicialComplex(2), FieldSpec::rational()).dims == std::vector<long long>{1});
}

TEST_CASE("coboundary signs on a single edge")
{
    auto k = SimplicialComplex::from_facets(2, {{1, 2}});
    for (const auto& f : small_fields()) {
        auto c = coboundary_matrices(k, f);
        CHECK(c.delta(-1) == ExactMatrix(f, {{1}, {1}}));
        CHECK(c.delta(0) == ExactMatrix(f, {{-1, 1}}));
    }
}

TEST_CASE("coboundary squares to zero")
{
    for (const auto& [name, k] : testing_support::corpus())
        for (const auto& f : small_fields()) {
            INFO(name << " " << f.name());
            auto c = coboundary_matrices(k, f);
            for (std::size_t i = 0; i + 1 < c.coboundary.size(); ++i)
                CHECK((c.coboundary[i + 1] * c.coboundary[i]).is_zero());
        }
}

TEST_CASE("integer coboundaries reduce to the field matrices")
{
    for (const auto& [name, k] : testing_support::corpus(20)) {
        auto ints = integer_coboundaries(k);
        for (const auto& f : small_fields()) {
            auto c = coboundary_matrices(k, f);
            REQUIRE(ints.size() == c.coboundary.size());
            for (std::size_t i = 0; i < ints.size(); ++i) {
                const std::size_t cols = c.coboundary[i].cols();
                CHECK(testing_support::to_exact(f, to_int(ints[i]), cols) == c.coboundary[i]);
            }
        }
    }
}

TEST_CASE("cohomology of small spheres")
{
    auto d2 = reduced_cohomology_dims(simplex_boundary(2), FieldSpec::prime(2));
    CHECK(d2.at(0) == 0);
    CHECK(d2.at(1) == 1);
    CHECK(d2.at(-1) == 0);
    CHECK(d2.at(7) == 0);
    for (int n = 1; n <= 4; ++n)
        for (const auto& f : small_fields()) {
            auto h = reduced_cohomology_dims(simplex_boundary(n), f);
            for (int d = -1; d <= n - 1; ++d)
                CHECK(h.at(d) == (d == n - 1 ? 1 : 0));
        }
    CHECK(reduced_cohomology_dims(simplex(3), FieldSpec::rational()).dims == std::vector<long long>{0, 0, 0, 0, 0});
    CHECK(reduced_cohomology_dims(points(4), FieldSpec::prime(3)).dims == std::vector<long long>{0, 3});
}

TEST_CASE("projective plane depends on the characteristic")
{
    auto rp = rp2_6();
    CHECK(reduced_cohomology_dims(rp, FieldSpec::prime(2)).dims == std::vector<long long>{0, 0, 1, 1});
    CHECK(reduced_cohomology_dims(rp, FieldSpec::prime(3)).dims == std::vector<long long>{0, 0, 0, 0});
    CHECK(reduced_cohomology_dims(rp, FieldSpec::rational()).dims == std::vector<long long>{0, 0, 0, 0});
    for (long long p : {0LL, 2LL, 3LL, 5LL}) {
        auto f = p == 0 ? FieldSpec::rational() : FieldSpec::prime(static_cast<std::uint32_t>(p));
        CHECK(reduced_cohomology_dims(rp, f).dims == snf_cohomology(rp, p));
    }
}

TEST_CASE("cohomology agrees with the Smith normal form oracle")
{
    for (const auto& [name, k] : testing_support::corpus(40))
        for (const auto& f : small_fields()) {
            INFO(name << " " << f.name());
            CHECK(reduced_cohomology_dims(k, f).dims == snf_cohomology(k, testing_support::characteristic(f)));
        }
}

TEST_CASE("reduced Euler characteristic")
{
    for (const auto& [name, k] : testing_support::corpus())
        for (const auto& f : small_fields()) {
            auto h = reduced_cohomology_dims(k, f);
            auto fv = k.f_vector();
            long long a = 0, b = 0;
            for (int d = -1; d <= k.dim(); ++d) {
                const long long s = (d + 2) % 2 == 0 ? -1 : 1;  // (-1)^d
                a += s * h.at(d);
                b += s * fv[d + 1];
            }
            CHECK(a == b);
        }
}

TEST_CASE("suspension shifts cohomology by one")
{
    for (const auto& [name, k] : testing_support::corpus(30)) {
        if (k.vertex_count() + 2 > max_vertices)
            continue;
        for (const auto& f : small_fields()) {
            INFO(name << " " << f.name());
            auto h = reduced_cohomology_dims(k, f);
            auto s = reduced_cohomology_dims(suspension(k), f);
            for (int d = -1; d <= k.dim() + 1; ++d)
                CHECK(s.at(d) == h.at(d - 1));
        }
    }
}

TEST_CASE("unreduced cohomology counts components")
{
    auto two = SimplicialComplex::from_facets(4, {{1, 2}, {3, 4}});
    CHECK(cohomology_dim(two, FieldSpec::rational(), 0) == 2);
    CHECK(cohomology_dim(cycle(5), FieldSpec::prime(2), 1) == 1);
    CHECK(cohomology_dim(cycle(5), FieldSpec::prime(2), 0) == 1);
    CHECK(cohomology_dim(SimplicialComplex(0), FieldSpec::prime(2), 0) == 0);
}

TEST_CASE("ghost labels do not affect cohomology")
{
    auto k = SimplicialComplex::from_facets(5, {{1, 2}, {2, 4}});
    CHECK(reduced_cohomology_dims(k, FieldSpec::rational()) ==
          reduced_cohomology_dims(compact(k).complex, FieldSpec::rational()));
}
