#include <catch2/catch_amalgamated.hpp>

#include "facering/corpus.hpp"
#include "facering/error.hpp"
#include "facering/homology.hpp"
#include "facering/regularity.hpp"
#include "support/common.hpp"

using namespace facering;
using testing_support::small_fields;

namespace {

std::set<std::uint64_t> face_bits(const SimplicialComplex& k)
{
    std::set<std::uint64_t> out;
    for (Face f : k.faces())
        out.insert(f.bits());
    return out;
}

std::vector<long long> trimmed(std::vector<long long> v)
{
    while (!v.empty() && v.back() == 0)
        v.pop_back();
    return v;
}

} // namespace

TEST_CASE("theta system")
{
    auto pts = theta_system(points(4));
    CHECK(pts.n == 1);
    CHECK(pts.terms[0].size() == 4);
    CHECK(pts.coords[0] == std::vector<long long>{1, 1, 1, 1});

    auto t = theta_system(simplex_boundary(2));
    CHECK(t.n == 2);
    CHECK(t.terms[1] == std::vector<Face>{Face::of({1, 2}), Face::of({1, 3}), Face::of({2, 3})});
    long long ones = 0;
    for (auto c : t.coords[1])
        ones += c;
    CHECK(ones == 3);
    CHECK(t.bases[1].size() == 6);

    auto full = theta_system(simplex(2));
    CHECK(full.n == 3);
    CHECK(full.terms[2] == std::vector<Face>{Face::of({1, 2, 3})});

    CHECK(theta_system(SimplicialComplex(3)).n == 0);
}

TEST_CASE("quotient algebra examples")
{
    for (const auto& f : small_fields()) {
        INFO(f.name());
        CHECK(quotient_algebra(points(4), f).dims() == std::vector<long long>{1, 3});
        CHECK(quotient_algebra(simplex_boundary(2), f).dims() == std::vector<long long>{1, 2, 2, 1});
        CHECK(quotient_algebra(simplex(2), f).dims() == std::vector<long long>{1, 2, 2, 1});
        auto e = quotient_algebra(SimplicialComplex(2), f);
        CHECK(e.dims() == std::vector<long long>{1});
        CHECK(e.top_degree() == 0);
    }
}

TEST_CASE("quotient dims match brute-force elimination")
{
    for (const auto& [name, k] : testing_support::corpus(40)) {
        const int n = k.order();
        const int cap = n * (n + 1) / 2 + 2;
        if (k.vertex_count() > 6 || cap > 9)
            continue;
        for (const auto& f : small_fields()) {
            INFO(name << " " << f.name());
            auto a = quotient_algebra(k, f);
            auto brute = oracle::brute_quotient_dims(k.vertex_count(), face_bits(k), n, cap,
                                                     testing_support::characteristic(f));
            CHECK(a.dims() == brute);
        }
    }
}

TEST_CASE("quotient algebra terminates within the bound")
{
    for (const auto& [name, k] : testing_support::corpus()) {
        const int n = k.order(), m = k.vertex_count();
        for (const auto& f : small_fields()) {
            auto a = quotient_algebra(k, f);
            CHECK(a.top_degree() <= n * (n + 1) / 2 + m * n);
            for (long long d : a.dims())
                CHECK(d > 0);
        }
    }
}

TEST_CASE("freeness examples")
{
    auto r = freeness_check(simplex_boundary(2), FieldSpec::prime(2));
    CHECK(r.is_free);
    CHECK_FALSE(r.witness_degree);
    CHECK(r.expected_series == IntPoly{1, 2, 2, 1});
    CHECK(r.quotient_series == IntPoly{1, 2, 2, 1});

    auto rp2 = freeness_check(rp2_6(), FieldSpec::prime(2));
    CHECK_FALSE(rp2.is_free);
    REQUIRE(rp2.witness_degree);
    const int w = *rp2.witness_degree;
    CHECK(rp2.quotient_series[w] > rp2.expected_series[w]);
    CHECK(freeness_check(rp2_6(), FieldSpec::prime(3)).is_free);
    CHECK(freeness_check(rp2_6(), FieldSpec::rational()).is_free);

    CHECK(freeness_check(SimplicialComplex(1), FieldSpec::prime(2)).is_free);
    CHECK_FALSE(freeness_check(SimplicialComplex::from_facets(4, {{1, 2}, {3, 4}}), FieldSpec::rational()).is_free);
}

TEST_CASE("first hilbert mismatch is an excess of the quotient")
{
    for (const auto& [name, k] : testing_support::corpus())
        for (const auto& f : small_fields()) {
            INFO(name << " " << f.name());
            auto r = freeness_check(k, f);
            const int top = std::max(r.quotient_series.degree(), r.expected_series.degree());
            std::optional<int> first;
            for (int d = 0; d <= top && !first; ++d)
                if (r.quotient_series[d] != r.expected_series[d])
                    first = d;
            CHECK(first.has_value() != r.is_free);
            CHECK(r.witness_degree == first);
            if (first)
                CHECK(r.quotient_series[*first] > r.expected_series[*first]);
        }
}

TEST_CASE("later coefficients may fall below the product")
{
    // A non-CM complex where Hilb(F(K))·Π(1-t^j) exceeds Hilb(A) past the top degree of A.
    auto k = SimplicialComplex::from_facets(6, {{3, 5}, {1, 2, 5}, {4, 5, 6}, {1, 2, 3, 6}, {1, 3, 4, 6}});
    auto r = freeness_check(k, FieldSpec::prime(2));
    CHECK(r.quotient_series == IntPoly{1, 5, 13, 17, 14, 8, 4, 1});
    CHECK(r.witness_degree == 5);
    CHECK(r.expected_series[10] == 2);
}

TEST_CASE("socle and duality examples")
{
    for (const auto& f : small_fields()) {
        auto a = quotient_algebra(simplex_boundary(2), f);
        CHECK(socle_dims(a) == std::vector<long long>{0, 0, 0, 1});
        auto pd = pd_check(a);
        CHECK(pd.is_pd);
        CHECK(pd.top_degree == 3);

        auto p3 = quotient_algebra(points(3), f);
        CHECK(socle_dims(p3) == std::vector<long long>{0, 2});
        CHECK_FALSE(pd_check(p3).is_pd);

        CHECK(socle_dims(quotient_algebra(points(2), f)) == std::vector<long long>{0, 1});
        auto e = pd_check(quotient_algebra(SimplicialComplex(1), f));
        CHECK(e.is_pd);
        CHECK(e.top_degree == 0);
    }
}

TEST_CASE("duality holds exactly when the socle is one-dimensional")
{
    for (const auto& [name, k] : testing_support::corpus())
        for (const auto& f : small_fields()) {
            INFO(name << " " << f.name());
            auto a = quotient_algebra(k, f);
            auto s = socle_dims(a);
            long long total = 0;
            for (auto x : s)
                total += x;
            CHECK(s.back() == a.dim(a.top_degree()));
            CHECK(pd_check(a).is_pd == (total == 1));
        }
}

TEST_CASE("products are commutative and associative")
{
    for (const auto& f : small_fields()) {
        auto a = quotient_algebra(simplex_boundary(3), f);
        for (std::size_t i = 0; i < a.basis(1).size(); ++i)
            for (std::size_t j = 0; j < a.basis(2).size(); ++j)
                CHECK(a.product(1, i, 2, j) == a.product(2, j, 1, i));
        for (int d = 0; d <= a.top_degree(); ++d)
            for (std::size_t i = 0; i < a.basis(d).size(); ++i)
                for (std::size_t j = 0; j < a.basis(d).size(); ++j)
                    CHECK(a.normal_form(a.basis(d)[i])[j] == Scalar(f, i == j ? 1 : 0));
    }
}

TEST_CASE("ghost vertices act as zero in the quotient")
{
    auto k = SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}});
    auto a = quotient_algebra(k, FieldSpec::rational());
    CHECK(a.generators() == std::vector<int>{1, 2, 3});
    CHECK(a.generator_index(4) == -1);
    for (int d = 0; d < a.top_degree(); ++d)
        CHECK(a.multiplication(4, d).is_zero());
}

TEST_CASE("tor examples")
{
    auto e = koszul_tor_dims(SimplicialComplex(2), FieldSpec::prime(2), 0);
    CHECK(e.dims == std::vector<std::vector<long long>>{{1}});

    const auto& rp = rp2_6();
    CHECK(default_tor_degree(3) == 9);
    auto t = koszul_tor_dims(rp, FieldSpec::prime(2), default_tor_degree(3));
    long long higher = 0;
    for (int d = 0; d <= 9; ++d)
        higher += t.at(1, d);
    CHECK(higher > 0);

    auto q = koszul_tor_dims(rp, FieldSpec::rational(), 9);
    for (int j = 1; j <= 3; ++j)
        for (int d = 0; d <= 9; ++d)
            CHECK(q.at(j, d) == 0);

    auto s = koszul_tor_dims(simplex_boundary(3), FieldSpec::prime(2), default_tor_degree(3));
    for (int j = 1; j <= 3; ++j)
        for (int d = 0; d <= s.max_degree; ++d)
            CHECK(s.at(j, d) == 0);
}

TEST_CASE("tor zero row is the quotient and freeness governs higher tor")
{
    for (const auto& [name, k] : testing_support::corpus(40)) {
        const int n = k.order();
        for (const auto& f : small_fields()) {
            INFO(name << " " << f.name());
            auto a = quotient_algebra(k, f);
            auto fr = freeness_check(k, a);
            const int dmax = default_tor_degree(n);
            auto t = koszul_tor_dims(k, f, dmax);
            for (int d = 0; d <= dmax; ++d)
                CHECK(t.at(0, d) == (d <= a.top_degree() ? a.dim(d) : 0));
            if (fr.is_free) {
                for (int j = 1; j <= n; ++j)
                    for (int d = 0; d <= dmax; ++d)
                        CHECK(t.at(j, d) == 0);
            } else {
                const int limit = std::min(dmax, *fr.witness_degree + n);
                long long tor1 = 0;
                for (int d = 0; d <= limit; ++d)
                    tor1 += t.at(1, d);
                CHECK(tor1 > 0);
            }
        }
    }
}

TEST_CASE("top degree of a free quotient is the top cohomology")
{
    for (const auto& [name, k] : testing_support::corpus())
        for (const auto& f : small_fields()) {
            auto a = quotient_algebra(k, f);
            if (!freeness_check(k, a).is_free)
                continue;
            INFO(name << " " << f.name());
            const int n = k.order(), top = n * (n + 1) / 2;
            CHECK(a.top_degree() <= top);
            const long long at_top = a.top_degree() == top ? a.dim(top) : 0;
            CHECK(at_top == reduced_cohomology_dims(k, f).at(n - 1));
        }
}

TEST_CASE("ambient quotient of a subcomplex")
{
    auto k = simplex_boundary(2);
    for (const auto& f : small_fields()) {
        CHECK(ambient_quotient_dims(k, star(k, Face::of({1})), f) == std::vector<long long>{1, 2, 1});
        for (const auto& [name, kk] : testing_support::corpus(10))
            CHECK(trimmed(ambient_quotient_dims(kk, kk, f)) == quotient_algebra(kk, f).dims());
    }
    CHECK_THROWS_AS(ambient_quotient_dims(points(3), simplex(2), FieldSpec::prime(2)), InputError);
}
