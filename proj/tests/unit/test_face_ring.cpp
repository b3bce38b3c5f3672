#include <catch2/catch_amalgamated.hpp>

#include "facering/corpus.hpp"
#include "facering/face_ring.hpp"
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

long long brute_count(const SimplicialComplex& k, int d)
{
    auto faces = face_bits(k);
    long long c = 0;
    for (const auto& e : oracle::all_monomials(k.vertex_count(), d))
        c += faces.contains(oracle::support(e));
    return c;
}

} // namespace

TEST_CASE("monomial bases of the triangle boundary")
{
    auto k = simplex_boundary(2);
    CHECK(monomial_basis(k, 0).size() == 1);
    CHECK(monomial_basis(k, 0).basis[0] == Monomial::one(3));
    CHECK(monomial_basis(k, 2).size() == 6);
    auto b3 = monomial_basis(k, 3);
    CHECK(b3.size() == 9);
    CHECK_FALSE(b3.index_of(Monomial::squarefree(3, Face::of({1, 2, 3}))).has_value());
    CHECK(b3.basis.front() == Monomial{{3, 0, 0}});
    CHECK(std::is_sorted(b3.basis.begin(), b3.basis.end()));
}

TEST_CASE("basis sizes match brute-force enumeration")
{
    for (const auto& [name, k] : testing_support::corpus(40)) {
        INFO(name);
        auto h = hilbert_series(k).expand(6);
        for (int d = 0; d <= 6; ++d) {
            const auto n = static_cast<long long>(monomial_basis(k, d).size());
            CHECK(n == brute_count(k, d));
            CHECK(n == h[d]);
        }
    }
}

TEST_CASE("hilbert series examples")
{
    auto s = hilbert_series(simplex_boundary(2));
    CHECK(s.denominator_exponent == 2);
    CHECK(s.numerator == IntPoly{1, 1, 1});
    CHECK(s.expand(5) == std::vector<long long>{1, 3, 6, 9, 12, 15});

    auto full = hilbert_series(simplex(1));
    CHECK(full.numerator == IntPoly{1});
    CHECK(full.denominator_exponent == 2);

    auto pts = hilbert_series(points(3));
    CHECK(pts.numerator == IntPoly{1, 2});
    CHECK(pts.expand(4) == std::vector<long long>{1, 3, 3, 3, 3});

    CHECK(hilbert_series(SimplicialComplex(2)).expand(3) == std::vector<long long>{1, 0, 0, 0});
}

TEST_CASE("hilbert series of a join is the product")
{
    auto corpus = testing_support::corpus(20);
    for (std::size_t i = 0; i < corpus.size(); i += 3)
        for (std::size_t j = 1; j < corpus.size(); j += 5) {
            const auto& k = corpus[i].complex;
            const auto& l = corpus[j].complex;
            if (k.vertex_count() + l.vertex_count() > 14)
                continue;
            INFO(corpus[i].name << " * " << corpus[j].name);
            auto hk = hilbert_series(k), hl = hilbert_series(l), hj = hilbert_series(join(k, l));
            CHECK(hj.denominator_exponent == hk.denominator_exponent + hl.denominator_exponent);
            CHECK(hj.numerator == hk.numerator * hl.numerator);
        }
}

TEST_CASE("vertex deletion exact sequence")
{
    for (const auto& [name, k] : testing_support::corpus()) {
        const int n = k.order();
        auto h = hilbert_series(k).numerator_over(n);
        for (int i : k.used_vertices()) {
            INFO(name << " vertex " << i);
            auto del = hilbert_series(full_subcomplex(k, Face::vertex(i)));
            auto st = hilbert_series(star(k, Face::vertex(i)));
            CHECK(h == del.numerator_over(n) + IntPoly{0, 1} * st.numerator_over(n));
        }
    }
}

TEST_CASE("multiplication matrices")
{
    auto k = simplex_boundary(2);
    for (const auto& f : small_fields()) {
        CHECK(multiplication_matrix(k, 1, 0, f) == ExactMatrix(f, {{1}, {0}, {0}}));
        auto m = multiplication_matrix(k, 1, 2, f);
        CHECK(m.rows() == 9);
        CHECK(m.cols() == 6);
        CHECK(rank(m) == 5);
        auto src = monomial_basis(k, 2);
        const auto v23 = *src.index_of(Monomial::squarefree(3, Face::of({2, 3})));
        for (std::size_t r = 0; r < m.rows(); ++r)
            CHECK(m.at(r, v23).is_zero());
    }

    auto ghost = SimplicialComplex::from_facets(3, {{1, 2}});
    for (int d = 0; d <= 3; ++d)
        CHECK(multiplication_matrix(ghost, 3, d, FieldSpec::prime(2)).is_zero());
}

TEST_CASE("multiplication matrices commute")
{
    for (const auto& [name, k] : testing_support::corpus(15))
        for (const auto& f : small_fields()) {
            const int m = k.vertex_count();
            for (int i = 1; i <= m; ++i)
                for (int j = i + 1; j <= m; ++j)
                    for (int d = 0; d <= 2; ++d) {
                        INFO(name << " " << f.name() << " " << i << "," << j << " d=" << d);
                        CHECK(multiplication_matrix(k, j, d + 1, f) * multiplication_matrix(k, i, d, f) ==
                              multiplication_matrix(k, i, d + 1, f) * multiplication_matrix(k, j, d, f));
                    }
        }
}

TEST_CASE("monomial helpers")
{
    auto x = Monomial::variable(3, 2).times(Monomial::squarefree(3, Face::of({1, 2})));
    CHECK(x.exponents == std::vector<int>{1, 2, 0});
    CHECK(x.degree() == 3);
    CHECK(x.support() == Face::of({1, 2}));
    CHECK(x.to_string() == "v1*v2^2");
    CHECK(Monomial::one(2).to_string() == "1");
}
