#include <catch_amalgamated.hpp>

#include "facering/error.hpp"
#include "facering/exact_matrix.hpp"
#include "facering/sparse.hpp"
#include "support/common.hpp"

using namespace facering;
using testing_support::characteristic;
using testing_support::random_int_matrix;
using testing_support::small_fields;
using testing_support::to_exact;

TEST_CASE("field flags parse to the expected fields")
{
    CHECK(FieldSpec::parse("f2") == FieldSpec::prime(2));
    CHECK(FieldSpec::parse("f3") == FieldSpec::prime(3));
    CHECK(FieldSpec::parse("f5") == FieldSpec::prime(5));
    CHECK(FieldSpec::parse("fp:101") == FieldSpec::prime(101));
    CHECK(FieldSpec::parse("q") == FieldSpec::rational());
    CHECK(FieldSpec::parse(FieldSpec::prime(7).name()) == FieldSpec::prime(7));
    CHECK_THROWS_AS(FieldSpec::parse("fp:4"), InputError);
    CHECK_THROWS_AS(FieldSpec::parse("fp:"), InputError);
    CHECK_THROWS_AS(FieldSpec::parse("r"), InputError);
    CHECK_THROWS_AS(FieldSpec::prime(1), InputError);
}

TEST_CASE("prime field inverses")
{
    std::mt19937_64 rng(1);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 65521u, 2147483647u}) {
        PrimeField f{p};
        for (int t = 0; t < 200; ++t) {
            auto a = static_cast<std::uint32_t>(rng() % p);
            if (a == 0)
                continue;
            CHECK(f.mul(a, f.inv(a)) == 1);
            CHECK(f.add(a, f.neg(a)) == 0);
        }
    }
}

TEST_CASE("rational fast path matches GMP, including overflow into big values")
{
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<long long> small(-50, 50);
    std::uniform_int_distribution<long long> huge(-(1LL << 61), 1LL << 61);
    for (int t = 0; t < 2000; ++t) {
        const bool big = t % 3 == 0;
        long long an = big ? huge(rng) : small(rng), bn = big ? huge(rng) : small(rng);
        long long ad = 1 + (rng() % 12), bd = 1 + (rng() % 12);
        Rational a = Rational(an) / Rational(ad), b = Rational(bn) / Rational(bd);
        mpq_class qa(mpz_class(std::to_string(an)), mpz_class(std::to_string(ad)));
        mpq_class qb(mpz_class(std::to_string(bn)), mpz_class(std::to_string(bd)));
        qa.canonicalize();
        qb.canonicalize();
        CHECK((a + b).to_mpq() == qa + qb);
        CHECK((a - b).to_mpq() == qa - qb);
        CHECK((a * b).to_mpq() == qa * qb);
        if (bn != 0)
            CHECK((a / b).to_mpq() == qa / qb);
        // Canonical representation: the same value always compares equal.
        CHECK(a * b == Rational(mpq_class(qa * qb)));
    }
    Rational x(1LL << 61);
    Rational y = x * x * x;
    CHECK_FALSE(y.is_small());
    CHECK((y / (x * x)).is_small());
    CHECK(y / (x * x) == x);
    CHECK(Rational(3).inverse().to_string() == "1/3");
    CHECK((-Rational(3)).to_string() == "-3");
}

TEST_CASE("rank plus nullity equals the column count")
{
    std::mt19937_64 rng(3);
    for (const auto& f : small_fields())
        for (int t = 0; t < 60; ++t) {
            const std::size_t rows = rng() % 9, cols = 1 + rng() % 9;
            auto ints = random_int_matrix(rng, rows, cols, -3, 3, 0.5);
            const auto m = to_exact(f, ints, cols);
            const auto ker = kernel_basis(m);
            CHECK(rank(m) + ker.size() == cols);
            for (const auto& v : ker) {
                auto image = m * v;
                CHECK(std::all_of(image.begin(), image.end(), [](const Scalar& s) { return s.is_zero(); }));
            }
        }
}

TEST_CASE("rank agrees with the naive oracle")
{
    std::mt19937_64 rng(4);
    for (const auto& f : small_fields())
        for (int t = 0; t < 80; ++t) {
            const std::size_t rows = 1 + rng() % 10, cols = 1 + rng() % 10;
            auto ints = random_int_matrix(rng, rows, cols, -4, 4, 0.6);
            CHECK(rank(to_exact(f, ints)) == oracle::rank_over(ints, characteristic(f)));
        }
}

TEST_CASE("rank over Q bounds rank over F_p from above")
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        auto ints = random_int_matrix(rng, 1 + rng() % 8, 1 + rng() % 8, -6, 6, 0.7);
        const auto q = rank(to_exact(FieldSpec::rational(), ints));
        for (std::uint32_t p : {2u, 3u, 5u})
            CHECK(q >= rank(to_exact(FieldSpec::prime(p), ints)));
    }
}

TEST_CASE("rational elimination handles fractional entries")
{
    // Rows 2 and 3 are 1/2 and 2/3 times row 1.
    Matrix<RationalField> m(RationalField{}, 3, 3);
    const Rational half = Rational(1) / Rational(2), third = Rational(2) / Rational(3);
    const Rational row[] = {Rational(3), Rational(1) / Rational(5), Rational(-7)};
    for (int j = 0; j < 3; ++j) {
        m(0, j) = row[j];
        m(1, j) = half * row[j];
        m(2, j) = third * row[j];
    }
    CHECK(rank(m) == 1);
    m(2, 2) = m(2, 2) + Rational(1) / Rational(9);
    CHECK(rank(m) == 2);
    const auto ech = row_reduce(m);
    CHECK(ech.pivots == std::vector<std::size_t>{0, 2});
    CHECK(ech.reduced(0, 0).is_one());
    CHECK(ech.reduced(1, 2).is_one());
    CHECK(ech.reduced(0, 2).is_zero());
}

TEST_CASE("solve returns a solution or reports inconsistency")
{
    std::mt19937_64 rng(6);
    for (const auto& f : small_fields())
        for (int t = 0; t < 40; ++t) {
            auto ints = random_int_matrix(rng, 1 + rng() % 6, 1 + rng() % 6, -3, 3, 0.6);
            const auto m = to_exact(f, ints);
            ExactVector x;
            for (std::size_t j = 0; j < m.cols(); ++j)
                x.emplace_back(f, static_cast<long long>(rng() % 5) - 2);
            const auto b = m * x;
            auto sol = solve(m, b);
            REQUIRE(sol.has_value());
            CHECK(m * *sol == b);
        }
    const auto m = ExactMatrix(FieldSpec::rational(), {{1, 1}, {2, 2}});
    CHECK_FALSE(solve(m, {Scalar(FieldSpec::rational(), 1), Scalar(FieldSpec::rational(), 3)}).has_value());
}

TEST_CASE("elimination is deterministic")
{
    std::mt19937_64 rng(7);
    for (const auto& f : small_fields()) {
        const auto m = to_exact(f, random_int_matrix(rng, 7, 9, -2, 2, 0.5));
        with_field(f, [&](auto fld) {
            using F = decltype(fld);
            const auto a = row_reduce(m.as<F>());
            const auto b = row_reduce(m.as<F>());
            CHECK(a.pivots == b.pivots);
            CHECK(a.reduced == b.reduced);
            return 0;
        });
    }
}

TEST_CASE("sparse rank equals dense rank")
{
    std::mt19937_64 rng(8);
    for (const auto& f : small_fields())
        for (int t = 0; t < 60; ++t) {
            const std::size_t rows = 1 + rng() % 25, cols = 1 + rng() % 25;
            auto ints = random_int_matrix(rng, rows, cols, -2, 2, 0.12);
            with_field(f, [&](auto fld) {
                SparseMatrix<decltype(fld)> s(fld, rows, cols);
                for (std::size_t i = 0; i < rows; ++i)
                    for (std::size_t j = 0; j < cols; ++j)
                        s.add(i, j, fld.from_int(ints[i][j]));
                CHECK(rank(s) == oracle::rank_over(ints, characteristic(f)));
                return 0;
            });
        }
}

TEST_CASE("matrix product and identity")
{
    const auto f = FieldSpec::prime(5);
    const auto a = ExactMatrix(f, {{1, 2}, {3, 4}});
    CHECK(a * ExactMatrix::identity(f, 2) == a);
    CHECK((a * a).at(0, 0) == Scalar(f, 7));
    CHECK((a * a).at(1, 1).to_string() == "2");  // 22 mod 5
}
