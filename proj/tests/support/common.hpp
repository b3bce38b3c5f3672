#pragma once

#include <random>
#include <vector>

#include "facering/corpus.hpp"
#include "facering/exact_matrix.hpp"
#include "facering/field.hpp"
#include "support/oracles.hpp"

namespace testing_support {

inline std::vector<facering::FieldSpec> small_fields()
{
    return {facering::FieldSpec::prime(2), facering::FieldSpec::prime(3), facering::FieldSpec::rational()};
}

/// Characteristic as the oracles expect it (0 for Q).
inline long long characteristic(const facering::FieldSpec& f)
{
    return f.is_rational() ? 0 : f.characteristic();
}

/// Named corpus plus a slice of the random corpus.
inline std::vector<facering::NamedComplex> corpus(int random_count = 60, std::uint64_t seed = 7)
{
    auto out = facering::named_corpus();
    auto extra = facering::random_corpus(random_count, 6, seed);
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
}

inline oracle::IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo, int hi,
                                           double density = 1.0)
{
    std::uniform_int_distribution<int> val(lo, hi);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    oracle::IntMatrix m(rows, std::vector<long long>(cols, 0));
    for (auto& row : m)
        for (auto& x : row)
            if (coin(rng) < density)
                x = val(rng);
    return m;
}

inline facering::ExactMatrix to_exact(const facering::FieldSpec& f, const oracle::IntMatrix& m, std::size_t cols = 0)
{
    const std::size_t rows = m.size();
    if (rows)
        cols = m[0].size();
    facering::ExactMatrix out(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            out.set(i, j, m[i][j]);
    return out;
}

} // namespace testing_support
