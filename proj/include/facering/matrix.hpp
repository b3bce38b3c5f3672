#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "facering/field.hpp"

namespace facering {

/// Dense row-major matrix over an exact field.
template <class Field>
class Matrix {
public:
    using value_type = typename Field::value_type;

    Matrix() = default;
    Matrix(Field field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero())
    {
    }

    static Matrix identity(Field field, std::size_t n)
    {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = field.one();
        return m;
    }

    static Matrix from_ints(Field field, std::initializer_list<std::initializer_list<long long>> rows)
    {
        std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
        Matrix m(field, rows.size(), cols);
        std::size_t i = 0;
        for (const auto& row : rows) {
            assert(row.size() == cols);
            std::size_t j = 0;
            for (long long x : row)
                m(i, j++) = field.from_int(x);
            ++i;
        }
        return m;
    }

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<value_type> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const value_type> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_,
                         data_.begin() + b * cols_);
    }

    bool is_zero() const
    {
        return std::all_of(data_.begin(), data_.end(), [&](const value_type& x) { return field_.is_zero(x); });
    }

    std::vector<value_type> apply(std::span<const value_type> x) const
    {
        assert(x.size() == cols_);
        std::vector<value_type> y(rows_, field_.zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!field_.is_zero((*this)(i, j)) && !field_.is_zero(x[j]))
                    y[i] = field_.add(y[i], field_.mul((*this)(i, j), x[j]));
        return y;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        assert(a.cols_ == b.rows_);
        const Field& f = a.field_;
        Matrix c(f, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const value_type& aik = a(i, k);
                if (f.is_zero(aik))
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!f.is_zero(b(k, j)))
                        c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
            }
        return c;
    }

    /// Stacks b below a (equal column counts).
    static Matrix vstack(const Matrix& a, const Matrix& b)
    {
        assert(a.cols_ == b.cols_);
        Matrix c(a.field_, a.rows_ + b.rows_, a.cols_);
        std::copy(a.data_.begin(), a.data_.end(), c.data_.begin());
        std::copy(b.data_.begin(), b.data_.end(), c.data_.begin() + a.data_.size());
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    Field field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<value_type> data_;
};

/// Reduced row echelon form: pivot entries are 1 and pivot columns are otherwise zero.
template <class Field>
struct Echelon {
    Matrix<Field> reduced;
    std::vector<std::size_t> pivots;
};

namespace detail {

// Plain Gauss-Jordan with first-nonzero pivot.
template <class Field>
Echelon<Field> gauss_jordan(Matrix<Field> m)
{
    const Field& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t i = r;
        while (i < m.rows() && f.is_zero(m(i, c)))
            ++i;
        if (i == m.rows())
            continue;
        m.swap_rows(i, r);
        auto inv = f.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) = f.mul(m(r, j), inv);
        for (std::size_t k = 0; k < m.rows(); ++k) {
            if (k == r || f.is_zero(m(k, c)))
                continue;
            auto factor = m(k, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!f.is_zero(m(r, j)))
                    m(k, j) = f.sub_mul(m(k, j), factor, m(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

// Fraction-free (Bareiss) forward elimination on the row-wise integer scaling of m.
// Returns the integer echelon rows (rank many) and their pivot columns.
inline std::pair<std::vector<std::vector<mpz_class>>, std::vector<std::size_t>>
bareiss_echelon(const Matrix<RationalField>& m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        std::vector<mpq_class> q(cols);
        mpz_class scale = 1;
        for (std::size_t j = 0; j < cols; ++j) {
            if (m(i, j).is_zero())
                continue;
            q[j] = m(i, j).to_mpq();
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q[j].get_den_mpz_t());
        }
        for (std::size_t j = 0; j < cols; ++j) {
            if (sgn(q[j]) == 0)
                continue;
            mpq_class scaled = q[j] * scale;
            a[i][j] = scaled.get_num();
        }
    }

    std::vector<std::size_t> pivots;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t i = r;
        while (i < rows && sgn(a[i][c]) == 0)
            ++i;
        if (i == rows)
            continue;
        std::swap(a[i], a[r]);
        const mpz_class& piv = a[r][c];
        for (std::size_t k = r + 1; k < rows; ++k) {
            const mpz_class lead = a[k][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class t = piv * a[k][j] - lead * a[r][j];
                mpz_divexact(a[k][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[k][c] = 0;
        }
        prev = a[r][c];
        pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    return {std::move(a), std::move(pivots)};
}

inline Echelon<RationalField> bareiss_rref(const Matrix<RationalField>& m)
{
    auto [ints, pivots] = bareiss_echelon(m);
    const std::size_t r = ints.size(), cols = m.cols();
    Matrix<RationalField> out(RationalField{}, m.rows(), cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            out(i, j) = Rational(ints[i][j]);
    // Back substitution: normalise each pivot row and clear its column above.
    for (std::size_t i = r; i-- > 0;) {
        const std::size_t c = pivots[i];
        const Rational inv = out(i, c).inverse();
        for (std::size_t j = c; j < cols; ++j)
            if (!out(i, j).is_zero())
                out(i, j) *= inv;
        for (std::size_t k = 0; k < i; ++k) {
            if (out(k, c).is_zero())
                continue;
            const Rational factor = out(k, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!out(i, j).is_zero())
                    out(k, j) -= factor * out(i, j);
        }
    }
    return {std::move(out), std::move(pivots)};
}

} // namespace detail

/// Row reduction; rationals go through fraction-free elimination, prime fields through plain Gauss.
template <class Field>
Echelon<Field> row_reduce(const Matrix<Field>& m)
{
    if constexpr (std::is_same_v<Field, RationalField>)
        return detail::bareiss_rref(m);
    else
        return detail::gauss_jordan(m);
}

template <class Field>
std::size_t rank(const Matrix<Field>& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    if constexpr (std::is_same_v<Field, RationalField>)
        return detail::bareiss_echelon(m).second.size();
    else
        return detail::gauss_jordan(m).pivots.size();
}

/// Basis of the right null space, one vector per non-pivot column.
template <class Field>
std::vector<std::vector<typename Field::value_type>> kernel_basis(const Matrix<Field>& m)
{
    const Field& f = m.field();
    auto ech = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ech.pivots)
        is_pivot[c] = true;
    std::vector<std::vector<typename Field::value_type>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<typename Field::value_type> v(m.cols(), f.zero());
        v[free] = f.one();
        for (std::size_t i = 0; i < ech.pivots.size(); ++i)
            v[ech.pivots[i]] = f.neg(ech.reduced(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some x with m x = b, or nothing when the system is inconsistent.
template <class Field>
std::optional<std::vector<typename Field::value_type>> solve(const Matrix<Field>& m,
                                                             std::span<const typename Field::value_type> b)
{
    assert(b.size() == m.rows());
    const Field& f = m.field();
    Matrix<Field> aug(f, m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto ech = row_reduce(aug);
    if (!ech.pivots.empty() && ech.pivots.back() == m.cols())
        return std::nullopt;
    std::vector<typename Field::value_type> x(m.cols(), f.zero());
    for (std::size_t i = 0; i < ech.pivots.size(); ++i)
        x[ech.pivots[i]] = ech.reduced(i, m.cols());
    return x;
}

} // namespace facering
