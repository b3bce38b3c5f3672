#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "facering/field.hpp"
#include "facering/matrix.hpp"

namespace facering {

/// A field element tagged with its field. Canonical per element.
class Scalar {
public:
    Scalar(const FieldSpec& field, long long value);
    Scalar(PrimeField f, std::uint32_t value) : field_(f.spec()), value_(value) {}
    Scalar(RationalField, Rational value) : field_(FieldSpec::rational()), value_(std::move(value)) {}

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    std::string to_string() const;

    template <class Field>
    typename Field::value_type get() const
    {
        return std::get<typename Field::value_type>(value_);
    }

    friend bool operator==(const Scalar&, const Scalar&) = default;

private:
    FieldSpec field_;
    std::variant<std::uint32_t, Rational> value_;
};

/// Dense exact matrix whose field is chosen at run time.
class ExactMatrix {
public:
    ExactMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols);
    ExactMatrix(const FieldSpec& field, std::initializer_list<std::initializer_list<long long>> rows);
    explicit ExactMatrix(Matrix<PrimeField> m) : field_(m.field().spec()), data_(std::move(m)) {}
    explicit ExactMatrix(Matrix<RationalField> m) : field_(FieldSpec::rational()), data_(std::move(m)) {}

    static ExactMatrix identity(const FieldSpec& field, std::size_t n);

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const;
    std::size_t cols() const;

    Scalar at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, long long value);
    void set(std::size_t r, std::size_t c, const Scalar& value);
    bool is_zero() const;

    template <class Field>
    const Matrix<Field>& as() const
    {
        return std::get<Matrix<Field>>(data_);
    }
    template <class Field>
    Matrix<Field>& as()
    {
        return std::get<Matrix<Field>>(data_);
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

private:
    FieldSpec field_;
    std::variant<Matrix<PrimeField>, Matrix<RationalField>> data_;
};

using ExactVector = std::vector<Scalar>;

std::size_t rank(const ExactMatrix& m);
std::vector<ExactVector> kernel_basis(const ExactMatrix& m);
/// Some x with m x = b, or nothing when inconsistent.
std::optional<ExactVector> solve(const ExactMatrix& m, const ExactVector& b);
/// Matrix-vector product.
ExactVector operator*(const ExactMatrix& m, const ExactVector& x);

} // namespace facering
