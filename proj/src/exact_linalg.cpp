#include "facering/exact_matrix.hpp"

#include <charconv>

#include "facering/error.hpp"

namespace facering {

bool is_prime_number(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p)
{
    if (p >= (1u << 31) || !is_prime_number(p))
        throw InputError("field characteristic must be a prime below 2^31, got " + std::to_string(p));
    return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text)
{
    if (text == "q")
        return rational();
    if (text == "f2")
        return prime(2);
    if (text == "f3")
        return prime(3);
    if (text == "f5")
        return prime(5);
    if (text.starts_with("fp:")) {
        auto digits = text.substr(3);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty() && p < (1ull << 31))
            return prime(static_cast<std::uint32_t>(p));
    }
    throw InputError("unknown field flag '" + std::string(text) + "' (expected f2, f3, f5, fp:<p> or q)");
}

std::string FieldSpec::name() const
{
    if (is_rational())
        return "q";
    if (p_ == 2 || p_ == 3 || p_ == 5)
        return "f" + std::to_string(p_);
    return "fp:" + std::to_string(p_);
}

PrimeField::value_type PrimeField::inv(value_type a) const
{
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<value_type>(result);
}

Scalar::Scalar(const FieldSpec& field, long long value) : field_(field), value_(std::uint32_t{0})
{
    if (field.is_rational())
        value_ = RationalField{}.from_int(value);
    else
        value_ = PrimeField{field.characteristic()}.from_int(value);
}

bool Scalar::is_zero() const
{
    return std::visit([](const auto& v) { return v == 0; }, value_);
}

std::string Scalar::to_string() const
{
    if (auto* p = std::get_if<std::uint32_t>(&value_))
        return std::to_string(*p);
    return std::get<Rational>(value_).to_string();
}

ExactMatrix::ExactMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field),
      data_(with_field(field, [&](auto f) -> std::variant<Matrix<PrimeField>, Matrix<RationalField>> {
          return Matrix<decltype(f)>(f, rows, cols);
      }))
{
}

ExactMatrix::ExactMatrix(const FieldSpec& field, std::initializer_list<std::initializer_list<long long>> rows)
    : field_(field),
      data_(with_field(field, [&](auto f) -> std::variant<Matrix<PrimeField>, Matrix<RationalField>> {
          return Matrix<decltype(f)>::from_ints(f, rows);
      }))
{
}

ExactMatrix ExactMatrix::identity(const FieldSpec& field, std::size_t n)
{
    return with_field(field, [&](auto f) { return ExactMatrix(Matrix<decltype(f)>::identity(f, n)); });
}

std::size_t ExactMatrix::rows() const
{
    return std::visit([](const auto& m) { return m.rows(); }, data_);
}

std::size_t ExactMatrix::cols() const
{
    return std::visit([](const auto& m) { return m.cols(); }, data_);
}

Scalar ExactMatrix::at(std::size_t r, std::size_t c) const
{
    return std::visit([&](const auto& m) { return Scalar(m.field(), m(r, c)); }, data_);
}

void ExactMatrix::set(std::size_t r, std::size_t c, long long value)
{
    std::visit([&](auto& m) { m(r, c) = m.field().from_int(value); }, data_);
}

void ExactMatrix::set(std::size_t r, std::size_t c, const Scalar& value)
{
    if (!(value.field() == field_))
        throw InputError("scalar field does not match matrix field");
    std::visit([&](auto& m) {
        using F = std::decay_t<decltype(m.field())>;
        m(r, c) = value.get<F>();
    }, data_);
}

bool ExactMatrix::is_zero() const
{
    return std::visit([](const auto& m) { return m.is_zero(); }, data_);
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b)
{
    if (!(a.field_ == b.field_) || a.cols() != b.rows())
        throw InputError("matrix product: incompatible operands");
    return std::visit([&](const auto& x) {
        using M = std::decay_t<decltype(x)>;
        return ExactMatrix(x * std::get<M>(b.data_));
    }, a.data_);
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b)
{
    return a.field_ == b.field_ && a.data_ == b.data_;
}

std::size_t rank(const ExactMatrix& m)
{
    return with_field(m.field(), [&](auto f) { return rank(m.as<decltype(f)>()); });
}

std::vector<ExactVector> kernel_basis(const ExactMatrix& m)
{
    return with_field(m.field(), [&](auto f) {
        std::vector<ExactVector> out;
        for (auto& v : kernel_basis(m.as<decltype(f)>())) {
            ExactVector sv;
            for (auto& x : v)
                sv.emplace_back(f, x);
            out.push_back(std::move(sv));
        }
        return out;
    });
}

std::optional<ExactVector> solve(const ExactMatrix& m, const ExactVector& b)
{
    if (b.size() != m.rows())
        throw InputError("solve: right-hand side length does not match row count");
    return with_field(m.field(), [&](auto f) -> std::optional<ExactVector> {
        using F = decltype(f);
        std::vector<typename F::value_type> rhs;
        for (const auto& s : b)
            rhs.push_back(s.get<F>());
        auto x = solve(m.as<F>(), std::span<const typename F::value_type>(rhs));
        if (!x)
            return std::nullopt;
        ExactVector out;
        for (auto& v : *x)
            out.emplace_back(f, v);
        return out;
    });
}

ExactVector operator*(const ExactMatrix& m, const ExactVector& x)
{
    if (x.size() != m.cols())
        throw InputError("apply: vector length does not match column count");
    return with_field(m.field(), [&](auto f) {
        using F = decltype(f);
        std::vector<typename F::value_type> xs;
        for (const auto& s : x)
            xs.push_back(s.get<F>());
        ExactVector out;
        for (auto& v : m.as<F>().apply(std::span<const typename F::value_type>(xs)))
            out.emplace_back(f, v);
        return out;
    });
}

} // namespace facering
