#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "facering/rational.hpp"

namespace facering {

/// Coefficient field: a prime field F_p (2 <= p < 2^31) or the rationals.
class FieldSpec {
public:
    static FieldSpec prime(std::uint32_t p);
    static FieldSpec rational() { return FieldSpec(0); }

    /// Accepts "f2", "f3", "f5", "fp:<p>" and "q".
    static FieldSpec parse(std::string_view text);

    bool is_rational() const { return p_ == 0; }
    bool is_prime() const { return p_ != 0; }
    /// 0 for the rationals.
    std::uint32_t characteristic() const { return p_; }

    /// Canonical flag spelling; parse(name()) == *this.
    std::string name() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    explicit FieldSpec(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

bool is_prime_number(std::uint64_t n);

/// Arithmetic in F_p with canonical representatives 0..p-1.
struct PrimeField {
    using value_type = std::uint32_t;

    std::uint32_t p;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long long x) const
    {
        long long r = x % static_cast<long long>(p);
        return static_cast<value_type>(r < 0 ? r + p : r);
    }
    value_type add(value_type a, value_type b) const
    {
        std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p - b; }
    value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
    value_type mul(value_type a, value_type b) const
    {
        return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p);
    }
    value_type inv(value_type a) const;
    bool is_zero(value_type a) const { return a == 0; }
    bool is_one(value_type a) const { return a == 1; }
    /// a - c*b, the elimination kernel.
    value_type sub_mul(value_type a, value_type c, value_type b) const { return sub(a, mul(c, b)); }
    std::string to_string(value_type a) const { return std::to_string(a); }
    FieldSpec spec() const { return FieldSpec::prime(p); }
};

/// Arithmetic in Q; see Rational for the representation.
struct RationalField {
    using value_type = Rational;

    value_type zero() const { return {}; }
    value_type one() const { return 1; }
    value_type from_int(long long x) const { return x; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type inv(const value_type& a) const { return a.inverse(); }
    bool is_zero(const value_type& a) const { return a.is_zero(); }
    bool is_one(const value_type& a) const { return a.is_one(); }
    value_type sub_mul(const value_type& a, const value_type& c, const value_type& b) const
    {
        return a - c * b;
    }
    std::string to_string(const value_type& a) const { return a.to_string(); }
    FieldSpec spec() const { return FieldSpec::rational(); }
};

/// Runs fn with the arithmetic object matching spec; fn must return the same type for both.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn)
{
    if (spec.is_rational())
        return fn(RationalField{});
    return fn(PrimeField{spec.characteristic()});
}

} // namespace facering
