#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace facering {

/// Exact rational. Values whose reduced numerator and denominator fit in 62 bits are kept
/// inline; anything larger lives in a shared immutable GMP rational. The representation is
/// canonical, so equality is structural.
class Rational {
public:
    Rational() = default;
    Rational(long long n);  // NOLINT: integers convert implicitly
    explicit Rational(const mpz_class& z);
    explicit Rational(const mpq_class& q);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    int sign() const;
    bool is_small() const { return !big_; }
    mpq_class to_mpq() const;
    std::string to_string() const;

    Rational operator-() const;
    Rational inverse() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b);

private:
    static constexpr std::int64_t limit = std::int64_t{1} << 62;

    static Rational from_wide(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

} // namespace facering
