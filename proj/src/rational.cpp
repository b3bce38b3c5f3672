#include "facering/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace facering {

namespace {

using u128 = unsigned __int128;

u128 abs128(__int128 x)
{
    return x < 0 ? static_cast<u128>(-(x + 1)) + 1 : static_cast<u128>(x);
}

u128 gcd128(u128 a, u128 b)
{
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class to_mpz(__int128 x)
{
    const u128 mag = abs128(x);
    mpz_class z(static_cast<unsigned long>(mag >> 64));
    z <<= 64;
    z += static_cast<unsigned long>(mag & ~std::uint64_t{0});
    return x < 0 ? mpz_class(-z) : z;
}

} // namespace

Rational::Rational(long long n)
{
    if (n > -limit && n < limit) {
        num_ = n;
    } else {
        big_ = std::make_shared<const mpq_class>(mpz_class(std::to_string(n)));
    }
}

Rational::Rational(const mpz_class& z) : Rational(mpq_class(z)) {}

Rational::Rational(const mpq_class& q)
{
    mpq_class c = q;
    c.canonicalize();
    const mpz_class& n = c.get_num();
    const mpz_class& d = c.get_den();
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 62 && mpz_sizeinbase(d.get_mpz_t(), 2) <= 62) {
        num_ = n.get_si();
        den_ = d.get_si();
    } else {
        big_ = std::make_shared<const mpq_class>(std::move(c));
    }
}

Rational Rational::from_wide(__int128 num, __int128 den)
{
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const u128 g = gcd128(abs128(num), static_cast<u128>(den));
    if (g > 1) {
        num /= static_cast<__int128>(g);
        den /= static_cast<__int128>(g);
    }
    if (num > -limit && num < limit && den < limit) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }
    mpq_class q(to_mpz(num), to_mpz(den));
    Rational r;
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
}

int Rational::sign() const
{
    if (big_)
        return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const
{
    if (big_)
        return *big_;
    mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
    return q;
}

std::string Rational::to_string() const
{
    if (big_)
        return big_->get_str();
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const
{
    if (big_)
        return Rational(mpq_class(-*big_));
    Rational r = *this;
    r.num_ = -num_;
    return r;
}

Rational Rational::inverse() const
{
    if (is_zero())
        throw std::domain_error("Rational: inverse of zero");
    if (big_)
        return Rational(mpq_class(1 / *big_));
    Rational r;
    r.num_ = num_ < 0 ? -den_ : den_;
    r.den_ = num_ < 0 ? -num_ : num_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b)
{
    if (a.big_ || b.big_)
        return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
    if (a.den_ == 1 && b.den_ == 1)
        return Rational::from_wide(static_cast<__int128>(a.num_) + b.num_, 1);
    if (a.den_ == b.den_)
        return Rational::from_wide(static_cast<__int128>(a.num_) + b.num_, a.den_);
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                               static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b)
{
    return a + (-b);
}

Rational operator*(const Rational& a, const Rational& b)
{
    if (a.big_ || b.big_)
        return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
    if (a.num_ == 0 || b.num_ == 0)
        return Rational();
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

bool operator==(const Rational& a, const Rational& b)
{
    if (a.big_ || b.big_)
        return a.big_ && b.big_ && *a.big_ == *b.big_;
    return a.num_ == b.num_ && a.den_ == b.den_;
}

} // namespace facering
