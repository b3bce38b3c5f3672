#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace facering {

/// Univariate polynomial in t with integer coefficients; coefficient k multiplies t^k.
/// Trailing zeros are trimmed, so equality is polynomial identity.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long long> coeffs) : c_(coeffs) { trim(); }
    explicit IntPoly(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly monomial(int degree, long long coeff = 1);
    /// (1 - t^j)
    static IntPoly one_minus_t_pow(int j);
    /// (1 - t)^e
    static IntPoly one_minus_t(int e);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    long long operator[](std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
    const std::vector<long long>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long long evaluate_at_one() const;

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    /// Power series p / (1 - t)^e up to t^max_degree.
    std::vector<long long> series_over_one_minus_t(int e, int max_degree) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<long long> c_;
};

} // namespace facering
