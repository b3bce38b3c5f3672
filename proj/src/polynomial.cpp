#include "facering/polynomial.hpp"

#include <numeric>

namespace facering {

IntPoly IntPoly::monomial(int degree, long long coeff)
{
    std::vector<long long> c(degree + 1, 0);
    c[degree] = coeff;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::one_minus_t_pow(int j)
{
    return IntPoly{1} - monomial(j);
}

IntPoly IntPoly::one_minus_t(int e)
{
    IntPoly p{1};
    for (int i = 0; i < e; ++i)
        p = p * IntPoly{1, -1};
    return p;
}

long long IntPoly::evaluate_at_one() const
{
    return std::accumulate(c_.begin(), c_.end(), 0LL);
}

IntPoly& IntPoly::operator+=(const IntPoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), 0);
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        c_[k] += o.c_[k];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), 0);
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        c_[k] -= o.c_[k];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<long long> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(c));
}

std::vector<long long> IntPoly::series_over_one_minus_t(int e, int max_degree) const
{
    std::vector<long long> s(max_degree + 1, 0);
    for (int k = 0; k <= max_degree; ++k)
        s[k] = (*this)[k];
    // Dividing by (1 - t) is a running prefix sum.
    for (int round = 0; round < e; ++round)
        for (int k = 1; k <= max_degree; ++k)
            s[k] += s[k - 1];
    return s;
}

std::string IntPoly::to_string() const
{
    if (c_.empty())
        return "0";
    std::string s;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0)
            continue;
        long long v = c_[k];
        if (!s.empty())
            s += v < 0 ? " - " : " + ";
        else if (v < 0)
            s += "-";
        long long a = v < 0 ? -v : v;
        if (k == 0 || a != 1)
            s += std::to_string(a);
        if (k >= 1)
            s += "t";
        if (k >= 2)
            s += "^" + std::to_string(k);
    }
    return s;
}

void IntPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

} // namespace facering
