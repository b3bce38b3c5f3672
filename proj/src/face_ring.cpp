#include "facering/face_ring.hpp"

#include <algorithm>

#include "facering/error.hpp"

namespace facering {

Monomial Monomial::variable(int m, int i)
{
    Monomial x = one(m);
    x.exponents[i - 1] = 1;
    return x;
}

Monomial Monomial::squarefree(int m, Face sigma)
{
    Monomial x = one(m);
    for (int v : sigma.vertices())
        x.exponents[v - 1] = 1;
    return x;
}

int Monomial::degree() const
{
    int d = 0;
    for (int e : exponents)
        d += e;
    return d;
}

Face Monomial::support() const
{
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] > 0)
            bits |= std::uint64_t{1} << i;
    return Face(bits);
}

Monomial Monomial::times(const Monomial& other) const
{
    Monomial x = *this;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        x.exponents[i] += other.exponents[i];
    return x;
}

Monomial Monomial::times_variable(int i) const
{
    Monomial x = *this;
    ++x.exponents[i - 1];
    return x;
}

std::string Monomial::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += "v" + std::to_string(i + 1);
        if (exponents[i] > 1)
            s += "^" + std::to_string(exponents[i]);
    }
    return s.empty() ? "1" : s;
}

std::optional<std::size_t> FaceRingDegree::index_of(const Monomial& mono) const
{
    auto it = std::lower_bound(basis.begin(), basis.end(), mono);
    if (it == basis.end() || !(*it == mono))
        return std::nullopt;
    return static_cast<std::size_t>(it - basis.begin());
}

long long HilbertSeries::coefficient(int d) const
{
    return expand(d)[d];
}

std::vector<long long> HilbertSeries::expand(int max_degree) const
{
    return numerator.series_over_one_minus_t(denominator_exponent, max_degree);
}

IntPoly HilbertSeries::numerator_over(int exponent) const
{
    return numerator * IntPoly::one_minus_t(exponent - denominator_exponent);
}

bool monomial_in_complex(const SimplicialComplex& k, const Monomial& mono)
{
    return k.contains(mono.support());
}

namespace {

// All exponent vectors of total degree d with support exactly `verts`.
void compositions(const std::vector<int>& verts, std::size_t pos, int remaining, Monomial& current,
                  std::vector<Monomial>& out)
{
    if (pos + 1 == verts.size()) {
        current.exponents[verts[pos] - 1] = remaining;
        out.push_back(current);
        current.exponents[verts[pos] - 1] = 0;
        return;
    }
    const int rest = static_cast<int>(verts.size() - pos - 1);
    for (int e = 1; e <= remaining - rest; ++e) {
        current.exponents[verts[pos] - 1] = e;
        compositions(verts, pos + 1, remaining - e, current, out);
    }
    current.exponents[verts[pos] - 1] = 0;
}

} // namespace

FaceRingDegree monomial_basis(const SimplicialComplex& k, int degree)
{
    if (degree < 0)
        throw InputError("monomial_basis: negative degree");
    FaceRingDegree out{degree, {}};
    const int m = k.vertex_count();
    if (degree == 0) {
        out.basis.push_back(Monomial::one(m));
        return out;
    }
    Monomial scratch = Monomial::one(m);
    for (Face sigma : k.faces()) {
        if (sigma.empty() || sigma.order() > degree)
            continue;
        compositions(sigma.vertices(), 0, degree, scratch, out.basis);
    }
    std::sort(out.basis.begin(), out.basis.end());
    return out;
}

HilbertSeries hilbert_series(const SimplicialComplex& k)
{
    const int n = k.order();
    IntPoly num;
    for (Face sigma : k.faces())
        num += IntPoly::monomial(sigma.order()) * IntPoly::one_minus_t(n - sigma.order());
    return {num, n};
}

ExactMatrix multiplication_matrix(const SimplicialComplex& k, int vertex, int degree, const FieldSpec& field)
{
    if (vertex < 1 || vertex > k.vertex_count())
        throw InputError("multiplication_matrix: vertex label out of range");
    auto src = monomial_basis(k, degree);
    auto dst = monomial_basis(k, degree + 1);
    ExactMatrix m(field, dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        Monomial target = src.basis[c].times_variable(vertex);
        if (!monomial_in_complex(k, target))
            continue;
        m.set(*dst.index_of(target), c, 1);
    }
    return m;
}

} // namespace facering
