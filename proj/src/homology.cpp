#include "facering/homology.hpp"

#include <algorithm>

namespace facering {

namespace {

std::vector<std::vector<Face>> graded_bases(const SimplicialComplex& k)
{
    std::vector<std::vector<Face>> bases;
    for (int order = 0; order <= k.order(); ++order)
        bases.push_back(k.faces_of_order(order));
    return bases;
}

std::size_t index_of(const std::vector<Face>& basis, Face f)
{
    return static_cast<std::size_t>(std::lower_bound(basis.begin(), basis.end(), f) - basis.begin());
}

} // namespace

std::vector<std::vector<std::vector<int>>> integer_coboundaries(const SimplicialComplex& k)
{
    auto bases = graded_bases(k);
    std::vector<std::vector<std::vector<int>>> out;
    for (std::size_t d = 0; d + 1 < bases.size(); ++d) {
        const auto& src = bases[d];
        const auto& dst = bases[d + 1];
        std::vector<std::vector<int>> m(dst.size(), std::vector<int>(src.size(), 0));
        for (std::size_t r = 0; r < dst.size(); ++r) {
            auto verts = dst[r].vertices();
            for (std::size_t pos = 0; pos < verts.size(); ++pos) {
                Face boundary = dst[r].minus(Face::vertex(verts[pos]));
                m[r][index_of(src, boundary)] = pos % 2 == 0 ? 1 : -1;
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

CochainComplexData coboundary_matrices(const SimplicialComplex& k, const FieldSpec& field)
{
    CochainComplexData data{k.dim(), graded_bases(k), {}};
    auto ints = integer_coboundaries(k);
    for (std::size_t d = 0; d < ints.size(); ++d) {
        ExactMatrix m(field, data.bases[d + 1].size(), data.bases[d].size());
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (ints[d][r][c] != 0)
                    m.set(r, c, ints[d][r][c]);
        data.coboundary.push_back(std::move(m));
    }
    return data;
}

CohomologyDims reduced_cohomology_dims(const SimplicialComplex& k, const FieldSpec& field)
{
    auto data = coboundary_matrices(k, field);
    std::vector<std::size_t> ranks;
    for (const auto& m : data.coboundary)
        ranks.push_back(rank(m));
    CohomologyDims out;
    for (std::size_t d = 0; d < data.bases.size(); ++d) {
        long long dim = static_cast<long long>(data.bases[d].size());
        if (d < ranks.size())
            dim -= static_cast<long long>(ranks[d]);
        if (d > 0)
            dim -= static_cast<long long>(ranks[d - 1]);
        out.dims.push_back(dim);
    }
    return out;
}

long long cohomology_dim(const SimplicialComplex& k, const FieldSpec& field, int degree)
{
    if (degree < 0)
        return 0;
    auto reduced = reduced_cohomology_dims(k, field).at(degree);
    if (degree == 0 && k.dim() >= 0)
        reduced += 1;
    return reduced;
}

} // namespace facering
