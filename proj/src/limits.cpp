#include "facering/limits.hpp"

#include <algorithm>

#include "facering/error.hpp"
#include "facering/face_ring.hpp"
#include "facering/homology.hpp"

namespace facering {

PosetFunctor::PosetFunctor(SimplicialComplex k, FieldSpec field, Direction direction, bool includes_empty_face,
                           std::vector<std::size_t> dims, CoverMaps covers)
    : complex_(std::move(k)), field_(field), direction_(direction), includes_empty_face_(includes_empty_face),
      covers_(std::move(covers))
{
    for (Face f : complex_.faces())
        if (includes_empty_face_ || !f.empty())
            objects_.push_back(f);
    if (dims.size() != objects_.size())
        throw InputError("poset functor: expected " + std::to_string(objects_.size()) + " value dimensions, got " +
                         std::to_string(dims.size()));
    for (std::size_t i = 0; i < objects_.size(); ++i)
        dims_[objects_[i].bits()] = dims[i];

    for (const auto& [key, mat] : covers_) {
        const Face sigma(key.first), tau(key.second);
        if (!dims_.contains(sigma.bits()) || !dims_.contains(tau.bits()) || !tau.contains(sigma) ||
            tau.order() != sigma.order() + 1)
            throw InputError("poset functor: " + sigma.to_string() + " < " + tau.to_string() +
                             " is not a covering pair of the poset");
        if (!(mat.field() == field_))
            throw InputError("poset functor: map over the wrong field");
        const std::size_t src = direction_ == Direction::Ascending ? dim(sigma) : dim(tau);
        const std::size_t dst = direction_ == Direction::Ascending ? dim(tau) : dim(sigma);
        if (mat.rows() != dst || mat.cols() != src)
            throw InputError("poset functor: map for " + sigma.to_string() + " < " + tau.to_string() +
                             " has the wrong shape");
    }
    check_functoriality();
}

std::size_t PosetFunctor::dim(Face f) const
{
    auto it = dims_.find(f.bits());
    if (it == dims_.end())
        throw InputError("poset functor: " + f.to_string() + " is not an object");
    return it->second;
}

ExactMatrix PosetFunctor::cover(Face sigma, Face tau) const
{
    auto it = covers_.find({sigma.bits(), tau.bits()});
    if (it != covers_.end())
        return it->second;
    return direction_ == Direction::Ascending ? ExactMatrix(field_, dim(tau), dim(sigma))
                                              : ExactMatrix(field_, dim(sigma), dim(tau));
}

ExactMatrix PosetFunctor::map_between(Face sigma, Face tau) const
{
    if (!tau.contains(sigma))
        throw InputError("poset functor: " + sigma.to_string() + " is not below " + tau.to_string());
    ExactMatrix out = ExactMatrix::identity(field_, dim(sigma));
    Face current = sigma;
    for (int v : tau.minus(sigma).vertices()) {
        Face next = current | Face::vertex(v);
        out = direction_ == Direction::Ascending ? cover(current, next) * out : out * cover(current, next);
        current = next;
    }
    return out;
}

void PosetFunctor::check_functoriality() const
{
    for (Face rho : objects_) {
        const auto verts = rho.vertices();
        for (std::size_t a = 0; a < verts.size(); ++a)
            for (std::size_t b = a + 1; b < verts.size(); ++b) {
                const Face va = Face::vertex(verts[a]), vb = Face::vertex(verts[b]);
                const Face sigma = rho.minus(va | vb);
                if (!dims_.contains(sigma.bits()))
                    continue;
                const Face t1 = sigma | va, t2 = sigma | vb;
                ExactMatrix p1 = direction_ == Direction::Ascending ? cover(t1, rho) * cover(sigma, t1)
                                                                    : cover(sigma, t1) * cover(t1, rho);
                ExactMatrix p2 = direction_ == Direction::Ascending ? cover(t2, rho) * cover(sigma, t2)
                                                                    : cover(sigma, t2) * cover(t2, rho);
                if (!(p1 == p2))
                    throw InputError("poset functor: square " + sigma.to_string() + " < " + rho.to_string() +
                                     " does not commute");
            }
    }
}

std::size_t NormalizedCochainComplex::cochain_dim(int r) const
{
    return r < 0 || r > top_degree() ? 0 : dims_[r];
}

std::size_t NormalizedCochainComplex::delta_rank(int r) const
{
    if (r < 0 || r >= static_cast<int>(deltas_.size()))
        return 0;
    return std::visit([](const auto& m) { return rank(m); }, deltas_[r]);
}

NormalizedCochainComplex build_normalized_complex(const PosetFunctor& phi)
{
    NormalizedCochainComplex cx(phi.field());
    const auto& objects = phi.objects();
    const std::size_t count = objects.size();
    if (count == 0)
        return cx;
    const bool ascending = phi.direction() == Direction::Ascending;

    // Category order on object indices.
    std::vector<std::vector<std::uint32_t>> above(count);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j) {
            const Face a = objects[i], b = objects[j];
            if (a == b)
                continue;
            if (ascending ? a.contains(b) : b.contains(a))
                above[i].push_back(static_cast<std::uint32_t>(j));
        }

    using IndexChain = std::vector<std::uint32_t>;
    std::vector<std::vector<IndexChain>> by_length;
    std::vector<IndexChain> frontier;
    for (std::uint32_t i = 0; i < count; ++i)
        frontier.push_back({i});
    while (!frontier.empty()) {
        std::vector<IndexChain> next;
        for (const auto& c : frontier)
            for (auto j : above[c.back()]) {
                IndexChain longer = c;
                longer.push_back(j);
                next.push_back(std::move(longer));
            }
        std::sort(next.begin(), next.end());
        by_length.push_back(std::move(frontier));
        frontier = std::move(next);
    }

    std::vector<std::size_t> value_dim(count);
    for (std::size_t i = 0; i < count; ++i)
        value_dim[i] = phi.dim(objects[i]);

    std::vector<std::vector<std::size_t>> offsets(by_length.size());
    for (std::size_t r = 0; r < by_length.size(); ++r) {
        std::size_t off = 0;
        std::vector<NormalizedCochainComplex::Chain> faces;
        for (const auto& c : by_length[r]) {
            offsets[r].push_back(off);
            off += value_dim[c.front()];
            NormalizedCochainComplex::Chain fc;
            for (auto i : c)
                fc.push_back(objects[i]);
            faces.push_back(std::move(fc));
        }
        cx.chains_.push_back(std::move(faces));
        cx.dims_.push_back(off);
    }

    with_field(phi.field(), [&](auto f) {
        using F = decltype(f);
        using V = typename F::value_type;
        struct Entry {
            std::size_t row, col;
            V value;
        };
        // Φ(c1 -> c0) as its nonzero entries.
        std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<Entry>> first_step;
        auto step_map = [&](std::uint32_t c0, std::uint32_t c1) -> const std::vector<Entry>& {
            auto key = std::make_pair(c0, c1);
            auto it = first_step.find(key);
            if (it == first_step.end()) {
                const Face lo = ascending ? objects[c1] : objects[c0];
                const Face hi = ascending ? objects[c0] : objects[c1];
                const auto block = phi.map_between(lo, hi);
                const auto& typed = block.template as<F>();
                std::vector<Entry> entries;
                for (std::size_t i = 0; i < typed.rows(); ++i)
                    for (std::size_t j = 0; j < typed.cols(); ++j)
                        if (!f.is_zero(typed(i, j)))
                            entries.push_back({i, j, typed(i, j)});
                it = first_step.emplace(key, std::move(entries)).first;
            }
            return it->second;
        };
        const auto minus_one = f.neg(f.one());

        std::vector<SparseMatrix<F>> deltas;
        for (std::size_t r = 0; r + 1 < by_length.size(); ++r) {
            const auto& sources = by_length[r];
            const auto& targets = by_length[r + 1];
            SparseMatrix<F> delta(f, cx.dims_[r + 1], cx.dims_[r]);
            for (std::size_t t = 0; t < targets.size(); ++t) {
                const IndexChain& c = targets[t];
                const std::size_t row0 = offsets[r + 1][t];
                const std::size_t d0 = value_dim[c.front()];
                if (d0 == 0)
                    continue;
                for (std::size_t k = 0; k < c.size(); ++k) {
                    IndexChain face = c;
                    face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
                    auto pos = std::lower_bound(sources.begin(), sources.end(), face) - sources.begin();
                    const std::size_t col0 = offsets[r][pos];
                    if (k == 0) {
                        for (const auto& e : step_map(c[0], c[1]))
                            delta.add(row0 + e.row, col0 + e.col, e.value);
                    } else {
                        const auto sign = k % 2 == 0 ? f.one() : minus_one;
                        for (std::size_t i = 0; i < d0; ++i)
                            delta.add(row0 + i, col0 + i, sign);
                    }
                }
            }
            deltas.push_back(std::move(delta));
        }
        for (std::size_t r = 0; r + 1 < deltas.size(); ++r)
            if (!(deltas[r + 1] * deltas[r]).is_zero())
                throw ConsistencyError("normalized cochain complex: d o d is nonzero in degree " + std::to_string(r));
        for (auto& d : deltas)
            cx.deltas_.emplace_back(std::move(d));
        return 0;
    });
    return cx;
}

std::vector<long long> higher_limit_dims(const NormalizedCochainComplex& cx)
{
    std::vector<std::size_t> ranks;
    for (int r = 0; r < cx.top_degree(); ++r)
        ranks.push_back(cx.delta_rank(r));
    auto rank_at = [&](int r) { return r < 0 || r >= static_cast<int>(ranks.size()) ? 0 : ranks[r]; };
    std::vector<long long> out;
    for (int i = 0; i <= cx.top_degree(); ++i)
        out.push_back(static_cast<long long>(cx.cochain_dim(i)) - static_cast<long long>(rank_at(i)) -
                      static_cast<long long>(rank_at(i - 1)));
    return out;
}

PosetFunctor constant_functor(const SimplicialComplex& k, const FieldSpec& field, std::size_t dim)
{
    std::vector<std::size_t> dims;
    PosetFunctor::CoverMaps covers;
    const ExactMatrix id = ExactMatrix::identity(field, dim);
    for (Face tau : k.faces()) {
        if (tau.empty())
            continue;
        dims.push_back(dim);
        for (int v : tau.vertices()) {
            const Face sigma = tau.minus(Face::vertex(v));
            if (!sigma.empty())
                covers.emplace(std::make_pair(sigma.bits(), tau.bits()), id);
        }
    }
    return PosetFunctor(k, field, Direction::Descending, false, std::move(dims), std::move(covers));
}

PosetFunctor atomic_functor(const SimplicialComplex& k, const FieldSpec& field, std::size_t dim)
{
    std::vector<std::size_t> dims(k.faces().size(), 0);
    dims[0] = dim;  // ∅ comes first
    return PosetFunctor(k, field, Direction::Descending, true, std::move(dims), {});
}

PosetFunctor star_functor(const SimplicialComplex& k, const FieldSpec& field, int degree)
{
    if (degree < 0)
        throw InputError("star functor: negative internal degree");
    std::map<std::uint64_t, FaceRingDegree> values;
    std::map<std::uint64_t, SimplicialComplex> stars;
    std::vector<std::size_t> dims;
    for (Face sigma : k.faces()) {
        if (sigma.empty())
            continue;
        auto st = star(k, sigma);
        auto basis = monomial_basis(st, degree);
        dims.push_back(basis.size());
        values.emplace(sigma.bits(), std::move(basis));
        stars.emplace(sigma.bits(), std::move(st));
    }
    PosetFunctor::CoverMaps covers;
    for (Face tau : k.faces()) {
        if (tau.order() < 2)
            continue;
        const auto& dst = values.at(tau.bits());
        const auto& dst_star = stars.at(tau.bits());
        for (int v : tau.vertices()) {
            const Face sigma = tau.minus(Face::vertex(v));
            const auto& src = values.at(sigma.bits());
            ExactMatrix m(field, dst.size(), src.size());
            for (std::size_t c = 0; c < src.size(); ++c)
                if (dst_star.contains(src.basis[c].support()))
                    m.set(*dst.index_of(src.basis[c]), c, 1);
            covers.emplace(std::make_pair(sigma.bits(), tau.bits()), std::move(m));
        }
    }
    return PosetFunctor(k, field, Direction::Ascending, false, std::move(dims), std::move(covers));
}

namespace {

long long padded(const std::vector<long long>& v, std::size_t i)
{
    return i < v.size() ? v[i] : 0;
}

} // namespace

StarIdentity star_identity(const SimplicialComplex& k, const FieldSpec& field, int degree)
{
    StarIdentity out{degree, higher_limit_dims(build_normalized_complex(star_functor(k, field, degree))), {}, true};
    const std::size_t len = std::max<std::size_t>(out.limits.size(), static_cast<std::size_t>(k.order()) + 1);
    out.expected.assign(len, 0);
    if (degree == 0) {
        for (std::size_t i = 0; i < len; ++i)
            out.expected[i] = cohomology_dim(k, field, static_cast<int>(i));
    } else {
        out.expected[0] = static_cast<long long>(monomial_basis(k, degree).size());
    }
    for (std::size_t i = 0; i < len; ++i)
        out.holds = out.holds && padded(out.limits, i) == out.expected[i];
    return out;
}

std::vector<AtomicChain> atomic_chain(const SimplicialComplex& k, const FieldSpec& field)
{
    const auto constant = higher_limit_dims(build_normalized_complex(constant_functor(k, field, 1)));
    const auto atomic = higher_limit_dims(build_normalized_complex(atomic_functor(k, field, 1)));
    std::vector<AtomicChain> out;
    for (int i = 1; i <= std::max(1, k.order()); ++i) {
        AtomicChain row{i, cohomology_dim(k, field, i), padded(constant, i), padded(atomic, i + 1), false};
        row.holds = row.cohomology == row.constant_limit && row.constant_limit == row.atomic_limit;
        out.push_back(row);
    }
    return out;
}

} // namespace facering
