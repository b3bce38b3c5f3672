#include "facering/complex.hpp"

#include <algorithm>
#include <unordered_set>

#include "facering/error.hpp"

namespace facering {

Face Face::of(std::span<const int> vertices)
{
    std::uint64_t bits = 0;
    for (int v : vertices) {
        if (v < 1 || v > max_vertices)
            throw InputError("vertex label " + std::to_string(v) + " outside 1.." + std::to_string(max_vertices));
        std::uint64_t bit = std::uint64_t{1} << (v - 1);
        if (bits & bit)
            throw InputError("duplicate vertex " + std::to_string(v) + " within a face");
        bits |= bit;
    }
    return Face(bits);
}

std::vector<int> Face::vertices() const
{
    std::vector<int> out;
    for (std::uint64_t b = bits_; b; b &= b - 1)
        out.push_back(std::countr_zero(b) + 1);
    return out;
}

std::string Face::to_string() const
{
    std::string s = "{";
    bool first = true;
    for (int v : vertices()) {
        if (!first)
            s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

SimplicialComplex::SimplicialComplex(int m) : m_(m), faces_{Face{}}
{
    if (m < 0 || m > max_vertices)
        throw InputError("vertex count must lie in 0.." + std::to_string(max_vertices));
}

SimplicialComplex SimplicialComplex::closure(int m, std::span<const Face> generators)
{
    SimplicialComplex k(m);
    const Face all = Face::range(m);
    std::unordered_set<std::uint64_t> seen{0};
    for (Face g : generators) {
        if (!all.contains(g))
            throw InputError("face " + g.to_string() + " uses a label outside 1.." + std::to_string(m));
        if (seen.contains(g.bits()))
            continue;
        // Enumerate all submasks of g.
        for (std::uint64_t s = g.bits();; s = (s - 1) & g.bits()) {
            seen.insert(s);
            if (s == 0)
                break;
        }
    }
    k.faces_.clear();
    for (auto b : seen)
        k.faces_.emplace_back(b);
    std::sort(k.faces_.begin(), k.faces_.end());
    k.max_order_ = k.faces_.back().order();
    return k;
}

SimplicialComplex SimplicialComplex::from_facets(int m, const std::vector<std::vector<int>>& facets)
{
    if (m < 0 || m > max_vertices)
        throw InputError("vertex count must lie in 0.." + std::to_string(max_vertices));
    std::vector<Face> gens;
    gens.reserve(facets.size());
    for (const auto& f : facets) {
        for (int v : f)
            if (v < 1 || v > m)
                throw InputError("vertex label " + std::to_string(v) + " outside 1.." + std::to_string(m));
        gens.push_back(Face::of(f));
    }
    return closure(m, gens);
}

SimplicialComplex SimplicialComplex::from_faces(int m, std::vector<Face> faces)
{
    if (faces.empty())
        throw InputError("the void complex (no faces at all) is not a simplicial complex");
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    SimplicialComplex k = closure(m, faces);
    if (k.faces_.size() != faces.size())
        throw InputError("face family is not closed under taking subsets");
    return k;
}

SimplicialComplex SimplicialComplex::full_simplex(int m, Face vertices)
{
    return closure(m, std::span<const Face>(&vertices, 1));
}

bool SimplicialComplex::contains(Face f) const
{
    return std::binary_search(faces_.begin(), faces_.end(), f);
}

std::vector<Face> SimplicialComplex::faces_of_order(int order) const
{
    auto lo = std::lower_bound(faces_.begin(), faces_.end(), order,
                               [](Face f, int o) { return f.order() < o; });
    auto hi = std::lower_bound(lo, faces_.end(), order + 1, [](Face f, int o) { return f.order() < o; });
    return {lo, hi};
}

std::vector<Face> SimplicialComplex::facets() const
{
    std::vector<Face> out;
    for (Face f : faces_) {
        bool maximal = true;
        for (int i = 1; i <= m_ && maximal; ++i)
            if (!f.contains(i) && contains(f | Face::vertex(i)))
                maximal = false;
        if (maximal)
            out.push_back(f);
    }
    return out;
}

FVector SimplicialComplex::f_vector() const
{
    FVector f(max_order_ + 1, 0);
    for (Face x : faces_)
        ++f[x.order()];
    return f;
}

bool SimplicialComplex::is_pure() const
{
    auto fs = facets();
    return std::all_of(fs.begin(), fs.end(), [&](Face f) { return f.order() == max_order_; });
}

std::vector<int> SimplicialComplex::used_vertices() const
{
    return used_vertex_set().vertices();
}

Face SimplicialComplex::used_vertex_set() const
{
    std::uint64_t bits = 0;
    for (Face f : faces_of_order(1))
        bits |= f.bits();
    return Face(bits);
}

Profile profile(const SimplicialComplex& k)
{
    return {k.dim(), k.order(), k.f_vector(), k.is_pure(), k.used_vertices()};
}

namespace {

void require_face(const SimplicialComplex& k, Face sigma, const char* op)
{
    if (!k.contains(sigma))
        throw InputError(std::string(op) + ": " + sigma.to_string() + " is not a face of the complex");
}

SimplicialComplex from_sorted_unique(int m, std::vector<Face> faces)
{
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    return SimplicialComplex::from_faces(m, std::move(faces));
}

} // namespace

SimplicialComplex link(const SimplicialComplex& k, Face sigma)
{
    require_face(k, sigma, "link");
    std::vector<Face> out;
    for (Face tau : k.faces())
        if (tau.contains(sigma))
            out.push_back(tau.minus(sigma));
    return from_sorted_unique(k.vertex_count(), std::move(out));
}

SimplicialComplex star(const SimplicialComplex& k, Face sigma)
{
    require_face(k, sigma, "star");
    std::vector<Face> out;
    for (Face tau : k.faces())
        if (k.contains(tau | sigma))
            out.push_back(tau);
    return from_sorted_unique(k.vertex_count(), std::move(out));
}

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l)
{
    const int m = k.vertex_count() + l.vertex_count();
    if (m > max_vertices)
        throw InputError("join: more than " + std::to_string(max_vertices) + " labels");
    std::vector<Face> out;
    out.reserve(k.faces().size() * l.faces().size());
    for (Face a : k.faces())
        for (Face b : l.faces())
            out.push_back(a | b.shifted(k.vertex_count()));
    return from_sorted_unique(m, std::move(out));
}

SimplicialComplex full_subcomplex(const SimplicialComplex& k, Face tau)
{
    if (!Face::range(k.vertex_count()).contains(tau))
        throw InputError("full_subcomplex: " + tau.to_string() + " uses a label outside the vertex range");
    std::vector<Face> out;
    for (Face f : k.faces())
        if ((f & tau).empty())
            out.push_back(f);
    return from_sorted_unique(k.vertex_count(), std::move(out));
}

std::vector<Face> minimal_missing_faces(const SimplicialComplex& k)
{
    std::vector<Face> out;
    for (Face sigma : k.faces()) {
        for (int i = 1; i <= k.vertex_count(); ++i) {
            if (sigma.contains(i))
                continue;
            Face mu = sigma | Face::vertex(i);
            if (k.contains(mu))
                continue;
            bool minimal = true;
            for (int j : mu.vertices())
                if (!k.contains(mu.minus(Face::vertex(j)))) {
                    minimal = false;
                    break;
                }
            if (minimal)
                out.push_back(mu);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CoreDecomposition core_decomposition(const SimplicialComplex& k)
{
    std::uint64_t apex = 0;
    for (int i : k.used_vertices())
        if (star(k, Face::vertex(i)) == k)
            apex |= Face::vertex(i).bits();
    SimplicialComplex core = full_subcomplex(k, Face(apex));
    return {Face(apex), std::move(core), apex == 0};
}

Relabeled compact(const SimplicialComplex& k)
{
    std::vector<int> map = k.used_vertices();
    std::vector<int> inverse(k.vertex_count() + 1, 0);
    for (std::size_t j = 0; j < map.size(); ++j)
        inverse[map[j]] = static_cast<int>(j) + 1;
    std::vector<Face> faces;
    for (Face f : k.faces()) {
        std::uint64_t bits = 0;
        for (int v : f.vertices())
            bits |= Face::vertex(inverse[v]).bits();
        faces.emplace_back(bits);
    }
    return {SimplicialComplex::from_faces(static_cast<int>(map.size()), std::move(faces)), std::move(map)};
}

std::string to_string(const SimplicialComplex& k)
{
    std::string s = "m=" + std::to_string(k.vertex_count()) + " facets=[";
    bool first = true;
    for (Face f : k.facets()) {
        if (!first)
            s += ",";
        s += f.to_string();
        first = false;
    }
    return s + "]";
}

} // namespace facering
