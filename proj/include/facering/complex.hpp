#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace facering {

/// Vertex labels are 1-based; at most 64 labels per complex.
inline constexpr int max_vertices = 64;

/// A finite set of vertex labels, stored as a bit mask (bit i-1 for label i).
class Face {
public:
    constexpr Face() = default;
    constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}

    /// Throws InputError on labels outside 1..64 or repeated labels.
    static Face of(std::span<const int> vertices);
    static Face of(std::initializer_list<int> vertices)
    {
        return of(std::span<const int>(vertices.begin(), vertices.size()));
    }
    static constexpr Face vertex(int i) { return Face(std::uint64_t{1} << (i - 1)); }
    /// {1, ..., m}
    static constexpr Face range(int m) { return Face(m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int order() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int i) const { return (bits_ >> (i - 1)) & 1u; }
    constexpr bool contains(Face other) const { return (other.bits_ & ~bits_) == 0; }
    constexpr int min_vertex() const { return std::countr_zero(bits_) + 1; }
    constexpr int max_vertex() const { return 64 - std::countl_zero(bits_); }

    /// Ascending vertex labels.
    std::vector<int> vertices() const;
    std::string to_string() const;

    constexpr Face operator|(Face o) const { return Face(bits_ | o.bits_); }
    constexpr Face operator&(Face o) const { return Face(bits_ & o.bits_); }
    constexpr Face minus(Face o) const { return Face(bits_ & ~o.bits_); }
    constexpr Face shifted(int by) const { return Face(bits_ << by); }

    friend constexpr bool operator==(Face, Face) = default;

    /// Canonical order: by order, then lexicographic on ascending vertex lists.
    friend constexpr std::strong_ordering operator<=>(Face a, Face b)
    {
        if (a.order() != b.order())
            return a.order() <=> b.order();
        if (a.bits_ == b.bits_)
            return std::strong_ordering::equal;
        // Among equal-size sets the one holding the smallest differing label comes first.
        std::uint64_t diff = a.bits_ ^ b.bits_;
        std::uint64_t low = diff & (~diff + 1);
        return (a.bits_ & low) ? std::strong_ordering::less : std::strong_ordering::greater;
    }

private:
    std::uint64_t bits_ = 0;
};

/// f_{-1}, f_0, ..., f_{n-1}
using FVector = std::vector<long long>;

/// Finite abstract simplicial complex on the label set {1..m}, always containing the empty face.
/// Labels i with {i} not a face are "ghost" vertices: they keep label positions stable across
/// links and full subcomplexes but play no geometric role.
class SimplicialComplex {
public:
    /// The complex {∅} on m labels.
    explicit SimplicialComplex(int m = 0);

    /// Downward closure of facets. Throws InputError on labels outside 1..m or repeated labels.
    static SimplicialComplex from_facets(int m, const std::vector<std::vector<int>>& facets);
    /// Downward closure of arbitrary generating faces.
    static SimplicialComplex closure(int m, std::span<const Face> generators);
    /// Builds from a face family; throws unless it is downward closed and non-void.
    static SimplicialComplex from_faces(int m, std::vector<Face> faces);
    /// All subsets of `vertices`, on m labels.
    static SimplicialComplex full_simplex(int m, Face vertices);

    int vertex_count() const { return m_; }
    /// Canonically ordered faces, starting with ∅.
    const std::vector<Face>& faces() const { return faces_; }
    bool contains(Face f) const;
    /// Faces of a given order (order = number of vertices), canonical order.
    std::vector<Face> faces_of_order(int order) const;
    std::vector<Face> facets() const;

    /// dim K = max face order - 1; -1 for {∅}.
    int dim() const { return max_order_ - 1; }
    /// n = dim K + 1.
    int order() const { return max_order_; }
    FVector f_vector() const;
    bool is_pure() const;
    /// Labels i with {i} in K.
    std::vector<int> used_vertices() const;
    Face used_vertex_set() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    int m_ = 0;
    int max_order_ = 0;
    std::vector<Face> faces_;
};

struct Profile {
    int dim;
    int n;
    FVector f_vector;
    bool is_pure;
    std::vector<int> used_vertices;
};

Profile profile(const SimplicialComplex& k);

/// {τ∖σ : σ ⊂ τ ∈ K}; throws InputError if σ ∉ K.
SimplicialComplex link(const SimplicialComplex& k, Face sigma);
/// {τ ∈ K : σ ∪ τ ∈ K}; throws InputError if σ ∉ K.
SimplicialComplex star(const SimplicialComplex& k, Face sigma);
/// K * L with L's labels shifted by m_K.
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l);
/// Faces of K avoiding tau (same labels).
SimplicialComplex full_subcomplex(const SimplicialComplex& k, Face tau);
/// Minimal non-faces inside {1..m}, canonical order. Ghost labels appear as singletons.
std::vector<Face> minimal_missing_faces(const SimplicialComplex& k);

struct CoreDecomposition {
    Face apex;
    SimplicialComplex core;
    bool is_reduced;
};

/// K = Δ(apex) * L with apex the cone points {i : st({i}) = K} and L reduced.
CoreDecomposition core_decomposition(const SimplicialComplex& k);

struct Relabeled {
    SimplicialComplex complex;
    /// label_map[j-1] is the original label of new label j.
    std::vector<int> label_map;
};

/// Renumbers used vertices to 1..m' in increasing order, dropping ghost labels.
Relabeled compact(const SimplicialComplex& k);

std::string to_string(const SimplicialComplex& k);

} // namespace facering
