#include "facering/regularity.hpp"

#include <algorithm>
#include <map>

#include "facering/error.hpp"
#include "facering/sparse.hpp"

namespace facering {

ThetaSystem theta_system(const SimplicialComplex& k)
{
    const int n = k.order();
    const int m = k.vertex_count();
    ThetaSystem theta{n, {}, {}, {}};
    for (int j = 1; j <= n; ++j) {
        auto basis = monomial_basis(k, j);
        std::vector<long long> coords(basis.size(), 0);
        auto faces = k.faces_of_order(j);
        for (Face tau : faces)
            coords[*basis.index_of(Monomial::squarefree(m, tau))] = 1;
        theta.bases.push_back(std::move(basis));
        theta.coords.push_back(std::move(coords));
        theta.terms.push_back(std::move(faces));
    }
    // e_j for j > n is a sum of v_τ over j-subsets τ, none of which may be a face.
    for (Face f : k.faces())
        if (f.order() > n)
            throw ConsistencyError("theta_system: face larger than the complex order");
    return theta;
}

namespace {

// Reduced row echelon form grown one row at a time.
template <class F>
class IncrementalReducer {
public:
    using V = typename F::value_type;

    IncrementalReducer(F f, std::size_t cols) : f_(f), cols_(cols), row_of_col_(cols, -1) {}

    bool add(std::vector<V> x)
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t c = pivot_col_[r];
            if (f_.is_zero(x[c]))
                continue;
            V factor = x[c];
            const auto& row = rows_[r];
            for (std::size_t j = 0; j < cols_; ++j)
                if (!f_.is_zero(row[j]))
                    x[j] = f_.sub_mul(x[j], factor, row[j]);
        }
        std::size_t lead = 0;
        while (lead < cols_ && f_.is_zero(x[lead]))
            ++lead;
        if (lead == cols_)
            return false;
        V inv = f_.inv(x[lead]);
        for (auto& v : x)
            if (!f_.is_zero(v))
                v = f_.mul(v, inv);
        for (auto& row : rows_) {
            if (f_.is_zero(row[lead]))
                continue;
            V factor = row[lead];
            for (std::size_t j = 0; j < cols_; ++j)
                if (!f_.is_zero(x[j]))
                    row[j] = f_.sub_mul(row[j], factor, x[j]);
        }
        row_of_col_[lead] = static_cast<long>(rows_.size());
        pivot_col_.push_back(lead);
        rows_.push_back(std::move(x));
        return true;
    }

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool is_pivot(std::size_t c) const { return row_of_col_[c] >= 0; }
    const std::vector<V>& pivot_row(std::size_t c) const { return rows_[row_of_col_[c]]; }

private:
    F f_;
    std::size_t cols_;
    std::vector<std::vector<V>> rows_;
    std::vector<std::size_t> pivot_col_;
    std::vector<long> row_of_col_;
};

template <class F>
struct QuotientData {
    std::vector<std::vector<Monomial>> bases;
    std::vector<std::vector<Matrix<F>>> mult;  // [g][d]
};

template <class F>
QuotientData<F> build_quotient(const SimplicialComplex& l, int theta_count, const std::vector<int>& gens, F f)
{
    using V = typename F::value_type;
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    const int m = l.vertex_count();
    const std::size_t ngen = gens.size();
    std::vector<int> gen_index(m + 1, -1);
    for (std::size_t g = 0; g < ngen; ++g)
        gen_index[gens[g]] = static_cast<int>(g);

    const Face used = l.used_vertex_set();
    std::vector<Face> relations;  // minimal non-faces among used vertices
    for (Face mu : minimal_missing_faces(l))
        if (mu.order() >= 2 && used.contains(mu))
            relations.push_back(mu);

    QuotientData<F> q;
    q.bases.push_back({Monomial::one(m)});
    q.mult.resize(ngen);

    auto normal_form = [&](const Monomial& u) {
        const int e = u.degree();
        std::vector<V> x{f.one()};
        if (!l.contains(u.support()))
            return std::vector<V>(q.bases[e].size(), f.zero());
        // Multiply up from 1 one variable at a time: v_{i1}(v_{i2}(...)).
        Monomial partial = Monomial::one(m);
        std::vector<int> factors;
        for (int i = 1; i <= m; ++i)
            for (int p = 0; p < u.exponents[i - 1]; ++p)
                factors.push_back(i);
        for (std::size_t step = 0; step < factors.size(); ++step)
            x = q.mult[gen_index[factors[step]]][step].apply(std::span<const V>(x));
        return x;
    };

    const int n = l.order();
    const int cap = std::max(1, 4 * std::max(n, theta_count) * (std::max(n, theta_count) + 1));
    for (int d = 1;; ++d) {
        if (d > cap)
            throw ConsistencyError("quotient_algebra: no vanishing degree below the guard " + std::to_string(cap));
        const auto& prev = q.bases[d - 1];
        const std::size_t a1 = prev.size();

        // Distinct monomials v_g * b spanning A_d.
        std::vector<Monomial> cols;
        for (std::size_t g = 0; g < ngen; ++g)
            for (const auto& b : prev) {
                Monomial u = b.times_variable(gens[g]);
                if (l.contains(u.support()))
                    cols.push_back(std::move(u));
            }
        std::sort(cols.begin(), cols.end());
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        std::vector<std::vector<std::size_t>> psi(ngen, std::vector<std::size_t>(a1, none));
        for (std::size_t g = 0; g < ngen; ++g)
            for (std::size_t b = 0; b < a1; ++b) {
                Monomial u = prev[b].times_variable(gens[g]);
                auto it = std::lower_bound(cols.begin(), cols.end(), u);
                if (it != cols.end() && *it == u)
                    psi[g][b] = static_cast<std::size_t>(it - cols.begin());
            }

        const std::size_t ncols = cols.size();
        // row += sign * (v_g ⊗ x)
        auto lift_into = [&](std::vector<V>& row, std::size_t g, const std::vector<V>& x, bool negate) {
            for (std::size_t b = 0; b < a1; ++b) {
                if (f.is_zero(x[b]) || psi[g][b] == none)
                    continue;
                auto& slot = row[psi[g][b]];
                slot = negate ? f.sub(slot, x[b]) : f.add(slot, x[b]);
            }
        };
        auto is_zero_row = [&](const std::vector<V>& row) {
            return std::all_of(row.begin(), row.end(), [&](const V& v) { return f.is_zero(v); });
        };

        IncrementalReducer<F> reducer(f, ncols);
        if (d >= 2) {
            const std::size_t a2 = q.bases[d - 2].size();
            for (std::size_t g = 0; g < ngen; ++g)
                for (std::size_t h = g + 1; h < ngen; ++h) {
                    const Matrix<F>& mg = q.mult[g][d - 2];
                    const Matrix<F>& mh = q.mult[h][d - 2];
                    for (std::size_t c = 0; c < a2; ++c) {
                        std::vector<V> row(ncols, f.zero());
                        for (std::size_t b = 0; b < a1; ++b) {
                            if (!f.is_zero(mh(b, c)) && psi[g][b] != none)
                                row[psi[g][b]] = f.add(row[psi[g][b]], mh(b, c));
                            if (!f.is_zero(mg(b, c)) && psi[h][b] != none)
                                row[psi[h][b]] = f.sub(row[psi[h][b]], mg(b, c));
                        }
                        if (!is_zero_row(row))
                            reducer.add(std::move(row));
                    }
                }
        }
        for (Face mu : relations) {
            if (mu.order() != d)
                continue;
            const int i = mu.min_vertex();
            std::vector<V> row(ncols, f.zero());
            lift_into(row, gen_index[i], normal_form(Monomial::squarefree(m, mu.minus(Face::vertex(i)))), false);
            if (!is_zero_row(row))
                reducer.add(std::move(row));
        }
        if (d <= theta_count) {
            std::vector<V> row(ncols, f.zero());
            for (Face tau : l.faces_of_order(d)) {
                const int i = tau.min_vertex();
                lift_into(row, gen_index[i], normal_form(Monomial::squarefree(m, tau.minus(Face::vertex(i)))),
                          false);
            }
            if (!is_zero_row(row))
                reducer.add(std::move(row));
        }

        std::vector<std::size_t> free_cols;
        for (std::size_t c = 0; c < ncols; ++c)
            if (!reducer.is_pivot(c))
                free_cols.push_back(c);

        // Projection onto the free columns: a pivot column equals minus its row's free part.
        Matrix<F> proj(f, free_cols.size(), ncols);
        for (std::size_t k = 0; k < free_cols.size(); ++k)
            proj(k, free_cols[k]) = f.one();
        for (std::size_t c = 0; c < ncols; ++c) {
            if (!reducer.is_pivot(c))
                continue;
            const auto& row = reducer.pivot_row(c);
            for (std::size_t k = 0; k < free_cols.size(); ++k)
                proj(k, c) = f.neg(row[free_cols[k]]);
        }
        for (std::size_t g = 0; g < ngen; ++g) {
            Matrix<F> mg(f, free_cols.size(), a1);
            for (std::size_t b = 0; b < a1; ++b) {
                if (psi[g][b] == none)
                    continue;
                for (std::size_t k = 0; k < free_cols.size(); ++k)
                    mg(k, b) = proj(k, psi[g][b]);
            }
            q.mult[g].push_back(std::move(mg));
        }
        if (free_cols.empty())
            break;
        std::vector<Monomial> basis;
        for (auto c : free_cols)
            basis.push_back(cols[c]);
        q.bases.push_back(std::move(basis));
    }
    return q;
}

template <class F>
std::vector<typename F::value_type> to_values(const ExactVector& v)
{
    std::vector<typename F::value_type> out;
    out.reserve(v.size());
    for (const auto& s : v)
        out.push_back(s.get<F>());
    return out;
}

} // namespace

QuotientAlgebra quotient_algebra(const SimplicialComplex& l, int theta_count, const FieldSpec& field)
{
    QuotientAlgebra a(l, field, theta_count);
    a.generators_ = l.used_vertices();
    with_field(field, [&](auto f) {
        auto data = build_quotient(l, theta_count, a.generators_, f);
        a.bases_ = std::move(data.bases);
        a.mult_.resize(data.mult.size());
        for (std::size_t g = 0; g < data.mult.size(); ++g)
            for (auto& m : data.mult[g])
                a.mult_[g].emplace_back(std::move(m));
        return 0;
    });
    return a;
}

QuotientAlgebra quotient_algebra(const SimplicialComplex& k, const FieldSpec& field)
{
    return quotient_algebra(k, k.order(), field);
}

std::vector<long long> QuotientAlgebra::dims() const
{
    std::vector<long long> out;
    for (const auto& b : bases_)
        out.push_back(static_cast<long long>(b.size()));
    return out;
}

long long QuotientAlgebra::dim(int d) const
{
    return d < 0 || d > top_degree() ? 0 : static_cast<long long>(bases_[d].size());
}

ExactMatrix QuotientAlgebra::multiplication(int vertex, int d) const
{
    const int g = generator_index(vertex);
    if (g < 0 || d < 0 || d > top_degree())
        return ExactMatrix(field_, static_cast<std::size_t>(dim(d + 1)), static_cast<std::size_t>(dim(d)));
    return mult_[g][d];
}

int QuotientAlgebra::generator_index(int vertex) const
{
    auto it = std::find(generators_.begin(), generators_.end(), vertex);
    return it == generators_.end() ? -1 : static_cast<int>(it - generators_.begin());
}

ExactVector QuotientAlgebra::normal_form(const Monomial& mono) const
{
    const int e = mono.degree();
    if (e > top_degree())
        return {};
    if (!complex_.contains(mono.support()))
        return ExactVector(bases_[e].size(), Scalar(field_, 0));
    return with_field(field_, [&](auto f) {
        using F = decltype(f);
        using V = typename F::value_type;
        std::vector<V> x{f.one()};
        int step = 0;
        for (int i = 1; i <= complex_.vertex_count(); ++i)
            for (int p = 0; p < mono.exponents[i - 1]; ++p)
                x = mult_[generator_index(i)][step++].template as<F>().apply(std::span<const V>(x));
        ExactVector out;
        out.reserve(x.size());
        for (auto& v : x)
            out.emplace_back(f, std::move(v));
        return out;
    });
}

ExactMatrix QuotientAlgebra::projection_matrix(int d) const
{
    auto src = monomial_basis(complex_, d);
    ExactMatrix p(field_, static_cast<std::size_t>(dim(d)), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        auto x = normal_form(src.basis[c]);
        for (std::size_t r = 0; r < x.size(); ++r)
            p.set(r, c, x[r]);
    }
    return p;
}

ExactVector QuotientAlgebra::product(int p, std::size_t a, int q, std::size_t b) const
{
    return normal_form(basis(p).at(a).times(basis(q).at(b)));
}

FreenessResult freeness_check(const SimplicialComplex& k, const QuotientAlgebra& a)
{
    auto hs = hilbert_series(k);
    IntPoly expected = hs.numerator;
    for (int j = 1; j <= k.order(); ++j) {
        std::vector<long long> q_integer(j, 1);  // (1 - t^j)/(1 - t)
        expected = expected * IntPoly(q_integer);
    }
    IntPoly actual = a.hilbert_polynomial();
    FreenessResult result{actual == expected, std::nullopt, actual, expected};
    if (!result.is_free) {
        const int top = std::max(actual.degree(), expected.degree());
        for (int d = 0; d <= top; ++d)
            if (actual[d] != expected[d]) {
                result.witness_degree = d;
                break;
            }
    }
    return result;
}

FreenessResult freeness_check(const SimplicialComplex& k, const FieldSpec& field)
{
    return freeness_check(k, quotient_algebra(k, field));
}

std::vector<long long> socle_dims(const QuotientAlgebra& a)
{
    std::vector<long long> out;
    for (int d = 0; d <= a.top_degree(); ++d) {
        const long long here = a.dim(d);
        if (d == a.top_degree() || a.generators().empty()) {
            out.push_back(here);
            continue;
        }
        out.push_back(with_field(a.field(), [&](auto f) {
            using F = decltype(f);
            Matrix<F> stacked(f, 0, static_cast<std::size_t>(here));
            for (int v : a.generators())
                stacked = Matrix<F>::vstack(stacked, a.multiplication(v, d).template as<F>());
            return here - static_cast<long long>(rank(stacked));
        }));
    }
    return out;
}

PdResult pd_check(const QuotientAlgebra& a)
{
    const int top = a.top_degree();
    PdResult result{false, top};
    if (a.dim(top) != 1)
        return result;
    result.is_pd = with_field(a.field(), [&](auto f) {
        using F = decltype(f);
        using V = typename F::value_type;
        for (int k = 0; k <= top; ++k) {
            const long long rows = a.dim(k), cols = a.dim(top - k);
            if (rows != cols)
                return false;
            // Row i is the functional b -> u_i * b on A_{D-k}, pulled back from A_D one variable at a time.
            Matrix<F> pairing(f, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
            for (long long i = 0; i < rows; ++i) {
                const Monomial& u = a.basis(k)[i];
                std::vector<V> r{f.one()};
                int deg = top;
                for (int v = 1; v <= a.complex().vertex_count(); ++v)
                    for (int p = 0; p < u.exponents[v - 1]; ++p) {
                        const Matrix<F>& mv = a.generator_action(a.generator_index(v), --deg).template as<F>();
                        std::vector<V> next(mv.cols(), f.zero());
                        for (std::size_t row = 0; row < mv.rows(); ++row) {
                            if (f.is_zero(r[row]))
                                continue;
                            for (std::size_t c = 0; c < mv.cols(); ++c)
                                if (!f.is_zero(mv(row, c)))
                                    next[c] = f.add(next[c], f.mul(r[row], mv(row, c)));
                        }
                        r = std::move(next);
                    }
                for (long long j = 0; j < cols; ++j)
                    pairing(i, j) = r[j];
            }
            if (static_cast<long long>(rank(pairing)) != rows)
                return false;
        }
        return true;
    });
    return result;
}

int default_tor_degree(int n)
{
    return n * (n + 1) / 2 + n;
}

TorTable koszul_tor_dims(const SimplicialComplex& k, const FieldSpec& field, int max_degree)
{
    if (max_degree < 0)
        throw InputError("koszul_tor_dims: negative degree bound");
    const int n = k.order();
    const int m = k.vertex_count();
    auto theta = theta_system(k);

    std::vector<FaceRingDegree> ring;
    for (int d = 0; d <= max_degree; ++d)
        ring.push_back(monomial_basis(k, d));

    // Exterior monomials x_S grouped by |S|; weight(S) = Σ_{i∈S} i.
    std::vector<std::vector<unsigned>> subsets(n + 1);
    for (unsigned s = 0; s < (1u << n); ++s)
        subsets[std::popcount(s)].push_back(s);
    auto weight = [](unsigned s) {
        int w = 0;
        for (unsigned b = s; b; b &= b - 1)
            w += std::countr_zero(b) + 1;
        return w;
    };

    // Basis offsets of stage j in internal degree d.
    struct Stage {
        std::map<unsigned, std::size_t> offset;
        std::size_t size = 0;
    };
    auto stage = [&](int j, int d) {
        Stage st;
        if (j < 0 || j > n)
            return st;
        for (unsigned s : subsets[j]) {
            const int rest = d - weight(s);
            if (rest < 0)
                continue;
            st.offset[s] = st.size;
            st.size += ring[rest].size();
        }
        return st;
    };

    TorTable table{n, max_degree, std::vector<std::vector<long long>>(n + 1, std::vector<long long>(max_degree + 1, 0))};
    with_field(field, [&](auto f) {
        using F = decltype(f);
        for (int d = 0; d <= max_degree; ++d) {
            std::vector<std::size_t> ranks(n + 2, 0);  // ranks[j] = rank of stage j -> stage j-1
            std::vector<Stage> stages;
            for (int j = 0; j <= n; ++j)
                stages.push_back(stage(j, d));
            for (int j = 1; j <= n; ++j) {
                const Stage& src = stages[j];
                const Stage& dst = stages[j - 1];
                if (src.size == 0 || dst.size == 0)
                    continue;
                // Transposed differential: one row per source basis element.
                SparseMatrix<F> mat(f, src.size, dst.size);
                for (auto [s, off] : src.offset) {
                    const auto& mons = ring[d - weight(s)].basis;
                    int position = 0;
                    for (unsigned b = s; b; b &= b - 1, ++position) {
                        const int i = std::countr_zero(b) + 1;
                        const unsigned target = s & ~(1u << (i - 1));
                        const std::size_t target_off = dst.offset.at(target);
                        const auto& target_basis = ring[d - weight(target)];
                        const auto sign = f.from_int(position % 2 == 0 ? 1 : -1);
                        for (std::size_t u = 0; u < mons.size(); ++u)
                            for (Face tau : theta.terms[i - 1]) {
                                Monomial prod = mons[u].times(Monomial::squarefree(m, tau));
                                if (!k.contains(prod.support()))
                                    continue;
                                mat.add(off + u, target_off + *target_basis.index_of(prod), sign);
                            }
                    }
                }
                ranks[j] = rank(mat);
            }
            for (int j = 0; j <= n; ++j)
                table.dims[j][d] = static_cast<long long>(stages[j].size) - static_cast<long long>(ranks[j]) -
                                   static_cast<long long>(ranks[j + 1]);
        }
        return 0;
    });
    return table;
}

std::vector<long long> ambient_quotient_dims(const SimplicialComplex& k, const SimplicialComplex& l,
                                             const FieldSpec& field)
{
    if (k.vertex_count() != l.vertex_count())
        throw InputError("ambient_quotient_dims: complexes use different label sets");
    for (Face f : l.faces())
        if (!k.contains(f))
            throw InputError("ambient_quotient_dims: " + f.to_string() + " is not a face of the ambient complex");
    return quotient_algebra(l, k.order(), field).dims();
}

} // namespace facering
