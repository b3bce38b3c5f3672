#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "facering/field.hpp"

namespace facering {

/// Row-major sparse matrix over an exact field; rows hold (column, nonzero value) sorted by column.
template <class Field>
class SparseMatrix {
public:
    using value_type = typename Field::value_type;
    using Entry = std::pair<std::uint32_t, value_type>;
    using Row = std::vector<Entry>;

    SparseMatrix(Field field, std::size_t rows, std::size_t cols)
        : field_(field), cols_(cols), rows_(rows)
    {
    }

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const Row& row(std::size_t r) const { return rows_[r]; }

    /// Adds value to entry (r, c); entries must be added before any read.
    void add(std::size_t r, std::size_t c, const value_type& value)
    {
        if (field_.is_zero(value))
            return;
        auto& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const Entry& e, std::size_t col) { return e.first < col; });
        if (it != row.end() && it->first == c) {
            it->second = field_.add(it->second, value);
            if (field_.is_zero(it->second))
                row.erase(it);
        } else {
            row.insert(it, Entry{static_cast<std::uint32_t>(c), value});
        }
    }

    std::size_t nonzeros() const
    {
        std::size_t n = 0;
        for (const auto& r : rows_)
            n += r.size();
        return n;
    }

    /// Product this * other, used for d∘d = 0 checks.
    SparseMatrix operator*(const SparseMatrix& other) const
    {
        SparseMatrix out(field_, rows(), other.cols());
        std::vector<value_type> acc(other.cols(), field_.zero());
        std::vector<char> seen(other.cols(), 0);
        std::vector<std::uint32_t> touched;
        for (std::size_t i = 0; i < rows(); ++i) {
            for (const auto& [k, a] : rows_[i])
                for (const auto& [j, b] : other.rows_[k]) {
                    if (!seen[j]) {
                        seen[j] = 1;
                        touched.push_back(j);
                    }
                    acc[j] = field_.add(acc[j], field_.mul(a, b));
                }
            std::sort(touched.begin(), touched.end());
            for (auto j : touched) {
                if (!field_.is_zero(acc[j]))
                    out.rows_[i].push_back(Entry{j, acc[j]});
                acc[j] = field_.zero();
                seen[j] = 0;
            }
            touched.clear();
        }
        return out;
    }

    bool is_zero() const
    {
        return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.empty(); });
    }

private:
    Field field_;
    std::size_t cols_;
    std::vector<Row> rows_;
};

namespace detail {

template <class Field>
typename SparseMatrix<Field>::Row sparse_axpy(const Field& f, const typename SparseMatrix<Field>::Row& x,
                                              const typename Field::value_type& c,
                                              const typename SparseMatrix<Field>::Row& y)
{
    // x - c*y
    typename SparseMatrix<Field>::Row out;
    out.reserve(x.size() + y.size());
    auto a = x.begin(), b = y.begin();
    while (a != x.end() || b != y.end()) {
        if (b == y.end() || (a != x.end() && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == x.end() || b->first < a->first) {
            out.emplace_back(b->first, f.neg(f.mul(c, b->second)));
            ++b;
        } else {
            auto v = f.sub_mul(a->second, c, b->second);
            if (!f.is_zero(v))
                out.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    return out;
}

template <class Field>
std::size_t sparse_block_rank(const Field& f, std::vector<typename SparseMatrix<Field>::Row> rows)
{
    using Row = typename SparseMatrix<Field>::Row;
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.size() < b.size(); });
    std::map<std::uint32_t, Row> pivots;
    for (Row& row : rows) {
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) {
                auto inv = f.inv(row.front().second);
                for (auto& e : row)
                    e.second = f.mul(e.second, inv);
                std::uint32_t lead = row.front().first;
                pivots.emplace(lead, std::move(row));
                break;
            }
            auto c = row.front().second;
            row = sparse_axpy(f, row, c, it->second);
        }
    }
    return pivots.size();
}

} // namespace detail

/// Rank via connected-component splitting followed by sparse elimination per block.
/// Columns are renumbered sparsest-first inside each block to limit fill.
template <class Field>
std::size_t rank(const SparseMatrix<Field>& m)
{
    using Row = typename SparseMatrix<Field>::Row;
    const std::size_t cols = m.cols();
    if (cols == 0 || m.rows() == 0)
        return 0;

    std::vector<std::size_t> parent(cols);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::size_t> col_count(cols, 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const Row& row = m.row(r);
        for (const auto& e : row)
            ++col_count[e.first];
        for (std::size_t k = 1; k < row.size(); ++k) {
            auto a = find(row[0].first), b = find(row[k].first);
            if (a != b)
                parent[a] = b;
        }
    }

    std::vector<std::uint32_t> order(cols);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return col_count[a] < col_count[b]; });
    std::vector<std::uint32_t> position(cols);
    for (std::uint32_t i = 0; i < cols; ++i)
        position[order[i]] = i;

    std::map<std::size_t, std::vector<Row>> blocks;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const Row& row = m.row(r);
        if (row.empty())
            continue;
        Row permuted;
        permuted.reserve(row.size());
        for (const auto& e : row)
            permuted.emplace_back(position[e.first], e.second);
        std::sort(permuted.begin(), permuted.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        blocks[find(row[0].first)].push_back(std::move(permuted));
    }

    std::size_t total = 0;
    for (auto& [root, rows] : blocks)
        total += detail::sparse_block_rank(m.field(), std::move(rows));
    return total;
}

} // namespace facering
