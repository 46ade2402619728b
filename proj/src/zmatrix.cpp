#include "bredon/zmatrix.hpp"

#include <algorithm>
#include <limits>

namespace bredon {

namespace {

using Dense = std::vector<std::vector<Int>>;

Dense identity_dense(std::size_t n)
{
    Dense m(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

// In-place dense Smith reduction. `left`/`right` are optional transform
// accumulators (row operations go to left, column operations to right).
std::vector<Int> dense_smith(Dense& a, Dense* left, Dense* right)
{
    std::vector<Int> factors;
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a[0].size();

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j)
            return;
        std::swap(a[i], a[j]);
        if (left)
            std::swap((*left)[i], (*left)[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (auto& row : a)
            std::swap(row[i], row[j]);
        if (right)
            for (auto& row : *right)
                std::swap(row[i], row[j]);
    };
    // row_i += q * row_j
    auto add_row = [&](std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t k = 0; k < n; ++k)
            if (!a[j][k].is_zero())
                a[i][k] += q * a[j][k];
        if (left)
            for (std::size_t k = 0; k < m; ++k)
                if (!(*left)[j][k].is_zero())
                    (*left)[i][k] += q * (*left)[j][k];
    };
    // col_i += q * col_j
    auto add_col = [&](std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t k = 0; k < m; ++k)
            if (!a[k][j].is_zero())
                a[k][i] += q * a[k][j];
        if (right)
            for (std::size_t k = 0; k < n; ++k)
                if (!(*right)[k][j].is_zero())
                    (*right)[k][i] += q * (*right)[k][j];
    };

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            std::size_t pi = m, pj = n;
            Int best;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (a[i][j].is_zero())
                        continue;
                    Int v = abs(a[i][j]);
                    if (pi == m || v < best) {
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == m) {
                return factors;
            }
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a[i][t].is_zero())
                    continue;
                Int q = a[i][t] / a[t][t];
                add_row(i, t, -q);
                if (!a[i][t].is_zero())
                    clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j].is_zero())
                    continue;
                Int q = a[t][j] / a[t][t];
                add_col(j, t, -q);
                if (!a[t][j].is_zero())
                    clean = false;
            }
            if (!clean)
                continue;

            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!Int(a[i][j] % a[t][t]).is_zero()) {
                        add_row(t, i, Int(1));
                        divides = false;
                        break;
                    }
            if (!divides)
                continue;
            break;
        }
        if (a[t][t] < 0) {
            for (std::size_t k = 0; k < n; ++k)
                a[t][k] = -a[t][k];
            if (left)
                for (std::size_t k = 0; k < m; ++k)
                    (*left)[t][k] = -(*left)[t][k];
        }
        factors.push_back(a[t][t]);
    }
    return factors;
}

// row_r -= coef * pivot, merging sorted sparse rows.
void subtract_scaled(IntMatrix::Row& row, const IntMatrix::Row& pivot, const Int& coef)
{
    IntMatrix::Row out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].col < pivot[j].col)) {
            out.push_back(std::move(row[i++]));
        } else if (i == row.size() || pivot[j].col < row[i].col) {
            out.push_back({pivot[j].col, -coef * pivot[j].value});
            ++j;
        } else {
            Int v = row[i].value - coef * pivot[j].value;
            if (!v.is_zero())
                out.push_back({row[i].col, std::move(v)});
            ++i;
            ++j;
        }
    }
    row = std::move(out);
}

const Int* find_in_row(const IntMatrix::Row& row, std::uint32_t col)
{
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const IntMatrix::Entry& e, std::uint32_t c) { return e.col < c; });
    if (it == row.end() || it->col != col)
        return nullptr;
    return &it->value;
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows)
{
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<Int>>& dense)
{
    IntMatrix m(dense.size(), dense.empty() ? 0 : dense[0].size());
    for (std::size_t r = 0; r < dense.size(); ++r) {
        if (dense[r].size() != m.cols_)
            throw std::invalid_argument("ragged dense matrix");
        for (std::size_t c = 0; c < dense[r].size(); ++c)
            if (!dense[r][c].is_zero())
                m.data_[r].push_back({static_cast<std::uint32_t>(c), dense[r][c]});
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.data_[i].push_back({static_cast<std::uint32_t>(i), Int(1)});
    return m;
}

std::size_t IntMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& row : data_)
        n += row.size();
    return n;
}

void IntMatrix::add(std::size_t r, std::size_t c, const Int& value)
{
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("IntMatrix::add index out of range");
    if (value.is_zero())
        return;
    auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, std::size_t col) { return e.col < col; });
    if (it != row.end() && it->col == c) {
        it->value += value;
        if (it->value.is_zero())
            row.erase(it);
    } else {
        row.insert(it, Entry{static_cast<std::uint32_t>(c), value});
    }
}

void IntMatrix::set(std::size_t r, std::size_t c, const Int& value)
{
    Int current = at(r, c);
    add(r, c, value - current);
}

Int IntMatrix::at(std::size_t r, std::size_t c) const
{
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("IntMatrix::at index out of range");
    const Int* v = find_in_row(data_[r], static_cast<std::uint32_t>(c));
    return v ? *v : Int(0);
}

std::vector<std::vector<Int>> IntMatrix::to_dense() const
{
    std::vector<std::vector<Int>> d(rows_, std::vector<Int>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& e : data_[r])
            d[r][e.col] = e.value;
    return d;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& e : data_[r])
            t.data_[e.col].push_back({static_cast<std::uint32_t>(r), e.value});
    return t;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const
{
    if (x.size() != cols_)
        throw std::invalid_argument("IntMatrix::apply dimension mismatch");
    std::vector<Int> y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& e : data_[r])
            if (!x[e.col].is_zero())
                y[r] += e.value * x[e.col];
    return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("IntMatrix product dimension mismatch");
    IntMatrix c(a.rows_, b.cols_);
    std::vector<Int> acc(b.cols_);
    std::vector<std::uint32_t> touched;
    std::vector<char> mark(b.cols_, 0);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        touched.clear();
        for (const auto& ea : a.data_[r])
            for (const auto& eb : b.data_[ea.col]) {
                if (!mark[eb.col]) {
                    mark[eb.col] = 1;
                    touched.push_back(eb.col);
                }
                acc[eb.col] += ea.value * eb.value;
            }
        std::sort(touched.begin(), touched.end());
        for (auto col : touched) {
            if (!acc[col].is_zero())
                c.data_[r].push_back({col, acc[col]});
            acc[col] = 0;
            mark[col] = 0;
        }
    }
    return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        return false;
    for (std::size_t r = 0; r < a.rows_; ++r) {
        const auto& x = a.data_[r];
        const auto& y = b.data_[r];
        if (x.size() != y.size())
            return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i].col != y[i].col || x[i].value != y[i].value)
                return false;
    }
    return true;
}

std::vector<Int> SmithForm::torsion() const
{
    std::vector<Int> t;
    for (const auto& d : invariant_factors)
        if (d > 1)
            t.push_back(d);
    return t;
}

SmithForm smith_normal_form(const IntMatrix& a)
{
    const std::size_t nrows = a.rows();
    const std::size_t ncols = a.cols();
    std::vector<IntMatrix::Row> rows(nrows);
    std::vector<std::vector<std::uint32_t>> col_rows(ncols);
    for (std::size_t r = 0; r < nrows; ++r) {
        rows[r] = a.row(r);
        for (const auto& e : rows[r])
            col_rows[e.col].push_back(static_cast<std::uint32_t>(r));
    }

    std::vector<char> active(nrows, 1);
    std::vector<char> col_done(ncols, 0);
    std::vector<std::uint32_t> stamp(nrows, 0);
    std::uint32_t clock = 0;
    std::size_t unit_pivots = 0;
    std::vector<std::uint32_t> live;

    bool progress = true;
    while (progress) {
        progress = false;
        for (std::uint32_t c = 0; c < ncols; ++c) {
            if (col_done[c])
                continue;
            ++clock;
            live.clear();
            for (auto r : col_rows[c]) {
                if (!active[r] || stamp[r] == clock)
                    continue;
                stamp[r] = clock;
                if (find_in_row(rows[r], c))
                    live.push_back(r);
            }
            col_rows[c] = live;
            if (live.empty()) {
                col_done[c] = 1;
                continue;
            }
            std::uint32_t pivot = nrows;
            for (auto r : live) {
                const Int& v = *find_in_row(rows[r], c);
                if (v != 1 && v != -1)
                    continue;
                if (pivot == nrows || rows[r].size() < rows[pivot].size() ||
                    (rows[r].size() == rows[pivot].size() && r < pivot))
                    pivot = r;
            }
            if (pivot == nrows)
                continue;

            const Int pv = *find_in_row(rows[pivot], c);
            for (auto r : live) {
                if (r == pivot)
                    continue;
                // pv is a unit, so a_rc / pv == a_rc * pv.
                Int coef = *find_in_row(rows[r], c) * pv;
                subtract_scaled(rows[r], rows[pivot], coef);
                for (const auto& e : rows[pivot])
                    if (e.col != c)
                        col_rows[e.col].push_back(r);
                if (rows[r].empty())
                    active[r] = 0;
            }
            active[pivot] = 0;
            rows[pivot].clear();
            col_done[c] = 1;
            col_rows[c].clear();
            ++unit_pivots;
            progress = true;
        }
    }

    // Dense reduction of whatever has no unit entries left.
    std::vector<std::uint32_t> rest_rows;
    std::vector<std::int64_t> col_map(ncols, -1);
    std::vector<std::uint32_t> rest_cols;
    for (std::uint32_t r = 0; r < nrows; ++r) {
        if (!active[r] || rows[r].empty())
            continue;
        rest_rows.push_back(r);
        for (const auto& e : rows[r])
            if (col_map[e.col] < 0) {
                col_map[e.col] = static_cast<std::int64_t>(rest_cols.size());
                rest_cols.push_back(e.col);
            }
    }

    SmithForm form;
    form.invariant_factors.assign(unit_pivots, Int(1));
    if (!rest_rows.empty()) {
        Dense d(rest_rows.size(), std::vector<Int>(rest_cols.size()));
        for (std::size_t i = 0; i < rest_rows.size(); ++i)
            for (const auto& e : rows[rest_rows[i]])
                d[i][static_cast<std::size_t>(col_map[e.col])] = e.value;
        for (auto& f : dense_smith(d, nullptr, nullptr))
            form.invariant_factors.push_back(std::move(f));
    }
    return form;
}

SmithDecomposition smith_decomposition(const std::vector<std::vector<Int>>& a)
{
    SmithDecomposition out;
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a[0].size();
    out.diagonal = a;
    out.left = identity_dense(m);
    out.right = identity_dense(n);
    out.form.invariant_factors = dense_smith(out.diagonal, &out.left, &out.right);
    return out;
}

std::vector<std::vector<Int>> multiply(const std::vector<std::vector<Int>>& a,
                                       const std::vector<std::vector<Int>>& b)
{
    const std::size_t m = a.size();
    const std::size_t k = b.size();
    const std::size_t n = k == 0 ? 0 : b[0].size();
    if (m > 0 && a[0].size() != k)
        throw std::invalid_argument("dense product dimension mismatch");
    std::vector<std::vector<Int>> c(m, std::vector<Int>(n));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b[t][j].is_zero())
                    c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

std::string to_string(const Int& v)
{
    return v.str();
}

}  // namespace bredon
