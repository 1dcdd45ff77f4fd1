#include "hermlat/linalg.hpp"

#include <stdexcept>

namespace hermlat {

KMatrix::KMatrix(Order const & o, std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, KNumber(o, 0))
{
}

KMatrix KMatrix::identity(Order const & o, std::size_t n)
{
    KMatrix m(o, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = KNumber(o, 1);
    return m;
}

KMatrix KMatrix::from_rows(std::vector<KVector> const & rows)
{
    KMatrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows[0].size();
    for (auto const & r : rows) {
        if (r.size() != m.cols_)
            throw std::invalid_argument("ragged matrix rows");
        m.data_.insert(m.data_.end(), r.begin(), r.end());
    }
    return m;
}

KVector KMatrix::row(std::size_t i) const
{
    return KVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

KMatrix KMatrix::conj_transpose() const
{
    KMatrix m;
    m.rows_ = cols_;
    m.cols_ = rows_;
    m.data_.resize(data_.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m(j, i) = (*this)(i, j).conj();
    return m;
}

KMatrix KMatrix::conj() const
{
    KMatrix m = *this;
    for (auto & x : m.data_)
        x = x.conj();
    return m;
}

KMatrix KMatrix::scaled(Rational const & q) const
{
    KMatrix m = *this;
    for (auto & x : m.data_)
        x = x.scaled(q);
    return m;
}

bool KMatrix::is_hermitian() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i).conj())
                return false;
    return true;
}

bool KMatrix::is_identity() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            KNumber const & x = (*this)(i, j);
            if (i == j ? !(x.is_rational() && x.a() == 1) : !x.is_zero())
                return false;
        }
    return true;
}

KMatrix operator*(KMatrix const & x, KMatrix const & y)
{
    if (x.cols_ != y.rows_)
        throw std::invalid_argument("matrix dimension mismatch");
    KMatrix m;
    m.rows_ = x.rows_;
    m.cols_ = y.cols_;
    m.data_.reserve(m.rows_ * m.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
        for (std::size_t j = 0; j < y.cols_; ++j) {
            KNumber s = x(i, 0) * y(0, j);
            for (std::size_t k = 1; k < x.cols_; ++k)
                s += x(i, k) * y(k, j);
            m.data_.push_back(std::move(s));
        }
    return m;
}

KNumber determinant(KMatrix m)
{
    std::size_t n = m.rows();
    if (n != m.cols())
        throw std::invalid_argument("determinant of non-square matrix");
    KNumber det = m(0, 0).same_field(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero())
            ++p;
        if (p == n)
            return det.scaled(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        KNumber inv = m(c, c).inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c).is_zero())
                continue;
            KNumber f = m(r, c) * inv;
            for (std::size_t j = c; j < n; ++j)
                m(r, j) -= f * m(c, j);
        }
    }
    return det;
}

KMatrix inverse(KMatrix const & src)
{
    std::size_t n = src.rows();
    if (n != src.cols())
        throw std::invalid_argument("inverse of non-square matrix");
    KMatrix m = src;
    KMatrix inv = src;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = src(i, j).same_field(i == j ? 1 : 0);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero())
            ++p;
        if (p == n)
            throw std::domain_error("singular matrix over K");
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(p, j), m(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        }
        KNumber piv = m(c, c).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) *= piv;
            inv(c, j) *= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m(r, c).is_zero())
                continue;
            KNumber f = m(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                m(r, j) -= f * m(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

Rational determinant(RatMatrix m)
{
    std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m[p][c]) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (sgn(m[r][c]) == 0)
                continue;
            Rational f = m[r][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j)
                m[r][j] -= f * m[c][j];
        }
    }
    return det;
}

RatMatrix inverse(RatMatrix const & src)
{
    std::size_t n = src.size();
    RatMatrix m = src;
    RatMatrix inv(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m[p][c]) == 0)
            ++p;
        if (p == n)
            throw std::domain_error("singular rational matrix");
        std::swap(m[p], m[c]);
        std::swap(inv[p], inv[c]);
        Rational piv = 1 / m[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] *= piv;
            inv[c][j] *= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || sgn(m[r][c]) == 0)
                continue;
            Rational f = m[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

RatMatrix multiply(RatMatrix const & a, RatMatrix const & b)
{
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    RatMatrix r(n, std::vector<Rational>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (sgn(a[i][l]) == 0)
                continue;
            for (std::size_t j = 0; j < m; ++j)
                r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

std::size_t rank(RatMatrix m)
{
    RationalSpan span(m.empty() ? 0 : m[0].size());
    for (auto & row : m)
        span.add(std::move(row));
    return span.rank();
}

ZMatrix hermite_normal_form(ZMatrix rows)
{
    ZMatrix out;
    if (rows.empty())
        return out;
    std::size_t ncols = rows[0].size();
    std::size_t top = 0;
    for (std::size_t col = 0; col < ncols && top < rows.size(); ++col) {
        /* gcd-combine every row below top into a single pivot at rows[top] */
        for (std::size_t r = top + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0)
                continue;
            if (rows[top][col] == 0) {
                std::swap(rows[top], rows[r]);
                continue;
            }
            mpz_class g, u, v;
            mpz_class a = rows[top][col], b = rows[r][col];
            mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            mpz_class a_g = a / g, b_g = b / g;
            for (std::size_t j = col; j < ncols; ++j) {
                mpz_class x = rows[top][j], y = rows[r][j];
                rows[top][j] = u * x + v * y;
                rows[r][j] = a_g * y - b_g * x;
            }
        }
        if (rows[top][col] == 0)
            continue;
        if (rows[top][col] < 0)
            for (std::size_t j = col; j < ncols; ++j)
                rows[top][j] = -rows[top][j];
        for (std::size_t r = 0; r < top; ++r) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
            if (q != 0)
                for (std::size_t j = col; j < ncols; ++j)
                    rows[r][j] -= q * rows[top][j];
        }
        ++top;
    }
    rows.resize(top);
    return rows;
}

bool RationalSpan::add(std::vector<Rational> v)
{
    if (v.size() != dim_)
        throw std::invalid_argument("RationalSpan dimension mismatch");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        std::size_t p = pivots_[k];
        if (sgn(v[p]) == 0)
            continue;
        Rational f = v[p];
        for (std::size_t j = 0; j < dim_; ++j)
            v[j] -= f * rows_[k][j];
    }
    std::size_t p = 0;
    while (p < dim_ && sgn(v[p]) == 0)
        ++p;
    if (p == dim_)
        return false;
    Rational inv = 1 / v[p];
    for (auto & x : v)
        x *= inv;
    /* keep rows reduced against the new pivot */
    for (auto & r : rows_) {
        if (sgn(r[p]) == 0)
            continue;
        Rational f = r[p];
        for (std::size_t j = 0; j < dim_; ++j)
            r[j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool RationalSpan::add(IntVector const & v)
{
    std::vector<Rational> r(v.begin(), v.end());
    return add(std::move(r));
}

bool RationalSpan::contains(IntVector const & v) const
{
    std::vector<Rational> w(v.begin(), v.end());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        std::size_t p = pivots_[k];
        if (sgn(w[p]) == 0)
            continue;
        Rational f = w[p];
        for (std::size_t j = 0; j < dim_; ++j)
            w[j] -= f * rows_[k][j];
    }
    for (auto const & x : w)
        if (sgn(x) != 0)
            return false;
    return true;
}

}  // namespace hermlat
