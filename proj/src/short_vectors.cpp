#include "hermlat/short_vectors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hermlat {

namespace {

std::int64_t narrow(__int128 v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("integer form value exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

__int128 form_value_wide(IntMatrix const & q, IntVector const & x, IntVector const & y)
{
    __int128 s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0)
            continue;
        __int128 row = 0;
        for (std::size_t j = 0; j < y.size(); ++j)
            row += static_cast<__int128>(q[i][j]) * y[j];
        s += row * x[i];
    }
    return s;
}

IntVector column(IntMatrix const & u, std::size_t j)
{
    IntVector c(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        c[i] = u[i][j];
    return c;
}

/* Gram-Schmidt data of the basis given by the columns of u. */
struct GramSchmidt
{
    std::vector<std::vector<Rational>> mu;
    std::vector<Rational> bstar;
};

GramSchmidt gram_schmidt(IntMatrix const & q, IntMatrix const & u)
{
    std::size_t m = q.size();
    std::vector<IntVector> cols(m);
    for (std::size_t j = 0; j < m; ++j)
        cols[j] = column(u, j);
    GramSchmidt gs;
    gs.mu.assign(m, std::vector<Rational>(m, 0));
    gs.bstar.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            Rational v = form_value(q, cols[i], cols[j]);
            for (std::size_t l = 0; l < j; ++l)
                v -= gs.mu[j][l] * gs.mu[i][l] * gs.bstar[l];
            if (j < i)
                gs.mu[i][j] = v / gs.bstar[j];
            else
                gs.bstar[i] = v;
        }
        if (sgn(gs.bstar[i]) <= 0)
            throw std::domain_error("form is not positive definite");
    }
    return gs;
}

mpz_class round_nearest(Rational const & x)
{
    mpz_class num = 2 * x.get_num() + x.get_den();
    mpz_class den = 2 * x.get_den();
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

struct Enumerator
{
    std::size_t m;
    std::vector<std::vector<double>> qd;  // qd[i][i] diagonal, qd[i][j] (j > i) coefficients
    IntMatrix const & q;
    std::int64_t bound;
    std::size_t limit;
    IntVector y;
    std::vector<ShortVector> out;

    Enumerator(IntMatrix const & form, std::int64_t b, std::size_t lim) : m(form.size()), q(form), bound(b), limit(lim)
    {
        qd.assign(m, std::vector<double>(m, 0.0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                qd[i][j] = static_cast<double>(form[i][j]);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                qd[j][i] = qd[i][j];
                qd[i][j] /= qd[i][i];
            }
            for (std::size_t k = i + 1; k < m; ++k)
                for (std::size_t l = k; l < m; ++l)
                    qd[k][l] -= qd[k][i] * qd[i][l];
        }
        y.assign(m, 0);
    }

    void run()
    {
        double start = static_cast<double>(bound) * (1.0 + 1e-9) + 1e-6;
        recurse(m - 1, start, true);
    }

    void recurse(std::size_t i, double remaining, bool zero_above)
    {
        double c = 0.0;
        for (std::size_t j = i + 1; j < m; ++j)
            c -= qd[i][j] * static_cast<double>(y[j]);
        double r = std::sqrt(std::max(0.0, remaining / qd[i][i])) + 1e-7;
        auto lo = static_cast<std::int64_t>(std::ceil(c - r));
        auto hi = static_cast<std::int64_t>(std::floor(c + r));
        if (zero_above)
            lo = std::max<std::int64_t>(lo, 0);
        for (std::int64_t v = lo; v <= hi; ++v) {
            double d = static_cast<double>(v) - c;
            double rem = remaining - qd[i][i] * d * d;
            if (rem < -1e-6 * (1.0 + remaining))
                continue;
            y[i] = v;
            bool still_zero = zero_above && v == 0;
            if (i == 0) {
                if (!still_zero)
                    accept();
            } else {
                recurse(i - 1, rem, still_zero);
            }
        }
        y[i] = 0;
    }

    void accept()
    {
        __int128 n = form_value_wide(q, y, y);
        if (n > bound)
            return;
        if (out.size() >= limit)
            throw std::length_error("short vector count exceeds limit");
        out.push_back({y, narrow(n)});
    }
};

}  // namespace

std::int64_t form_value(IntMatrix const & q, IntVector const & x, IntVector const & y)
{
    return narrow(form_value_wide(q, x, y));
}

IntMatrix lll_reduce(IntMatrix const & q)
{
    std::size_t m = q.size();
    IntMatrix u(m, IntVector(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        u[i][i] = 1;
    if (m <= 1)
        return u;
    Rational const delta(99, 100);
    auto sub_col = [&](std::size_t k, std::size_t j, mpz_class const & r) {
        for (std::size_t i = 0; i < m; ++i) {
            mpz_class v = mpz_class(static_cast<long>(u[i][k])) - r * static_cast<long>(u[i][j]);
            if (!v.fits_slong_p())
                throw std::overflow_error("LLL transformation exceeds 64 bits");
            u[i][k] = v.get_si();
        }
    };
    std::size_t k = 1;
    GramSchmidt gs = gram_schmidt(q, u);
    while (k < m) {
        for (std::size_t jj = k; jj-- > 0;) {
            mpz_class r = round_nearest(gs.mu[k][jj]);
            if (r == 0)
                continue;
            sub_col(k, jj, r);
            for (std::size_t l = 0; l < jj; ++l)
                gs.mu[k][l] -= Rational(r) * gs.mu[jj][l];
            gs.mu[k][jj] -= Rational(r);
        }
        if (gs.bstar[k] < (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.bstar[k - 1]) {
            for (std::size_t i = 0; i < m; ++i)
                std::swap(u[i][k], u[i][k - 1]);
            gs = gram_schmidt(q, u);
            k = std::max<std::size_t>(k - 1, 1);
        } else {
            ++k;
        }
    }
    return u;
}

std::vector<ShortVector> short_vectors(IntMatrix const & q, std::int64_t bound, std::size_t limit)
{
    std::size_t m = q.size();
    if (m == 0 || bound <= 0)
        return {};
    IntMatrix u = lll_reduce(q);
    IntMatrix qr(m, IntVector(m, 0));
    std::vector<IntVector> cols(m);
    for (std::size_t j = 0; j < m; ++j)
        cols[j] = column(u, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            qr[i][j] = form_value(q, cols[i], cols[j]);

    Enumerator e(qr, bound, limit);
    e.run();

    std::vector<ShortVector> res;
    res.reserve(e.out.size());
    for (auto & sv : e.out) {
        IntVector x(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            __int128 s = 0;
            for (std::size_t j = 0; j < m; ++j)
                s += static_cast<__int128>(u[i][j]) * sv.coords[j];
            x[i] = narrow(s);
        }
        std::size_t last = m;
        while (last > 0 && x[last - 1] == 0)
            --last;
        if (last > 0 && x[last - 1] < 0)
            for (auto & c : x)
                c = -c;
        res.push_back({std::move(x), sv.norm});
    }
    std::sort(res.begin(), res.end(), [](ShortVector const & a, ShortVector const & b) {
        return a.norm != b.norm ? a.norm < b.norm : a.coords < b.coords;
    });
    return res;
}

std::vector<std::int64_t> theta_series(IntMatrix const & q, std::int64_t depth)
{
    std::vector<std::int64_t> theta(static_cast<std::size_t>(depth) + 1, 0);
    theta[0] = 1;
    for (auto const & sv : short_vectors(q, depth))
        theta[static_cast<std::size_t>(sv.norm)] += 2;
    return theta;
}

}  // namespace hermlat
