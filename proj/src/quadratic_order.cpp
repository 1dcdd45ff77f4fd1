#include "hermlat/quadratic_order.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace hermlat {

namespace {

std::int64_t to_i64(mpz_class const & z)
{
    if (!z.fits_slong_p())
        throw std::overflow_error("integer does not fit in 64 bits: " + z.get_str());
    return z.get_si();
}

bool is_squarefree(std::int64_t m)
{
    m = m < 0 ? -m : m;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % (p * p) == 0)
            return false;
    }
    return true;
}

/* Integer coordinates of d * x for the common denominator d of gens. */
struct ScaledCoords
{
    mpz_class den;
    std::vector<std::pair<mpz_class, mpz_class>> xy;
};

ScaledCoords scale_to_integers(std::vector<KNumber> const & gens)
{
    ScaledCoords s;
    s.den = 1;
    for (auto const & g : gens) {
        s.den = lcm(s.den, mpz_class(g.a().get_den()));
        s.den = lcm(s.den, mpz_class(g.b().get_den()));
    }
    for (auto const & g : gens) {
        mpq_class x = g.a() * s.den;
        mpq_class y = g.b() * s.den;
        s.xy.emplace_back(x.get_num(), y.get_num());
    }
    return s;
}

}  // namespace

std::string fundamental_discriminant_failure(std::int64_t disc)
{
    if (disc >= 0)
        return "discriminant must be negative";
    std::int64_t r = ((disc % 4) + 4) % 4;
    if (r == 1) {
        if (!is_squarefree(disc))
            return "discriminant = 1 mod 4 but not squarefree";
        return {};
    }
    if (r == 0) {
        std::int64_t m = disc / 4;
        std::int64_t mr = ((m % 4) + 4) % 4;
        if (mr == 1)
            return "discriminant/4 = 1 mod 4, so not fundamental";
        if (mr == 0 || !is_squarefree(m))
            return "discriminant/4 not squarefree";
        return {};
    }
    return "discriminant must be 0 or 1 mod 4";
}

Order Order::make(std::int64_t disc)
{
    std::string why = fundamental_discriminant_failure(disc);
    if (!why.empty())
        throw std::invalid_argument("disc " + std::to_string(disc) + ": " + why);
    if (((disc % 4) + 4) % 4 == 0)
        return Order(disc, 0, -disc / 4);
    return Order(disc, 1, (1 - disc) / 4);
}

Order make_order(std::int64_t disc) { return Order::make(disc); }

/* KNumber */

KNumber KNumber::conj() const
{
    KNumber r = *this;
    r.a_ = a_ + b_ * t_;
    r.b_ = -b_;
    return r;
}

Rational KNumber::norm() const
{
    Rational r = a_ * a_ + a_ * b_ * t_ + b_ * b_ * n_;
    return r;
}

Rational KNumber::trace() const
{
    Rational r = 2 * a_ + b_ * t_;
    return r;
}

KNumber KNumber::inverse() const
{
    if (is_zero())
        throw std::domain_error("inverse of zero in K");
    Rational nrm = norm();
    KNumber c = conj();
    c.a_ /= nrm;
    c.b_ /= nrm;
    return c;
}

KNumber & KNumber::operator+=(KNumber const & o)
{
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

KNumber & KNumber::operator-=(KNumber const & o)
{
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

KNumber & KNumber::operator*=(KNumber const & o)
{
    /* w^2 = t w - n */
    Rational bd = b_ * o.b_;
    Rational na = a_ * o.a_ - bd * n_;
    Rational nb = a_ * o.b_ + b_ * o.a_ + bd * t_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

KNumber KNumber::operator-() const
{
    KNumber r = *this;
    r.a_ = -a_;
    r.b_ = -b_;
    return r;
}

KNumber KNumber::scaled(Rational const & q) const
{
    KNumber r = *this;
    Rational c = q;
    c.canonicalize();
    r.a_ *= c;
    r.b_ *= c;
    return r;
}

std::string KNumber::to_string() const
{
    std::ostringstream os;
    os << a_.get_str();
    if (sgn(b_) >= 0)
        os << "+";
    os << b_.get_str() << "*w";
    return os.str();
}

std::vector<KNumber> units(Order const & o)
{
    std::vector<KNumber> us;
    std::int64_t t = o.omega_trace(), n = o.omega_norm();
    /* x^2 + t x y + n y^2 = 1 forces |y| <= 1 since n >= 1 and 4n - t^2 >= 3 */
    for (std::int64_t y = -1; y <= 1; ++y) {
        for (std::int64_t x = -2; x <= 2; ++x) {
            if (x * x + t * x * y + n * y * y == 1)
                us.emplace_back(o, x, y);
        }
    }
    return us;
}

/* FracIdeal */

FracIdeal::FracIdeal(Order const & o, std::int64_t d, std::int64_t a, std::int64_t b, std::int64_t c)
    : order_(o), d_(d), a_(a), b_(b), c_(c)
{
    if (d <= 0 || a <= 0 || c <= 0)
        throw std::invalid_argument("ideal HNF requires a, c, d > 0");
    if (a % c != 0 || b % c != 0)
        throw std::invalid_argument("ideal HNF requires c | a and c | b");
    if (b < 0 || b >= a)
        throw std::invalid_argument("ideal HNF requires 0 <= b < a");
    if (std::gcd(std::gcd(a, b), std::gcd(c, d)) != 1)
        throw std::invalid_argument("ideal HNF requires gcd(a, b, c, d) = 1");
    /* w-stability on the integral module Z a + Z (b + c w) */
    KNumber w(o, 0, 1);
    FracIdeal integral = *this;
    integral.d_ = 1;
    if (!integral.contains(w * KNumber(o, a)) || !integral.contains(w * KNumber(o, b, c)))
        throw std::invalid_argument("module is not stable under multiplication by w");
}

FracIdeal FracIdeal::from_generators(Order const & o, std::vector<KNumber> const & gens)
{
    ScaledCoords s = scale_to_integers(gens);
    /* 2-dimensional Hermite normal form: pivot (px, py) with py = gcd of
     * all y-coordinates, plus the gcd of the x-coordinates of the kernel. */
    bool have_pivot = false;
    mpz_class px = 0, py = 0, ax = 0;
    for (auto const & [x, y] : s.xy) {
        if (y == 0) {
            ax = gcd(ax, x);
            continue;
        }
        if (!have_pivot) {
            px = x;
            py = y;
            have_pivot = true;
            continue;
        }
        mpz_class g, u, v;
        mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), py.get_mpz_t(), y.get_mpz_t());
        mpz_class kx = (y / g) * px - (py / g) * x;
        mpz_class nx = u * px + v * x;
        px = nx;
        py = g;
        ax = gcd(ax, kx);
    }
    if (!have_pivot || ax == 0)
        throw std::invalid_argument("generators do not span a rank 2 module");
    if (py < 0) {
        py = -py;
        px = -px;
    }
    ax = abs(ax);
    mpz_class bx = px % ax;
    if (bx < 0)
        bx += ax;
    mpz_class g = gcd(gcd(ax, bx), gcd(py, s.den));
    return FracIdeal(o, to_i64(s.den / g), to_i64(ax / g), to_i64(bx / g), to_i64(py / g));
}

FracIdeal FracIdeal::principal(Order const & o, KNumber const & x)
{
    if (x.is_zero())
        throw std::invalid_argument("zero ideal");
    return from_generators(o, {x, x * KNumber(o, 0, 1)});
}

KNumber FracIdeal::gen0() const { return KNumber(order_, Rational(a_, d_)); }

KNumber FracIdeal::gen1() const { return KNumber(order_, Rational(b_, d_), Rational(c_, d_)); }

Rational FracIdeal::norm() const
{
    Rational r(mpz_class(a_) * c_, mpz_class(d_) * d_);
    r.canonicalize();
    return r;
}

bool FracIdeal::contains(KNumber const & x) const
{
    mpq_class X = x.a() * d_;
    mpq_class Y = x.b() * d_;
    if (X.get_den() != 1 || Y.get_den() != 1)
        return false;
    mpz_class y = Y.get_num();
    if (y % c_ != 0)
        return false;
    mpz_class k = y / c_;
    mpz_class r = X.get_num() - k * b_;
    return r % a_ == 0;
}

bool FracIdeal::is_subset_of(FracIdeal const & o) const { return o.contains(gen0()) && o.contains(gen1()); }

bool FracIdeal::is_integral() const { return is_subset_of(unit(order_)); }

bool FracIdeal::operator<(FracIdeal const & o) const
{
    return std::make_tuple(d_, a_, b_, c_) < std::make_tuple(o.d_, o.a_, o.b_, o.c_);
}

std::string FracIdeal::to_string() const
{
    std::ostringstream os;
    os << "[" << d_ << " | " << a_ << ", " << b_ << ", " << c_ << "]";
    return os.str();
}

FracIdeal FracIdeal::parse(Order const & o, std::string const & text)
{
    std::istringstream is(text);
    char open = 0, bar = 0, c1 = 0, c2 = 0, close = 0;
    std::int64_t d = 0, a = 0, b = 0, c = 0;
    is >> open >> d >> bar >> a >> c1 >> b >> c2 >> c >> close;
    if (!is || open != '[' || bar != '|' || c1 != ',' || c2 != ',' || close != ']')
        throw std::invalid_argument("malformed ideal text: " + text);
    std::string rest;
    if (is >> rest)
        throw std::invalid_argument("trailing characters after ideal: " + text);
    return FracIdeal(o, d, a, b, c);
}

FracIdeal ideal_mul(FracIdeal const & x, FracIdeal const & y)
{
    if (!(x.order() == y.order()))
        throw std::invalid_argument("ideals over different orders");
    KNumber x0 = x.gen0(), x1 = x.gen1(), y0 = y.gen0(), y1 = y.gen1();
    return FracIdeal::from_generators(x.order(), {x0 * y0, x0 * y1, x1 * y0, x1 * y1});
}

FracIdeal ideal_conj(FracIdeal const & x)
{
    return FracIdeal::from_generators(x.order(), {x.gen0().conj(), x.gen1().conj()});
}

Rational ideal_norm(FracIdeal const & x) { return x.norm(); }

FracIdeal ideal_inv(FracIdeal const & x)
{
    /* a * conj(a) = N(a) R */
    Rational inv_norm = 1 / x.norm();
    FracIdeal c = ideal_conj(x);
    return FracIdeal::from_generators(x.order(), {c.gen0().scaled(inv_norm), c.gen1().scaled(inv_norm)});
}

FracIdeal ideal_add(FracIdeal const & x, FracIdeal const & y)
{
    if (!(x.order() == y.order()))
        throw std::invalid_argument("ideals over different orders");
    return FracIdeal::from_generators(x.order(), {x.gen0(), x.gen1(), y.gen0(), y.gen1()});
}

FracIdeal ideal_scale(FracIdeal const & x, KNumber const & lambda)
{
    if (lambda.is_zero())
        throw std::invalid_argument("zero ideal");
    return FracIdeal::from_generators(x.order(), {x.gen0() * lambda, x.gen1() * lambda});
}

FracIdeal ideal_pow(FracIdeal const & x, unsigned e)
{
    FracIdeal r = FracIdeal::unit(x.order());
    for (unsigned i = 0; i < e; ++i)
        r = ideal_mul(r, x);
    return r;
}

std::optional<KNumber> is_principal(FracIdeal const & x)
{
    Order const & o = x.order();
    std::int64_t t = o.omega_trace(), n = o.omega_norm();
    using I = __int128;
    auto nrm = [&](I u, I v) { return u * u + t * u * v + n * v * v; };
    /* 2 B(p, q) = Tr(p conj(q)) */
    auto tr = [&](I u1, I v1, I u2, I v2) { return 2 * u1 * u2 + t * (u1 * v2 + v1 * u2) + 2 * n * v1 * v2; };

    I p1 = x.hnf_a(), q1 = 0;
    I p2 = x.hnf_b(), q2 = x.hnf_c();
    for (;;) {
        if (nrm(p1, q1) > nrm(p2, q2)) {
            std::swap(p1, p2);
            std::swap(q1, q2);
        }
        I n1 = nrm(p1, q1);
        I b2 = tr(p1, q1, p2, q2);
        /* r = round(B / N1) = floor((2B + 2 N1) / (4 N1)) ... computed on 2B */
        I num = b2 + n1;
        I den = 2 * n1;
        I r = num / den;
        if ((num % den != 0) && ((num < 0) != (den < 0)))
            --r;
        if (r == 0)
            break;
        p2 -= r * p1;
        q2 -= r * q1;
    }
    I shortest = nrm(p1, q1);
    I target = static_cast<I>(x.hnf_a()) * x.hnf_c();
    if (shortest != target)
        return std::nullopt;
    KNumber mu(o, Rational(static_cast<long>(p1), x.den()), Rational(static_cast<long>(q1), x.den()));
    std::optional<KNumber> best;
    auto key = [](KNumber const & k) { return std::make_tuple(abs(k.b()), sgn(k.b()) < 0, sgn(k.a()) < 0); };
    for (auto const & u : units(o)) {
        KNumber cand = mu * u;
        if (!best || key(cand) < key(*best))
            best = cand;
    }
    return best;
}

std::vector<FracIdeal> primitive_ideals_of_norm(Order const & o, std::int64_t norm)
{
    std::vector<FracIdeal> out;
    if (norm <= 0)
        return out;
    std::int64_t t = o.omega_trace(), n = o.omega_norm();
    for (std::int64_t b = 0; b < norm; ++b) {
        __int128 f = static_cast<__int128>(b) * b + static_cast<__int128>(t) * b + n;
        if (f % norm == 0)
            out.emplace_back(o, 1, norm, b, 1);
    }
    return out;
}

std::vector<FracIdeal> integral_ideals_of_norm(Order const & o, std::int64_t norm)
{
    std::vector<FracIdeal> out;
    for (std::int64_t c = 1; c * c <= norm; ++c) {
        if (norm % (c * c) != 0)
            continue;
        for (auto const & p : primitive_ideals_of_norm(o, norm / (c * c)))
            out.emplace_back(o, 1, c * p.hnf_a(), c * p.hnf_b(), c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::int64_t> express_one(std::vector<KNumber> const & elems)
{
    std::size_t m = elems.size();
    std::vector<mpz_class> xs(m), ys(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (elems[i].a().get_den() != 1 || elems[i].b().get_den() != 1)
            throw std::invalid_argument("express_one: element not integral");
        xs[i] = elems[i].a().get_num();
        ys[i] = elems[i].b().get_num();
    }
    /* Each working vector carries its combination coefficients. */
    struct Row
    {
        mpz_class x, y;
        std::vector<mpz_class> coef;
    };
    std::vector<Row> rows;
    for (std::size_t i = 0; i < m; ++i) {
        Row r{xs[i], ys[i], std::vector<mpz_class>(m, 0)};
        r.coef[i] = 1;
        rows.push_back(std::move(r));
    }
    auto combine = [&](Row const & p, Row const & q, mpz_class const & u, mpz_class const & v) {
        Row r{u * p.x + v * q.x, u * p.y + v * q.y, std::vector<mpz_class>(m)};
        for (std::size_t k = 0; k < m; ++k)
            r.coef[k] = u * p.coef[k] + v * q.coef[k];
        return r;
    };
    /* eliminate y */
    std::vector<Row> kernel;
    std::optional<Row> pivot;
    for (auto & r : rows) {
        if (r.y == 0) {
            kernel.push_back(r);
            continue;
        }
        if (!pivot) {
            pivot = r;
            continue;
        }
        mpz_class g, u, v;
        mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), pivot->y.get_mpz_t(), r.y.get_mpz_t());
        Row k = combine(*pivot, r, mpz_class(r.y / g), mpz_class(-(pivot->y / g)));
        Row np = combine(*pivot, r, u, v);
        pivot = np;
        kernel.push_back(k);
    }
    /* gcd of x over the kernel */
    std::optional<Row> acc;
    for (auto & r : kernel) {
        if (r.x == 0)
            continue;
        if (!acc) {
            acc = r;
            continue;
        }
        mpz_class g, u, v;
        mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), acc->x.get_mpz_t(), r.x.get_mpz_t());
        acc = combine(*acc, r, u, v);
    }
    if (!acc || abs(acc->x) != 1)
        throw std::invalid_argument("express_one: 1 is not in the Z-span");
    std::vector<std::int64_t> out(m);
    for (std::size_t k = 0; k < m; ++k)
        out[k] = to_i64(acc->x > 0 ? acc->coef[k] : mpz_class(-acc->coef[k]));
    return out;
}

/* class group */

std::size_t IdealClassGroup::class_of(FracIdeal const & x) const
{
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (is_principal(ideal_mul(x, ideal_inv(classes[i]))))
            return i;
    }
    throw std::logic_error("ideal class not found among representatives");
}

std::size_t IdealClassGroup::inverse_of(std::size_t i) const
{
    for (std::size_t j = 0; j < classes.size(); ++j) {
        if (table[i][j] == 0)
            return j;
    }
    throw std::logic_error("class group table has no inverse");
}

std::size_t IdealClassGroup::conj_of(std::size_t i) const { return inverse_of(i); }

std::size_t IdealClassGroup::order_of(std::size_t i) const
{
    std::size_t k = 1, cur = i;
    while (cur != 0) {
        cur = table[cur][i];
        ++k;
    }
    return k;
}

std::size_t IdealClassGroup::power(std::size_t i, unsigned e) const
{
    std::size_t cur = 0;
    for (unsigned k = 0; k < e; ++k)
        cur = table[cur][i];
    return cur;
}

namespace {

bool generates(IdealClassGroup const & g, std::vector<std::size_t> const & gens)
{
    std::vector<bool> seen(g.class_number(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::size_t c = stack.back();
        stack.pop_back();
        for (auto s : gens) {
            std::size_t d = g.table[c][s];
            if (!seen[d]) {
                seen[d] = true;
                ++count;
                stack.push_back(d);
            }
        }
    }
    return count == g.class_number();
}

bool next_combination(std::vector<std::size_t> & comb, std::size_t n)
{
    std::size_t k = comb.size();
    for (std::size_t i = k; i-- > 0;) {
        if (comb[i] < n - k + i) {
            ++comb[i];
            for (std::size_t j = i + 1; j < k; ++j)
                comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

IdealClassGroup class_group(Order const & o)
{
    IdealClassGroup g;
    g.order = o;
    g.classes.push_back(FracIdeal::unit(o));
    /* every class holds a reduced form with a <= sqrt(|disc|/3) */
    std::int64_t bound = 1;
    while ((bound + 1) * (bound + 1) * 3 <= -o.disc())
        ++bound;
    for (std::int64_t a = 2; a <= bound; ++a) {
        for (auto const & p : primitive_ideals_of_norm(o, a)) {
            bool known = false;
            for (auto const & c : g.classes) {
                if (is_principal(ideal_mul(p, ideal_inv(c)))) {
                    known = true;
                    break;
                }
            }
            if (!known)
                g.classes.push_back(p);
        }
    }
    std::size_t h = g.classes.size();
    g.table.assign(h, std::vector<std::size_t>(h, 0));
    for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t j = i; j < h; ++j) {
            std::size_t k = g.class_of(ideal_mul(g.classes[i], g.classes[j]));
            g.table[i][j] = g.table[j][i] = k;
        }
    }
    g.exponent = 1;
    for (std::size_t i = 0; i < h; ++i)
        g.exponent = std::lcm(g.exponent, g.order_of(i));
    /* smallest generating set, lexicographically first by representative norm */
    for (std::size_t k = 1; k < h && g.generators.empty(); ++k) {
        std::vector<std::size_t> comb(k);
        std::iota(comb.begin(), comb.end(), std::size_t{1});
        do {
            if (generates(g, comb)) {
                g.generators = comb;
                break;
            }
        } while (next_combination(comb, h));
    }
    return g;
}

}  // namespace hermlat
