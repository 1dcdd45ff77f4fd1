#ifndef HERMLAT_QUADRATIC_ORDER_HPP
#define HERMLAT_QUADRATIC_ORDER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hermlat {

using Rational = mpq_class;

/*
 * The maximal order R = Z[w] of Q(sqrt(disc)), disc a fundamental negative
 * discriminant. w is the root of w^2 - t w + n = 0 with
 *   t = 0, n = -disc/4        if disc = 0 mod 4
 *   t = 1, n = (1 - disc)/4   if disc = 1 mod 4
 * so that t^2 - 4n = disc.
 */
class Order
{
    std::int64_t disc_ = -4;
    std::int64_t t_ = 0;
    std::int64_t n_ = 1;

    Order(std::int64_t d, std::int64_t t, std::int64_t n) : disc_(d), t_(t), n_(n) {}

  public:
    Order() = default;

    /* Throws std::invalid_argument naming the failed condition. */
    static Order make(std::int64_t disc);

    std::int64_t disc() const { return disc_; }
    std::int64_t omega_trace() const { return t_; }
    std::int64_t omega_norm() const { return n_; }

    /* Number of units of R (6, 4 or 2). */
    int unit_count() const { return disc_ == -3 ? 6 : (disc_ == -4 ? 4 : 2); }

    bool operator==(Order const &) const = default;
};

Order make_order(std::int64_t disc);

/* Human readable reason why disc is not a fundamental negative
 * discriminant, or an empty string if it is one. */
std::string fundamental_discriminant_failure(std::int64_t disc);

/* An element a + b w of K. */
class KNumber
{
    Rational a_, b_;
    std::int64_t t_ = 0, n_ = 1;

  public:
    KNumber() = default;
    KNumber(Order const & o, Rational a, Rational b = 0)
        : a_(std::move(a)), b_(std::move(b)), t_(o.omega_trace()), n_(o.omega_norm())
    {
        a_.canonicalize();
        b_.canonicalize();
    }

    Rational const & a() const { return a_; }
    Rational const & b() const { return b_; }
    std::int64_t omega_trace() const { return t_; }
    std::int64_t omega_norm() const { return n_; }

    /* a + b w in the same field as *this. */
    KNumber same_field(Rational a, Rational b = 0) const
    {
        KNumber x = *this;
        x.a_ = std::move(a);
        x.b_ = std::move(b);
        x.a_.canonicalize();
        x.b_.canonicalize();
        return x;
    }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    KNumber conj() const;
    Rational norm() const;
    Rational trace() const;
    KNumber inverse() const;

    KNumber & operator+=(KNumber const & o);
    KNumber & operator-=(KNumber const & o);
    KNumber & operator*=(KNumber const & o);

    friend KNumber operator+(KNumber x, KNumber const & y) { return x += y; }
    friend KNumber operator-(KNumber x, KNumber const & y) { return x -= y; }
    friend KNumber operator*(KNumber x, KNumber const & y) { return x *= y; }
    friend KNumber operator/(KNumber const & x, KNumber const & y) { return x * y.inverse(); }
    KNumber operator-() const;
    KNumber scaled(Rational const & q) const;

    bool operator==(KNumber const & o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(KNumber const & o) const { return !(*this == o); }

    /* "a+b*w" style, used in diagnostics. */
    std::string to_string() const;
};

/* All units of R. */
std::vector<KNumber> units(Order const & o);

/*
 * A fractional ideal (Z a + Z (b + c w)) / d in column Hermite normal form:
 * a, c, d > 0, c | a, c | b, 0 <= b < a, gcd(a, b, c, d) = 1.
 */
class FracIdeal
{
    Order order_;
    std::int64_t d_ = 1, a_ = 1, b_ = 0, c_ = 1;

  public:
    FracIdeal() = default;

    /* Validates the normal form invariants and w-stability. */
    FracIdeal(Order const & o, std::int64_t d, std::int64_t a, std::int64_t b, std::int64_t c);

    /* The Z-module generated by gens, which must have full rank 2 and be
     * stable under multiplication by w. */
    static FracIdeal from_generators(Order const & o, std::vector<KNumber> const & gens);
    static FracIdeal unit(Order const & o) { return FracIdeal(o, 1, 1, 0, 1); }
    static FracIdeal principal(Order const & o, KNumber const & x);

    Order const & order() const { return order_; }
    std::int64_t den() const { return d_; }
    std::int64_t hnf_a() const { return a_; }
    std::int64_t hnf_b() const { return b_; }
    std::int64_t hnf_c() const { return c_; }

    /* Z-basis {a/d, (b + c w)/d}. */
    KNumber gen0() const;
    KNumber gen1() const;

    Rational norm() const;
    bool contains(KNumber const & x) const;
    bool is_subset_of(FracIdeal const & o) const;
    bool is_integral() const;
    bool is_unit() const { return d_ == 1 && a_ == 1 && b_ == 0 && c_ == 1; }

    bool operator==(FracIdeal const & o) const
    {
        return order_ == o.order_ && d_ == o.d_ && a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
    }
    bool operator!=(FracIdeal const & o) const { return !(*this == o); }
    bool operator<(FracIdeal const & o) const;

    /* Canonical text "[d | a, b, c]". */
    std::string to_string() const;
    /* Inverse of to_string; throws std::invalid_argument. */
    static FracIdeal parse(Order const & o, std::string const & text);
};

FracIdeal ideal_mul(FracIdeal const & x, FracIdeal const & y);
FracIdeal ideal_inv(FracIdeal const & x);
FracIdeal ideal_conj(FracIdeal const & x);
Rational ideal_norm(FracIdeal const & x);
FracIdeal ideal_add(FracIdeal const & x, FracIdeal const & y);
FracIdeal ideal_scale(FracIdeal const & x, KNumber const & lambda);
FracIdeal ideal_pow(FracIdeal const & x, unsigned e);

/*
 * Generator of x if x is principal. Found as a shortest vector of the norm
 * form on d*x (Lagrange-Gauss reduction); units are canonicalized so that
 * (|b|, b < 0, a < 0) is lexicographically smallest.
 */
std::optional<KNumber> is_principal(FracIdeal const & x);

/* All primitive integral ideals Z a + Z (b + w) of norm a, 0 <= b < a. */
std::vector<FracIdeal> primitive_ideals_of_norm(Order const & o, std::int64_t norm);
/* All integral ideals of the given norm. */
std::vector<FracIdeal> integral_ideals_of_norm(Order const & o, std::int64_t norm);

/* Express 1 as an integer combination of the given elements of R (whose
 * Z-span must contain 1). Returns the coefficients. */
std::vector<std::int64_t> express_one(std::vector<KNumber> const & elems);

struct IdealClassGroup
{
    Order order;
    /* classes[0] is R; every other entry is a smallest-norm primitive
     * integral ideal of its class. */
    std::vector<FracIdeal> classes;
    /* Indices into classes forming a minimal generating set. */
    std::vector<std::size_t> generators;
    /* table[i][j] = class of classes[i] * classes[j]. */
    std::vector<std::vector<std::size_t>> table;
    std::size_t exponent = 1;

    std::size_t class_number() const { return classes.size(); }
    std::size_t class_of(FracIdeal const & x) const;
    std::size_t inverse_of(std::size_t i) const;
    std::size_t conj_of(std::size_t i) const;
    std::size_t order_of(std::size_t i) const;
    std::size_t power(std::size_t i, unsigned e) const;
};

IdealClassGroup class_group(Order const & o);

}  // namespace hermlat

#endif
