#ifndef HERMLAT_LINALG_HPP
#define HERMLAT_LINALG_HPP

#include "hermlat/quadratic_order.hpp"

#include <cstdint>
#include <vector>

namespace hermlat {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;
using RatMatrix = std::vector<std::vector<Rational>>;
using ZMatrix = std::vector<std::vector<mpz_class>>;
using KVector = std::vector<KNumber>;

/* Dense matrix over K, row major. */
class KMatrix
{
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<KNumber> data_;

  public:
    KMatrix() = default;
    KMatrix(Order const & o, std::size_t rows, std::size_t cols);
    static KMatrix identity(Order const & o, std::size_t n);
    static KMatrix from_rows(std::vector<KVector> const & rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    KNumber & operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    KNumber const & operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    KVector row(std::size_t i) const;

    KMatrix conj_transpose() const;
    KMatrix conj() const;
    KMatrix scaled(Rational const & q) const;
    bool is_hermitian() const;
    bool is_identity() const;

    friend KMatrix operator*(KMatrix const & x, KMatrix const & y);
    bool operator==(KMatrix const & o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }
    bool operator!=(KMatrix const & o) const { return !(*this == o); }
};

KNumber determinant(KMatrix m);
/* Throws std::domain_error when singular. */
KMatrix inverse(KMatrix const & m);

/* Rational matrices */
Rational determinant(RatMatrix m);
RatMatrix inverse(RatMatrix const & m);
RatMatrix multiply(RatMatrix const & a, RatMatrix const & b);
std::size_t rank(RatMatrix m);

/*
 * Row Hermite normal form of the Z-span of the given integer rows:
 * echelon form, positive pivots, entries above each pivot reduced into
 * [0, pivot). Zero rows are dropped.
 */
ZMatrix hermite_normal_form(ZMatrix rows);

/*
 * Incremental rank over Q of integer vectors; add() returns true when the
 * vector is independent of those already accepted.
 */
class RationalSpan
{
    std::size_t dim_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;

  public:
    explicit RationalSpan(std::size_t dim) : dim_(dim) {}
    bool add(std::vector<Rational> v);
    bool add(IntVector const & v);
    bool contains(IntVector const & v) const;
    std::size_t rank() const { return rows_.size(); }
};

}  // namespace hermlat

#endif
