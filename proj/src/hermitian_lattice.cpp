#include "hermlat/hermitian_lattice.hpp"
#include "hermlat/short_vectors.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermlat {

namespace {

std::int64_t to_i64(mpz_class const & z)
{
    if (!z.fits_slong_p())
        throw std::overflow_error("integer exceeds 64 bits");
    return z.get_si();
}

KNumber zero_of(Order const & o) { return KNumber(o, 0); }

/* Rows gen * (row i of m) over both HNF generators of ideals[i], split
 * into rational (a, b) coordinates. */
RatMatrix zbasis_rows(std::vector<FracIdeal> const & ideals, KMatrix const & m)
{
    RatMatrix rows;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        for (KNumber const & gen : {ideals[i].gen0(), ideals[i].gen1()}) {
            std::vector<Rational> r;
            r.reserve(2 * m.cols());
            for (std::size_t j = 0; j < m.cols(); ++j) {
                KNumber x = gen * m(i, j);
                r.push_back(x.a());
                r.push_back(x.b());
            }
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

mpz_class common_denominator(RatMatrix const & m)
{
    mpz_class d = 1;
    for (auto const & r : m)
        for (auto const & x : r)
            mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
    return d;
}

ZMatrix scaled_integer_rows(RatMatrix const & m, mpz_class const & d)
{
    ZMatrix z;
    z.reserve(m.size());
    for (auto const & r : m) {
        std::vector<mpz_class> row;
        row.reserve(r.size());
        for (auto const & x : r) {
            Rational y = x * d;
            if (y.get_den() != 1)
                throw std::logic_error("denominator does not clear");
            row.push_back(y.get_num());
        }
        z.push_back(std::move(row));
    }
    return z;
}

void check_positive_definite(KMatrix const & g)
{
    std::size_t n = g.rows();
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<KVector> rows(k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                rows[i].push_back(g(i, j));
        KNumber d = determinant(KMatrix::from_rows(rows));
        if (!d.is_rational() || sgn(d.a()) <= 0)
            throw std::invalid_argument("gram matrix is not positive definite");
    }
}

/* Coordinates (u, v) of x = u gen0 + v gen1 in the ideal's Z-basis. */
std::pair<Rational, Rational> ideal_coords(FracIdeal const & a, KNumber const & x)
{
    Rational d = a.den();
    Rational v = x.b() * d / a.hnf_c();
    Rational u = (x.a() - v * Rational(a.hnf_b()) / d) * d / a.hnf_a();
    return {u, v};
}

mpz_class round_nearest(Rational const & x)
{
    mpz_class num = 2 * x.get_num() + x.get_den();
    mpz_class den = 2 * x.get_den();
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

/* Element of I obtained by rounding the coordinates of x in I's Z-basis. */
KNumber round_in_ideal(FracIdeal const & I, KNumber const & x)
{
    auto [u, v] = ideal_coords(I, x);
    return I.gen0().scaled(Rational(round_nearest(u))) + I.gen1().scaled(Rational(round_nearest(v)));
}

struct StepResult
{
    KNumber x11, x12, x21, x22;  // new rows: x' = x11 x + x12 y, y' = x21 x + x22 y
};

/*
 * a x + b y = R x' + ab y' with x' = alpha x + beta y a shortest vector
 * whose coefficients satisfy alpha a^-1 + beta b^-1 = R.
 */
StepResult steinitz_step(FracIdeal const & a, FracIdeal const & b, KVector const & x, KVector const & y,
                         KMatrix const & gram)
{
    Order const & o = a.order();
    FracIdeal ai = ideal_inv(a), bi = ideal_inv(b);
    KMatrix g2(o, 2, 2);
    g2(0, 0) = hermitian_product(gram, x, x);
    g2(0, 1) = hermitian_product(gram, x, y);
    g2(1, 0) = hermitian_product(gram, y, x);
    g2(1, 1) = hermitian_product(gram, y, y);
    TraceLattice T = trace_lattice(HermitianLattice(o, {a, b}, g2));
    IntMatrix u = lll_reduce(T.gram_int);
    std::int64_t bound = 0;
    for (std::size_t j = 0; j < 4; ++j) {
        IntVector c{u[0][j], u[1][j], u[2][j], u[3][j]};
        bound = std::max(bound, form_value(T.gram_int, c, c));
    }
    for (;; bound *= 2) {
        for (auto const & sv : short_vectors(T.gram_int, bound)) {
            KVector kv = T.to_pseudo(sv.coords);
            KNumber const & alpha = kv[0];
            KNumber const & beta = kv[1];
            std::optional<FracIdeal> sum;
            if (!alpha.is_zero())
                sum = ideal_scale(ai, alpha);
            if (!beta.is_zero()) {
                FracIdeal ib = ideal_scale(bi, beta);
                sum = sum ? ideal_add(*sum, ib) : ib;
            }
            if (!sum->is_unit())
                continue;
            std::vector<KNumber> elems{alpha * ai.gen0(), alpha * ai.gen1(), beta * bi.gen0(), beta * bi.gen1()};
            auto e = express_one(elems);
            KNumber gamma = ai.gen0().scaled(e[0]) + ai.gen1().scaled(e[1]);
            KNumber delta = bi.gen0().scaled(e[2]) + bi.gen1().scaled(e[3]);
            return {alpha, beta, -delta, gamma};
        }
    }
}

/* Pseudo-basis of the full rank R-module generated by gens in K^k. */
PseudoBasis full_rank_pseudo_basis(Order const & o, std::vector<KVector> const & gens, std::size_t k)
{
    KNumber w(o, 0, 1);
    RatMatrix rows;
    for (auto const & v : gens) {
        for (int twist = 0; twist < 2; ++twist) {
            std::vector<Rational> r;
            r.reserve(2 * k);
            for (std::size_t jj = 0; jj < k; ++jj) {
                std::size_t c = k - 1 - jj;
                KNumber x = twist ? w * v[c] : v[c];
                r.push_back(x.a());
                r.push_back(x.b());
            }
            rows.push_back(std::move(r));
        }
    }
    mpz_class den = common_denominator(rows);
    ZMatrix h = hermite_normal_form(scaled_integer_rows(rows, den));
    if (h.size() != 2 * k)
        throw std::invalid_argument("generators do not span a full rank module");
    Rational inv_den(mpz_class(1), den);

    auto row_vector = [&](std::size_t r) {
        KVector v(k, zero_of(o));
        for (std::size_t jj = 0; jj < k; ++jj)
            v[k - 1 - jj] = KNumber(o, Rational(h[r][2 * jj]) * inv_den, Rational(h[r][2 * jj + 1]) * inv_den);
        return v;
    };

    PseudoBasis pb;
    pb.ideals.resize(k);
    pb.vectors.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        std::size_t c = k - 1 - j;
        KVector l0 = row_vector(2 * j), l1 = row_vector(2 * j + 1);
        FracIdeal a = FracIdeal::from_generators(o, {l0[c], l1[c]});
        FracIdeal ai = ideal_inv(a);
        KNumber b0 = ai.gen0(), b1 = ai.gen1();
        auto e = express_one({l0[c] * b0, l0[c] * b1, l1[c] * b0, l1[c] * b1});
        KNumber f0 = b0.scaled(e[0]) + b1.scaled(e[1]);
        KNumber f1 = b0.scaled(e[2]) + b1.scaled(e[3]);
        KVector x(k, zero_of(o));
        for (std::size_t q = 0; q < k; ++q)
            x[q] = f0 * l0[q] + f1 * l1[q];
        pb.ideals[c] = a;
        pb.vectors[c] = std::move(x);
    }
    /* x_c[c] = 1 and x_c[q] = 0 for q > c; reduce x_c[q], q < c, modulo
     * a_q a_c^-1 */
    for (std::size_t c = 1; c < k; ++c)
        for (std::size_t q = c; q-- > 0;) {
            KNumber nu = round_in_ideal(ideal_mul(pb.ideals[q], ideal_inv(pb.ideals[c])), -pb.vectors[c][q]);
            if (nu.is_zero())
                continue;
            for (std::size_t r = 0; r <= q; ++r)
                pb.vectors[c][r] += nu * pb.vectors[q][r];
        }
    return pb;
}

/*
 * Size reduction against the hermitian Gram-Schmidt basis. x_j += nu x_i
 * keeps the module when nu is in a_i a_j^-1.
 */
void size_reduce(PseudoBasis & pb, KMatrix const & gram)
{
    std::size_t g = pb.vectors.size();
    for (std::size_t j = 1; j < g; ++j) {
        for (std::size_t i = j; i-- > 0;) {
            /* Gram-Schmidt of x_0..x_i, then mu = H(x_j, x_i*) / H(x_i*, x_i*) */
            std::vector<KVector> star;
            for (std::size_t k = 0; k <= i; ++k) {
                KVector v = pb.vectors[k];
                for (std::size_t l = 0; l < k; ++l) {
                    KNumber m = hermitian_product(gram, pb.vectors[k], star[l]) /
                                hermitian_product(gram, star[l], star[l]);
                    for (std::size_t q = 0; q < v.size(); ++q)
                        v[q] -= m * star[l][q];
                }
                star.push_back(std::move(v));
            }
            KNumber mu = hermitian_product(gram, pb.vectors[j], star[i]) / hermitian_product(gram, star[i], star[i]);
            KNumber nu = round_in_ideal(ideal_mul(pb.ideals[i], ideal_inv(pb.ideals[j])), -mu);
            if (nu.is_zero())
                continue;
            for (std::size_t q = 0; q < pb.vectors[j].size(); ++q)
                pb.vectors[j][q] += nu * pb.vectors[i][q];
        }
    }
}

}  // namespace

HermitianLattice::HermitianLattice(Order const & o, std::vector<FracIdeal> ideals, KMatrix gram)
    : HermitianLattice(o, ideals, gram, KMatrix::identity(o, ideals.size()))
{
}

HermitianLattice::HermitianLattice(Order const & o, std::vector<FracIdeal> ideals, KMatrix gram, KMatrix basis)
    : order_(o), ideals_(std::move(ideals)), gram_(std::move(gram)), basis_(std::move(basis))
{
    std::size_t g = ideals_.size();
    if (g == 0)
        throw std::invalid_argument("lattice rank must be at least 1");
    for (auto const & a : ideals_)
        if (!(a.order() == o))
            throw std::invalid_argument("coefficient ideal belongs to another order");
    if (gram_.rows() != g || gram_.cols() != g)
        throw std::invalid_argument("gram matrix size does not match rank");
    if (basis_.rows() != g || basis_.cols() < g)
        throw std::invalid_argument("basis matrix size does not match rank");
    if (!gram_.is_hermitian())
        throw std::invalid_argument("gram matrix is not hermitian");
    check_positive_definite(gram_);
}

HermitianLattice free_lattice(Order const & o, KMatrix gram)
{
    std::vector<FracIdeal> ideals(gram.rows(), FracIdeal::unit(o));
    return HermitianLattice(o, std::move(ideals), std::move(gram));
}

KNumber hermitian_product(KMatrix const & gram, KVector const & v, KVector const & w)
{
    KNumber s = v[0].same_field(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero())
            continue;
        KNumber row = s.same_field(0);
        for (std::size_t j = 0; j < w.size(); ++j)
            if (!w[j].is_zero())
                row += gram(i, j) * w[j].conj();
        s += v[i] * row;
    }
    return s;
}

FracIdeal scale(HermitianLattice const & L)
{
    std::optional<FracIdeal> s;
    for (std::size_t i = 0; i < L.rank(); ++i)
        for (std::size_t j = 0; j < L.rank(); ++j) {
            if (L.gram()(i, j).is_zero())
                continue;
            FracIdeal t = ideal_scale(ideal_mul(L.ideals()[i], ideal_conj(L.ideals()[j])), L.gram()(i, j));
            s = s ? ideal_add(*s, t) : t;
        }
    return *s;
}

FracIdeal volume(HermitianLattice const & L)
{
    Rational n = 1;
    for (auto const & a : L.ideals())
        n *= ideal_norm(a);
    KNumber det = determinant(L.gram());
    return FracIdeal::principal(L.order(), det.scaled(n));
}

HermitianLattice dual(HermitianLattice const & L)
{
    std::vector<FracIdeal> ideals;
    for (auto const & a : L.ideals())
        ideals.push_back(ideal_inv(ideal_conj(a)));
    KMatrix gi = inverse(L.gram());
    return HermitianLattice(L.order(), std::move(ideals), gi, gi * L.basis());
}

bool is_integral(HermitianLattice const & L) { return scale(L).is_integral(); }

bool is_modular(HermitianLattice const & L, FracIdeal const & a)
{
    return scale(L) == a && volume(L) == ideal_pow(a, static_cast<unsigned>(L.rank()));
}

bool is_unimodular(HermitianLattice const & L) { return is_modular(L, FracIdeal::unit(L.order())); }

FracIdeal steinitz_ideal(HermitianLattice const & L)
{
    FracIdeal p = L.ideals()[0];
    for (std::size_t i = 1; i < L.rank(); ++i)
        p = ideal_mul(p, L.ideals()[i]);
    return p;
}

std::size_t steinitz(HermitianLattice const & L, IdealClassGroup const & cg) { return cg.class_of(steinitz_ideal(L)); }

std::int64_t polarization_degree(HermitianLattice const & L)
{
    if (!is_integral(L))
        throw std::domain_error("polarization degree needs an integral lattice");
    std::size_t g = L.rank();
    KMatrix id = KMatrix::identity(L.order(), g);
    std::vector<FracIdeal> dual_ideals;
    for (auto const & a : L.ideals())
        dual_ideals.push_back(ideal_inv(ideal_conj(a)));
    Rational dl = determinant(zbasis_rows(L.ideals(), id));
    Rational dd = determinant(zbasis_rows(dual_ideals, inverse(L.gram())));
    Rational idx = abs(dl / dd);
    if (idx.get_den() != 1)
        throw std::logic_error("dual does not contain the lattice");
    return to_i64(idx.get_num());
}

bool same_module(HermitianLattice const & L1, HermitianLattice const & L2)
{
    if (!(L1.order() == L2.order()) || L1.basis().cols() != L2.basis().cols() || L1.rank() != L2.rank())
        return false;
    RatMatrix r1 = zbasis_rows(L1.ideals(), L1.basis());
    RatMatrix r2 = zbasis_rows(L2.ideals(), L2.basis());
    mpz_class d = common_denominator(r1);
    mpz_class d2 = common_denominator(r2);
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), d2.get_mpz_t());
    return hermite_normal_form(scaled_integer_rows(r1, d)) == hermite_normal_form(scaled_integer_rows(r2, d));
}

HermitianLattice orthogonal_sum(HermitianLattice const & L1, HermitianLattice const & L2)
{
    Order const & o = L1.order();
    std::size_t g1 = L1.rank(), g2 = L2.rank();
    std::size_t m1 = L1.basis().cols(), m2 = L2.basis().cols();
    KMatrix gram(o, g1 + g2, g1 + g2), basis(o, g1 + g2, m1 + m2);
    for (std::size_t i = 0; i < g1; ++i) {
        for (std::size_t j = 0; j < g1; ++j)
            gram(i, j) = L1.gram()(i, j);
        for (std::size_t j = 0; j < m1; ++j)
            basis(i, j) = L1.basis()(i, j);
    }
    for (std::size_t i = 0; i < g2; ++i) {
        for (std::size_t j = 0; j < g2; ++j)
            gram(g1 + i, g1 + j) = L2.gram()(i, j);
        for (std::size_t j = 0; j < m2; ++j)
            basis(g1 + i, m1 + j) = L2.basis()(i, j);
    }
    std::vector<FracIdeal> ideals = L1.ideals();
    ideals.insert(ideals.end(), L2.ideals().begin(), L2.ideals().end());
    return HermitianLattice(o, std::move(ideals), std::move(gram), std::move(basis));
}

HermitianLattice steinitz_normal_form(HermitianLattice const & L, IdealClassGroup const & cg)
{
    Order const & o = L.order();
    std::size_t g = L.rank();
    PseudoBasis pb;
    pb.ideals = L.ideals();
    for (std::size_t i = 0; i < g; ++i)
        pb.vectors.push_back(KMatrix::identity(o, g).row(i));
    for (std::size_t i = 0; i + 1 < g; ++i) {
        StepResult s = steinitz_step(pb.ideals[i], pb.ideals[i + 1], pb.vectors[i], pb.vectors[i + 1], L.gram());
        KVector x = pb.vectors[i], y = pb.vectors[i + 1];
        for (std::size_t q = 0; q < g; ++q) {
            pb.vectors[i][q] = s.x11 * x[q] + s.x12 * y[q];
            pb.vectors[i + 1][q] = s.x21 * x[q] + s.x22 * y[q];
        }
        pb.ideals[i + 1] = ideal_mul(pb.ideals[i], pb.ideals[i + 1]);
        pb.ideals[i] = FracIdeal::unit(o);
        size_reduce(pb, L.gram());
    }
    FracIdeal last = pb.ideals[g - 1];
    FracIdeal rep = cg.classes[cg.class_of(last)];
    auto mu = is_principal(ideal_mul(last, ideal_inv(rep)));
    if (!mu)
        throw std::logic_error("class representative mismatch");
    for (auto & x : pb.vectors[g - 1])
        x = *mu * x;
    pb.ideals[g - 1] = rep;
    size_reduce(pb, L.gram());
    return lattice_from_pseudo_basis(o, pb, L.gram(), L.basis());
}

HermitianLattice reduce_lattice(HermitianLattice const & L)
{
    Order const & o = L.order();
    TraceLattice T = trace_lattice(L);
    IntMatrix u = lll_reduce(T.gram_int);
    std::size_t d = T.dim();
    std::vector<KVector> gens;
    for (std::size_t c = 0; c < d; ++c) {
        IntVector z(d);
        for (std::size_t r = 0; r < d; ++r)
            z[r] = u[r][c];
        gens.push_back(T.to_pseudo(z));
    }
    PseudoBasis pb = module_pseudo_basis(o, gens);
    size_reduce(pb, L.gram());
    return lattice_from_pseudo_basis(o, pb, L.gram(), L.basis());
}

HermitianLattice lattice_from_pseudo_basis(Order const & o, PseudoBasis const & pb, KMatrix const & parent_gram,
                                           KMatrix const & parent_basis)
{
    KMatrix x = KMatrix::from_rows(pb.vectors);
    KMatrix gram = x * parent_gram * x.conj_transpose();
    return HermitianLattice(o, pb.ideals, std::move(gram), x * parent_basis);
}

PseudoBasis module_pseudo_basis(Order const & o, std::vector<KVector> const & gens)
{
    if (gens.empty())
        throw std::invalid_argument("no generators");
    std::size_t m = gens[0].size();
    KNumber w(o, 0, 1);

    /* K-basis of the span, with pivot columns */
    std::vector<KVector> basis, echelon;
    std::vector<std::size_t> pivots;
    for (auto const & v : gens) {
        KVector r = v;
        for (std::size_t k = 0; k < echelon.size(); ++k) {
            if (r[pivots[k]].is_zero())
                continue;
            KNumber f = r[pivots[k]];
            for (std::size_t q = 0; q < m; ++q)
                r[q] -= f * echelon[k][q];
        }
        std::size_t p = 0;
        while (p < m && r[p].is_zero())
            ++p;
        if (p == m)
            continue;
        KNumber inv = r[p].inverse();
        for (auto & x : r)
            x *= inv;
        echelon.push_back(std::move(r));
        pivots.push_back(p);
        basis.push_back(v);
    }
    std::size_t k = basis.size();
    /* coordinates with respect to basis: c = v_P (W_P)^{-1} */
    KMatrix wp(o, k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            wp(i, j) = basis[i][pivots[j]];
    KMatrix wpi = inverse(wp);
    std::vector<KVector> coords;
    for (auto const & v : gens) {
        KVector c(k, zero_of(o));
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = 0; l < k; ++l)
                c[j] += v[pivots[l]] * wpi(l, j);
        coords.push_back(std::move(c));
    }
    PseudoBasis local = full_rank_pseudo_basis(o, coords, k);
    PseudoBasis out;
    out.ideals = local.ideals;
    for (auto const & c : local.vectors) {
        KVector x(m, zero_of(o));
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t q = 0; q < m; ++q)
                x[q] += c[j] * basis[j][q];
        out.vectors.push_back(std::move(x));
    }
    return out;
}

KVector TraceLattice::to_pseudo(IntVector const & z) const
{
    KVector v(g, KNumber(order, 0));
    for (std::size_t p = 0; p < z.size(); ++p)
        if (z[p] != 0)
            v[basis_index[p]] += basis_gen[p].scaled(z[p]);
    return v;
}

IntVector TraceLattice::from_pseudo(KVector const & v) const
{
    IntVector z(2 * g, 0);
    for (std::size_t i = 0; i < g; ++i) {
        /* basis_gen[2i] is rational, basis_gen[2i+1] carries w */
        KNumber const & g0 = basis_gen[2 * i];
        KNumber const & g1 = basis_gen[2 * i + 1];
        Rational vcoef = v[i].b() / g1.b();
        Rational ucoef = (v[i].a() - vcoef * g1.a()) / g0.a();
        if (vcoef.get_den() != 1 || ucoef.get_den() != 1)
            throw std::domain_error("vector is not in the lattice");
        z[2 * i] = to_i64(ucoef.get_num());
        z[2 * i + 1] = to_i64(vcoef.get_num());
    }
    return z;
}

IntVector TraceLattice::apply_omega(IntVector const & z) const
{
    std::size_t d = dim();
    IntVector r(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < d; ++j)
            s += omega_action[i][j] * z[j];
        r[i] = s;
    }
    return r;
}

TraceLattice trace_lattice(HermitianLattice const & L)
{
    Order const & o = L.order();
    TraceLattice T;
    T.order = o;
    T.g = L.rank();
    std::size_t d = 2 * T.g;
    for (std::size_t i = 0; i < T.g; ++i) {
        T.basis_index.push_back(i);
        T.basis_index.push_back(i);
        T.basis_gen.push_back(L.ideals()[i].gen0());
        T.basis_gen.push_back(L.ideals()[i].gen1());
    }
    T.gram_z.assign(d, std::vector<Rational>(d, 0));
    mpz_class den = 1;
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) {
            KNumber h = T.basis_gen[p] * T.basis_gen[q].conj() * L.gram()(T.basis_index[p], T.basis_index[q]);
            T.gram_z[p][q] = h.trace();
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), T.gram_z[p][q].get_den_mpz_t());
        }
    T.den = to_i64(den);
    T.gram_int.assign(d, IntVector(d, 0));
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) {
            Rational x = T.gram_z[p][q] * den;
            T.gram_int[p][q] = to_i64(x.get_num());
        }
    KNumber w(o, 0, 1);
    T.omega_action.assign(d, IntVector(d, 0));
    for (std::size_t p = 0; p < d; ++p) {
        std::size_t i = T.basis_index[p];
        auto [u, v] = ideal_coords(L.ideals()[i], w * T.basis_gen[p]);
        if (u.get_den() != 1 || v.get_den() != 1)
            throw std::logic_error("coefficient ideal is not w-stable");
        T.omega_action[2 * i][p] = to_i64(u.get_num());
        T.omega_action[2 * i + 1][p] = to_i64(v.get_num());
    }
    return T;
}

KMatrix hermitian_from_trace(TraceLattice const & T)
{
    Order const & o = T.order;
    std::int64_t t = o.omega_trace(), n = o.omega_norm();
    Rational disc = t * t - 4 * n;
    KMatrix g(o, T.g, T.g);
    std::size_t d = T.dim();
    for (std::size_t i = 0; i < T.g; ++i)
        for (std::size_t j = 0; j < T.g; ++j) {
            std::size_t u = 2 * i, v = 2 * j;
            Rational s1 = T.gram_z[u][v];
            Rational s2 = 0;
            for (std::size_t k = 0; k < d; ++k)
                s2 += Rational(T.omega_action[k][u]) * T.gram_z[k][v];
            Rational x = (s1 * Rational(t * t - 2 * n) - Rational(t) * s2) / disc;
            Rational y = (2 * s2 - Rational(t) * s1) / disc;
            KNumber h(o, x, y);
            g(i, j) = h / (T.basis_gen[u] * T.basis_gen[v].conj());
        }
    return g;
}

std::vector<IntVector> minimum_vectors(TraceLattice const & T, Rational const & bound)
{
    Rational b = bound * T.den;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
    std::vector<IntVector> out;
    for (auto & sv : short_vectors(T.gram_int, to_i64(fl)))
        out.push_back(std::move(sv.coords));
    return out;
}

std::vector<Rational> successive_minima(HermitianLattice const & L)
{
    TraceLattice T = trace_lattice(L);
    std::size_t d = T.dim();
    IntMatrix u = lll_reduce(T.gram_int);
    std::int64_t bound = 0;
    for (std::size_t j = 0; j < d; ++j) {
        IntVector c(d);
        for (std::size_t i = 0; i < d; ++i)
            c[i] = u[i][j];
        bound = std::max(bound, form_value(T.gram_int, c, c));
    }
    RationalSpan span(d);
    std::vector<Rational> minima;
    for (auto const & sv : short_vectors(T.gram_int, bound)) {
        if (span.contains(sv.coords))
            continue;
        span.add(sv.coords);
        span.add(T.apply_omega(sv.coords));
        minima.push_back(Rational(sv.norm) / (2 * T.den));
        if (minima.size() == T.g)
            break;
    }
    return minima;
}

}  // namespace hermlat
