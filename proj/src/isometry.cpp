#include "hermlat/isometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hermlat {

namespace {

std::int64_t dot(IntVector const & x, IntVector const & y)
{
    __int128 s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        s += static_cast<__int128>(x[i]) * y[i];
    return static_cast<std::int64_t>(s);
}

IntVector mat_vec(IntMatrix const & m, IntVector const & v)
{
    IntVector r(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        r[i] = dot(m[i], v);
    return r;
}

IntMatrix mat_mul(IntMatrix const & a, IntMatrix const & b)
{
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMatrix r(n, IntVector(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            if (a[i][l] != 0)
                for (std::size_t j = 0; j < m; ++j)
                    r[i][j] += a[i][l] * b[l][j];
    return r;
}

IntMatrix transpose(IntMatrix const & a)
{
    IntMatrix t(a.empty() ? 0 : a[0].size(), IntVector(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            t[j][i] = a[i][j];
    return t;
}

IntVector negated(IntVector v)
{
    for (auto & x : v)
        x = -x;
    return v;
}

std::optional<IntMatrix> to_integer_matrix(RatMatrix const & m)
{
    IntMatrix r(m.size(), IntVector(m.empty() ? 0 : m[0].size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            if (m[i][j].get_den() != 1 || !m[i][j].get_num().fits_slong_p())
                return std::nullopt;
            r[i][j] = m[i][j].get_num().get_si();
        }
    return r;
}

RatMatrix to_rational(IntMatrix const & m)
{
    RatMatrix r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        r[i].assign(m[i].begin(), m[i].end());
    return r;
}

std::int64_t reduced_diagonal_bound(IntMatrix const & q)
{
    IntMatrix u = lll_reduce(q);
    std::int64_t bound = 0;
    for (std::size_t j = 0; j < q.size(); ++j) {
        IntVector c(q.size());
        for (std::size_t i = 0; i < q.size(); ++i)
            c[i] = u[i][j];
        bound = std::max(bound, form_value(q, c, c));
    }
    return bound;
}

}  // namespace

PreparedLattice::PreparedLattice(HermitianLattice L, std::int64_t theta_depth)
    : L_(std::move(L)), T_(trace_lattice(L_))
{
    IntMatrix const & q = T_.gram_int;
    std::size_t d = T_.dim();
    omega_t_q_ = mat_mul(transpose(T_.omega_action), q);
    theta_ = theta_series(q, theta_depth * T_.den);
    scale_ = scale(L_);
    volume_ = volume(L_);
    steinitz_ = steinitz_ideal(L_);
    det_z_ = determinant(T_.gram_z);

    /* shells up to the least norm at which short vectors reach K-rank g;
     * that norm is an isometry invariant */
    auto vecs = short_vectors(q, reduced_diagonal_bound(q));
    {
        RationalSpan span(d);
        std::size_t cut = vecs.size();
        for (std::size_t i = 0; i < vecs.size(); ++i) {
            if (span.rank() == d && vecs[i].norm > vecs[i - 1].norm) {
                cut = i;
                break;
            }
            if (!span.contains(vecs[i].coords)) {
                span.add(vecs[i].coords);
                span.add(T_.apply_omega(vecs[i].coords));
            }
        }
        vecs.resize(cut);
    }
    for (auto const & sv : vecs) {
        auto & shell = shells_[sv.norm];
        shell.push_back(sv.coords);
        shell.push_back(negated(sv.coords));
    }
    for (auto const & [norm, shell] : shells_)
        shell_sizes_.emplace_back(norm, shell.size());
    std::stable_sort(vecs.begin(), vecs.end(), [&](ShortVector const & x, ShortVector const & y) {
        std::size_t sx = shells_[x.norm].size(), sy = shells_[y.norm].size();
        return sx != sy ? sx < sy : x.norm < y.norm;
    });
    RationalSpan span(d);
    for (auto const & sv : vecs) {
        if (span.contains(sv.coords))
            continue;
        span.add(sv.coords);
        span.add(T_.apply_omega(sv.coords));
        base_.push_back(sv.coords);
        base_norms_.push_back(sv.norm);
        if (base_.size() == T_.g)
            break;
    }
    if (base_.size() != T_.g)
        throw std::logic_error("short vectors do not span the lattice");

    RatMatrix u(d, std::vector<Rational>(d, 0));
    for (std::size_t k = 0; k < T_.g; ++k) {
        IntVector wu = T_.apply_omega(base_[k]);
        for (std::size_t r = 0; r < d; ++r) {
            u[r][2 * k] = base_[k][r];
            u[r][2 * k + 1] = wu[r];
        }
    }
    u_inv_ = inverse(u);
    std::vector<KVector> rows;
    for (auto const & b : base_)
        rows.push_back(T_.to_pseudo(b));
    uk_inv_ = inverse(KMatrix::from_rows(rows));
}

std::vector<IsometryWitness> isometries(PreparedLattice const & a, PreparedLattice const & b, bool first_only)
{
    std::vector<IsometryWitness> found;
    if (a.shell_sizes_ != b.shell_sizes_ || a.T_.den != b.T_.den || a.T_.g != b.T_.g)
        return found;
    std::size_t g = a.T_.g, d = a.T_.dim();
    IntMatrix const & qa = a.T_.gram_int;

    std::vector<std::vector<IntVector> const *> cand(g);
    for (std::size_t k = 0; k < g; ++k) {
        auto it = b.shells_.find(a.base_norms_[k]);
        if (it == b.shells_.end())
            return found;
        cand[k] = &it->second;
    }
    /* target pairings T(u_k, u_j) and T(W u_k, u_j) for j < k */
    std::vector<std::vector<std::int64_t>> t_plain(g), t_omega(g);
    for (std::size_t k = 0; k < g; ++k)
        for (std::size_t j = 0; j < k; ++j) {
            t_plain[k].push_back(form_value(qa, a.base_[k], a.base_[j]));
            t_omega[k].push_back(dot(a.base_[k], mat_vec(a.omega_t_q_, a.base_[j])));
        }

    std::vector<IntVector const *> w(g);
    std::vector<IntVector> qw(g), oqw(g);

    auto leaf = [&]() -> bool {
        RatMatrix wm(d, std::vector<Rational>(d, 0));
        for (std::size_t k = 0; k < g; ++k) {
            IntVector ww = b.T_.apply_omega(*w[k]);
            for (std::size_t r = 0; r < d; ++r) {
                wm[r][2 * k] = (*w[k])[r];
                wm[r][2 * k + 1] = ww[r];
            }
        }
        auto phi = to_integer_matrix(multiply(wm, a.u_inv_));
        if (!phi)
            return false;
        std::vector<KVector> rows;
        for (std::size_t k = 0; k < g; ++k)
            rows.push_back(b.T_.to_pseudo(*w[k]));
        found.push_back({a.uk_inv_ * KMatrix::from_rows(rows), std::move(*phi)});
        return first_only;
    };

    /* returns true to stop */
    auto recurse = [&](auto & self, std::size_t k) -> bool {
        for (IntVector const & c : *cand[k]) {
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j)
                ok = dot(c, qw[j]) == t_plain[k][j] && dot(c, oqw[j]) == t_omega[k][j];
            if (!ok)
                continue;
            w[k] = &c;
            if (k + 1 == g) {
                if (leaf())
                    return true;
                continue;
            }
            qw[k] = mat_vec(b.T_.gram_int, c);
            oqw[k] = mat_vec(b.omega_t_q_, c);
            if (self(self, k + 1))
                return true;
        }
        return false;
    };
    recurse(recurse, 0);
    return found;
}

IsometryResult is_isometric(PreparedLattice const & a, PreparedLattice const & b)
{
    auto fail = [](char const * why) { return IsometryResult{std::nullopt, why}; };
    HermitianLattice const & la = a.lattice();
    HermitianLattice const & lb = b.lattice();
    if (!(la.order() == lb.order()))
        return fail("order");
    if (la.rank() != lb.rank())
        return fail("rank");
    if (a.scale_ != b.scale_)
        return fail("scale");
    if (a.volume_ != b.volume_)
        return fail("volume");
    if (!is_principal(ideal_mul(a.steinitz_, ideal_inv(b.steinitz_))))
        return fail("steinitz class");
    if (a.det_z_ != b.det_z_)
        return fail("trace determinant");
    if (a.T_.den != b.T_.den)
        return fail("trace denominator");
    std::size_t depth = std::min(a.theta_.size(), b.theta_.size());
    if (!std::equal(a.theta_.begin(), a.theta_.begin() + static_cast<std::ptrdiff_t>(depth), b.theta_.begin()))
        return fail("theta series");
    if (a.shell_sizes_ != b.shell_sizes_)
        return fail("short vector shells");
    auto w = isometries(a, b, true);
    if (w.empty())
        return fail("search exhausted");
    return IsometryResult{std::move(w.front()), ""};
}

IsometryResult is_isometric(HermitianLattice const & a, HermitianLattice const & b)
{
    if (!(a.order() == b.order()))
        return IsometryResult{std::nullopt, "order"};
    if (a.rank() != b.rank())
        return IsometryResult{std::nullopt, "rank"};
    return is_isometric(PreparedLattice(a), PreparedLattice(b));
}

bool verify_witness(HermitianLattice const & L1, HermitianLattice const & L2, IsometryWitness const & w)
{
    std::size_t g = L1.rank();
    if (L2.rank() != g || w.matrix.rows() != g || w.matrix.cols() != g)
        return false;
    if (w.matrix * L2.gram() * w.matrix.conj_transpose() != L1.gram())
        return false;
    TraceLattice t1 = trace_lattice(L1), t2 = trace_lattice(L2);
    std::size_t d = 2 * g;
    IntMatrix z(d, IntVector(d, 0));
    for (std::size_t p = 0; p < d; ++p) {
        KVector img(g, KNumber(L1.order(), 0));
        for (std::size_t j = 0; j < g; ++j)
            img[j] = t1.basis_gen[p] * w.matrix(t1.basis_index[p], j);
        IntVector c;
        try {
            c = t2.from_pseudo(img);
        } catch (std::domain_error const &) {
            return false;
        }
        for (std::size_t r = 0; r < d; ++r)
            z[r][p] = c[r];
    }
    if (z != w.z_matrix)
        return false;
    Rational det = determinant(to_rational(z));
    return det == 1 || det == -1;
}

IsometryWitness compose(IsometryWitness const & phi, IsometryWitness const & psi)
{
    return {phi.matrix * psi.matrix, mat_mul(psi.z_matrix, phi.z_matrix)};
}

IsometryWitness invert(IsometryWitness const & phi)
{
    auto z = to_integer_matrix(inverse(to_rational(phi.z_matrix)));
    if (!z)
        throw std::domain_error("witness is not unimodular");
    return {inverse(phi.matrix), std::move(*z)};
}

AutomorphismGroup automorphisms(HermitianLattice const & L)
{
    PreparedLattice p(L);
    AutomorphismGroup grp;
    grp.elements = isometries(p, p, false);
    std::set<IntMatrix> generated;
    std::size_t d = p.trace().dim();
    IntMatrix id(d, IntVector(d, 0));
    for (std::size_t i = 0; i < d; ++i)
        id[i][i] = 1;
    generated.insert(id);
    for (auto const & e : grp.elements) {
        if (generated.count(e.z_matrix))
            continue;
        grp.generators.push_back(e);
        std::vector<IntMatrix> frontier(generated.begin(), generated.end());
        while (!frontier.empty()) {
            std::vector<IntMatrix> next;
            for (auto const & x : frontier)
                for (auto const & gen : grp.generators) {
                    IntMatrix y = mat_mul(gen.z_matrix, x);
                    if (generated.insert(y).second)
                        next.push_back(std::move(y));
                }
            frontier = std::move(next);
        }
    }
    return grp;
}

namespace {

struct UnionFind
{
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
};

/* Blocks of indecomposable vectors, each generating one orthogonal factor. */
std::vector<std::vector<IntVector>> orthogonal_blocks(TraceLattice const & T)
{
    IntMatrix const & q = T.gram_int;
    auto vecs = short_vectors(q, reduced_diagonal_bound(q));
    std::vector<IntVector> qv;
    for (auto const & v : vecs)
        qv.push_back(mat_vec(q, v.coords));
    /* v = a + (v - a) with T(a, v - a) = 0 iff T(a, v) = T(a, a); only
     * strictly shorter a can split v */
    std::vector<std::size_t> indec;
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        bool split = false;
        for (std::size_t j = 0; j < vecs.size() && !split; ++j) {
            if (vecs[j].norm >= vecs[i].norm)
                break;
            std::int64_t t = dot(vecs[i].coords, qv[j]);
            split = t == vecs[j].norm || t == -vecs[j].norm;
        }
        if (!split)
            indec.push_back(i);
    }
    IntMatrix omega_t_q = mat_mul(transpose(T.omega_action), q);
    std::vector<IntVector> oqv;
    for (std::size_t i : indec)
        oqv.push_back(mat_vec(omega_t_q, vecs[i].coords));
    UnionFind uf(indec.size());
    for (std::size_t x = 0; x < indec.size(); ++x)
        for (std::size_t y = x + 1; y < indec.size(); ++y) {
            IntVector const & vy = vecs[indec[y]].coords;
            if (dot(vy, qv[indec[x]]) != 0 || dot(vy, oqv[x]) != 0)
                uf.unite(x, y);
        }
    std::map<std::size_t, std::vector<IntVector>> blocks;
    for (std::size_t x = 0; x < indec.size(); ++x)
        blocks[uf.find(x)].push_back(vecs[indec[x]].coords);
    std::vector<std::vector<IntVector>> out;
    for (auto & [root, b] : blocks)
        out.push_back(std::move(b));
    return out;
}

}  // namespace

std::vector<HermitianLattice> decompose(HermitianLattice const & L)
{
    TraceLattice T = trace_lattice(L);
    std::vector<HermitianLattice> factors;
    for (auto const & block : orthogonal_blocks(T)) {
        std::vector<KVector> gens;
        for (auto const & v : block)
            gens.push_back(T.to_pseudo(v));
        PseudoBasis pb = module_pseudo_basis(L.order(), gens);
        factors.push_back(lattice_from_pseudo_basis(L.order(), pb, L.gram(), L.basis()));
    }
    return factors;
}

bool is_indecomposable(HermitianLattice const & L) { return orthogonal_blocks(trace_lattice(L)).size() == 1; }

}  // namespace hermlat
