#include "hermlat/enumeration.hpp"

#include "hermlat/isometry.hpp"
#include "hermlat/short_vectors.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace hermlat {

namespace {

/* a + b w in R with machine integers. */
struct RInt
{
    std::int64_t a = 0, b = 0;
    bool operator==(RInt const &) const = default;
    bool is_zero() const { return a == 0 && b == 0; }
};

struct Ring
{
    std::int64_t t, n, absdisc;

    explicit Ring(Order const & o) : t(o.omega_trace()), n(o.omega_norm()), absdisc(-o.disc()) {}

    RInt add(RInt x, RInt y) const { return {x.a + y.a, x.b + y.b}; }
    RInt sub(RInt x, RInt y) const { return {x.a - y.a, x.b - y.b}; }
    RInt mul(RInt x, RInt y) const { return {x.a * y.a - n * x.b * y.b, x.a * y.b + x.b * y.a + t * x.b * y.b}; }
    RInt conj(RInt x) const { return {x.a + t * x.b, -x.b}; }
    std::int64_t norm(RInt x) const { return x.a * x.a + t * x.a * x.b + n * x.b * x.b; }
    std::int64_t trace(RInt x) const { return 2 * x.a + t * x.b; }
    RInt omega_times(RInt x) const { return {-n * x.b, x.a + t * x.b}; }

    /* All z with 0 <= N(z) < bound. */
    std::vector<RInt> below(std::int64_t bound) const
    {
        std::vector<RInt> out;
        /* N(z) = ((2a + t b)^2 + |disc| b^2) / 4 */
        for (std::int64_t b = 0; absdisc * b * b < 4 * bound; ++b)
            for (std::int64_t s : {b, -b}) {
                if (b == 0 && s != b)
                    continue;
                std::int64_t rest = 4 * bound - absdisc * s * s;
                auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(rest))) + 1;
                for (std::int64_t u = -r - t * s; u <= r - t * s; ++u) {
                    RInt z{u, s};
                    if (norm(z) < bound)
                        out.push_back(z);
                }
            }
        std::sort(out.begin(), out.end(), [](RInt x, RInt y) { return std::pair(x.a, x.b) < std::pair(y.a, y.b); });
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
};

using RMatrix = std::vector<std::vector<RInt>>;

RInt det_r(Ring const & r, RMatrix const & m)
{
    std::size_t g = m.size();
    if (g == 1)
        return m[0][0];
    if (g == 2)
        return r.sub(r.mul(m[0][0], m[1][1]), r.mul(m[0][1], m[1][0]));
    RInt acc;
    for (std::size_t c = 0; c < g; ++c) {
        RMatrix minor;
        for (std::size_t i = 1; i < g; ++i) {
            std::vector<RInt> row;
            for (std::size_t j = 0; j < g; ++j)
                if (j != c)
                    row.push_back(m[i][j]);
            minor.push_back(row);
        }
        RInt term = r.mul(m[0][c], det_r(r, minor));
        acc = (c % 2 == 0) ? r.add(acc, term) : r.sub(acc, term);
    }
    return acc;
}

RMatrix adjugate(Ring const & r, RMatrix const & m)
{
    std::size_t g = m.size();
    RMatrix adj(g, std::vector<RInt>(g));
    if (g == 1) {
        adj[0][0] = {1, 0};
        return adj;
    }
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            RMatrix minor;
            for (std::size_t p = 0; p < g; ++p) {
                if (p == j)
                    continue;
                std::vector<RInt> row;
                for (std::size_t q = 0; q < g; ++q)
                    if (q != i)
                        row.push_back(m[p][q]);
                minor.push_back(row);
            }
            RInt c = det_r(r, minor);
            adj[i][j] = ((i + j) % 2 == 0) ? c : RInt{-c.a, -c.b};
        }
    return adj;
}

KMatrix to_kmatrix(Order const & o, RMatrix const & m)
{
    KMatrix k(o, m.size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            k(i, j) = KNumber(o, m[i][j].a, m[i][j].b);
    return k;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

struct ResourceLimit
{
};

class Search
{
  public:
    Search(Order const & o, std::size_t g, EnumerationOptions const & opts)
        : o_(o), ring_(o), g_(g), opts_(opts), cg_(class_group(o)), start_(std::chrono::steady_clock::now())
    {
        if (opts.seed)
            rng_.seed(*opts.seed);
    }

    ClassList run();

  private:
    void check_limits()
    {
        if (opts_.max_candidates && stats_.gram_candidates > opts_.max_candidates)
            throw ResourceLimit{};
        if (opts_.max_seconds > 0 && elapsed() > opts_.max_seconds)
            throw ResourceLimit{};
    }
    double elapsed() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }
    template <class V>
    void maybe_shuffle(V & v)
    {
        if (opts_.seed)
            std::shuffle(v.begin(), v.end(), rng_);
    }

    void offer(HermitianLattice const & L);
    void search_minima();
    void fill_column(std::size_t j, std::size_t i);
    bool column_ok(std::size_t j) const;
    void overlattices();
    void dfs(std::size_t last, std::vector<std::size_t> & gens, std::vector<char> & member,
             std::vector<std::size_t> & members);
    HermitianLattice build(std::vector<std::size_t> const & gens);
    bool minima_match(std::vector<std::size_t> const & members) const;

    Order o_;
    Ring ring_;
    std::size_t g_;
    EnumerationOptions opts_;
    IdealClassGroup cg_;
    std::chrono::steady_clock::time_point start_;
    std::mt19937_64 rng_;
    EnumerationStats stats_;

    /* current minima Gram */
    std::vector<std::int64_t> lambda_;
    RMatrix a_;
    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<RInt>> pair_cands_;
    std::vector<RInt> units_;

    /* discriminant group R^g / R^g A, with the current A */
    std::int64_t det_ = 1;
    RMatrix adj_;
    IntMatrix hnf_;
    std::vector<std::int64_t> radix_;
    std::size_t order_ = 1;
    std::vector<IntVector> elems_;
    std::vector<char> iso_, forbidden_;
    IntMatrix q_;  // det(A) times the trace form in y-coordinates

    IntVector decode(std::size_t idx) const;
    std::size_t encode(IntVector v) const;
    RInt form(IntVector const & y, IntVector const & z) const;
    IntVector omega_times(IntVector const & y) const;

    /* dedup */
    std::vector<HermitianLattice> reps_;
    std::vector<PreparedLattice> prepared_;
    std::vector<RepProvenance> prov_;
    std::vector<char> keep_;
    std::map<std::pair<std::size_t, std::vector<std::int64_t>>, std::vector<std::size_t>> buckets_;
};

void Search::offer(HermitianLattice const & L)
{
    ++stats_.overlattices;
    if (opts_.free_only && !is_principal(steinitz_ideal(L)))
        return;
    PreparedLattice p(L);
    auto key = std::make_pair(steinitz(L, cg_), p.theta());
    auto & bucket = buckets_[key];
    for (std::size_t r : bucket) {
        ++stats_.dedup_tests;
        ++prov_[r].dedup_tests;
        if (is_isometric(p, prepared_[r]))
            return;
    }
    bucket.push_back(reps_.size());
    /* decomposable classes stay as dedup targets but are not emitted */
    keep_.push_back(!opts_.indecomposable_only || is_indecomposable(L));
    reps_.push_back(L);
    prepared_.push_back(std::move(p));
    prov_.push_back(RepProvenance{stats_.overlattices - 1, 0});
}

/* Pair condition for A_ij: Tr(nu A_ij) >= -N(nu) lambda_i for all nu; only
 * N(nu) < 4 lambda_j / lambda_i can violate it inside the window
 * N(A_ij) < lambda_i lambda_j. */
void Search::search_minima()
{
    std::int64_t d = ring_.absdisc;
    std::vector<std::vector<std::int64_t>> lambdas;
    /* 4^g (prod lambda)^2 <= gamma_{2g}^{2g} |disc|^g, lambda_1 >= 2 */
    auto within = [&](std::vector<std::int64_t> const & l, bool partial) {
        std::int64_t p = 1;
        for (auto x : l)
            p *= x;
        /* every later lambda is at least the last one */
        for (std::size_t k = l.size(); partial && k < g_; ++k)
            p *= l.back();
        if (g_ == 2)
            return 2 * p <= d;
        return 3 * p * p <= d * d * d;
    };
    std::vector<std::int64_t> cur;
    auto gen = [&](auto & self) -> void {
        if (cur.size() == g_) {
            lambdas.push_back(cur);
            return;
        }
        for (std::int64_t x = cur.empty() ? 2 : cur.back();; ++x) {
            cur.push_back(x);
            bool ok = within(cur, true);
            if (ok)
                self(self);
            cur.pop_back();
            if (!ok)
                break;
        }
    };
    gen(gen);
    maybe_shuffle(lambdas);

    for (auto const & l : lambdas) {
        lambda_ = l;
        a_.assign(g_, std::vector<RInt>(g_));
        for (std::size_t i = 0; i < g_; ++i)
            a_[i][i] = {l[i], 0};
        fill_column(1, 0);
    }
}

void Search::fill_column(std::size_t j, std::size_t i)
{
    if (j == g_) {
        RInt det = det_r(ring_, a_);
        if (det.a <= 0)
            return;
        ++stats_.gram_candidates;
        check_limits();
        det_ = det.a;
        overlattices();
        return;
    }
    if (i == j) {
        if (!column_ok(j))
            return;
        fill_column(j + 1, 0);
        return;
    }
    std::int64_t li = lambda_[i], lj = lambda_[j];
    auto key = std::make_pair(li, lj);
    auto it = pair_cands_.find(key);
    if (it == pair_cands_.end()) {
        std::vector<RInt> nus = ring_.below((4 * lj + li - 1) / li);
        std::vector<RInt> cands;
        for (RInt z : ring_.below(li * lj)) {
            bool ok = true;
            for (RInt nu : nus)
                if (!nu.is_zero() && ring_.trace(ring_.mul(nu, z)) < -ring_.norm(nu) * li) {
                    ok = false;
                    break;
                }
            if (ok)
                cands.push_back(z);
        }
        it = pair_cands_.emplace(key, std::move(cands)).first;
    }
    std::vector<RInt> cands = it->second;
    maybe_shuffle(cands);
    for (RInt z : cands) {
        a_[i][j] = z;
        a_[j][i] = ring_.conj(z);
        fill_column(j, i + 1);
    }
}

/* Column j complete: unit normalization, multi-term reduction checks and
 * positivity of the leading minor. */
bool Search::column_ok(std::size_t j) const
{
    Ring const & r = ring_;
    for (std::size_t i = 0; i < j; ++i) {
        RInt z = a_[i][j];
        if (z.is_zero())
            continue;
        /* v_j -> u v_j multiplies the column by conj(u) */
        for (auto const & u : units(o_)) {
            RInt ur{static_cast<std::int64_t>(mpz_class(u.a()).get_si()), static_cast<std::int64_t>(mpz_class(u.b()).get_si())};
            RInt w = r.mul(ur, z);
            if (std::pair(w.a, w.b) < std::pair(z.a, z.b))
                return false;
        }
        break;
    }
    RMatrix lead(j + 1, std::vector<RInt>(j + 1));
    for (std::size_t p = 0; p <= j; ++p)
        for (std::size_t q = 0; q <= j; ++q)
            lead[p][q] = a_[p][q];
    if (det_r(r, lead).a <= 0)
        return false;
    if (j >= 2) {
        /* x = v_j + nu_0 v_0 + nu_1 v_1 must have norm >= lambda_j */
        std::int64_t lj = lambda_[j];
        auto n0 = r.below((4 * lj + lambda_[0] - 1) / lambda_[0]);
        auto n1 = r.below((4 * lj + lambda_[1] - 1) / lambda_[1]);
        for (RInt x0 : n0)
            for (RInt x1 : n1) {
                if (x0.is_zero() || x1.is_zero())
                    continue;
                std::int64_t h = r.norm(x0) * lambda_[0] + r.norm(x1) * lambda_[1] +
                                 r.trace(r.mul(r.mul(x0, a_[0][1]), r.conj(x1))) + r.trace(r.mul(x0, a_[0][j])) +
                                 r.trace(r.mul(x1, a_[1][j]));
                if (h < 0)
                    return false;
            }
    }
    return true;
}

IntVector Search::decode(std::size_t idx) const
{
    std::size_t d = 2 * g_;
    IntVector v(d);
    for (std::size_t k = d; k-- > 0;) {
        v[k] = static_cast<std::int64_t>(idx % static_cast<std::size_t>(radix_[k]));
        idx /= static_cast<std::size_t>(radix_[k]);
    }
    return v;
}

std::size_t Search::encode(IntVector v) const
{
    std::size_t d = 2 * g_;
    for (std::size_t k = 0; k < d; ++k) {
        std::int64_t q = floor_div(v[k], hnf_[k][k]);
        if (q != 0)
            for (std::size_t c = k; c < d; ++c)
                v[c] -= q * hnf_[k][c];
    }
    std::size_t idx = 0;
    for (std::size_t k = 0; k < d; ++k)
        idx = idx * static_cast<std::size_t>(radix_[k]) + static_cast<std::size_t>(v[k]);
    return idx;
}

/* y adj(A) z^*, equal to det(A) H(y A^-1, z A^-1) */
RInt Search::form(IntVector const & y, IntVector const & z) const
{
    RInt acc;
    for (std::size_t i = 0; i < g_; ++i)
        for (std::size_t j = 0; j < g_; ++j) {
            RInt yi{y[2 * i], y[2 * i + 1]}, zj{z[2 * j], z[2 * j + 1]};
            acc = ring_.add(acc, ring_.mul(ring_.mul(yi, adj_[i][j]), ring_.conj(zj)));
        }
    return acc;
}

IntVector Search::omega_times(IntVector const & y) const
{
    IntVector out(y.size());
    for (std::size_t i = 0; i < g_; ++i) {
        RInt w = ring_.omega_times({y[2 * i], y[2 * i + 1]});
        out[2 * i] = w.a;
        out[2 * i + 1] = w.b;
    }
    return out;
}

/*
 * Unimodular L between M = R^g (Gram A) and its dual correspond to
 * isotropic R-submodules of order det A in R^g / R^g A, where y stands for
 * the dual vector y A^-1.
 */
void Search::overlattices()
{
    if (det_ == 1) {
        offer(free_lattice(o_, to_kmatrix(o_, a_)));
        return;
    }
    std::size_t d = 2 * g_;
    adj_ = adjugate(ring_, a_);

    ZMatrix rows;
    for (std::size_t i = 0; i < g_; ++i) {
        std::vector<mpz_class> r0, r1;
        for (std::size_t j = 0; j < g_; ++j) {
            RInt x = a_[i][j], wx = ring_.omega_times(x);
            r0.push_back(x.a);
            r0.push_back(x.b);
            r1.push_back(wx.a);
            r1.push_back(wx.b);
        }
        rows.push_back(r0);
        rows.push_back(r1);
    }
    ZMatrix h = hermite_normal_form(rows);
    hnf_.assign(d, IntVector(d));
    radix_.assign(d, 1);
    order_ = 1;
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t c = 0; c < d; ++c)
            hnf_[k][c] = h[k][c].get_si();
        radix_[k] = hnf_[k][k];
        order_ *= static_cast<std::size_t>(radix_[k]);
    }

    elems_.resize(order_);
    iso_.assign(order_, 0);
    forbidden_.assign(order_, 0);
    for (std::size_t idx = 0; idx < order_; ++idx) {
        elems_[idx] = decode(idx);
        RInt f = form(elems_[idx], elems_[idx]);
        iso_[idx] = (f.a % det_ == 0);
    }

    /* classes of dual vectors of norm < lambda_1 can not meet L */
    q_.assign(d, IntVector(d));
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t s = 0; s < d; ++s) {
            IntVector ep(d, 0), es(d, 0);
            ep[p] = 1;
            es[s] = 1;
            q_[p][s] = ring_.trace(form(ep, es));
        }
    for (auto const & sv : short_vectors(q_, 2 * lambda_[0] * det_ - 1)) {
        IntVector neg(d);
        for (std::size_t c = 0; c < d; ++c)
            neg[c] = -sv.coords[c];
        forbidden_[encode(sv.coords)] = 1;
        forbidden_[encode(neg)] = 1;
    }
    if (forbidden_[0])
        return;

    std::vector<std::size_t> gens, members{0};
    std::vector<char> member(order_, 0);
    member[0] = 1;
    dfs(0, gens, member, members);
}

/*
 * Canonical augmentation: generator k+1 is the least element of L outside
 * the span of the first k, so each isotropic submodule is produced once.
 */
void Search::dfs(std::size_t last, std::vector<std::size_t> & gens, std::vector<char> & member,
                 std::vector<std::size_t> & members)
{
    if (static_cast<std::int64_t>(members.size()) == det_) {
        if (minima_match(members))
            offer(build(gens));
        check_limits();
        return;
    }
    for (std::size_t y = last + 1; y < order_; ++y) {
        if (!iso_[y] || forbidden_[y] || member[y])
            continue;
        bool orth = true;
        for (std::size_t gidx : gens) {
            RInt f = form(elems_[y], elems_[gidx]);
            if (f.a % det_ != 0 || f.b % det_ != 0) {
                orth = false;
                break;
            }
        }
        if (!orth)
            continue;

        std::vector<char> m2 = member;
        std::vector<std::size_t> mem2 = members;
        bool ok = true;
        for (IntVector const & step : {elems_[y], omega_times(elems_[y])}) {
            std::vector<std::size_t> frontier = mem2;
            while (!frontier.empty() && ok) {
                std::vector<std::size_t> next;
                for (std::size_t s : frontier) {
                    IntVector v = elems_[s];
                    for (std::size_t k = 0; k < v.size(); ++k)
                        v[k] += step[k];
                    std::size_t t = encode(v);
                    if (m2[t])
                        continue;
                    if (t < y || forbidden_[t]) {
                        ok = false;
                        break;
                    }
                    m2[t] = 1;
                    mem2.push_back(t);
                    next.push_back(t);
                }
                if (static_cast<std::int64_t>(mem2.size()) > det_)
                    ok = false;
                frontier = std::move(next);
            }
        }
        if (!ok || det_ % static_cast<std::int64_t>(mem2.size()) != 0)
            continue;
        gens.push_back(y);
        dfs(y, gens, m2, mem2);
        gens.pop_back();
    }
}

/* The successive minima of L are lambda: no vector of L outside
 * K v_1 + ... + K v_{k-1} has norm below lambda_k. L is R^g A + members in
 * y-coordinates, so its trace form is B q B^T / det(A). */
bool Search::minima_match(std::vector<std::size_t> const & members) const
{
    std::size_t d = 2 * g_;
    ZMatrix rows;
    for (auto const & r : hnf_)
        rows.emplace_back(r.begin(), r.end());
    for (std::size_t m : members)
        rows.emplace_back(elems_[m].begin(), elems_[m].end());
    ZMatrix h = hermite_normal_form(rows);
    IntMatrix b(d, IntVector(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            b[i][j] = h[i][j].get_si();
    IntMatrix gram(d, IntVector(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            gram[i][j] = form_value(q_, b[i], b[j]) / det_;
    for (auto const & sv : short_vectors(gram, 2 * lambda_[g_ - 1] - 1)) {
        IntVector y(d, 0);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                y[j] += sv.coords[i] * b[i][j];
        std::size_t k = 0;
        for (std::size_t j = 0; j < g_; ++j) {
            RInt w;
            for (std::size_t i = 0; i < g_; ++i)
                w = ring_.add(w, ring_.mul({y[2 * i], y[2 * i + 1]}, adj_[i][j]));
            if (!w.is_zero())
                k = j;
        }
        if (sv.norm < 2 * lambda_[k])
            return false;
    }
    return true;
}

HermitianLattice Search::build(std::vector<std::size_t> const & gens)
{
    KMatrix ak = to_kmatrix(o_, a_);
    KMatrix ai = inverse(ak);
    std::vector<KVector> vecs;
    for (std::size_t i = 0; i < g_; ++i)
        vecs.push_back(KMatrix::identity(o_, g_).row(i));
    for (std::size_t gidx : gens) {
        IntVector const & y = elems_[gidx];
        KVector c(g_, KNumber(o_, 0));
        for (std::size_t j = 0; j < g_; ++j)
            for (std::size_t i = 0; i < g_; ++i)
                c[j] += KNumber(o_, y[2 * i], y[2 * i + 1]) * ai(i, j);
        vecs.push_back(std::move(c));
    }
    PseudoBasis pb = module_pseudo_basis(o_, vecs);
    HermitianLattice L = reduce_lattice(lattice_from_pseudo_basis(o_, pb, ak, KMatrix::identity(o_, g_)));
    return HermitianLattice(o_, L.ideals(), L.gram());
}

ClassList Search::run()
{
    ClassList out;
    out.order = o_;
    out.rank = g_;
    out.free_only = opts_.free_only;
    out.indecomposable_only = opts_.indecomposable_only;
    try {
        if (g_ == 1) {
            /* (a, 1/N(a)), one per ideal class */
            for (auto const & a : cg_.classes)
                offer(HermitianLattice(o_, {a}, KMatrix::identity(o_, 1).scaled(1 / ideal_norm(a))));
        } else {
            if (!opts_.indecomposable_only) {
                /* a norm 1 vector splits off an orthogonal summand */
                EnumerationOptions sub;
                sub.seed = opts_.seed;
                ClassList lower = enumerate_unimodular(o_, g_ - 1, sub);
                HermitianLattice one = free_lattice(o_, KMatrix::identity(o_, 1));
                for (auto const & l : lower.reps)
                    offer(orthogonal_sum(one, l));
                stats_.gram_candidates += lower.stats.gram_candidates;
            }
            search_minima();
        }
    } catch (ResourceLimit const &) {
        out.complete = false;
    }

    std::vector<std::pair<std::string, std::size_t>> order;
    std::vector<HermitianLattice> presented;
    for (std::size_t k = 0; k < reps_.size(); ++k) {
        if (!keep_[k])
            continue;
        HermitianLattice n = steinitz_normal_form(reps_[k], cg_);
        order.emplace_back(canonical_text(presented.emplace_back(o_, n.ideals(), n.gram())), k);
    }
    std::sort(order.begin(), order.end());
    std::vector<std::size_t> slot(reps_.size());
    for (std::size_t k = 0, p = 0; k < reps_.size(); ++k)
        if (keep_[k])
            slot[k] = p++;
    for (auto const & [text, k] : order) {
        out.reps.push_back(presented[slot[k]]);
        out.provenance.push_back(prov_[k]);
    }
    stats_.seconds = elapsed();
    out.stats = stats_;
    return out;
}

}  // namespace

std::string canonical_text(HermitianLattice const & L)
{
    std::string s;
    for (auto const & a : L.ideals())
        s += a.to_string() + ";";
    s += "|";
    for (std::size_t i = 0; i < L.rank(); ++i)
        for (std::size_t j = 0; j < L.rank(); ++j)
            s += L.gram()(i, j).to_string() + ",";
    return s;
}

ClassList enumerate_unimodular(Order const & o, std::size_t g, EnumerationOptions const & opts)
{
    if (g < 1 || g > 3)
        throw std::invalid_argument("rank " + std::to_string(g) + " outside the supported range 1..3");
    return Search(o, g, opts).run();
}

ClassList enumerate_unimodular(Order const & o, std::size_t g, bool free_only)
{
    EnumerationOptions opts;
    opts.free_only = free_only;
    return enumerate_unimodular(o, g, opts);
}

ClassList filter_indecomposable(ClassList const & list)
{
    ClassList out = list;
    out.reps.clear();
    out.provenance.clear();
    out.indecomposable_only = true;
    for (std::size_t k = 0; k < list.reps.size(); ++k)
        if (is_indecomposable(list.reps[k])) {
            out.reps.push_back(list.reps[k]);
            out.provenance.push_back(list.provenance[k]);
        }
    return out;
}

}  // namespace hermlat
