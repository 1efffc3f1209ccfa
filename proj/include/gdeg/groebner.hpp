#pragma once

#include "parallel.hpp"
#include "polyring.hpp"

#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>

namespace gdeg {

struct Ideal {
    RingPtr ring;
    std::vector<Polynomial> gens;

    Ideal() = default;
    Ideal(RingPtr r, std::vector<Polynomial> g) : ring(std::move(r)), gens(std::move(g))
    {
        gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Polynomial& p) { return p.is_zero(); }),
                   gens.end());
        for (const auto& p : gens)
            if (p.ring().get() != ring.get() && !p.ring()->same(*ring)) throw Error("generator from another ring");
    }
    static Ideal parse(RingPtr r, const std::vector<std::string>& lines)
    {
        return Ideal(r, parse_polynomials(r, lines));
    }
};

struct ResourceLimit : Error {
    using Error::Error;
};

enum class PairStrategy { Normal, Fifo, Shuffled };

struct GbOptions {
    PairStrategy strategy = PairStrategy::Normal;
    uint64_t seed = 0;
    size_t max_pairs = 0;  // 0 = unlimited
    size_t max_basis = 0;
    unsigned threads = 0;  // 0 = default_threads()
};

struct GbStats {
    size_t pairs_considered = 0;
    size_t pairs_reduced = 0;
    size_t zero_reductions = 0;
};

struct GroebnerBasis {
    Ideal ideal;
    OrderSpec order;
    std::vector<Polynomial> elements;
    bool reduced = false;
    GbStats stats;

    std::vector<Exp> lead_exponents() const
    {
        std::vector<Exp> r;
        for (const auto& g : elements) r.push_back(leading_term(g, order).first);
        return r;
    }
};

namespace detail {

using Mono = boost::container::small_vector<int64_t, 48>;

struct KTerm {
    Mono m;
    Q c;
};
using KPoly = std::vector<KTerm>;

inline uint64_t mask_of(const int64_t* e, size_t n)
{
    uint64_t m = 0;
    for (size_t i = 0; i < n; ++i)
        if (e[i] > 0) m |= uint64_t(1) << (i % 64);
    return m;
}

// Monomials carry the integerized weight-row values in front of the exponents so that
// comparison is cheap and multiplication is a plain vector addition.
struct Kernel {
    size_t n = 0, R = 0;
    std::vector<std::vector<int64_t>> rows;
    Tiebreak tb = Tiebreak::Lex;
    std::vector<size_t> perm;
    std::vector<int64_t> sel;  // weights for pair selection

    Kernel(const OrderSpec& o, const Ring& ring) : n(ring.nvars()), R(o.weight_rows.size()), tb(o.tiebreak), perm(o.perm)
    {
        o.validate(n);
        for (const auto& r : o.weight_rows) {
            mpz_class l = 1;
            for (const auto& x : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
            std::vector<int64_t> row;
            for (const auto& x : r) {
                Q y = x * l;
                if (!y.get_num().fits_slong_p()) throw Error("weight row too large");
                row.push_back(y.get_num().get_si());
            }
            rows.push_back(std::move(row));
        }
        bool pos = true;
        for (const auto& x : ring.d())
            if (x <= 0) pos = false;
        if (pos) {
            mpz_class l = 1;
            for (const auto& x : ring.d()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
            for (const auto& x : ring.d()) sel.push_back(Q(x * l).get_num().get_si());
        } else {
            sel.assign(n, 1);
        }
    }

    Mono from_exp(const Exp& e) const
    {
        Mono m(R + n, 0);
        for (size_t i = 0; i < n; ++i) m[R + i] = e[i];
        fill_rows(m);
        return m;
    }
    void fill_rows(Mono& m) const
    {
        for (size_t r = 0; r < R; ++r) {
            int64_t s = 0;
            const auto& row = rows[r];
            for (size_t i = 0; i < n; ++i) s += row[i] * m[R + i];
            m[r] = s;
        }
    }
    Exp to_exp(const Mono& m) const
    {
        Exp e(n);
        for (size_t i = 0; i < n; ++i) e[i] = static_cast<int>(m[R + i]);
        return e;
    }
    const int64_t* ex(const Mono& m) const { return m.data() + R; }

    int cmp(const Mono& a, const Mono& b) const
    {
        for (size_t r = 0; r < R; ++r)
            if (a[r] != b[r]) return a[r] < b[r] ? -1 : 1;
        if (tb == Tiebreak::Lex) {
            for (size_t k = 0; k < n; ++k) {
                size_t i = R + perm[k];
                if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
            }
        } else {
            for (size_t k = n; k-- > 0;) {
                size_t i = R + perm[k];
                if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
            }
        }
        return 0;
    }
    bool divides(const Mono& a, const Mono& b) const
    {
        for (size_t i = R; i < R + n; ++i)
            if (a[i] > b[i]) return false;
        return true;
    }
    Mono lcm(const Mono& a, const Mono& b) const
    {
        Mono m(R + n, 0);
        for (size_t i = R; i < R + n; ++i) m[i] = std::max(a[i], b[i]);
        fill_rows(m);
        return m;
    }
    bool coprime(const Mono& a, const Mono& b) const
    {
        for (size_t i = R; i < R + n; ++i)
            if (a[i] > 0 && b[i] > 0) return false;
        return true;
    }
    static Mono sub(const Mono& a, const Mono& b)
    {
        Mono m(a.size());
        for (size_t i = 0; i < a.size(); ++i) m[i] = a[i] - b[i];
        return m;
    }
    int64_t seldeg(const Mono& m) const
    {
        int64_t s = 0;
        for (size_t i = 0; i < n; ++i) s += sel[i] * m[R + i];
        return s;
    }

    KPoly from_poly(const Polynomial& f) const
    {
        KPoly p;
        p.reserve(f.size());
        for (const auto& t : f.terms()) p.push_back({from_exp(t.first), t.second});
        std::sort(p.begin(), p.end(), [&](const KTerm& a, const KTerm& b) { return cmp(a.m, b.m) > 0; });
        return p;
    }
    Polynomial to_poly(const KPoly& p, const RingPtr& ring) const
    {
        std::vector<Term> ts;
        ts.reserve(p.size());
        for (const auto& t : p) ts.emplace_back(to_exp(t.m), t.c);
        return Polynomial::from_terms(ring, std::move(ts));
    }

    // a[from..] - c * x^q * b[1..] ; both sorted descending
    KPoly sub_mul(const KPoly& a, size_t from, const Q& c, const Mono& q, const KPoly& b) const
    {
        KPoly out;
        out.reserve(a.size() - from + b.size());
        size_t i = from, j = 1;
        Mono bm;
        auto shifted = [&](size_t k) {
            Mono m(b[k].m.size());
            for (size_t t = 0; t < m.size(); ++t) m[t] = b[k].m[t] + q[t];
            return m;
        };
        bool have = false;
        while (i < a.size() || j < b.size()) {
            if (j < b.size() && !have) {
                bm = shifted(j);
                have = true;
            }
            int s;
            if (j >= b.size())
                s = 1;
            else if (i >= a.size())
                s = -1;
            else
                s = cmp(a[i].m, bm);
            if (s > 0) {
                out.push_back(a[i++]);
            } else if (s < 0) {
                out.push_back({std::move(bm), -c * b[j].c});
                ++j;
                have = false;
            } else {
                Q v = a[i].c - c * b[j].c;
                if (v != 0) out.push_back({a[i].m, v});
                ++i;
                ++j;
                have = false;
            }
        }
        return out;
    }

    static void make_monic(KPoly& p)
    {
        if (p.empty() || p[0].c == 1) return;
        Q inv = Q(1) / p[0].c;
        for (auto& t : p) t.c *= inv;
    }
};

struct Basis {
    const Kernel* K;
    std::vector<KPoly> polys;
    std::vector<uint64_t> masks;
    std::vector<char> active;

    int find_divisor(const Mono& m, size_t limit = SIZE_MAX) const
    {
        uint64_t mm = mask_of(K->ex(m), K->n);
        size_t lim = std::min(limit, polys.size());
        for (size_t i = 0; i < lim; ++i) {
            if (!active[i]) continue;
            if (masks[i] & ~mm) continue;
            if (K->divides(polys[i][0].m, m)) return static_cast<int>(i);
        }
        return -1;
    }

    // Reduces p; `full` also reduces non-leading terms. `skip` is excluded from the divisors.
    KPoly reduce(KPoly p, bool full, size_t limit = SIZE_MAX, int skip = -1) const
    {
        KPoly rem;
        size_t start = 0;
        while (start < p.size()) {
            int g = -1;
            {
                uint64_t mm = mask_of(K->ex(p[start].m), K->n);
                size_t lim = std::min(limit, polys.size());
                for (size_t i = 0; i < lim; ++i) {
                    if (!active[i] || static_cast<int>(i) == skip) continue;
                    if (masks[i] & ~mm) continue;
                    if (K->divides(polys[i][0].m, p[start].m)) {
                        g = static_cast<int>(i);
                        break;
                    }
                }
            }
            if (g >= 0) {
                const KPoly& gp = polys[g];
                Mono q = Kernel::sub(p[start].m, gp[0].m);
                Q c = p[start].c / gp[0].c;
                p = K->sub_mul(p, start + 1, c, q, gp);
                start = 0;
            } else if (full) {
                rem.push_back(std::move(p[start]));
                ++start;
            } else {
                break;
            }
        }
        if (!full) {
            KPoly out(std::make_move_iterator(p.begin() + start), std::make_move_iterator(p.end()));
            return out;
        }
        return rem;
    }
};

inline KPoly spoly(const Kernel& K, const KPoly& f, const KPoly& g)
{
    Mono l = K.lcm(f[0].m, g[0].m);
    Mono qf = Kernel::sub(l, f[0].m), qg = Kernel::sub(l, g[0].m);
    // (1/lc f) x^qf f - (1/lc g) x^qg g, leading terms cancel
    KPoly a;
    a.reserve(f.size());
    Q cf = Q(1) / f[0].c;
    for (size_t i = 1; i < f.size(); ++i) {
        Mono m(f[i].m.size());
        for (size_t t = 0; t < m.size(); ++t) m[t] = f[i].m[t] + qf[t];
        a.push_back({std::move(m), f[i].c * cf});
    }
    // insert a dummy leading term so sub_mul can skip index 0 of g
    KPoly a2;
    a2.reserve(a.size() + 1);
    a2.push_back({l, Q(0)});
    for (auto& t : a) a2.push_back(std::move(t));
    return K.sub_mul(a2, 1, Q(1) / g[0].c, qg, g);
}

}  // namespace detail

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const OrderSpec& o)
{
    if (f.is_zero() || g.is_zero()) throw Error("S-polynomial of zero");
    detail::Kernel K(o, *f.ring());
    auto a = K.from_poly(f), b = K.from_poly(g);
    // unnormalized form: lcm/in(f) * f - (lc f / lc g) lcm/in(g) * g, as in the textbook definition with coefficients
    auto s = detail::spoly(K, a, b);
    for (auto& t : s) t.c *= a[0].c;
    return K.to_poly(s, f.ring());
}

struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

inline DivisionResult divide_with_remainder(const Polynomial& f, const std::vector<Polynomial>& G, const OrderSpec& o)
{
    const RingPtr& R = f.ring();
    detail::Kernel K(o, *R);
    std::vector<detail::KPoly> gs;
    for (const auto& g : G) {
        if (g.is_zero()) throw Error("division by zero polynomial");
        gs.push_back(K.from_poly(g));
    }
    std::vector<std::vector<Term>> qs(G.size());
    std::vector<Term> rem;
    detail::KPoly p = K.from_poly(f);
    size_t start = 0;
    while (start < p.size()) {
        bool done = false;
        for (size_t i = 0; i < gs.size(); ++i) {
            if (!K.divides(gs[i][0].m, p[start].m)) continue;
            auto q = detail::Kernel::sub(p[start].m, gs[i][0].m);
            Q c = p[start].c / gs[i][0].c;
            qs[i].emplace_back(K.to_exp(q), c);
            p = K.sub_mul(p, start + 1, c, q, gs[i]);
            start = 0;
            done = true;
            break;
        }
        if (!done) {
            rem.emplace_back(K.to_exp(p[start].m), p[start].c);
            ++start;
        }
    }
    DivisionResult r;
    for (auto& q : qs) r.quotients.push_back(Polynomial::from_terms(R, std::move(q)));
    r.remainder = Polynomial::from_terms(R, std::move(rem));
    return r;
}

namespace detail {

struct PairRec {
    int i, j;
    Mono lcm;
    int64_t deg;
    uint64_t key;
};

class Buchberger {
public:
    Buchberger(const Ideal& I, const OrderSpec& o, const GbOptions& opt)
        : ring_(I.ring), K_(o, *I.ring), opt_(opt), rng_(opt.seed), pairs_(PairLess{this})
    {
        B_.K = &K_;
        threads_ = opt.threads ? opt.threads : default_threads();
        gens_ = I.gens;
    }

    std::vector<KPoly> run()
    {
        // feed generators in order of increasing leading monomial
        std::vector<KPoly> in;
        for (const auto& g : gens_) {
            auto p = K_.from_poly(g);
            if (!p.empty()) in.push_back(std::move(p));
        }
        std::stable_sort(in.begin(), in.end(), [&](const KPoly& a, const KPoly& b) { return K_.cmp(a[0].m, b[0].m) < 0; });
        for (auto& p : in) {
            int64_t sug = sugar_of(p);
            auto h = B_.reduce(std::move(p), true);
            if (h.empty()) continue;
            Kernel::make_monic(h);
            insert(std::move(h), sug);
        }
        while (!pairs_.empty()) {
            if (threads_ > 1)
                round_parallel();
            else
                step();
        }
        std::vector<KPoly> out;
        for (size_t i = 0; i < B_.polys.size(); ++i)
            if (B_.active[i]) out.push_back(B_.polys[i]);
        return out;
    }

    const Kernel& kernel() const { return K_; }
    GbStats stats;

private:
    struct PairLess {
        const Buchberger* self;
        bool operator()(const PairRec& a, const PairRec& b) const
        {
            switch (self->opt_.strategy) {
            case PairStrategy::Normal: {
                if (a.deg != b.deg) return a.deg < b.deg;
                int c = self->K_.cmp(a.lcm, b.lcm);
                if (c != 0) return c < 0;
                break;
            }
            case PairStrategy::Shuffled:
                // normal degree order, random order among pairs of equal degree
                if (a.deg != b.deg) return a.deg < b.deg;
                if (a.key != b.key) return a.key < b.key;
                break;
            case PairStrategy::Fifo:
                if (a.key != b.key) return a.key < b.key;
                break;
            }
            if (a.j != b.j) return a.j < b.j;
            return a.i < b.i;
        }
    };

    RingPtr ring_;
    Kernel K_;
    GbOptions opt_;
    std::mt19937_64 rng_;
    Basis B_;
    std::set<PairRec, PairLess> pairs_;
    std::vector<Polynomial> gens_;
    unsigned threads_ = 1;
    uint64_t counter_ = 0;
    std::vector<int64_t> sugar_;

    int64_t sugar_of(const KPoly& p, int64_t at_least = INT64_MIN) const
    {
        for (const auto& t : p) at_least = std::max(at_least, K_.seldeg(t.m));
        return at_least;
    }

    void check_limits() const
    {
        if (opt_.max_pairs && stats.pairs_reduced > opt_.max_pairs)
            throw ResourceLimit("undetermined: S-pair limit exceeded");
        if (opt_.max_basis && B_.polys.size() > opt_.max_basis)
            throw ResourceLimit("undetermined: basis size limit exceeded");
    }

    PairRec make_pair(int i, int j, Mono l)
    {
        PairRec p{i, j, std::move(l), 0, 0};
        // sugar degree: the lcm degree for homogeneous input
        int64_t dl = K_.seldeg(p.lcm);
        p.deg = std::max(sugar_[i] + dl - K_.seldeg(B_.polys[i][0].m), sugar_[j] + dl - K_.seldeg(B_.polys[j][0].m));
        p.key = opt_.strategy == PairStrategy::Shuffled ? rng_() : counter_++;
        return p;
    }

    // Gebauer-Moeller update
    void insert(KPoly h, int64_t sug)
    {
        int hi = static_cast<int>(B_.polys.size());
        const Mono hm = h[0].m;
        sugar_.push_back(sugar_of(h, sug));
        B_.polys.push_back(std::move(h));
        B_.masks.push_back(mask_of(K_.ex(hm), K_.n));
        B_.active.push_back(1);

        std::vector<int> idx;
        for (int g = 0; g < hi; ++g)
            if (B_.active[g]) idx.push_back(g);
        std::vector<Mono> L(idx.size());
        for (size_t a = 0; a < idx.size(); ++a) L[a] = K_.lcm(B_.polys[idx[a]][0].m, hm);
        std::vector<char> cop(idx.size());
        for (size_t a = 0; a < idx.size(); ++a) cop[a] = K_.coprime(B_.polys[idx[a]][0].m, hm);

        // criterion M/F on new pairs
        std::vector<char> keep(idx.size(), 1);
        for (size_t a = 0; a < idx.size(); ++a) {
            if (cop[a]) continue;
            for (size_t b = 0; b < idx.size(); ++b) {
                if (a == b || !keep[b]) continue;
                if (!K_.divides(L[b], L[a])) continue;
                bool equal = K_.cmp(L[a], L[b]) == 0;
                if (!equal || b < a) {
                    keep[a] = 0;
                    break;
                }
            }
        }
        // equal-lcm classes containing a coprime pair are dropped entirely (product criterion)
        for (size_t a = 0; a < idx.size(); ++a) {
            if (!cop[a]) continue;
            for (size_t b = 0; b < idx.size(); ++b)
                if (keep[b] && K_.cmp(L[a], L[b]) == 0) keep[b] = 0;
            keep[a] = 0;
        }

        // criterion B on old pairs
        for (auto it = pairs_.begin(); it != pairs_.end();) {
            const PairRec& p = *it;
            if (K_.divides(hm, p.lcm)) {
                Mono l1 = K_.lcm(B_.polys[p.i][0].m, hm), l2 = K_.lcm(B_.polys[p.j][0].m, hm);
                if (K_.cmp(l1, p.lcm) != 0 && K_.cmp(l2, p.lcm) != 0) {
                    it = pairs_.erase(it);
                    continue;
                }
            }
            ++it;
        }
        for (size_t a = 0; a < idx.size(); ++a)
            if (keep[a]) pairs_.insert(make_pair(idx[a], hi, L[a]));

        for (int g = 0; g < hi; ++g)
            if (B_.active[g] && K_.divides(hm, B_.polys[g][0].m)) B_.active[g] = 0;
        check_limits();
    }

    void step()
    {
        PairRec p = *pairs_.begin();
        pairs_.erase(pairs_.begin());
        ++stats.pairs_considered;
        ++stats.pairs_reduced;
        check_limits();
        auto s = spoly(K_, B_.polys[p.i], B_.polys[p.j]);
        auto h = B_.reduce(std::move(s), true);
        if (h.empty()) {
            ++stats.zero_reductions;
            return;
        }
        Kernel::make_monic(h);
        insert(std::move(h), p.deg);
    }

    void round_parallel()
    {
        std::vector<PairRec> batch;
        int64_t d = pairs_.begin()->deg;
        if (opt_.strategy != PairStrategy::Fifo) {
            while (!pairs_.empty() && pairs_.begin()->deg == d) {
                batch.push_back(*pairs_.begin());
                pairs_.erase(pairs_.begin());
            }
        } else {
            batch.push_back(*pairs_.begin());
            pairs_.erase(pairs_.begin());
        }
        stats.pairs_considered += batch.size();
        stats.pairs_reduced += batch.size();
        check_limits();
        std::vector<KPoly> res(batch.size());
        size_t lim = B_.polys.size();
        parallel_for(batch.size(), threads_, [&](size_t k) {
            auto s = spoly(K_, B_.polys[batch[k].i], B_.polys[batch[k].j]);
            res[k] = B_.reduce(std::move(s), true, lim);
        });
        for (size_t k = 0; k < res.size(); ++k) {
            auto& r = res[k];
            if (r.empty()) {
                ++stats.zero_reductions;
                continue;
            }
            auto h = B_.reduce(std::move(r), true);
            if (h.empty()) {
                ++stats.zero_reductions;
                continue;
            }
            Kernel::make_monic(h);
            insert(std::move(h), batch[k].deg);
        }
    }
};

inline std::vector<KPoly> interreduce(const Kernel& K, std::vector<KPoly> G, unsigned threads)
{
    // drop elements whose leading monomial is divisible by another's
    std::vector<char> keep(G.size(), 1);
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = 0; j < G.size(); ++j) {
            if (i == j || !keep[j]) continue;
            if (K.divides(G[j][0].m, G[i][0].m)) {
                if (K.cmp(G[j][0].m, G[i][0].m) != 0 || j < i) {
                    keep[i] = 0;
                    break;
                }
            }
        }
    Basis B;
    B.K = &K;
    for (size_t i = 0; i < G.size(); ++i)
        if (keep[i]) {
            B.masks.push_back(mask_of(K.ex(G[i][0].m), K.n));
            B.polys.push_back(std::move(G[i]));
            B.active.push_back(1);
        }
    std::vector<KPoly> out(B.polys.size());
    parallel_for(B.polys.size(), threads, [&](size_t i) {
        const KPoly& g = B.polys[i];
        KPoly tail(g.begin() + 1, g.end());
        KPoly r = B.reduce(std::move(tail), true, SIZE_MAX, static_cast<int>(i));
        KPoly full;
        full.reserve(r.size() + 1);
        full.push_back(g[0]);
        for (auto& t : r) full.push_back(std::move(t));
        Kernel::make_monic(full);
        out[i] = std::move(full);
    });
    std::sort(out.begin(), out.end(), [&](const KPoly& a, const KPoly& b) { return K.cmp(a[0].m, b[0].m) < 0; });
    return out;
}

}  // namespace detail

inline GroebnerBasis buchberger(const Ideal& I, const OrderSpec& o, const GbOptions& opt = {})
{
    detail::Buchberger bb(I, o, opt);
    auto G = bb.run();
    GroebnerBasis gb;
    gb.ideal = I;
    gb.order = o;
    gb.stats = bb.stats;
    for (const auto& g : G) gb.elements.push_back(bb.kernel().to_poly(g, I.ring));
    gb.reduced = false;
    return gb;
}

inline GroebnerBasis reduce(const GroebnerBasis& gb, unsigned threads = 0)
{
    detail::Kernel K(gb.order, *gb.ideal.ring);
    std::vector<detail::KPoly> G;
    for (const auto& g : gb.elements)
        if (!g.is_zero()) G.push_back(K.from_poly(g));
    auto R = detail::interreduce(K, std::move(G), threads ? threads : default_threads());
    GroebnerBasis out = gb;
    out.elements.clear();
    for (const auto& g : R) out.elements.push_back(K.to_poly(g, gb.ideal.ring));
    out.reduced = true;
    return out;
}

inline GroebnerBasis groebner_basis(const Ideal& I, const OrderSpec& o, const GbOptions& opt = {})
{
    return reduce(buchberger(I, o, opt), opt.threads);
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb)
{
    if (f.is_zero()) return f;
    detail::Kernel K(gb.order, *gb.ideal.ring);
    detail::Basis B;
    B.K = &K;
    for (const auto& g : gb.elements) {
        auto p = K.from_poly(g);
        B.masks.push_back(detail::mask_of(K.ex(p[0].m), K.n));
        B.polys.push_back(std::move(p));
        B.active.push_back(1);
    }
    return K.to_poly(B.reduce(K.from_poly(f), true), gb.ideal.ring);
}

inline bool ideal_member(const Polynomial& f, const GroebnerBasis& gb) { return normal_form(f, gb).is_zero(); }

// Buchberger criterion checked over all pairs.
inline bool is_groebner_basis(const std::vector<Polynomial>& G, const OrderSpec& o)
{
    if (G.empty()) return true;
    detail::Kernel K(o, *G[0].ring());
    detail::Basis B;
    B.K = &K;
    for (const auto& g : G) {
        if (g.is_zero()) continue;
        auto p = K.from_poly(g);
        B.masks.push_back(detail::mask_of(K.ex(p[0].m), K.n));
        B.polys.push_back(std::move(p));
        B.active.push_back(1);
    }
    for (size_t i = 0; i < B.polys.size(); ++i)
        for (size_t j = i + 1; j < B.polys.size(); ++j) {
            if (K.coprime(B.polys[i][0].m, B.polys[j][0].m)) continue;
            auto s = detail::spoly(K, B.polys[i], B.polys[j]);
            if (!B.reduce(std::move(s), false).empty()) return false;
        }
    return true;
}

inline bool same_reduced_basis(const GroebnerBasis& a, const GroebnerBasis& b)
{
    if (a.elements.size() != b.elements.size()) return false;
    for (size_t i = 0; i < a.elements.size(); ++i)
        if (a.elements[i] != b.elements[i]) return false;
    return true;
}

// ---- monomial ideals and standard monomials --------------------------

inline std::vector<Exp> minimalize_monomials(std::vector<Exp> ms)
{
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    std::vector<Exp> out;
    for (size_t i = 0; i < ms.size(); ++i) {
        bool red = false;
        for (size_t j = 0; j < ms.size() && !red; ++j)
            if (i != j && divides(ms[j], ms[i])) red = true;
        if (!red) out.push_back(ms[i]);
    }
    return out;
}

struct StandardMonomialBasis {
    std::vector<Exp> lead_monomials;

    explicit StandardMonomialBasis(std::vector<Exp> leads) : lead_monomials(minimalize_monomials(std::move(leads))) {}
    static StandardMonomialBasis of(const GroebnerBasis& gb) { return StandardMonomialBasis(gb.lead_exponents()); }

    bool contains(const Exp& a) const
    {
        for (const auto& l : lead_monomials)
            if (divides(l, a)) return false;
        return true;
    }

    // Calls fn on every standard monomial with d-degree <= D (d must be positive).
    template <class Fn>
    void enumerate(const QVec& d, const Q& D, Fn&& fn) const
    {
        size_t n = d.size();
        for (const auto& x : d)
            if (x <= 0) throw Error("standard monomial enumeration needs a positive grading");
        Exp e(n, 0);
        std::function<void(size_t, Q)> rec = [&](size_t i, Q used) {
            if (i == n) {
                fn(e, used);
                return;
            }
            Q u = used;
            while (u <= D) {
                if (contains(e)) rec(i + 1, u);
                else
                    break;
                ++e[i];
                u += d[i];
            }
            e[i] = 0;
        };
        rec(0, Q(0));
    }

    std::map<Q, size_t> count_by_degree(const QVec& d, const Q& D) const
    {
        std::map<Q, size_t> c;
        for (Q k = 0; k <= D; k += 1) c[k] = 0;
        enumerate(d, D, [&](const Exp&, const Q& deg) { c[deg] += 1; });
        return c;
    }
};

// ---- weights and cones -----------------------------------------------

inline std::vector<Polynomial> initial_forms(const std::vector<Polynomial>& G, const QVec& w)
{
    std::vector<Polynomial> r;
    for (const auto& g : G) r.push_back(initial_form_weight(g, w));
    return r;
}

enum class ConeClass { Interior, Boundary, Outside };

inline const char* cone_class_name(ConeClass c)
{
    switch (c) {
    case ConeClass::Interior: return "interior";
    case ConeClass::Boundary: return "boundary";
    default: return "outside";
    }
}

inline ConeClass cone_membership(const GroebnerBasis& gb, const QVec& w)
{
    bool interior = true;
    for (const auto& g : gb.elements) {
        auto iw = initial_form_weight(g, w);
        if (leading_term(iw, gb.order) != leading_term(g, gb.order)) return ConeClass::Outside;
        if (iw.size() > 1) interior = false;
    }
    return interior ? ConeClass::Interior : ConeClass::Boundary;
}

inline ConeClass cone_membership(const Ideal& I, const OrderSpec& o, const QVec& w, const GbOptions& opt = {})
{
    return cone_membership(groebner_basis(I, o, opt), w);
}

inline Ideal initial_ideal(const GroebnerBasis& gb, const QVec& w)
{
    if (!gb.reduced) throw Error("initial_ideal needs a reduced basis");
    if (cone_membership(gb, w) == ConeClass::Outside) throw Error("weight outside closed cone of supplied order");
    auto forms = initial_forms(gb.elements, w);
    bool monomial = std::all_of(forms.begin(), forms.end(), [](const Polynomial& p) { return p.size() == 1; });
    if (monomial) {
        std::vector<Exp> ms;
        for (const auto& f : forms) ms.push_back(f.terms()[0].first);
        std::vector<Polynomial> gens;
        for (auto& e : minimalize_monomials(ms)) gens.push_back(Polynomial::monomial(gb.ideal.ring, e));
        return Ideal(gb.ideal.ring, gens);
    }
    std::vector<Polynomial> gens;
    for (const auto& f : forms) gens.push_back(make_monic(f, gb.order));
    return Ideal(gb.ideal.ring, gens);
}

inline Ideal initial_ideal(const Ideal& I, const QVec& w, const OrderSpec& hint, const GbOptions& opt = {})
{
    return initial_ideal(groebner_basis(I, hint, opt), w);
}

inline bool lineality_contains(const GroebnerBasis& gb, const QVec& l)
{
    for (const auto& g : gb.elements)
        if (initial_form_weight(g, l) != g) return false;
    return true;
}

inline bool totally_positive_witness(const GroebnerBasis& gb)
{
    for (const auto& g : gb.elements) {
        size_t pos = 0;
        for (const auto& t : g.terms())
            if (t.second > 0) ++pos;
        if (pos != 1) return false;
        if (leading_term(g, gb.order).second <= 0) return false;
    }
    return true;
}

// Block order: the listed variables are eliminated (any monomial involving them is larger).
inline OrderSpec elimination_order(const Ring& r, const std::vector<size_t>& eliminate)
{
    size_t n = r.nvars();
    OrderSpec o;
    QVec ind(n, Q(0)), rest(n, Q(0));
    std::vector<char> e(n, 0);
    for (size_t i : eliminate) e[i] = 1;
    for (size_t i = 0; i < n; ++i) {
        if (e[i])
            ind[i] = 1;
        else
            rest[i] = r.d()[i] > 0 ? r.d()[i] : Q(1);
    }
    o.weight_rows = {ind, rest};
    o.tiebreak = Tiebreak::RevLex;
    for (size_t i = 0; i < n; ++i)
        if (e[i]) o.perm.push_back(i);
    for (size_t i = 0; i < n; ++i)
        if (!e[i]) o.perm.push_back(i);
    return o;
}

inline bool has_unit(const GroebnerBasis& gb)
{
    for (const auto& g : gb.elements)
        if (g.size() == 1 && std::all_of(g.terms()[0].first.begin(), g.terms()[0].first.end(), [](int x) { return x == 0; }))
            return true;
    return false;
}

// True iff the saturation by the product of all variables is the unit ideal.
inline bool contains_monomial(const Ideal& I, const GbOptions& opt = {})
{
    const Ring& R = *I.ring;
    for (const auto& g : I.gens)
        if (g.size() == 1) return true;
    std::vector<std::string> vs = R.vars();
    std::string z = "z_sat";
    while (R.index(z) >= 0) z += "_";
    vs.push_back(z);
    QVec d = R.d();
    d.push_back(Q(1));
    auto S = Ring::make(vs, d);
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens) {
        std::vector<Term> ts;
        for (const auto& t : g.terms()) {
            Exp e = t.first;
            e.push_back(0);
            ts.emplace_back(std::move(e), t.second);
        }
        gens.push_back(Polynomial::from_terms(S, std::move(ts)));
    }
    Exp all(vs.size(), 1);
    gens.push_back(Polynomial::monomial(S, all) - Polynomial::constant(S, 1));
    auto gb = groebner_basis(Ideal(S, gens), OrderSpec::grevlex(vs.size()), opt);
    return has_unit(gb);
}

// Kernel of p_i -> u^{A e_i}; A has one row per torus coordinate, one column per target variable.
inline Ideal toric_ideal_of_matrix(const std::vector<std::vector<long>>& A, const RingPtr& target,
                                   const OrderSpec& out_order, const GbOptions& opt = {})
{
    size_t n = target->nvars();
    size_t k = A.size();
    for (const auto& row : A)
        if (row.size() != n) throw Error("matrix column count does not match the ring");
    std::vector<std::string> vs = target->vars();
    QVec d = target->d();
    std::vector<size_t> elim;
    for (size_t i = 0; i < k; ++i) {
        vs.push_back("u_tor" + std::to_string(i));
        d.push_back(Q(1));
        elim.push_back(n + i);
    }
    vs.push_back("v_tor");
    d.push_back(Q(1));
    elim.push_back(n + k);
    auto S = Ring::make(vs, d);
    std::vector<Polynomial> gens;
    bool needv = false;
    for (size_t j = 0; j < n; ++j) {
        Exp lhs(vs.size(), 0), rhs(vs.size(), 0);
        lhs[j] = 1;
        for (size_t i = 0; i < k; ++i) {
            long a = A[i][j];
            if (a > 0)
                rhs[n + i] = static_cast<int>(a);
            else if (a < 0) {
                lhs[n + i] = static_cast<int>(-a);
                needv = true;
            }
        }
        gens.push_back(Polynomial::monomial(S, lhs) - Polynomial::monomial(S, rhs));
    }
    if (needv) {
        Exp e(vs.size(), 0);
        for (size_t i = 0; i <= k; ++i) e[n + i] = 1;
        gens.push_back(Polynomial::monomial(S, e) - Polynomial::constant(S, 1));
    }
    auto gb = groebner_basis(Ideal(S, gens), elimination_order(*S, elim), opt);
    std::vector<Polynomial> keep;
    for (const auto& g : gb.elements) {
        bool free = true;
        for (const auto& t : g.terms())
            for (size_t i = n; i < vs.size(); ++i)
                if (t.first[i] != 0) free = false;
        if (!free) continue;
        std::vector<Term> ts;
        for (const auto& t : g.terms()) {
            Exp e(t.first.begin(), t.first.begin() + n);
            ts.emplace_back(std::move(e), t.second);
        }
        keep.push_back(Polynomial::from_terms(target, std::move(ts)));
    }
    if (keep.empty()) return Ideal(target, {});
    auto red = groebner_basis(Ideal(target, keep), out_order, opt);
    return Ideal(target, red.elements);
}

inline bool ideals_equal(const Ideal& a, const Ideal& b, const OrderSpec& o, const GbOptions& opt = {})
{
    if (a.gens.empty() || b.gens.empty()) return a.gens.empty() == b.gens.empty();
    return same_reduced_basis(groebner_basis(a, o, opt), groebner_basis(b, o, opt));
}

}  // namespace gdeg
