#pragma once

#include "groebner.hpp"

#include <deque>

namespace gdeg {

// (m + f) x m integer matrix; the top m x m block is skew-symmetric.
struct ExchangeMatrix {
    size_t m = 0;
    std::vector<std::vector<int>> b;

    ExchangeMatrix() = default;
    ExchangeMatrix(size_t m_, std::vector<std::vector<int>> rows) : m(m_), b(std::move(rows))
    {
        if (b.size() < m) throw Error("exchange matrix needs at least m rows");
        for (const auto& r : b)
            if (r.size() != m) throw Error("exchange matrix row has the wrong length");
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j)
                if (b[i][j] != -b[j][i]) throw Error("principal part is not skew-symmetric");
    }
    size_t rows() const { return b.size(); }
    size_t f() const { return b.size() - m; }
    bool operator==(const ExchangeMatrix& o) const { return m == o.m && b == o.b; }
};

inline ExchangeMatrix mutate_matrix(const ExchangeMatrix& B, size_t k)
{
    if (k >= B.m) throw Error("mutation index out of range or frozen");
    ExchangeMatrix r = B;
    for (size_t i = 0; i < B.rows(); ++i)
        for (size_t j = 0; j < B.m; ++j) {
            if (i == k || j == k) {
                r.b[i][j] = -B.b[i][j];
            } else {
                int bik = B.b[i][k], bkj = B.b[k][j];
                int s = (bik > 0) - (bik < 0);
                r.b[i][j] = B.b[i][j] + s * std::max(bik * bkj, 0);
            }
        }
    return r;
}

// Stack the identity below the (m+f) rows; coefficient rows for frozen directions stay zero.
inline ExchangeMatrix build_B_prin(const ExchangeMatrix& B)
{
    ExchangeMatrix r = B;
    size_t N = B.rows();
    for (size_t i = 0; i < N; ++i) {
        std::vector<int> row(B.m, 0);
        if (i < B.m) row[i] = 1;
        r.b.push_back(row);
    }
    return r;
}

struct IceQuiver {
    std::vector<std::string> vertices;  // mutable first, then frozen
    size_t mutable_count = 0;
    std::vector<std::pair<std::string, std::string>> arrows;

    ExchangeMatrix matrix() const
    {
        std::map<std::string, size_t> idx;
        for (size_t i = 0; i < vertices.size(); ++i) idx[vertices[i]] = i;
        std::vector<std::vector<int>> b(vertices.size(), std::vector<int>(mutable_count, 0));
        for (const auto& [s, t] : arrows) {
            auto is = idx.find(s), it = idx.find(t);
            if (is == idx.end() || it == idx.end()) throw Error("arrow between unknown vertices");
            size_t i = is->second, j = it->second;
            if (j < mutable_count) b[i][j] += 1;
            if (i < mutable_count) b[j][i] -= 1;
        }
        return ExchangeMatrix(mutable_count, b);
    }

    static IceQuiver from_matrix(const ExchangeMatrix& B, std::vector<std::string> names)
    {
        IceQuiver q;
        q.vertices = std::move(names);
        q.mutable_count = B.m;
        for (size_t i = 0; i < B.rows(); ++i)
            for (size_t j = 0; j < B.m; ++j) {
                if (i < B.m && i > j) continue;  // count each mutable pair once
                int v = B.b[i][j];
                for (int c = 0; c < std::abs(v); ++c) {
                    if (v > 0)
                        q.arrows.emplace_back(q.vertices[i], q.vertices[j]);
                    else
                        q.arrows.emplace_back(q.vertices[j], q.vertices[i]);
                }
            }
        if (!(q.matrix() == B)) throw Error("matrix is not realised by a quiver");
        return q;
    }
};

// Arithmetic on cluster values: exact rationals or Laurent polynomials.
inline Q cl_one(const Q&) { return Q(1); }
inline Polynomial cl_one(const Polynomial& p) { return Polynomial::constant(p.ring(), 1); }
inline Q cl_pow(const Q& x, int k)
{
    Q r = 1;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}
inline Polynomial cl_pow(const Polynomial& x, int k) { return x.pow(static_cast<unsigned>(k)); }
inline Q cl_div(const Q& a, const Q& b)
{
    if (b == 0) throw Error("division by zero cluster value");
    return a / b;
}
inline Polynomial cl_div(const Polynomial& a, const Polynomial& b)
{
    try {
        return exact_divide(a, b);
    } catch (const Error&) {
        throw Error("Laurent phenomenon violated");
    }
}

template <class V>
struct Seed {
    ExchangeMatrix B;
    std::vector<V> x;  // one value per row of B

    bool operator==(const Seed& o) const { return B == o.B && x == o.x; }
};

template <class V>
std::pair<V, V> exchange_monomials(const Seed<V>& s, size_t k)
{
    V plus = cl_one(s.x[0]), minus = cl_one(s.x[0]);
    for (size_t i = 0; i < s.B.rows(); ++i) {
        int v = s.B.b[i][k];
        if (v > 0) plus = plus * cl_pow(s.x[i], v);
        if (v < 0) minus = minus * cl_pow(s.x[i], -v);
    }
    return {plus, minus};
}

template <class V>
Seed<V> mutate_seed(const Seed<V>& s, size_t k)
{
    if (k >= s.B.m) throw Error("mutation index out of range or frozen");
    auto [plus, minus] = exchange_monomials(s, k);
    Seed<V> r;
    r.B = mutate_matrix(s.B, k);
    r.x = s.x;
    r.x[k] = cl_div(plus + minus, s.x[k]);
    return r;
}

inline bool value_less(const Q& a, const Q& b) { return a < b; }
inline bool value_less(const Polynomial& a, const Polynomial& b) { return a < b; }

template <class V>
struct ClusterKeyLess {
    bool operator()(const std::vector<V>& a, const std::vector<V>& b) const
    {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            [](const V& x, const V& y) { return value_less(x, y); });
    }
};

template <class V>
std::vector<V> cluster_key(const Seed<V>& s)
{
    std::vector<V> k(s.x.begin(), s.x.begin() + s.B.m);
    std::sort(k.begin(), k.end(), [](const V& a, const V& b) { return value_less(a, b); });
    return k;
}

template <class V>
struct ExchangeGraph {
    std::vector<Seed<V>> seeds;
    struct Edge {
        size_t from, k, to;
    };
    std::vector<Edge> edges;
    std::vector<V> variables;  // mutable cluster variables, in discovery order
    std::vector<std::vector<size_t>> seed_vars;  // indices into variables, per seed (column order)

    size_t var_index(const V& v) const
    {
        for (size_t i = 0; i < variables.size(); ++i)
            if (!value_less(variables[i], v) && !value_less(v, variables[i])) return i;
        return SIZE_MAX;
    }
};

template <class V>
ExchangeGraph<V> exchange_graph(const Seed<V>& s0, size_t bound, unsigned threads = 0)
{
    if (threads == 0) threads = default_threads();
    ExchangeGraph<V> G;
    std::map<std::vector<V>, size_t, ClusterKeyLess<V>> seen;
    std::map<V, size_t, ClusterKeyLess<V>> dummy;
    (void)dummy;
    auto add_vars = [&](const Seed<V>& s) {
        std::vector<size_t> ids;
        for (size_t i = 0; i < s.B.m; ++i) {
            size_t id = G.var_index(s.x[i]);
            if (id == SIZE_MAX) {
                id = G.variables.size();
                G.variables.push_back(s.x[i]);
            }
            ids.push_back(id);
        }
        G.seed_vars.push_back(ids);
    };
    seen[cluster_key(s0)] = 0;
    G.seeds.push_back(s0);
    add_vars(s0);
    std::vector<size_t> frontier{0};
    while (!frontier.empty()) {
        size_t m = s0.B.m;
        std::vector<Seed<V>> out(frontier.size() * m);
        parallel_for(out.size(), threads, [&](size_t t) {
            out[t] = mutate_seed(G.seeds[frontier[t / m]], t % m);
        });
        std::vector<size_t> next;
        for (size_t t = 0; t < out.size(); ++t) {
            size_t from = frontier[t / m], k = t % m;
            auto key = cluster_key(out[t]);
            auto it = seen.find(key);
            size_t to;
            if (it == seen.end()) {
                if (G.seeds.size() >= bound) throw Error("not finite type at this bound");
                to = G.seeds.size();
                seen.emplace(std::move(key), to);
                G.seeds.push_back(std::move(out[t]));
                add_vars(G.seeds.back());
                next.push_back(to);
            } else {
                to = it->second;
            }
            if (from < to || (from == to)) G.edges.push_back({from, k, to});
            else {
                bool dup = false;
                for (const auto& e : G.edges)
                    if (e.from == to && e.to == from) dup = true;
                if (!dup) G.edges.push_back({from, k, to});
            }
        }
        frontier = std::move(next);
    }
    return G;
}

// Principal-coefficient Laurent seed: variables x1.., frozen names, then coefficient names.
struct LaurentSetup {
    RingPtr ring;
    Seed<Polynomial> seed;
    std::vector<size_t> coefficient_vars;  // ring indices of coefficient variables
    size_t cluster_rows = 0;               // variables that make up the extended cluster
};

inline LaurentSetup principal_seed(const ExchangeMatrix& B, const std::vector<std::string>& names,
                                   const std::string& coef_prefix = "y")
{
    if (names.size() != B.rows()) throw Error("need one name per matrix row");
    size_t N = B.rows();
    ExchangeMatrix P = build_B_prin(B);
    std::vector<std::string> vs = names;
    for (size_t i = 0; i < N; ++i) vs.push_back(coef_prefix + std::to_string(i + 1));
    LaurentSetup L;
    L.ring = Ring::make(vs, true);
    L.seed.B = P;
    for (size_t i = 0; i < vs.size(); ++i) L.seed.x.push_back(Polynomial::variable(L.ring, i));
    for (size_t i = 0; i < N; ++i) L.coefficient_vars.push_back(N + i);
    L.cluster_rows = N;
    return L;
}

inline std::vector<int> g_vector(const Polynomial& X, const std::vector<size_t>& coefficient_vars, size_t cluster_rows)
{
    std::vector<Term> kept;
    for (const auto& t : X.terms()) {
        bool z = true;
        for (size_t c : coefficient_vars)
            if (t.first[c] > 0) z = false;
            else if (t.first[c] < 0) throw Error("coefficient variable with negative exponent");
        if (z) kept.push_back(t);
    }
    if (kept.size() != 1 || kept[0].second != 1) throw Error("g-vector extraction: t=0 evaluation is not a monomial");
    std::vector<int> g;
    for (size_t i = 0; i < cluster_rows; ++i) g.push_back(kept[0].first[i]);
    return g;
}

inline ExchangeMatrix opposite(const ExchangeMatrix& B)
{
    ExchangeMatrix r = B;
    for (auto& row : r.b)
        for (auto& v : row) v = -v;
    return r;
}

// All g-vectors of the principal-coefficient algebra of a square exchange matrix (mutable part).
inline std::vector<std::vector<int>> all_g_vectors(const ExchangeMatrix& Bmut, size_t bound = 100000)
{
    std::vector<std::string> names;
    for (size_t i = 0; i < Bmut.m; ++i) names.push_back("x" + std::to_string(i + 1));
    auto L = principal_seed(Bmut, names);
    auto G = exchange_graph(L.seed, bound);
    std::vector<std::vector<int>> gs;
    for (const auto& v : G.variables) gs.push_back(g_vector(v, L.coefficient_vars, L.cluster_rows));
    return gs;
}

// B over U, where U holds the truncated g-vectors of the opposite mutable quiver, sorted.
inline ExchangeMatrix build_B_univ(const ExchangeMatrix& B, size_t bound = 100000)
{
    ExchangeMatrix Bm(B.m, std::vector<std::vector<int>>(B.b.begin(), B.b.begin() + B.m));
    auto U = all_g_vectors(opposite(Bm), bound);
    std::sort(U.begin(), U.end());
    ExchangeMatrix r = B;
    for (auto& u : U) r.b.push_back(u);
    return r;
}

// Roots of a simply laced or general Cartan matrix, as coefficient vectors in the simple roots.
inline std::vector<std::vector<int>> positive_roots(const std::vector<std::vector<int>>& A)
{
    size_t n = A.size();
    std::vector<std::vector<int>> roots;
    std::set<std::vector<int>> have;
    for (size_t i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        roots.push_back(e);
        have.insert(e);
    }
    for (size_t idx = 0; idx < roots.size(); ++idx) {
        auto beta = roots[idx];
        for (size_t i = 0; i < n; ++i) {
            // <beta, alpha_i^vee> = sum_j c_j A[i][j]
            int pairing = 0;
            for (size_t j = 0; j < n; ++j) pairing += beta[j] * A[i][j];
            int p = 0;
            auto down = beta;
            while (true) {
                down[i] -= 1;
                if (!have.count(down)) break;
                ++p;
            }
            int q = p - pairing;
            if (q > 0) {
                auto up = beta;
                up[i] += 1;
                if (!have.count(up)) {
                    have.insert(up);
                    roots.push_back(up);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        int sa = 0, sb = 0;
        for (int x : a) sa += x;
        for (int x : b) sb += x;
        if (sa != sb) return sa < sb;
        return a > b;
    });
    return roots;
}

inline std::vector<std::vector<int>> cartan_D4()
{
    // node 1 is the branch point
    return {{2, -1, -1, -1}, {-1, 2, 0, 0}, {-1, 0, 2, 0}, {-1, 0, 0, 2}};
}

struct CorootRow {
    std::vector<int> root;  // coefficients in the simple coroots
    std::vector<int> row;
};

// source[i] true for sources, false for sinks; rows for the negative simple coroots come first.
inline std::vector<CorootRow> coroot_rows_bipartite(const std::vector<std::vector<int>>& cartan, const std::vector<bool>& source)
{
    size_t n = cartan.size();
    if (source.size() != n) throw Error("orientation has the wrong length");
    // coroots: roots of the transposed Cartan matrix
    std::vector<std::vector<int>> At(n, std::vector<int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) At[i][j] = cartan[j][i];
    std::vector<std::vector<int>> all;
    for (size_t i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = -1;
        all.push_back(e);
    }
    for (auto& r : positive_roots(At)) all.push_back(r);
    std::vector<CorootRow> out;
    for (auto& b : all) {
        CorootRow r;
        r.root = b;
        for (size_t i = 0; i < n; ++i) r.row.push_back(source[i] ? b[i] : -b[i]);
        out.push_back(r);
    }
    return out;
}

// Checks that the quiver of the mutable block is bipartite and returns the source flags.
inline std::vector<bool> bipartite_sources(const ExchangeMatrix& B)
{
    std::vector<bool> src(B.m, false);
    for (size_t i = 0; i < B.m; ++i) {
        bool out = false, in = false;
        for (size_t j = 0; j < B.m; ++j) {
            if (B.b[i][j] > 0) out = true;
            if (B.b[i][j] < 0) in = true;
        }
        if (out && in) throw Error("orientation is not bipartite");
        src[i] = out;
    }
    return src;
}

// Incompatible pairs of mutable variables give the quadratic generators of the Stanley-Reisner ideal.
struct CompatibilityData {
    size_t nvars = 0;
    std::vector<std::vector<char>> compatible;
    std::vector<std::vector<size_t>> seeds;
};

inline CompatibilityData compatibility(size_t nvars, const std::vector<std::vector<size_t>>& seeds)
{
    CompatibilityData c;
    c.nvars = nvars;
    c.seeds = seeds;
    c.compatible.assign(nvars, std::vector<char>(nvars, 0));
    for (const auto& s : seeds)
        for (size_t a : s)
            for (size_t b : s) c.compatible[a][b] = 1;
    return c;
}

// Every clique of the compatibility graph must lie in a seed, otherwise a larger minimal non-face exists.
inline void assert_flag_complex(const CompatibilityData& c)
{
    std::vector<std::set<size_t>> faces;
    for (const auto& s : c.seeds) faces.emplace_back(s.begin(), s.end());
    std::vector<size_t> cur;
    std::function<void(size_t)> rec = [&](size_t start) {
        if (cur.size() >= 3) {
            bool in = false;
            for (const auto& f : faces) {
                bool all = true;
                for (size_t v : cur)
                    if (!f.count(v)) {
                        all = false;
                        break;
                    }
                if (all) {
                    in = true;
                    break;
                }
            }
            if (!in) throw Error("minimal non-face of size > 2 detected");
        }
        for (size_t v = start; v < c.nvars; ++v) {
            bool ok = true;
            for (size_t u : cur)
                if (!c.compatible[u][v]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

// var_to_ring maps each mutable cluster variable to a ring variable index.
inline Ideal cluster_complex_sr_ideal(const RingPtr& ring, const std::vector<size_t>& var_to_ring,
                                      const std::vector<std::vector<size_t>>& seeds)
{
    auto c = compatibility(var_to_ring.size(), seeds);
    assert_flag_complex(c);
    std::vector<Exp> gens;
    for (size_t a = 0; a < c.nvars; ++a)
        for (size_t b = a + 1; b < c.nvars; ++b)
            if (!c.compatible[a][b]) {
                Exp e(ring->nvars(), 0);
                e[var_to_ring[a]] += 1;
                e[var_to_ring[b]] += 1;
                gens.push_back(e);
            }
    std::vector<Polynomial> ps;
    for (auto& e : minimalize_monomials(gens)) ps.push_back(Polynomial::monomial(ring, e));
    return Ideal(ring, ps);
}

}  // namespace gdeg
