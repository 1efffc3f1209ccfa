#pragma once

#include "cluster.hpp"
#include "lifting.hpp"

#include <array>
#include <sstream>

namespace gdeg {

using Arc = std::pair<int, int>;  // 1 <= first < second <= n

inline Arc arc(int a, int b) { return a < b ? Arc{a, b} : Arc{b, a}; }

inline std::string arc_label(const Arc& a, int n)
{
    if (n < 10) return std::to_string(a.first) + std::to_string(a.second);
    return std::to_string(a.first) + "_" + std::to_string(a.second);
}

inline Arc parse_arc(const std::string& s, int n)
{
    auto us = s.find('_');
    int a, b;
    try {
        if (us != std::string::npos) {
            a = std::stoi(s.substr(0, us));
            b = std::stoi(s.substr(us + 1));
        } else {
            if (s.size() != 2) throw Error("");
            a = s[0] - '0';
            b = s[1] - '0';
        }
    } catch (...) {
        throw Error("cannot parse arc '" + s + "'");
    }
    if (a < 1 || b < 1 || a > n || b > n || a == b) throw Error("arc '" + s + "' out of range");
    return arc(a, b);
}

inline bool is_boundary(const Arc& a, int n) { return a.second == a.first + 1 || (a.first == 1 && a.second == n); }

// Strict interleaving of endpoints.
inline bool crossing(const Arc& x, const Arc& y)
{
    auto [i, j] = x;
    auto [k, l] = y;
    return (i < k && k < j && j < l) || (k < i && i < l && l < j);
}

// All pairs (i, j), i < j; this is also the variable order of the Pluecker ring.
inline std::vector<Arc> all_pairs(int n)
{
    std::vector<Arc> r;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) r.emplace_back(i, j);
    return r;
}

inline std::string pvar(const Arc& a, int n) { return "p" + arc_label(a, n); }
inline std::string tvar(const Arc& a, int n) { return "t" + arc_label(a, n); }

inline RingPtr plucker_ring(int n)
{
    std::vector<std::string> vs;
    for (const auto& a : all_pairs(n)) vs.push_back(pvar(a, n));
    return Ring::make(vs);
}

inline size_t pair_index(const Arc& a, int n)
{
    // position of (i, j) in all_pairs(n)
    size_t idx = 0;
    for (int i = 1; i < a.first; ++i) idx += n - i;
    return idx + (a.second - a.first - 1);
}

inline Polynomial pvariable(const RingPtr& r, const Arc& a, int n) { return Polynomial::variable(r, pair_index(a, n)); }

inline Polynomial plucker_relation(const RingPtr& r, int n, int i, int j, int k, int l)
{
    auto p = [&](int a, int b) { return pvariable(r, arc(a, b), n); };
    return p(i, j) * p(k, l) - p(i, k) * p(j, l) + p(i, l) * p(j, k);
}

inline Ideal plucker_ideal(int n)
{
    if (n < 4) {
        if (n < 2) return Ideal(Ring::make({"p"}), {});
        return Ideal(plucker_ring(n), {});
    }
    auto r = plucker_ring(n);
    std::vector<Polynomial> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) gens.push_back(plucker_relation(r, n, i, j, k, l));
    return Ideal(r, gens);
}

// Numeric Pluecker point of the matrix with columns (1, 2^i); distinct values, all positive.
inline Q plucker_value(const Arc& a)
{
    mpz_class x = 1, y = 1;
    x <<= a.second;
    y <<= a.first;
    return Q(x - y);
}

struct Triangulation {
    int n = 0;
    std::vector<Arc> diagonals;  // sorted

    Triangulation() = default;
    Triangulation(int n_, std::vector<Arc> d) : n(n_), diagonals(std::move(d))
    {
        for (auto& a : diagonals) a = arc(a.first, a.second);
        std::sort(diagonals.begin(), diagonals.end());
        validate();
    }
    void validate() const
    {
        if (n < 3) throw Error("polygon needs at least 3 vertices");
        if (diagonals.size() != static_cast<size_t>(n - 3)) throw Error("triangulation needs exactly n-3 diagonals");
        for (size_t x = 0; x < diagonals.size(); ++x) {
            const auto& a = diagonals[x];
            if (a.first < 1 || a.second > n || a.first == a.second || is_boundary(a, n))
                throw Error("'" + arc_label(a, n) + "' is not a diagonal");
            if (x && diagonals[x - 1] == a) throw Error("repeated diagonal");
            for (size_t y = 0; y < x; ++y)
                if (crossing(a, diagonals[y])) throw Error("crossing diagonals");
        }
    }
    std::vector<Arc> boundary() const
    {
        std::vector<Arc> b;
        for (int i = 1; i < n; ++i) b.emplace_back(i, i + 1);
        b.emplace_back(1, n);
        std::sort(b.begin(), b.end());
        return b;
    }
    // Diagonals then boundary edges; the coordinate order of g-vectors and the row order of the exchange matrix.
    std::vector<Arc> arcs() const
    {
        auto a = diagonals;
        for (auto& b : boundary()) a.push_back(b);
        return a;
    }
    bool has(const Arc& a) const
    {
        return is_boundary(a, n) || std::binary_search(diagonals.begin(), diagonals.end(), a);
    }
    size_t coord(const Arc& a) const
    {
        auto as = arcs();
        for (size_t i = 0; i < as.size(); ++i)
            if (as[i] == a) return i;
        throw Error("arc '" + arc_label(a, n) + "' not in triangulation");
    }
    bool operator==(const Triangulation& o) const { return n == o.n && diagonals == o.diagonals; }
    bool operator<(const Triangulation& o) const { return diagonals < o.diagonals; }
};

inline Triangulation parse_triangulation(int n, const std::string& csv)
{
    std::vector<Arc> d;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) d.push_back(parse_arc(tok, n));
    return Triangulation(n, d);
}

inline std::string triangulation_label(const Triangulation& T)
{
    std::string s;
    for (const auto& a : T.diagonals) s += (s.empty() ? "" : ",") + arc_label(a, T.n);
    return s;
}

namespace detail {
inline void triangulate(const std::vector<int>& v, std::vector<std::vector<Arc>>& out)
{
    size_t m = v.size();
    if (m < 3) {
        out.push_back({});
        return;
    }
    for (size_t k = 1; k + 1 < m; ++k) {
        std::vector<int> left(v.begin(), v.begin() + k + 1), right(v.begin() + k, v.end());
        std::vector<std::vector<Arc>> L, R;
        triangulate(left, L);
        triangulate(right, R);
        for (const auto& l : L)
            for (const auto& r : R) {
                auto d = l;
                d.insert(d.end(), r.begin(), r.end());
                if (k > 1) d.push_back(arc(v[0], v[k]));
                if (k + 2 < m) d.push_back(arc(v[k], v[m - 1]));
                out.push_back(d);
            }
    }
}
}  // namespace detail

inline std::vector<Triangulation> triangulations(int n)
{
    if (n < 3) throw Error("polygon needs at least 3 vertices");
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<std::vector<Arc>> raw;
    detail::triangulate(v, raw);
    std::vector<Triangulation> out;
    for (auto& d : raw) out.emplace_back(n, d);
    std::sort(out.begin(), out.end());
    return out;
}

struct Triangle {
    int x, y, z;  // x < y < z, clockwise
    std::array<Arc, 3> edges() const { return {Arc{x, y}, Arc{y, z}, Arc{x, z}}; }
};

inline std::vector<Triangle> triangles(const Triangulation& T)
{
    std::vector<Triangle> out;
    for (int x = 1; x <= T.n; ++x)
        for (int y = x + 1; y <= T.n; ++y) {
            if (!T.has({x, y})) continue;
            for (int z = y + 1; z <= T.n; ++z)
                if (T.has({y, z}) && T.has({x, z})) out.push_back({x, y, z});
        }
    if (out.size() != static_cast<size_t>(T.n - 2)) throw Error("internal: wrong triangle count");
    return out;
}

struct Quadrilateral {
    int a, b, c, d;  // a < b < c < d in cyclic relabelling where the diagonal is ac
};

// The quadrilateral around a diagonal, labelled so that the diagonal is (a, c).
inline Quadrilateral quadrilateral(const Triangulation& T, const Arc& diag)
{
    if (is_boundary(diag, T.n)) throw Error("cannot flip a boundary edge");
    if (!T.has(diag)) throw Error("'" + arc_label(diag, T.n) + "' is not in the triangulation");
    std::vector<int> apex;
    for (const auto& t : triangles(T)) {
        std::array<int, 3> v{t.x, t.y, t.z};
        bool a = false, c = false;
        for (int u : v) {
            if (u == diag.first) a = true;
            if (u == diag.second) c = true;
        }
        if (a && c)
            for (int u : v)
                if (u != diag.first && u != diag.second) apex.push_back(u);
    }
    if (apex.size() != 2) throw Error("internal: diagonal is not in two triangles");
    std::array<int, 4> q{diag.first, diag.second, apex[0], apex[1]};
    std::sort(q.begin(), q.end());
    if (Arc{q[0], q[2]} == diag) return {q[0], q[1], q[2], q[3]};
    return {q[1], q[2], q[3], q[0]};
}

inline Triangulation flip(const Triangulation& T, const Arc& diag)
{
    auto q = quadrilateral(T, diag);
    auto d = T.diagonals;
    for (auto& a : d)
        if (a == diag) a = arc(q.b, q.d);
    return Triangulation(T.n, d);
}

// Ice quiver: diagonals are mutable, boundary edges frozen; triangle x<y<z has xy -> yz -> zx -> xy.
inline IceQuiver quiver(const Triangulation& T)
{
    IceQuiver q;
    for (const auto& a : T.arcs()) q.vertices.push_back(arc_label(a, T.n));
    q.mutable_count = T.diagonals.size();
    for (const auto& t : triangles(T)) {
        auto e = t.edges();
        std::array<Arc, 3> cyc{e[0], e[1], e[2]};
        for (int s = 0; s < 3; ++s) {
            const Arc& from = cyc[s];
            const Arc& to = cyc[(s + 1) % 3];
            if (is_boundary(from, T.n) && is_boundary(to, T.n)) continue;
            q.arrows.emplace_back(arc_label(from, T.n), arc_label(to, T.n));
        }
    }
    return q;
}

inline ExchangeMatrix exchange_matrix(const Triangulation& T) { return quiver(T).matrix(); }

// Tree graphs dual to a triangulation. Internal vertices list their neighbours in clockwise order.
struct TreeGraph {
    std::vector<std::vector<size_t>> adj;
    std::vector<std::string> label;
    std::map<std::pair<size_t, size_t>, Arc> edge_arc;  // internal edges labelled by arcs of T
    std::map<std::string, size_t> leaf;

    std::vector<size_t> path(size_t from, size_t to) const
    {
        std::vector<size_t> prev(adj.size(), SIZE_MAX);
        std::deque<size_t> q{from};
        prev[from] = from;
        while (!q.empty()) {
            size_t u = q.front();
            q.pop_front();
            if (u == to) break;
            for (size_t v : adj[u])
                if (prev[v] == SIZE_MAX) {
                    prev[v] = u;
                    q.push_back(v);
                }
        }
        if (prev[to] == SIZE_MAX) throw Error("internal: tree is disconnected");
        std::vector<size_t> p{to};
        while (p.back() != from) p.push_back(prev[p.back()]);
        std::reverse(p.begin(), p.end());
        return p;
    }
    std::optional<Arc> arc_of(size_t u, size_t v) const
    {
        auto it = edge_arc.find({std::min(u, v), std::max(u, v)});
        if (it == edge_arc.end()) return std::nullopt;
        return it->second;
    }
};

// D_T: one internal vertex per triangle; leaf i hangs off the triangle with boundary edge (i-1, i).
inline TreeGraph dual_tree(const Triangulation& T)
{
    TreeGraph G;
    auto tris = triangles(T);
    size_t nt = tris.size();
    G.adj.resize(nt + T.n);
    for (size_t a = 0; a < nt; ++a) G.label.push_back(std::to_string(tris[a].x) + "," + std::to_string(tris[a].y) + "," + std::to_string(tris[a].z));
    for (int i = 1; i <= T.n; ++i) {
        G.label.push_back(std::to_string(i));
        G.leaf[std::to_string(i)] = nt + i - 1;
    }
    for (size_t a = 0; a < nt; ++a) {
        for (const auto& e : tris[a].edges()) {
            if (is_boundary(e, T.n)) {
                int leafv = (e.first == 1 && e.second == T.n) ? 1 : e.second;
                size_t l = nt + leafv - 1;
                G.adj[a].push_back(l);
                G.adj[l].push_back(a);
                G.edge_arc[{a, l}] = e;
            } else {
                for (size_t b = 0; b < nt; ++b) {
                    if (b == a) continue;
                    auto eb = tris[b].edges();
                    if (std::find(eb.begin(), eb.end(), e) != eb.end()) {
                        G.adj[a].push_back(b);
                        G.edge_arc[{std::min(a, b), std::max(a, b)}] = e;
                    }
                }
            }
        }
    }
    return G;
}

// The extended tree is dual to the triangulation of the 2n-gon 1',1,2',2,...,n',n (clockwise) that adds
// the triangle (i-1, i', i) on each boundary edge. Position of i' is 2i-2, of i is 2i-1.
inline TreeGraph extended_dual_tree(const Triangulation& T)
{
    int n = T.n, N = 2 * n;
    auto pos = [](int i) { return 2 * i - 1; };
    struct PTri {
        std::array<int, 3> v;  // sorted positions
    };
    std::vector<PTri> tris;
    for (const auto& t : triangles(T)) tris.push_back({{pos(t.x), pos(t.y), pos(t.z)}});
    for (int i = 1; i <= n; ++i) {
        int prev = i == 1 ? n : i - 1;
        std::array<int, 3> v{pos(prev), 2 * i - 2, pos(i)};
        std::sort(v.begin(), v.end());
        tris.push_back({v});
    }
    auto pos_to_label = [](int p) {
        return (p % 2 == 1) ? std::to_string((p + 1) / 2) : std::to_string(p / 2 + 1) + "'";
    };
    auto pos_arc = [&](int p, int q) -> std::optional<Arc> {
        if (p % 2 == 0 || q % 2 == 0) return std::nullopt;
        return arc((p + 1) / 2, (q + 1) / 2);
    };
    size_t nt = tris.size();
    TreeGraph G;
    G.adj.assign(nt, {});
    for (size_t a = 0; a < nt; ++a)
        G.label.push_back(pos_to_label(tris[a].v[0]) + "," + pos_to_label(tris[a].v[1]) + "," + pos_to_label(tris[a].v[2]));
    std::map<std::pair<int, int>, std::vector<size_t>> by_edge;
    for (size_t a = 0; a < nt; ++a) {
        auto& v = tris[a].v;
        by_edge[{v[0], v[1]}].push_back(a);
        by_edge[{v[1], v[2]}].push_back(a);
        by_edge[{v[0], v[2]}].push_back(a);
    }
    for (size_t a = 0; a < nt; ++a) {
        auto& v = tris[a].v;
        std::array<std::pair<int, int>, 3> cw{std::pair{v[0], v[1]}, std::pair{v[1], v[2]}, std::pair{v[0], v[2]}};
        for (const auto& e : cw) {
            const auto& owners = by_edge[e];
            bool outer = (e.second == e.first + 1) || (e.first == 0 && e.second == N - 1);
            if (outer) {
                size_t l = G.adj.size();
                G.adj.push_back({a});
                // boundary edge (i', i) is leaf i, edge (i-1, i') is leaf i'
                std::string lab = (e.first == 0 && e.second == N - 1) ? "1'" : pos_to_label(e.second);
                G.label.push_back(lab);
                G.leaf[lab] = l;
                G.adj[a].push_back(l);
            } else {
                size_t b = owners[0] == a ? owners[1] : owners[0];
                G.adj[a].push_back(b);
                auto ar = pos_arc(e.first, e.second);
                if (!ar) throw Error("internal: inner edge without arc label");
                G.edge_arc[{std::min(a, b), std::max(a, b)}] = *ar;
            }
        }
    }
    if (G.leaf.size() != static_cast<size_t>(N)) throw Error("internal: extended tree has the wrong leaves");
    return G;
}

// Tree weight: minus the number of edges between leaves i and j.
inline QVec tree_weight(const TreeGraph& G, int n)
{
    QVec w;
    for (const auto& a : all_pairs(n)) {
        auto p = G.path(G.leaf.at(std::to_string(a.first)), G.leaf.at(std::to_string(a.second)));
        w.push_back(-Q(static_cast<long>(p.size() - 1)));
    }
    return w;
}

inline QVec tree_weight(const Triangulation& T) { return tree_weight(dual_tree(T), T.n); }

// Orientation bit for the sign rule: true if moving to the clockwise-next edge is a right turn.
// The octagon g-vector table and g_ij = f_ij for ij in T both require false.
inline constexpr bool kClockwiseNextIsRight = false;

using GVector = std::vector<int>;  // indexed by T.arcs()

inline GVector comb_g_vector(const Triangulation& T, const TreeGraph& G, int i, int j)
{
    if (i < 1 || j > T.n || i >= j) throw Error("g-vector needs 1 <= i < j <= n");
    auto p = G.path(G.leaf.at(std::to_string(i)), G.leaf.at(std::to_string(j)));
    // turn[k] for internal vertex p[k], k = 1..size-2; true = right
    std::vector<int> turn(p.size(), 0);
    for (size_t k = 1; k + 1 < p.size(); ++k) {
        const auto& nb = G.adj[p[k]];
        size_t a = std::find(nb.begin(), nb.end(), p[k - 1]) - nb.begin();
        size_t b = std::find(nb.begin(), nb.end(), p[k + 1]) - nb.begin();
        bool cwnext = b == (a + 1) % 3;
        turn[k] = (cwnext == kClockwiseNextIsRight) ? 1 : -1;  // 1 right, -1 left
    }
    GVector g(2 * T.n - 3, 0);
    for (size_t k = 1; k + 2 < p.size(); ++k) {
        auto ar = G.arc_of(p[k], p[k + 1]);
        if (!ar) continue;
        int s = 0;
        if (turn[k] == -1 && turn[k + 1] == 1) s = 1;
        if (turn[k] == 1 && turn[k + 1] == -1) s = -1;
        g[T.coord(*ar)] += s;
    }
    return g;
}

inline GVector comb_g_vector(const Triangulation& T, int i, int j) { return comb_g_vector(T, extended_dual_tree(T), i, j); }

// g-vectors of all Pluecker coordinates, in all_pairs order.
inline std::vector<GVector> all_comb_g_vectors(const Triangulation& T)
{
    auto G = extended_dual_tree(T);
    std::vector<GVector> out;
    for (const auto& a : all_pairs(T.n)) out.push_back(comb_g_vector(T, G, a.first, a.second));
    return out;
}

inline std::vector<std::vector<Arc>> algorithm1_partition(const Triangulation& T)
{
    auto tris = triangles(T);
    std::vector<bool> alive(tris.size(), true);
    std::set<Arc> assigned;
    std::vector<std::vector<Arc>> blocks;
    auto any_alive = [&] { return std::find(alive.begin(), alive.end(), true) != alive.end(); };
    while (any_alive()) {
        std::map<Arc, int> count;
        for (size_t t = 0; t < tris.size(); ++t)
            if (alive[t])
                for (const auto& e : tris[t].edges()) count[e]++;
        std::set<Arc> has_out;
        for (size_t t = 0; t < tris.size(); ++t) {
            if (!alive[t]) continue;
            auto e = tris[t].edges();
            for (int s = 0; s < 3; ++s) {
                const Arc& from = e[s];
                const Arc& to = e[(s + 1) % 3];
                if (count[from] == 1 && count[to] == 1) continue;
                has_out.insert(from);
            }
        }
        std::vector<Arc> V;
        for (const auto& [e, c] : count)
            if (c == 1 && !has_out.count(e)) V.push_back(e);
        if (V.empty()) throw Error("internal: no frozen sink in a non-empty triangulation");
        for (size_t t = 0; t < tris.size(); ++t) {
            if (!alive[t]) continue;
            for (const auto& e : tris[t].edges())
                if (std::find(V.begin(), V.end(), e) != V.end()) alive[t] = false;
        }
        for (auto& e : V) assigned.insert(e);
        blocks.push_back(V);
    }
    std::vector<Arc> rest;
    for (const auto& a : T.arcs())
        if (!assigned.count(a)) rest.push_back(a);
    std::sort(rest.begin(), rest.end());
    if (!rest.empty()) blocks.push_back(rest);
    return blocks;
}

// Flattened partition: the coordinate sequence of a total order compatible with T.
inline std::vector<Arc> compatible_sequence(const Triangulation& T)
{
    std::vector<Arc> seq;
    for (const auto& b : algorithm1_partition(T)) seq.insert(seq.end(), b.begin(), b.end());
    return seq;
}

// Linear map v_T on Z^{2n-3}: f_ij -> index of the block containing ij.
inline std::vector<int> quadrilateral_map(const Triangulation& T)
{
    auto blocks = algorithm1_partition(T);
    std::vector<int> v(2 * T.n - 3, -1);
    for (size_t q = 0; q < blocks.size(); ++q)
        for (const auto& a : blocks[q]) v[T.coord(a)] = static_cast<int>(q);
    for (int x : v)
        if (x < 0) throw Error("internal: partition misses an arc");
    // in-arrows of each diagonal must outweigh its out-arrows
    auto B = exchange_matrix(T);
    for (size_t k = 0; k < B.m; ++k) {
        int in = 0, out = 0;
        for (size_t r = 0; r < B.rows(); ++r) {
            if (B.b[r][k] > 0) in += B.b[r][k] * v[r];
            if (B.b[r][k] < 0) out -= B.b[r][k] * v[r];
        }
        if (!(in > out))
            throw Error("internal: quadrilateral inequality fails at " + arc_label(T.diagonals[k], T.n));
    }
    return v;
}

inline Q apply_linear(const std::vector<int>& v, const GVector& g)
{
    long s = 0;
    for (size_t i = 0; i < g.size(); ++i) s += static_cast<long>(v[i]) * g[i];
    return Q(s);
}

inline QVec weight_vector_wT(const Triangulation& T)
{
    auto v = quadrilateral_map(T);
    QVec w;
    for (const auto& g : all_comb_g_vectors(T)) w.push_back(apply_linear(v, g));
    return w;
}

inline QVec u_weight(int n)
{
    QVec u;
    for (const auto& a : all_pairs(n)) {
        Q x = Q(a.second - a.first) - frac(n, 2);
        u.push_back(-(x * x));
    }
    return u;
}

inline Ideal crossing_ideal(int n)
{
    auto r = plucker_ring(n);
    std::vector<Polynomial> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) gens.push_back(pvariable(r, {i, k}, n) * pvariable(r, {j, l}, n));
    return Ideal(r, gens);
}

// 1 if x lies in the cyclic interval [a, b] of Z/n.
inline bool in_cyclic(int x, int a, int b, int n)
{
    auto norm = [n](int v) { return ((v - 1) % n + n) % n; };
    int len = norm(b) - norm(a);
    if (len < 0) len += n;
    int off = norm(x) - norm(a);
    if (off < 0) off += n;
    return off <= len;
}

inline std::vector<Arc> all_diagonals(int n)
{
    std::vector<Arc> d;
    for (const auto& a : all_pairs(n))
        if (!is_boundary(a, n)) d.push_back(a);
    return d;
}

// Rows 1/2 r_ij for the diagonals; (r_ij)_kl = -1 when exactly one of k, l lies in [i+1, j].
inline RayMatrix rays_C(int n)
{
    std::vector<QVec> rows;
    std::vector<std::string> names;
    for (const auto& d : all_diagonals(n)) {
        QVec r;
        for (const auto& kl : all_pairs(n)) {
            bool a = kl.first >= d.first + 1 && kl.first <= d.second;
            bool b = kl.second >= d.first + 1 && kl.second <= d.second;
            r.push_back(a != b ? Q(-1, 2) : Q(0));
        }
        rows.push_back(r);
        names.push_back(tvar(d, n));
    }
    return RayMatrix(rows, names);
}

// The order compatible with the cone whose initial ideal is the crossing ideal.
inline OrderSpec c_order(int n)
{
    auto R = rays_C(n);
    QVec d(n * (n - 1) / 2, Q(1));
    return OrderSpec::refined(d, R.row_sum(), OrderSpec::lex(d.size()));
}

inline GroebnerBasis plucker_gb(int n, const GbOptions& opt = {})
{
    return groebner_basis(plucker_ideal(n), c_order(n), opt);
}

inline LiftedIdeal lifted_plucker(int n, const GbOptions& opt = {})
{
    return lifted_ideal(plucker_gb(n, opt), rays_C(n));
}

// Products over a in [p, q], b in [r, s] (cyclic) of t_ab; every such pair is a diagonal.
inline Exp t_product_exp(const LiftedIdeal& L, int n, int p, int q, int r, int s)
{
    Exp e(L.ext->nvars(), 0);
    for (int a = 1; a <= n; ++a) {
        if (!in_cyclic(a, p, q, n)) continue;
        for (int b = 1; b <= n; ++b) {
            if (!in_cyclic(b, r, s, n)) continue;
            Arc d = arc(a, b);
            if (is_boundary(d, n) || a == b) throw Error("internal: boundary edge in lifted product");
            e[L.ext->at(tvar(d, n))] += 1;
        }
    }
    return e;
}

inline Polynomial lifted_relation_closed_form(const LiftedIdeal& L, int n, int i, int j, int k, int l)
{
    const auto& R = L.ext;
    auto p = [&](int a, int b) { return Polynomial::variable(R, pvar(arc(a, b), n)); };
    auto m1 = Polynomial::monomial(R, t_product_exp(L, n, i, j - 1, k, l - 1));
    auto m2 = Polynomial::monomial(R, t_product_exp(L, n, j, k - 1, l, i - 1));
    return -(p(i, k) * p(j, l)) + p(i, l) * p(j, k) * m1 + p(i, j) * p(k, l) * m2;
}

struct CheckReport {
    bool ok = true;
    std::string failure;
    void fail(const std::string& s)
    {
        if (ok) failure = s;
        ok = false;
    }
};

inline std::string quad_label(int i, int j, int k, int l)
{
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) + ")";
}

// Lifted generators against the closed form, and the universal coefficients of every exchange relation
// against the sign rule for the reflected triangulation.
inline CheckReport universal_coefficient_check(int n, const GbOptions& opt = {})
{
    CheckReport rep;
    auto L = lifted_plucker(n, opt);
    std::set<std::string> lifted;
    for (const auto& g : L.generators) lifted.insert(make_monic(g, L.order).str());
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    auto cf = make_monic(lifted_relation_closed_form(L, n, i, j, k, l), L.order);
                    if (!lifted.count(cf.str())) rep.fail("lift mismatch at " + quad_label(i, j, k, l));
                }
    auto sign = [n](const Arc& ab, int i, int j, int k, int l) {
        auto in2 = [&](int p, int q, int r, int s) {
            return (in_cyclic(ab.first, p, q, n) && in_cyclic(ab.second, r, s, n)) ||
                   (in_cyclic(ab.second, p, q, n) && in_cyclic(ab.first, r, s, n));
        };
        if (in2(i, j - 1, k, l - 1)) return 1;
        if (in2(j, k - 1, l, i - 1)) return -1;
        return 0;
    };
    for (const auto& T : triangulations(n)) {
        auto B = exchange_matrix(T);
        auto Bu = build_B_univ(B);
        // rows of U predicted by the sign rule, one per diagonal ab
        std::vector<std::vector<int>> predicted;
        for (const auto& ab : all_diagonals(n)) {
            std::vector<int> row;
            for (const auto& ik : T.diagonals) {
                auto q = quadrilateral(T, ik);
                row.push_back(sign(ab, q.a, q.b, q.c, q.d));
            }
            predicted.push_back(row);
        }
        std::vector<std::vector<int>> U(Bu.b.begin() + B.rows(), Bu.b.end());
        std::sort(predicted.begin(), predicted.end());
        if (predicted != U) rep.fail("coefficient rows differ from the sign rule for T = {" + triangulation_label(T) + "}");
        // exchange binomials of x_T with y_ab = t_ab agree with the lifted relation
        auto arcs = T.arcs();
        for (size_t c = 0; c < T.diagonals.size(); ++c) {
            auto q = quadrilateral(T, T.diagonals[c]);
            int i = q.a, j = q.b, k = q.c, l = q.d;
            std::array<int, 4> s{i, j, k, l};
            std::sort(s.begin(), s.end());
            // positive column entries are the in-arrows
            std::set<Arc> plus, minus;
            for (size_t r = 0; r < B.rows(); ++r) {
                if (B.b[r][c] > 0) plus.insert(arcs[r]);
                if (B.b[r][c] < 0) minus.insert(arcs[r]);
            }
            std::set<Arc> il_jk{arc(i, l), arc(j, k)}, ij_kl{arc(i, j), arc(k, l)};
            if (!((plus == il_jk && minus == ij_kl) || (plus == ij_kl && minus == il_jk)))
                rep.fail("exchange relation shape at " + quad_label(s[0], s[1], s[2], s[3]));
            std::set<Arc> ypos, yneg;
            for (const auto& ab : all_diagonals(n)) {
                int sg = sign(ab, i, j, k, l);
                if (sg > 0) ypos.insert(ab);
                if (sg < 0) yneg.insert(ab);
            }
            Exp e1 = t_product_exp(L, n, i, j - 1, k, l - 1), e2 = t_product_exp(L, n, j, k - 1, l, i - 1);
            std::set<Arc> t1, t2;
            for (const auto& ab : all_diagonals(n)) {
                if (e1[L.ext->at(tvar(ab, n))]) t1.insert(ab);
                if (e2[L.ext->at(tvar(ab, n))]) t2.insert(ab);
            }
            if (t1 != ypos || t2 != yneg) rep.fail("coefficient monomials at " + quad_label(s[0], s[1], s[2], s[3]));
        }
    }
    return rep;
}

// Exactly two of the three g-vector sums of each Pluecker relation agree, and the crossing term is one of them.
inline CheckReport g_relation_check(const Triangulation& T)
{
    CheckReport rep;
    auto gs = all_comb_g_vectors(T);
    int n = T.n;
    auto g = [&](int a, int b) -> const GVector& { return gs[pair_index(arc(a, b), n)]; };
    auto sum = [](const GVector& x, const GVector& y) {
        GVector s(x.size());
        for (size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
        return s;
    };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    auto s1 = sum(g(i, j), g(k, l)), s2 = sum(g(i, k), g(j, l)), s3 = sum(g(i, l), g(j, k));
                    int eq = (s1 == s2) + (s2 == s3) + (s1 == s3);
                    if (eq != 1 || s1 == s3) rep.fail("g-vector sums at " + quad_label(i, j, k, l));
                }
    return rep;
}

// min over the compatible order: a precedes b when the first differing coordinate is larger in a.
inline GVector g_valuation(const Polynomial& f, const Triangulation& T, const GroebnerBasis& gbC)
{
    if (f.is_zero()) throw Error("valuation of zero");
    auto nf = normal_form(f, gbC);
    if (nf.is_zero()) throw Error("valuation of zero");
    auto gs = all_comb_g_vectors(T);
    auto seq = compatible_sequence(T);
    std::vector<size_t> cols;
    for (const auto& a : seq) cols.push_back(T.coord(a));
    std::optional<GVector> best;
    std::vector<int> best_key;
    std::map<std::pair<int, std::vector<int>>, int> seen;
    for (const auto& t : nf.terms()) {
        GVector g(2 * T.n - 3, 0);
        for (size_t v = 0; v < t.first.size(); ++v)
            for (size_t c = 0; c < g.size(); ++c) g[c] += t.first[v] * gs[v][c];
        std::vector<int> key;
        for (size_t c : cols) key.push_back(g[c]);
        if (!seen.emplace(std::pair{total_degree(t.first), key}, 1).second)
            throw Error("internal: two standard monomials share a g-vector");
        if (!best || key > best_key) {
            best = g;
            best_key = key;
        }
    }
    return *best;
}

inline GVector standard_monomial_g(const Exp& e, const Triangulation& T)
{
    auto gs = all_comb_g_vectors(T);
    GVector g(2 * T.n - 3, 0);
    for (size_t v = 0; v < e.size(); ++v)
        for (size_t c = 0; c < g.size(); ++c) g[c] += e[v] * gs[v][c];
    return g;
}

// Vertex list: the distinct g-vectors of Pluecker coordinates.
inline std::vector<GVector> newton_okounkov(const Triangulation& T)
{
    auto gs = all_comb_g_vectors(T);
    std::sort(gs.begin(), gs.end());
    gs.erase(std::unique(gs.begin(), gs.end()), gs.end());
    return gs;
}

struct FlipData {
    Arc removed, added;
    Quadrilateral q;  // removed = (a, c), added = (b, d)
};

inline FlipData flip_data(const Triangulation& T1, const Triangulation& T2)
{
    if (T1.n != T2.n) throw Error("triangulations of different polygons");
    std::vector<Arc> only1, only2;
    std::set_difference(T1.diagonals.begin(), T1.diagonals.end(), T2.diagonals.begin(), T2.diagonals.end(), std::back_inserter(only1));
    std::set_difference(T2.diagonals.begin(), T2.diagonals.end(), T1.diagonals.begin(), T1.diagonals.end(), std::back_inserter(only2));
    if (only1.size() != 1 || only2.size() != 1) throw Error("triangulations are not related by a flip");
    auto q = quadrilateral(T1, only1[0]);
    if (arc(q.b, q.d) != only2[0]) throw Error("triangulations are not related by a flip");
    return {only1[0], only2[0], q};
}

inline GVector shear_zeta(const Triangulation& T1, const FlipData& F, const GVector& m)
{
    int mac = m[T1.coord(F.removed)];
    if (mac <= 0) return m;
    auto r = m;
    const auto& q = F.q;
    r[T1.coord(arc(q.a, q.b))] -= mac;
    r[T1.coord(arc(q.c, q.d))] -= mac;
    r[T1.coord(arc(q.a, q.d))] += mac;
    r[T1.coord(arc(q.b, q.c))] += mac;
    return r;
}

// Rewrites coordinates in the basis of T2, where f'_bd = -f_ac + f_ab + f_cd.
inline GVector base_change_mu(const Triangulation& T1, const Triangulation& T2, const FlipData& F, const GVector& m)
{
    GVector r(m.size(), 0);
    for (const auto& a : T1.arcs()) {
        if (a == F.removed) continue;
        r[T2.coord(a)] += m[T1.coord(a)];
    }
    int mac = m[T1.coord(F.removed)];
    const auto& q = F.q;
    r[T2.coord(F.added)] -= mac;
    r[T2.coord(arc(q.a, q.b))] += mac;
    r[T2.coord(arc(q.c, q.d))] += mac;
    return r;
}

struct NobodyReport {
    std::vector<GVector> vertices1, vertices2, mapped;
    CheckReport check;
};

inline NobodyReport nobody_check(const Triangulation& T1, const Triangulation& T2)
{
    auto F = flip_data(T1, T2);
    NobodyReport rep;
    auto g1 = all_comb_g_vectors(T1), g2 = all_comb_g_vectors(T2);
    auto pairs = all_pairs(T1.n);
    for (size_t p = 0; p < pairs.size(); ++p) {
        auto m = base_change_mu(T1, T2, F, shear_zeta(T1, F, g1[p]));
        rep.mapped.push_back(m);
        if (m != g2[p]) rep.check.fail("p" + arc_label(pairs[p], T1.n) + " maps to the wrong g-vector");
    }
    rep.vertices1 = newton_okounkov(T1);
    rep.vertices2 = newton_okounkov(T2);
    std::sort(rep.mapped.begin(), rep.mapped.end());
    rep.mapped.erase(std::unique(rep.mapped.begin(), rep.mapped.end()), rep.mapped.end());
    return rep;
}

// Principal-coefficient Laurent seed for T together with the p_ij matching each cluster variable.
struct SeedIdentification {
    LaurentSetup setup;
    ExchangeGraph<Polynomial> graph;
    std::vector<Arc> variable_arc;  // per graph variable
};

inline SeedIdentification identify_cluster_variables(const Triangulation& T)
{
    SeedIdentification S;
    auto B = exchange_matrix(T);
    std::vector<std::string> names;
    auto arcs = T.arcs();
    for (const auto& a : arcs) names.push_back("x" + arc_label(a, T.n));
    S.setup = principal_seed(B, names);
    S.graph = exchange_graph(S.setup.seed, 100000);
    std::vector<Q> point;
    for (const auto& a : arcs) point.push_back(plucker_value(a));
    point.resize(S.setup.ring->nvars(), Q(1));
    std::map<Q, Arc> by_value;
    for (const auto& a : all_pairs(T.n)) by_value[plucker_value(a)] = a;
    for (const auto& v : S.graph.variables) {
        Q x = evaluate(v, point);
        auto it = by_value.find(x);
        if (it == by_value.end()) throw Error("cluster variable does not match a Pluecker coordinate");
        S.variable_arc.push_back(it->second);
    }
    return S;
}

}  // namespace gdeg
