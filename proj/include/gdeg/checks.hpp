#pragma once

// Whole-family checks for Gr(2,n) shared by the CLI, the tests and the acceptance runner.

#include "gr2n.hpp"
#include "io.hpp"

#include <random>

namespace gdeg {

inline QVec unit_grading(int n) { return QVec(n * (n - 1) / 2, Q(1)); }

// init_w(I_{2,n}) through a reduced basis for an order refined from w.
inline Ideal plucker_initial_ideal(int n, const QVec& w)
{
    auto d = unit_grading(n);
    auto gb = groebner_basis(plucker_ideal(n), OrderSpec::refined(d, w, OrderSpec::lex(d.size())));
    return initial_ideal(gb, w);
}

inline std::vector<std::vector<long>> g_vector_matrix(const Triangulation& T)
{
    auto gs = all_comb_g_vectors(T);
    std::vector<std::vector<long>> A(2 * T.n - 3, std::vector<long>(gs.size()));
    for (size_t c = 0; c < gs.size(); ++c)
        for (size_t i = 0; i < A.size(); ++i) A[i][c] = gs[c][i];
    return A;
}

struct ToricCheck {
    size_t triangulations = 0;
    CheckReport check;
};

// For every T: w_T lies in the closed cone C, init_{w_T} is binomial with C(n,4) generators, agrees with
// the tree-weight initial ideal and, when asked, with the toric ideal of the g-vectors.
inline ToricCheck toric_weight_check(int n, bool toric_oracle)
{
    ToricCheck r;
    auto gbC = plucker_gb(n);
    auto cmp = OrderSpec::grevlex(n * (n - 1) / 2);
    size_t quads = static_cast<size_t>(n) * (n - 1) * (n - 2) * (n - 3) / 24;
    auto ts = triangulations(n);
    r.triangulations = ts.size();
    std::vector<std::string> fails(ts.size());
    parallel_for(ts.size(), default_threads(), [&](size_t i) {
        const auto& T = ts[i];
        auto lab = "T = {" + triangulation_label(T) + "}: ";
        auto wT = weight_vector_wT(T);
        if (cone_membership(gbC, wT) == ConeClass::Outside) {
            fails[i] = lab + "w_T outside C";
            return;
        }
        auto in = initial_ideal(gbC, wT);
        if (in.gens.size() != quads) fails[i] = lab + "wrong number of generators";
        for (const auto& g : in.gens)
            if (g.size() != 2) fails[i] = lab + "non-binomial generator " + g.str();
        if (!fails[i].empty()) return;
        if (!ideals_equal(in, plucker_initial_ideal(n, tree_weight(T)), cmp))
            fails[i] = lab + "differs from the tree-weight initial ideal";
        else if (toric_oracle && !ideals_equal(in, toric_ideal_of_matrix(g_vector_matrix(T), gbC.ideal.ring, cmp), cmp))
            fails[i] = lab + "differs from the toric ideal of the g-vectors";
    });
    for (const auto& f : fails)
        if (!f.empty()) r.check.fail(f);
    return r;
}

// The crossing ideal is the initial ideal at -u in the min convention (the crossing terms carry the largest u).
inline CheckReport crossing_ideal_check(int n)
{
    CheckReport r;
    QVec mu = u_weight(n);
    for (auto& x : mu) x = -x;
    auto in = plucker_initial_ideal(n, mu);
    for (const auto& g : in.gens)
        if (g.size() != 1) r.fail("n = " + std::to_string(n) + ": init is not monomial");
    if (r.ok && !ideals_equal(in, crossing_ideal(n), OrderSpec::grevlex(mu.size())))
        r.fail("n = " + std::to_string(n) + ": init differs from M_{2,n}");
    return r;
}

// u for n = 8: boundary -9, diagonals of gap 4 / 3 / 2 get 0 / -1 / -4.
inline CheckReport u_weight_example()
{
    CheckReport r;
    auto u = u_weight(8);
    auto ps = all_pairs(8);
    for (size_t i = 0; i < ps.size(); ++i) {
        int gap = ps[i].second - ps[i].first;
        gap = std::min(gap, 8 - gap);
        Q want = gap == 1 ? Q(-9) : gap == 4 ? Q(0) : gap == 3 ? Q(-1) : Q(-4);
        if (u[i] != want) r.fail("u(p" + arc_label(ps[i], 8) + ") = " + u[i].get_str());
    }
    return r;
}

struct NobodySweep {
    size_t flips = 0;
    CheckReport check;
};

inline NobodySweep nobody_sweep(int n)
{
    NobodySweep s;
    for (const auto& T1 : triangulations(n))
        for (const auto& ac : T1.diagonals) {
            auto T2 = flip(T1, ac);
            auto rep = nobody_check(T1, T2);
            ++s.flips;
            if (!rep.check.ok)
                s.check.fail("{" + triangulation_label(T1) + "} -> {" + triangulation_label(T2) + "}: " + rep.check.failure);
        }
    return s;
}

struct OctagonCheck {
    CheckReport g_vectors;
    CheckReport partition;
    std::vector<std::string> mismatched;  // Pluecker labels whose printed vector differs
    size_t compared = 0;
};

inline OctagonCheck octagon_check(const json& oct)
{
    OctagonCheck r;
    int n = oct.at("n").get<int>();
    std::vector<Arc> ds;
    for (const auto& x : oct.at("diagonals")) ds.push_back(parse_arc(x.get<std::string>(), n));
    Triangulation T(n, ds);
    for (const auto& a : T.arcs()) {
        GVector e(2 * n - 3, 0);
        e[T.coord(a)] = 1;
        if (comb_g_vector(T, a.first, a.second) != e) r.g_vectors.fail("g_" + arc_label(a, n) + " is not a unit vector");
    }
    for (const auto& [k, v] : oct.at("g_vectors").items()) {
        auto a = parse_arc(k, n);
        GVector e(2 * n - 3, 0);
        for (const auto& [c, x] : v.items()) e[T.coord(parse_arc(c, n))] = x.get<int>();
        ++r.compared;
        if (comb_g_vector(T, a.first, a.second) != e) {
            r.mismatched.push_back(k);
            r.g_vectors.fail("g_" + k + " differs from the printed vector");
        }
    }
    auto blocks = algorithm1_partition(T);
    const auto& want = oct.at("partition");
    if (blocks.size() != want.size()) r.partition.fail("wrong number of blocks");
    for (size_t b = 0; b < std::min(blocks.size(), want.size()); ++b) {
        std::set<Arc> got(blocks[b].begin(), blocks[b].end()), exp;
        for (const auto& x : want[b]) exp.insert(parse_arc(x.get<std::string>(), n));
        if (got != exp) r.partition.fail("block V" + std::to_string(b) + " differs");
    }
    return r;
}

// Laurent g-vectors with principal coefficients against the combinatorial ones.
inline CheckReport cross_oracle_check(int n)
{
    CheckReport r;
    for (const auto& T : triangulations(n)) {
        auto S = identify_cluster_variables(T);
        if (S.graph.variables.size() != static_cast<size_t>(n * (n - 3) / 2))
            r.fail("T = {" + triangulation_label(T) + "}: wrong number of cluster variables");
        for (size_t v = 0; v < S.graph.variables.size(); ++v) {
            auto g = g_vector(S.graph.variables[v], S.setup.coefficient_vars, S.setup.cluster_rows);
            const auto& a = S.variable_arc[v];
            if (g != comb_g_vector(T, a.first, a.second))
                r.fail("T = {" + triangulation_label(T) + "}: g-vector of p" + arc_label(a, n) + " differs");
        }
    }
    return r;
}

// The printed pentagon matrix: B must agree entrywise, U up to a permutation of its rows.
inline CheckReport pentagon_buniv_check(const json& fx)
{
    CheckReport r;
    int n = fx.at("n").get<int>();
    std::vector<Arc> ds;
    for (const auto& x : fx.at("diagonals")) ds.push_back(parse_arc(x.get<std::string>(), n));
    Triangulation T(n, ds);
    auto Bu = build_B_univ(exchange_matrix(T));
    std::vector<size_t> rows, cols;
    for (const auto& x : fx.at("row_labels")) rows.push_back(T.coord(parse_arc(x.get<std::string>(), n)));
    for (const auto& x : fx.at("diagonals")) cols.push_back(T.coord(parse_arc(x.get<std::string>(), n)));
    auto B = fx.at("B").get<std::vector<std::vector<int>>>();
    for (size_t i = 0; i < B.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            if (Bu.b[rows[i]][cols[j]] != B[i][j]) r.fail("B entry (" + std::to_string(i) + "," + std::to_string(j) + ") differs");
    auto U = fx.at("U").get<std::vector<std::vector<int>>>();
    std::vector<std::vector<int>> ours;
    for (size_t i = 2 * n - 3; i < Bu.rows(); ++i) {
        std::vector<int> row;
        for (size_t c : cols) row.push_back(Bu.b[i][c]);
        ours.push_back(row);
    }
    std::sort(U.begin(), U.end());
    std::sort(ours.begin(), ours.end());
    if (U != ours) r.fail("U rows differ up to permutation");
    return r;
}

inline CheckReport gr25_lifts_check(const std::vector<std::string>& printed)
{
    CheckReport r;
    auto L = lifted_plucker(5);
    std::set<std::string> ours, want;
    for (const auto& g : L.generators) ours.insert(g.str());
    for (const auto& s : printed) want.insert(parse_polynomial(L.ext, s).str());
    if (ours.size() != 5) r.fail("expected five lifted generators");
    for (const auto& s : want)
        if (!ours.count(s)) r.fail("printed lift not reproduced: " + s);
    for (const auto& s : ours)
        if (!want.count(s)) r.fail("computed lift not printed: " + s);
    return r;
}

struct FlatnessSweep {
    FlatnessReport report;
    size_t points = 0;
};

// t = 1, every face point, and `per_pattern` random nonzero points for each zero pattern.
inline std::vector<std::vector<Q>> flatness_points(size_t m, size_t per_pattern, uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(1, 9), den(1, 5), sgn(0, 1);
    std::vector<std::vector<Q>> pts;
    pts.emplace_back(m, Q(1));
    for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
        std::vector<size_t> S;
        for (size_t k = 0; k < m; ++k)
            if (mask >> k & 1) S.push_back(k);
        pts.push_back(face_point(S, m));
        for (size_t r = 0; r < per_pattern; ++r) {
            std::vector<Q> a(m);
            for (size_t k = 0; k < m; ++k) {
                if (mask >> k & 1) continue;
                a[k] = frac(num(rng) * (sgn(rng) ? 1 : -1), den(rng));
            }
            pts.push_back(a);
        }
    }
    return pts;
}

inline FlatnessSweep flatness_sweep(int n, int max_degree, size_t per_pattern = 3, uint64_t seed = 1)
{
    FlatnessSweep s;
    auto L = lifted_plucker(n);
    auto pts = flatness_points(L.m(), per_pattern, seed);
    s.points = pts.size();
    s.report = flatness_certificate(L, Q(max_degree), pts);
    return s;
}

}  // namespace gdeg
