#pragma once

#include "groebner.hpp"

namespace gdeg {

struct RayMatrix {
    std::vector<QVec> rows;
    std::vector<std::string> names;  // names of the t variables, one per row

    RayMatrix() = default;
    explicit RayMatrix(std::vector<QVec> r, std::vector<std::string> nm = {}) : rows(std::move(r)), names(std::move(nm))
    {
        if (names.empty())
            for (size_t i = 0; i < rows.size(); ++i) names.push_back("t" + std::to_string(i + 1));
        if (names.size() != rows.size()) throw Error("ray names do not match ray count");
    }
    size_t m() const { return rows.size(); }

    QVec row_sum() const
    {
        if (rows.empty()) return {};
        QVec s(rows[0].size(), Q(0));
        for (const auto& r : rows)
            for (size_t i = 0; i < s.size(); ++i) s[i] += r[i];
        return s;
    }
    QVec combination(const std::vector<Q>& c) const
    {
        QVec s(rows.at(0).size(), Q(0));
        for (size_t k = 0; k < rows.size(); ++k)
            for (size_t i = 0; i < s.size(); ++i) s[i] += c[k] * rows[k][i];
        return s;
    }
    QVec sum_of(const std::vector<size_t>& idx) const
    {
        QVec s(rows.at(0).size(), Q(0));
        for (size_t k : idx)
            for (size_t i = 0; i < s.size(); ++i) s[i] += rows.at(k)[i];
        return s;
    }
};

inline RingPtr lifted_ring(const RingPtr& base, const RayMatrix& R)
{
    std::vector<std::string> vs = base->vars();
    QVec d = base->d();
    for (const auto& t : R.names) {
        if (base->index(t) >= 0) throw Error("t variable '" + t + "' clashes with a ring variable");
        vs.push_back(t);
        d.push_back(Q(0));
    }
    return Ring::make(vs, d);
}

inline QVec mu_vector(const Polynomial& f, const RayMatrix& R)
{
    if (f.is_zero()) throw Error("mu vector of zero");
    QVec mu;
    for (const auto& r : R.rows) {
        if (r.size() != f.ring()->nvars()) throw Error("ray length does not match ring");
        Q m = dot(r, f.terms()[0].first);
        for (const auto& t : f.terms()) m = std::min(m, dot(r, t.first));
        mu.push_back(m);
    }
    return mu;
}

inline Polynomial lift_polynomial(const Polynomial& f, const RayMatrix& R, const RingPtr& ext)
{
    if (f.is_zero()) return Polynomial(ext);
    size_t n = f.ring()->nvars();
    if (ext->nvars() != n + R.m()) throw Error("lifted ring has the wrong size");
    QVec mu = mu_vector(f, R);
    std::vector<Term> ts;
    for (const auto& t : f.terms()) {
        Exp e(n + R.m(), 0);
        for (size_t i = 0; i < n; ++i) e[i] = t.first[i];
        for (size_t k = 0; k < R.m(); ++k) {
            Q x = dot(R.rows[k], t.first) - mu[k];
            if (x.get_den() != 1) throw Error("ray scaling incompatible with f");
            e[n + k] = static_cast<int>(x.get_num().get_si());
        }
        ts.emplace_back(std::move(e), t.second);
    }
    return Polynomial::from_terms(ext, std::move(ts));
}

inline Polynomial lift_polynomial(const Polynomial& f, const RayMatrix& R)
{
    return lift_polynomial(f, R, lifted_ring(f.ring(), R));
}

// x-part compared by the base order, ties broken lexicographically on t.
inline OrderSpec extended_order(const OrderSpec& base, size_t m)
{
    if (base.tiebreak != Tiebreak::Lex) throw Error("extended order needs a lexicographic tiebreak on the base order");
    size_t n = base.perm.size();
    OrderSpec o;
    for (const auto& r : base.weight_rows) {
        QVec rr = r;
        rr.resize(n + m, Q(0));
        o.weight_rows.push_back(rr);
    }
    o.tiebreak = Tiebreak::Lex;
    o.perm = base.perm;
    for (size_t k = 0; k < m; ++k) o.perm.push_back(n + k);
    return o;
}

struct LiftedIdeal {
    RingPtr base;
    RingPtr ext;
    std::vector<Polynomial> generators;
    RayMatrix rays;
    QVec w_prime;
    OrderSpec base_order;
    OrderSpec order;  // the extended order on ext
    std::vector<Polynomial> base_gb;

    size_t m() const { return rays.m(); }
    size_t n() const { return base->nvars(); }
};

inline LiftedIdeal lifted_ideal(const GroebnerBasis& gb, const RayMatrix& R)
{
    if (!gb.reduced) throw Error("lifted ideal needs a reduced basis");
    LiftedIdeal L;
    L.base = gb.ideal.ring;
    L.ext = lifted_ring(L.base, R);
    L.rays = R;
    L.base_order = gb.order;
    L.order = extended_order(gb.order, R.m());
    L.base_gb = gb.elements;
    for (const auto& g : gb.elements) L.generators.push_back(lift_polynomial(g, R, L.ext));
    QVec w = R.row_sum();
    L.w_prime.assign(R.m(), Q(-1));
    L.w_prime.insert(L.w_prime.begin(), w.begin(), w.end());
    // w' is stored in ring order: x part first, then -1 on each t
    return L;
}

inline LiftedIdeal lifted_ideal(const Ideal& I, const OrderSpec& o, const RayMatrix& R, const GbOptions& opt = {})
{
    return lifted_ideal(groebner_basis(I, o, opt), R);
}

inline bool ray_invariance_check(const std::vector<Polynomial>& G, const RayMatrix& R, const RayMatrix& R2)
{
    if (R.m() != R2.m()) return false;
    for (const auto& g : G) {
        auto ext = lifted_ring(g.ring(), R);
        if (lift_polynomial(g, R, ext) != lift_polynomial(g, R2, ext)) return false;
    }
    return true;
}

// Weight (w, -c) on (x, t) ring order; every lifted generator must be homogeneous for it.
inline QVec homogeneity_weight(const LiftedIdeal& L, const std::vector<Q>& c)
{
    QVec v = L.rays.combination(c);
    for (size_t k = 0; k < L.m(); ++k) v.push_back(-c[k]);
    return v;
}

inline Assignment t_assignment(const LiftedIdeal& L, const std::vector<Q>& a)
{
    if (a.size() != L.m()) throw Error("fiber point has the wrong length");
    Assignment as;
    for (size_t k = 0; k < L.m(); ++k) as.values[L.rays.names[k]] = a[k];
    return as;
}

inline Ideal fiber(const LiftedIdeal& L, const std::vector<Q>& a)
{
    auto as = t_assignment(L, a);
    std::vector<Polynomial> gens;
    for (const auto& g : L.generators) gens.push_back(specialize(g, as, L.base));
    return Ideal(L.base, gens);
}

inline std::vector<Q> face_point(const std::vector<size_t>& S, size_t m)
{
    std::vector<Q> a(m, Q(1));
    for (size_t k : S) {
        if (k >= m) throw Error("face index out of range");
        a[k] = 0;
    }
    return a;
}

struct OneParamFamily {
    RingPtr ring;  // base ring plus a single t
    std::vector<Polynomial> generators;
};

inline OneParamFamily one_param_family(const GroebnerBasis& gb, const QVec& w, const std::string& tname = "t")
{
    RayMatrix R({w}, {tname});
    OneParamFamily F;
    F.ring = lifted_ring(gb.ideal.ring, R);
    for (const auto& g : gb.elements) F.generators.push_back(lift_polynomial(g, R, F.ring));
    return F;
}

inline Ideal specialize_family(const OneParamFamily& F, const RingPtr& base, const Q& t)
{
    Assignment as;
    as.values[F.ring->var(F.ring->nvars() - 1)] = t;
    std::vector<Polynomial> gens;
    for (const auto& g : F.generators) gens.push_back(specialize(g, as, base));
    return Ideal(base, gens);
}

inline bool rees_correspondence_check(const LiftedIdeal& L)
{
    size_t n = L.n(), m = L.m();
    for (const auto& g : L.generators) {
        const Term* free = nullptr;
        for (const auto& t : g.terms()) {
            bool tf = true;
            for (size_t k = 0; k < m; ++k)
                if (t.first[n + k] != 0) tf = false;
            if (tf) {
                if (free) return false;
                free = &t;
            }
        }
        if (!free) return false;
        Exp gamma(free->first.begin(), free->first.begin() + n);
        for (const auto& t : g.terms()) {
            Exp diff(n);
            for (size_t i = 0; i < n; ++i) diff[i] = t.first[i] - gamma[i];
            for (size_t k = 0; k < m; ++k) {
                Q p = dot(L.rays.rows[k], diff);
                if (p < 0 || p != t.first[n + k]) return false;
            }
        }
    }
    return true;
}

// Each generator has a unique t-free term, and it is the order-initial term.
inline bool unique_constant_term(const LiftedIdeal& L)
{
    size_t n = L.n(), m = L.m();
    for (const auto& g : L.generators) {
        size_t cnt = 0;
        for (const auto& t : g.terms()) {
            bool tf = true;
            for (size_t k = 0; k < m; ++k)
                if (t.first[n + k] != 0) tf = false;
            if (tf) ++cnt;
        }
        if (cnt != 1) return false;
        auto lt = leading_term(g, L.order);
        for (size_t k = 0; k < m; ++k)
            if (lt.first[n + k] != 0) return false;
    }
    return true;
}

struct FlatnessRow {
    std::vector<Q> point;
    std::map<Q, size_t> counts;
    bool ok = true;
};

struct FlatnessReport {
    std::map<Q, size_t> expected;
    std::vector<FlatnessRow> rows;
    bool ok = true;
    std::string failure;
};

inline FlatnessReport flatness_certificate(const LiftedIdeal& L, const Q& D, const std::vector<std::vector<Q>>& points,
                                           const GbOptions& opt = {})
{
    FlatnessReport rep;
    std::vector<Exp> leads;
    for (const auto& g : L.base_gb) leads.push_back(leading_term(g, L.base_order).first);
    rep.expected = StandardMonomialBasis(leads).count_by_degree(L.base->d(), D);
    std::vector<FlatnessRow> rows(points.size());
    parallel_for(points.size(), opt.threads ? opt.threads : default_threads(), [&](size_t i) {
        GbOptions o1 = opt;
        o1.threads = 1;
        Ideal F = fiber(L, points[i]);
        auto gb = groebner_basis(F, L.base_order, o1);
        rows[i].point = points[i];
        rows[i].counts = StandardMonomialBasis::of(gb).count_by_degree(L.base->d(), D);
    });
    for (auto& r : rows) {
        r.ok = r.counts == rep.expected;
        if (!r.ok && rep.ok) {
            rep.ok = false;
            std::string p;
            for (size_t k = 0; k < r.point.size(); ++k) p += (k ? "," : "") + r.point[k].get_str();
            for (const auto& [deg, c] : rep.expected) {
                auto it = r.counts.find(deg);
                if (it == r.counts.end() || it->second != c) {
                    rep.failure = "dimension mismatch at point (" + p + ") in degree " + deg.get_str();
                    break;
                }
            }
        }
    }
    rep.rows = std::move(rows);
    return rep;
}

}  // namespace gdeg
