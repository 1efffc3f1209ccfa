#pragma once

// Randomised property suites on small instances.

#include "cluster.hpp"

#include <algorithm>
#include <random>

namespace gdeg {

struct PropertyResult {
    std::string name;
    size_t instances = 0;
    size_t failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0 && instances > 0; }
    void fail(const std::string& s)
    {
        if (failures++ == 0) first_failure = s;
    }
};

class RandomPolys {
public:
    explicit RandomPolys(uint64_t seed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }
    int uniform(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng_); }

    Exp exponent(size_t n, int max_deg)
    {
        Exp e(n, 0);
        int d = uniform(0, max_deg);
        for (int k = 0; k < d; ++k) e[uniform(0, static_cast<int>(n) - 1)] += 1;
        return e;
    }
    Polynomial poly(const RingPtr& r, int terms, int max_deg)
    {
        std::vector<Term> ts;
        for (int k = 0; k < terms; ++k) {
            int c = uniform(-5, 5);
            if (c == 0) c = 1;
            ts.emplace_back(exponent(r->nvars(), max_deg), Q(c));
        }
        auto p = Polynomial::from_terms(r, std::move(ts));
        return p.is_zero() ? Polynomial::variable(r, 0) : p;
    }
    Ideal ideal(const RingPtr& r, int gens, int terms, int max_deg)
    {
        std::vector<Polynomial> g;
        for (int k = 0; k < gens; ++k) g.push_back(poly(r, terms, max_deg));
        return Ideal(r, g);
    }
    OrderSpec order(size_t n, bool allow_lex = true)
    {
        switch (uniform(allow_lex ? 0 : 1, 2)) {
        case 0: return OrderSpec::lex(n);
        case 1: return OrderSpec::grevlex(n);
        default: {
            QVec w(n);
            for (auto& x : w) x = uniform(1, 4);
            return OrderSpec::weighted_revlex(w);
        }
        }
    }

private:
    std::mt19937_64 rng_;
};

inline RingPtr small_ring(size_t n)
{
    static const char* names[] = {"x", "y", "z", "u", "v"};
    std::vector<std::string> vs(names, names + n);
    return Ring::make(vs);
}

// Reduced bases coincide under the normal schedule, shuffled pair ties, a permuted generator list and two threads.
inline PropertyResult property_buchberger_determinism(size_t instances, uint64_t seed = 11)
{
    PropertyResult r{"buchberger determinism under schedule permutation"};
    RandomPolys rp(seed);
    for (size_t k = 0; k < instances; ++k) {
        auto ring = small_ring(rp.uniform(2, 3));
        auto I = rp.ideal(ring, rp.uniform(2, 3), rp.uniform(2, 3), 3);
        // lex in three variables can blow up rational coefficients under unlucky tie orders
        auto o = rp.order(ring->nvars(), ring->nvars() == 2);
        auto base = groebner_basis(I, o);
        ++r.instances;
        for (int s = 0; s < 3; ++s) {
            GbOptions opt;
            opt.strategy = PairStrategy::Shuffled;
            opt.seed = rp.rng()();
            opt.threads = s == 2 ? 2 : 1;
            auto J = I;
            if (s == 1) std::shuffle(J.gens.begin(), J.gens.end(), rp.rng());
            auto other = groebner_basis(J, o, opt);
            if (!same_reduced_basis(base, other)) {
                r.fail("instance " + std::to_string(k) + " differs under schedule " + std::to_string(s));
                break;
            }
        }
    }
    return r;
}

inline ExchangeMatrix random_exchange_matrix(RandomPolys& rp, size_t m, size_t f)
{
    std::vector<std::vector<int>> b(m + f, std::vector<int>(m, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            b[i][j] = rp.uniform(-2, 2);
            b[j][i] = -b[i][j];
        }
    for (size_t i = m; i < m + f; ++i)
        for (size_t j = 0; j < m; ++j) b[i][j] = rp.uniform(-2, 2);
    return ExchangeMatrix(m, b);
}

// Matrix mutation and Laurent seed mutation are involutions.
inline PropertyResult property_mutation_involution(size_t instances, uint64_t seed = 12)
{
    PropertyResult r{"mutation involutivity"};
    RandomPolys rp(seed);
    for (size_t k = 0; k < instances; ++k) {
        size_t m = rp.uniform(1, 4), f = rp.uniform(0, 2);
        auto B = random_exchange_matrix(rp, m, f);
        size_t at = rp.uniform(0, static_cast<int>(m) - 1);
        ++r.instances;
        if (!(mutate_matrix(mutate_matrix(B, at), at) == B)) {
            r.fail("matrix instance " + std::to_string(k));
            continue;
        }
        std::vector<std::string> vs;
        for (size_t i = 0; i < m + f; ++i) vs.push_back("x" + std::to_string(i + 1));
        auto ring = Ring::make(vs, true);
        Seed<Polynomial> s;
        s.B = B;
        for (size_t i = 0; i < m + f; ++i) s.x.push_back(Polynomial::variable(ring, i));
        // start from a mutated seed so the cluster is not just the initial variables
        if (m > 1) s = mutate_seed(s, (at + 1) % m);
        if (!(mutate_seed(mutate_seed(s, at), at) == s)) r.fail("seed instance " + std::to_string(k));
    }
    return r;
}

// f = sum q_i g_i + r, no term of r is divisible by an initial monomial, and in(f) >= in(q_i g_i).
inline PropertyResult property_division(size_t instances, uint64_t seed = 13)
{
    PropertyResult r{"division postconditions"};
    RandomPolys rp(seed);
    for (size_t k = 0; k < instances; ++k) {
        auto ring = small_ring(rp.uniform(2, 4));
        auto o = rp.order(ring->nvars());
        auto f = rp.poly(ring, rp.uniform(1, 6), 5);
        std::vector<Polynomial> G;
        int ng = rp.uniform(1, 3);
        for (int i = 0; i < ng; ++i) G.push_back(rp.poly(ring, rp.uniform(1, 3), 3));
        auto d = divide_with_remainder(f, G, o);
        ++r.instances;
        Polynomial sum = d.remainder;
        bool ok = d.quotients.size() == G.size();
        for (size_t i = 0; ok && i < G.size(); ++i) {
            if (d.quotients[i].is_zero()) continue;
            auto qg = d.quotients[i] * G[i];
            sum += qg;
            if (o.compare(leading_term(qg, o).first, leading_term(f, o).first) > 0) ok = false;
        }
        if (ok && sum != f) ok = false;
        for (const auto& t : d.remainder.terms())
            for (const auto& g : G)
                if (divides(leading_term(g, o).first, t.first)) ok = false;
        if (!ok) r.fail("instance " + std::to_string(k) + ": f = " + f.str());
    }
    return r;
}

// Every divisor of a standard monomial is standard.
inline PropertyResult property_standard_divisor_closed(size_t instances, uint64_t seed = 14)
{
    PropertyResult r{"standard-monomial divisor-closedness"};
    RandomPolys rp(seed);
    for (size_t k = 0; k < instances; ++k) {
        size_t n = rp.uniform(2, 4);
        auto ring = small_ring(n);
        std::vector<Exp> leads;
        if (rp.uniform(0, 1)) {
            auto gb = groebner_basis(rp.ideal(ring, 2, 2, 3), rp.order(n));
            leads = gb.lead_exponents();
        } else {
            int g = rp.uniform(1, 4);
            for (int i = 0; i < g; ++i) {
                auto e = rp.exponent(n, 3);
                if (total_degree(e) == 0) e[0] = 1;
                leads.push_back(e);
            }
        }
        StandardMonomialBasis B(leads);
        ++r.instances;
        bool ok = true;
        QVec d(n, Q(1));
        B.enumerate(d, Q(4), [&](const Exp& e, const Q&) {
            if (!B.contains(e)) ok = false;
            for (size_t i = 0; i < n; ++i) {
                if (e[i] == 0) continue;
                Exp f = e;
                --f[i];
                if (!B.contains(f)) ok = false;
            }
        });
        // monomials outside the basis are multiples of a lead monomial
        for (int t = 0; t < 10; ++t) {
            auto e = rp.exponent(n, 4);
            bool mult = false;
            for (const auto& l : B.lead_monomials)
                if (divides(l, e)) mult = true;
            if (mult == B.contains(e)) ok = false;
        }
        if (!ok) r.fail("instance " + std::to_string(k));
    }
    return r;
}

}  // namespace gdeg
