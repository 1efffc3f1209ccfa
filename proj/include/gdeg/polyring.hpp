#pragma once

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gdeg {

using Q = mpq_class;
using QVec = std::vector<Q>;
using Exp = boost::container::small_vector<int, 24>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Q parse_rational(const std::string& s)
{
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw Error("empty rational");
    if (t[0] == '+') t = t.substr(1);
    auto ok = [](const std::string& u) {
        size_t i = (!u.empty() && u[0] == '-') ? 1 : 0;
        if (i >= u.size()) return false;
        for (; i < u.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
        return true;
    };
    auto slash = t.find('/');
    Q r;
    if (slash == std::string::npos) {
        if (!ok(t)) throw Error("bad rational '" + s + "'");
        r = Q(t);
    } else {
        std::string a = t.substr(0, slash), b = t.substr(slash + 1);
        if (!ok(a) || !ok(b) || b[0] == '-') throw Error("bad rational '" + s + "'");
        mpz_class den(b);
        if (den == 0) throw Error("zero denominator in '" + s + "'");
        r = Q(mpz_class(a), den);
        r.canonicalize();
    }
    return r;
}

// mpq_class(a, b) does not reduce; comparisons on unreduced values are wrong.
inline Q frac(long a, long b)
{
    Q r(a, b);
    r.canonicalize();
    return r;
}

inline std::string qstr(const Q& q) { return q.get_str(); }

inline Q dot(const QVec& w, const Exp& a)
{
    Q s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && w[i] != 0) s += w[i] * a[i];
    return s;
}

class Ring {
public:
    Ring(std::vector<std::string> vars, QVec d, bool laurent = false)
        : vars_(std::move(vars)), d_(std::move(d)), laurent_(laurent)
    {
        if (d_.size() != vars_.size()) throw Error("grading length does not match number of variables");
        for (size_t i = 0; i < vars_.size(); ++i) {
            const auto& v = vars_[i];
            if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
                throw Error("bad variable name '" + v + "'");
            for (char c : v)
                if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                    throw Error("bad variable name '" + v + "'");
            if (!index_.emplace(v, static_cast<int>(i)).second) throw Error("duplicate variable '" + v + "'");
        }
    }

    static std::shared_ptr<const Ring> make(std::vector<std::string> vars, QVec d, bool laurent = false)
    {
        return std::make_shared<const Ring>(std::move(vars), std::move(d), laurent);
    }
    static std::shared_ptr<const Ring> make(std::vector<std::string> vars, bool laurent = false)
    {
        QVec d(vars.size(), Q(1));
        return std::make_shared<const Ring>(std::move(vars), std::move(d), laurent);
    }

    size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var(size_t i) const { return vars_[i]; }
    const QVec& d() const { return d_; }
    bool laurent() const { return laurent_; }

    int index(const std::string& name) const
    {
        auto it = index_.find(name);
        return it == index_.end() ? -1 : it->second;
    }
    int at(const std::string& name) const
    {
        int i = index(name);
        if (i < 0) throw Error("unknown variable '" + name + "'");
        return i;
    }

    bool same(const Ring& o) const { return vars_ == o.vars_ && d_ == o.d_ && laurent_ == o.laurent_; }

private:
    std::vector<std::string> vars_;
    QVec d_;
    bool laurent_;
    std::unordered_map<std::string, int> index_;
};

using RingPtr = std::shared_ptr<const Ring>;

using Term = std::pair<Exp, Q>;

// Terms are kept sorted by exponent vector, lexicographically decreasing.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr r) : ring_(std::move(r)) {}

    static Polynomial constant(RingPtr r, const Q& c)
    {
        Polynomial p(r);
        if (c != 0) p.terms_.emplace_back(Exp(p.ring_->nvars(), 0), c);
        return p;
    }
    static Polynomial monomial(RingPtr r, Exp e, const Q& c = 1)
    {
        Polynomial p(r);
        p.check_exp(e);
        if (c != 0) p.terms_.emplace_back(std::move(e), c);
        return p;
    }
    static Polynomial variable(RingPtr r, size_t i)
    {
        Exp e(r->nvars(), 0);
        e[i] = 1;
        return monomial(r, std::move(e));
    }
    static Polynomial variable(RingPtr r, const std::string& name) { return variable(r, r->at(name)); }

    static Polynomial from_terms(RingPtr r, std::vector<Term> ts)
    {
        Polynomial p(r);
        std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
        for (auto& t : ts) {
            p.check_exp(t.first);
            if (!p.terms_.empty() && p.terms_.back().first == t.first)
                p.terms_.back().second += t.second;
            else
                p.terms_.push_back(std::move(t));
        }
        p.terms_.erase(std::remove_if(p.terms_.begin(), p.terms_.end(), [](const Term& t) { return t.second == 0; }),
                       p.terms_.end());
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }
    bool operator<(const Polynomial& o) const
    {
        size_t n = std::min(terms_.size(), o.terms_.size());
        for (size_t i = 0; i < n; ++i) {
            if (terms_[i].first != o.terms_[i].first) return terms_[i].first > o.terms_[i].first;
            if (terms_[i].second != o.terms_[i].second) return terms_[i].second < o.terms_[i].second;
        }
        return terms_.size() < o.terms_.size();
    }

    Polynomial operator+(const Polynomial& o) const { return combine(o, Q(1)); }
    Polynomial operator-(const Polynomial& o) const { return combine(o, Q(-1)); }
    Polynomial operator-() const
    {
        Polynomial p = *this;
        for (auto& t : p.terms_) t.second = -t.second;
        return p;
    }
    Polynomial operator*(const Q& c) const
    {
        Polynomial p(ring_);
        if (c == 0) return p;
        p.terms_ = terms_;
        for (auto& t : p.terms_) t.second *= c;
        return p;
    }
    Polynomial operator*(const Polynomial& o) const
    {
        require_same(o);
        std::map<Exp, Q, std::greater<Exp>> acc;
        for (const auto& a : terms_)
            for (const auto& b : o.terms_) {
                Exp e = a.first;
                for (size_t i = 0; i < e.size(); ++i) e[i] += b.first[i];
                acc[e] += a.second * b.second;
            }
        Polynomial p(ring_);
        for (auto& [e, c] : acc)
            if (c != 0) p.terms_.emplace_back(e, c);
        return p;
    }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial mul_monomial(const Exp& e, const Q& c = 1) const
    {
        Polynomial p(ring_);
        if (c == 0) return p;
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Exp f = t.first;
            for (size_t i = 0; i < f.size(); ++i) f[i] += e[i];
            p.check_exp(f);
            p.terms_.emplace_back(std::move(f), t.second * c);
        }
        return p;
    }

    Polynomial pow(unsigned k) const
    {
        Polynomial r = constant(ring_, 1), b = *this;
        while (k) {
            if (k & 1) r = r * b;
            k >>= 1;
            if (k) b = b * b;
        }
        return r;
    }

    // Same terms, read in another ring with identical variable count.
    Polynomial in_ring(RingPtr r) const
    {
        if (r->nvars() != ring_->nvars()) throw Error("ring size mismatch");
        Polynomial p(std::move(r));
        p.terms_ = terms_;
        return p;
    }

    std::string str(const std::vector<size_t>* order = nullptr) const
    {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        auto emit = [&](const Term& t, bool first) {
            Q c = t.second;
            bool neg = c < 0;
            if (neg) c = -c;
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            bool isconst = std::all_of(t.first.begin(), t.first.end(), [](int x) { return x == 0; });
            bool wrote = false;
            if (c != 1 || isconst) {
                os << c.get_str();
                wrote = true;
            }
            for (size_t i = 0; i < t.first.size(); ++i) {
                if (t.first[i] == 0) continue;
                if (wrote) os << '*';
                os << ring_->var(i);
                if (t.first[i] != 1) os << '^' << t.first[i];
                wrote = true;
            }
        };
        if (order) {
            for (size_t k = 0; k < order->size(); ++k) emit(terms_[(*order)[k]], k == 0);
        } else {
            for (size_t k = 0; k < terms_.size(); ++k) emit(terms_[k], k == 0);
        }
        return os.str();
    }

private:
    RingPtr ring_;
    std::vector<Term> terms_;

    void check_exp(const Exp& e) const
    {
        if (e.size() != ring_->nvars()) throw Error("exponent length mismatch");
        if (!ring_->laurent())
            for (int x : e)
                if (x < 0) throw Error("negative exponent in a polynomial ring");
    }
    void require_same(const Polynomial& o) const
    {
        if (ring_.get() != o.ring_.get() && !ring_->same(*o.ring_)) throw Error("polynomials live in different rings");
    }
    Polynomial combine(const Polynomial& o, const Q& s) const
    {
        require_same(o);
        Polynomial p(ring_);
        p.terms_.reserve(terms_.size() + o.terms_.size());
        size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first > o.terms_[j].first)) {
                p.terms_.push_back(terms_[i++]);
            } else if (i == terms_.size() || o.terms_[j].first > terms_[i].first) {
                p.terms_.emplace_back(o.terms_[j].first, o.terms_[j].second * s);
                ++j;
            } else {
                Q c = terms_[i].second + s * o.terms_[j].second;
                if (c != 0) p.terms_.emplace_back(terms_[i].first, c);
                ++i;
                ++j;
            }
        }
        return p;
    }
};

inline Polynomial operator*(const Q& c, const Polynomial& p) { return p * c; }

// ---- parsing ----------------------------------------------------------

inline Polynomial parse_polynomial(const RingPtr& ring, const std::string& text)
{
    size_t pos = 0;
    const size_t n = text.size();
    auto skip = [&] {
        while (pos < n && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& why) -> Error {
        return Error("cannot parse polynomial '" + text + "': " + why + " at offset " + std::to_string(pos));
    };
    auto read_int = [&]() {
        size_t st = pos;
        if (pos < n && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (st == pos || !std::isdigit(static_cast<unsigned char>(text[pos - 1]))) throw fail("expected integer");
        return std::stoi(text.substr(st, pos - st));
    };

    std::vector<Term> terms;
    skip();
    if (pos == n) throw fail("empty input");
    bool first = true;
    while (true) {
        skip();
        if (pos == n) break;
        Q sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1;
            ++pos;
            skip();
        } else if (!first) {
            throw fail("expected '+' or '-'");
        }
        first = false;
        Q coef = 1;
        Exp e(ring->nvars(), 0);
        bool any = false;
        while (true) {
            skip();
            if (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                size_t st = pos;
                while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                std::string num = text.substr(st, pos - st);
                if (pos < n && text[pos] == '/') {
                    ++pos;
                    size_t s2 = pos;
                    while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                    if (s2 == pos) throw fail("bad fraction");
                    num += "/" + text.substr(s2, pos - s2);
                }
                coef *= parse_rational(num);
            } else if (pos < n && (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
                size_t st = pos;
                while (pos < n && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
                std::string name = text.substr(st, pos - st);
                int idx = ring->index(name);
                if (idx < 0) throw fail("unknown variable '" + name + "'");
                int k = 1;
                skip();
                if (pos < n && text[pos] == '^') {
                    ++pos;
                    skip();
                    k = read_int();
                }
                e[idx] += k;
            } else {
                throw fail("expected a factor");
            }
            any = true;
            skip();
            if (pos < n && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!any) throw fail("empty term");
        terms.emplace_back(std::move(e), sign * coef);
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

// ---- grading and weights ---------------------------------------------

inline std::optional<Q> weighted_degree(const Polynomial& f, const QVec& d)
{
    if (f.is_zero()) throw Error("zero has no degree");
    if (d.size() != f.ring()->nvars()) throw Error("weight length mismatch");
    Q deg = dot(d, f.terms()[0].first);
    for (const auto& t : f.terms())
        if (dot(d, t.first) != deg) return std::nullopt;
    return deg;
}

inline bool is_homogeneous(const Polynomial& f, const QVec& d) { return f.is_zero() || weighted_degree(f, d).has_value(); }

// Min convention: keep the terms of minimal w-weight.
inline Polynomial initial_form_weight(const Polynomial& f, const QVec& w)
{
    if (f.is_zero()) throw Error("initial form of zero");
    if (w.size() != f.ring()->nvars()) throw Error("weight length mismatch");
    std::vector<Q> wt;
    wt.reserve(f.size());
    for (const auto& t : f.terms()) wt.push_back(dot(w, t.first));
    Q m = *std::min_element(wt.begin(), wt.end());
    std::vector<Term> out;
    for (size_t i = 0; i < f.size(); ++i)
        if (wt[i] == m) out.push_back(f.terms()[i]);
    return Polynomial::from_terms(f.ring(), std::move(out));
}

inline QVec weight_values(const Polynomial& f, const QVec& w)
{
    QVec r;
    for (const auto& t : f.terms()) r.push_back(dot(w, t.first));
    return r;
}

// ---- term orders -----------------------------------------------------

enum class Tiebreak { Lex, RevLex };

// Max convention: the order-initial monomial is the largest one.
struct OrderSpec {
    std::vector<QVec> weight_rows;
    Tiebreak tiebreak = Tiebreak::Lex;
    std::vector<size_t> perm;  // variable priority, first = most significant

    static OrderSpec lex(size_t n)
    {
        OrderSpec o;
        for (size_t i = 0; i < n; ++i) o.perm.push_back(i);
        return o;
    }
    static OrderSpec grevlex(size_t n)
    {
        OrderSpec o = lex(n);
        o.weight_rows.push_back(QVec(n, Q(1)));
        o.tiebreak = Tiebreak::RevLex;
        return o;
    }
    // d-graded reverse lexicographic order.
    static OrderSpec weighted_revlex(const QVec& d)
    {
        OrderSpec o = lex(d.size());
        o.weight_rows.push_back(d);
        o.tiebreak = Tiebreak::RevLex;
        return o;
    }
    // Refined order: terms of minimal w-weight come first, then base.
    // A leading grading row keeps the order a well-order; it changes nothing on d-homogeneous input.
    static OrderSpec refined(const QVec& d, const QVec& w, const OrderSpec& base)
    {
        OrderSpec o;
        o.weight_rows.push_back(d);
        QVec neg(w.size());
        for (size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
        o.weight_rows.push_back(neg);
        for (const auto& r : base.weight_rows) o.weight_rows.push_back(r);
        o.tiebreak = base.tiebreak;
        o.perm = base.perm;
        return o;
    }

    size_t nvars() const { return perm.size(); }

    // -1, 0, 1 for a < b, a == b, a > b
    int compare(const Exp& a, const Exp& b) const
    {
        for (const auto& r : weight_rows) {
            Q x = dot(r, a), y = dot(r, b);
            if (x != y) return x < y ? -1 : 1;
        }
        return compare_tiebreak(a, b);
    }
    int compare_tiebreak(const Exp& a, const Exp& b) const
    {
        if (tiebreak == Tiebreak::Lex) {
            for (size_t k = 0; k < perm.size(); ++k) {
                size_t i = perm[k];
                if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
            }
        } else {
            for (size_t k = perm.size(); k-- > 0;) {
                size_t i = perm[k];
                if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
            }
        }
        return 0;
    }

    void validate(size_t n) const
    {
        if (perm.size() != n) throw Error("order permutation has wrong length");
        std::vector<bool> seen(n, false);
        for (size_t i : perm) {
            if (i >= n || seen[i]) throw Error("order permutation is not a permutation");
            seen[i] = true;
        }
        for (const auto& r : weight_rows)
            if (r.size() != n) throw Error("order weight row has wrong length");
    }
};

// Term indices sorted by the order, largest first.
inline std::vector<size_t> order_terms(const Polynomial& f, const OrderSpec& o)
{
    std::vector<size_t> idx(f.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](size_t a, size_t b) { return o.compare(f.terms()[a].first, f.terms()[b].first) > 0; });
    return idx;
}

inline std::string str_ordered(const Polynomial& f, const OrderSpec& o)
{
    auto idx = order_terms(f, o);
    return f.str(&idx);
}

inline Term leading_term(const Polynomial& f, const OrderSpec& o)
{
    if (f.is_zero()) throw Error("initial monomial of zero");
    size_t best = 0;
    for (size_t i = 1; i < f.size(); ++i)
        if (o.compare(f.terms()[i].first, f.terms()[best].first) > 0) best = i;
    return f.terms()[best];
}

inline Polynomial initial_monomial_order(const Polynomial& f, const OrderSpec& o)
{
    Term t = leading_term(f, o);
    return Polynomial::monomial(f.ring(), t.first, t.second);
}

inline Polynomial make_monic(const Polynomial& f, const OrderSpec& o)
{
    if (f.is_zero()) return f;
    Q c = leading_term(f, o).second;
    return f * (Q(1) / c);
}

// ---- substitution ----------------------------------------------------

struct Assignment {
    std::map<std::string, Q> values;
    std::map<std::string, Polynomial> polys;
};

// Substitutes the assigned variables; the result lives in target, which must contain every unassigned
// variable of f's ring (and every variable of the substituted polynomials).
inline Polynomial specialize(const Polynomial& f, const Assignment& a, const RingPtr& target)
{
    const Ring& src = *f.ring();
    std::vector<int> map(src.nvars(), -1);
    std::vector<const Q*> val(src.nvars(), nullptr);
    std::vector<const Polynomial*> pol(src.nvars(), nullptr);
    for (size_t i = 0; i < src.nvars(); ++i) {
        const auto& v = src.var(i);
        if (auto it = a.values.find(v); it != a.values.end())
            val[i] = &it->second;
        else if (auto jt = a.polys.find(v); jt != a.polys.end())
            pol[i] = &jt->second;
        else
            map[i] = target->at(v);
    }
    for (const auto& [k, _] : a.values)
        if (src.index(k) < 0) throw Error("assigned variable '" + k + "' not in ring");
    for (const auto& [k, _] : a.polys)
        if (src.index(k) < 0) throw Error("assigned variable '" + k + "' not in ring");

    bool simple = std::all_of(pol.begin(), pol.end(), [](const Polynomial* p) { return p == nullptr; });
    if (simple) {
        std::vector<Term> out;
        out.reserve(f.size());
        for (const auto& t : f.terms()) {
            Q c = t.second;
            Exp e(target->nvars(), 0);
            for (size_t i = 0; i < src.nvars(); ++i) {
                int k = t.first[i];
                if (k == 0) continue;
                if (val[i]) {
                    if (*val[i] == 0) {
                        if (k < 0) throw Error("pole at zero");
                        c = 0;
                        break;
                    }
                    Q p = 1;
                    Q b = k > 0 ? *val[i] : Q(1) / *val[i];
                    for (int j = 0; j < std::abs(k); ++j) p *= b;
                    c *= p;
                } else {
                    e[map[i]] += k;
                }
            }
            if (c != 0) out.emplace_back(std::move(e), c);
        }
        return Polynomial::from_terms(target, std::move(out));
    }

    Polynomial acc(target);
    for (const auto& t : f.terms()) {
        Polynomial term = Polynomial::constant(target, t.second);
        Exp e(target->nvars(), 0);
        for (size_t i = 0; i < src.nvars(); ++i) {
            int k = t.first[i];
            if (k == 0) continue;
            if (val[i]) {
                if (*val[i] == 0 && k < 0) throw Error("pole at zero");
                Q p = 1;
                Q b = k > 0 ? *val[i] : Q(1) / *val[i];
                for (int j = 0; j < std::abs(k); ++j) p *= b;
                term = term * p;
            } else if (pol[i]) {
                if (k < 0) throw Error("cannot substitute a polynomial for a variable with negative exponent");
                term = term * pol[i]->in_ring(target).pow(static_cast<unsigned>(k));
            } else {
                e[map[i]] += k;
            }
        }
        acc += term.mul_monomial(e);
    }
    return acc;
}

// Ring with the assigned variables removed.
inline RingPtr ring_without(const RingPtr& r, const std::vector<std::string>& drop)
{
    std::vector<std::string> vs;
    QVec d;
    for (size_t i = 0; i < r->nvars(); ++i)
        if (std::find(drop.begin(), drop.end(), r->var(i)) == drop.end()) {
            vs.push_back(r->var(i));
            d.push_back(r->d()[i]);
        }
    return Ring::make(vs, d, r->laurent());
}

inline Polynomial specialize(const Polynomial& f, const Assignment& a)
{
    std::vector<std::string> drop;
    for (const auto& [k, _] : a.values) drop.push_back(k);
    for (const auto& [k, _] : a.polys) drop.push_back(k);
    return specialize(f, a, ring_without(f.ring(), drop));
}

inline Q evaluate(const Polynomial& f, const std::vector<Q>& x)
{
    Q s = 0;
    for (const auto& t : f.terms()) {
        Q c = t.second;
        for (size_t i = 0; i < x.size(); ++i) {
            int k = t.first[i];
            if (k == 0) continue;
            if (x[i] == 0) {
                if (k < 0) throw Error("pole at zero");
                c = 0;
                break;
            }
            Q b = k > 0 ? x[i] : Q(1) / x[i];
            for (int j = 0; j < std::abs(k); ++j) c *= b;
        }
        s += c;
    }
    return s;
}

// ---- exact division --------------------------------------------------

// Componentwise minimum exponent over all terms.
inline Exp monomial_content(const Polynomial& f)
{
    Exp m = f.terms()[0].first;
    for (const auto& t : f.terms())
        for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], t.first[i]);
    return m;
}

inline Polynomial exact_divide(const Polynomial& f, const Polynomial& g)
{
    if (g.is_zero()) throw Error("division by zero");
    if (f.is_zero()) return f;
    const RingPtr& R = f.ring();
    size_t n = R->nvars();
    // f = x^mf F, g = x^mg G with F, G free of monomial factors
    Exp mf = monomial_content(f), mg = monomial_content(g);
    Exp nf(n), ng(n);
    for (size_t i = 0; i < n; ++i) {
        nf[i] = -mf[i];
        ng[i] = -mg[i];
    }
    auto strip = [&](const Polynomial& p, const Exp& e) {
        std::vector<Term> ts;
        for (const auto& t : p.terms()) {
            Exp x = t.first;
            for (size_t i = 0; i < n; ++i) x[i] += e[i];
            ts.emplace_back(std::move(x), t.second);
        }
        return ts;
    };
    // Work with plain term vectors in lex-decreasing order (leading term first).
    std::vector<Term> F = strip(f, nf), G = strip(g, ng);
    std::sort(F.begin(), F.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
    std::sort(G.begin(), G.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
    std::vector<Term> quot;
    const Exp& lg = G[0].first;
    while (!F.empty()) {
        const Exp& lf = F[0].first;
        Exp qe(n);
        for (size_t i = 0; i < n; ++i) {
            qe[i] = lf[i] - lg[i];
            if (qe[i] < 0) throw Error("not divisible");
        }
        Q qc = F[0].second / G[0].second;
        quot.emplace_back(qe, qc);
        // F -= qc * x^qe * G
        std::vector<Term> sub;
        sub.reserve(G.size());
        for (const auto& t : G) {
            Exp x = t.first;
            for (size_t i = 0; i < n; ++i) x[i] += qe[i];
            sub.emplace_back(std::move(x), t.second * qc);
        }
        std::vector<Term> nfv;
        nfv.reserve(F.size() + sub.size());
        size_t i = 0, j = 0;
        while (i < F.size() || j < sub.size()) {
            if (j == sub.size() || (i < F.size() && F[i].first > sub[j].first))
                nfv.push_back(std::move(F[i++]));
            else if (i == F.size() || sub[j].first > F[i].first) {
                nfv.emplace_back(std::move(sub[j].first), -sub[j].second);
                ++j;
            } else {
                Q c = F[i].second - sub[j].second;
                if (c != 0) nfv.emplace_back(std::move(F[i].first), c);
                ++i;
                ++j;
            }
        }
        F = std::move(nfv);
    }
    Exp shift(n);
    for (size_t i = 0; i < n; ++i) shift[i] = mf[i] - mg[i];
    for (auto& t : quot)
        for (size_t i = 0; i < n; ++i) t.first[i] += shift[i];
    if (!R->laurent())
        for (const auto& t : quot)
            for (int x : t.first)
                if (x < 0) throw Error("not divisible");
    return Polynomial::from_terms(R, std::move(quot));
}

inline bool divides(const Exp& a, const Exp& b)
{
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline int total_degree(const Exp& e)
{
    int s = 0;
    for (int x : e) s += x;
    return s;
}

inline std::vector<Polynomial> parse_polynomials(const RingPtr& r, const std::vector<std::string>& lines)
{
    std::vector<Polynomial> out;
    for (const auto& l : lines) out.push_back(parse_polynomial(r, l));
    return out;
}

}  // namespace gdeg
