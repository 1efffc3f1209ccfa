#include "gdeg/gdeg.hpp"

#include <gtest/gtest.h>

using namespace gdeg;

namespace {

RingPtr xy() { return Ring::make({"x", "y"}); }

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

}  // namespace

TEST(Rational, ParseCanonical)
{
    EXPECT_EQ(parse_rational("8/2"), Q(4));
    EXPECT_EQ(parse_rational(" -3/6 "), frac(-1, 2));
    EXPECT_EQ(frac(8, 2), Q(4));
    EXPECT_THROW(parse_rational("1/0"), Error);
    EXPECT_THROW(parse_rational("abc"), Error);
}

TEST(Ring, RejectsDuplicatesAndBadGrading)
{
    EXPECT_THROW(Ring::make({"x", "x"}), Error);
    EXPECT_THROW(Ring::make({"x", "y"}, QVec{Q(1)}), Error);
}

TEST(Polynomial, ParseAndPrint)
{
    auto r = xy();
    auto f = P(r, "3*x^2*y - 1/2*y + 4");
    EXPECT_EQ(f.size(), 3u);
    EXPECT_EQ(P(r, f.str()), f);
    EXPECT_TRUE(P(r, "x - x").is_zero());
    EXPECT_THROW(P(r, "x*z"), Error);
}

TEST(Polynomial, NegativeExponentOnlyInLaurentRing)
{
    EXPECT_THROW(P(xy(), "x^-1"), Error);
    auto L = Ring::make({"x", "y"}, true);
    EXPECT_EQ(P(L, "x^-1*x"), Polynomial::constant(L, 1));
}

TEST(WeightedDegree, PluckerExchangeRelation)
{
    auto D = Gr36Data::load();
    auto f = P(D.ring, "p145*p236 - p123*p456 - X");
    auto deg = weighted_degree(f, D.ring->d());
    ASSERT_TRUE(deg.has_value());
    EXPECT_EQ(*deg, Q(2));
}

TEST(WeightedDegree, ConstantAndMixed)
{
    auto r = xy();
    EXPECT_EQ(*weighted_degree(Polynomial::constant(r, 1), QVec{1, 1}), Q(0));
    EXPECT_FALSE(weighted_degree(P(r, "x^2 + y"), QVec{1, 1}).has_value());
    EXPECT_THROW(weighted_degree(Polynomial(r), QVec{1, 1}), Error);
}

TEST(InitialForm, FacetExampleH)
{
    auto D = Gr36Data::load();
    auto h = P(D.ring, D.regression.at("h_printed").get<std::string>());
    QVec v;
    for (const auto& x : D.regression.at("v_times_4")) v.push_back(frac(x.get<long>(), 4));
    EXPECT_EQ(initial_form_weight(h, v), P(D.ring, "p136*p145*p234*p256"));
}

TEST(InitialForm, ZeroWeightAndTreeWeight)
{
    auto r = plucker_ring(4);
    auto R = plucker_relation(r, 4, 1, 2, 3, 4);
    EXPECT_EQ(initial_form_weight(R, QVec(6, Q(0))), R);
    // (p12, p13, p14, p23, p24, p34); oracle: evaluate each term by hand
    QVec w{-2, -3, -3, -3, -3, -2};
    EXPECT_EQ(initial_form_weight(R, w), P(r, "-p13*p24 + p14*p23"));
    EXPECT_THROW(initial_form_weight(Polynomial(r), w), Error);
}

TEST(InitialMonomial, LexAndTiebreak)
{
    auto r = xy();
    EXPECT_EQ(initial_monomial_order(P(r, "x^2*y + x^3"), OrderSpec::lex(2)), P(r, "x^3"));
    OrderSpec o = OrderSpec::lex(2);
    o.weight_rows.push_back(QVec{1, 1});
    EXPECT_EQ(initial_monomial_order(P(r, "x + y"), o), P(r, "x"));
    EXPECT_THROW(initial_monomial_order(Polynomial(r), o), Error);
}

TEST(InitialMonomial, AppendixLeadsAreExchangeMonomials)
{
    auto D = Gr36Data::load();
    auto lines = read_lines(data_path("gr36/reduced_gb.txt"));
    ASSERT_EQ(lines.size(), D.appendix_gb.size());
    for (size_t i = 0; i < lines.size(); ++i) {
        // the exchange monomial is the first listed one
        auto first = lines[i].substr(0, lines[i].find_first_of("+-", 1));
        auto lead = initial_monomial_order(D.appendix_gb[i], D.order());
        auto m = P(D.ring, first);
        EXPECT_EQ(lead.terms()[0].first, m.terms()[0].first) << lines[i];
    }
}

TEST(Specialize, Substitutions)
{
    auto r = xy();
    Assignment a;
    a.polys.emplace("x", P(r, "y"));
    EXPECT_TRUE(specialize(P(r, "x - y"), a, r).is_zero());

    auto L = Ring::make({"x", "y"}, true);
    Assignment z;
    z.values.emplace("x", Q(0));
    EXPECT_THROW(specialize(P(L, "x^-1 + y"), z), Error);
}

TEST(Specialize, Gr25Lift)
{
    auto L = lifted_plucker(5);
    auto R = parse_polynomial(L.ext, "p13*p24 - p12*p34*t24*t25 - p14*p23*t13");
    Assignment a;
    a.values = {{"t13", Q(0)}, {"t24", Q(1)}, {"t25", Q(1)}};
    auto s = specialize(R, a);
    auto want = parse_polynomial(s.ring(), "p13*p24 - p12*p34");
    EXPECT_EQ(s, want);
}

TEST(Specialize, LiftAtOneIsOriginal)
{
    auto L = lifted_plucker(5);
    auto gb = plucker_gb(5);
    std::vector<Q> ones(L.m(), Q(1));
    auto F = fiber(L, ones);
    for (size_t i = 0; i < F.gens.size(); ++i) EXPECT_EQ(F.gens[i], gb.elements[i].in_ring(F.ring));
}

TEST(ExactDivide, Cases)
{
    auto r = xy();
    EXPECT_EQ(exact_divide(P(r, "x^2 - y^2"), P(r, "x - y")), P(r, "x + y"));
    auto f = P(r, "3*x*y + 2");
    EXPECT_EQ(exact_divide(f, f), Polynomial::constant(r, 1));
    EXPECT_THROW(exact_divide(P(r, "x + 1"), P(r, "y")), Error);
    auto L = Ring::make({"x", "y"}, true);
    EXPECT_EQ(exact_divide(P(L, "x*y + 1"), P(L, "x")), P(L, "y + x^-1"));
}

TEST(OrderSpec, AxiomsOnSamples)
{
    RandomPolys rp(101);
    for (int k = 0; k < 1000; ++k) {
        size_t n = rp.uniform(1, 4);
        auto o = rp.order(n);
        auto a = rp.exponent(n, 4), b = rp.exponent(n, 4), c = rp.exponent(n, 4);
        Exp one(n, 0), ac = a, bc = b;
        for (size_t i = 0; i < n; ++i) ac[i] += c[i], bc[i] += c[i];
        ASSERT_LE(o.compare(one, a), 0);
        ASSERT_EQ(o.compare(a, b), -o.compare(b, a));
        ASSERT_EQ(o.compare(a, b), o.compare(ac, bc));
        ASSERT_EQ(o.compare(a, b) == 0, a == b);
    }
}

// one sample per instance, 1000 instances for each law
class PolyringProperties : public ::testing::Test {
protected:
    RandomPolys rp{202};
    RingPtr ring() { return small_ring(rp.uniform(1, 4)); }
};

TEST_F(PolyringProperties, Distributivity)
{
    for (int k = 0; k < 1000; ++k) {
        auto r = ring();
        auto f = rp.poly(r, 3, 3), g = rp.poly(r, 3, 3), h = rp.poly(r, 3, 3);
        ASSERT_EQ((f + g) * h, f * h + g * h);
        ASSERT_EQ(f + g, g + f);
    }
}

TEST_F(PolyringProperties, CanonicalFormIndependentOfConstruction)
{
    for (int k = 0; k < 1000; ++k) {
        auto r = ring();
        std::vector<Term> ts;
        for (int i = 0; i < 5; ++i) ts.emplace_back(rp.exponent(r->nvars(), 3), Q(rp.uniform(-3, 3)));
        auto a = Polynomial::from_terms(r, ts);
        std::shuffle(ts.begin(), ts.end(), rp.rng());
        auto b = Polynomial::from_terms(r, ts);
        Polynomial c(r);
        for (const auto& t : ts) c += Polynomial::monomial(r, t.first, t.second);
        ASSERT_EQ(a, b);
        ASSERT_EQ(a, c);
        for (const auto& t : a.terms()) ASSERT_NE(t.second, 0);
    }
}

TEST_F(PolyringProperties, InitialFormIdempotent)
{
    for (int k = 0; k < 1000; ++k) {
        auto r = ring();
        auto f = rp.poly(r, 4, 4);
        QVec w(r->nvars());
        for (auto& x : w) x = frac(rp.uniform(-6, 6), rp.uniform(1, 3));
        auto in = initial_form_weight(f, w);
        ASSERT_EQ(initial_form_weight(in, w), in);
    }
}

TEST_F(PolyringProperties, HomogeneousIsOwnInitialForm)
{
    for (int k = 0; k < 1000; ++k) {
        auto r = ring();
        size_t n = r->nvars();
        QVec d(n);
        for (auto& x : d) x = rp.uniform(1, 3);
        // build a d-homogeneous polynomial from monomials of one weight
        Exp e0 = rp.exponent(n, 3);
        Q target = dot(d, e0);
        std::vector<Term> ts{{e0, Q(rp.uniform(1, 5))}};
        for (int t = 0; t < 30; ++t) {
            auto e = rp.exponent(n, 6);
            if (dot(d, e) == target) ts.emplace_back(e, Q(rp.uniform(1, 5)));
        }
        auto f = Polynomial::from_terms(r, ts);
        ASSERT_TRUE(is_homogeneous(f, d));
        ASSERT_EQ(initial_form_weight(f, d), f);
    }
}

TEST_F(PolyringProperties, InitialMonomialMultiplicative)
{
    for (int k = 0; k < 1000; ++k) {
        auto r = ring();
        auto o = rp.order(r->nvars());
        auto f = rp.poly(r, 3, 3), g = rp.poly(r, 3, 3);
        ASSERT_EQ(initial_monomial_order(f * g, o), initial_monomial_order(f, o) * initial_monomial_order(g, o));
    }
}
