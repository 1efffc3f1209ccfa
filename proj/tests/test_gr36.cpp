#include "gdeg/gdeg.hpp"

#include <gtest/gtest.h>

using namespace gdeg;

namespace {

struct Shared {
    Gr36Data D = Gr36Data::load();
    GroebnerBasis gb = gr36_gb(D);
    Gr36Cluster C = gr36_cluster(D);
};

const Shared& S()
{
    static const Shared s;
    return s;
}

Polynomial P(const std::string& s) { return parse_polynomial(S().D.ring, s); }

void expect_ok(const StepReport& r)
{
    EXPECT_TRUE(r.ok) << r.step << ": " << (r.failures.empty() ? "" : r.failures.front());
}

std::set<std::string> init_strings(const GroebnerBasis& gb, const QVec& w)
{
    std::set<std::string> s;
    for (const auto& g : gb.elements) s.insert(initial_form_weight(g, w).str());
    return s;
}

}  // namespace

TEST(Gr36Data, RingAndGrading)
{
    const auto& D = S().D;
    ASSERT_EQ(D.ring->nvars(), 22u);
    EXPECT_EQ(D.ring->vars().front(), "p123");
    EXPECT_EQ(D.ring->vars()[19], "p456");
    EXPECT_EQ(D.ring->vars()[20], "X");
    QVec d(22, Q(1));
    d[20] = d[21] = 2;
    EXPECT_EQ(D.ring->d(), d);
    EXPECT_EQ(D.extra_relations.size(), 7u);
    EXPECT_EQ(D.lineality.size(), 6u);
    EXPECT_EQ(D.appendix_gb.size(), 54u);
    EXPECT_EQ(D.appendix_lifts.size(), 54u);
}

TEST(Gr36Data, RaysLinealityAndGrading)
{
    expect_ok(verify_gr36_data(S().D, S().gb));
    // w as a plain sum of the rays
    const auto& D = S().D;
    QVec w(22, Q(0));
    for (const auto& r : D.rays.rows)
        for (size_t i = 0; i < 22; ++i) w[i] += r[i];
    EXPECT_EQ(w, D.w);
    EXPECT_EQ(D.w[20], Q(27));
    EXPECT_EQ(D.w[21], Q(27));
}

TEST(BuildIex, Generators)
{
    const auto& D = S().D;
    auto I = build_Iex(D);
    EXPECT_EQ(I.gens.size(), 37u);
    for (const auto& g : I.gens) EXPECT_EQ(weighted_degree(g, D.ring->d()), std::optional<Q>(Q(2))) << g.str();
    auto rel = P("p236*p456 - p246*p356 + p256*p346");
    bool found = false;
    for (const auto& g : I.gens)
        if (g == rel || g == -rel) found = true;
    EXPECT_TRUE(found);
    auto four = P("p135*p246 - p134*p256 - p126*p345 - p145*p236");
    EXPECT_NE(std::find(I.gens.begin(), I.gens.end(), four), I.gens.end());
}

TEST(BuildIex, ThreeTermRelationsVanishOnAPoint)
{
    // oracle: Pluecker coordinates of an explicit 3 x 6 matrix
    const auto& D = S().D;
    auto pt = gr36_point(*D.ring);
    std::vector<Q> x;
    for (const auto& n : D.ring->vars()) x.push_back(pt.at(n));
    auto rels = three_term_relations(D.ring);
    EXPECT_EQ(rels.size(), 30u);
    for (const auto& g : rels) EXPECT_EQ(evaluate(g, x), Q(0)) << g.str();
    for (const auto& g : D.extra_relations) EXPECT_EQ(evaluate(g, x), Q(0)) << g.str();
}

TEST(ReducedBasis, MatchesAppendix)
{
    expect_ok(verify_reduced_gb(S().D, S().gb));
    EXPECT_EQ(S().gb.elements.size(), 54u);
}

TEST(ReducedBasis, FAndG)
{
    const auto& D = S().D;
    auto o = D.order();
    auto mine = monic_strings(S().gb.elements, o);
    auto f = P("p135*p246 - p156*p234 - Y - p123*p456 - X - p126*p345");
    EXPECT_TRUE(mine.count(make_monic(f, o).str()));
    auto tail = -(P("p123") * P("p156*p246*p345 + p156*p234*p456 + p126*p345*p456")) -
                P("p126") * P("p135*p234*p456 + p156*p234*p345");
    auto g = P("X*Y") + tail;
    EXPECT_TRUE(mine.count(make_monic(g, o).str()));
}

TEST(Lifts, MatchAppendix)
{
    expect_ok(verify_lifts_univ(S().D, S().gb, S().C));
}

TEST(Lifts, PrintedExamples)
{
    const auto& D = S().D;
    auto L = lifted_ideal(S().gb, D.rays);
    auto mine = monic_strings(L.generators, L.order);
    auto lift = [&](const std::string& s) { return make_monic(parse_polynomial(L.ext, s), L.order).str(); };
    EXPECT_TRUE(mine.count(lift("p145*p236 - t4*X - t8*t9*t10*t11*t15*t16*p123*p456")));
    EXPECT_TRUE(mine.count(lift("p245*p356 - t3*t12*t16*p345*p256 - t5*t6*t9*p235*p456")));
    // the coefficient of p156*p234 in the lift of f
    auto fl = lift_polynomial(P("p135*p246 - p156*p234 - Y - p123*p456 - X - p126*p345"), D.rays, L.ext);
    auto want = parse_polynomial(L.ext, "t2*t3*t4*t5*t6*t7*t10*t11*t14*t16*p156*p234").terms()[0].first;
    bool found = false;
    for (const auto& t : fl.terms())
        if (t.first == want) found = true;
    EXPECT_TRUE(found) << fl.str();
}

TEST(SeedFaces, AllSeeds)
{
    auto r = verify_seed_faces(S().D, S().gb, S().C);
    expect_ok(r);
    EXPECT_EQ(r.details.at("seeds").get<size_t>(), 50u);
}

TEST(SeedFaces, PrintedFaceExample)
{
    const auto& D = S().D;
    std::vector<size_t> idx;
    for (int k : D.face_rays) idx.push_back(k - 1);
    EXPECT_EQ(D.face_rays, (std::vector<int>{1, 3, 8, 12}));
    auto ws = D.rays.sum_of(idx);
    EXPECT_EQ(cone_membership(S().gb, ws), ConeClass::Boundary);
    for (size_t k : idx) EXPECT_NE(std::find(D.face_seed.begin(), D.face_seed.end(), D.ray_to_variable[k]), D.face_seed.end());
}

TEST(Regression, FacetExample)
{
    auto r = regression_facet_example(S().D, S().gb);
    expect_ok(r);
    // the printed last term carries the other sign
    auto diff = r.details.at("printed_terms_with_other_sign");
    ASSERT_EQ(diff.size(), 1u);
    EXPECT_EQ(diff[0].get<std::string>(), "p123*p146*p256*p345");
}

TEST(StanleyReisner, MatchesInitialIdeal)
{
    auto r = verify_stanley_reisner(S().D, S().gb, S().C);
    expect_ok(r);
    // X and Y have degree 2, so degree 1 holds the 20 Pluecker coordinates
    auto c = r.details.at("standard_monomials");
    EXPECT_EQ(c.at("0").get<size_t>(), 1u);
    EXPECT_EQ(c.at("1").get<size_t>(), 20u);
}

TEST(Verify, UnknownStep)
{
    EXPECT_THROW(gr36_verify("bogus"), Error);
}

class Gr36Properties : public ::testing::Test {
protected:
    RandomPolys rp{707};
};

TEST_F(Gr36Properties, PositiveRayCombinationsAreInterior)
{
    const auto& D = S().D;
    auto leads = init_strings(S().gb, D.w);
    for (int k = 0; k < 1000; ++k) {
        std::vector<Q> c(16);
        for (auto& x : c) x = frac(rp.uniform(1, 9), rp.uniform(1, 3));
        auto w = D.rays.combination(c);
        ASSERT_EQ(cone_membership(S().gb, w), ConeClass::Interior) << "instance " << k;
        ASSERT_EQ(init_strings(S().gb, w), leads) << "instance " << k;
    }
}

TEST_F(Gr36Properties, SeedFaceInteriorsShareInitialIdeal)
{
    const auto& D = S().D;
    const auto& C = S().C;
    std::map<size_t, std::set<std::string>> base;
    for (int k = 0; k < 1000; ++k) {
        size_t s = rp.uniform(0, static_cast<int>(C.graph.seeds.size()) - 1);
        auto names = seed_names(C, s);
        std::vector<size_t> face;
        for (size_t r = 0; r < 16; ++r)
            if (std::find(names.begin(), names.end(), D.ray_to_variable[r]) != names.end()) face.push_back(r);
        ASSERT_EQ(face.size(), 4u);
        if (!base.count(s)) base[s] = init_strings(S().gb, D.rays.sum_of(face));
        std::vector<Q> c(16, Q(0));
        for (size_t r : face) c[r] = frac(rp.uniform(1, 9), rp.uniform(1, 3));
        auto w = D.rays.combination(c);
        // lineality directions do not move the initial forms
        for (const auto& l : D.lineality) {
            Q a = rp.uniform(-3, 3);
            for (size_t i = 0; i < w.size(); ++i) w[i] += a * l[i];
        }
        ASSERT_EQ(cone_membership(S().gb, w), ConeClass::Boundary) << "instance " << k;
        ASSERT_EQ(init_strings(S().gb, w), base[s]) << "instance " << k;
    }
}
