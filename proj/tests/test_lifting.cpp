#include "gdeg/gdeg.hpp"

#include <gtest/gtest.h>

using namespace gdeg;

namespace {

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

struct Gr36 {
    Gr36Data D = Gr36Data::load();
    GroebnerBasis gb = gr36_gb(D);
    LiftedIdeal L = lifted_ideal(gb, D.rays);

    static const Gr36& get()
    {
        static Gr36 g;
        return g;
    }
};

const LiftedIdeal& gr25()
{
    static LiftedIdeal L = lifted_plucker(5);
    return L;
}

std::set<std::string> strings(const std::vector<Polynomial>& ps)
{
    std::set<std::string> s;
    for (const auto& p : ps) s.insert(p.str());
    return s;
}

// non-crossing diagonal sets = faces of C for Gr(2,n); indices into rays_C(n)
std::vector<std::vector<size_t>> gr2n_faces(int n)
{
    auto ds = all_diagonals(n);
    std::vector<std::vector<size_t>> out;
    for (size_t mask = 0; mask < (size_t(1) << ds.size()); ++mask) {
        std::vector<size_t> S;
        bool ok = true;
        for (size_t a = 0; a < ds.size() && ok; ++a) {
            if (!(mask >> a & 1)) continue;
            for (size_t b : S)
                if (crossing(ds[a], ds[b])) ok = false;
            S.push_back(a);
        }
        if (ok) out.push_back(S);
    }
    return out;
}

}  // namespace

TEST(MuVector, Monomial)
{
    auto R = rays_C(5);
    auto r = plucker_ring(5);
    auto f = P(r, "p13*p24^2");
    auto mu = mu_vector(f, R);
    for (size_t k = 0; k < R.m(); ++k) EXPECT_EQ(mu[k], dot(R.rows[k], f.terms()[0].first));
}

TEST(MuVector, GbElementAttainsAtLead)
{
    const auto& G = Gr36::get();
    for (const auto& g : G.gb.elements) {
        auto lead = leading_term(g, G.gb.order).first;
        auto mu = mu_vector(g, G.D.rays);
        for (size_t k = 0; k < G.D.rays.m(); ++k) ASSERT_EQ(mu[k], dot(G.D.rays.rows[k], lead)) << g.str();
    }
}

TEST(MuVector, Gr25Relation)
{
    const auto& L = gr25();
    auto R = plucker_relation(L.base, 5, 1, 2, 3, 4);
    auto lifted = lift_polynomial(R, L.rays, L.ext);
    auto want = P(L.ext, "p13*p24 - p12*p34*t24*t25 - p14*p23*t13");
    EXPECT_TRUE(lifted == want || lifted == -want) << lifted.str();
}

TEST(Lift, Gr25PrintedRelations)
{
    auto r = gr25_lifts_check(read_lines(data_path("gr2n/gr25_lifts.txt")));
    EXPECT_TRUE(r.ok) << r.failure;
}

TEST(Lift, Gr36LiftOfF)
{
    const auto& G = Gr36::get();
    auto lines = read_lines(data_path("gr36/lifts.txt"));
    auto printed_f = P(G.L.ext, lines[52]);
    auto f = P(G.D.ring, read_lines(data_path("gr36/reduced_gb.txt"))[52]);
    EXPECT_EQ(make_monic(lift_polynomial(f, G.D.rays, G.L.ext), G.L.order), make_monic(printed_f, G.L.order));
}

TEST(Lift, MonomialLiftsToItself)
{
    const auto& L = gr25();
    auto m = P(L.base, "p12*p35");
    EXPECT_EQ(lift_polynomial(m, L.rays, L.ext), P(L.ext, m.str()));
}

TEST(Lift, NonIntegralExponentIsAnError)
{
    auto r = Ring::make({"x", "y"});
    RayMatrix R({QVec{frac(1, 3), Q(0)}});
    EXPECT_THROW(lift_polynomial(P(r, "x - y"), R), Error);
}

TEST(LiftedIdeal, Gr25IsGroebnerBasis)
{
    const auto& L = gr25();
    EXPECT_EQ(L.generators.size(), 5u);
    EXPECT_TRUE(is_groebner_basis(L.generators, L.order));
}

TEST(LiftedIdeal, Gr36MatchesAppendix)
{
    const auto& G = Gr36::get();
    EXPECT_EQ(G.L.generators.size(), 54u);
    EXPECT_EQ(monic_strings(G.L.generators, G.L.order), monic_strings(parse_polynomials(G.L.ext, G.D.appendix_lifts), G.L.order));
    EXPECT_TRUE(is_groebner_basis(G.L.generators, G.L.order));
}

TEST(LiftedIdeal, MonomialIdeal)
{
    auto r = Ring::make({"x", "y"});
    Ideal I(r, {P(r, "x^2"), P(r, "x*y^3")});
    RayMatrix R({QVec{Q(1), Q(2)}, QVec{Q(-1), Q(0)}});
    auto o = OrderSpec::lex(2);
    o.weight_rows.push_back(QVec{Q(1), Q(1)});
    auto L = lifted_ideal(I, o, R);
    EXPECT_EQ(strings(L.generators), strings({P(L.ext, "x^2"), P(L.ext, "x*y^3")}));
}

TEST(RayInvariance, Gr36ShiftByGrading)
{
    const auto& G = Gr36::get();
    EXPECT_TRUE(ray_invariance_check(G.gb.elements, G.D.rays, G.D.rays));
    auto rows = G.D.rays.rows;
    for (auto& r : rows)
        for (size_t i = 0; i < r.size(); ++i) r[i] += G.D.ring->d()[i];
    EXPECT_TRUE(ray_invariance_check(G.gb.elements, G.D.rays, RayMatrix(rows, G.D.rays.names)));
    // l_1 .. l_6 as well, a different one per ray
    rows = G.D.rays.rows;
    for (size_t k = 0; k < rows.size(); ++k)
        for (size_t i = 0; i < rows[k].size(); ++i) rows[k][i] += Q(static_cast<long>(k) - 3) * G.D.lineality[k % 6][i];
    EXPECT_TRUE(ray_invariance_check(G.gb.elements, G.D.rays, RayMatrix(rows, G.D.rays.names)));
}

TEST(RayInvariance, Gr25ShiftByTorus)
{
    auto gb = plucker_gb(5);
    auto R = rays_C(5);
    auto ps = all_pairs(5);
    auto rows = R.rows;
    for (size_t i = 0; i < ps.size(); ++i)
        if (ps[i].first == 1 || ps[i].second == 1) rows[0][i] += 1;
    RayMatrix R2(rows, R.names);
    // direct recomputation oracle
    for (const auto& g : gb.elements) EXPECT_EQ(lift_polynomial(g, R), lift_polynomial(g, R2, lifted_ring(g.ring(), R)));
    EXPECT_TRUE(ray_invariance_check(gb.elements, R, R2));
    // a non-lineality shift breaks it
    rows[0][0] += 1;
    EXPECT_FALSE(ray_invariance_check(gb.elements, R, RayMatrix(rows, R.names)));
}

TEST(Fiber, AtOneIsOriginalIdeal)
{
    const auto& G = Gr36::get();
    auto F = fiber(G.L, std::vector<Q>(16, Q(1)));
    auto gb = groebner_basis(F, G.gb.order);
    EXPECT_TRUE(same_reduced_basis(gb, G.gb));
}

TEST(Fiber, Gr36SeedFace)
{
    const auto& G = Gr36::get();
    std::vector<size_t> S;
    for (int k : G.D.face_rays) S.push_back(k - 1);
    auto a = face_point(S, 16);
    for (size_t k = 0; k < 16; ++k) EXPECT_EQ(a[k], (k == 0 || k == 2 || k == 7 || k == 11) ? Q(0) : Q(1));
    auto F = fiber(G.L, a);
    auto init = initial_ideal(G.gb, G.D.rays.sum_of(S));
    auto o = G.gb.order;
    EXPECT_TRUE(ideals_equal(F, init, o));
    for (const auto& g : groebner_basis(F, o).elements) EXPECT_EQ(g.size(), 2u) << g.str();
}

TEST(Fiber, GenericPointsShareGradedDimensions)
{
    const auto& L = gr25();
    std::vector<Q> a{Q(2), frac(-1, 3), Q(5), Q(7), frac(3, 2)}, b{Q(-4), Q(1), frac(2, 9), Q(3), Q(-1)};
    auto da = StandardMonomialBasis::of(groebner_basis(fiber(L, a), L.base_order)).count_by_degree(L.base->d(), Q(3));
    auto db = StandardMonomialBasis::of(groebner_basis(fiber(L, b), L.base_order)).count_by_degree(L.base->d(), Q(3));
    EXPECT_EQ(da, db);
}

TEST(FacePoint, Extremes)
{
    EXPECT_EQ(face_point({}, 4), std::vector<Q>(4, Q(1)));
    EXPECT_EQ(face_point({0, 1, 2, 3}, 4), std::vector<Q>(4, Q(0)));
    EXPECT_THROW(face_point({4}, 4), Error);
    // all rays: the fiber is init_C
    const auto& L = gr25();
    auto F = fiber(L, face_point({0, 1, 2, 3, 4}, 5));
    auto gb = plucker_gb(5);
    EXPECT_TRUE(ideals_equal(F, initial_ideal(gb, rays_C(5).row_sum()), gb.order));
}

TEST(OneParamFamily, ZeroWeight)
{
    auto gb = plucker_gb(5);
    auto F = one_param_family(gb, QVec(10, Q(0)));
    for (size_t i = 0; i < F.generators.size(); ++i) EXPECT_EQ(F.generators[i], P(F.ring, gb.elements[i].str()));
}

TEST(OneParamFamily, SpecialFibersAgree)
{
    for (int n = 4; n <= 6; ++n) {
        auto L = lifted_plucker(n);
        auto gb = plucker_gb(n);
        for (const auto& S : gr2n_faces(n)) {
            if (S.empty()) continue;
            auto F = one_param_family(gb, L.rays.sum_of(S));
            // t = 0 in the one-parameter family against t_tau in the multi-parameter lift
            auto a = specialize_family(F, L.base, Q(0));
            auto b = fiber(L, face_point(S, L.m()));
            ASSERT_TRUE(ideals_equal(a, b, gb.order)) << n;
            ASSERT_TRUE(ideals_equal(specialize_family(F, L.base, Q(1)), gb.ideal, gb.order));
        }
    }
}

TEST(OneParamFamily, Gr24TreeWeight)
{
    Triangulation T(4, {arc(1, 3)});
    auto gb = plucker_gb(4);
    auto F = one_param_family(gb, weight_vector_wT(T));
    auto I = specialize_family(F, gb.ideal.ring, Q(0));
    auto want = Ideal(gb.ideal.ring, {P(gb.ideal.ring, "p12*p34 - p13*p24")});
    EXPECT_TRUE(ideals_equal(I, want, gb.order));
}

TEST(Rees, Correspondence)
{
    EXPECT_TRUE(rees_correspondence_check(gr25()));
    EXPECT_TRUE(rees_correspondence_check(Gr36::get().L));
    auto bad = gr25();
    auto ts = bad.generators[0].terms();
    ts.back().first.back() += 1;
    bad.generators[0] = Polynomial::from_terms(bad.ext, ts);
    EXPECT_FALSE(rees_correspondence_check(bad));
}

TEST(Flatness, Gr24DegreeTwo)
{
    auto s = flatness_sweep(4, 2);
    EXPECT_TRUE(s.report.ok) << s.report.failure;
    EXPECT_EQ(s.report.expected.at(Q(2)), 20u);
    // brute force: 21 quadratic monomials in six variables minus the multiple p13*p24 of the lead
    EXPECT_EQ(s.report.expected.at(Q(2)), 21u - 1u);
}

TEST(Flatness, Gr25TriangulationFaces)
{
    auto L = lifted_plucker(5);
    auto ds = all_diagonals(5);
    std::vector<std::vector<Q>> pts;
    for (const auto& T : triangulations(5)) {
        std::vector<size_t> S;
        for (const auto& d : T.diagonals) S.push_back(std::find(ds.begin(), ds.end(), d) - ds.begin());
        pts.push_back(face_point(S, 5));
    }
    EXPECT_EQ(pts.size(), 5u);
    auto rep = flatness_certificate(L, Q(2), pts);
    EXPECT_TRUE(rep.ok) << rep.failure;
    EXPECT_EQ(rep.expected.at(Q(2)), 50u);
}

TEST(Flatness, MismatchIsReported)
{
    // a wrong lifted ideal (t never vanishes from the leading term) must fail somewhere
    auto L = lifted_plucker(4);
    L.generators[0] = L.generators[0] * Polynomial::variable(L.ext, L.ext->nvars() - 1);
    auto rep = flatness_certificate(L, Q(2), {std::vector<Q>(L.m(), Q(0))});
    EXPECT_FALSE(rep.ok);
    EXPECT_NE(rep.failure.find("degree"), std::string::npos);
}

class LiftingProperties : public ::testing::Test {
protected:
    RandomPolys rp{404};
};

TEST_F(LiftingProperties, WPrimeHomogeneity)
{
    const auto& L = Gr36::get().L;
    for (const auto& g : L.generators) ASSERT_TRUE(is_homogeneous(g, L.w_prime)) << g.str();
    for (int k = 0; k < 1000; ++k) {
        const auto& M = k % 2 ? L : gr25();
        std::vector<Q> c(M.m());
        for (auto& x : c) x = frac(rp.uniform(0, 9), rp.uniform(1, 4));
        auto v = homogeneity_weight(M, c);
        for (const auto& g : M.generators) ASSERT_TRUE(is_homogeneous(g, v)) << "instance " << k;
    }
}

TEST_F(LiftingProperties, UniqueConstantTermAndRoundTrip)
{
    for (int n = 4; n <= 7; ++n) {
        auto L = lifted_plucker(n);
        EXPECT_TRUE(unique_constant_term(L));
        auto F = fiber(L, std::vector<Q>(L.m(), Q(1)));
        for (size_t i = 0; i < L.base_gb.size(); ++i) EXPECT_EQ(F.gens[i], L.base_gb[i]);
    }
    EXPECT_TRUE(unique_constant_term(Gr36::get().L));
}

TEST_F(LiftingProperties, FaceFiberConsistency)
{
    std::map<int, LiftedIdeal> L;
    std::map<int, GroebnerBasis> G;
    std::map<int, std::vector<std::vector<size_t>>> faces;
    for (int n = 4; n <= 6; ++n) {
        L.emplace(n, lifted_plucker(n));
        G.emplace(n, plucker_gb(n));
        faces.emplace(n, gr2n_faces(n));
    }
    for (int k = 0; k < 1000; ++k) {
        int n = rp.uniform(4, 6);
        const auto& fs = faces.at(n);
        const auto& S = fs[rp.uniform(0, static_cast<int>(fs.size()) - 1)];
        auto F = fiber(L.at(n), face_point(S, L.at(n).m()));
        auto init = initial_ideal(G.at(n), L.at(n).rays.sum_of(S));
        ASSERT_TRUE(ideals_equal(F, init, G.at(n).order)) << "instance " << k;
    }
}

TEST_F(LiftingProperties, ZeroPatternGradedDimensions)
{
    const auto& L = gr25();
    auto expected = StandardMonomialBasis::of(plucker_gb(5)).count_by_degree(L.base->d(), Q(2));
    for (int k = 0; k < 1000; ++k) {
        size_t mask = rp.uniform(0, 31);
        auto point = [&] {
            std::vector<Q> a(5, Q(0));
            for (size_t i = 0; i < 5; ++i)
                if (!(mask >> i & 1)) a[i] = frac(rp.uniform(1, 9) * (rp.uniform(0, 1) ? 1 : -1), rp.uniform(1, 5));
            return a;
        };
        auto a = point(), b = point();
        auto da = StandardMonomialBasis::of(groebner_basis(fiber(L, a), L.base_order)).count_by_degree(L.base->d(), Q(2));
        auto db = StandardMonomialBasis::of(groebner_basis(fiber(L, b), L.base_order)).count_by_degree(L.base->d(), Q(2));
        ASSERT_EQ(da, db) << "instance " << k;
        ASSERT_EQ(da, expected) << "instance " << k;
    }
}
