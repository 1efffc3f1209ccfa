// Command-line front end. Exit codes: 0 success, 1 a check failed, 2 bad usage or input.

#include "gdeg/gdeg.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

using namespace gdeg;

namespace {

struct UsageError : Error {
    using Error::Error;
};

struct Common {
    std::string ring, ideal, order, rays, point, weight, json_out;
    std::string data_dir;
    int max_degree = 2;
    unsigned threads = 1;
    bool timing = false;
};

json load_json_arg(const std::string& path, const char* what)
{
    if (path.empty()) throw UsageError(std::string("missing --") + what);
    return read_json(path);
}

RingPtr load_ring(const Common& c)
{
    if (!c.ring.empty()) return ring_from_json(read_json(c.ring));
    auto j = load_json_arg(c.ideal, "ideal");
    if (!j.contains("vars")) throw UsageError("no ring: pass --ring or put \"vars\" in the ideal file");
    return ring_from_json(j);
}

Ideal load_ideal(const Common& c, const RingPtr& r)
{
    auto j = load_json_arg(c.ideal, "ideal");
    if (!j.contains("generators")) throw UsageError("ideal file has no \"generators\"");
    auto gens = j.at("generators").get<std::vector<std::string>>();
    if (gens.empty()) throw UsageError("the ideal has no generators");
    return Ideal::parse(r, gens);
}

OrderSpec load_order(const Common& c, const Ring& r)
{
    if (c.order.empty()) return OrderSpec::weighted_revlex(r.d());
    if (c.order == "lex" || c.order == "grevlex" || c.order == "weighted") return order_from_json(json(c.order), r);
    return order_from_json(read_json(c.order), r);
}

RayMatrix load_rays(const Common& c)
{
    auto j = load_json_arg(c.rays, "rays");
    if (j.is_array()) return rays_from_json(j);
    auto R = rays_from_json(j.at("rays"));
    if (j.contains("names")) R = RayMatrix(R.rows, j["names"].get<std::vector<std::string>>());
    return R;
}

std::vector<Q> parse_qlist(const std::string& s)
{
    std::vector<Q> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto b = tok.find_first_not_of(' ');
        if (b == std::string::npos) throw UsageError("empty entry in a number list");
        out.push_back(parse_rational(tok.substr(b)));
    }
    return out;
}

json gvec_json(const GVector& g) { return json(std::vector<int>(g.begin(), g.end())); }

int emit(const Common& c, json report, bool ok, const std::function<void(std::ostream&)>& text = {})
{
    json out{{"format", 1}, {"ok", ok}};
    for (auto& [k, v] : report.items()) out[k] = v;
    std::string s = out.dump(1);
    if (!c.json_out.empty()) {
        std::ofstream f(c.json_out);
        if (!f) throw UsageError("cannot write '" + c.json_out + "'");
        f << s << "\n";
        if (text) text(std::cout);
    } else {
        std::cout << s << "\n";
    }
    return ok ? 0 : 1;
}

json poly_text(const std::vector<Polynomial>& ps, const OrderSpec& o)
{
    json a = json::array();
    for (const auto& p : ps) a.push_back(str_ordered(p, o));
    return a;
}

void print_lines(std::ostream& os, const json& a)
{
    for (const auto& s : a) os << s.get<std::string>() << "\n";
}

// ---- generic ideal commands -------------------------------------------

int cmd_gb(const Common& c)
{
    auto r = load_ring(c);
    auto I = load_ideal(c, r);
    auto o = load_order(c, *r);
    GbOptions opt;
    opt.threads = c.threads;
    auto gb = groebner_basis(I, o, opt);
    json inits = json::array();
    for (const auto& g : gb.elements) inits.push_back(initial_monomial_order(g, o).str());
    json els = poly_text(gb.elements, o);
    json rep{{"command", "gb"}, {"ring", ring_json(*r)}, {"order", order_json(o)}, {"elements", els},
             {"certificate", {{"count", gb.elements.size()}, {"initial_monomials", inits}, {"reduced", gb.reduced},
                              {"buchberger_criterion", is_groebner_basis(gb.elements, o)}}}};
    return emit(c, rep, true, [&](std::ostream& os) { print_lines(os, els); });
}

int cmd_initial(const Common& c)
{
    auto r = load_ring(c);
    auto I = load_ideal(c, r);
    auto o = load_order(c, *r);
    if (c.weight.empty()) throw UsageError("missing --weight");
    auto w = parse_qlist(c.weight);
    if (w.size() != r->nvars()) throw UsageError("weight has the wrong length");
    auto gb = groebner_basis(I, o);
    auto cls = cone_membership(gb, w);
    if (cls == ConeClass::Outside) throw UsageError("weight outside closed cone of supplied order");
    auto in = initial_ideal(gb, w);
    json gens = poly_text(in.gens, o);
    json rep{{"command", "initial"}, {"cone", cone_class_name(cls)}, {"generators", gens}};
    return emit(c, rep, true, [&](std::ostream& os) { print_lines(os, gens); });
}

int cmd_trop_check(const Common& c)
{
    auto r = load_ring(c);
    auto I = load_ideal(c, r);
    auto o = load_order(c, *r);
    auto gb = groebner_basis(I, o);
    json rep{{"command", "trop-check"}, {"positivity_witness", totally_positive_witness(gb)}};
    bool ok = totally_positive_witness(gb);
    if (!c.weight.empty()) {
        auto w = parse_qlist(c.weight);
        if (w.size() != r->nvars()) throw UsageError("weight has the wrong length");
        auto cls = cone_membership(gb, w);
        rep["cone"] = cone_class_name(cls);
        if (cls == ConeClass::Outside) throw UsageError("weight outside closed cone of supplied order");
        auto in = initial_ideal(gb, w);
        auto igb = groebner_basis(in, o);
        bool mono = contains_monomial(in);
        rep["initial_contains_monomial"] = mono;
        rep["initial_positivity_witness"] = totally_positive_witness(igb);
        ok = !mono && totally_positive_witness(igb);
    }
    return emit(c, rep, ok);
}

LiftedIdeal load_lifted(const Common& c)
{
    auto r = load_ring(c);
    auto I = load_ideal(c, r);
    auto o = load_order(c, *r);
    auto R = load_rays(c);
    for (const auto& row : R.rows)
        if (row.size() != r->nvars()) throw UsageError("ray length does not match the ring");
    auto gb = groebner_basis(I, o);
    for (size_t k = 0; k < R.m(); ++k)
        if (cone_membership(gb, R.rows[k]) == ConeClass::Outside)
            throw UsageError("ray " + R.names[k] + " is outside the closed cone of the order");
    return lifted_ideal(gb, R);
}

int cmd_lift(const Common& c)
{
    auto L = load_lifted(c);
    json gens = poly_text(L.generators, L.order);
    json rep{{"command", "lift"}, {"ring", ring_json(*L.ext)}, {"generators", gens},
             {"rees_correspondence", rees_correspondence_check(L)}, {"unique_constant_term", unique_constant_term(L)}};
    return emit(c, rep, rees_correspondence_check(L) && unique_constant_term(L),
                [&](std::ostream& os) { print_lines(os, gens); });
}

int cmd_fiber(const Common& c)
{
    auto L = load_lifted(c);
    if (c.point.empty()) throw UsageError("missing --point");
    auto a = parse_qlist(c.point);
    if (a.size() != L.m()) throw UsageError("point has the wrong length");
    auto F = fiber(L, a);
    auto gb = groebner_basis(F, L.base_order);
    json rep{{"command", "fiber"}, {"ring", ring_json(*L.base)}, {"generators", poly_text(F.gens, L.base_order)},
             {"reduced_basis", poly_text(gb.elements, L.base_order)}};
    return emit(c, rep, true, [&](std::ostream& os) { print_lines(os, rep["generators"]); });
}

int cmd_flatness(const Common& c)
{
    auto L = load_lifted(c);
    std::vector<std::vector<Q>> pts;
    if (!c.point.empty()) {
        std::stringstream ss(c.point);
        std::string p;
        while (std::getline(ss, p, ';')) {
            pts.push_back(parse_qlist(p));
            if (pts.back().size() != L.m()) throw UsageError("point has the wrong length");
        }
    } else {
        pts = flatness_points(L.m(), 0, 1);
    }
    GbOptions opt;
    opt.threads = c.threads;
    auto rep = flatness_certificate(L, Q(c.max_degree), pts, opt);
    auto counts = [](const std::map<Q, size_t>& m) {
        json j = json::object();
        for (const auto& [k, v] : m) j[k.get_str()] = v;
        return j;
    };
    json rows = json::array();
    for (const auto& r : rep.rows) {
        std::vector<std::string> p;
        for (const auto& q : r.point) p.push_back(q.get_str());
        rows.push_back({{"point", p}, {"counts", counts(r.counts)}, {"ok", r.ok}});
    }
    json j{{"command", "flatness"}, {"max_degree", c.max_degree}, {"expected", counts(rep.expected)}, {"points", rows}};
    if (!rep.ok) j["failure"] = rep.failure;
    return emit(c, j, rep.ok);
}

// ---- cluster ------------------------------------------------------------

IceQuiver load_seed(const std::string& path)
{
    auto j = load_json_arg(path, "seed");
    IceQuiver q;
    if (j.contains("matrix")) {
        auto b = j.at("matrix").get<std::vector<std::vector<int>>>();
        size_t m = j.at("mutable_count").get<size_t>();
        auto names = j.at("names").get<std::vector<std::string>>();
        return IceQuiver::from_matrix(ExchangeMatrix(m, b), names);
    }
    auto mut = j.at("mutable").get<std::vector<std::string>>();
    auto fro = j.value("frozen", std::vector<std::string>{});
    q.vertices = mut;
    q.vertices.insert(q.vertices.end(), fro.begin(), fro.end());
    q.mutable_count = mut.size();
    for (const auto& a : j.at("arrows")) q.arrows.emplace_back(a.at(0).get<std::string>(), a.at(1).get<std::string>());
    return q;
}

json matrix_json(const ExchangeMatrix& B) { return json{{"mutable_count", B.m}, {"rows", B.b}}; }

int cmd_cluster(const Common& c, const std::string& action, const std::string& seed, const std::string& k, size_t bound)
{
    auto Q0 = load_seed(seed);
    auto B = Q0.matrix();
    auto ring = Ring::make(Q0.vertices, true);
    Seed<Polynomial> s;
    s.B = B;
    for (size_t i = 0; i < Q0.vertices.size(); ++i) s.x.push_back(Polynomial::variable(ring, i));
    json rep{{"command", "cluster"}, {"action", action}};
    if (action == "mutate") {
        int idx = -1;
        for (size_t i = 0; i < B.m; ++i)
            if (Q0.vertices[i] == k) idx = static_cast<int>(i);
        if (idx < 0) {
            try {
                idx = std::stoi(k) - 1;
            } catch (...) {
                throw UsageError("unknown mutable vertex '" + k + "'");
            }
        }
        if (idx < 0 || static_cast<size_t>(idx) >= B.m) throw UsageError("mutation index out of range or frozen");
        auto t = mutate_seed(s, idx);
        std::vector<std::string> cl;
        for (const auto& x : t.x) cl.push_back(x.str());
        rep["matrix"] = matrix_json(t.B);
        rep["cluster"] = cl;
        return emit(c, rep, true);
    }
    if (action == "graph" || action == "sr-ideal") {
        auto G = exchange_graph(s, bound, c.threads);
        std::vector<std::string> vars;
        for (const auto& v : G.variables) vars.push_back(v.str());
        rep["seeds"] = G.seeds.size();
        rep["variables"] = vars;
        rep["clusters"] = G.seed_vars;
        if (action == "sr-ideal") {
            std::vector<std::string> names;
            for (size_t i = 0; i < G.variables.size(); ++i) names.push_back("z" + std::to_string(i + 1));
            auto zr = Ring::make(names);
            std::vector<size_t> id(G.variables.size());
            std::iota(id.begin(), id.end(), size_t(0));
            auto sr = cluster_complex_sr_ideal(zr, id, G.seed_vars);
            rep["ring"] = names;
            rep["generators"] = poly_strings(sr.gens);
        }
        return emit(c, rep, true);
    }
    if (action == "g-vectors") {
        auto L = principal_seed(B, Q0.vertices);
        auto G = exchange_graph(L.seed, bound, c.threads);
        json a = json::array();
        for (const auto& v : G.variables) a.push_back(g_vector(v, L.coefficient_vars, L.cluster_rows));
        rep["g_vectors"] = a;
        return emit(c, rep, true);
    }
    if (action == "b-univ") {
        rep["matrix"] = matrix_json(build_B_univ(B, bound));
        return emit(c, rep, true);
    }
    throw UsageError("unknown cluster action '" + action + "'");
}

// ---- Gr(2,n) ------------------------------------------------------------

json nobody_json(const Triangulation& T1, const Triangulation& T2)
{
    auto r = nobody_check(T1, T2);
    auto vs = [](const std::vector<GVector>& v) {
        json a = json::array();
        for (const auto& g : v) a.push_back(gvec_json(g));
        return a;
    };
    std::vector<std::string> c1, c2;
    for (const auto& a : T1.arcs()) c1.push_back(arc_label(a, T1.n));
    for (const auto& a : T2.arcs()) c2.push_back(arc_label(a, T2.n));
    json j{{"command", "nobody"}, {"T1", triangulation_label(T1)}, {"T2", triangulation_label(T2)},
           {"coordinates1", c1}, {"coordinates2", c2}, {"vertices1", vs(r.vertices1)},
           {"vertices2", vs(r.vertices2)}, {"mapped", vs(r.mapped)}, {"check", r.check.ok}};
    if (!r.check.ok) j["failure"] = r.check.failure;
    return j;
}

int cmd_nobody(const Common& c, int n, const std::string& t1, const std::string& t2)
{
    auto T1 = parse_triangulation(n, t1), T2 = parse_triangulation(n, t2);
    auto j = nobody_json(T1, T2);
    return emit(c, j, j["check"].get<bool>());
}

int cmd_gr2n(const Common& c, const std::string& action, int n, const std::string& T, const std::string& t1,
             const std::string& t2)
{
    if (n < 3) throw UsageError("--n must be at least 3");
    json rep{{"command", "gr2n"}, {"action", action}, {"n", n}};
    auto ring = plucker_ring(n);
    auto tri = [&] {
        if (T.empty()) throw UsageError("missing --T");
        return parse_triangulation(n, T);
    };
    if (action == "ideal") {
        rep["ring"] = ring_json(*ring);
        rep["generators"] = poly_strings(plucker_ideal(n).gens);
        return emit(c, rep, true);
    }
    if (action == "triangulations") {
        std::vector<std::string> ts;
        for (const auto& t : triangulations(n)) ts.push_back(triangulation_label(t));
        rep["triangulations"] = ts;
        return emit(c, rep, true);
    }
    if (action == "g-vectors") {
        auto t = tri();
        std::vector<std::string> coords;
        for (const auto& a : t.arcs()) coords.push_back(arc_label(a, n));
        json g = json::object();
        auto gs = all_comb_g_vectors(t);
        auto ps = all_pairs(n);
        for (size_t i = 0; i < ps.size(); ++i) g[arc_label(ps[i], n)] = gvec_json(gs[i]);
        rep["coordinates"] = coords;
        rep["g_vectors"] = g;
        return emit(c, rep, true);
    }
    if (action == "weights") {
        auto t = tri();
        json blocks = json::array();
        for (const auto& b : algorithm1_partition(t)) {
            std::vector<std::string> bl;
            for (const auto& a : b) bl.push_back(arc_label(a, n));
            blocks.push_back(bl);
        }
        rep["partition"] = blocks;
        rep["w_T"] = qvec_json(weight_vector_wT(t));
        rep["tree_weight"] = qvec_json(tree_weight(t));
        rep["u"] = qvec_json(u_weight(n));
        rep["vars"] = ring->vars();
        auto in = initial_ideal(plucker_gb(n), weight_vector_wT(t));
        rep["initial_ideal"] = poly_strings(in.gens);
        return emit(c, rep, true);
    }
    if (action == "lift") {
        if (n < 4) throw UsageError("--n must be at least 4 for lifts");
        auto L = lifted_plucker(n);
        rep["generators"] = poly_text(L.generators, L.order);
        auto chk = universal_coefficient_check(n);
        rep["universal_coefficients"] = chk.ok;
        if (!chk.ok) rep["failure"] = chk.failure;
        return emit(c, rep, chk.ok, [&](std::ostream& os) { print_lines(os, rep["generators"]); });
    }
    if (action == "nobody") return cmd_nobody(c, n, t1, t2);
    throw UsageError("unknown gr2n action '" + action + "'");
}

int cmd_gr36(const Common& c, const std::string& step)
{
    auto reps = gr36_verify(step, c.threads);
    bool ok = true;
    json steps = json::array();
    for (const auto& r : reps) {
        ok = ok && r.ok;
        auto j = r.to_json();
        if (!c.timing) j.erase("seconds");
        steps.push_back(j);
    }
    json rep{{"command", "gr36 verify"}, {"step", step}, {"steps", steps}};
    return emit(c, rep, ok, [&](std::ostream& os) {
        for (const auto& r : reps) {
            os << (r.ok ? "ok   " : "FAIL ") << r.step << "\n";
            for (const auto& f : r.failures) os << "     " << f << "\n";
        }
    });
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Groebner degenerations, cluster algebras and Grassmannian checks"};
    app.require_subcommand(1);
    app.fallthrough();
    Common c;
    app.add_option("--data-dir", c.data_dir, "fixture directory");
    app.add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1u, 1024u));
    app.add_option("--json", c.json_out, "write the JSON report here and print text on stdout");
    app.add_flag("--timing", c.timing, "include timings in reports");

    auto ideal_opts = [&](CLI::App* s, bool rays) {
        s->add_option("--ring", c.ring, "ring JSON");
        s->add_option("--ideal", c.ideal, "ideal JSON")->required();
        s->add_option("--order", c.order, "order JSON or lex/grevlex/weighted");
        if (rays) s->add_option("--rays", c.rays, "ray matrix JSON")->required();
    };
    auto gb = app.add_subcommand("gb", "reduced Groebner basis");
    ideal_opts(gb, false);
    auto ini = app.add_subcommand("initial", "initial ideal at a weight");
    ideal_opts(ini, false);
    ini->add_option("--weight", c.weight, "comma-separated weight")->required();
    auto trop = app.add_subcommand("trop-check", "positivity witness and monomial-freeness of an initial ideal");
    ideal_opts(trop, false);
    trop->add_option("--weight", c.weight, "comma-separated weight");
    auto lift = app.add_subcommand("lift", "lifted generators");
    ideal_opts(lift, true);
    auto fib = app.add_subcommand("fiber", "fiber at a point");
    ideal_opts(fib, true);
    fib->add_option("--point", c.point, "comma-separated point")->required();
    auto flat = app.add_subcommand("flatness", "graded dimensions of fibers");
    ideal_opts(flat, true);
    flat->add_option("--point", c.point, "points separated by ';' (default: t = 1 and every face point)");
    flat->add_option("--max-degree", c.max_degree, "degree bound")->check(CLI::NonNegativeNumber);

    std::string action, seed, k, T, t1, t2, step = "all";
    size_t bound = 10000;
    int n = 0;
    auto cl = app.add_subcommand("cluster", "seed mutation, exchange graphs and coefficients");
    cl->add_option("action", action, "mutate | graph | g-vectors | b-univ | sr-ideal")->required();
    cl->add_option("--seed", seed, "seed JSON")->required();
    cl->add_option("--k", k, "vertex name or 1-based index for mutate");
    cl->add_option("--bound", bound, "seed bound for the exchange graph");

    auto g2 = app.add_subcommand("gr2n", "Gr(2,n) combinatorics");
    g2->add_option("action", action, "ideal | triangulations | g-vectors | weights | lift | nobody")->required();
    g2->add_option("--n", n, "polygon size")->required();
    g2->add_option("--T", T, "diagonals, e.g. 13,14");
    g2->add_option("--T1", t1, "first triangulation");
    g2->add_option("--T2", t2, "second triangulation");

    auto nb = app.add_subcommand("nobody", "Newton-Okounkov body mutation check");
    nb->add_option("--n", n, "polygon size")->required();
    nb->add_option("--T1", t1, "first triangulation")->required();
    nb->add_option("--T2", t2, "second triangulation")->required();

    auto g36 = app.add_subcommand("gr36", "Gr(3,6) verification");
    std::string verb;
    g36->add_option("verb", verb, "verify")->required()->check(CLI::IsMember({"verify"}));
    g36->add_option("--step", step, "gb | data | lifts | stanley-reisner | regression | seeds | all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? 0 : 2;
    }
    try {
        if (!c.data_dir.empty()) data_dir() = c.data_dir;
        default_threads() = c.threads;
        if (*gb) return cmd_gb(c);
        if (*ini) return cmd_initial(c);
        if (*trop) return cmd_trop_check(c);
        if (*lift) return cmd_lift(c);
        if (*fib) return cmd_fiber(c);
        if (*flat) return cmd_flatness(c);
        if (*cl) return cmd_cluster(c, action, seed, k, bound);
        if (*g2) {
            if (action == "nobody" && (t1.empty() || t2.empty())) throw UsageError("nobody needs --T1 and --T2");
            return cmd_gr2n(c, action, n, T, t1, t2);
        }
        if (*nb) return cmd_nobody(c, n, t1, t2);
        if (*g36) return cmd_gr36(c, step);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
