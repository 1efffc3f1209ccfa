// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any criterion fails.

#include "gdeg/gdeg.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

using namespace gdeg;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool c, const std::string& why)
    {
        if (!c && ok) note = why;
        ok = ok && c;
    }
};

double since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string first_failure(const StepReport& r) { return r.failures.empty() ? "" : r.failures.front(); }

struct Gr36Context {
    Gr36Data D = Gr36Data::load();
    GroebnerBasis gb;
    double gb_seconds = 0;
    std::optional<Gr36Cluster> C;
    const Gr36Cluster& cluster()
    {
        if (!C) C = gr36_cluster(D);
        return *C;
    }
};

Outcome crit1(Gr36Context& X)
{
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    X.gb = gr36_gb(X.D);
    auto r = verify_reduced_gb(X.D, X.gb);
    X.gb_seconds = since(t0);
    o.require(r.ok, first_failure(r));
    o.require(X.gb_seconds < 300, "slower than five minutes");
    o.note = o.ok ? "54 elements, 54 squarefree quadratic leads, " + std::to_string(X.gb_seconds) + " s" : o.note;
    return o;
}

Outcome crit2(Gr36Context& X)
{
    Outcome o;
    auto r = verify_lifts_univ(X.D, X.gb, X.cluster());
    o.require(r.ok, first_failure(r));
    if (o.ok) o.note = "54 lifts term-for-term";
    return o;
}

Outcome crit3(Gr36Context& X)
{
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    auto r = verify_seed_faces(X.D, X.gb, X.cluster());
    double s = since(t0);
    o.require(r.ok, first_failure(r));
    o.require(s < 600, "slower than ten minutes");
    if (o.ok) o.note = std::to_string(X.cluster().graph.seeds.size()) + " seeds, " + std::to_string(s) + " s";
    return o;
}

Outcome crit4()
{
    Outcome o;
    auto r = gr25_lifts_check(read_lines(data_path("gr2n/gr25_lifts.txt")));
    o.require(r.ok, r.failure);
    if (o.ok) o.note = "5 lifted relations";
    return o;
}

Outcome crit5()
{
    Outcome o;
    size_t total = 0;
    for (int n = 4; n <= 7; ++n) {
        auto r = toric_weight_check(n, n <= 6);
        total += r.triangulations;
        o.require(r.check.ok, "n = " + std::to_string(n) + ": " + r.check.failure);
    }
    if (o.ok) o.note = std::to_string(total) + " triangulations, n = 4..7";
    return o;
}

Outcome crit6()
{
    Outcome o;
    for (int n = 4; n <= 8; ++n) {
        auto r = crossing_ideal_check(n);
        o.require(r.ok, r.failure);
    }
    auto e = u_weight_example();
    o.require(e.ok, e.failure);
    if (o.ok) o.note = "n = 4..8, n = 8 weights -9/0/-1/-4";
    return o;
}

Outcome crit7()
{
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    size_t flips = 0;
    for (int n = 4; n <= 8; ++n) {
        auto s = nobody_sweep(n);
        flips += s.flips;
        o.require(s.check.ok, s.check.failure);
    }
    double sec = since(t0);
    o.require(sec < 120, "slower than two minutes");
    if (o.ok) o.note = std::to_string(flips) + " flips, " + std::to_string(sec) + " s";
    return o;
}

Outcome crit8()
{
    Outcome o;
    auto r = octagon_check(read_json(data_path("gr2n/octagon.json")));
    o.require(r.partition.ok, r.partition.failure);
    if (!r.g_vectors.ok) {
        std::string list;
        for (const auto& k : r.mismatched) list += (list.empty() ? "" : ",") + k;
        o.require(false, std::to_string(r.mismatched.size()) + " of " + std::to_string(r.compared) +
                             " printed g-vectors differ (" + list + ")");
    }
    if (o.ok) o.note = "15 g-vectors and the partition";
    return o;
}

Outcome crit9()
{
    Outcome o;
    for (int n = 4; n <= 6; ++n) {
        auto r = cross_oracle_check(n);
        o.require(r.ok, r.failure);
    }
    auto p = pentagon_buniv_check(read_json(data_path("gr2n/pentagon_buniv.json")));
    o.require(p.ok, p.failure);
    if (o.ok) o.note = "n = 4..6 and the pentagon matrix";
    return o;
}

Outcome crit10()
{
    Outcome o;
    for (int n : {4, 5}) {
        auto s = flatness_sweep(n, 3);
        o.require(s.report.ok, "n = " + std::to_string(n) + ": " + s.report.failure);
        if (n == 4) o.require(s.report.expected.at(Q(2)) == 20, "Gr(2,4) degree-2 count is not 20");
    }
    if (o.ok) o.note = "degrees <= 3, Gr(2,4) degree 2 count 20";
    return o;
}

Outcome crit11(Gr36Context& X)
{
    Outcome o;
    auto r = regression_facet_example(X.D, X.gb);
    o.require(r.ok, first_failure(r));
    if (o.ok) o.note = "v, w, term weights and both initial forms of h";
    return o;
}

Outcome crit12()
{
    Outcome o;
    std::vector<PropertyResult> rs{property_buchberger_determinism(1000), property_mutation_involution(1000),
                                   property_division(1000), property_standard_divisor_closed(1000)};
    for (const auto& r : rs) o.require(r.ok() && r.instances == 1000, r.name + ": " + r.first_failure);
    if (o.ok) o.note = "4 suites x 1000 instances";
    return o;
}

}  // namespace

int main()
{
    default_threads() = std::max(1u, std::thread::hardware_concurrency());
    Gr36Context X;
    std::vector<std::pair<std::string, std::function<Outcome()>>> crits{
        {"Gr(3,6) reduced Groebner basis", [&] { return crit1(X); }},
        {"Gr(3,6) lifts", [&] { return crit2(X); }},
        {"Gr(3,6) seed faces", [&] { return crit3(X); }},
        {"Gr(2,5) lifts", crit4},
        {"Gr(2,n) toric initial ideals", crit5},
        {"crossing ideal", crit6},
        {"Newton-Okounkov body mutation", crit7},
        {"octagon fixture", crit8},
        {"g-vector cross-oracle", crit9},
        {"flatness certificates", crit10},
        {"facet regression example", [&] { return crit11(X); }},
        {"property suites", crit12},
    };
    int failed = 0;
    for (size_t i = 0; i < crits.size(); ++i) {
        Outcome o;
        try {
            o = crits[i].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = std::string("error: ") + e.what();
        }
        if (!o.ok) ++failed;
        std::printf("%s criterion %zu: %s (%s)\n", o.ok ? "PASS" : "FAIL", i + 1, crits[i].first.c_str(), o.note.c_str());
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
