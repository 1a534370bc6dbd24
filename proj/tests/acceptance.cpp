// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Set DISSOC_ACCEPTANCE_LONG=1 to also run the order-8 exhaustive sweep.

#include "dissoc/branching.hpp"
#include "dissoc/canonical.hpp"
#include "dissoc/families.hpp"
#include "dissoc/harness.hpp"
#include "dissoc/oracle.hpp"
#include "dissoc/random_graphs.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace dissoc;
using namespace dissoc::harness;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream note;
    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            note << " [failed: " << what << "]";
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body)
{
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.pass = false;
        o.note << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("criterion %d: %s  %s (%.2fs)%s\n", id, o.pass ? "PASS" : "FAIL", title.c_str(), secs,
                o.note.str().c_str());
    std::fflush(stdout);
}

std::string canon(const FamilySpec& s) { return canonical_form(build(s)); }

std::set<std::string> forms(const ExtremalRecord& r)
{
    auto v = r.canonical_forms();
    return {v.begin(), v.end()};
}

void report_outcome(Outcome& o, const Report& r)
{
    o.require(r.passed(), r.suite + " violations=" + std::to_string(r.violations.size()));
    for (std::size_t i = 0; i < std::min<std::size_t>(3, r.violations.size()); ++i)
        o.note << " {" << r.violations[i].check << " " << r.violations[i].witness << " " << r.violations[i].detail
               << "}";
    o.note << " checks=" << r.checks;
}

} // namespace

int main()
{
    criterion(1, "paper fixtures", [](Outcome& o) {
        auto phi = [](const Graph& g) { return count(g).phi; };
        o.require(phi(build(FamilySpec::complete(5))) == 10, "phi(K5)=10");
        o.require(phi(build(FamilySpec::cycle(4))) == 6, "phi(C4)=6");
        o.require(phi(build(FamilySpec::complete_bipartite(2, 3))) == 8, "phi(K23)=8");
        o.require(phi(build(FamilySpec::complete_bipartite(3, 3))) == 11, "phi(K33)=11");
        o.require(phi(prism()) == 9, "phi(prism)=9");
        o.require(phi(build(FamilySpec::path(3))) == 3, "phi(P3)=3");
    });

    criterion(2, "closed-form family table t=1..3, all K_m* variants", [](Outcome& o) {
        const auto r = verify_family_values(3);
        report_outcome(o, r);
        std::size_t variants = 0;
        for (const auto& row : r.details["families"]) variants += row["variants"].get<std::size_t>();
        o.note << " graphs=" << variants;
    });

    criterion(3, "exhaustive extremal sweeps", [](Outcome& o) {
        const SweepFilter tf{.triangle_free = true};
        auto expect = [&](int n, const SweepFilter& f, std::uint64_t max, std::set<std::string> classes,
                          const std::string& label) {
            const auto r = sweep(n, f, Quantity::phi);
            o.require(r.max_value == max, label + " max=" + std::to_string(r.max_value));
            o.require(forms(r) == classes, label + " classes (" + std::to_string(r.extremal.size()) + ")");
            o.note << " " << label << "=" << r.max_value << "/" << r.extremal.size();
        };
        expect(4, tf, 6, {canon(FamilySpec::cycle(4))}, "n4tf");
        expect(5, tf, 8, {canon(FamilySpec::complete_bipartite(2, 3))}, "n5tf");
        expect(6, tf, 11, {canon(FamilySpec::complete_bipartite(3, 3))}, "n6tf");
        expect(7, tf, 18, {canon(FamilySpec::disjoint_union({FamilySpec::path(3), FamilySpec::cycle(4)}))}, "n7tf");
        expect(5, {}, 10,
               {canon(FamilySpec::k_star(5, 0)), canon(FamilySpec::k_star(5, 1)), canon(FamilySpec::k_star(5, 2))},
               "n5");
    });

    criterion(4, "universal bounds on every labeled graph n<=6", [](Outcome& o) {
        const auto r = verify_asymptotic_bounds(6);
        report_outcome(o, r);
        std::uint64_t graphs = 0;
        for (const auto& row : r.details["exhaustive"]) graphs += row["graphs"].get<std::uint64_t>();
        o.require(graphs == 1 + 1 + 2 + 8 + 64 + 1024 + 32768, "graph count");
        o.note << " exhaustive_graphs=" << graphs;
    });

    criterion(5, "oracle equivalence", [](Outcome& o) {
        std::uint64_t exhaustive = 0, random = 0, mismatches = 0;
        for (int n = 0; n <= 5; ++n) {
            const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
            for (std::uint64_t mask = 0; mask < total; ++mask, ++exhaustive) {
                const auto g = graph_from_edge_mask(n, mask);
                mismatches += enumerate_maximal(g) != oracle::enumerate_maximal_bruteforce(g);
            }
        }
        Rng rng(20240601);
        std::uniform_int_distribution<int> order(6, 12);
        const double ps[] = {0.2, 0.5, 0.8};
        for (int i = 0; i < 600; ++i, ++random) {
            const auto g = random_graph(order(rng), ps[i % 3], rng);
            mismatches += enumerate_maximal(g) != oracle::enumerate_maximal_bruteforce(g);
        }
        o.require(mismatches == 0, "mismatches=" + std::to_string(mismatches));
        o.note << " exhaustive=" << exhaustive << " random=" << random;
    });

    criterion(6, "recurrence suite", [](Outcome& o) {
        const auto r = verify_recurrences({.trials = 200, .min_order = 1, .max_order = 10, .seed = 7});
        report_outcome(o, r);
        o.require(r.details["pivot_graphs"] >= 200 && r.details["leaf_instances"] >= 100 &&
                      r.details["double_leaf_instances"] >= 50 && r.details["union_pairs"] >= 100,
                  "instance counts");
        o.note << " pivots=" << r.details["pivots"] << " strengthened=" << r.details["strengthened_pivots"];
    });

    criterion(7, "path/cycle bounds n<=20", [](Outcome& o) { report_outcome(o, verify_path_cycle_bounds(20)); });

    if (const char* env = std::getenv("DISSOC_ACCEPTANCE_LONG"); env && std::string(env) == "1") {
        criterion(8, "order-8 exhaustive sweep (opt-in)", [](Outcome& o) {
            const auto r = sweep(8, {}, Quantity::phi, {.allow_long = true});
            std::set<std::string> expected;
            for (int a = 0; a <= 2; ++a)
                for (int b = a; b <= 2; ++b)
                    expected.insert(canon(FamilySpec::disjoint_union({FamilySpec::k_star(4, a), FamilySpec::k_star(4, b)})));
            o.require(r.max_value == 36, "max=" + std::to_string(r.max_value));
            o.require(forms(r) == expected, "classes=" + std::to_string(r.extremal.size()));
            o.note << " max=" << r.max_value << " classes=" << r.extremal.size();
        });
    } else {
        std::printf("criterion 8: EXCLUDED  asymptotic tightness and full order>=8 characterization "
                    "(set DISSOC_ACCEPTANCE_LONG=1 for the order-8 sweep)\n");
    }

    std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
