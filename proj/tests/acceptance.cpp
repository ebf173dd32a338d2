#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <iostream>

#include "reflex/engine.hpp"

// Acceptance suite: one test case per criterion, one printed line per
// criterion. Criterion 7 carries a documented red: the W(4,4,6) sequence
// splits (explicit lift verified in test_lattice), so the stated certificate
// cannot exist for r=6; see the project notes.

using namespace reflex;

namespace {

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
                   .count() /
               1000.0;
    }
};

// runs the selected claim kinds on the entries; returns failures as text
std::string run_claims(const std::vector<std::string>& ids, const std::vector<std::string>& kinds,
                       int* checked = nullptr) {
    std::string failures;
    auto reports = verify_entries(ids, kinds, 0);
    for (const auto& r : reports) {
        if (!r.error.empty()) failures += r.entry + ": " + r.error + "\n";
        for (const auto& c : r.claims) {
            if (checked) ++*checked;
            if (c.status != "pass")
                failures += r.entry + " / " + c.label + ": " + c.witness + "\n";
        }
    }
    return failures;
}

void report(int n, bool pass, const std::string& what, double secs) {
    std::cout << "[criterion " << n << "] " << (pass ? "PASS" : "FAIL") << " - " << what << " ("
              << secs << " s)" << std::endl;
}

}  // namespace

TEST_CASE("criterion 1: the W(4,4,r) family, r in {4,6,8}") {
    Stopwatch sw;
    int checked = 0;
    std::string fails = run_claims({"S2.r4", "S2.r6", "S2.r8"},
                                   {"delta_zero", "param_poly", "cartan_value", "matrix_identity",
                                    "quotient_order", "quotient_structure", "word_order",
                                    "line_map", "presentation_order", "regeneration"},
                                   &checked);
    bool ok = fails.empty() && checked >= 25;
    double secs = sw.seconds();
    CHECK(fails == "");
    CHECK(checked >= 25);
    CHECK(secs < 5.0);
    report(1, ok && secs < 5.0, "Delta, relations (1)-(4), |G'| = 4r, presentations, char poly",
           secs);
}

TEST_CASE("criterion 2: the five order-48 forms") {
    Stopwatch sw;
    std::vector<std::string> ids = {"G12.A1", "G12.A2", "G12.A3", "G12.A4", "G12.A5"};
    std::string fails = run_claims(
        ids, {"delta_zero", "quotient_order", "presentation_order", "matrix_identity"});
    // (s2's3')^2 central of order 2 on the (3,3,4) form; equal fingerprints on all five
    GroupFingerprint first;
    bool structure = true;
    for (size_t k = 0; k < ids.size(); ++k) {
        EntryContext ctx(catalog_entry(ids[k]));
        const GroupClosure& g = ctx.closure();
        if (k == 0) {
            Mat z = ctx.eval_quot("(s2 s3)^2");
            auto center = g.center();
            int zi = g.index_of(z);
            bool central = zi >= 0 && std::find(center.begin(), center.end(), zi) != center.end();
            structure = structure && central && matrix_order(z, 4) == 2;
        }
        GroupFingerprint fp = g.fingerprint();
        if (k == 0)
            first = fp;
        else
            structure = structure && fp == first;
    }
    double secs = sw.seconds();
    CHECK(fails == "");
    CHECK(structure);
    CHECK(secs < 10.0);
    report(2, fails.empty() && structure && secs < 10.0,
           "order 48 by closure and enumeration, t'^4 = -1, central square, equal fingerprints",
           secs);
}

TEST_CASE("criterion 3: the order-96 D forms and condition tables") {
    Stopwatch sw;
    std::vector<std::string> ids = {"G13.D1p", "G13.D1m", "G13.D2p", "G13.D2m",
                                    "G13.D3p", "G13.D3m", "G13.D4p", "G13.D4m"};
    std::string fails = run_claims(ids, {"quotient_order", "presentation_order",
                                         "quotient_structure", "condition_table"});
    double secs = sw.seconds();
    CHECK(fails == "");
    CHECK(secs < 20.0);
    report(3, fails.empty() && secs < 20.0,
           "order 96 by closure and all four presentations, central z, |G'/<z>| = 48, "
           "Props 16-19 tables",
           secs);
}

TEST_CASE("criterion 4: the eighteen order-240 forms") {
    Stopwatch sw;
    std::vector<std::string> ids;
    for (int n = 1; n <= 18; ++n) ids.push_back("G22.G" + std::to_string(n));
    std::string fails = run_claims(
        ids, {"quotient_order", "matrix_identity", "quotient_structure", "presentation_order"});
    double secs = sw.seconds();
    CHECK(fails == "");
    CHECK(secs < 60.0);
    report(4, fails.empty() && secs < 60.0,
           "order 240 everywhere, derived index 2 with unique involution, t' scalars, "
           "three presentations",
           secs);
}

TEST_CASE("criterion 5: the eighteen characterizations with perturbed controls") {
    Stopwatch sw;
    std::vector<std::string> ids;
    for (int n = 1; n <= 18; ++n) ids.push_back("G22.G" + std::to_string(n));
    std::string fails = run_claims(ids, {"cartan_value", "condition_table"});
    double secs = sw.seconds();
    CHECK(fails == "");
    report(5, fails.empty(), "stated C-values hold; >= 3 Delta-violating perturbations falsify",
           secs);
}

TEST_CASE("criterion 6: the translation lattice suite") {
    Stopwatch sw;
    std::string fails =
        run_claims({"S2.r4", "G12.A1", "G13.D3p", "S4C.C2p"},
                   {"translation_identity", "lattice_rank", "module_closure", "coefficient_ideal"});
    double secs = sw.seconds();
    CHECK(fails == "");
    CHECK(secs < 60.0);
    report(6, fails.empty() && secs < 60.0,
           "relation set at r=4, ranks 4 and 8, module closures, ideal chains (2, sqrt2; "
           "(sqrt2) and (1+zeta))",
           secs);
}

TEST_CASE("criterion 7: non-splitness certificates (documented red at r=6)") {
    Stopwatch sw;
    std::vector<std::string> ids = {"S2.r4", "S2.r6", "S2.r8", "G12.A1", "S4A.A1p",
                                    "S4B.B1p", "S4C.C2p", "G13.D3p", "G22.G1"};
    auto reports = verify_entries(ids, {"split_obstruction"}, 0);
    std::string fails;
    int passcount = 0;
    for (const auto& r : reports)
        for (const auto& c : r.claims) {
            if (c.status == "pass")
                ++passcount;
            else
                fails += r.entry + ": " + c.witness + "\n";
        }
    double secs = sw.seconds();
    report(7, fails.empty(),
           "certificates for r in {4,8}, G12 (sqrt-2), A+ (2^{1/4}), B and C (sqrt2), "
           "D (1+zeta), G22 (1+i); r=6 refutes the source claim",
           secs);
    if (!fails.empty())
        std::cout << "  [criterion 7 detail] the verified state of r=6 is a genuine splitting:\n  "
                  << fails;
    CHECK(passcount >= 10);
    // as stated, the criterion demands the r=6 certificate too; it is left red
    // deliberately because the splitting exists and is verified elsewhere
    CHECK(fails == "");
}

TEST_CASE("criterion 8: property suites") {
    Stopwatch sw;
    // classify_order agrees with the exact 2x2 order for every reflection pair
    // in each enumerated quotient (one representative per quotient order)
    bool agree = true, lagrange = true;
    long pairs = 0;
    std::vector<std::string> finite_ids;
    for (const auto& e : catalog_entries())
        if (e.family == "S2" || e.family == "G12" || e.family == "G13" || e.family == "G22")
            finite_ids.push_back(e.id);
    REQUIRE(finite_ids.size() >= 34);
    for (const auto& id : finite_ids) {
        EntryContext ctx(catalog_entry(id));
        const GroupClosure& g = ctx.closure();
        const Field* F = &ctx.field();
        for (const Mat& m : g.elements()) {
            long o = element_order(m, 1000);
            if (o <= 0 || g.order() % o != 0) lagrange = false;
        }
        std::vector<Mat> reflections;
        for (const Mat& m : g.elements())
            if (m.trace().is_zero() && m.det() == -F->one()) reflections.push_back(m);
        REQUIRE(!reflections.empty());
        for (const Mat& u : reflections)
            for (const Mat& v : reflections) {
                Mat p = u * v;
                if (p.is_identity()) continue;
                ++pairs;
                OrderClass oc = classify_order(cartan(u, v));
                long exact = order_2x2(p);
                if (!(oc.kind == OrderClass::Finite && oc.order == exact)) agree = false;
            }
    }
    CHECK(agree);
    CHECK(lagrange);
    CHECK(pairs > 1000);
    // Todd-Coxeter vs closure equality and the twin checks ride on the claims
    std::string fails = run_claims({"S4A.A1p", "K1.A1m"}, {"galois_twin"});
    CHECK(fails == "");
    double secs = sw.seconds();
    report(8, agree && lagrange && fails.empty(),
           "classify_order vs exact orders and Lagrange over every enumerated quotient; "
           "Galois twins; randomized suites live in the unit tests",
           secs);
}

TEST_CASE("criterion 9: infinite-order witnesses for every infinite family") {
    Stopwatch sw;
    std::vector<std::string> ids;
    for (const auto& e : catalog_entries()) {
        if (e.family == "S4A" || e.family == "S4BC" || e.family == "K5") ids.push_back(e.id);
    }
    REQUIRE(ids.size() >= 30);
    int witnesses = 0;
    std::string fails;
    auto reports = verify_entries(ids, {"infinite_commutator_witness"}, 0);
    for (const auto& r : reports) {
        int here = 0;
        for (const auto& c : r.claims) {
            if (c.status == "pass")
                ++here;
            else
                fails += r.entry + ": " + c.witness + "\n";
        }
        if (here == 0) fails += r.entry + ": no witness claim\n";
        witnesses += here;
    }
    double secs = sw.seconds();
    CHECK(fails == "");
    CHECK(witnesses >= 30);
    report(9, fails.empty() && witnesses >= 30,
           "a certified infinite-order element for each family with infinite linear part", secs);
}
