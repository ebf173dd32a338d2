#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "reflex/closure.hpp"
#include "reflex/engine.hpp"

using namespace reflex;

namespace {

// keeps the entry context (and its field) alive next to the generators
struct QuotGens {
    EntryContext ctx;
    std::vector<Mat> gens;
    explicit QuotGens(const char* id) : ctx(catalog_entry(id)) {
        const AffineData& ad = ctx.affine();
        gens = {ad.q[0], ad.q[1], ad.q[2]};
    }
};

}  // namespace

TEST_CASE("trivial closure") {
    Field F{FieldSpec{}};
    GroupClosure g({Mat::identity(&F, 2)});
    CHECK(g.order() == 1);
}

TEST_CASE("section-2 quotient closures have order 4r") {
    QuotGens a("S2.r4"), b("S2.r6"), c("S2.r8");
    CHECK(GroupClosure(a.gens).order() == 16);
    CHECK(GroupClosure(b.gens).order() == 24);
    CHECK(GroupClosure(c.gens).order() == 32);
}

TEST_CASE("A1 quotient: order 48, Lagrange, center, derived subgroup") {
    QuotGens qg("G12.A1");
    GroupClosure g(qg.gens);
    CHECK(g.order() == 48);
    for (const Mat& m : g.elements()) {
        long o = element_order(m, 100);
        REQUIRE(o > 0);
        REQUIRE(48 % o == 0);
    }
    auto z = g.center();
    CHECK(z.size() == 2);
    auto d = g.derived_subgroup();
    CHECK(48 % d.size() == 0);
}

TEST_CASE("closure independent of generator order; idempotent") {
    QuotGens qg("S2.r4");
    auto gens = qg.gens;
    GroupClosure a(gens);
    std::reverse(gens.begin(), gens.end());
    GroupClosure b(gens);
    CHECK(a.order() == b.order());
    std::vector<std::string> ka, kb;
    for (const auto& m : a.elements()) ka.push_back(m.key());
    for (const auto& m : b.elements()) kb.push_back(m.key());
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    CHECK(ka == kb);
}

TEST_CASE("element orders") {
    Field F{FieldSpec{}};
    CHECK(element_order(Mat::identity(&F, 2), 10) == 1);
    Mat neg = Mat::scalar(&F, 2, -F.one());
    CHECK(element_order(neg, 10) == 2);
    // overflow is a value
    Mat shear = Mat::identity(&F, 2);
    shear.at(0, 1) = F.one();
    CHECK(element_order(shear, 50) == 0);
}

TEST_CASE("fingerprints distinguish cyclic groups and are deterministic") {
    Field F(FieldSpec{{{"i", [] {
                            std::vector<long> v = {1, 0, 1};
                            return v;
                        }()}}});
    Mat c4 = Mat(&F, 1);
    c4.at(0, 0) = F.gen("i");
    Mat c2 = Mat(&F, 1);
    c2.at(0, 0) = -F.one();
    GroupClosure g4({c4}), g2({c2});
    CHECK_FALSE(g4.fingerprint() == g2.fingerprint());
    CHECK(g4.fingerprint() == g4.fingerprint());
    auto fp = g4.fingerprint();
    CHECK(fp.order == 4);
    CHECK(fp.abelian_invariants == std::vector<long>{4});
    // abelian: whole group is the center, derived subgroup trivial
    CHECK(g4.center().size() == 4);
    CHECK(g4.derived_subgroup().size() == 1);
}

TEST_CASE("closure overflow cap") {
    Field F{FieldSpec{}};
    Mat shear = Mat::identity(&F, 2);
    shear.at(0, 1) = F.one();
    CHECK_THROWS_AS(GroupClosure({shear}, 40), ClosureOverflow);
}

namespace {

// the imprimitive monomial group G(r, r/2, 2), built directly: 2x2 monomial
// matrices with entries r-th roots of unity whose entry product is +/-1
GroupClosure monomial_group(const Field& F, const FieldElement& zeta, long r) {
    Mat swap0(&F, 2), swap1(&F, 2), diag(&F, 2);
    swap0.at(0, 1) = F.one();
    swap0.at(1, 0) = F.one();
    swap1.at(0, 1) = zeta;
    swap1.at(1, 0) = zeta.inverse();
    diag.at(0, 0) = zeta;
    diag.at(1, 1) = -zeta.inverse();
    return GroupClosure({swap0, swap1, diag}, 1000);
}

}  // namespace

TEST_CASE("the section-2 quotients are the imprimitive monomial groups") {
    {
        QuotGens q("S2.r4");
        Field F{FieldSpec{{{"i", {1, 0, 1}}}}};
        GroupClosure M = monomial_group(F, F.gen("i"), 4);
        REQUIRE(M.order() == 16);
        CHECK(GroupClosure(q.gens).fingerprint() == M.fingerprint());
    }
    {
        QuotGens q("S2.r6");
        Field F{FieldSpec{{{"z", {1, -1, 1}}}}};
        GroupClosure M = monomial_group(F, F.gen("z"), 6);
        REQUIRE(M.order() == 24);
        CHECK(GroupClosure(q.gens).fingerprint() == M.fingerprint());
    }
    {
        QuotGens q("S2.r8");
        Field F{FieldSpec{{{"z", {1, 0, 0, 0, 1}}}}};
        GroupClosure M = monomial_group(F, F.gen("z"), 8);
        REQUIRE(M.order() == 32);
        CHECK(GroupClosure(q.gens).fingerprint() == M.fingerprint());
    }
}
