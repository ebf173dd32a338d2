#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "reflex/engine.hpp"
#include "reflex/hnf.hpp"
#include "reflex/lattice.hpp"

using namespace reflex;

TEST_CASE("hnf: canonical form, membership, preimage") {
    IntMat rows = {{2, 0, 4}, {0, 3, 6}, {2, 3, 10}};
    IntMat h = hnf_rows(rows);
    CHECK(h.size() == 2);
    CHECK(hnf_member(h, {2, 0, 4}));
    CHECK(hnf_member(h, {2, 3, 10}));
    CHECK_FALSE(hnf_member(h, {1, 0, 2}));

    // order independence
    std::mt19937 rng(99);
    IntMat shuffled = rows;
    for (int it = 0; it < 10; ++it) {
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(hnf_rows(shuffled) == h);
    }

    // preimage: x with x*(2,0) + y*(0,2) in span{(4,0),(0,2)} -> x even, y anything
    IntMat A = {{2, 0}, {0, 2}};
    IntMat L = {{4, 0}, {0, 2}};
    IntMat P = preimage_lattice(A, L);
    CHECK(hnf_member(P, {2, 0}));
    CHECK(hnf_member(P, {0, 1}));
    CHECK_FALSE(hnf_member(P, {1, 0}));
}

TEST_CASE("covector extraction and failure") {
    EntryContext ctx(catalog_entry("S2.r4"));
    const auto& b = ctx.affine().b;
    // identity is the zero translation
    Covector z = covector_of(Mat::identity(&ctx.field(), 3), b);
    CHECK(z.is_zero());
    // e1 and e2 are translations
    Mat e1 = ctx.eval_rep("(s2 s3)^2 (s1 s3)^2");
    Mat e2 = ctx.eval_rep("(s2 s3)^2 (s1 s2)^2");
    CHECK(is_translation(e1, b));
    CHECK(is_translation(e2, b));
    CHECK_FALSE(covector_of(e1, b).is_zero());
    // a reflection is not a translation
    CHECK_FALSE(is_translation(ctx.eval_rep("s1"), b));
    CHECK_THROWS_AS(covector_of(ctx.eval_rep("s1"), b), NotTranslation);
}

TEST_CASE("covector additivity and equivariance on sampled pairs") {
    EntryContext ctx(catalog_entry("S2.r4"));
    const auto& b = ctx.affine().b;
    const ReflectionRep& rep = ctx.rep();
    // sample translations: products of conjugates of e1, e2
    std::vector<Mat> pool;
    const char* words[] = {"(s2 s3)^2 (s1 s3)^2", "(s2 s3)^2 (s1 s2)^2"};
    for (const char* w : words) {
        Mat t = ctx.eval_rep(w);
        pool.push_back(t);
        for (int g = 0; g < 3; ++g) pool.push_back(rep.s[g] * t * rep.s[g]);
    }
    std::mt19937 rng(7);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    int done = 0;
    while (done < 100) {
        Mat g = pool[pick(rng)], h = pool[pick(rng)];
        ++done;
        REQUIRE(covector_of(g * h, b) == covector_of(g, b) + covector_of(h, b));
    }
    // equivariance: covector(w g w^-1) = act(covector(g), w)
    for (const Mat& g : pool)
        for (int s = 0; s < 3; ++s) {
            Mat conj = rep.s[s] * g * rep.s[s].inverse();
            REQUIRE(covector_of(conj, b) == act(covector_of(g, b), rep.s[s]));
        }
}

TEST_CASE("lattice span: rank, membership, seed-order independence") {
    EntryContext ctx(catalog_entry("S2.r4"));
    std::vector<Covector> seeds = {ctx.covector("e1"), ctx.covector("e2"), ctx.covector("c1"),
                                   ctx.covector("c2"), ctx.covector("c3")};
    TranslationLattice L = TranslationLattice::span(seeds, ctx.rep());
    CHECK(L.rank() == 4);
    CHECK(L.rank() <= 2 * ctx.field().degree());
    for (const auto& s : seeds) CHECK(L.member(s));
    std::mt19937 rng(3);
    for (int it = 0; it < 5; ++it) {
        std::shuffle(seeds.begin(), seeds.end(), rng);
        TranslationLattice L2 = TranslationLattice::span(seeds, ctx.rep());
        REQUIRE(L2 == L);
    }
}

TEST_CASE("coefficient ideal and module closure on the A1 form") {
    EntryContext ctx(catalog_entry("G12.A1"));
    const TranslationLattice& L = ctx.lattice();
    CHECK(L.rank() == 4);
    FieldElement r = ctx.field().gen("r");
    for (const auto& v : L.basis_covectors()) CHECK(L.member(v.scaled(r)));
    auto gens = coefficient_ideal_gens(L, ctx.covector("c1"), ctx.order_basis());
    IdealHandle I(&ctx.order_basis(), gens);
    CHECK(I.contains(ctx.field().one()));  // c1 itself lies in N
}

TEST_CASE("linear system solver produces checkable witnesses") {
    Field F{FieldSpec{}};
    // x + y = 1; x + y = 2 is infeasible
    KLinearSystem sys;
    sys.rows = {{F.one(), F.one()}, {F.one(), F.one()}};
    sys.rhs = {F.one(), F.from_rational(2)};
    sys.labels = {"first", "second"};
    auto res = solve_or_refute(sys);
    REQUIRE(std::holds_alternative<InfeasibilityWitness>(res));
    CHECK(recheck_witness(sys, std::get<InfeasibilityWitness>(res)));

    // x + y = 1; x - y = 0 is solvable
    KLinearSystem ok;
    ok.rows = {{F.one(), F.one()}, {F.one(), -F.one()}};
    ok.rhs = {F.one(), F.zero()};
    auto res2 = solve_or_refute(ok);
    REQUIRE(std::holds_alternative<std::vector<FieldElement>>(res2));
}

TEST_CASE("anti-fixed line: c_i o s_i = -c_i") {
    EntryContext ctx(catalog_entry("S2.r4"));
    for (int i = 0; i < 3; ++i) {
        std::string n = "c" + std::to_string(i + 1);
        Covector c = ctx.covector(n);
        CHECK(act(c, ctx.rep().s[i]) == -c);
    }
}

TEST_CASE("the W(4,4,6) extension splits: explicit refutation of the non-split claim") {
    // sigma(s_i) = s_i t_i with t_1 = (1+2z) c1, t_2 = t_3 = (-2-2z) c_i lies in
    // the group (each t_i is in N) and satisfies every relator of the verified
    // order-24 presentation of G'; its image closes to a group of order 24
    // meeting N trivially. Verified here by direct matrix arithmetic.
    EntryContext ctx(catalog_entry("S2.r6"));
    const Field* F = &ctx.field();
    FieldElement z = F->gen("z");
    std::vector<FieldElement> x = {F->one() + z * Rat(2), F->from_rational(-2) - z * Rat(2),
                                   F->from_rational(-2) - z * Rat(2)};
    const ReflectionRep& rep = ctx.rep();
    const auto& b = ctx.affine().b;
    auto translation = [&](const Covector& cv) {
        Mat t = Mat::identity(F, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t.at(i, j) += b[i] * cv.mu[j];
        return t;
    };
    const TranslationLattice& N = ctx.lattice();
    std::vector<Mat> sig;
    for (int i = 0; i < 3; ++i) {
        Covector ti = ctx.covector("c" + std::to_string(i + 1)).scaled(x[i]);
        REQUIRE(N.member(ti));  // the lift stays inside the group
        sig.push_back(rep.s[i] * translation(ti));
    }
    for (int i = 0; i < 3; ++i) REQUIRE((sig[i] * sig[i]).is_identity());
    Mat r1 = (sig[0] * sig[1]).pow(2), r2 = (sig[0] * sig[2]).pow(2), r3 = (sig[1] * sig[2]).pow(3);
    REQUIRE(r1 == r2);
    REQUIRE(r2 == r3);
    REQUIRE((sig[1] * sig[2]).pow(6).is_identity());
    GroupClosure H(sig, 1000);
    CHECK(H.order() == 24);  // = |G'|: the section is injective, so (**) splits
    // and H meets the translation subgroup only in the identity
    int translations_in_H = 0;
    for (const Mat& h : H.elements())
        if (is_translation(h, b)) ++translations_in_H;
    CHECK(translations_in_H == 1);  // the identity
}
