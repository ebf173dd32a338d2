#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reflex/engine.hpp"
#include "reflex/presentation.hpp"

using namespace reflex;

TEST_CASE("parser: coxeter macro, abbreviations, chains, errors") {
    Presentation p = parse_presentation(
        "gens: s1 s2 s3\n"
        "coxeter: w(3,3,4)\n");
    CHECK(p.relators.size() == 6);
    // w(3,3,4) -> involutions + (s1 s2)^3, (s1 s3)^3, (s2 s3)^4
    CHECK(p.relators[3]->str() == "(s1 s2)^3");
    CHECK(p.relators[5]->str() == "(s2 s3)^4");

    Presentation q = parse_presentation(
        "gens: s1 s3\n"
        "s1^2\ns3^2\n"
        "(s1 s3)^2 = (s3 s1)^2\n");
    CHECK(q.relators.size() == 3);

    Presentation t = parse_presentation(
        "gens: s1 s2 s3\n"
        "let t = s1 s2 s3\n"
        "coxeter: w(4,6,10)\n"
        "t^5 = s1 t^5 s1 = s3 t^5 s3\n");
    CHECK(t.relators.size() == 8);

    CHECK_THROWS_AS(parse_presentation("gens: s1\ns4^2\n"), WordError);
    CHECK_THROWS_AS(parse_presentation("s1^2\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: s1\n"), ParseError);
}

TEST_CASE("parse-print round trip") {
    const char* texts[] = {
        "gens: s1 s2 s3\ncoxeter: w(3,3,4)\n(s2 s3)^2 = (s1 s2^s3)^3\n",
        "gens: a b\na^2\nb^2\n(a b)^3\n",
        "gens: s1 s2 s3\nlet t = s1 s2 s3\ncoxeter: w(4,3,10)\nt^5 = s1 t^5 s1\n",
    };
    for (const char* text : texts) {
        Presentation p = parse_presentation(text);
        Presentation q = parse_presentation(p.print());
        REQUIRE(p.relator_letters == q.relator_letters);
    }
}

TEST_CASE("Todd-Coxeter on small known groups") {
    // dihedral of order 6
    Presentation d3 = parse_presentation("gens: a b\na^2\nb^2\n(a b)^3\n");
    TCResult r = todd_coxeter(d3);
    CHECK(r.completed);
    CHECK(r.order == 6);

    // symmetric group S4 as w(3,3,2)... use the Coxeter presentation of type A3
    Presentation s4 = parse_presentation("gens: s1 s2 s3\ncoxeter: w(3,2,3)\n");
    CHECK(todd_coxeter(s4).order == 24);

    // the free product C2 * C2 is infinite: overflow
    Presentation inf = parse_presentation("gens: a b\na^2\nb^2\n");
    TCResult ro = todd_coxeter(inf, 500);
    CHECK_FALSE(ro.completed);

    // cyclic group of order 12 with redundant relators
    Presentation c12 = parse_presentation("gens: a\na^12\na^24\n");
    CHECK(todd_coxeter(c12).order == 12);
}

TEST_CASE("both strategies agree across the corpus") {
    const char* texts[] = {
        "gens: a b\na^2\nb^2\n(a b)^7\n",
        "gens: s1 s2 s3\ncoxeter: w(3,3,4)\n(s2 s3)^2 = (s1 s2^s3)^3\n",
        "gens: s1 s2 s3\ns1^2\ns2^2\ns3^2\n(s2 s3)^4\n(s1 s2)^2 = (s1 s3)^2 = (s2 s3)^2\n",
    };
    for (const char* text : texts) {
        Presentation p = parse_presentation(text);
        TCResult a = todd_coxeter(p, 100000, TCStrategy::TableScan);
        TCResult b = todd_coxeter(p, 100000, TCStrategy::RelatorScan);
        REQUIRE(a.completed);
        REQUIRE(b.completed);
        REQUIRE(a.order == b.order);
    }
}

TEST_CASE("enumeration independent of relator order") {
    Presentation p1 = parse_presentation(
        "gens: s1 s2 s3\ncoxeter: w(3,3,4)\n(s2 s3)^2 = (s1 s2^s3)^3\n");
    Presentation p2 = parse_presentation(
        "gens: s1 s2 s3\n(s2 s3)^2 = (s1 s2^s3)^3\ncoxeter: w(3,3,4)\n");
    CHECK(todd_coxeter(p1).order == todd_coxeter(p2).order);
}

TEST_CASE("relations_hold on matrix groups") {
    EntryContext ctx(catalog_entry("G12.A1"));
    Presentation good = parse_presentation(
        "gens: s1 s2 s3\ncoxeter: w(3,3,4)\n(s1 s2^s3)^6\n");
    CHECK(relations_hold(ctx.rep(), good));
    // a deliberately wrong relator: (s1 s2)^5 has order 3, not 5
    Presentation bad = parse_presentation("gens: s1 s2 s3\n(s1 s2)^5\n");
    std::string which;
    CHECK_FALSE(relations_hold(ctx.rep(), bad, which));
    CHECK(!which.empty());
}

TEST_CASE("coset enumeration matches quotient closure order") {
    EntryContext ctx(catalog_entry("S2.r4"));
    Presentation p = parse_presentation(
        "gens: s1 s2 s3\ns1^2\ns2^2\ns3^2\n(s2 s3)^4\n(s1 s2)^2 = (s1 s3)^2 = (s2 s3)^2\n");
    CHECK(todd_coxeter(p).order == ctx.closure().order());
}

TEST_CASE("parser rejects malformed input without crashing") {
    CHECK_THROWS(parse_presentation("gens: s1 s2\n(s1 s2\n"));
    CHECK_THROWS(parse_presentation("gens: s1 s2\ns1^\n"));
    CHECK_THROWS(parse_presentation("gens: s1 s1\ns1^2\n"));
    CHECK_THROWS(parse_presentation("gens: s1 s2\ncoxeter: w(3,3,4)\n"));  // needs 3 gens
    CHECK_THROWS(parse_presentation("gens: s1 s2 s3\nlet t\n"));
    CHECK_THROWS(parse_presentation("gens: s1 s2 s3\n1 = 1\n"));
}
