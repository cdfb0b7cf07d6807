#include "support.hpp"

#include "sepgroid/selftest.hpp"

#include <doctest.h>

using namespace sepgroid;
using namespace testing;

TEST_CASE("norm length") {
    const SeparatedGraph g2 = fixture("g2");
    CHECK(norm_length(g2, epath_of(g2, W(g2, "e:f1 e:f2 e:f2* e:f1*"))) == TPart{{1, 2}});
    const SeparatedGraph g3 = fixture("g3");
    CHECK(norm_length(g3, epath_of(g3, free_idem(g3, "p", {3}))) == TPart{{1, 3}});
    CHECK(norm_length(g3, epath_of(g3, W(g3, "v:p"))).empty());
    CHECK(norm_length(g3, epath_of(g3, W(g3, "v:w"))).empty());
}

TEST_CASE("germ composition") {
    const SeparatedGraph g3 = fixture("g3");
    const SemifinitePath x = P(g3, "[v:p] ; free(inf)");
    const Germ a = make_germ(g3, x, GermWeight{{}, {{1, 1}}}, x);
    const Germ b = make_germ(g3, x, GermWeight{{}, {{1, 2}}}, x);
    CHECK(compose(g3, a, b) == make_germ(g3, x, GermWeight{{}, {{1, 3}}}, x));
    CHECK(compose(g3, a, inverse(g3, a)) == unit(g3, x));
    CHECK(compose(g3, unit(g3, x), a) == a);
    CHECK_THROWS_AS(make_germ(g3, x, GermWeight{{}, {{1, 1}}}, P(g3, "[v:w] ; reg( ; f1)")), DomainError);
}

TEST_CASE("germs of elements") {
    const SeparatedGraph g3 = fixture("g3");
    const SemifinitePath x = P(g3, "[v:p] ; free(inf)");
    const Germ a = germ_of(g3, W(g3, "a:p.1"), x);
    CHECK(a.x == x);
    CHECK(a.y == x);
    CHECK(a.weight == GermWeight{{}, {{1, 1}}});

    const SeparatedGraph g2 = fixture("g2");
    const Germ b = germ_of(g2, W(g2, "e:f1 e:f2*"), P(g2, "[v:w] ; reg(f2 ; f1)"));
    CHECK(b.x == P(g2, "[v:w] ; reg(f1 ; f1)"));
    CHECK(b.y == P(g2, "[v:w] ; reg(f2 ; f1)"));
    CHECK(b.weight == GermWeight{});

    const SemifinitePath y = P(g2, "[v:w] ; reg(f1 f2 ; f2)");
    CHECK(germ_of(g2, W(g2, "e:f1 e:f1*"), y) == unit(g2, y));
    CHECK_THROWS_AS(germ_of(g2, W(g2, "e:f1 e:f2*"), P(g2, "[v:w] ; reg( ; f1)")), DomainError);
}

TEST_CASE("bisection membership") {
    const SeparatedGraph g3 = fixture("g3");
    const SemifinitePath x = P(g3, "[v:p] ; free(inf)");
    const Germ a = germ_of(g3, W(g3, "a:p.1"), x);
    CHECK(in_bisection(g3, a, W(g3, "a:p.1")));
    CHECK_FALSE(in_bisection(g3, a, W(g3, "a:p.1*")));
    CHECK(in_bisection(g3, inverse(g3, a), W(g3, "a:p.1*")));
    for (const char *e : {"v:p", "a:p.1 a:p.1*", "b:p.1.1 b:p.1.1*", "a:p.1 a:p.1 a:p.1* a:p.1*"}) {
        CAPTURE(e);
        CHECK(in_bisection(g3, unit(g3, x), W(g3, e)) == filter_contains(g3, x, W(g3, e)));
    }
}

TEST_CASE("bisection endpoints") {
    const SeparatedGraph g3 = fixture("g3");
    auto [s1, r1] = bisection_endpoints(g3, W(g3, "a:p.1"));
    CHECK(co_equal(g3, s1, Z(g3, "Z(v:p)")));
    CHECK(co_equal(g3, r1, Z(g3, "Z(a:p.1 a:p.1*)")));
    auto [s2, r2] = bisection_endpoints(g3, W(g3, "b:p.1.1"));
    CHECK(co_equal(g3, s2, Z(g3, "Z(v:w)")));
    CHECK(co_equal(g3, r2, Z(g3, "Z(b:p.1.1 b:p.1.1*)")));
    const Element e = W(g3, "a:p.1 b:p.1.1 e:f1 e:f1* b:p.1.1* a:p.1*");
    auto [s3, r3] = bisection_endpoints(g3, e);
    CHECK(co_equal(g3, s3, r3));
    CHECK(co_equal(g3, s3, co_of_elements(g3, {e})));
}

TEST_CASE("bisection families") {
    const SeparatedGraph g3 = fixture("g3");
    CHECK(is_bisection_family(g3, {W(g3, "a:p.1"), W(g3, "b:p.1.1")}));
    CHECK_FALSE(is_bisection_family(g3, {W(g3, "v:p"), W(g3, "a:p.1 a:p.1*")}));
    CHECK(is_bisection_family(g3, {W(g3, "a:p.1")}));
}

TEST_CASE("groupoid laws on samples") {
    for (const char *n : {"g0", "g1", "g2", "g3"}) {
        CAPTURE(n);
        const PropertyResult r = prop_groupoid_laws(fixture(n), 500, 4);
        CHECK(r.ok());
        CHECK(r.passed == 500);
    }
}

TEST_CASE("germ text round trip") {
    const SeparatedGraph g2 = fixture("g2");
    const Germ b = germ_of(g2, W(g2, "e:f1 e:f2*"), P(g2, "[v:w] ; reg(f2 ; f1)"));
    CHECK(parse_germ(g2, germ_text(g2, b)) == b);
}
