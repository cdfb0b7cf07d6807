#include "oracle/rewriting.hpp"
#include "support.hpp"

#include "sepgroid/selftest.hpp"

#include <doctest.h>

using namespace sepgroid;
using namespace testing;

namespace {

CPath free_step(const SeparatedGraph &g, const std::string &p, int i, int power, int t) {
    const PrimeIndex pi = *g.find_prime(p);
    return CPath{g.free_vertex(pi), {Step{power, {}, g.beta(pi, i, t)}}};
}

Monomial free_mono(const SeparatedGraph &g, const std::string &v, std::vector<int> k, std::vector<int> l) {
    Monomial m = identity_monomial(g, vid(g, v));
    m.k = std::move(k);
    m.l = std::move(l);
    return m;
}

} // namespace

TEST_CASE("star swaps the body") {
    const SeparatedGraph g3 = fixture("g3");
    CHECK(star(Element::zero()).is_zero());
    const Element a = W(g3, "a:p.1");
    CHECK(a.mono().k == std::vector<int>{1});
    CHECK(a.mono().l == std::vector<int>{0});
    CHECK(star(a).mono().k == std::vector<int>{0});
    CHECK(star(a).mono().l == std::vector<int>{1});
    CHECK(star(a) == W(g3, "a:p.1*"));

    const SeparatedGraph g2 = fixture("g2");
    const Element f = W(g2, "e:f1");
    CHECK(f.mono().lhs.edges.size() == 1);
    CHECK(f.mono().rhs.edges.empty());
    CHECK(star(f).mono().lhs.edges.empty());
    CHECK(star(f).mono().rhs.edges.size() == 1);
}

TEST_CASE("monomial products") {
    const SeparatedGraph g3 = fixture("g3");
    auto r = mul_monomials(g3, free_mono(g3, "p", {2}, {1}), free_mono(g3, "p", {0}, {3}));
    REQUIRE(r);
    CHECK(r->k == std::vector<int>{2});
    CHECK(r->l == std::vector<int>{4});
    CHECK(oracle::check(g3, "a:p.1 a:p.1 a:p.1* a:p.1* a:p.1* a:p.1*",
                        to_word(g3, Element::triple(CPath{vid(g3, "p"), {}}, *r, CPath{vid(g3, "p"), {}}))) ==
          oracle::Verdict::Agree);

    const Monomial m = free_mono(g3, "p", {3}, {1});
    CHECK(mul_monomials(g3, identity_monomial(g3, vid(g3, "p")), m) == m);

    const SeparatedGraph g2 = fixture("g2");
    CHECK(mul(g2, W(g2, "e:f1 e:f2*"), W(g2, "e:f2")) == W(g2, "e:f1"));
}

TEST_CASE("translation") {
    const SeparatedGraph g1 = fixture("g1");
    SUBCASE("loop exponents become t variables") {
        const auto tr = translate(g1, free_mono(g1, "p", {1, 1}, {0, 0}), free_step(g1, "p", 1, 0, 1));
        REQUIRE(tr);
        CHECK(tr->path == free_step(g1, "p", 1, 1, 1));
        CHECK(tr->phi == TPart{{1, 1}});
    }
    SUBCASE("t indices shift by k(p) - 1") {
        Monomial m = identity_monomial(g1, vid(g1, "p"));
        m.t = {{3, 1}};
        const auto tr = translate(g1, m, free_step(g1, "p", 1, 0, 1));
        REQUIRE(tr);
        CHECK(tr->path == free_step(g1, "p", 1, 0, 1));
        CHECK(tr->phi == TPart{{4, 1}});
    }
    SUBCASE("too many inverse loops give zero") {
        const SeparatedGraph g3 = fixture("g3");
        CHECK_FALSE(translate(g3, free_mono(g3, "p", {0}, {2}), free_step(g3, "p", 1, 1, 1)));
    }
}

TEST_CASE("products of generators") {
    const SeparatedGraph g3 = fixture("g3");
    CHECK(mul(g3, W(g3, "a:p.1*"), W(g3, "a:p.1")) == W(g3, "v:p"));
    CHECK(mul(g3, W(g3, "b:p.1.1*"), W(g3, "a:p.1")).is_zero());

    const SeparatedGraph g1 = fixture("g1");
    const Element e = mul(g1, W(g1, "a:p.2"), W(g1, "b:p.1.1"));
    REQUIRE_FALSE(e.is_zero());
    CHECK(e.gamma() == free_step(g1, "p", 1, 0, 1));
    CHECK(e.mono().t == TPart{{1, 1}});
    CHECK(e.eta().trivial());
    CHECK(e.eta().start == vid(g1, "q1"));
    CHECK(oracle::check(g1, "a:p.2 b:p.1.1", to_word(g1, e)) == oracle::Verdict::Agree);
}

TEST_CASE("endpoints") {
    const SeparatedGraph g3 = fixture("g3");
    CHECK(endpoints(W(g3, "a:p.1")) == std::pair{vid(g3, "p"), vid(g3, "p")});
    CHECK(endpoints(W(g3, "b:p.1.1")) == std::pair{vid(g3, "p"), vid(g3, "w")});
    const SeparatedGraph g2 = fixture("g2");
    CHECK(endpoints(W(g2, "e:f1 e:f2*")) == std::pair{vid(g2, "w"), vid(g2, "w")});
}

TEST_CASE("parse_word") {
    const SeparatedGraph g3 = fixture("g3");
    CHECK(W(g3, "a:p.1* a:p.1") == W(g3, "v:p"));
    CHECK(W(g3, "b:p.1.1* a:p.1").is_zero());
    CHECK(W(g3, "0").is_zero());
    const SeparatedGraph g2 = fixture("g2");
    const Element e = W(g2, "v:w e:f1 e:f1*");
    CHECK(is_idempotent(e));
    CHECK(e.mono().lhs.edges.size() == 1);
    CHECK(e.mono().lhs == e.mono().rhs);
    CHECK_THROWS_AS(W(g2, "e:nope"), ParseError);
    CHECK_THROWS_AS(W(g2, "a:w.1"), ParseError);
}

TEST_CASE("idempotents") {
    const SeparatedGraph g3 = fixture("g3");
    CHECK(is_idempotent(W(g3, "a:p.1 a:p.1 a:p.1* a:p.1*")));
    CHECK_FALSE(is_idempotent(W(g3, "a:p.1")));
    for (const char *w : {"a:p.1", "b:p.1.1", "a:p.1 b:p.1.1 e:f1", "t:w.1"}) {
        const Element e = W(g3, w);
        CHECK(is_idempotent(mul(g3, e, star(e))));
    }
}

TEST_CASE("text forms round trip") {
    const SeparatedGraph g3 = fixture("g3");
    Sampler s(g3, 7);
    for (int i = 0; i < 200; ++i) {
        const Element e = s.random_nonzero(6);
        CHECK(W(g3, to_word(g3, e)) == e);
    }
}

TEST_CASE("oracle agrees on a fixed word set") {
    const SeparatedGraph g3 = fixture("g3");
    for (const char *w : {"a:p.1 a:p.1* a:p.1", "b:p.1.1 e:f1 e:f1* e:f2", "e:f1* e:f2", "t:w.1 e:f1 t:w.1^-1",
                          "a:p.1* b:p.1.1 t:w.2", "b:p.1.1* b:p.1.1"}) {
        CAPTURE(w);
        CHECK(oracle::check(g3, w, to_word(g3, W(g3, w))) == oracle::Verdict::Agree);
    }
}

TEST_CASE("algebraic laws on samples") {
    for (const char *n : {"g1", "g2", "g3"}) {
        const SeparatedGraph g = fixture(n);
        const PropertyResult r = prop_semigroup_laws(g, 500, 3);
        CAPTURE(n);
        CHECK(r.ok());
        CHECK(r.passed == 500);
    }
}
