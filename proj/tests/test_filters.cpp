#include "support.hpp"

#include "sepgroid/selftest.hpp"

#include <doctest.h>

#include <set>

using namespace sepgroid;
using namespace testing;

namespace {

std::set<Element> as_set(const std::vector<Element> &v) { return {v.begin(), v.end()}; }

std::set<Element> words(const SeparatedGraph &g, std::initializer_list<const char *> ws) {
    std::set<Element> out;
    for (const char *w : ws) out.insert(W(g, w));
    return out;
}

EPath free_epath(const SeparatedGraph &g, const std::string &v, std::vector<int> exps) {
    EPath mu = epath_base(g, CPath{vid(g, v), {}});
    mu.exps = std::move(exps);
    return mu;
}

} // namespace

TEST_CASE("initial segments") {
    const SeparatedGraph g3 = fixture("g3");
    CHECK(is_initial_segment(g3, free_epath(g3, "p", {2}), P(g3, "[v:p] ; free(inf)")));
    CHECK_FALSE(is_initial_segment(g3, free_epath(g3, "p", {3}), P(g3, "[a:p.1 a:p.1 b:p.1.1] ; reg()")));
    CHECK(is_initial_segment(g3, free_epath(g3, "p", {2}), P(g3, "[a:p.1 a:p.1 b:p.1.1] ; reg()")));
    for (const char *lit : {"[v:p] ; free(3)", "[a:p.1 b:p.1.1] ; reg(f1 ; f2)", "[v:w] ; reg( ; f1 f2)"}) {
        const SemifinitePath mu = P(g3, lit);
        CHECK(is_initial_segment(g3, epath_base(g3, CPath{mu.gamma.start, {}}), mu));
    }
}

TEST_CASE("filter membership") {
    const SeparatedGraph g2 = fixture("g2");
    const SemifinitePath f1inf = P(g2, "[v:w] ; reg( ; f1)");
    CHECK(filter_contains(g2, f1inf, W(g2, "e:f1 e:f1 e:f1* e:f1*")));
    CHECK_FALSE(filter_contains(g2, f1inf, W(g2, "e:f2 e:f2*")));
    const SeparatedGraph g3 = fixture("g3");
    CHECK(filter_contains(g3, P(g3, "[v:p] ; free(inf)"), W(g3, "v:p")));
    CHECK_THROWS_AS(filter_contains(g3, P(g3, "[v:p] ; free(inf)"), W(g3, "a:p.1")), DomainError);
}

TEST_CASE("reconstructing paths from filter bases") {
    const SeparatedGraph g3 = fixture("g3");
    CHECK(reconstruct_path(g3, {W(g3, "v:p"), W(g3, "a:p.1 a:p.1*"), W(g3, "a:p.1 a:p.1 a:p.1* a:p.1*")}) ==
          P(g3, "[v:p] ; free(2)"));
    const SeparatedGraph g2 = fixture("g2");
    CHECK(reconstruct_path(g2, {W(g2, "v:w"), W(g2, "e:f1 e:f1*")}) == P(g2, "[v:w] ; reg(f1)"));
    const SeparatedGraph g0 = fixture("g0");
    CHECK(reconstruct_path(g0, {W(g0, "v:p")}) == P(g0, "[v:p] ; free()"));
    CHECK_THROWS_AS(reconstruct_path(g2, {W(g2, "e:f1 e:f1*"), W(g2, "e:f2 e:f2*")}), DomainError);
}

TEST_CASE("ultrafilters") {
    const SeparatedGraph g3 = fixture("g3");
    CHECK(is_ultrafilter(P(g3, "[v:p] ; free(inf)")));
    CHECK_FALSE(is_ultrafilter(P(g3, "[v:p] ; free(5)")));
    const SeparatedGraph g2 = fixture("g2");
    CHECK(is_ultrafilter(P(g2, "[v:w] ; reg(f1 ; f2)")));
    CHECK_FALSE(is_ultrafilter(P(g2, "[v:w] ; reg(f1)")));
    CHECK(is_ultrafilter(P(fixture("g0"), "[v:p] ; free()")));
}

TEST_CASE("periodic tails are canonical") {
    const SeparatedGraph g2 = fixture("g2");
    CHECK(P(g2, "[v:w] ; reg(f1 ; f1 f1)") == P(g2, "[v:w] ; reg( ; f1)"));
    CHECK(P(g2, "[v:w] ; reg(f2 f1 ; f2 f1)") == P(g2, "[v:w] ; reg( ; f2 f1)"));
    CHECK(P(g2, "[v:w] ; reg(f1 ; f2 f1)") == P(g2, "[v:w] ; reg( ; f1 f2)"));
    CHECK(P(g2, "[v:w] ; reg(f2 ; f1)") != P(g2, "[v:w] ; reg( ; f1)"));
}

TEST_CASE("separation witnesses") {
    const SeparatedGraph g2 = fixture("g2");
    const Separation s2 = separation_witness(g2, P(g2, "[v:w] ; reg(f1)"));
    CHECK(as_set(s2.X) == words(g2, {"e:f1 e:f1*"}));
    CHECK(as_set(s2.Y) == words(g2, {"e:f1 e:f1 e:f1* e:f1*", "e:f1 e:f2 e:f2* e:f1*"}));

    const SeparatedGraph g3 = fixture("g3");
    const Separation s3 = separation_witness(g3, P(g3, "[v:p] ; free(2)"));
    CHECK(as_set(s3.X) == words(g3, {"a:p.1 a:p.1 a:p.1* a:p.1*"}));
    CHECK(as_set(s3.Y) == words(g3, {"a:p.1 a:p.1 a:p.1 a:p.1* a:p.1* a:p.1*", "a:p.1 a:p.1 b:p.1.1 b:p.1.1* a:p.1* a:p.1*"}));

    const SeparatedGraph g0 = fixture("g0");
    CHECK_THROWS_AS(separation_witness(g0, P(g0, "[v:p] ; free()")), DomainError);
    CHECK_THROWS_AS(separation_witness(g3, P(g3, "[v:p] ; free(inf)")), DomainError);
}

TEST_CASE("separation witnesses cover their element and miss the path") {
    const SeparatedGraph g3 = fixture("g3");
    for (const SemifinitePath &mu : enumerate_semifinite(g3, Bounds{-1, 2, 2}, false)) {
        if (is_ultrafilter(mu)) continue;
        CAPTURE(path_literal(g3, mu));
        const Separation s = separation_witness(g3, mu);
        for (const Element &x : s.X) CHECK(filter_contains(g3, mu, x));
        for (const Element &y : s.Y) CHECK_FALSE(filter_contains(g3, mu, y));
        CHECK(co_equal(g3, co_of_elements(g3, s.X), co_of_elements(g3, s.Y)));
    }
}

TEST_CASE("points and cylinders") {
    const SeparatedGraph g3 = fixture("g3");
    const std::vector<SemifinitePath> pts = enumerate_points(g3, 4);
    CHECK(std::set<SemifinitePath>(pts.begin(), pts.end()).size() == pts.size());
    for (const SemifinitePath &x : pts) CHECK(is_infinite(x));
    for (const EPath &mu : enumerate_epaths(g3, Bounds{-1, 2, 2})) {
        const SemifinitePath x = witness_point(g3, mu);
        CHECK(is_infinite(x));
        CHECK(is_initial_segment(g3, mu, x));
    }
}

TEST_CASE("filter correspondence at small bounds") {
    for (const char *n : {"g0", "g1", "g2", "g3"}) {
        CAPTURE(n);
        CHECK(prop_filter_correspondence(fixture(n), 2, 3).ok());
    }
}

TEST_CASE("path literals round trip") {
    const SeparatedGraph g3 = fixture("g3");
    for (const SemifinitePath &mu : enumerate_semifinite(g3, Bounds{-1, 2, 2}, true)) {
        CHECK(P(g3, path_literal(g3, mu)) == mu);
    }
    CHECK_THROWS_AS(P(g3, "[v:p] ; reg(f1)"), ParseError);
    CHECK_THROWS_AS(P(g3, "[v:p] ; free(1,2)"), ParseError);
    CHECK_THROWS_AS(P(g3, "v:p ; free(1)"), ParseError);
}
