#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace sepgroid;
using namespace testing;

namespace {

bool has_violation(const std::string &text, const std::string &condition) {
    const ValidationReport rep = validate_adaptable(parse_graph(text));
    return std::any_of(rep.violations.begin(), rep.violations.end(),
                       [&](const Violation &v) { return v.condition == condition; });
}

std::set<std::string> names(const SeparatedGraph &g, const std::vector<PrimeIndex> &s) {
    std::set<std::string> out;
    for (PrimeIndex p : s) out.insert(g.prime(p).name);
    return out;
}

} // namespace

TEST_CASE("fixture sizes") {
    const SeparatedGraph g2 = fixture("g2");
    CHECK(g2.num_vertices() == 1);
    CHECK(g2.num_edges() == 2);
    const SeparatedGraph g1 = fixture("g1");
    CHECK(g1.num_vertices() == 3);
    CHECK(g1.num_edges() == 4);
    const PrimeIndex p = *g1.find_prime("p");
    CHECK(g1.prime(p).k() == 2);
    CHECK(g1.edge(g1.beta(p, 1, 1)).range == vid(g1, "q1"));
    CHECK(g1.edge(g1.beta(p, 2, 1)).range == vid(g1, "q2"));
    CHECK(g1.edge(g1.alpha(p, 1)).range == vid(g1, "p"));
}

TEST_CASE("malformed line reports its line number") {
    try {
        parse_graph("graph bad\nregular r\nvertex w\nedge f1 w -> w\n");
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.line() == 4);
    }
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    CHECK_THROWS_AS(parse_graph("graph x\nvertex w\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph x\nfree p k=1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph x\nregular r\nvertex w\nedge f: w -> nowhere\n"), ParseError);
}

TEST_CASE("comments and blank lines are ignored") {
    const SeparatedGraph g = parse_graph("# header\ngraph c\n\nregular r   # trailing\nvertex w\nedge f1: w -> w\nedge f2: w -> w\n");
    CHECK(g.num_edges() == 2);
    CHECK(validate_adaptable(g).ok());
}

TEST_CASE("fixtures are adaptable") {
    for (const char *n : {"g0", "g1", "g2", "g3"}) {
        CAPTURE(n);
        CHECK(validate_adaptable(fixture(n)).ok());
    }
}

TEST_CASE("single-axiom mutations are rejected") {
    SUBCASE("regular vertex with one internal edge") {
        CHECK(has_violation("graph m\nregular r\nvertex w u\nedge a: w -> u\nedge b: w -> w\nedge c: u -> w\n",
                            "regular-out-degree"));
        CHECK(has_violation("graph m\nregular r\nvertex w\nedge f1: w -> w\n", "regular-out-degree"));
    }
    SUBCASE("regular component not strongly connected") {
        CHECK(has_violation("graph m\nregular r\nvertex w u\nedge a: w -> w\nedge b: w -> u\nedge c: u -> u\n"
                            "edge d: u -> u\n",
                            "regular-strongly-connected"));
    }
    SUBCASE("free prime with loops but nothing below") {
        CHECK(has_violation("graph m\nfree p k=1\nX 1 -> p\n", "free-minimal"));
    }
    SUBCASE("connector into a higher component") {
        const std::string text = "graph m\nregular r\nvertex w\nedge f1: w -> w\nedge f2: w -> w\n"
                                 "connector c: w -> p\nfree p k=1\nX 1 -> w\n";
        CHECK(has_violation(text, "connector-lower"));
        CHECK(has_violation(text, "components"));
    }
}

TEST_CASE("component order") {
    const SeparatedGraph g3 = fixture("g3");
    const PrimeIndex p = *g3.find_prime("p"), r = *g3.find_prime("r");
    CHECK(component_leq(g3, p, r));
    CHECK_FALSE(component_leq(g3, r, p));
    CHECK(component_leq(g3, p, p));
    const SeparatedGraph g1 = fixture("g1");
    const PrimeIndex q1 = *g1.find_prime("q1"), q2 = *g1.find_prime("q2");
    CHECK_FALSE(component_leq(g1, q1, q2));
    CHECK_FALSE(component_leq(g1, q2, q1));
}

TEST_CASE("component order is a partial order on every fixture") {
    for (const char *n : {"g0", "g1", "g2", "g3"}) {
        const SeparatedGraph g = fixture(n);
        const int np = g.num_primes();
        for (int a = 0; a < np; ++a) {
            CHECK(component_leq(g, a, a));
            for (int b = 0; b < np; ++b) {
                if (a != b) CHECK_FALSE((component_leq(g, a, b) && component_leq(g, b, a)));
                for (int c = 0; c < np; ++c)
                    if (component_leq(g, a, b) && component_leq(g, b, c)) CHECK(component_leq(g, a, c));
            }
        }
    }
}

TEST_CASE("hereditary subsets") {
    const SeparatedGraph g3 = fixture("g3");
    auto h3 = hereditary_subsets(g3);
    REQUIRE(h3.size() == 3);
    CHECK(names(g3, h3[0]).empty());
    CHECK(names(g3, h3[1]) == std::set<std::string>{"r"});
    CHECK(names(g3, h3[2]) == std::set<std::string>{"p", "r"});

    const SeparatedGraph g1 = fixture("g1");
    std::set<std::set<std::string>> s1;
    for (const auto &h : hereditary_subsets(g1)) s1.insert(names(g1, h));
    CHECK(s1 == std::set<std::set<std::string>>{{}, {"q1"}, {"q2"}, {"q1", "q2"}, {"p", "q1", "q2"}});

    const SeparatedGraph g0 = fixture("g0");
    CHECK(hereditary_subsets(g0).size() == 2);
}

TEST_CASE("hereditary subsets form a lattice of sets") {
    for (const char *n : {"g0", "g1", "g2", "g3"}) {
        const SeparatedGraph g = fixture(n);
        std::set<std::vector<PrimeIndex>> all;
        for (auto h : hereditary_subsets(g)) {
            std::sort(h.begin(), h.end());
            all.insert(h);
        }
        std::vector<PrimeIndex> everything(g.num_primes());
        for (int i = 0; i < g.num_primes(); ++i) everything[i] = i;
        CHECK(all.count({}));
        CHECK(all.count(everything));
        for (const auto &a : all)
            for (const auto &b : all) {
                std::vector<PrimeIndex> u, x;
                std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(x));
                CHECK(all.count(u));
                CHECK(all.count(x));
            }
    }
}

TEST_CASE("monoid presentation") {
    const SeparatedGraph g1 = fixture("g1");
    const Presentation p1 = monoid_presentation(g1);
    REQUIRE(p1.relations.size() == 2);
    for (const Relation &r : p1.relations) CHECK(r.v == vid(g1, "p"));
    CHECK(p1.relations[0].rhs == M(g1, "a:p + a:q1"));
    CHECK(p1.relations[1].rhs == M(g1, "a:p + a:q2"));

    const SeparatedGraph g2 = fixture("g2");
    const Presentation p2 = monoid_presentation(g2);
    REQUIRE(p2.relations.size() == 1);
    CHECK(p2.relations[0].rhs == M(g2, "2*a:w"));

    CHECK(monoid_presentation(fixture("g0")).relations.empty());
}

TEST_CASE("graph serialization round trip") {
    for (const char *n : {"g0", "g1", "g2", "g3"}) {
        const SeparatedGraph g = fixture(n);
        const std::string text = serialize_graph(g);
        CHECK(serialize_graph(parse_graph(text)) == text);
    }
}
