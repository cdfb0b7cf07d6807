#pragma once

#include "sepgroid/graph.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sepgroid {

// Finite path inside one component; `start` matters when `edges` is empty.
struct Path {
    VertexId start = -1;
    std::vector<EdgeId> edges;

    int length() const { return static_cast<int>(edges.size()); }
    auto operator<=>(const Path &) const = default;
    bool operator==(const Path &) const = default;
};

VertexId path_range(const SeparatedGraph &g, const Path &p);
bool path_is_prefix(const Path &a, const Path &b);

// One step of a c-path. Free step: alpha(p,i)^power beta(p,i,t), `walk` empty.
// Regular step: internal `walk` followed by a connector, `power` zero.
struct Step {
    int power = 0;
    std::vector<EdgeId> walk;
    EdgeId connector = -1;

    auto operator<=>(const Step &) const = default;
    bool operator==(const Step &) const = default;
};

struct CPath {
    VertexId start = -1;
    std::vector<Step> steps;

    int depth() const { return static_cast<int>(steps.size()); }
    bool trivial() const { return steps.empty(); }
    auto operator<=>(const CPath &) const = default;
    bool operator==(const CPath &) const = default;
};

VertexId cpath_range(const SeparatedGraph &g, const CPath &c);
int cpath_length(const CPath &c); // number of edges
bool cpath_is_prefix(const CPath &a, const CPath &b);
// Steps from `from_step` on, starting at the range of the step before it.
CPath cpath_suffix(const SeparatedGraph &g, const CPath &c, int from_step);
CPath cpath_concat(const CPath &a, const CPath &b);
CPath cpath_prefix(const CPath &c, int steps);
std::vector<EdgeId> cpath_edges(const SeparatedGraph &g, const CPath &c);
// Factor an edge sequence (consecutive, ending with a connector or empty)
// into standard form. Throws DomainError if it is not a c-path.
CPath cpath_from_edges(const SeparatedGraph &g, VertexId start, const std::vector<EdgeId> &es);

// Sparse t-exponents: index (1-based) to nonzero exponent.
using TPart = std::map<int, int>;

TPart tpart_add(const TPart &a, const TPart &b);
TPart tpart_negate(const TPart &a);
// Transport a pure-t monomial past the connectors of `steps[from..]`.
TPart tpart_push(const SeparatedGraph &g, TPart t, const CPath &c, int from = 0);

struct Monomial {
    PrimeIndex prime = -1;
    TPart t;
    std::vector<int> k, l; // free primes
    Path lhs, rhs;         // regular primes: gamma_m, nu_m. Free: both trivial at v^p.

    auto operator<=>(const Monomial &) const = default;
    bool operator==(const Monomial &) const = default;

    VertexId source() const { return lhs.start; }
    VertexId range() const { return rhs.start; }
};

Monomial identity_monomial(const SeparatedGraph &g, VertexId v);
bool is_pure_t(const Monomial &m);
Monomial star(const Monomial &m);
std::optional<Monomial> mul_monomials(const SeparatedGraph &g, const Monomial &a,
                                      const Monomial &b);

struct Translation {
    CPath path;
    TPart phi; // based at the range of `path`
};
// m * eta = eta~ * phi, or nullopt for zero.
std::optional<Translation> translate(const SeparatedGraph &g, const Monomial &m, const CPath &eta);

struct Triple {
    CPath gamma;
    Monomial mono;
    CPath eta;

    auto operator<=>(const Triple &) const = default;
    bool operator==(const Triple &) const = default;
};

// Normal form gamma m eta* of S(E,C), or zero.
class Element {
public:
    Element() = default; // zero
    static Element zero() { return Element(); }
    static Element triple(CPath gamma, Monomial m, CPath eta) {
        Element e;
        e.t_ = Triple{std::move(gamma), std::move(m), std::move(eta)};
        return e;
    }

    bool is_zero() const { return !t_.has_value(); }
    const Triple &triple() const;
    const CPath &gamma() const { return triple().gamma; }
    const Monomial &mono() const { return triple().mono; }
    const CPath &eta() const { return triple().eta; }

    auto operator<=>(const Element &) const = default;
    bool operator==(const Element &) const = default;

private:
    std::optional<Triple> t_;
};

Element vertex_element(const SeparatedGraph &g, VertexId v);
Element edge_element(const SeparatedGraph &g, EdgeId e);
Element t_element(const SeparatedGraph &g, VertexId v, int index, int exponent);

Element star(const Element &e);
Element mul(const SeparatedGraph &g, const Element &a, const Element &b);
std::pair<VertexId, VertexId> endpoints(const Element &e);
bool is_idempotent(const Element &e);

Element parse_word(const SeparatedGraph &g, const std::string &text);
// Generator word that parses back to e.
std::string to_word(const SeparatedGraph &g, const Element &e);
// Canonical text `gamma | t-part | body | eta`.
std::string to_text(const SeparatedGraph &g, const Element &e);
std::string cpath_text(const SeparatedGraph &g, const CPath &c);

} // namespace sepgroid
