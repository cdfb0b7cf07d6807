#pragma once

#include "sepgroid/filters.hpp"

#include <optional>
#include <utility>

namespace sepgroid {

// Element of Z^(inf) x Z^(inf), both parts sparse and 1-based.
struct GermWeight {
    TPart n1; // t-exponents
    TPart n2; // length differences

    auto operator<=>(const GermWeight &) const = default;
    bool operator==(const GermWeight &) const = default;
};

GermWeight weight_add(const GermWeight &a, const GermWeight &b);
GermWeight weight_negate(const GermWeight &a);

// x = gamma.lambda and y = nu.lambda with gamma, nu ending in the terminal
// component of x and y.
struct GermWitness {
    EPath gamma;
    EPath nu;

    auto operator<=>(const GermWitness &) const = default;
    bool operator==(const GermWitness &) const = default;
};

// Triple (x, n, y). Paths are stored in canonical form.
struct Germ {
    SemifinitePath x;
    GermWeight weight;
    SemifinitePath y;
    GermWitness witness;

    const SemifinitePath &range() const { return x; }
    const SemifinitePath &source() const { return y; }
    // Identity ignores the witness, which is derived data.
    bool operator==(const Germ &o) const {
        return x == o.x && weight == o.weight && y == o.y;
    }
};

TPart norm_length(const SeparatedGraph &g, const EPath &gamma);

// Some decomposition with the given n2, or nullopt if (x, n, y) is not in the groupoid.
std::optional<GermWitness> find_witness(const SeparatedGraph &g, const SemifinitePath &x,
                                        const TPart &n2, const SemifinitePath &y);
// Validates and canonicalizes. Throws DomainError.
Germ make_germ(const SeparatedGraph &g, const SemifinitePath &x, const GermWeight &n,
               const SemifinitePath &y);

Germ unit(const SeparatedGraph &g, const SemifinitePath &x);
Germ inverse(const SeparatedGraph &g, const Germ &a);
// a.y must equal b.x.
Germ compose(const SeparatedGraph &g, const Germ &a, const Germ &b);

// Germ of s at x. Requires x in Z(s*s).
Germ germ_of(const SeparatedGraph &g, const Element &s, const SemifinitePath &x);
bool in_bisection(const SeparatedGraph &g, const Germ &a, const Element &s);

std::pair<CompactOpen, CompactOpen> bisection_endpoints(const SeparatedGraph &g, const Element &s);
bool is_bisection_family(const SeparatedGraph &g, const std::vector<Element> &family);

} // namespace sepgroid
