#pragma once

#include "sepgroid/lattice.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace sepgroid {

// Non-negative vector indexed by VertexId.
using MonElem = std::vector<int>;

MonElem mon_zero(const SeparatedGraph &g);
MonElem mon_unit(const SeparatedGraph &g, VertexId v);
MonElem mon_add(const MonElem &a, const MonElem &b);
int mon_weight(const MonElem &a);

// a_v = sum of a_{r(e)} over e in class `cls` of C_v.
struct Relation {
    VertexId v;
    int cls;
    MonElem rhs;
};

struct Presentation {
    std::vector<Relation> relations;
};

Presentation monoid_presentation(const SeparatedGraph &g);

struct MonBudget {
    std::size_t max_states = 100000;
    int max_weight = 40;
    int max_witness_weight = 4;
};

enum class Verdict { Yes, No, Unknown };
const char *verdict_name(Verdict v);

// One application of a relation: forward rewrites a_v into the right-hand side.
struct RewriteStep {
    int relation;
    bool forward;
    MonElem after;
};

struct EqResult {
    Verdict verdict = Verdict::Unknown;
    std::vector<RewriteStep> path; // x to y when Yes
    bool budget_exhausted = false; // state cap reached
    bool weight_pruned = false;    // some move exceeded the weight cap
    std::size_t states = 0;
};

EqResult mon_eq(const SeparatedGraph &g, const MonElem &x, const MonElem &y, const MonBudget &b = {});

// Elements reachable from x without exceeding the weight cap. `complete` is
// set to false when the state cap stops the search.
std::vector<MonElem> mon_class(const SeparatedGraph &g, const MonElem &x, const MonBudget &b = {},
                               bool *complete = nullptr);

struct LeqResult {
    Verdict verdict = Verdict::Unknown; // Yes or Unknown
    MonElem z;
    EqResult proof; // x + z = y
};

LeqResult mon_leq(const SeparatedGraph &g, const MonElem &x, const MonElem &y, const MonBudget &b = {});

// Forward application of relation class `cls` at one occurrence of a_v.
struct ForwardMove {
    VertexId v;
    int cls;
    bool operator==(const ForwardMove &) const = default;
};

struct ForwardMeet {
    std::vector<ForwardMove> from_x, from_y;
    MonElem common;
};

// Common forward descendant of x and y. Forward moves are strongly
// confluent, so one exists iff x = y in the monoid.
std::optional<ForwardMeet> forward_meet(const SeparatedGraph &g, const MonElem &x, const MonElem &y,
                                        const MonBudget &b = {});
MonElem apply_forward(const SeparatedGraph &g, const MonElem &x, const ForwardMove &m);

struct Refinement {
    MonElem w, x, y, z;
};

struct RefineResult {
    Verdict verdict = Verdict::Unknown; // Yes or Unknown
    std::optional<Refinement> witness;
};

// a = w + x, b = y + z, c = w + y, d = x + z. Throws DomainError when
// a + b = c + d cannot be confirmed within the budget.
RefineResult refinement_witness(const SeparatedGraph &g, const MonElem &a, const MonElem &b,
                                const MonElem &c, const MonElem &d, const MonBudget &budget = {});

VertexId vertex_of_idempotent(const SeparatedGraph &g, const Element &e);
VertexId vertex_of_cylinder(const SeparatedGraph &g, const EPath &mu);
MonElem typ_of(const SeparatedGraph &g, const CompactOpen &a);
// s with s s* = e1 and s* s = e2.
Element connect_idempotents(const SeparatedGraph &g, const Element &e1, const Element &e2);

// elements[k]* elements[k] = source[k] partitions A; elements[k] elements[k]* = range[k] partitions B.
struct Certificate {
    std::vector<Element> elements;
    std::vector<Element> source;
    std::vector<Element> range;
};

bool verify_certificate(const SeparatedGraph &g, const CompactOpen &a, const CompactOpen &b,
                        const Certificate &cert);

struct EquidecompResult {
    Verdict verdict = Verdict::Unknown;
    std::optional<Certificate> certificate;
    EqResult eq; // mon_eq on the types
    bool budget_exhausted = false;
};

EquidecompResult equidecompose(const SeparatedGraph &g, const CompactOpen &a, const CompactOpen &b,
                               const MonBudget &budget = {});

enum class GeneratorKind { FreeElem, RegularElem };

struct Classification {
    GeneratorKind kind;
    bool consistent;
    LeqResult witness; // mon_leq(2 a_v, a_v)
};

Classification classify_prime_generator(const SeparatedGraph &g, VertexId v, const MonBudget &b = {});

} // namespace sepgroid
