#pragma once

#include "sepgroid/semigroup.hpp"

#include <vector>

namespace sepgroid {

// Index of a nonzero idempotent: c-path prefix plus a finite tail.
// Free terminal prime: `exps` has k(p) entries and `tail` is trivial.
// Regular terminal prime: `exps` is empty and `tail` is a path in E_p.
struct EPath {
    CPath gamma;
    std::vector<int> exps;
    Path tail;

    auto operator<=>(const EPath &) const = default;
    bool operator==(const EPath &) const = default;
};

PrimeIndex terminal_prime(const SeparatedGraph &g, const EPath &mu);
// E-path over `gamma` with zero exponents or trivial tail.
EPath epath_base(const SeparatedGraph &g, const CPath &gamma);

EPath epath_of(const SeparatedGraph &g, const Element &e);
Element idem_of(const SeparatedGraph &g, const EPath &mu);
std::string epath_text(const SeparatedGraph &g, const EPath &mu);

bool nat_leq(const SeparatedGraph &g, const Element &e, const Element &f);
Element meet(const SeparatedGraph &g, const Element &e, const Element &f);
bool epath_leq(const SeparatedGraph &g, const EPath &a, const EPath &b);
Element join_free(const SeparatedGraph &g, const Element &e, const Element &f);

// Free terminal prime: choice is j0 in 1..k(p). Regular: choice is ignored.
std::vector<Element> simple_expand(const SeparatedGraph &g, const Element &e, int choice);
std::vector<EPath> simple_expand(const SeparatedGraph &g, const EPath &mu, int choice);

struct ScriptStep {
    int position;
    int choice;
    bool operator==(const ScriptStep &) const = default;
};
using Script = std::vector<ScriptStep>;

std::vector<Element> expand(const SeparatedGraph &g, const Element &e, const Script &script);

// Finite disjoint union of cylinders Z(mu), canonically sorted.
class CompactOpen {
public:
    CompactOpen() = default;
    static CompactOpen cylinder(const EPath &mu) { return from({mu}); }
    // Caller guarantees pairwise disjointness.
    static CompactOpen from(std::vector<EPath> cylinders);

    const std::vector<EPath> &cylinders() const { return cyl_; }
    bool empty() const { return cyl_.empty(); }
    size_t size() const { return cyl_.size(); }

private:
    std::vector<EPath> cyl_;
};

bool cylinder_less(const EPath &a, const EPath &b);

CompactOpen co_intersect(const SeparatedGraph &g, const CompactOpen &a, const CompactOpen &b);
CompactOpen co_subtract(const SeparatedGraph &g, const CompactOpen &a, const CompactOpen &b);
CompactOpen co_union(const SeparatedGraph &g, const CompactOpen &a, const CompactOpen &b);
bool co_is_empty(const CompactOpen &a);
// Set equality, decided by two subtractions.
bool co_equal(const SeparatedGraph &g, const CompactOpen &a, const CompactOpen &b);
bool co_disjoint(const SeparatedGraph &g, const CompactOpen &a, const CompactOpen &b);
// Z(mu) minus Z(rho) as disjoint cylinders.
std::vector<EPath> cylinder_minus(const SeparatedGraph &g, const EPath &mu, const EPath &rho);
CompactOpen co_of_elements(const SeparatedGraph &g, const std::vector<Element> &idems);

bool is_orthogonal_cover(const SeparatedGraph &g, const Element &e, const std::vector<Element> &cover);
std::vector<Element> orthogonalize_cover(const SeparatedGraph &g, const Element &e,
                                         const std::vector<Element> &cover);
Script cover_to_expansion(const SeparatedGraph &g, const Element &e,
                          const std::vector<Element> &cover);

} // namespace sepgroid
