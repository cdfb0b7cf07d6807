#pragma once

#include "sepgroid/lattice.hpp"

#include <limits>
#include <vector>

namespace sepgroid {

constexpr int kInfinity = std::numeric_limits<int>::max();

enum class TailKind { Free, RegularFinite, RegularPeriodic };

// c-path prefix plus a possibly infinite tail.
// Free: `exps` has k(p) entries, kInfinity allowed.
// RegularFinite: `prefix` is the tail path. RegularPeriodic: prefix.cycle^inf.
struct SemifinitePath {
    CPath gamma;
    TailKind kind = TailKind::Free;
    std::vector<int> exps;
    Path prefix;
    std::vector<EdgeId> cycle;

    auto operator<=>(const SemifinitePath &) const = default;
    bool operator==(const SemifinitePath &) const = default;
};

bool is_infinite(const SemifinitePath &mu);
// Primitive cycle and shortest prefix for periodic tails; identity otherwise.
SemifinitePath canonical(const SemifinitePath &mu);
// Structural checks (endpoints, component membership, exponent count).
void check_semifinite(const SeparatedGraph &g, const SemifinitePath &mu);
// Edge i of a regular tail (i < length for finite tails).
EdgeId tail_edge(const SemifinitePath &mu, int i);
std::string path_literal(const SeparatedGraph &g, const SemifinitePath &mu);

bool is_initial_segment(const SeparatedGraph &g, const EPath &seg, const SemifinitePath &mu);
bool filter_contains(const SeparatedGraph &g, const SemifinitePath &mu, const Element &e);

struct Bounds {
    int max_depth = -1; // -1: number of primes
    int max_exp = 6;
    int max_len = 8;
};

int depth_bound(const SeparatedGraph &g, const Bounds &b);

// Exponents above b.max_exp are read as infinite.
SemifinitePath reconstruct_path(const SeparatedGraph &g, const std::vector<Element> &filter,
                                const Bounds &b = {});
bool is_ultrafilter(const SemifinitePath &mu);

struct Separation {
    std::vector<Element> X, Y;
};
Separation separation_witness(const SeparatedGraph &g, const SemifinitePath &mu);

// Bounded enumerations, starting at every vertex.
std::vector<CPath> enumerate_cpaths(const SeparatedGraph &g, const Bounds &b);
std::vector<EPath> enumerate_epaths(const SeparatedGraph &g, const Bounds &b);
// Finite tails within bounds; free exponents range over 0..max_exp and infinity.
// With `periodic`, adds periodic tails with |prefix| + |cycle| <= max_len.
std::vector<SemifinitePath> enumerate_semifinite(const SeparatedGraph &g, const Bounds &b,
                                                 bool periodic);
// Infinite paths with |gamma| + |prefix| + |cycle| <= max_size, canonical and distinct.
std::vector<SemifinitePath> enumerate_points(const SeparatedGraph &g, int max_size);
// Some infinite path in Z(mu).
SemifinitePath witness_point(const SeparatedGraph &g, const EPath &mu);
bool point_in(const SeparatedGraph &g, const SemifinitePath &x, const CompactOpen &a);

} // namespace sepgroid
