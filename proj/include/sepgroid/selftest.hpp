#pragma once

#include "sepgroid/groupoid.hpp"
#include "sepgroid/monoid.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace sepgroid {

struct PropertyResult {
    std::string name;
    long passed = 0;
    long failed = 0;
    long skipped = 0; // inconclusive under the budget
    std::vector<std::string> failures; // first few messages

    void pass() { ++passed; }
    void fail(const std::string &msg);
    bool ok() const { return failed == 0; }
};

// Random generators over one graph. Deterministic given the seed.
class Sampler {
public:
    Sampler(const SeparatedGraph &g, std::uint64_t seed);

    int uniform(int lo, int hi); // inclusive
    bool coin() { return uniform(0, 1) == 1; }

    // Every generator token of the graph, t tokens with index <= 2.
    const std::vector<std::string> &alphabet() const { return alphabet_; }
    std::string random_word(int max_tokens);
    Element random_nonzero(int max_tokens);
    EPath random_epath(int max_exp, int max_len);
    Element random_idempotent(int max_exp, int max_len) { return idem_of(g_, random_epath(max_exp, max_len)); }
    Script random_script(const Element &e, int max_steps);
    // Infinite path having mu as an initial segment.
    SemifinitePath random_point_in(const EPath &mu);
    // Element s with x in Z(s*s), built from the shape of x.
    Element random_element_on(const SemifinitePath &x);
    // Disjoint family of at most `max_cylinders` cylinders.
    CompactOpen random_compact_open(int max_cylinders, int max_exp);

    std::mt19937_64 &rng() { return rng_; }

private:
    const SeparatedGraph &g_;
    std::mt19937_64 rng_;
    std::vector<std::string> alphabet_;
    std::vector<EPath> lattice_;
    std::vector<std::vector<CPath>> cpaths_to_; // by range vertex
    std::vector<std::vector<Path>> walks_to_;   // internal walks by range vertex
    std::vector<std::vector<std::vector<EdgeId>>> cycles_at_;

    template <class T> const T &pick(const std::vector<T> &v) { return v[uniform(0, static_cast<int>(v.size()) - 1)]; }
};

PropertyResult prop_semigroup_laws(const SeparatedGraph &g, long n, std::uint64_t seed);
PropertyResult prop_e_unitary(const SeparatedGraph &g, long n, std::uint64_t seed);
PropertyResult prop_cover_duality(const SeparatedGraph &g, long n, std::uint64_t seed);
PropertyResult prop_cylinder_points(const SeparatedGraph &g, long n, std::uint64_t seed, int point_size = 6);
PropertyResult prop_filter_correspondence(const SeparatedGraph &g, int max_exp = 4, int max_len = 5);
PropertyResult prop_groupoid_laws(const SeparatedGraph &g, long n, std::uint64_t seed);
PropertyResult prop_typ_invariance(const SeparatedGraph &g, long n, std::uint64_t seed);
// Single-cylinder pairs exhaustively (exponents and tails <= max_exp), then
// n sampled pairs of disjoint families with up to four cylinders.
PropertyResult prop_equidecompose(const SeparatedGraph &g, int max_exp, long n, std::uint64_t seed);
// Quadruples with weight(a + b) <= max_weight and weight(c + d) <= max_weight.
PropertyResult prop_refinement(const SeparatedGraph &g, int max_weight);
// Round trips of the text formats.
PropertyResult prop_round_trip(const SeparatedGraph &g, long n, std::uint64_t seed);

struct SelftestReport {
    std::vector<std::pair<std::string, PropertyResult>> results; // (graph name, result)
    bool ok() const;
};

// All suites at reduced sizes on each graph.
SelftestReport run_selftest(const std::vector<SeparatedGraph> &graphs, std::uint64_t seed);

} // namespace sepgroid
