#pragma once

#include "sepgroid/filters.hpp"
#include "sepgroid/groupoid.hpp"
#include "sepgroid/monoid.hpp"
#include "sepgroid/text.hpp"

#include <string>

namespace testing {

inline sepgroid::SeparatedGraph fixture(const std::string &name) {
    return sepgroid::load_graph(std::string(SEPGROID_FIXTURES) + "/" + name + ".sg");
}

inline sepgroid::VertexId vid(const sepgroid::SeparatedGraph &g, const std::string &name) {
    return *g.find_vertex(name);
}

inline sepgroid::Element W(const sepgroid::SeparatedGraph &g, const std::string &word) {
    return sepgroid::parse_word(g, word);
}

// Idempotent at a free vertex with trivial c-path and the given exponents.
inline sepgroid::Element free_idem(const sepgroid::SeparatedGraph &g, const std::string &v, std::vector<int> exps) {
    sepgroid::EPath mu = sepgroid::epath_base(g, sepgroid::CPath{vid(g, v), {}});
    mu.exps = std::move(exps);
    return sepgroid::idem_of(g, mu);
}

inline sepgroid::MonElem M(const sepgroid::SeparatedGraph &g, const std::string &text) {
    return sepgroid::parse_mon_elem(g, text);
}

inline sepgroid::SemifinitePath P(const sepgroid::SeparatedGraph &g, const std::string &text) {
    return sepgroid::parse_path_literal(g, text);
}

inline sepgroid::CompactOpen Z(const sepgroid::SeparatedGraph &g, const std::string &text) {
    return sepgroid::parse_compact_open(g, text);
}

} // namespace testing
