#pragma once

#include "sepgroid/groupoid.hpp"
#include "sepgroid/monoid.hpp"

#include <string>

namespace sepgroid {

// `[<c-path word>] ; free(k1,...,kn)` with `inf` allowed, `[...] ; reg(edges)`
// or `[...] ; reg(edges ; cycle)`. A trivial c-path is written `[v:NAME]`.
// Periodic tails are returned in canonical form.
SemifinitePath parse_path_literal(const SeparatedGraph &g, const std::string &text);

// `Z(<word>)` with infix `&`, `-`, `+`, parentheses and `0` for the empty set.
// `&` binds tighter than `+` and `-`, which associate to the left.
CompactOpen parse_compact_open(const SeparatedGraph &g, const std::string &text);
std::string compact_open_text(const SeparatedGraph &g, const CompactOpen &a);

// `3*a:v + a:w`, or `0`.
MonElem parse_mon_elem(const SeparatedGraph &g, const std::string &text);
std::string mon_elem_text(const SeparatedGraph &g, const MonElem &m);

// Dense 1-based sequence `(n1,n2,...)`; `()` is zero.
TPart parse_sequence(const std::string &text);
std::string sequence_text(const TPart &t);

// `(x ; n1 ; n2 ; y)` with path literals.
Germ parse_germ(const SeparatedGraph &g, const std::string &text);
std::string germ_text(const SeparatedGraph &g, const Germ &a);

// `pos:choice` items separated by commas or spaces.
Script parse_script(const std::string &text);
std::string script_text(const Script &s);

// `[w1, w2] ; source: Z(..) + Z(..) ; range: Z(..) + Z(..)`, pieces in element order.
Certificate parse_certificate(const SeparatedGraph &g, const std::string &text);
std::string certificate_text(const SeparatedGraph &g, const Certificate &c);

std::string trim(const std::string &s);

} // namespace sepgroid
