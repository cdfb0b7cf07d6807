#include "sepgroid/text.hpp"

#include <cctype>
#include <regex>
#include <sstream>

namespace sepgroid {

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

namespace {

int parse_int(const std::string &s, const std::string &what) {
    static const std::regex re("-?[0-9]+");
    const std::string t = trim(s);
    if (!std::regex_match(t, re)) throw ParseError("bad " + what + " '" + t + "'");
    try {
        return std::stoi(t);
    } catch (const std::exception &) {
        throw ParseError(what + " out of range '" + t + "'");
    }
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::vector<EdgeId> internal_edges(const SeparatedGraph &g, const std::string &text) {
    std::istringstream in(text);
    std::string tok;
    std::vector<EdgeId> out;
    while (in >> tok) {
        const std::string name = tok.rfind("e:", 0) == 0 ? tok.substr(2) : tok;
        auto e = g.find_edge(name);
        if (!e || g.edge(*e).kind != EdgeKind::Internal)
            throw ParseError("'" + tok + "' is not an internal edge");
        out.push_back(*e);
    }
    return out;
}

CPath parse_cpath_word(const SeparatedGraph &g, const std::string &text) {
    static const std::regex re_v("v:([A-Za-z_][A-Za-z0-9_]*)");
    std::smatch m;
    const std::string t = trim(text);
    if (std::regex_match(t, m, re_v)) {
        auto v = g.find_vertex(m[1]);
        if (!v) throw ParseError("unknown vertex '" + std::string(m[1]) + "'");
        return CPath{*v, {}};
    }
    Element e = parse_word(g, t);
    if (e.is_zero()) throw ParseError("path prefix '" + t + "' is zero");
    const VertexId r = cpath_range(g, e.gamma());
    if (e.eta() != CPath{r, {}} || e.mono() != identity_monomial(g, r))
        throw ParseError("path prefix '" + t + "' is not a c-path");
    return e.gamma();
}

// End of the path literal starting at `pos` (one past its closing parenthesis).
size_t literal_end(const std::string &s, size_t pos) {
    const size_t close = s.find(']', pos);
    if (close == std::string::npos) throw ParseError("path literal: missing ']'");
    const size_t open = s.find('(', close);
    if (open == std::string::npos) throw ParseError("path literal: missing tail");
    const size_t end = s.find(')', open);
    if (end == std::string::npos) throw ParseError("path literal: missing ')'");
    return end + 1;
}

class CoParser {
public:
    CoParser(const SeparatedGraph &g, const std::string &s) : g_(g), s_(s) {}

    CompactOpen parse() {
        CompactOpen a = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_, 1) + "'");
        return a;
    }

private:
    const SeparatedGraph &g_;
    const std::string &s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string &msg) const {
        throw ParseError("compact open at column " + std::to_string(pos_ + 1) + ": " + msg +
                         " (grammar: Z(<word>) | 0 | (expr) with infix & - +)");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    CompactOpen expr() {
        CompactOpen a = term();
        for (;;) {
            if (eat('+'))
                a = co_union(g_, a, term());
            else if (eat('-'))
                a = co_subtract(g_, a, term());
            else
                return a;
        }
    }
    CompactOpen term() {
        CompactOpen a = factor();
        while (eat('&')) a = co_intersect(g_, a, factor());
        return a;
    }
    CompactOpen factor() {
        skip();
        if (eat('(')) {
            CompactOpen a = expr();
            if (!eat(')')) fail("expected ')'");
            return a;
        }
        if (eat('0')) return {};
        if (s_.compare(pos_, 2, "Z(") != 0) fail("expected Z(, 0 or (");
        pos_ += 2;
        const size_t close = s_.find(')', pos_);
        if (close == std::string::npos) fail("missing ')' after Z(");
        const std::string word = s_.substr(pos_, close - pos_);
        pos_ = close + 1;
        Element e = parse_word(g_, word);
        if (e.is_zero()) return {};
        if (!is_idempotent(e)) fail("Z(" + trim(word) + ") needs an idempotent");
        return CompactOpen::cylinder(epath_of(g_, e));
    }
};

} // namespace

SemifinitePath parse_path_literal(const SeparatedGraph &g, const std::string &text) {
    static const std::regex re(R"(\s*\[([^\]]*)\]\s*;\s*(free|reg)\(([^)]*)\)\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, re))
        throw ParseError("bad path literal '" + trim(text) +
                         "' (expected [word] ; free(k1,...) or [word] ; reg(edges [; cycle]))");
    SemifinitePath mu;
    mu.gamma = parse_cpath_word(g, m[1]);
    const VertexId v = cpath_range(g, mu.gamma);
    const std::string body = m[3];
    if (m[2] == "free") {
        mu.kind = TailKind::Free;
        if (!trim(body).empty())
            for (const std::string &x : split(body, ','))
                mu.exps.push_back(x == "inf" ? kInfinity : parse_int(x, "exponent"));
    } else {
        auto parts = split(body, ';');
        if (parts.size() > 2) throw ParseError("reg(...) takes at most one ';'");
        mu.kind = parts.size() == 2 ? TailKind::RegularPeriodic : TailKind::RegularFinite;
        mu.prefix = Path{v, internal_edges(g, parts[0])};
        if (parts.size() == 2) {
            mu.cycle = internal_edges(g, parts[1]);
            if (mu.cycle.empty()) throw ParseError("empty cycle in reg(...)");
        }
    }
    try {
        check_semifinite(g, mu);
    } catch (const DomainError &e) {
        throw ParseError(std::string("path literal: ") + e.what());
    }
    return canonical(mu);
}

CompactOpen parse_compact_open(const SeparatedGraph &g, const std::string &text) {
    return CoParser(g, text).parse();
}

std::string compact_open_text(const SeparatedGraph &g, const CompactOpen &a) {
    if (a.empty()) return "0";
    std::string s;
    for (const EPath &mu : a.cylinders())
        s += (s.empty() ? "" : " + ") + std::string("Z(") + to_word(g, idem_of(g, mu)) + ")";
    return s;
}

MonElem parse_mon_elem(const SeparatedGraph &g, const std::string &text) {
    static const std::regex re(R"(\s*(?:([0-9]+)\s*\*\s*)?a:([A-Za-z_][A-Za-z0-9_]*)\s*)");
    MonElem out = mon_zero(g);
    if (trim(text) == "0") return out;
    for (const std::string &term : split(text, '+')) {
        std::smatch m;
        if (!std::regex_match(term, m, re))
            throw ParseError("bad monoid term '" + term + "' (expected [N*]a:VERTEX, joined by +)");
        auto v = g.find_vertex(m[2]);
        if (!v) throw ParseError("unknown vertex '" + std::string(m[2]) + "'");
        out[*v] += m[1].length() ? parse_int(m[1], "coefficient") : 1;
    }
    return out;
}

std::string mon_elem_text(const SeparatedGraph &g, const MonElem &m) {
    std::string s;
    for (VertexId v = 0; v < static_cast<VertexId>(m.size()); ++v) {
        if (m[v] == 0) continue;
        if (!s.empty()) s += " + ";
        if (m[v] != 1) s += std::to_string(m[v]) + "*";
        s += "a:" + g.vertex(v).name;
    }
    return s.empty() ? "0" : s;
}

TPart parse_sequence(const std::string &text) {
    const std::string t = trim(text);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        throw ParseError("bad sequence '" + t + "' (expected (n1,n2,...))");
    TPart out;
    const std::string body = t.substr(1, t.size() - 2);
    if (trim(body).empty()) return out;
    int i = 1;
    for (const std::string &x : split(body, ',')) {
        const int v = parse_int(x, "sequence entry");
        if (v != 0) out[i] = v;
        ++i;
    }
    return out;
}

std::string sequence_text(const TPart &t) {
    std::string s = "(";
    const int n = t.empty() ? 0 : t.rbegin()->first;
    for (int i = 1; i <= n; ++i) {
        auto it = t.find(i);
        s += (i > 1 ? "," : "") + std::to_string(it == t.end() ? 0 : it->second);
    }
    return s + ")";
}

Germ parse_germ(const SeparatedGraph &g, const std::string &text) {
    const std::string t = trim(text);
    auto fail = [&](const std::string &msg) {
        return ParseError("germ: " + msg + " (expected (x ; n1 ; n2 ; y))");
    };
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw fail("missing parentheses");
    const std::string body = t.substr(1, t.size() - 2);
    const size_t xe = literal_end(body, 0);
    const std::string x = body.substr(0, xe);
    size_t pos = body.find(';', xe);
    if (pos == std::string::npos) throw fail("missing n1");
    size_t n1e = body.find(')', pos);
    if (n1e == std::string::npos) throw fail("bad n1");
    const std::string n1 = body.substr(pos + 1, n1e - pos);
    pos = body.find(';', n1e);
    if (pos == std::string::npos) throw fail("missing n2");
    size_t n2e = body.find(')', pos);
    if (n2e == std::string::npos) throw fail("bad n2");
    const std::string n2 = body.substr(pos + 1, n2e - pos);
    pos = body.find(';', n2e);
    if (pos == std::string::npos) throw fail("missing y");
    const std::string y = body.substr(pos + 1);
    try {
        return make_germ(g, parse_path_literal(g, x), {parse_sequence(n1), parse_sequence(n2)},
                         parse_path_literal(g, y));
    } catch (const DomainError &e) {
        throw fail(e.what());
    }
}

std::string germ_text(const SeparatedGraph &g, const Germ &a) {
    return "(" + path_literal(g, a.x) + " ; " + sequence_text(a.weight.n1) + " ; " +
           sequence_text(a.weight.n2) + " ; " + path_literal(g, a.y) + ")";
}

Script parse_script(const std::string &text) {
    static const std::regex re("([0-9]+):([0-9]+)");
    std::string t = text;
    for (char &c : t)
        if (c == ',') c = ' ';
    std::istringstream in(t);
    std::string tok;
    Script out;
    while (in >> tok) {
        std::smatch m;
        if (!std::regex_match(tok, m, re))
            throw ParseError("bad script step '" + tok + "' (expected POSITION:CHOICE)");
        out.push_back({parse_int(m[1], "position"), parse_int(m[2], "choice")});
    }
    return out;
}

std::string script_text(const Script &s) {
    std::string out;
    for (const ScriptStep &x : s)
        out += (out.empty() ? "" : ", ") + std::to_string(x.position) + ":" + std::to_string(x.choice);
    return out;
}

Certificate parse_certificate(const SeparatedGraph &g, const std::string &text) {
    static const std::regex re(
        R"(\s*\[([^\]]*)\]\s*;\s*source:\s*([^;]*);\s*range:\s*([^;]*))");
    std::smatch m;
    if (!std::regex_match(text, m, re))
        throw ParseError("bad certificate (expected [w1, ...] ; source: Z(..) + ... ; range: Z(..) + ...)");
    Certificate c;
    if (!trim(m[1]).empty())
        for (const std::string &w : split(m[1], ',')) c.elements.push_back(parse_word(g, w));
    auto pieces = [&](const std::string &s) {
        std::vector<Element> out;
        if (trim(s) == "0") return out;
        static const std::regex zre(R"(\s*Z\(([^)]*)\)\s*)");
        for (const std::string &z : split(s, '+')) {
            std::smatch zm;
            if (!std::regex_match(z, zm, zre)) throw ParseError("bad certificate piece '" + z + "'");
            out.push_back(parse_word(g, zm[1]));
        }
        return out;
    };
    c.source = pieces(m[2]);
    c.range = pieces(m[3]);
    if (c.source.size() != c.elements.size() || c.range.size() != c.elements.size())
        throw ParseError("certificate piece counts differ from the element count");
    return c;
}

std::string certificate_text(const SeparatedGraph &g, const Certificate &c) {
    auto words = [&](const std::vector<Element> &v, const std::string &sep, bool z) {
        std::string s;
        for (const Element &e : v)
            s += (s.empty() ? "" : sep) + (z ? "Z(" + to_word(g, e) + ")" : to_word(g, e));
        return s;
    };
    const std::string src = c.source.empty() ? "0" : words(c.source, " + ", true);
    const std::string rng = c.range.empty() ? "0" : words(c.range, " + ", true);
    return "[" + words(c.elements, ", ", false) + "] ; source: " + src + " ; range: " + rng;
}

} // namespace sepgroid
