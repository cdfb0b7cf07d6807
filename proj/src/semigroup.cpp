#include "sepgroid/semigroup.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

namespace sepgroid {

VertexId path_range(const SeparatedGraph &g, const Path &p) {
    return p.edges.empty() ? p.start : g.edge(p.edges.back()).range;
}

namespace {

bool seq_is_prefix(const std::vector<EdgeId> &a, const std::vector<EdgeId> &b) {
    return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

int sigma_skip(int j, int i) { return j < i ? j : j - 1; }

VertexId step_source(const SeparatedGraph &g, const CPath &c, int idx) {
    return idx == 0 ? c.start : g.edge(c.steps[idx - 1].connector).range;
}

} // namespace

bool path_is_prefix(const Path &a, const Path &b) {
    return a.start == b.start && seq_is_prefix(a.edges, b.edges);
}

VertexId cpath_range(const SeparatedGraph &g, const CPath &c) {
    return c.steps.empty() ? c.start : g.edge(c.steps.back().connector).range;
}

int cpath_length(const CPath &c) {
    int n = 0;
    for (const Step &s : c.steps) n += s.power + static_cast<int>(s.walk.size()) + 1;
    return n;
}

bool cpath_is_prefix(const CPath &a, const CPath &b) {
    return a.start == b.start && a.steps.size() <= b.steps.size() &&
           std::equal(a.steps.begin(), a.steps.end(), b.steps.begin());
}

CPath cpath_suffix(const SeparatedGraph &g, const CPath &c, int from_step) {
    CPath out;
    out.start = step_source(g, c, from_step);
    out.steps.assign(c.steps.begin() + from_step, c.steps.end());
    return out;
}

CPath cpath_prefix(const CPath &c, int steps) {
    CPath out;
    out.start = c.start;
    out.steps.assign(c.steps.begin(), c.steps.begin() + steps);
    return out;
}

CPath cpath_concat(const CPath &a, const CPath &b) {
    CPath out = a;
    out.steps.insert(out.steps.end(), b.steps.begin(), b.steps.end());
    return out;
}

std::vector<EdgeId> cpath_edges(const SeparatedGraph &g, const CPath &c) {
    std::vector<EdgeId> out;
    for (const Step &s : c.steps) {
        const Edge &e = g.edge(s.connector);
        if (e.kind == EdgeKind::FreeConnector) {
            EdgeId a = g.alpha(g.prime_of(e.source), e.loop);
            out.insert(out.end(), s.power, a);
        } else {
            out.insert(out.end(), s.walk.begin(), s.walk.end());
        }
        out.push_back(s.connector);
    }
    return out;
}

CPath cpath_from_edges(const SeparatedGraph &g, VertexId start, const std::vector<EdgeId> &es) {
    CPath c;
    c.start = start;
    VertexId v = start;
    size_t pos = 0;
    while (pos < es.size()) {
        Step st;
        if (g.is_free_vertex(v)) {
            int loop = 0;
            while (pos < es.size() && g.edge(es[pos]).kind == EdgeKind::Loop &&
                   g.edge(es[pos]).source == v) {
                if (loop != 0 && g.edge(es[pos]).loop != loop)
                    throw DomainError("mixed loops inside one c-path step");
                loop = g.edge(es[pos]).loop;
                ++st.power;
                ++pos;
            }
            if (pos == es.size()) throw DomainError("c-path does not end with a connector");
            const Edge &b = g.edge(es[pos]);
            if (b.kind != EdgeKind::FreeConnector || b.source != v ||
                (loop != 0 && b.loop != loop))
                throw DomainError("expected a connector b:" + g.prime(g.prime_of(v)).name +
                                  (loop ? "." + std::to_string(loop) : std::string()) + ".*");
        } else {
            while (pos < es.size() && g.edge(es[pos]).kind == EdgeKind::Internal) {
                if (g.edge(es[pos]).source != v) throw DomainError("edges are not consecutive");
                st.walk.push_back(es[pos]);
                v = g.edge(es[pos]).range;
                ++pos;
            }
            if (pos == es.size()) throw DomainError("c-path does not end with a connector");
            const Edge &b = g.edge(es[pos]);
            if (b.kind != EdgeKind::RegularConnector || b.source != v)
                throw DomainError("expected a connector from '" + g.vertex(v).name + "'");
        }
        st.connector = es[pos++];
        v = g.edge(st.connector).range;
        c.steps.push_back(std::move(st));
    }
    return c;
}

TPart tpart_add(const TPart &a, const TPart &b) {
    TPart out = a;
    for (auto [i, d] : b) {
        int &x = out[i];
        x += d;
        if (x == 0) out.erase(i);
    }
    return out;
}

TPart tpart_negate(const TPart &a) {
    TPart out;
    for (auto [i, d] : a) out[i] = -d;
    return out;
}

TPart tpart_push(const SeparatedGraph &g, TPart t, const CPath &c, int from) {
    for (int s = from; s < c.depth(); ++s) {
        VertexId v = step_source(g, c, s);
        if (!g.is_free_vertex(v)) continue;
        const int shift = g.prime(g.prime_of(v)).k() - 1;
        if (shift == 0) continue;
        TPart moved;
        for (auto [i, d] : t) moved[i + shift] = d;
        t = std::move(moved);
    }
    return t;
}

Monomial identity_monomial(const SeparatedGraph &g, VertexId v) {
    Monomial m;
    m.prime = g.prime_of(v);
    m.lhs = m.rhs = Path{v, {}};
    if (g.is_free_vertex(v)) {
        const int k = g.prime(m.prime).k();
        m.k.assign(k, 0);
        m.l.assign(k, 0);
    }
    return m;
}

bool is_pure_t(const Monomial &m) {
    return std::all_of(m.k.begin(), m.k.end(), [](int x) { return x == 0; }) &&
           std::all_of(m.l.begin(), m.l.end(), [](int x) { return x == 0; }) &&
           m.lhs.edges.empty() && m.rhs.edges.empty();
}

Monomial star(const Monomial &m) {
    Monomial out = m;
    out.t = tpart_negate(m.t);
    std::swap(out.k, out.l);
    std::swap(out.lhs, out.rhs);
    return out;
}

std::optional<Monomial> mul_monomials(const SeparatedGraph &g, const Monomial &a,
                                      const Monomial &b) {
    if (a.prime != b.prime) throw DomainError("monomials over different primes");
    if (a.range() != b.source()) throw DomainError("monomial endpoints do not match");
    Monomial out;
    out.prime = a.prime;
    out.t = tpart_add(a.t, b.t);
    if (g.prime(a.prime).kind == PrimeKind::Free) {
        out.lhs = a.lhs;
        out.rhs = b.rhs;
        const size_t k = a.k.size();
        out.k.resize(k);
        out.l.resize(k);
        for (size_t j = 0; j < k; ++j) {
            out.k[j] = std::max(a.k[j], a.k[j] + b.k[j] - a.l[j]);
            out.l[j] = std::max(b.l[j], b.l[j] + a.l[j] - b.k[j]);
        }
        return out;
    }
    const auto &nu1 = a.rhs.edges, &g2 = b.lhs.edges;
    if (seq_is_prefix(nu1, g2)) {
        out.lhs = a.lhs;
        out.lhs.edges.insert(out.lhs.edges.end(), g2.begin() + nu1.size(), g2.end());
        out.rhs = b.rhs;
    } else if (seq_is_prefix(g2, nu1)) {
        out.lhs = a.lhs;
        out.rhs = b.rhs;
        out.rhs.edges.insert(out.rhs.edges.end(), nu1.begin() + g2.size(), nu1.end());
    } else {
        return std::nullopt;
    }
    return out;
}

std::optional<Translation> translate(const SeparatedGraph &g, const Monomial &m,
                                     const CPath &eta) {
    if (eta.start != m.range()) throw DomainError("translate: endpoint mismatch");
    if (eta.trivial()) {
        if (!is_pure_t(m)) throw DomainError("translate along a trivial path needs a pure-t monomial");
        return Translation{eta, m.t};
    }
    Translation out{eta, {}};
    Step &st = out.path.steps[0];
    const Prime &pr = g.prime(m.prime);
    if (pr.kind == PrimeKind::Free) {
        const int i = g.edge(st.connector).loop;
        if (m.l[i - 1] > st.power) return std::nullopt;
        st.power = m.k[i - 1] + st.power - m.l[i - 1];
        for (int j = 1; j <= pr.k(); ++j) {
            if (j == i) continue;
            int d = m.k[j - 1] - m.l[j - 1];
            if (d != 0) out.phi[sigma_skip(j, i)] += d;
        }
        for (auto [idx, d] : m.t) out.phi = tpart_add(out.phi, TPart{{idx + pr.k() - 1, d}});
    } else {
        if (!seq_is_prefix(m.rhs.edges, st.walk)) return std::nullopt;
        std::vector<EdgeId> walk = m.lhs.edges;
        walk.insert(walk.end(), st.walk.begin() + m.rhs.edges.size(), st.walk.end());
        st.walk = std::move(walk);
        out.path.start = m.source();
        out.phi = m.t;
    }
    out.phi = tpart_push(g, std::move(out.phi), out.path, 1);
    return out;
}

const Triple &Element::triple() const {
    if (!t_) throw DomainError("zero element has no triple");
    return *t_;
}

Element vertex_element(const SeparatedGraph &g, VertexId v) {
    return Element::triple(CPath{v, {}}, identity_monomial(g, v), CPath{v, {}});
}

Element edge_element(const SeparatedGraph &g, EdgeId e) {
    const Edge &ed = g.edge(e);
    switch (ed.kind) {
    case EdgeKind::Internal: {
        Monomial m = identity_monomial(g, ed.source);
        m.lhs = Path{ed.source, {e}};
        m.rhs = Path{ed.range, {}};
        return Element::triple(CPath{ed.source, {}}, m, CPath{ed.range, {}});
    }
    case EdgeKind::Loop: {
        Monomial m = identity_monomial(g, ed.source);
        m.k[ed.loop - 1] = 1;
        return Element::triple(CPath{ed.source, {}}, m, CPath{ed.source, {}});
    }
    default:
        return Element::triple(CPath{ed.source, {Step{0, {}, e}}}, identity_monomial(g, ed.range),
                               CPath{ed.range, {}});
    }
}

Element t_element(const SeparatedGraph &g, VertexId v, int index, int exponent) {
    if (index < 1) throw DomainError("t index must be at least 1");
    Monomial m = identity_monomial(g, v);
    if (exponent != 0) m.t[index] = exponent;
    return Element::triple(CPath{v, {}}, m, CPath{v, {}});
}

Element star(const Element &e) {
    if (e.is_zero()) return e;
    return Element::triple(e.eta(), star(e.mono()), e.gamma());
}

Element mul(const SeparatedGraph &g, const Element &a, const Element &b) {
    if (a.is_zero() || b.is_zero()) return Element::zero();
    const Triple &x = a.triple(), &y = b.triple();
    if (cpath_is_prefix(y.gamma, x.eta)) {
        if (x.eta.depth() == y.gamma.depth()) {
            auto m = mul_monomials(g, x.mono, y.mono);
            if (!m) return Element::zero();
            return Element::triple(x.gamma, *m, y.eta);
        }
        auto tr = translate(g, star(y.mono), cpath_suffix(g, x.eta, y.gamma.depth()));
        if (!tr) return Element::zero();
        Monomial m = x.mono;
        m.t = tpart_add(m.t, tpart_negate(tr->phi));
        return Element::triple(x.gamma, std::move(m), cpath_concat(y.eta, tr->path));
    }
    if (cpath_is_prefix(x.eta, y.gamma)) {
        auto tr = translate(g, x.mono, cpath_suffix(g, y.gamma, x.eta.depth()));
        if (!tr) return Element::zero();
        Monomial n = y.mono;
        n.t = tpart_add(tr->phi, n.t);
        return Element::triple(cpath_concat(x.gamma, tr->path), std::move(n), y.eta);
    }
    return Element::zero();
}

std::pair<VertexId, VertexId> endpoints(const Element &e) {
    if (e.is_zero()) throw DomainError("endpoints of zero");
    return {e.gamma().start, e.eta().start};
}

bool is_idempotent(const Element &e) {
    if (e.is_zero()) return false;
    const Triple &t = e.triple();
    return t.gamma == t.eta && t.mono.t.empty() && t.mono.k == t.mono.l &&
           t.mono.lhs == t.mono.rhs;
}

namespace {

const std::string kId = "[A-Za-z_][A-Za-z0-9_]*";

int parse_index(const std::string &s) {
    try {
        return std::stoi(s);
    } catch (const std::exception &) {
        throw ParseError("bad index '" + s + "'");
    }
}

Element parse_token(const SeparatedGraph &g, const std::string &tok) {
    static const std::regex re_v("v:(" + kId + ")");
    static const std::regex re_e("e:(" + kId + ")(\\*?)");
    static const std::regex re_a("a:(" + kId + ")\\.([0-9]+)(\\*?)");
    static const std::regex re_b("b:(" + kId + ")\\.([0-9]+)\\.([0-9]+)(\\*?)");
    static const std::regex re_t("t:(" + kId + ")\\.([0-9]+)(\\^-1)?");
    std::smatch m;
    auto prime = [&](const std::string &name) {
        auto p = g.find_prime(name);
        if (!p) throw ParseError("unknown prime '" + name + "' in token '" + tok + "'");
        if (g.prime(*p).kind != PrimeKind::Free)
            throw ParseError("prime '" + name + "' is not free in token '" + tok + "'");
        return *p;
    };
    auto in_range = [&](auto f) {
        try {
            return f();
        } catch (const DomainError &) {
            throw ParseError("index out of range in token '" + tok + "'");
        }
    };
    if (tok == "0") return Element::zero();
    if (std::regex_match(tok, m, re_v)) {
        auto v = g.find_vertex(m[1]);
        if (!v) throw ParseError("unknown vertex in token '" + tok + "'");
        return vertex_element(g, *v);
    }
    if (std::regex_match(tok, m, re_e)) {
        auto e = g.find_edge(m[1]);
        if (!e) throw ParseError("unknown edge in token '" + tok + "'");
        Element x = edge_element(g, *e);
        return m[2].length() ? star(x) : x;
    }
    if (std::regex_match(tok, m, re_a)) {
        PrimeIndex p = prime(m[1]);
        EdgeId e = in_range([&] { return g.alpha(p, parse_index(m[2])); });
        Element x = edge_element(g, e);
        return m[3].length() ? star(x) : x;
    }
    if (std::regex_match(tok, m, re_b)) {
        PrimeIndex p = prime(m[1]);
        EdgeId e = in_range([&] { return g.beta(p, parse_index(m[2]), parse_index(m[3])); });
        Element x = edge_element(g, e);
        return m[4].length() ? star(x) : x;
    }
    if (std::regex_match(tok, m, re_t)) {
        auto v = g.find_vertex(m[1]);
        if (!v) throw ParseError("unknown vertex in token '" + tok + "'");
        int i = parse_index(m[2]);
        if (i < 1) throw ParseError("t index must be at least 1 in token '" + tok + "'");
        return t_element(g, *v, i, m[3].length() ? -1 : 1);
    }
    throw ParseError("bad token '" + tok +
                     "' (expected v:NAME | e:NAME[*] | a:P.J[*] | b:P.I.T[*] | t:V.I[^-1] | 0)");
}

void append_step_tokens(const SeparatedGraph &g, const Step &s, std::vector<std::string> &out) {
    const Edge &c = g.edge(s.connector);
    if (c.kind == EdgeKind::FreeConnector) {
        const std::string a = g.edge(g.alpha(g.prime_of(c.source), c.loop)).name;
        for (int i = 0; i < s.power; ++i) out.push_back(a);
        out.push_back(c.name);
    } else {
        for (EdgeId e : s.walk) out.push_back("e:" + g.edge(e).name);
        out.push_back("e:" + c.name);
    }
}

std::string edge_token(const SeparatedGraph &g, EdgeId e) {
    const Edge &ed = g.edge(e);
    if (ed.kind == EdgeKind::Loop || ed.kind == EdgeKind::FreeConnector) return ed.name;
    return "e:" + ed.name;
}

std::string join(const std::vector<std::string> &v, const std::string &sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

} // namespace

Element parse_word(const SeparatedGraph &g, const std::string &text) {
    std::istringstream in(text);
    std::string tok;
    std::optional<Element> acc;
    while (in >> tok) {
        Element x = parse_token(g, tok);
        acc = acc ? mul(g, *acc, x) : x;
    }
    if (!acc) throw ParseError("empty word");
    return *acc;
}

std::string to_word(const SeparatedGraph &g, const Element &e) {
    if (e.is_zero()) return "0";
    const Triple &t = e.triple();
    std::vector<std::string> toks;
    for (const Step &s : t.gamma.steps) append_step_tokens(g, s, toks);
    const Monomial &m = t.mono;
    const std::string base = g.vertex(m.source()).name;
    for (auto [i, d] : m.t)
        for (int r = 0; r < std::abs(d); ++r)
            toks.push_back("t:" + base + "." + std::to_string(i) + (d < 0 ? "^-1" : ""));
    if (g.prime(m.prime).kind == PrimeKind::Free) {
        for (size_t j = 0; j < m.k.size(); ++j) {
            const std::string a = g.edge(g.alpha(m.prime, static_cast<int>(j) + 1)).name;
            for (int r = 0; r < m.k[j]; ++r) toks.push_back(a);
            for (int r = 0; r < m.l[j]; ++r) toks.push_back(a + "*");
        }
    } else {
        for (EdgeId x : m.lhs.edges) toks.push_back(edge_token(g, x));
        for (auto it = m.rhs.edges.rbegin(); it != m.rhs.edges.rend(); ++it)
            toks.push_back(edge_token(g, *it) + "*");
    }
    std::vector<EdgeId> eta = cpath_edges(g, t.eta);
    for (auto it = eta.rbegin(); it != eta.rend(); ++it) toks.push_back(edge_token(g, *it) + "*");
    if (toks.empty()) return "v:" + g.vertex(t.gamma.start).name;
    return join(toks, " ");
}

std::string cpath_text(const SeparatedGraph &g, const CPath &c) {
    std::vector<std::string> toks;
    for (const Step &s : c.steps) append_step_tokens(g, s, toks);
    return g.vertex(c.start).name + "[" + join(toks, " ") + "]";
}

std::string to_text(const SeparatedGraph &g, const Element &e) {
    if (e.is_zero()) return "0";
    const Triple &t = e.triple();
    const Monomial &m = t.mono;
    std::vector<std::string> tp;
    for (auto [i, d] : m.t) tp.push_back("t" + std::to_string(i) + "^" + std::to_string(d));
    std::string body;
    if (g.prime(m.prime).kind == PrimeKind::Free) {
        std::vector<std::string> ks, ls;
        for (int x : m.k) ks.push_back(std::to_string(x));
        for (int x : m.l) ls.push_back(std::to_string(x));
        body = "k=(" + join(ks, ",") + ") l=(" + join(ls, ",") + ")";
    } else {
        std::vector<std::string> a, b;
        for (EdgeId x : m.lhs.edges) a.push_back(g.edge(x).name);
        for (EdgeId x : m.rhs.edges) b.push_back(g.edge(x).name);
        body = g.vertex(m.lhs.start).name + "(" + join(a, " ") + ") " +
               g.vertex(m.rhs.start).name + "(" + join(b, " ") + ")*";
    }
    return cpath_text(g, t.gamma) + " | " + (tp.empty() ? "-" : join(tp, " ")) + " | " + body +
           " | " + cpath_text(g, t.eta);
}

} // namespace sepgroid
