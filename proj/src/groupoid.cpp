#include "sepgroid/groupoid.hpp"

#include <algorithm>

namespace sepgroid {

GermWeight weight_add(const GermWeight &a, const GermWeight &b) {
    return {tpart_add(a.n1, b.n1), tpart_add(a.n2, b.n2)};
}

GermWeight weight_negate(const GermWeight &a) {
    return {tpart_negate(a.n1), tpart_negate(a.n2)};
}

TPart norm_length(const SeparatedGraph &g, const EPath &gamma) {
    const int base = cpath_length(gamma.gamma);
    TPart out;
    if (g.is_free_vertex(cpath_range(g, gamma.gamma))) {
        for (size_t j = 0; j < gamma.exps.size(); ++j)
            if (gamma.exps[j] + base != 0) out[static_cast<int>(j) + 1] = gamma.exps[j] + base;
    } else if (base + gamma.tail.length() != 0) {
        out[1] = base + gamma.tail.length();
    }
    return out;
}

namespace {

// delta copied into every length coordinate of the terminal component of x.
TPart spread(const SeparatedGraph &g, const SemifinitePath &x, int delta) {
    TPart out;
    if (delta == 0) return out;
    const VertexId v = cpath_range(g, x.gamma);
    if (!g.is_free_vertex(v)) {
        out[1] = delta;
        return out;
    }
    for (int j = 1; j <= g.prime(g.prime_of(v)).k(); ++j) out[j] = delta;
    return out;
}

// Periodic tail of mu with its first b edges removed.
SemifinitePath drop_tail(const SeparatedGraph &g, const SemifinitePath &mu, int b) {
    SemifinitePath out = mu;
    const int a = mu.prefix.length();
    if (b <= a) {
        out.prefix.edges.erase(out.prefix.edges.begin(), out.prefix.edges.begin() + b);
    } else {
        out.prefix.edges.clear();
        const int r = (b - a) % static_cast<int>(mu.cycle.size());
        std::rotate(out.cycle.begin(), out.cycle.begin() + r, out.cycle.end());
    }
    out.prefix.start = g.edge(out.prefix.edges.empty() ? out.cycle[0] : out.prefix.edges[0]).source;
    return out;
}

Path tail_prefix(const SemifinitePath &mu, VertexId start, int n) {
    Path p{start, {}};
    for (int i = 0; i < n; ++i) p.edges.push_back(tail_edge(mu, i));
    return p;
}

bool support_within(const TPart &t, int k) {
    return std::all_of(t.begin(), t.end(), [k](const auto &kv) { return kv.first >= 1 && kv.first <= k; });
}

int at(const TPart &t, int i) {
    auto it = t.find(i);
    return it == t.end() ? 0 : it->second;
}

} // namespace

std::optional<GermWitness> find_witness(const SeparatedGraph &g, const SemifinitePath &x,
                                        const TPart &n2, const SemifinitePath &y) {
    if (!is_infinite(x) || !is_infinite(y)) return std::nullopt;
    const VertexId vx = cpath_range(g, x.gamma), vy = cpath_range(g, y.gamma);
    if (g.prime_of(vx) != g.prime_of(vy)) return std::nullopt;
    const int lx = cpath_length(x.gamma), ly = cpath_length(y.gamma);
    GermWitness w{epath_base(g, x.gamma), epath_base(g, y.gamma)};
    if (g.is_free_vertex(vx)) {
        const int k = g.prime(g.prime_of(vx)).k();
        if (!support_within(n2, k)) return std::nullopt;
        for (int j = 1; j <= k; ++j) {
            const int d = at(n2, j) - lx + ly;
            w.gamma.exps[j - 1] = std::max(d, 0);
            w.nu.exps[j - 1] = std::max(-d, 0);
        }
        return w;
    }
    if (!support_within(n2, 1)) return std::nullopt;
    const int len = static_cast<int>(x.cycle.size());
    if (static_cast<int>(y.cycle.size()) != len) return std::nullopt;
    int r = 0;
    for (; r < len; ++r) {
        bool ok = true;
        for (int i = 0; i < len && ok; ++i) ok = x.cycle[i] == y.cycle[(i + r) % len];
        if (ok) break;
    }
    if (r == len) return std::nullopt;
    int a = x.prefix.length(), b = y.prefix.length() + r;
    const int diff = at(n2, 1) - (lx + a - ly - b);
    if (diff % len != 0) return std::nullopt;
    const int q = diff / len;
    a += std::max(q, 0) * len;
    b += std::max(-q, 0) * len;
    w.gamma.tail = tail_prefix(x, vx, a);
    w.nu.tail = tail_prefix(y, vy, b);
    return w;
}

Germ make_germ(const SeparatedGraph &g, const SemifinitePath &x, const GermWeight &n,
               const SemifinitePath &y) {
    Germ out{canonical(x), n, canonical(y), {}};
    check_semifinite(g, out.x);
    check_semifinite(g, out.y);
    if (!is_infinite(out.x) || !is_infinite(out.y)) throw DomainError("germ endpoints must be infinite paths");
    auto w = find_witness(g, out.x, n.n2, out.y);
    if (!w) throw DomainError("no common-tail decomposition matches the length weight");
    out.witness = *w;
    return out;
}

Germ unit(const SeparatedGraph &g, const SemifinitePath &x) { return make_germ(g, x, {}, x); }

Germ inverse(const SeparatedGraph &g, const Germ &a) {
    return make_germ(g, a.y, weight_negate(a.weight), a.x);
}

Germ compose(const SeparatedGraph &g, const Germ &a, const Germ &b) {
    if (canonical(a.y) != canonical(b.x)) throw DomainError("compose: germs are not composable");
    return make_germ(g, a.x, weight_add(a.weight, b.weight), b.y);
}

Germ germ_of(const SeparatedGraph &g, const Element &s, const SemifinitePath &x0) {
    if (s.is_zero()) throw DomainError("germ_of: zero element");
    const SemifinitePath x = canonical(x0);
    check_semifinite(g, x);
    if (!is_infinite(x)) throw DomainError("germ_of: path is not infinite");
    if (!filter_contains(g, x, mul(g, star(s), s)))
        throw DomainError("germ_of: path is not in the domain of the element");
    const Element r = mul(g, s, idem_of(g, epath_base(g, x.gamma)));
    if (r.is_zero() || r.eta() != x.gamma) throw DomainError("germ_of: reduction failed");
    const Triple &t = r.triple();
    const int lg = cpath_length(t.gamma), le = cpath_length(t.eta);
    SemifinitePath range;
    range.gamma = t.gamma;
    GermWeight n;
    n.n1 = t.mono.t;
    if (g.prime(t.mono.prime).kind == PrimeKind::Free) {
        range.kind = TailKind::Free;
        range.exps.assign(t.mono.k.size(), kInfinity);
        for (size_t j = 0; j < t.mono.k.size(); ++j) {
            const int d = lg + t.mono.k[j] - t.mono.l[j] - le;
            if (d != 0) n.n2[static_cast<int>(j) + 1] = d;
        }
    } else {
        const Path &lam1 = t.mono.lhs, &lam2 = t.mono.rhs;
        for (int i = 0; i < lam2.length(); ++i)
            if (tail_edge(x, i) != lam2.edges[i]) throw DomainError("germ_of: tail mismatch");
        const SemifinitePath rest = drop_tail(g, x, lam2.length());
        range.kind = TailKind::RegularPeriodic;
        range.prefix = lam1;
        range.prefix.edges.insert(range.prefix.edges.end(), rest.prefix.edges.begin(),
                                  rest.prefix.edges.end());
        range.cycle = rest.cycle;
        n.n2 = spread(g, x, lg + lam1.length() - lam2.length() - le);
    }
    return make_germ(g, range, n, x);
}

bool in_bisection(const SeparatedGraph &g, const Germ &a, const Element &s) {
    if (s.is_zero()) return false;
    const Triple &t = s.triple();
    const SemifinitePath &y = a.y;
    if (!cpath_is_prefix(t.eta, y.gamma)) return false;
    const int d = t.eta.depth();
    const int lg = cpath_length(t.gamma), ln = cpath_length(t.eta);
    const bool free = g.prime(t.mono.prime).kind == PrimeKind::Free;
    SemifinitePath x;
    GermWeight n;
    if (y.gamma.depth() == d) {
        x.gamma = t.gamma;
        n.n1 = t.mono.t;
        if (free) {
            if (!is_infinite(y)) return false;
            x.kind = TailKind::Free;
            x.exps.assign(t.mono.k.size(), kInfinity);
            for (size_t j = 0; j < t.mono.k.size(); ++j) {
                const int v = t.mono.k[j] + lg - t.mono.l[j] - ln;
                if (v != 0) n.n2[static_cast<int>(j) + 1] = v;
            }
        } else {
            if (y.kind != TailKind::RegularPeriodic) return false;
            const Path &lam = t.mono.lhs, &eta = t.mono.rhs;
            for (int i = 0; i < eta.length(); ++i)
                if (tail_edge(y, i) != eta.edges[i]) return false;
            const SemifinitePath rest = drop_tail(g, y, eta.length());
            x.kind = TailKind::RegularPeriodic;
            x.prefix = lam;
            x.prefix.edges.insert(x.prefix.edges.end(), rest.prefix.edges.begin(), rest.prefix.edges.end());
            x.cycle = rest.cycle;
            n.n2 = spread(g, y, lg + lam.length() - ln - eta.length());
        }
    } else {
        const CPath rest = cpath_suffix(g, y.gamma, d);
        auto tr = translate(g, t.mono, rest);
        if (!tr) return false;
        x = y;
        x.gamma = cpath_concat(t.gamma, tr->path);
        n.n1 = tr->phi;
        int delta;
        if (free) {
            const int i = g.edge(rest.steps[0].connector).loop;
            delta = lg - ln + t.mono.k[i - 1] - t.mono.l[i - 1];
        } else {
            delta = lg + t.mono.lhs.length() - ln - t.mono.rhs.length();
        }
        n.n2 = spread(g, y, delta);
    }
    return canonical(x) == a.x && n == a.weight;
}

std::pair<CompactOpen, CompactOpen> bisection_endpoints(const SeparatedGraph &g, const Element &s) {
    if (s.is_zero()) throw DomainError("bisection_endpoints: zero element");
    return {CompactOpen::cylinder(epath_of(g, mul(g, star(s), s))),
            CompactOpen::cylinder(epath_of(g, mul(g, s, star(s))))};
}

bool is_bisection_family(const SeparatedGraph &g, const std::vector<Element> &family) {
    std::vector<std::pair<CompactOpen, CompactOpen>> ends;
    for (const Element &s : family)
        if (!s.is_zero()) ends.push_back(bisection_endpoints(g, s));
    for (size_t i = 0; i < ends.size(); ++i)
        for (size_t j = i + 1; j < ends.size(); ++j)
            if (!co_disjoint(g, ends[i].first, ends[j].first) ||
                !co_disjoint(g, ends[i].second, ends[j].second))
                return false;
    return true;
}

} // namespace sepgroid
