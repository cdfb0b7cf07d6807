#include "sepgroid/filters.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace sepgroid {

bool is_infinite(const SemifinitePath &mu) {
    switch (mu.kind) {
    case TailKind::Free:
        return std::all_of(mu.exps.begin(), mu.exps.end(), [](int x) { return x == kInfinity; });
    case TailKind::RegularPeriodic:
        return !mu.cycle.empty();
    default:
        return false;
    }
}

SemifinitePath canonical(const SemifinitePath &mu) {
    if (mu.kind != TailKind::RegularPeriodic || mu.cycle.empty()) return mu;
    SemifinitePath out = mu;
    std::vector<EdgeId> &c = out.cycle;
    const size_t n = c.size();
    for (size_t p = 1; p < n; ++p) {
        if (n % p) continue;
        bool periodic = true;
        for (size_t i = p; i < n && periodic; ++i) periodic = c[i] == c[i - p];
        if (periodic) {
            c.resize(p);
            break;
        }
    }
    while (!out.prefix.edges.empty() && out.prefix.edges.back() == c.back()) {
        out.prefix.edges.pop_back();
        std::rotate(c.rbegin(), c.rbegin() + 1, c.rend());
    }
    return out;
}

void check_semifinite(const SeparatedGraph &g, const SemifinitePath &mu) {
    const VertexId v = cpath_range(g, mu.gamma);
    const bool free = g.is_free_vertex(v);
    if (free != (mu.kind == TailKind::Free))
        throw DomainError("tail kind does not match the terminal prime");
    if (free) {
        if (static_cast<int>(mu.exps.size()) != g.prime(g.prime_of(v)).k())
            throw DomainError("free tail needs k(p) exponents");
        for (int x : mu.exps)
            if (x < 0) throw DomainError("negative exponent");
        return;
    }
    if (mu.prefix.start != v) throw DomainError("tail does not start at r(gamma)");
    VertexId u = v;
    auto walk = [&](EdgeId e) {
        const Edge &ed = g.edge(e);
        if (ed.kind != EdgeKind::Internal || ed.source != u)
            throw DomainError("tail edge '" + ed.name + "' does not continue the path");
        u = ed.range;
    };
    for (EdgeId e : mu.prefix.edges) walk(e);
    if (mu.kind == TailKind::RegularPeriodic) {
        const VertexId w = u;
        for (EdgeId e : mu.cycle) walk(e);
        if (u != w) throw DomainError("cycle is not closed");
    }
}

EdgeId tail_edge(const SemifinitePath &mu, int i) {
    const int a = mu.prefix.length();
    if (i < a) return mu.prefix.edges[i];
    if (mu.kind != TailKind::RegularPeriodic) throw DomainError("tail_edge beyond finite tail");
    return mu.cycle[(i - a) % mu.cycle.size()];
}

namespace {

std::string names(const SeparatedGraph &g, const std::vector<EdgeId> &es) {
    std::string s;
    for (size_t i = 0; i < es.size(); ++i) s += (i ? " " : "") + g.edge(es[i]).name;
    return s;
}

} // namespace

std::string path_literal(const SeparatedGraph &g, const SemifinitePath &mu) {
    std::string s = "[";
    if (mu.gamma.trivial()) {
        s += "v:" + g.vertex(mu.gamma.start).name;
    } else {
        std::string w = cpath_text(g, mu.gamma);
        s += w.substr(w.find('[') + 1, w.size() - w.find('[') - 2);
    }
    s += "] ; ";
    if (mu.kind == TailKind::Free) {
        s += "free(";
        for (size_t j = 0; j < mu.exps.size(); ++j)
            s += (j ? "," : "") +
                 (mu.exps[j] == kInfinity ? std::string("inf") : std::to_string(mu.exps[j]));
        return s + ")";
    }
    s += "reg(" + names(g, mu.prefix.edges);
    if (mu.kind == TailKind::RegularPeriodic) s += " ; " + names(g, mu.cycle);
    return s + ")";
}

bool is_initial_segment(const SeparatedGraph &g, const EPath &seg, const SemifinitePath &mu) {
    if (!cpath_is_prefix(seg.gamma, mu.gamma)) return false;
    const int d = seg.gamma.depth();
    if (d == mu.gamma.depth()) {
        if (mu.kind == TailKind::Free) {
            for (size_t j = 0; j < seg.exps.size(); ++j)
                if (seg.exps[j] > mu.exps[j]) return false;
            return true;
        }
        const int n = seg.tail.length();
        if (mu.kind == TailKind::RegularFinite && n > mu.prefix.length()) return false;
        for (int i = 0; i < n; ++i)
            if (seg.tail.edges[i] != tail_edge(mu, i)) return false;
        return true;
    }
    const Step &st = mu.gamma.steps[d];
    if (g.is_free_vertex(cpath_range(g, seg.gamma))) {
        const int i = g.edge(st.connector).loop;
        return seg.exps[i - 1] <= st.power;
    }
    const auto &t = seg.tail.edges;
    return t.size() <= st.walk.size() && std::equal(t.begin(), t.end(), st.walk.begin());
}

bool filter_contains(const SeparatedGraph &g, const SemifinitePath &mu, const Element &e) {
    if (!is_idempotent(e)) throw DomainError("filter_contains: not a nonzero idempotent");
    return is_initial_segment(g, epath_of(g, e), mu);
}

int depth_bound(const SeparatedGraph &g, const Bounds &b) {
    return b.max_depth < 0 ? g.num_primes() : b.max_depth;
}

SemifinitePath reconstruct_path(const SeparatedGraph &g, const std::vector<Element> &filter,
                                const Bounds &b) {
    if (filter.empty()) throw DomainError("reconstruct_path: empty filter base");
    for (const Element &e : filter)
        if (!is_idempotent(e)) throw DomainError("reconstruct_path: element is not a nonzero idempotent");
    for (size_t i = 0; i < filter.size(); ++i)
        for (size_t j = i + 1; j < filter.size(); ++j)
            if (meet(g, filter[i], filter[j]).is_zero())
                throw DomainError("reconstruct_path: pair with zero meet");
    std::vector<EPath> mus;
    for (const Element &e : filter) mus.push_back(epath_of(g, e));
    const EPath *deep = &mus[0];
    for (const EPath &m : mus)
        if (m.gamma.depth() > deep->gamma.depth()) deep = &m;
    SemifinitePath out;
    out.gamma = deep->gamma;
    const VertexId v = cpath_range(g, out.gamma);
    if (g.is_free_vertex(v)) {
        out.kind = TailKind::Free;
        out.exps.assign(deep->exps.size(), 0);
        for (const EPath &m : mus)
            if (m.gamma == out.gamma)
                for (size_t j = 0; j < m.exps.size(); ++j)
                    out.exps[j] = std::max(out.exps[j], m.exps[j]);
        for (int &x : out.exps)
            if (x > b.max_exp) x = kInfinity;
    } else {
        out.kind = TailKind::RegularFinite;
        out.prefix = Path{v, {}};
        for (const EPath &m : mus)
            if (m.gamma == out.gamma && m.tail.length() > out.prefix.length()) out.prefix = m.tail;
    }
    for (const EPath &m : mus)
        if (!is_initial_segment(g, m, out))
            throw DomainError("reconstruct_path: elements are not directed");
    return out;
}

bool is_ultrafilter(const SemifinitePath &mu) { return is_infinite(mu); }

Separation separation_witness(const SeparatedGraph &g, const SemifinitePath &mu) {
    if (is_infinite(mu)) throw DomainError("separation_witness: path is infinite");
    Separation s;
    if (mu.kind == TailKind::Free) {
        size_t i0 = 0;
        while (mu.exps[i0] == kInfinity) ++i0;
        EPath seg = epath_base(g, mu.gamma);
        seg.exps[i0] = mu.exps[i0];
        s.X.push_back(idem_of(g, seg));
        for (const EPath &kid : simple_expand(g, seg, static_cast<int>(i0) + 1))
            s.Y.push_back(idem_of(g, kid));
        return s;
    }
    if (mu.kind == TailKind::RegularPeriodic) throw DomainError("separation_witness: bad tail");
    EPath seg = epath_base(g, mu.gamma);
    seg.tail = mu.prefix;
    s.X.push_back(idem_of(g, seg));
    for (const EPath &kid : simple_expand(g, seg, 0)) s.Y.push_back(idem_of(g, kid));
    return s;
}

namespace {

// Internal walks from v of length <= max_len (including the empty walk).
void internal_walks(const SeparatedGraph &g, VertexId v, int max_len,
                    const std::function<void(const std::vector<EdgeId> &, VertexId)> &f) {
    if (max_len < 0) return;
    std::vector<EdgeId> cur;
    std::function<void(VertexId)> rec = [&](VertexId u) {
        f(cur, u);
        if (static_cast<int>(cur.size()) >= max_len) return;
        for (EdgeId e : g.out_edges(u)) {
            if (g.edge(e).kind != EdgeKind::Internal) continue;
            cur.push_back(e);
            rec(g.edge(e).range);
            cur.pop_back();
        }
    };
    rec(v);
}

void cpaths_from(const SeparatedGraph &g, CPath &cur, VertexId u, int depth_left, int max_exp,
                 int max_len, std::vector<CPath> &out) {
    out.push_back(cur);
    if (depth_left == 0) return;
    const Prime &pr = g.prime(g.prime_of(u));
    if (pr.kind == PrimeKind::Free) {
        for (int i = 1; i <= pr.k(); ++i)
            for (int m = 0; m <= max_exp; ++m)
                for (EdgeId b : pr.connectors[i - 1]) {
                    cur.steps.push_back(Step{m, {}, b});
                    cpaths_from(g, cur, g.edge(b).range, depth_left - 1, max_exp, max_len, out);
                    cur.steps.pop_back();
                }
        return;
    }
    internal_walks(g, u, max_len, [&](const std::vector<EdgeId> &walk, VertexId w) {
        for (EdgeId c : g.out_edges(w)) {
            if (g.edge(c).kind != EdgeKind::RegularConnector) continue;
            cur.steps.push_back(Step{0, walk, c});
            cpaths_from(g, cur, g.edge(c).range, depth_left - 1, max_exp, max_len, out);
            cur.steps.pop_back();
        }
    });
}

void exponent_vectors(int k, const std::vector<int> &values,
                      const std::function<void(const std::vector<int> &)> &f) {
    std::vector<int> cur(k, 0);
    std::function<void(int)> rec = [&](int j) {
        if (j == k) {
            f(cur);
            return;
        }
        for (int v : values) {
            cur[j] = v;
            rec(j + 1);
        }
    };
    rec(0);
}

// Periodic tails rho.c^inf from v with |rho| + |c| <= budget, canonical.
void periodic_tails(const SeparatedGraph &g, VertexId v, int budget,
                    const std::function<void(const Path &, const std::vector<EdgeId> &)> &f) {
    std::set<std::pair<std::vector<EdgeId>, std::vector<EdgeId>>> seen;
    internal_walks(g, v, budget - 1, [&](const std::vector<EdgeId> &rho, VertexId w) {
        const int left = budget - static_cast<int>(rho.size());
        internal_walks(g, w, left, [&](const std::vector<EdgeId> &c, VertexId end) {
            if (c.empty() || end != w) return;
            SemifinitePath mu;
            mu.kind = TailKind::RegularPeriodic;
            mu.prefix = Path{v, rho};
            mu.cycle = c;
            mu = canonical(mu);
            if (seen.insert({mu.prefix.edges, mu.cycle}).second) f(mu.prefix, mu.cycle);
        });
    });
}

} // namespace

std::vector<CPath> enumerate_cpaths(const SeparatedGraph &g, const Bounds &b) {
    std::vector<CPath> out;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        CPath cur{v, {}};
        cpaths_from(g, cur, v, depth_bound(g, b), b.max_exp, b.max_len, out);
    }
    return out;
}

std::vector<EPath> enumerate_epaths(const SeparatedGraph &g, const Bounds &b) {
    std::vector<int> values;
    for (int x = 0; x <= b.max_exp; ++x) values.push_back(x);
    std::vector<EPath> out;
    for (const CPath &c : enumerate_cpaths(g, b)) {
        const VertexId v = cpath_range(g, c);
        EPath mu = epath_base(g, c);
        if (g.is_free_vertex(v)) {
            exponent_vectors(static_cast<int>(mu.exps.size()), values, [&](const std::vector<int> &k) {
                mu.exps = k;
                out.push_back(mu);
            });
        } else {
            internal_walks(g, v, b.max_len, [&](const std::vector<EdgeId> &w, VertexId) {
                mu.tail.edges = w;
                out.push_back(mu);
            });
        }
    }
    return out;
}

std::vector<SemifinitePath> enumerate_semifinite(const SeparatedGraph &g, const Bounds &b,
                                                 bool periodic) {
    std::vector<int> values;
    for (int x = 0; x <= b.max_exp; ++x) values.push_back(x);
    values.push_back(kInfinity);
    std::vector<SemifinitePath> out;
    for (const CPath &c : enumerate_cpaths(g, b)) {
        const VertexId v = cpath_range(g, c);
        SemifinitePath mu;
        mu.gamma = c;
        if (g.is_free_vertex(v)) {
            mu.kind = TailKind::Free;
            exponent_vectors(g.prime(g.prime_of(v)).k(), values, [&](const std::vector<int> &k) {
                mu.exps = k;
                out.push_back(mu);
            });
            continue;
        }
        mu.kind = TailKind::RegularFinite;
        internal_walks(g, v, b.max_len, [&](const std::vector<EdgeId> &w, VertexId) {
            mu.prefix = Path{v, w};
            out.push_back(mu);
        });
        if (!periodic) continue;
        mu.kind = TailKind::RegularPeriodic;
        periodic_tails(g, v, b.max_len, [&](const Path &rho, const std::vector<EdgeId> &cyc) {
            mu.prefix = rho;
            mu.cycle = cyc;
            out.push_back(mu);
        });
    }
    return out;
}

std::vector<SemifinitePath> enumerate_points(const SeparatedGraph &g, int max_size) {
    Bounds b{-1, max_size, max_size};
    std::vector<SemifinitePath> out;
    for (const CPath &c : enumerate_cpaths(g, b)) {
        const int used = cpath_length(c);
        if (used > max_size) continue;
        const VertexId v = cpath_range(g, c);
        SemifinitePath mu;
        mu.gamma = c;
        if (g.is_free_vertex(v)) {
            mu.kind = TailKind::Free;
            mu.exps.assign(g.prime(g.prime_of(v)).k(), kInfinity);
            out.push_back(mu);
            continue;
        }
        mu.kind = TailKind::RegularPeriodic;
        periodic_tails(g, v, max_size - used, [&](const Path &rho, const std::vector<EdgeId> &cyc) {
            mu.prefix = rho;
            mu.cycle = cyc;
            out.push_back(mu);
        });
    }
    return out;
}

SemifinitePath witness_point(const SeparatedGraph &g, const EPath &mu) {
    SemifinitePath x;
    x.gamma = mu.gamma;
    const VertexId v = cpath_range(g, mu.gamma);
    if (g.is_free_vertex(v)) {
        x.kind = TailKind::Free;
        x.exps.assign(mu.exps.size(), kInfinity);
        return x;
    }
    // shortest internal cycle through the end of the tail
    const VertexId w = path_range(g, mu.tail);
    std::vector<EdgeId> parent(g.num_vertices(), -1);
    std::vector<bool> seen(g.num_vertices(), false);
    std::deque<VertexId> q{w};
    seen[w] = true;
    std::vector<EdgeId> cycle;
    while (!q.empty() && cycle.empty()) {
        VertexId u = q.front();
        q.pop_front();
        for (EdgeId e : g.out_edges(u)) {
            if (g.edge(e).kind != EdgeKind::Internal) continue;
            VertexId r = g.edge(e).range;
            if (r == w) {
                cycle.push_back(e);
                for (VertexId a = u; a != w; a = g.edge(parent[a]).source)
                    cycle.push_back(parent[a]);
                std::reverse(cycle.begin(), cycle.end());
                break;
            }
            if (!seen[r]) {
                seen[r] = true;
                parent[r] = e;
                q.push_back(r);
            }
        }
    }
    x.kind = TailKind::RegularPeriodic;
    x.prefix = mu.tail;
    x.cycle = cycle;
    return canonical(x);
}

bool point_in(const SeparatedGraph &g, const SemifinitePath &x, const CompactOpen &a) {
    for (const EPath &mu : a.cylinders())
        if (is_initial_segment(g, mu, x)) return true;
    return false;
}

} // namespace sepgroid
