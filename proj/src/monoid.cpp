#include "sepgroid/monoid.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <unordered_map>

namespace sepgroid {

MonElem mon_zero(const SeparatedGraph &g) { return MonElem(g.num_vertices(), 0); }

MonElem mon_unit(const SeparatedGraph &g, VertexId v) {
    MonElem m = mon_zero(g);
    m.at(v) = 1;
    return m;
}

MonElem mon_add(const MonElem &a, const MonElem &b) {
    if (a.size() != b.size()) throw DomainError("monoid elements of different size");
    MonElem out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

int mon_weight(const MonElem &a) { return std::accumulate(a.begin(), a.end(), 0); }

Presentation monoid_presentation(const SeparatedGraph &g) {
    Presentation p;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const auto &classes = g.partition(v);
        for (size_t i = 0; i < classes.size(); ++i) {
            MonElem rhs = mon_zero(g);
            for (EdgeId e : classes[i]) ++rhs[g.edge(e).range];
            p.relations.push_back({v, static_cast<int>(i), std::move(rhs)});
        }
    }
    return p;
}

const char *verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Yes: return "Yes";
    case Verdict::No: return "No";
    default: return "Unknown";
    }
}

namespace {

struct VecHash {
    size_t operator()(const MonElem &v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) h = (h ^ static_cast<size_t>(x)) * 1099511628211ull;
        return h;
    }
};

struct Parent {
    MonElem prev;
    int relation; // -1 at the root
    bool forward;
};

using ParentMap = std::unordered_map<MonElem, Parent, VecHash>;

bool covers(const MonElem &a, const MonElem &b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

// Applies relation r to s; nullopt if not applicable.
std::optional<MonElem> apply(const Relation &r, const MonElem &s, bool forward) {
    MonElem out = s;
    if (forward) {
        if (s[r.v] < 1) return std::nullopt;
        --out[r.v];
        for (size_t i = 0; i < out.size(); ++i) out[i] += r.rhs[i];
    } else {
        if (!covers(s, r.rhs)) return std::nullopt;
        for (size_t i = 0; i < out.size(); ++i) out[i] -= r.rhs[i];
        ++out[r.v];
    }
    return out;
}

// Steps from the root of `parents` to s.
std::vector<RewriteStep> path_to(const ParentMap &parents, MonElem s) {
    std::vector<RewriteStep> rev;
    for (;;) {
        const Parent &p = parents.at(s);
        if (p.relation < 0) break;
        rev.push_back({p.relation, p.forward, s});
        s = p.prev;
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

// Steps from s back to the root of `parents`, each reversed.
std::vector<RewriteStep> path_from(const ParentMap &parents, MonElem s) {
    std::vector<RewriteStep> out;
    for (;;) {
        const Parent &p = parents.at(s);
        if (p.relation < 0) break;
        out.push_back({p.relation, !p.forward, p.prev});
        s = p.prev;
    }
    return out;
}

struct Side {
    ParentMap parents;
    std::deque<MonElem> frontier;
    bool pruned = false;
};

// Bidirectional BFS, forward moves only unless `undirected`.
// Returns the meeting state, if any.
std::optional<MonElem> meet_search(const Presentation &pres, const MonElem &x, const MonElem &y,
                                   const MonBudget &b, bool undirected, Side &sx, Side &sy,
                                   bool &exhausted, bool &closed) {
    sx.parents.emplace(x, Parent{{}, -1, true});
    sy.parents.emplace(y, Parent{{}, -1, true});
    sx.frontier.push_back(x);
    sy.frontier.push_back(y);
    exhausted = closed = false;
    if (x == y) return x;
    bool last_left = false;
    while (!sx.frontier.empty() && !sy.frontier.empty()) {
        const size_t nx = sx.frontier.size(), ny = sy.frontier.size();
        const bool left = nx == ny ? !last_left : nx < ny;
        last_left = left;
        Side &me = left ? sx : sy;
        const Side &other = left ? sy : sx;
        std::deque<MonElem> next;
        for (const MonElem &s : me.frontier) {
            for (size_t r = 0; r < pres.relations.size(); ++r) {
                for (int dir = 0; dir < (undirected ? 2 : 1); ++dir) {
                    const bool forward = dir == 0;
                    auto t = apply(pres.relations[r], s, forward);
                    if (!t || me.parents.count(*t)) continue;
                    if (mon_weight(*t) > b.max_weight) {
                        me.pruned = true;
                        continue;
                    }
                    if (sx.parents.size() + sy.parents.size() >= b.max_states) {
                        exhausted = true;
                        return std::nullopt;
                    }
                    me.parents.emplace(*t, Parent{s, static_cast<int>(r), forward});
                    if (other.parents.count(*t)) return *t;
                    next.push_back(std::move(*t));
                }
            }
        }
        me.frontier = std::move(next);
    }
    closed = (sx.frontier.empty() && !sx.pruned) || (sy.frontier.empty() && !sy.pruned);
    return std::nullopt;
}

// Vertex sets H where, for every relation, v is in H exactly when every
// vertex of the right-hand side is. Each gives a homomorphism onto {0, 1}
// with a_v -> [v not in H]; differing images prove inequality.
bool separated_by_semilattice(const Presentation &pres, const MonElem &x, const MonElem &y) {
    const size_t n = x.size();
    if (n > 20) return false;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        auto in = [&](size_t v) { return (mask >> v) & 1ul; };
        bool ok = true;
        for (const Relation &r : pres.relations) {
            bool all = true;
            for (size_t u = 0; u < n && all; ++u)
                if (r.rhs[u] > 0 && !in(u)) all = false;
            if (static_cast<bool>(in(static_cast<size_t>(r.v))) != all) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        auto image = [&](const MonElem &m) {
            for (size_t v = 0; v < n; ++v)
                if (m[v] > 0 && !in(v)) return true;
            return false;
        };
        if (image(x) != image(y)) return true;
    }
    return false;
}

} // namespace

EqResult mon_eq(const SeparatedGraph &g, const MonElem &x, const MonElem &y, const MonBudget &b) {
    if (x.size() != static_cast<size_t>(g.num_vertices()) || y.size() != x.size())
        throw DomainError("mon_eq: element size does not match the graph");
    const Presentation pres = monoid_presentation(g);
    Side sx, sy;
    bool exhausted, closed;
    auto m = meet_search(pres, x, y, b, true, sx, sy, exhausted, closed);
    EqResult out;
    out.states = sx.parents.size() + sy.parents.size();
    out.budget_exhausted = exhausted;
    out.weight_pruned = sx.pruned || sy.pruned;
    if (m) {
        out.verdict = Verdict::Yes;
        out.path = path_to(sx.parents, *m);
        auto back = path_from(sy.parents, *m);
        out.path.insert(out.path.end(), back.begin(), back.end());
    } else {
        out.verdict = closed || separated_by_semilattice(pres, x, y) ? Verdict::No : Verdict::Unknown;
    }
    return out;
}

std::vector<MonElem> mon_class(const SeparatedGraph &g, const MonElem &x, const MonBudget &b,
                               bool *complete) {
    const Presentation pres = monoid_presentation(g);
    std::unordered_map<MonElem, bool, VecHash> seen{{x, true}};
    std::vector<MonElem> out{x};
    if (complete) *complete = true;
    for (size_t i = 0; i < out.size(); ++i) {
        for (const Relation &r : pres.relations)
            for (bool forward : {true, false}) {
                auto t = apply(r, out[i], forward);
                if (!t || mon_weight(*t) > b.max_weight || seen.count(*t)) continue;
                if (out.size() >= b.max_states) {
                    if (complete) *complete = false;
                    return out;
                }
                seen.emplace(*t, true);
                out.push_back(std::move(*t));
            }
    }
    return out;
}

LeqResult mon_leq(const SeparatedGraph &g, const MonElem &x, const MonElem &y, const MonBudget &b) {
    LeqResult out;
    const int n = g.num_vertices();
    MonElem z(n, 0);
    std::function<bool(int, int)> rec = [&](int i, int left) {
        if (i == n) {
            if (left != 0) return false;
            EqResult r = mon_eq(g, mon_add(x, z), y, b);
            if (r.verdict != Verdict::Yes) return false;
            out.verdict = Verdict::Yes;
            out.z = z;
            out.proof = std::move(r);
            return true;
        }
        for (int c = left; c >= 0; --c) {
            z[i] = c;
            if (rec(i + 1, left - c)) return true;
        }
        z[i] = 0;
        return false;
    };
    for (int w = 0; w <= b.max_witness_weight; ++w)
        if (rec(0, w)) return out;
    out.z.clear();
    return out;
}

MonElem apply_forward(const SeparatedGraph &g, const MonElem &x, const ForwardMove &m) {
    for (const Relation &r : monoid_presentation(g).relations)
        if (r.v == m.v && r.cls == m.cls) {
            auto t = apply(r, x, true);
            if (!t) throw DomainError("apply_forward: no occurrence of the vertex");
            return *t;
        }
    throw DomainError("apply_forward: unknown relation");
}

std::optional<ForwardMeet> forward_meet(const SeparatedGraph &g, const MonElem &x, const MonElem &y,
                                        const MonBudget &b) {
    const Presentation pres = monoid_presentation(g);
    Side sx, sy;
    bool exhausted, closed;
    auto m = meet_search(pres, x, y, b, false, sx, sy, exhausted, closed);
    if (!m) return std::nullopt;
    auto moves = [&](const ParentMap &pm) {
        std::vector<ForwardMove> out;
        for (const RewriteStep &s : path_to(pm, *m)) {
            const Relation &r = pres.relations[s.relation];
            out.push_back({r.v, r.cls});
        }
        return out;
    };
    return ForwardMeet{moves(sx.parents), moves(sy.parents), *m};
}

RefineResult refinement_witness(const SeparatedGraph &g, const MonElem &a, const MonElem &b,
                                const MonElem &c, const MonElem &d, const MonBudget &budget) {
    auto meet = forward_meet(g, mon_add(a, b), mon_add(c, d), budget);
    RefineResult out;
    if (!meet) {
        if (mon_eq(g, mon_add(a, b), mon_add(c, d), budget).verdict != Verdict::Yes)
            throw DomainError("refinement_witness: a + b = c + d not confirmed within budget");
        return out;
    }
    // Each forward move rewrites one occurrence, which lies in one summand.
    auto split = [&](MonElem p, MonElem q, const std::vector<ForwardMove> &moves) {
        for (const ForwardMove &m : moves) {
            if (p[m.v] > 0)
                p = apply_forward(g, p, m);
            else
                q = apply_forward(g, q, m);
        }
        return std::make_pair(p, q);
    };
    auto [a1, b1] = split(a, b, meet->from_x);
    auto [c1, d1] = split(c, d, meet->from_y);
    Refinement r;
    const size_t n = a.size();
    r.w.resize(n);
    r.x.resize(n);
    r.y.resize(n);
    r.z.resize(n);
    for (size_t v = 0; v < n; ++v) {
        r.w[v] = std::min(a1[v], c1[v]);
        r.x[v] = a1[v] - r.w[v];
        r.y[v] = c1[v] - r.w[v];
        r.z[v] = std::min(b1[v], d1[v]);
    }
    out.verdict = Verdict::Yes;
    out.witness = r;
    return out;
}

VertexId vertex_of_cylinder(const SeparatedGraph &g, const EPath &mu) {
    const VertexId v = cpath_range(g, mu.gamma);
    return g.is_free_vertex(v) ? v : path_range(g, mu.tail);
}

VertexId vertex_of_idempotent(const SeparatedGraph &g, const Element &e) {
    if (!is_idempotent(e)) throw DomainError("vertex_of_idempotent: not a nonzero idempotent");
    return vertex_of_cylinder(g, epath_of(g, e));
}

MonElem typ_of(const SeparatedGraph &g, const CompactOpen &a) {
    MonElem out = mon_zero(g);
    for (const EPath &mu : a.cylinders()) ++out[vertex_of_cylinder(g, mu)];
    return out;
}

Element connect_idempotents(const SeparatedGraph &g, const Element &e1, const Element &e2) {
    if (vertex_of_idempotent(g, e1) != vertex_of_idempotent(g, e2))
        throw DomainError("connect_idempotents: idempotents have different vertices");
    const EPath m1 = epath_of(g, e1), m2 = epath_of(g, e2);
    const VertexId v = cpath_range(g, m1.gamma);
    Monomial m = identity_monomial(g, v);
    if (g.is_free_vertex(v)) {
        m.k = m1.exps;
        m.l = m2.exps;
    } else {
        m.lhs = m1.tail;
        m.rhs = m2.tail;
    }
    return Element::triple(m1.gamma, m, m2.gamma);
}

namespace {

bool is_partition(const SeparatedGraph &g, const CompactOpen &a, const std::vector<Element> &pieces) {
    std::vector<CompactOpen> cyl;
    for (const Element &e : pieces) {
        if (!is_idempotent(e)) return false;
        cyl.push_back(CompactOpen::cylinder(epath_of(g, e)));
    }
    for (size_t i = 0; i < cyl.size(); ++i)
        for (size_t j = i + 1; j < cyl.size(); ++j)
            if (!co_disjoint(g, cyl[i], cyl[j])) return false;
    return co_equal(g, co_of_elements(g, pieces), a);
}

} // namespace

bool verify_certificate(const SeparatedGraph &g, const CompactOpen &a, const CompactOpen &b,
                        const Certificate &cert) {
    if (cert.elements.size() != cert.source.size() || cert.elements.size() != cert.range.size())
        return false;
    for (size_t k = 0; k < cert.elements.size(); ++k) {
        const Element &s = cert.elements[k];
        if (s.is_zero()) return false;
        if (mul(g, star(s), s) != cert.source[k] || mul(g, s, star(s)) != cert.range[k]) return false;
    }
    return is_partition(g, a, cert.source) && is_partition(g, b, cert.range);
}

EquidecompResult equidecompose(const SeparatedGraph &g, const CompactOpen &a, const CompactOpen &b,
                               const MonBudget &budget) {
    EquidecompResult out;
    const MonElem ta = typ_of(g, a), tb = typ_of(g, b);
    out.eq = mon_eq(g, ta, tb, budget);
    if (out.eq.verdict != Verdict::Yes) {
        out.verdict = out.eq.verdict;
        out.budget_exhausted = out.eq.budget_exhausted;
        return out;
    }
    auto meet = forward_meet(g, ta, tb, budget);
    if (!meet) {
        out.budget_exhausted = true;
        return out;
    }
    // One simple expansion per forward move.
    auto replay = [&](std::vector<EPath> pieces, const std::vector<ForwardMove> &moves) {
        for (const ForwardMove &m : moves) {
            auto it = std::find_if(pieces.begin(), pieces.end(),
                                   [&](const EPath &mu) { return vertex_of_cylinder(g, mu) == m.v; });
            if (it == pieces.end()) throw DomainError("equidecompose: replay lost a vertex");
            const int choice = g.is_free_vertex(m.v) ? m.cls + 1 : 0;
            std::vector<EPath> kids = simple_expand(g, *it, choice);
            it = pieces.erase(it);
            pieces.insert(it, kids.begin(), kids.end());
        }
        return pieces;
    };
    const std::vector<EPath> pa = replay(a.cylinders(), meet->from_x);
    std::vector<EPath> pb = replay(b.cylinders(), meet->from_y);
    Certificate cert;
    std::vector<bool> used(pb.size(), false);
    for (const EPath &mu : pa) {
        const VertexId v = vertex_of_cylinder(g, mu);
        size_t j = 0;
        while (j < pb.size() && (used[j] || vertex_of_cylinder(g, pb[j]) != v)) ++j;
        if (j == pb.size()) throw DomainError("equidecompose: vertex multisets differ after replay");
        used[j] = true;
        const Element src = idem_of(g, mu), rng = idem_of(g, pb[j]);
        cert.elements.push_back(connect_idempotents(g, rng, src));
        cert.source.push_back(src);
        cert.range.push_back(rng);
    }
    if (!verify_certificate(g, a, b, cert)) throw DomainError("equidecompose: certificate failed verification");
    out.verdict = Verdict::Yes;
    out.certificate = std::move(cert);
    return out;
}

Classification classify_prime_generator(const SeparatedGraph &g, VertexId v, const MonBudget &b) {
    Classification c;
    c.kind = g.is_free_vertex(v) ? GeneratorKind::FreeElem : GeneratorKind::RegularElem;
    MonElem two = mon_unit(g, v);
    two[v] = 2;
    c.witness = mon_leq(g, two, mon_unit(g, v), b);
    const bool found = c.witness.verdict == Verdict::Yes;
    c.consistent = c.kind == GeneratorKind::RegularElem ? found : !found;
    return c;
}

} // namespace sepgroid
