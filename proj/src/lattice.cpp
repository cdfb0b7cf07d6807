#include "sepgroid/lattice.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace sepgroid {

PrimeIndex terminal_prime(const SeparatedGraph &g, const EPath &mu) {
    return g.prime_of(cpath_range(g, mu.gamma));
}

EPath epath_base(const SeparatedGraph &g, const CPath &gamma) {
    EPath mu;
    mu.gamma = gamma;
    const VertexId v = cpath_range(g, gamma);
    mu.tail = Path{v, {}};
    if (g.is_free_vertex(v)) mu.exps.assign(g.prime(g.prime_of(v)).k(), 0);
    return mu;
}

EPath epath_of(const SeparatedGraph &g, const Element &e) {
    if (!is_idempotent(e)) throw DomainError("epath_of: not a nonzero idempotent");
    EPath mu = epath_base(g, e.gamma());
    const Monomial &m = e.mono();
    if (g.prime(m.prime).kind == PrimeKind::Free)
        mu.exps = m.k;
    else
        mu.tail = m.lhs;
    return mu;
}

Element idem_of(const SeparatedGraph &g, const EPath &mu) {
    const VertexId v = cpath_range(g, mu.gamma);
    Monomial m = identity_monomial(g, v);
    if (g.is_free_vertex(v)) {
        if (mu.exps.size() != m.k.size()) throw DomainError("idem_of: exponent vector size");
        m.k = m.l = mu.exps;
    } else {
        if (mu.tail.start != v) throw DomainError("idem_of: tail does not start at r(gamma)");
        m.lhs = m.rhs = mu.tail;
    }
    return Element::triple(mu.gamma, m, mu.gamma);
}

std::string epath_text(const SeparatedGraph &g, const EPath &mu) {
    std::string s = cpath_text(g, mu.gamma) + " ; ";
    if (g.is_free_vertex(cpath_range(g, mu.gamma))) {
        s += "free(";
        for (size_t j = 0; j < mu.exps.size(); ++j) s += (j ? "," : "") + std::to_string(mu.exps[j]);
        s += ")";
    } else {
        s += "reg(";
        for (size_t j = 0; j < mu.tail.edges.size(); ++j)
            s += (j ? " " : "") + g.edge(mu.tail.edges[j]).name;
        s += ")";
    }
    return s;
}

Element meet(const SeparatedGraph &g, const Element &e, const Element &f) { return mul(g, e, f); }

bool nat_leq(const SeparatedGraph &g, const Element &e, const Element &f) {
    return mul(g, e, f) == e;
}

bool epath_leq(const SeparatedGraph &g, const EPath &a, const EPath &b) {
    return nat_leq(g, idem_of(g, a), idem_of(g, b));
}

Element join_free(const SeparatedGraph &g, const Element &e, const Element &f) {
    if (!is_idempotent(e) || !is_idempotent(f)) throw DomainError("join_free: not idempotents");
    if (e.gamma() != f.gamma()) throw DomainError("join_free: different c-path prefixes");
    if (g.prime(e.mono().prime).kind != PrimeKind::Free)
        throw DomainError("join_free: terminal prime is not free");
    EPath a = epath_of(g, e), b = epath_of(g, f);
    for (size_t j = 0; j < a.exps.size(); ++j) a.exps[j] = std::min(a.exps[j], b.exps[j]);
    return idem_of(g, a);
}

std::vector<EPath> simple_expand(const SeparatedGraph &g, const EPath &mu, int choice) {
    const PrimeIndex p = terminal_prime(g, mu);
    const Prime &pr = g.prime(p);
    std::vector<EPath> out;
    if (pr.kind == PrimeKind::Free) {
        if (choice < 1 || choice > pr.k())
            throw DomainError("simple_expand: choice " + std::to_string(choice) +
                              " outside 1.." + std::to_string(pr.k()));
        EPath up = mu;
        ++up.exps[choice - 1];
        out.push_back(up);
        for (EdgeId b : pr.connectors[choice - 1]) {
            CPath c = mu.gamma;
            c.steps.push_back(Step{mu.exps[choice - 1], {}, b});
            out.push_back(epath_base(g, c));
        }
        return out;
    }
    for (EdgeId z : g.out_edges(path_range(g, mu.tail))) {
        if (g.edge(z).kind == EdgeKind::Internal) {
            EPath child = mu;
            child.tail.edges.push_back(z);
            out.push_back(child);
        } else {
            CPath c = mu.gamma;
            c.steps.push_back(Step{0, mu.tail.edges, z});
            out.push_back(epath_base(g, c));
        }
    }
    return out;
}

std::vector<Element> simple_expand(const SeparatedGraph &g, const Element &e, int choice) {
    std::vector<Element> out;
    for (const EPath &mu : simple_expand(g, epath_of(g, e), choice)) out.push_back(idem_of(g, mu));
    return out;
}

std::vector<Element> expand(const SeparatedGraph &g, const Element &e, const Script &script) {
    std::vector<Element> cur{e};
    for (const ScriptStep &s : script) {
        if (s.position < 0 || s.position >= static_cast<int>(cur.size()))
            throw DomainError("expand: position " + std::to_string(s.position) + " out of range");
        std::vector<Element> kids = simple_expand(g, cur[s.position], s.choice);
        cur.erase(cur.begin() + s.position);
        cur.insert(cur.begin() + s.position, kids.begin(), kids.end());
    }
    return cur;
}

namespace {

// Choice of the simple expansion of `cur` that moves towards `target` <= cur.
int choice_toward(const SeparatedGraph &g, const EPath &cur, const EPath &target) {
    if (g.prime(terminal_prime(g, cur)).kind == PrimeKind::Regular) return 0;
    if (cur.gamma == target.gamma) {
        for (size_t j = 0; j < cur.exps.size(); ++j)
            if (cur.exps[j] < target.exps[j]) return static_cast<int>(j) + 1;
        throw DomainError("choice_toward: target equals current cylinder");
    }
    return g.edge(target.gamma.steps[cur.gamma.depth()].connector).loop;
}

// One simple expansion towards target: returns the child above target and
// appends the others to `rest`.
EPath step_toward(const SeparatedGraph &g, const EPath &cur, const EPath &target,
                  std::vector<EPath> &rest, int *choice_out = nullptr) {
    const int c = choice_toward(g, cur, target);
    if (choice_out) *choice_out = c;
    std::optional<EPath> toward;
    for (EPath &kid : simple_expand(g, cur, c)) {
        if (!toward && epath_leq(g, target, kid))
            toward = std::move(kid);
        else
            rest.push_back(std::move(kid));
    }
    if (!toward) throw DomainError("step_toward: target is not below the cylinder");
    return *toward;
}

} // namespace

std::vector<EPath> cylinder_minus(const SeparatedGraph &g, const EPath &mu, const EPath &rho) {
    Element m = meet(g, idem_of(g, mu), idem_of(g, rho));
    if (m.is_zero()) return {mu};
    const EPath target = epath_of(g, m);
    std::vector<EPath> out;
    EPath cur = mu;
    while (cur != target) cur = step_toward(g, cur, target, out);
    return out;
}

bool cylinder_less(const EPath &a, const EPath &b) {
    if (a.gamma.depth() != b.gamma.depth()) return a.gamma.depth() < b.gamma.depth();
    return a < b;
}

CompactOpen CompactOpen::from(std::vector<EPath> cylinders) {
    std::sort(cylinders.begin(), cylinders.end(), cylinder_less);
    cylinders.erase(std::unique(cylinders.begin(), cylinders.end()), cylinders.end());
    CompactOpen c;
    c.cyl_ = std::move(cylinders);
    return c;
}

CompactOpen co_intersect(const SeparatedGraph &g, const CompactOpen &a, const CompactOpen &b) {
    std::vector<EPath> out;
    for (const EPath &x : a.cylinders())
        for (const EPath &y : b.cylinders()) {
            Element m = meet(g, idem_of(g, x), idem_of(g, y));
            if (!m.is_zero()) out.push_back(epath_of(g, m));
        }
    return CompactOpen::from(std::move(out));
}

CompactOpen co_subtract(const SeparatedGraph &g, const CompactOpen &a, const CompactOpen &b) {
    std::vector<EPath> out;
    for (const EPath &x : a.cylinders()) {
        std::vector<EPath> pieces{x};
        for (const EPath &y : b.cylinders()) {
            std::vector<EPath> next;
            for (const EPath &p : pieces) {
                auto d = cylinder_minus(g, p, y);
                next.insert(next.end(), d.begin(), d.end());
            }
            pieces = std::move(next);
        }
        out.insert(out.end(), pieces.begin(), pieces.end());
    }
    return CompactOpen::from(std::move(out));
}

CompactOpen co_union(const SeparatedGraph &g, const CompactOpen &a, const CompactOpen &b) {
    std::vector<EPath> out = a.cylinders();
    CompactOpen rest = co_subtract(g, b, a);
    out.insert(out.end(), rest.cylinders().begin(), rest.cylinders().end());
    return CompactOpen::from(std::move(out));
}

bool co_is_empty(const CompactOpen &a) { return a.empty(); }

bool co_equal(const SeparatedGraph &g, const CompactOpen &a, const CompactOpen &b) {
    return co_subtract(g, a, b).empty() && co_subtract(g, b, a).empty();
}

bool co_disjoint(const SeparatedGraph &g, const CompactOpen &a, const CompactOpen &b) {
    return co_intersect(g, a, b).empty();
}

CompactOpen co_of_elements(const SeparatedGraph &g, const std::vector<Element> &idems) {
    CompactOpen acc;
    for (const Element &e : idems) acc = co_union(g, acc, CompactOpen::cylinder(epath_of(g, e)));
    return acc;
}

bool is_orthogonal_cover(const SeparatedGraph &g, const Element &e,
                         const std::vector<Element> &cover) {
    if (!is_idempotent(e)) return false;
    for (const Element &f : cover)
        if (!is_idempotent(f) || !nat_leq(g, f, e)) return false;
    for (size_t i = 0; i < cover.size(); ++i)
        for (size_t j = i + 1; j < cover.size(); ++j)
            if (!meet(g, cover[i], cover[j]).is_zero()) return false;
    CompactOpen rest = CompactOpen::cylinder(epath_of(g, e));
    for (const Element &f : cover)
        rest = co_subtract(g, rest, CompactOpen::cylinder(epath_of(g, f)));
    return rest.empty();
}

std::vector<Element> orthogonalize_cover(const SeparatedGraph &g, const Element &e,
                                         const std::vector<Element> &cover) {
    if (!is_idempotent(e)) throw DomainError("orthogonalize_cover: e is not an idempotent");
    for (const Element &f : cover)
        if (!is_idempotent(f) || !nat_leq(g, f, e))
            throw DomainError("orthogonalize_cover: element not below e");
    if (!co_subtract(g, CompactOpen::cylinder(epath_of(g, e)), co_of_elements(g, cover)).empty())
        throw DomainError("orthogonalize_cover: not a cover");
    std::vector<Element> cur = cover;
    for (;;) {
        bool changed = false;
        for (size_t i = 0; i < cur.size() && !changed; ++i)
            for (size_t j = i + 1; j < cur.size() && !changed; ++j) {
                Element m = meet(g, cur[i], cur[j]);
                if (m.is_zero()) continue;
                changed = true;
                if (m == cur[j]) {
                    cur.erase(cur.begin() + j);
                } else if (m == cur[i]) {
                    cur.erase(cur.begin() + i);
                } else {
                    Element join = join_free(g, cur[i], cur[j]);
                    cur.erase(cur.begin() + j);
                    cur[i] = join;
                }
            }
        if (!changed) return cur;
    }
}

Script cover_to_expansion(const SeparatedGraph &g, const Element &e,
                          const std::vector<Element> &cover) {
    if (!is_orthogonal_cover(g, e, cover))
        throw DomainError("cover_to_expansion: not an orthogonal cover");
    std::vector<EPath> cur{epath_of(g, e)};
    Script script;
    auto position = [&](const EPath &x) {
        return static_cast<int>(std::find(cur.begin(), cur.end(), x) - cur.begin());
    };

    std::function<void(const EPath &, std::vector<EPath>)> rec = [&](const EPath &top,
                                                                      std::vector<EPath> sigma) {
        if (sigma.size() == 1 && sigma[0] == top) return;
        // the element of sigma lying over top's own prefix
        std::optional<EPath> target;
        for (const EPath &s : sigma) {
            if (s.gamma != top.gamma) continue;
            if (!target || s.tail.length() > target->tail.length() ||
                (s.tail.length() == target->tail.length() && s.tail < target->tail))
                target = s;
        }
        if (!target) throw DomainError("cover_to_expansion: no element over the prefix");
        std::vector<EPath> siblings;
        EPath node = top;
        while (node != *target) {
            const int pos = position(node);
            int choice = 0;
            std::vector<EPath> rest;
            EPath next = step_toward(g, node, *target, rest, &choice);
            script.push_back({pos, choice});
            std::vector<EPath> kids = simple_expand(g, node, choice);
            cur.erase(cur.begin() + pos);
            cur.insert(cur.begin() + pos, kids.begin(), kids.end());
            siblings.insert(siblings.end(), rest.begin(), rest.end());
            node = next;
        }
        for (const EPath &f : siblings) {
            std::vector<EPath> part;
            for (const EPath &s : sigma)
                if (s != *target && epath_leq(g, s, f)) part.push_back(s);
            if (part.empty()) throw DomainError("cover_to_expansion: sibling not covered");
            rec(f, std::move(part));
        }
    };
    std::vector<EPath> sigma;
    for (const Element &f : cover) sigma.push_back(epath_of(g, f));
    rec(cur[0], sigma);
    return script;
}

} // namespace sepgroid
