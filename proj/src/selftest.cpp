#include "sepgroid/selftest.hpp"

#include "sepgroid/text.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>

namespace sepgroid {

void PropertyResult::fail(const std::string &msg) {
    ++failed;
    if (failures.size() < 8) failures.push_back(msg);
}

bool SelftestReport::ok() const {
    return std::all_of(results.begin(), results.end(), [](const auto &r) { return r.second.ok(); });
}

namespace {

void internal_walks_from(const SeparatedGraph &g, VertexId v, int max_len,
                         const std::function<void(const Path &, VertexId)> &f) {
    Path cur{v, {}};
    std::function<void(VertexId)> rec = [&](VertexId u) {
        f(cur, u);
        if (cur.length() == max_len) return;
        for (EdgeId e : g.out_edges(u)) {
            if (g.edge(e).kind != EdgeKind::Internal) continue;
            cur.edges.push_back(e);
            rec(g.edge(e).range);
            cur.edges.pop_back();
        }
    };
    rec(v);
}

} // namespace

Sampler::Sampler(const SeparatedGraph &g, std::uint64_t seed) : g_(g), rng_(seed) {
    for (const Vertex &v : g.vertices()) {
        alphabet_.push_back("v:" + v.name);
        for (int i = 1; i <= 2; ++i) {
            alphabet_.push_back("t:" + v.name + "." + std::to_string(i));
            alphabet_.push_back("t:" + v.name + "." + std::to_string(i) + "^-1");
        }
    }
    for (const Edge &e : g.edges()) {
        const bool named = e.kind == EdgeKind::Loop || e.kind == EdgeKind::FreeConnector;
        const std::string tok = named ? e.name : "e:" + e.name;
        alphabet_.push_back(tok);
        alphabet_.push_back(tok + "*");
    }
    lattice_ = enumerate_epaths(g, Bounds{-1, 3, 3});
    cpaths_to_.resize(g.num_vertices());
    for (const CPath &c : enumerate_cpaths(g, Bounds{2, 2, 2})) cpaths_to_[cpath_range(g, c)].push_back(c);
    walks_to_.resize(g.num_vertices());
    cycles_at_.resize(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (g.is_free_vertex(v)) continue;
        internal_walks_from(g, v, 4, [&](const Path &p, VertexId end) {
            if (p.length() <= 3) walks_to_[end].push_back(p);
            if (end == v && p.length() > 0) cycles_at_[v].push_back(p.edges);
        });
    }
}

int Sampler::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

std::string Sampler::random_word(int max_tokens) {
    const int n = uniform(1, max_tokens);
    std::string w;
    for (int i = 0; i < n; ++i) w += (i ? " " : "") + pick(alphabet_);
    return w;
}

Element Sampler::random_nonzero(int max_tokens) {
    for (int i = 0; i < 1000; ++i) {
        Element e = parse_word(g_, random_word(max_tokens));
        if (!e.is_zero()) return e;
    }
    return vertex_element(g_, uniform(0, g_.num_vertices() - 1));
}

EPath Sampler::random_epath(int max_exp, int max_len) {
    for (;;) {
        const EPath &mu = pick(lattice_);
        if (mu.tail.length() > max_len) continue;
        if (std::any_of(mu.exps.begin(), mu.exps.end(), [&](int x) { return x > max_exp; })) continue;
        bool steps_ok = true;
        for (const Step &s : mu.gamma.steps)
            steps_ok = steps_ok && s.power <= max_exp && static_cast<int>(s.walk.size()) <= max_len;
        if (steps_ok) return mu;
    }
}

Script Sampler::random_script(const Element &e, int max_steps) {
    std::vector<Element> cur{e};
    Script s;
    const int n = uniform(0, max_steps);
    for (int i = 0; i < n; ++i) {
        std::vector<int> open;
        for (size_t j = 0; j < cur.size(); ++j) {
            const Prime &pr = g_.prime(cur[j].mono().prime);
            if (pr.kind == PrimeKind::Regular || pr.k() > 0) open.push_back(static_cast<int>(j));
        }
        if (open.empty()) break;
        const int pos = pick(open);
        const Prime &pr = g_.prime(cur[pos].mono().prime);
        const int choice = pr.kind == PrimeKind::Free ? uniform(1, pr.k()) : 0;
        s.push_back({pos, choice});
        cur = expand(g_, e, s);
    }
    return s;
}

SemifinitePath Sampler::random_point_in(const EPath &mu) {
    CPath gam = mu.gamma;
    EPath cur = mu;
    for (int iter = 0;; ++iter) {
        const VertexId v = cpath_range(g_, gam);
        const Prime &pr = g_.prime(g_.prime_of(v));
        if (pr.kind == PrimeKind::Free) {
            if (pr.k() == 0 || iter >= 3 || coin()) {
                SemifinitePath x;
                x.gamma = gam;
                x.kind = TailKind::Free;
                x.exps.assign(pr.k(), kInfinity);
                return x;
            }
            const int i = uniform(1, pr.k());
            gam.steps.push_back(Step{cur.exps[i - 1] + uniform(0, 1), {}, pick(pr.connectors[i - 1])});
            cur = epath_base(g_, gam);
            continue;
        }
        std::vector<EdgeId> walk = cur.tail.edges;
        VertexId u = path_range(g_, cur.tail);
        for (int n = uniform(0, 2); n > 0; --n) {
            std::vector<EdgeId> outs;
            for (EdgeId e : g_.out_edges(u))
                if (g_.edge(e).kind == EdgeKind::Internal) outs.push_back(e);
            if (outs.empty()) break;
            walk.push_back(pick(outs));
            u = g_.edge(walk.back()).range;
        }
        std::vector<EdgeId> conns;
        for (EdgeId e : g_.out_edges(u))
            if (g_.edge(e).kind == EdgeKind::RegularConnector) conns.push_back(e);
        if (!conns.empty() && (cycles_at_[u].empty() || (iter < 3 && coin()))) {
            gam.steps.push_back(Step{0, walk, pick(conns)});
            cur = epath_base(g_, gam);
            continue;
        }
        if (cycles_at_[u].empty()) return witness_point(g_, EPath{gam, {}, Path{v, walk}});
        SemifinitePath x;
        x.gamma = gam;
        x.kind = TailKind::RegularPeriodic;
        x.prefix = Path{v, walk};
        x.cycle = pick(cycles_at_[u]);
        return canonical(x);
    }
}

Element Sampler::random_element_on(const SemifinitePath &x) {
    const int d = uniform(0, x.gamma.depth());
    const CPath eta = cpath_prefix(x.gamma, d);
    const VertexId v = cpath_range(g_, eta);
    const Prime &pr = g_.prime(g_.prime_of(v));
    Monomial m = identity_monomial(g_, v);
    if (pr.kind == PrimeKind::Free) {
        for (int j = 0; j < pr.k(); ++j) {
            m.k[j] = uniform(0, 2);
            m.l[j] = uniform(0, 2);
        }
        if (d < x.gamma.depth()) {
            const Step &st = x.gamma.steps[d];
            const int i = g_.edge(st.connector).loop;
            m.l[i - 1] = uniform(0, std::min(2, st.power));
        }
    } else {
        std::vector<EdgeId> avail;
        if (d < x.gamma.depth()) {
            avail = x.gamma.steps[d].walk;
            if (avail.size() > 3) avail.resize(3);
        } else {
            for (int i = 0; i < 3; ++i) avail.push_back(tail_edge(x, i));
        }
        avail.resize(uniform(0, static_cast<int>(avail.size())));
        m.rhs = Path{v, avail};
        m.lhs = pick(walks_to_[path_range(g_, m.rhs)]);
    }
    if (uniform(0, 2) == 0) m.t[uniform(1, 2)] = uniform(0, 1) ? uniform(1, 2) : -uniform(1, 2);
    const CPath gamma = pick(cpaths_to_[m.source()]);
    return Element::triple(gamma, m, eta);
}

CompactOpen Sampler::random_compact_open(int max_cylinders, int max_exp) {
    const int n = uniform(1, max_cylinders);
    std::vector<EPath> chosen;
    for (int tries = 0; tries < 20 && static_cast<int>(chosen.size()) < n; ++tries) {
        EPath mu = random_epath(max_exp, max_exp);
        const Element e = idem_of(g_, mu);
        if (std::all_of(chosen.begin(), chosen.end(),
                        [&](const EPath &c) { return meet(g_, e, idem_of(g_, c)).is_zero(); }))
            chosen.push_back(mu);
    }
    return CompactOpen::from(chosen);
}

namespace {

std::string describe(const SeparatedGraph &g, const Element &e) { return "'" + to_word(g, e) + "'"; }

template <class F> void guarded(PropertyResult &r, const std::string &what, F f) {
    try {
        f();
    } catch (const std::exception &e) {
        r.fail(what + ": exception: " + e.what());
    }
}

std::vector<Element> sorted(std::vector<Element> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

PropertyResult prop_semigroup_laws(const SeparatedGraph &g, long n, std::uint64_t seed) {
    PropertyResult r{"semigroup-laws", 0, 0, 0, {}};
    Sampler s(g, seed);
    for (long i = 0; i < n; ++i) {
        const std::string wa = s.random_word(6), wb = s.random_word(6), wc = s.random_word(6);
        guarded(r, wa + " | " + wb + " | " + wc, [&] {
            const Element a = parse_word(g, wa), b = parse_word(g, wb), c = parse_word(g, wc);
            const std::string ctx = "(" + wa + ")(" + wb + ")(" + wc + ")";
            if (mul(g, mul(g, a, b), c) != mul(g, a, mul(g, b, c))) return r.fail("associativity " + ctx);
            if (mul(g, mul(g, a, star(a)), a) != a) return r.fail("s s* s = s for " + wa);
            if (star(mul(g, a, b)) != mul(g, star(b), star(a))) return r.fail("(ab)* = b*a* " + ctx);
            if (star(star(a)) != a) return r.fail("s** = s for " + wa);
            r.pass();
        });
    }
    return r;
}

PropertyResult prop_e_unitary(const SeparatedGraph &g, long n, std::uint64_t seed) {
    PropertyResult r{"e-unitary", 0, 0, 0, {}};
    Sampler smp(g, seed);
    long qualified = 0;
    for (long attempt = 0; qualified < n && attempt < 50 * n; ++attempt) {
        Element s;
        switch (smp.uniform(0, 2)) {
        case 0: s = smp.random_idempotent(3, 3); break;
        case 1: s = smp.random_nonzero(6); break;
        default: s = mul(g, smp.random_idempotent(3, 3), smp.random_nonzero(6));
        }
        if (s.is_zero()) continue;
        Element e = smp.random_idempotent(3, 3);
        switch (smp.uniform(0, 2)) {
        case 0: e = mul(g, e, mul(g, s, star(s))); break;
        case 1: e = mul(g, e, mul(g, star(s), s)); break;
        default: e = mul(g, e, s);
        }
        if (!is_idempotent(e) || mul(g, e, s) != e) continue;
        ++qualified;
        if (is_idempotent(s))
            r.pass();
        else
            r.fail("e s = e with s not idempotent: e = " + describe(g, e) + ", s = " + describe(g, s));
    }
    if (qualified < n) r.fail("only " + std::to_string(qualified) + " qualifying pairs sampled");
    return r;
}

PropertyResult prop_cover_duality(const SeparatedGraph &g, long n, std::uint64_t seed) {
    PropertyResult r{"cover-expansion", 0, 0, 0, {}};
    Sampler s(g, seed);
    for (long i = 0; i < n; ++i) {
        const Element e = s.random_idempotent(2, 2);
        const Script script = s.random_script(e, 6);
        guarded(r, "e = " + to_word(g, e) + " script " + script_text(script), [&] {
            const std::string ctx = " (e = " + to_word(g, e) + ", script " + script_text(script) + ")";
            const std::vector<Element> cover = expand(g, e, script);
            if (!is_orthogonal_cover(g, e, cover)) return r.fail("expansion is not an orthogonal cover" + ctx);
            const Script back = cover_to_expansion(g, e, cover);
            if (sorted(expand(g, e, back)) != sorted(cover))
                return r.fail("cover_to_expansion does not replay to the cover" + ctx);
            std::vector<Element> noisy = cover;
            const Script head(script.begin(), script.begin() + s.uniform(0, static_cast<int>(script.size())));
            const std::vector<Element> mid = expand(g, e, head);
            for (int k = s.uniform(1, 2); k > 0; --k)
                noisy.push_back(mid[s.uniform(0, static_cast<int>(mid.size()) - 1)]);
            std::shuffle(noisy.begin(), noisy.end(), s.rng());
            const std::vector<Element> orth = orthogonalize_cover(g, e, noisy);
            if (!is_orthogonal_cover(g, e, orth)) return r.fail("orthogonalize_cover output is not orthogonal" + ctx);
            if (!co_equal(g, co_of_elements(g, orth), co_of_elements(g, noisy)))
                return r.fail("orthogonalize_cover changed the union" + ctx);
            r.pass();
        });
    }
    return r;
}

namespace {

struct Expr {
    int op = 0; // 0 leaf, 1 &, 2 -, 3 +
    EPath leaf;
    std::unique_ptr<Expr> l, r;
};

std::unique_ptr<Expr> random_expr(Sampler &s, int leaves) {
    auto e = std::make_unique<Expr>();
    if (leaves <= 1) {
        e->leaf = s.random_epath(3, 3);
        return e;
    }
    const int left = s.uniform(1, leaves - 1);
    e->op = s.uniform(1, 3);
    e->l = random_expr(s, left);
    e->r = random_expr(s, leaves - left);
    return e;
}

CompactOpen eval(const SeparatedGraph &g, const Expr &e) {
    switch (e.op) {
    case 0: return CompactOpen::cylinder(e.leaf);
    case 1: return co_intersect(g, eval(g, *e.l), eval(g, *e.r));
    case 2: return co_subtract(g, eval(g, *e.l), eval(g, *e.r));
    default: return co_union(g, eval(g, *e.l), eval(g, *e.r));
    }
}

bool member(const SeparatedGraph &g, const Expr &e, const SemifinitePath &x) {
    switch (e.op) {
    case 0: return is_initial_segment(g, e.leaf, x);
    case 1: return member(g, *e.l, x) && member(g, *e.r, x);
    case 2: return member(g, *e.l, x) && !member(g, *e.r, x);
    default: return member(g, *e.l, x) || member(g, *e.r, x);
    }
}

std::string expr_text(const SeparatedGraph &g, const Expr &e) {
    static const char *ops[] = {"", " & ", " - ", " + "};
    if (e.op == 0) return "Z(" + to_word(g, idem_of(g, e.leaf)) + ")";
    return "(" + expr_text(g, *e.l) + ops[e.op] + expr_text(g, *e.r) + ")";
}

} // namespace

PropertyResult prop_cylinder_points(const SeparatedGraph &g, long n, std::uint64_t seed, int point_size) {
    PropertyResult r{"cylinders-vs-points", 0, 0, 0, {}};
    Sampler s(g, seed);
    const std::vector<SemifinitePath> points = enumerate_points(g, point_size);
    for (long i = 0; i < n; ++i) {
        auto ea = random_expr(s, s.uniform(1, 4));
        auto eb = random_expr(s, s.uniform(1, 4));
        const std::string ctx = expr_text(g, *ea) + " vs " + expr_text(g, *eb);
        guarded(r, ctx, [&] {
            const CompactOpen a = eval(g, *ea), b = eval(g, *eb);
            bool same = true;
            for (const SemifinitePath &x : points) {
                const bool ma = member(g, *ea, x);
                if (point_in(g, x, a) != ma)
                    return r.fail("membership of " + path_literal(g, x) + " in " + expr_text(g, *ea));
                same = same && ma == member(g, *eb, x);
            }
            if (co_equal(g, a, b) && !same) return r.fail("equal sets with different members: " + ctx);
            for (const EPath &mu : a.cylinders())
                if (!member(g, *ea, witness_point(g, mu)))
                    return r.fail("cylinder of " + expr_text(g, *ea) + " has a point outside the set");
            r.pass();
        });
    }
    return r;
}

PropertyResult prop_filter_correspondence(const SeparatedGraph &g, int max_exp, int max_len) {
    PropertyResult r{"filter-correspondence", 0, 0, 0, {}};
    const Bounds bm{-1, max_exp, max_len}, bl{-1, max_exp + 1, max_len + 1};
    const std::vector<EPath> lat = enumerate_epaths(g, bl);
    std::vector<Element> idem;
    for (const EPath &mu : lat) idem.push_back(idem_of(g, mu));
    // up[i]: indices j with lat[i] <= lat[j]
    std::vector<std::vector<int>> up(lat.size());
    for (size_t i = 0; i < lat.size(); ++i)
        for (size_t j = 0; j < lat.size(); ++j)
            if (nat_leq(g, idem[i], idem[j])) up[i].push_back(static_cast<int>(j));
    auto trace = [&](const SemifinitePath &mu) {
        std::vector<int> t;
        for (size_t i = 0; i < lat.size(); ++i)
            if (is_initial_segment(g, lat[i], mu)) t.push_back(static_cast<int>(i));
        return t;
    };
    const std::vector<SemifinitePath> paths = enumerate_semifinite(g, bm, false);
    const std::vector<SemifinitePath> wider = enumerate_semifinite(g, bl, false);
    std::vector<std::vector<int>> wider_traces;
    // A connector power above max_exp is indistinguishable from an infinite exponent in the lattice.
    for (const SemifinitePath &mu : wider)
        if (std::all_of(mu.gamma.steps.begin(), mu.gamma.steps.end(),
                        [&](const Step &st) { return st.power <= max_exp; }))
            wider_traces.push_back(trace(mu));
    std::map<std::vector<int>, size_t> seen;
    for (size_t k = 0; k < paths.size(); ++k) {
        const SemifinitePath &mu = paths[k];
        const std::string ctx = path_literal(g, mu);
        guarded(r, ctx, [&] {
            const std::vector<int> t = trace(mu);
            const std::set<int> ts(t.begin(), t.end());
            if (t.empty()) return r.fail("empty trace for " + ctx);
            for (int i : t)
                for (int j : up[i])
                    if (!ts.count(j)) return r.fail("trace of " + ctx + " is not upward closed");
            for (int i : t)
                for (int j : t) {
                    const Element m = meet(g, idem[i], idem[j]);
                    if (m.is_zero() || !is_initial_segment(g, epath_of(g, m), mu))
                        return r.fail("trace of " + ctx + " is not closed under meets");
                }
            auto [it, fresh] = seen.emplace(t, k);
            if (!fresh) return r.fail("same trace for " + ctx + " and " + path_literal(g, paths[it->second]));
            std::vector<Element> filter;
            for (int i : t) filter.push_back(idem[i]);
            if (reconstruct_path(g, filter, bm) != mu) return r.fail("reconstruct_path does not invert the trace of " + ctx);
            bool extends = false;
            for (const auto &w : wider_traces)
                if (w.size() > t.size() && std::includes(w.begin(), w.end(), t.begin(), t.end())) {
                    extends = true;
                    break;
                }
            if (is_ultrafilter(mu) == extends) return r.fail("is_ultrafilter disagrees with extensions for " + ctx);
            r.pass();
        });
    }
    return r;
}

PropertyResult prop_groupoid_laws(const SeparatedGraph &g, long n, std::uint64_t seed) {
    PropertyResult r{"groupoid-laws", 0, 0, 0, {}};
    Sampler s(g, seed);
    for (long i = 0; i < n; ++i) {
        const SemifinitePath x = s.random_point_in(s.random_epath(2, 2));
        const Element t = s.random_element_on(x);
        guarded(r, "t = " + to_word(g, t) + " at " + path_literal(g, x), [&] {
            const std::string ctx = " (t = " + to_word(g, t) + ", x = " + path_literal(g, x) + ")";
            const Germ b = germ_of(g, t, x);
            if (!in_bisection(g, b, t)) return r.fail("germ_of(t, x) not in Z(t)" + ctx);
            const TPart len = tpart_add(norm_length(g, b.witness.gamma), tpart_negate(norm_length(g, b.witness.nu)));
            if (len != b.weight.n2) return r.fail("length weight differs from the witness" + ctx);
            if (compose(g, unit(g, b.x), b) != b || compose(g, b, unit(g, b.y)) != b)
                return r.fail("unit law" + ctx);
            if (compose(g, b, inverse(g, b)) != unit(g, b.x) || compose(g, compose(g, b, inverse(g, b)), b) != b)
                return r.fail("inverse law" + ctx);
            const Element sa = s.random_element_on(b.x);
            const Germ a = germ_of(g, sa, b.x);
            const Element su = s.random_element_on(a.x);
            const Germ c = germ_of(g, su, a.x);
            if (compose(g, compose(g, c, a), b) != compose(g, c, compose(g, a, b)))
                return r.fail("associativity" + ctx);
            const Element st = mul(g, sa, t);
            if (st.is_zero() || !filter_contains(g, x, mul(g, star(st), st)))
                return r.fail("product " + to_word(g, sa) + " . t is not defined at x" + ctx);
            if (germ_of(g, st, x) != compose(g, a, b))
                return r.fail("germ_of(s t, x) != germ_of(s, t.x) germ_of(t, x) with s = " + to_word(g, sa) + ctx);
            r.pass();
        });
    }
    return r;
}

PropertyResult prop_typ_invariance(const SeparatedGraph &g, long n, std::uint64_t seed) {
    PropertyResult r{"typ-invariance", 0, 0, 0, {}};
    Sampler s(g, seed);
    for (long i = 0; i < n; ++i) {
        const Element e = s.random_idempotent(3, 3);
        const Script script = s.random_script(e, 5);
        guarded(r, "e = " + to_word(g, e), [&] {
            const MonElem base = typ_of(g, CompactOpen::cylinder(epath_of(g, e)));
            for (size_t k = 1; k <= script.size(); ++k) {
                const auto pieces = expand(g, e, Script(script.begin(), script.begin() + k));
                const MonElem t = typ_of(g, co_of_elements(g, pieces));
                if (mon_eq(g, base, t).verdict != Verdict::Yes)
                    return r.fail("typ changed after expansion step " + std::to_string(k) + " of " +
                                  script_text(script) + " on " + to_word(g, e));
            }
            r.pass();
        });
    }
    return r;
}

namespace {

void check_pair(const SeparatedGraph &g, const CompactOpen &a, const CompactOpen &b, PropertyResult &r) {
    const std::string ctx = compact_open_text(g, a) + " vs " + compact_open_text(g, b);
    guarded(r, ctx, [&] {
        const EquidecompResult res = equidecompose(g, a, b);
        const EqResult eq = mon_eq(g, typ_of(g, a), typ_of(g, b));
        if (eq.verdict == Verdict::Unknown && res.verdict != Verdict::Yes) {
            ++r.skipped;
            return;
        }
        if ((res.verdict == Verdict::Yes) != (eq.verdict == Verdict::Yes))
            return r.fail(std::string("equidecompose ") + verdict_name(res.verdict) + " but mon_eq " +
                          verdict_name(eq.verdict) + ": " + ctx);
        if (res.verdict == Verdict::Yes && (!res.certificate || !verify_certificate(g, a, b, *res.certificate)))
            return r.fail("certificate fails verification: " + ctx);
        r.pass();
    });
}

} // namespace

PropertyResult prop_equidecompose(const SeparatedGraph &g, int max_exp, long n, std::uint64_t seed) {
    PropertyResult r{"equidecompose", 0, 0, 0, {}};
    const std::vector<EPath> singles = enumerate_epaths(g, Bounds{-1, max_exp, max_exp});
    for (const EPath &a : singles)
        for (const EPath &b : singles) check_pair(g, CompactOpen::cylinder(a), CompactOpen::cylinder(b), r);
    Sampler s(g, seed);
    for (long i = 0; i < n; ++i) check_pair(g, s.random_compact_open(4, max_exp), s.random_compact_open(4, max_exp), r);
    return r;
}

PropertyResult prop_refinement(const SeparatedGraph &g, int max_weight) {
    PropertyResult r{"refinement", 0, 0, 0, {}};
    const int nv = g.num_vertices();
    std::vector<MonElem> elems;
    MonElem cur(nv, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == nv) {
            elems.push_back(cur);
            return;
        }
        for (int c = 0; c <= left; ++c) {
            cur[i] = c;
            rec(i + 1, left - c);
        }
        cur[i] = 0;
    };
    rec(0, max_weight);
    // class id of each sum, by bounded component search
    std::map<MonElem, int> class_of;
    int next_id = 0;
    auto id_of = [&](const MonElem &x) {
        auto it = class_of.find(x);
        if (it != class_of.end()) return it->second;
        const int id = next_id++;
        for (const MonElem &y : mon_class(g, x)) class_of.emplace(y, id);
        class_of[x] = id;
        return id;
    };
    std::map<int, std::vector<std::pair<MonElem, MonElem>>> groups;
    for (const MonElem &a : elems)
        for (const MonElem &b : elems)
            if (mon_weight(a) + mon_weight(b) <= max_weight) groups[id_of(mon_add(a, b))].push_back({a, b});
    auto eq = [&](const MonElem &x, const MonElem &y) { return x == y || mon_eq(g, x, y).verdict == Verdict::Yes; };
    for (const auto &[id, pairs] : groups)
        for (const auto &[a, b] : pairs)
            for (const auto &[c, d] : pairs) {
                const std::string ctx = mon_elem_text(g, a) + " | " + mon_elem_text(g, b) + " | " +
                                        mon_elem_text(g, c) + " | " + mon_elem_text(g, d);
                guarded(r, ctx, [&] {
                    const RefineResult res = refinement_witness(g, a, b, c, d);
                    if (res.verdict != Verdict::Yes) return r.fail("no refinement found for " + ctx);
                    const Refinement &w = *res.witness;
                    if (!eq(a, mon_add(w.w, w.x)) || !eq(b, mon_add(w.y, w.z)) || !eq(c, mon_add(w.w, w.y)) ||
                        !eq(d, mon_add(w.x, w.z)))
                        return r.fail("refinement equations fail for " + ctx);
                    r.pass();
                });
            }
    return r;
}

PropertyResult prop_round_trip(const SeparatedGraph &g, long n, std::uint64_t seed) {
    PropertyResult r{"round-trip", 0, 0, 0, {}};
    Sampler s(g, seed);
    guarded(r, "graph", [&] {
        const std::string text = serialize_graph(g);
        if (serialize_graph(parse_graph(text)) != text) return r.fail("graph serialization round trip");
        r.pass();
    });
    for (long i = 0; i < n; ++i) {
        guarded(r, "round trip", [&] {
            const Element e = s.random_nonzero(6);
            if (parse_word(g, to_word(g, e)) != e) return r.fail("word round trip for " + to_word(g, e));
            const SemifinitePath x = s.random_point_in(s.random_epath(2, 2));
            if (parse_path_literal(g, path_literal(g, x)) != x) return r.fail("path literal round trip " + path_literal(g, x));
            const CompactOpen a = s.random_compact_open(4, 3);
            if (parse_compact_open(g, compact_open_text(g, a)).cylinders() != a.cylinders())
                return r.fail("compact open round trip " + compact_open_text(g, a));
            const Germ germ = germ_of(g, s.random_element_on(x), x);
            if (parse_germ(g, germ_text(g, germ)) != germ) return r.fail("germ round trip " + germ_text(g, germ));
            const MonElem m = typ_of(g, a);
            if (parse_mon_elem(g, mon_elem_text(g, m)) != m) return r.fail("monoid literal round trip");
            const EquidecompResult eq = equidecompose(g, a, a);
            if (eq.certificate) {
                const Certificate c = parse_certificate(g, certificate_text(g, *eq.certificate));
                if (certificate_text(g, c) != certificate_text(g, *eq.certificate))
                    return r.fail("certificate round trip");
            }
            const Script sc = s.random_script(idem_of(g, a.cylinders()[0]), 4);
            if (parse_script(script_text(sc)) != sc) return r.fail("script round trip");
            r.pass();
        });
    }
    return r;
}

SelftestReport run_selftest(const std::vector<SeparatedGraph> &graphs, std::uint64_t seed) {
    SelftestReport rep;
    for (const SeparatedGraph &g : graphs) {
        auto add = [&](PropertyResult res) { rep.results.emplace_back(g.name(), std::move(res)); };
        add(prop_semigroup_laws(g, 300, seed));
        add(prop_e_unitary(g, 300, seed));
        add(prop_cover_duality(g, 60, seed));
        add(prop_cylinder_points(g, 30, seed, 4));
        add(prop_filter_correspondence(g, 2, 2));
        add(prop_groupoid_laws(g, 200, seed));
        add(prop_typ_invariance(g, 40, seed));
        add(prop_equidecompose(g, 1, 10, seed));
        add(prop_refinement(g, 2));
        add(prop_round_trip(g, 50, seed));
    }
    return rep;
}

} // namespace sepgroid
