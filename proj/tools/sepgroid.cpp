// Command-line front end. Exit codes: 0 success or Yes, 1 No or false,
// 2 Unknown, 64 usage error, 65 malformed or out-of-domain input, 66 unreadable file.

#include "sepgroid/filters.hpp"
#include "sepgroid/groupoid.hpp"
#include "sepgroid/monoid.hpp"
#include "sepgroid/selftest.hpp"
#include "sepgroid/text.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace sepgroid;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitNoInput = 66;

const std::map<std::string, std::string> kGrammar = {
    {"word", "word: whitespace-separated tokens v:NAME e:NAME e:NAME* a:P.J a:P.J* b:P.I.T b:P.I.T* "
             "t:V.I t:V.I^-1 0"},
    {"set", "set: Z(<word>) combined with & (intersect), - (subtract), + (union), parentheses; 0 is empty"},
    {"path", "path: [<c-path word or v:NAME>] ; free(k1,...,kn) with inf allowed, or ; reg(edges) or "
             "; reg(edges ; cycle)"},
    {"monoid", "monoid element: 3*a:v + a:w, or 0"},
    {"germ", "germ: (<path> ; (n1,...) ; (n2,...) ; <path>)"},
    {"script", "script: pos:choice items separated by commas or spaces"},
};

struct Options {
    bool json = false;
    std::size_t max_steps = MonBudget{}.max_states;
    int max_weight = MonBudget{}.max_weight;
    int max_depth = Bounds{}.max_depth;
    int max_exp = Bounds{}.max_exp;
    int max_len = Bounds{}.max_len;
    std::uint64_t seed = 0;

    MonBudget budget() const {
        MonBudget b;
        b.max_states = max_steps;
        b.max_weight = max_weight;
        return b;
    }
    Bounds bounds() const { return Bounds{max_depth, max_exp, max_len}; }
};

// Parse error annotated with the grammar of the offending argument.
class GrammarError : public Error {
public:
    GrammarError(const std::string &msg, std::string grammar) : Error(msg), grammar_(std::move(grammar)) {}
    const std::string &grammar() const { return grammar_; }

private:
    std::string grammar_;
};

template <class F> auto parsed(const std::string &kind, F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParseError &e) {
        throw GrammarError(e.what(), kGrammar.at(kind));
    }
}

struct Output {
    json inputs = json::object();
    json result = json::object();
    std::vector<std::string> lines;
    bool budget_exhausted = false;
    int exit_code = 0;
};

json budget_json(const Options &o) {
    return json{{"max_steps", o.max_steps}, {"max_weight", o.max_weight}, {"max_depth", o.max_depth},
                {"max_exp", o.max_exp},     {"max_len", o.max_len},       {"seed", o.seed}};
}

int verdict_exit(Verdict v) { return v == Verdict::Yes ? 0 : v == Verdict::No ? kExitNo : kExitUnknown; }

json words(const SeparatedGraph &g, const std::vector<Element> &es) {
    json a = json::array();
    for (const Element &e : es) a.push_back(to_word(g, e));
    return a;
}

std::string join(const std::vector<std::string> &v, const std::string &sep) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

std::vector<std::string> word_list(const SeparatedGraph &g, const std::vector<Element> &es) {
    std::vector<std::string> out;
    for (const Element &e : es) out.push_back(to_word(g, e));
    return out;
}

Element word_arg(const SeparatedGraph &g, const std::string &s) {
    return parsed("word", [&] { return parse_word(g, s); });
}
CompactOpen set_arg(const SeparatedGraph &g, const std::string &s) {
    return parsed("set", [&] { return parse_compact_open(g, s); });
}
SemifinitePath path_arg(const SeparatedGraph &g, const std::string &s) {
    return parsed("path", [&] { return parse_path_literal(g, s); });
}
MonElem mon_arg(const SeparatedGraph &g, const std::string &s) {
    return parsed("monoid", [&] { return parse_mon_elem(g, s); });
}

json rewrite_path_json(const SeparatedGraph &g, const std::vector<RewriteStep> &path,
                       std::vector<std::string> &lines) {
    const Presentation pres = monoid_presentation(g);
    json a = json::array();
    for (const RewriteStep &s : path) {
        const Relation &r = pres.relations.at(s.relation);
        const std::string rel = mon_elem_text(g, mon_unit(g, r.v)) + " = " + mon_elem_text(g, r.rhs);
        a.push_back({{"relation", rel}, {"direction", s.forward ? "forward" : "backward"},
                     {"after", mon_elem_text(g, s.after)}});
        lines.push_back("  " + std::string(s.forward ? "-> " : "<- ") + rel + "  gives " + mon_elem_text(g, s.after));
    }
    return a;
}

json certificate_json(const SeparatedGraph &g, const Certificate &c) {
    return json{{"elements", words(g, c.elements)},
                {"source", words(g, c.source)},
                {"range", words(g, c.range)},
                {"text", certificate_text(g, c)}};
}

using Handler = std::function<void(const SeparatedGraph &, const std::vector<std::string> &, const Options &, Output &)>;

void need(const std::vector<std::string> &a, size_t lo, size_t hi, const std::string &usage) {
    if (a.size() < lo || a.size() > hi) throw CLI::ValidationError("arguments", "expected " + usage);
}

void cmd_validate(const SeparatedGraph &g, const std::vector<std::string> &a, const Options &, Output &o) {
    need(a, 0, 0, "no arguments after the graph file");
    const ValidationReport rep = validate_adaptable(g);
    json v = json::array();
    for (const Violation &x : rep.violations) {
        v.push_back({{"condition", x.condition}, {"item", x.item}, {"message", x.message}});
        o.lines.push_back(x.condition + " at " + x.item + ": " + x.message);
    }
    json primes = json::array();
    for (const Prime &p : g.primes()) {
        json vs = json::array();
        for (VertexId u : p.vertices) vs.push_back(g.vertex(u).name);
        primes.push_back({{"name", p.name}, {"kind", p.kind == PrimeKind::Free ? "free" : "regular"}, {"vertices", vs}});
    }
    o.result = {{"ok", rep.ok()}, {"violations", v}, {"primes", primes}, {"canonical", serialize_graph(g)}};
    o.lines.insert(o.lines.begin(), rep.ok() ? "adaptable" : "not adaptable");
    o.exit_code = rep.ok() ? 0 : kExitNo;
}

json element_json(const SeparatedGraph &g, const Element &e) {
    json j{{"word", to_word(g, e)}, {"zero", e.is_zero()}, {"normal_form", to_text(g, e)}};
    j["idempotent"] = !e.is_zero() && is_idempotent(e);
    return j;
}

void cmd_normalize(const SeparatedGraph &g, const std::vector<std::string> &a, const Options &, Output &o) {
    need(a, 1, 1, "WORD");
    o.inputs["word"] = a[0];
    const Element e = word_arg(g, a[0]);
    o.result = element_json(g, e);
    o.lines.push_back(to_word(g, e));
}

void cmd_mul(const SeparatedGraph &g, const std::vector<std::string> &a, const Options &, Output &o) {
    need(a, 2, SIZE_MAX, "WORD WORD [WORD ...]");
    o.inputs["words"] = a;
    Element e = word_arg(g, a[0]);
    for (size_t i = 1; i < a.size(); ++i) e = mul(g, e, word_arg(g, a[i]));
    o.result = element_json(g, e);
    o.lines.push_back(to_word(g, e));
}

void cmd_idempotents(const SeparatedGraph &g, const std::vector<std::string> &a, const Options &opt, Output &o) {
    need(a, 0, 2, "[WORD [WORD]]");
    o.inputs["words"] = a;
    if (a.empty()) {
        json list = json::array();
        for (const EPath &mu : enumerate_epaths(g, opt.bounds())) {
            const std::string w = to_word(g, idem_of(g, mu));
            list.push_back(w);
            o.lines.push_back(w);
        }
        o.result = {{"count", list.size()}, {"idempotents", list}};
        return;
    }
    const Element e = word_arg(g, a[0]);
    if (e.is_zero()) throw DomainError("idempotents: the element is zero");
    if (a.size() == 1) {
        const Element r = mul(g, e, star(e)), s = mul(g, star(e), e);
        o.result = {{"idempotent", is_idempotent(e)}, {"range", to_word(g, r)}, {"source", to_word(g, s)},
                    {"range_vertex", g.vertex(vertex_of_idempotent(g, r)).name},
                    {"source_vertex", g.vertex(vertex_of_idempotent(g, s)).name}};
        o.lines.push_back(std::string("idempotent: ") + (is_idempotent(e) ? "yes" : "no"));
        o.lines.push_back("s s* = " + to_word(g, r));
        o.lines.push_back("s* s = " + to_word(g, s));
        o.exit_code = is_idempotent(e) ? 0 : kExitNo;
        return;
    }
    const Element f = word_arg(g, a[1]);
    if (!is_idempotent(e) || !is_idempotent(f)) throw DomainError("idempotents: both words must be nonzero idempotents");
    const Element m = meet(g, e, f);
    o.result = {{"leq", nat_leq(g, e, f)}, {"geq", nat_leq(g, f, e)}, {"meet", to_word(g, m)}};
    o.lines.push_back(std::string("e <= f: ") + (nat_leq(g, e, f) ? "yes" : "no"));
    o.lines.push_back(std::string("f <= e: ") + (nat_leq(g, f, e) ? "yes" : "no"));
    o.lines.push_back("meet: " + to_word(g, m));
    try {
        const Element j = join_free(g, e, f);
        o.result["join"] = to_word(g, j);
        o.lines.push_back("join: " + to_word(g, j));
    } catch (const DomainError &) {
        o.result["join"] = nullptr;
    }
}

void cmd_expand(const SeparatedGraph &g, const std::vector<std::string> &a, const Options &, Output &o) {
    need(a, 2, 2, "WORD SCRIPT");
    o.inputs["word"] = a[0];
    o.inputs["script"] = a[1];
    const Element e = word_arg(g, a[0]);
    const Script s = parsed("script", [&] { return parse_script(a[1]); });
    const std::vector<Element> pieces = expand(g, e, s);
    o.result = {{"pieces", words(g, pieces)}};
    o.lines = word_list(g, pieces);
}

std::vector<Element> element_args(const SeparatedGraph &g, const std::vector<std::string> &a, size_t from) {
    std::vector<Element> out;
    for (size_t i = from; i < a.size(); ++i) out.push_back(word_arg(g, a[i]));
    return out;
}

void cmd_cover_check(const SeparatedGraph &g, const std::vector<std::string> &a, const Options &, Output &o) {
    need(a, 1, SIZE_MAX, "WORD [COVER-WORD ...]");
    o.inputs["word"] = a[0];
    o.inputs["cover"] = std::vector<std::string>(a.begin() + 1, a.end());
    const Element e = word_arg(g, a[0]);
    const std::vector<Element> cover = element_args(g, a, 1);
    const bool ok = is_orthogonal_cover(g, e, cover);
    o.result = {{"orthogonal_cover", ok}};
    o.lines.push_back(ok ? "orthogonal cover" : "not an orthogonal cover");
    if (!ok) {
        try {
            const std::vector<Element> fixed = orthogonalize_cover(g, e, cover);
            o.result["orthogonalized"] = words(g, fixed);
            o.lines.push_back("orthogonalized: " + join(word_list(g, fixed), ", "));
        } catch (const DomainError &) {
        }
    }
    o.exit_code = ok ? 0 : kExitNo;
}

void cmd_cover_to_expansion(const SeparatedGraph &g, const std::vector<std::string> &a, const Options &, Output &o) {
    need(a, 2, SIZE_MAX, "WORD COVER-WORD [COVER-WORD ...]");
    o.inputs["word"] = a[0];
    o.inputs["cover"] = std::vector<std::string>(a.begin() + 1, a.end());
    const Element e = word_arg(g, a[0]);
    const Script s = cover_to_expansion(g, e, element_args(g, a, 1));
    const std::vector<Element> pieces = expand(g, e, s);
    o.result = {{"script", script_text(s)}, {"pieces", words(g, pieces)}};
    o.lines.push_back(script_text(s));
}

void cmd_cylinders(const SeparatedGraph &g, const std::vector<std::string> &a, const Options &, Output &o) {
    need(a, 2, 3, "and|minus|or SET SET, or empty SET");
    const std::string &op = a[0];
    o.inputs["op"] = op;
    o.inputs["sets"] = std::vector<std::string>(a.begin() + 1, a.end());
    const CompactOpen x = set_arg(g, a[1]);
    CompactOpen out;
    if (op == "empty") {
        need(a, 2, 2, "empty SET");
        out = x;
    } else {
        need(a, 3, 3, op + " SET SET");
        const CompactOpen y = set_arg(g, a[2]);
        if (op == "and")
            out = co_intersect(g, x, y);
        else if (op == "minus")
            out = co_subtract(g, x, y);
        else if (op == "or")
            out = co_union(g, x, y);
        else
            throw CLI::ValidationError("op", "expected and, minus, or, empty");
    }
    const bool empty = co_is_empty(out);
    o.result = {{"set", compact_open_text(g, out)}, {"cylinders", out.size()}, {"empty", empty}};
    o.lines.push_back(op == "empty" ? (empty ? "empty" : "nonempty") : compact_open_text(g, out));
    if (op == "empty") o.exit_code = empty ? 0 : kExitNo;
}

void cmd_filter_contains(const SeparatedGraph &g, const std::vector<std::string> &a, const Options &, Output &o) {
    need(a, 2, 2, "PATH WORD");
    o.inputs["path"] = a[0];
    o.inputs["word"] = a[1];
    const bool in = filter_contains(g, path_arg(g, a[0]), word_arg(g, a[1]));
    o.result = {{"contains", in}};
    o.lines.push_back(in ? "yes" : "no");
    o.exit_code = in ? 0 : kExitNo;
}

void cmd_ultrafilter(const SeparatedGraph &g, const std::vector<std::string> &a, const Options &opt, Output &o) {
    need(a, 1, SIZE_MAX, "PATH, or WORD [WORD ...] generating a filter");
    SemifinitePath mu;
    if (trim(a[0]).rfind('[', 0) == 0) {
        need(a, 1, 1, "PATH");
        o.inputs["path"] = a[0];
        mu = path_arg(g, a[0]);
    } else {
        o.inputs["filter"] = a;
        mu = reconstruct_path(g, element_args(g, a, 0), opt.bounds());
    }
    const bool u = is_ultrafilter(mu);
    o.result = {{"point", path_literal(g, mu)}, {"ultrafilter", u}};
    o.lines.push_back(path_literal(g, mu));
    o.lines.push_back(u ? "ultrafilter" : "not an ultrafilter");
    if (!u) {
        const Separation s = separation_witness(g, mu);
        o.result["separation"] = {{"X", words(g, s.X)}, {"Y", words(g, s.Y)}};
        o.lines.push_back("X: " + join(word_list(g, s.X), ", "));
        o.lines.push_back("Y: " + join(word_list(g, s.Y), ", "));
    }
    o.exit_code = u ? 0 : kExitNo;
}

json germ_json(const SeparatedGraph &g, const Germ &b) {
    return json{{"germ", germ_text(g, b)},
                {"range", path_literal(g, b.x)},
                {"n1", sequence_text(b.weight.n1)},
                {"n2", sequence_text(b.weight.n2)},
                {"source", path_literal(g, b.y)}};
}

void cmd_germ(const SeparatedGraph &g, const std::vector<std::string> &a, const Options &, Output &o) {
    need(a, 2, 2, "WORD PATH");
    o.inputs["word"] = a[0];
    o.inputs["path"] = a[1];
    const Germ b = germ_of(g, word_arg(g, a[0]), path_arg(g, a[1]));
    o.result = germ_json(g, b);
    o.lines.push_back(germ_text(g, b));
}

void cmd_bisection_check(const SeparatedGraph &g, const std::vector<std::string> &a, const Options &, Output &o) {
    need(a, 1, SIZE_MAX, "WORD [WORD ...], or GERM WORD");
    if (trim(a[0]).rfind('(', 0) == 0) {
        need(a, 2, 2, "GERM WORD");
        o.inputs["germ"] = a[0];
        o.inputs["word"] = a[1];
        const Germ b = parsed("germ", [&] { return parse_germ(g, a[0]); });
        const bool in = in_bisection(g, b, word_arg(g, a[1]));
        o.result = {{"in_bisection", in}};
        o.lines.push_back(in ? "yes" : "no");
        o.exit_code = in ? 0 : kExitNo;
        return;
    }
    o.inputs["words"] = a;
    const std::vector<Element> fam = element_args(g, a, 0);
    const bool ok = is_bisection_family(g, fam);
    o.result = {{"bisection", ok}};
    o.lines.push_back(ok ? "bisection" : "not a bisection");
    if (fam.size() == 1 && !fam[0].is_zero()) {
        const auto [src, rng] = bisection_endpoints(g, fam[0]);
        o.result["source"] = compact_open_text(g, src);
        o.result["range"] = compact_open_text(g, rng);
        o.lines.push_back("source: " + compact_open_text(g, src));
        o.lines.push_back("range: " + compact_open_text(g, rng));
    }
    o.exit_code = ok ? 0 : kExitNo;
}

void cmd_monoid_eq(const SeparatedGraph &g, const std::vector<std::string> &a, const Options &opt, Output &o) {
    need(a, 2, 2, "ELEM ELEM");
    o.inputs["x"] = a[0];
    o.inputs["y"] = a[1];
    const EqResult r = mon_eq(g, mon_arg(g, a[0]), mon_arg(g, a[1]), opt.budget());
    o.lines.push_back(verdict_name(r.verdict));
    o.result = {{"verdict", verdict_name(r.verdict)}, {"states", r.states}, {"weight_pruned", r.weight_pruned}};
    if (r.verdict == Verdict::Yes) {
        o.result["steps"] = r.path.size();
        o.result["path"] = rewrite_path_json(g, r.path, o.lines);
        o.lines[0] += " (" + std::to_string(r.path.size()) + " step" + (r.path.size() == 1 ? "" : "s") + ")";
    }
    o.budget_exhausted = r.budget_exhausted;
    o.exit_code = verdict_exit(r.verdict);
}

void cmd_monoid_leq(const SeparatedGraph &g, const std::vector<std::string> &a, const Options &opt, Output &o) {
    need(a, 2, 2, "ELEM ELEM");
    o.inputs["x"] = a[0];
    o.inputs["y"] = a[1];
    const LeqResult r = mon_leq(g, mon_arg(g, a[0]), mon_arg(g, a[1]), opt.budget());
    o.lines.push_back(verdict_name(r.verdict));
    o.result = {{"verdict", verdict_name(r.verdict)}};
    if (r.verdict == Verdict::Yes) {
        o.result["z"] = mon_elem_text(g, r.z);
        o.lines.push_back("z = " + mon_elem_text(g, r.z));
        o.result["path"] = rewrite_path_json(g, r.proof.path, o.lines);
    }
    o.budget_exhausted = r.proof.budget_exhausted;
    o.exit_code = verdict_exit(r.verdict);
}

void cmd_refine(const SeparatedGraph &g, const std::vector<std::string> &a, const Options &opt, Output &o) {
    need(a, 4, 4, "A B C D with A + B = C + D");
    o.inputs["a"] = a[0];
    o.inputs["b"] = a[1];
    o.inputs["c"] = a[2];
    o.inputs["d"] = a[3];
    const RefineResult r =
        refinement_witness(g, mon_arg(g, a[0]), mon_arg(g, a[1]), mon_arg(g, a[2]), mon_arg(g, a[3]), opt.budget());
    o.result = {{"verdict", verdict_name(r.verdict)}};
    o.lines.push_back(verdict_name(r.verdict));
    if (r.witness) {
        const Refinement &w = *r.witness;
        for (const auto &[k, v] : {std::pair{"w", &w.w}, {"x", &w.x}, {"y", &w.y}, {"z", &w.z}}) {
            o.result[k] = mon_elem_text(g, *v);
            o.lines.push_back(std::string(k) + " = " + mon_elem_text(g, *v));
        }
    }
    o.budget_exhausted = r.verdict != Verdict::Yes;
    o.exit_code = verdict_exit(r.verdict);
}

void cmd_typ(const SeparatedGraph &g, const std::vector<std::string> &a, const Options &, Output &o) {
    need(a, 1, 1, "SET");
    o.inputs["set"] = a[0];
    const CompactOpen x = set_arg(g, a[0]);
    const MonElem t = typ_of(g, x);
    o.result = {{"typ", mon_elem_text(g, t)}, {"set", compact_open_text(g, x)}};
    o.lines.push_back(mon_elem_text(g, t));
}

void cmd_equidecompose(const SeparatedGraph &g, const std::vector<std::string> &a, const Options &opt, Output &o) {
    need(a, 2, 2, "SET SET");
    o.inputs["a"] = a[0];
    o.inputs["b"] = a[1];
    const CompactOpen x = set_arg(g, a[0]), y = set_arg(g, a[1]);
    const EquidecompResult r = equidecompose(g, x, y, opt.budget());
    o.result = {{"verdict", verdict_name(r.verdict)},
                {"typ_a", mon_elem_text(g, typ_of(g, x))},
                {"typ_b", mon_elem_text(g, typ_of(g, y))}};
    o.lines.push_back(verdict_name(r.verdict));
    if (r.certificate) {
        o.result["certificate"] = certificate_json(g, *r.certificate);
        o.lines.push_back(certificate_text(g, *r.certificate));
    }
    o.budget_exhausted = r.budget_exhausted || r.eq.budget_exhausted;
    o.exit_code = verdict_exit(r.verdict);
}

void cmd_selftest(const std::vector<std::string> &files, const Options &opt, Output &o) {
    std::vector<SeparatedGraph> graphs;
    for (const std::string &f : files) graphs.push_back(load_graph(f));
    o.inputs["graphs"] = files;
    const SelftestReport rep = run_selftest(graphs, opt.seed);
    json rs = json::array();
    for (const auto &[gname, r] : rep.results) {
        rs.push_back({{"graph", gname},
                      {"property", r.name},
                      {"passed", r.passed},
                      {"failed", r.failed},
                      {"skipped", r.skipped},
                      {"failures", r.failures}});
        std::ostringstream line;
        line << (r.ok() ? "PASS " : "FAIL ") << gname << " " << r.name << ": " << r.passed << " passed, " << r.failed
             << " failed, " << r.skipped << " inconclusive";
        o.lines.push_back(line.str());
        for (const std::string &f : r.failures) o.lines.push_back("  " + f);
    }
    o.result = {{"ok", rep.ok()}, {"results", rs}};
    o.exit_code = rep.ok() ? 0 : kExitNo;
}

void emit(const Options &opt, const std::string &command, const Output &o) {
    if (opt.json) {
        json doc{{"command", command}, {"inputs", o.inputs}, {"budget", budget_json(opt)},
                 {"result", o.result}, {"budget_exhausted", o.budget_exhausted}, {"exit_code", o.exit_code}};
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const std::string &l : o.lines) std::cout << l << "\n";
    }
}

int emit_error(const Options &opt, const std::string &command, const std::string &kind, const std::string &msg,
               const std::string &grammar, int code) {
    if (opt.json) {
        json err{{"kind", kind}, {"message", msg}};
        if (!grammar.empty()) err["grammar"] = grammar;
        json doc{{"command", command}, {"error", err}, {"exit_code", code}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cerr << "sepgroid " << command << ": " << kind << ": " << msg << "\n";
        if (!grammar.empty()) std::cerr << "  expected " << grammar << "\n";
    }
    return code;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Symbolic computation in the inverse semigroup, tight groupoid and monoid of an adaptable "
                 "separated graph"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "Emit a JSON document");
    app.add_option("--max-steps", opt.max_steps, "State budget for monoid searches")->capture_default_str();
    app.add_option("--max-weight", opt.max_weight, "Weight cap for monoid searches")->capture_default_str();
    app.add_option("--max-depth", opt.max_depth, "Depth bound for enumerations, -1 for the number of primes")
        ->capture_default_str();
    app.add_option("--max-exp", opt.max_exp, "Exponent bound for enumerations and filters")->capture_default_str();
    app.add_option("--max-len", opt.max_len, "Tail length bound for enumerations")->capture_default_str();
    app.add_option("--seed", opt.seed, "Random seed for selftest")->capture_default_str();
    app.fallthrough();

    const std::vector<std::tuple<std::string, std::string, Handler>> commands = {
        {"validate", "Check the adaptable graph conditions", cmd_validate},
        {"normalize", "Normal form of a word", cmd_normalize},
        {"mul", "Product of words", cmd_mul},
        {"idempotents", "List idempotents, or inspect one or two", cmd_idempotents},
        {"expand", "Apply an expansion script to an idempotent", cmd_expand},
        {"cover-check", "Check an orthogonal finite cover", cmd_cover_check},
        {"cover-to-expansion", "Expansion script producing a cover", cmd_cover_to_expansion},
        {"cylinders", "Compact-open set operations: and, minus, or, empty", cmd_cylinders},
        {"filter-contains", "Membership of an idempotent in the filter of a path", cmd_filter_contains},
        {"ultrafilter", "Decide whether a path or filter is an ultrafilter", cmd_ultrafilter},
        {"germ", "Germ of an element at a path", cmd_germ},
        {"bisection-check", "Bisection family check, or germ membership", cmd_bisection_check},
        {"monoid-eq", "Equality in the graph monoid", cmd_monoid_eq},
        {"monoid-leq", "Algebraic order in the graph monoid", cmd_monoid_leq},
        {"refine", "Refinement of a + b = c + d", cmd_refine},
        {"typ", "Type of a compact-open set", cmd_typ},
        {"equidecompose", "Equidecomposition certificate for two compact-open sets", cmd_equidecompose},
    };
    std::string graph_file;
    std::vector<std::string> args;
    std::vector<std::string> selftest_files;
    for (const auto &[name, desc, handler] : commands) {
        CLI::App *sub = app.add_subcommand(name, desc);
        sub->add_option("graph", graph_file, "Graph file")->required();
        sub->add_option("args", args, "Command arguments");
        sub->positionals_at_end(false);
    }
    CLI::App *self = app.add_subcommand("selftest", "Property suites at reduced sizes");
    self->add_option("graphs", selftest_files, "Graph files")->required();

    std::string command = "sepgroid";
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }
    for (CLI::App *sub : app.get_subcommands()) command = sub->get_name();

    Output out;
    try {
        if (command == "selftest") {
            cmd_selftest(selftest_files, opt, out);
        } else {
            const SeparatedGraph g = load_graph(graph_file);
            out.inputs["graph"] = graph_file;
            for (const auto &[name, desc, handler] : commands)
                if (name == command) handler(g, args, opt, out);
        }
    } catch (const CLI::ValidationError &e) {
        return emit_error(opt, command, "usage", e.what(), "", kExitUsage);
    } catch (const GrammarError &e) {
        return emit_error(opt, command, "parse", e.what(), e.grammar(), kExitData);
    } catch (const ParseError &e) {
        return emit_error(opt, command, "parse", e.what(), "graph file: graph NAME, free P k=K, X I -> V..., "
                                                           "regular P, vertex V..., edge NAME: V -> W, "
                                                           "connector NAME: V -> U", kExitData);
    } catch (const DomainError &e) {
        return emit_error(opt, command, "domain", e.what(), "", kExitData);
    } catch (const Error &e) {
        return emit_error(opt, command, "input", e.what(), "", kExitNoInput);
    }
    emit(opt, command, out);
    return out.exit_code;
}
