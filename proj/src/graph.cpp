#include "sepgroid/graph.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

namespace sepgroid {

EdgeId SeparatedGraph::alpha(PrimeIndex p, int i) const {
    const Prime &pr = primes_.at(p);
    if (pr.kind != PrimeKind::Free || i < 1 || i > pr.k())
        throw DomainError("no loop a:" + pr.name + "." + std::to_string(i));
    return pr.loops[i - 1];
}

EdgeId SeparatedGraph::beta(PrimeIndex p, int i, int t) const {
    const Prime &pr = primes_.at(p);
    if (pr.kind != PrimeKind::Free || i < 1 || i > pr.k() || t < 1 ||
        t > static_cast<int>(pr.connectors[i - 1].size()))
        throw DomainError("no connector b:" + pr.name + "." + std::to_string(i) + "." +
                          std::to_string(t));
    return pr.connectors[i - 1][t - 1];
}

std::optional<VertexId> SeparatedGraph::find_vertex(const std::string &name) const {
    for (VertexId v = 0; v < num_vertices(); ++v)
        if (vertices_[v].name == name) return v;
    return std::nullopt;
}

std::optional<PrimeIndex> SeparatedGraph::find_prime(const std::string &name) const {
    for (PrimeIndex p = 0; p < num_primes(); ++p)
        if (primes_[p].name == name) return p;
    return std::nullopt;
}

std::optional<EdgeId> SeparatedGraph::find_edge(const std::string &name) const {
    for (EdgeId e = 0; e < num_edges(); ++e) {
        const Edge &ed = edges_[e];
        if ((ed.kind == EdgeKind::Internal || ed.kind == EdgeKind::RegularConnector) &&
            ed.name == name)
            return e;
    }
    return std::nullopt;
}

void SeparatedGraph::finalize() {
    const int n = num_vertices();
    out_.assign(n, {});
    partition_.assign(n, {});
    class_of_.assign(num_edges(), 0);
    for (EdgeId e = 0; e < num_edges(); ++e) out_[edges_[e].source].push_back(e);
    for (VertexId v = 0; v < n; ++v) {
        const Prime &pr = primes_[vertices_[v].prime];
        if (pr.kind == PrimeKind::Free) {
            for (int i = 1; i <= pr.k(); ++i) {
                std::vector<EdgeId> cls{pr.loops[i - 1]};
                cls.insert(cls.end(), pr.connectors[i - 1].begin(), pr.connectors[i - 1].end());
                for (EdgeId e : cls) class_of_[e] = i - 1;
                partition_[v].push_back(std::move(cls));
            }
        } else if (!out_[v].empty()) {
            partition_[v].push_back(out_[v]);
        }
    }
    reach_.assign(n, std::vector<bool>(n, false));
    for (VertexId s = 0; s < n; ++s) {
        std::vector<VertexId> stack{s};
        reach_[s][s] = true;
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (EdgeId e : out_[u]) {
                VertexId w = edges_[e].range;
                if (!reach_[s][w]) {
                    reach_[s][w] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    const int np = num_primes();
    leq_.assign(np, std::vector<bool>(np, false));
    for (VertexId u = 0; u < n; ++u)
        for (VertexId w = 0; w < n; ++w)
            if (reach_[u][w]) leq_[vertices_[u].prime][vertices_[w].prime] = true;
    for (PrimeIndex p = 0; p < np; ++p) leq_[p][p] = true;
}

GraphBuilder::GraphBuilder(std::string name) { g_.name_ = std::move(name); }

namespace {

void check_new_vertex(const SeparatedGraph &g, const std::string &name, int line) {
    for (const Vertex &v : g.vertices())
        if (v.name == name) throw ParseError("duplicate vertex name '" + name + "'", line);
}

} // namespace

PrimeIndex GraphBuilder::add_free(const std::string &name, int k, int line) {
    if (g_.find_prime(name)) throw ParseError("duplicate prime name '" + name + "'", line);
    check_new_vertex(g_, name, line);
    if (k < 0) throw ParseError("k must be non-negative", line);
    PrimeIndex p = g_.num_primes();
    Prime pr{name, PrimeKind::Free, {g_.num_vertices()}, {}, {}};
    g_.primes_.push_back(pr);
    g_.vertices_.push_back({name, p});
    free_targets_.resize(p + 1);
    free_targets_[p].assign(k, {});
    free_lines_.resize(p + 1, line);
    return p;
}

void GraphBuilder::set_free_targets(PrimeIndex p, std::vector<std::vector<std::string>> targets,
                                    int line) {
    free_targets_.at(p) = std::move(targets);
    free_lines_.at(p) = line;
}

PrimeIndex GraphBuilder::add_regular(const std::string &name, int line) {
    if (g_.find_prime(name)) throw ParseError("duplicate prime name '" + name + "'", line);
    PrimeIndex p = g_.num_primes();
    g_.primes_.push_back({name, PrimeKind::Regular, {}, {}, {}});
    free_targets_.resize(p + 1);
    free_lines_.resize(p + 1, line);
    return p;
}

void GraphBuilder::add_vertex(PrimeIndex p, const std::string &name, int line) {
    if (g_.primes_.at(p).kind != PrimeKind::Regular)
        throw ParseError("vertex declared outside a regular prime", line);
    check_new_vertex(g_, name, line);
    g_.primes_[p].vertices.push_back(g_.num_vertices());
    g_.vertices_.push_back({name, p});
}

void GraphBuilder::add_edge(PrimeIndex p, const std::string &name, const std::string &src,
                            const std::string &rng, int line) {
    pending_.push_back({EdgeKind::Internal, p, name, src, rng, 0, 0, line});
}

void GraphBuilder::add_connector(PrimeIndex p, const std::string &name, const std::string &src,
                                 const std::string &rng, int line) {
    pending_.push_back({EdgeKind::RegularConnector, p, name, src, rng, 0, 0, line});
}

SeparatedGraph GraphBuilder::build() {
    auto resolve = [&](const std::string &name, int line) {
        auto v = g_.find_vertex(name);
        if (!v) throw ParseError("unknown vertex '" + name + "'", line);
        return *v;
    };
    for (size_t a = 0; a < pending_.size(); ++a)
        for (size_t b = 0; b < a; ++b)
            if (pending_[a].name == pending_[b].name)
                throw ParseError("duplicate edge name '" + pending_[a].name + "'",
                                 pending_[a].line);
    for (PrimeIndex p = 0; p < g_.num_primes(); ++p) {
        Prime &pr = g_.primes_[p];
        if (pr.kind == PrimeKind::Free) {
            const VertexId v = pr.vertices[0];
            const auto &tg = free_targets_[p];
            for (int i = 1; i <= static_cast<int>(tg.size()); ++i) {
                pr.loops.push_back(g_.num_edges());
                g_.edges_.push_back({EdgeKind::Loop,
                                     "a:" + pr.name + "." + std::to_string(i), v, v, i, 0});
            }
            pr.connectors.assign(tg.size(), {});
            for (int i = 1; i <= static_cast<int>(tg.size()); ++i) {
                int t = 0;
                for (const std::string &name : tg[i - 1]) {
                    ++t;
                    pr.connectors[i - 1].push_back(g_.num_edges());
                    g_.edges_.push_back({EdgeKind::FreeConnector,
                                         "b:" + pr.name + "." + std::to_string(i) + "." +
                                             std::to_string(t),
                                         v, resolve(name, free_lines_[p]), i, t});
                }
            }
        } else {
            for (const Pending &pe : pending_) {
                if (pe.prime != p) continue;
                VertexId s = resolve(pe.src, pe.line);
                VertexId r = resolve(pe.rng, pe.line);
                if (g_.vertices_[s].prime != p)
                    throw ParseError("source of '" + pe.name + "' is not in prime '" +
                                         pr.name + "'",
                                     pe.line);
                if (pe.kind == EdgeKind::Internal && g_.vertices_[r].prime != p)
                    throw ParseError("range of edge '" + pe.name + "' is not in prime '" +
                                         pr.name + "'",
                                     pe.line);
                g_.edges_.push_back({pe.kind, pe.name, s, r, 0, 0});
            }
        }
    }
    g_.finalize();
    return g_;
}

namespace {

const std::string kIdent = "[A-Za-z_][A-Za-z0-9_]*";

std::string strip(const std::string &s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string &s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

} // namespace

SeparatedGraph parse_graph(const std::string &text) {
    static const std::regex re_graph("graph\\s+(" + kIdent + ")");
    static const std::regex re_free("free\\s+(" + kIdent + ")\\s+k\\s*=\\s*([0-9]+)");
    static const std::regex re_x("X\\s+([0-9]+)\\s*->((\\s+" + kIdent + ")*)");
    static const std::regex re_regular("regular\\s+(" + kIdent + ")");
    static const std::regex re_vertex("vertex((\\s+" + kIdent + ")+)");
    static const std::regex re_edge("(edge|connector)\\s+(" + kIdent + ")\\s*:\\s*(" + kIdent +
                                    ")\\s*->\\s*(" + kIdent + ")");

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    std::optional<GraphBuilder> b;
    PrimeIndex cur = -1;
    bool cur_free = false;
    int expected_x = 0;
    int cur_line = 0;
    std::vector<std::vector<std::string>> xs;
    std::vector<bool> seen;

    auto close_free = [&]() {
        if (cur >= 0 && cur_free) {
            for (int i = 0; i < expected_x; ++i)
                if (!seen[i])
                    throw ParseError("free prime is missing line 'X " + std::to_string(i + 1) +
                                         " -> ...'",
                                     cur_line);
            b->set_free_targets(cur, xs, cur_line);
        }
    };

    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw.substr(0, raw.find('#'));
        s = strip(s);
        if (s.empty()) continue;
        std::smatch m;
        if (!b) {
            if (!std::regex_match(s, m, re_graph))
                throw ParseError("expected 'graph NAME'", line);
            b.emplace(m[1]);
            continue;
        }
        if (std::regex_match(s, m, re_free)) {
            close_free();
            cur = b->add_free(m[1], std::stoi(m[2]), line);
            cur_free = true;
            expected_x = std::stoi(m[2]);
            cur_line = line;
            xs.assign(expected_x, {});
            seen.assign(expected_x, false);
        } else if (std::regex_match(s, m, re_x)) {
            if (cur < 0 || !cur_free) throw ParseError("X line outside a free prime", line);
            int i = std::stoi(m[1]);
            if (i < 1 || i > expected_x)
                throw ParseError("X index " + std::to_string(i) + " out of range 1.." +
                                     std::to_string(expected_x),
                                 line);
            if (seen[i - 1]) throw ParseError("duplicate X index " + std::to_string(i), line);
            seen[i - 1] = true;
            xs[i - 1] = split_ws(m[2]);
        } else if (std::regex_match(s, m, re_regular)) {
            close_free();
            cur = b->add_regular(m[1], line);
            cur_free = false;
        } else if (std::regex_match(s, m, re_vertex)) {
            if (cur < 0 || cur_free) throw ParseError("vertex line outside a regular prime", line);
            for (const std::string &v : split_ws(m[1])) b->add_vertex(cur, v, line);
        } else if (std::regex_match(s, m, re_edge)) {
            if (cur < 0 || cur_free)
                throw ParseError(std::string(m[1]) + " line outside a regular prime", line);
            if (m[1] == "edge")
                b->add_edge(cur, m[2], m[3], m[4], line);
            else
                b->add_connector(cur, m[2], m[3], m[4], line);
        } else {
            throw ParseError("syntax error: '" + s +
                                 "' (expected free P k=K | X I -> V... | regular P | vertex V... "
                                 "| edge NAME: V -> W | connector NAME: V -> U)",
                             line);
        }
    }
    if (!b) throw ParseError("empty graph file");
    close_free();
    return b->build();
}

SeparatedGraph load_graph(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

std::string serialize_graph(const SeparatedGraph &g) {
    std::ostringstream out;
    out << "graph " << g.name() << "\n";
    for (const Prime &pr : g.primes()) {
        if (pr.kind == PrimeKind::Free) {
            out << "free " << pr.name << " k=" << pr.k() << "\n";
            for (int i = 1; i <= pr.k(); ++i) {
                out << "X " << i << " ->";
                for (EdgeId e : pr.connectors[i - 1]) out << " " << g.vertex(g.edge(e).range).name;
                out << "\n";
            }
        } else {
            out << "regular " << pr.name << "\nvertex";
            for (VertexId v : pr.vertices) out << " " << g.vertex(v).name;
            out << "\n";
            for (const Edge &e : g.edges()) {
                if (g.prime_of(e.source) != g.find_prime(pr.name).value()) continue;
                out << (e.kind == EdgeKind::Internal ? "edge " : "connector ") << e.name << ": "
                    << g.vertex(e.source).name << " -> " << g.vertex(e.range).name << "\n";
            }
        }
    }
    return out.str();
}

ValidationReport validate_adaptable(const SeparatedGraph &g) {
    ValidationReport rep;
    auto add = [&](std::string c, std::string item, std::string msg) {
        rep.violations.push_back({std::move(c), std::move(item), std::move(msg)});
    };
    const int np = g.num_primes();
    auto strictly_below = [&](PrimeIndex q, PrimeIndex p) { return g.leq(q, p) && !g.leq(p, q); };

    for (PrimeIndex p = 0; p < np; ++p) {
        const Prime &pr = g.prime(p);
        if (pr.kind == PrimeKind::Regular) {
            if (pr.vertices.empty()) {
                add("regular-nonempty", pr.name, "regular prime has no vertices");
                continue;
            }
            // strong connectivity of E_p using internal edges only
            for (VertexId s : pr.vertices) {
                std::vector<bool> seen(g.num_vertices(), false);
                std::vector<VertexId> stack{s};
                seen[s] = true;
                while (!stack.empty()) {
                    VertexId u = stack.back();
                    stack.pop_back();
                    for (EdgeId e : g.out_edges(u)) {
                        if (g.edge(e).kind != EdgeKind::Internal) continue;
                        VertexId w = g.edge(e).range;
                        if (!seen[w]) {
                            seen[w] = true;
                            stack.push_back(w);
                        }
                    }
                }
                for (VertexId w : pr.vertices)
                    if (!seen[w]) {
                        add("regular-strongly-connected", pr.name,
                            "vertex '" + g.vertex(w).name + "' is not reachable from '" +
                                g.vertex(s).name + "' inside the component");
                        goto next_check;
                    }
            }
        next_check:
            for (VertexId v : pr.vertices) {
                int internal = 0;
                for (EdgeId e : g.out_edges(v))
                    if (g.edge(e).kind == EdgeKind::Internal) ++internal;
                if (internal < 2)
                    add("regular-out-degree", g.vertex(v).name,
                        "vertex emits " + std::to_string(internal) +
                            " internal edges, needs at least 2");
            }
        } else {
            for (int i = 1; i <= pr.k(); ++i)
                if (pr.connectors[i - 1].empty())
                    add("free-connectors", pr.name,
                        "X " + std::to_string(i) + " has no connector targets (g(p,i) >= 1)");
            bool minimal = true;
            for (PrimeIndex q = 0; q < np; ++q)
                if (q != p && strictly_below(q, p)) minimal = false;
            if ((pr.k() == 0) != minimal)
                add("free-minimal", pr.name,
                    pr.k() == 0 ? "k(p)=0 but the prime is not minimal"
                                : "k(p)>=1 but the prime is minimal");
        }
    }
    for (const Edge &e : g.edges()) {
        if (!e.is_connector()) continue;
        PrimeIndex p = g.prime_of(e.source), q = g.prime_of(e.range);
        if (!strictly_below(q, p))
            add("connector-lower", e.name,
                "target '" + g.vertex(e.range).name + "' is not in a strictly lower component");
    }
    // SCCs of E must be the declared components.
    for (PrimeIndex p = 0; p < np; ++p)
        for (PrimeIndex q = p + 1; q < np; ++q)
            if (g.leq(p, q) && g.leq(q, p))
                add("components", g.prime(p).name + "," + g.prime(q).name,
                    "distinct components lie on a common cycle");
    return rep;
}

bool component_leq(const SeparatedGraph &g, PrimeIndex p, PrimeIndex q) {
    if (p < 0 || p >= g.num_primes() || q < 0 || q >= g.num_primes())
        throw DomainError("unknown prime");
    return g.leq(q, p);
}

std::vector<std::vector<PrimeIndex>> hereditary_subsets(const SeparatedGraph &g) {
    const int n = g.num_primes();
    if (n > 20) throw DomainError("too many primes for subset enumeration");
    std::vector<std::vector<PrimeIndex>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (PrimeIndex p = 0; p < n && ok; ++p) {
            if (!(mask >> p & 1u)) continue;
            for (PrimeIndex q = 0; q < n; ++q)
                if (g.leq(q, p) && !(mask >> q & 1u)) ok = false;
        }
        if (!ok) continue;
        std::vector<PrimeIndex> s;
        for (PrimeIndex p = 0; p < n; ++p)
            if (mask >> p & 1u) s.push_back(p);
        out.push_back(std::move(s));
    }
    std::stable_sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

} // namespace sepgroid
