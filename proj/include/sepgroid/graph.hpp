#pragma once

#include "sepgroid/error.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sepgroid {

using VertexId = int;
using EdgeId = int;
using PrimeIndex = int;

enum class PrimeKind { Free, Regular };

enum class EdgeKind { Internal, Loop, FreeConnector, RegularConnector };

struct Vertex {
    std::string name;
    PrimeIndex prime;
};

struct Edge {
    EdgeKind kind;
    std::string name; // canonical token text for loops and free connectors
    VertexId source;
    VertexId range;
    int loop = 0;   // i of alpha(p,i) and beta(p,i,t)
    int target = 0; // t of beta(p,i,t)

    bool is_connector() const {
        return kind == EdgeKind::FreeConnector || kind == EdgeKind::RegularConnector;
    }
};

struct Prime {
    std::string name;
    PrimeKind kind;
    std::vector<VertexId> vertices;
    // Free primes: loops[i-1] is alpha(p,i), connectors[i-1][t-1] is beta(p,i,t).
    std::vector<EdgeId> loops;
    std::vector<std::vector<EdgeId>> connectors;

    int k() const { return static_cast<int>(loops.size()); }
};

// An adaptable separated graph. Built by parse_graph or GraphBuilder; the
// component order is derived from reachability.
class SeparatedGraph {
public:
    const std::string &name() const { return name_; }
    const std::vector<Prime> &primes() const { return primes_; }
    const std::vector<Vertex> &vertices() const { return vertices_; }
    const std::vector<Edge> &edges() const { return edges_; }

    const Prime &prime(PrimeIndex p) const { return primes_.at(p); }
    const Vertex &vertex(VertexId v) const { return vertices_.at(v); }
    const Edge &edge(EdgeId e) const { return edges_.at(e); }
    PrimeIndex prime_of(VertexId v) const { return vertices_.at(v).prime; }
    bool is_free_vertex(VertexId v) const {
        return primes_[vertices_.at(v).prime].kind == PrimeKind::Free;
    }

    // Out-edges of v in declaration order.
    const std::vector<EdgeId> &out_edges(VertexId v) const { return out_.at(v); }
    // The partition C_v of s^{-1}(v). Free vertices: X_1..X_k; regular: one class.
    const std::vector<std::vector<EdgeId>> &partition(VertexId v) const {
        return partition_.at(v);
    }
    // Index of the class of C_{s(e)} containing e.
    int class_of(EdgeId e) const { return class_of_.at(e); }

    EdgeId alpha(PrimeIndex p, int i) const;
    EdgeId beta(PrimeIndex p, int i, int t) const;
    VertexId free_vertex(PrimeIndex p) const { return primes_.at(p).vertices.at(0); }

    std::optional<VertexId> find_vertex(const std::string &name) const;
    std::optional<PrimeIndex> find_prime(const std::string &name) const;
    // Internal edges and regular connectors, by user name.
    std::optional<EdgeId> find_edge(const std::string &name) const;

    // a <= b in the derived order on components (b reaches a).
    bool leq(PrimeIndex a, PrimeIndex b) const { return leq_[b][a]; }
    bool vertex_reaches(VertexId from, VertexId to) const { return reach_[from][to]; }

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int num_primes() const { return static_cast<int>(primes_.size()); }

private:
    friend class GraphBuilder;
    void finalize();

    std::string name_;
    std::vector<Prime> primes_;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> out_;
    std::vector<std::vector<std::vector<EdgeId>>> partition_;
    std::vector<int> class_of_;
    std::vector<std::vector<bool>> reach_; // reflexive-transitive on vertices
    std::vector<std::vector<bool>> leq_;   // leq_[p][q]: p reaches q
};

// Incremental construction with name resolution. Throws ParseError.
class GraphBuilder {
public:
    explicit GraphBuilder(std::string name);
    PrimeIndex add_free(const std::string &name, int k, int line = 0);
    // targets[i-1] lists the vertex names of X_i.
    void set_free_targets(PrimeIndex p, std::vector<std::vector<std::string>> targets,
                          int line = 0);
    PrimeIndex add_regular(const std::string &name, int line = 0);
    void add_vertex(PrimeIndex p, const std::string &name, int line = 0);
    void add_edge(PrimeIndex p, const std::string &name, const std::string &src,
                  const std::string &rng, int line = 0);
    void add_connector(PrimeIndex p, const std::string &name, const std::string &src,
                       const std::string &rng, int line = 0);
    SeparatedGraph build();

private:
    struct Pending {
        EdgeKind kind;
        PrimeIndex prime;
        std::string name, src, rng;
        int loop, target, line;
    };
    SeparatedGraph g_;
    std::vector<std::vector<std::vector<std::string>>> free_targets_;
    std::vector<int> free_lines_;
    std::vector<Pending> pending_;
};

SeparatedGraph parse_graph(const std::string &text);
SeparatedGraph load_graph(const std::string &path);
std::string serialize_graph(const SeparatedGraph &g);

struct Violation {
    std::string condition; // short identifier of the violated axiom
    std::string item;      // offending prime, vertex or edge
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate_adaptable(const SeparatedGraph &g);

// True iff q <= p, i.e. p reaches q.
bool component_leq(const SeparatedGraph &g, PrimeIndex p, PrimeIndex q);

// Hereditary subsets of I as sorted prime index lists, ordered by cardinality.
std::vector<std::vector<PrimeIndex>> hereditary_subsets(const SeparatedGraph &g);

} // namespace sepgroid
