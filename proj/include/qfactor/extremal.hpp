#pragma once

// Graph families of the even-factor threshold argument, with fixed vertex
// layouts so that named vertices map to index ranges:
//
//   G*(n, d)  = K_d v (K_{n-2d+1} u (d-1)K_1)   cells [K_d | clique | singletons]
//   G1(s, P)  = K_s v (K_{p_1} u ... u K_{p_t})   cells [K_s | p_1 | ... | p_t]
//   G2(n, s)  = G*(n, s)
//   G3(n,d,s) = K_s v ((s-1)K_{d+1-s} u K_m),  m = n - s - (d+1-s)(s-1)
//               cells [u_1..u_s | v_{1,1}..v_{s-1,d+1-s} | w_1..w_m]
//   G4        = G3 + E_added - E_removed

#include "qfactor/graph.hpp"
#include "qfactor/polynomial.hpp"
#include "qfactor/quotient.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qfactor {

class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string &what) : std::invalid_argument(what) {}
};

Graph build_gstar(std::size_t n, std::size_t delta);
Partition gstar_partition(std::size_t n, std::size_t delta);

Graph build_g1(std::size_t s, const std::vector<std::size_t> &parts);
/// Cells [K_s | part_1 | ... | part_t].
Partition g1_partition(std::size_t s, const std::vector<std::size_t> &parts);

Graph build_g2(std::size_t n, std::size_t s);
Partition g2_partition(std::size_t n, std::size_t s);

/// m = n - s - (delta+1-s)(s-1); throws ParameterError if it is not positive.
std::size_t case_three_big_part(std::size_t n, std::size_t delta, std::size_t s);
Graph build_g3(std::size_t n, std::size_t delta, std::size_t s);
/// Three cells [S | V_1 | V_2].
Partition g3_partition(std::size_t n, std::size_t delta, std::size_t s);
/// One cell per clique: [S | K^(1) | ... | K^(s-1) | V_2].
Partition g3_clique_partition(std::size_t n, std::size_t delta, std::size_t s);

/// K_s v ((t-1)K_p u K_{n-s-p(t-1)}): the redistributed comparison graph.
Graph build_redistributed(std::size_t n, std::size_t s, std::size_t t, std::size_t p);

/// Index layout of G3/G4 (1-based names as in the construction).
struct CaseThreeLabels {
    std::size_t n = 0, delta = 0, s = 0, m = 0;

    std::size_t clique_size() const { return delta + 1 - s; }
    std::size_t u(std::size_t i) const;
    std::size_t v(std::size_t i, std::size_t j) const;
    std::size_t w(std::size_t r) const;
};

struct SurgeryPlan {
    CaseThreeLabels labels;
    std::vector<Edge> removed;
    std::vector<Edge> added_e1;
    std::vector<Edge> added_e2;

    std::vector<Edge> added() const;
    static std::size_t expected_removed(std::size_t delta, std::size_t s);
    static std::size_t expected_added(std::size_t n, std::size_t delta, std::size_t s);
};

SurgeryPlan surgery_plan(std::size_t n, std::size_t delta, std::size_t s);
Graph build_g4(std::size_t n, std::size_t delta, std::size_t s);
Graph apply_surgery(const Graph &g3, const SurgeryPlan &plan);

/// H is a spanning subgraph of G*(n, d) under some relabelling iff there are
/// d-1 independent vertices whose neighbourhoods together use at most d
/// vertices. Returns a map h-vertex -> G*-vertex, verified edge by edge.
std::optional<std::vector<std::size_t>> find_gstar_embedding(const Graph &h, std::size_t delta);
bool is_subgraph_identity(const Graph &h, const Graph &host);

struct EmbeddingReport {
    bool identity = false;
    bool found = false;
    std::vector<std::size_t> mapping;
};
EmbeddingReport check_gstar_containment(const Graph &h, std::size_t delta);

QuotientMatrix quotient_b2(long long n, long long s);
QuotientMatrix quotient_bstar(long long n, long long delta);

IntPolynomial phi_b2(long long n, long long s);
IntPolynomial phi_bstar(long long n, long long delta);
/// f(x) with phi_b2(n, s) - phi_bstar(n, delta) = (s - delta) f(x).
IntPolynomial f_poly(long long n, long long s, long long delta);

class CrossValidationError : public std::runtime_error {
public:
    explicit CrossValidationError(const std::string &what) : std::runtime_error(what) {}
};

/// q(G*(n, delta)) as the largest root of phi_bstar, checked against the
/// Perron value of Q(G*). Throws CrossValidationError on disagreement > tol.
double threshold_q(std::size_t n, std::size_t delta, double tol = 1e-8);

} // namespace qfactor
