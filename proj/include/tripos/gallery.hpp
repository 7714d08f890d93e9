#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tripos/core.hpp"
#include "tripos/verdict.hpp"

namespace tripos {

// ---------------------------------------------------------------------------
// The power functor family F_n : I -> I^n.
// ---------------------------------------------------------------------------

struct PowerTriposReport {
  TriposInstance instance;
  Verdict verdict = Verdict::HoldsWithinBounds;
  long long limit_checks = 0;
  long long split_checks = 0;
  std::string detail;
};

/// Builds the subobject-flavor instance for F_n and validates the tripos
/// conditions at desk scale: F_n preserves capped finite limits (terminal,
/// products, equalizers, pullbacks up to canonical iso) and each capped I is
/// a split subobject of F_n(I) via the diagonal.
PowerTriposReport power_tripos(int exponent, int max_obj = 3);

struct CounterexampleReport {
  int n = 0;
  int m = 0;
  long long fiber_n = 0;  // |Sub(F_n 2)| = 2^(2^n)
  long long fiber_m = 0;
  bool equivalent = false;
  std::string anchor;
};

/// The discriminating invariant: the fibers over 2 have different
/// cardinalities exactly when n != m, so the triposes are equivalent iff
/// n = m.
CounterexampleReport counterexample_report(int n, int m);

// ---------------------------------------------------------------------------
// Reflexive graphs and the nabla functor.
// ---------------------------------------------------------------------------

/// A presheaf over the three-element monoid of monotone endomaps of the
/// two-element chain: nodes, edges, source/target, and a reflexive loop for
/// every node.
struct ReflexiveGraph {
  FinSet nodes;
  FinSet edges;
  FinMap src;   // edges -> nodes
  FinMap tgt;   // edges -> nodes
  FinMap refl;  // nodes -> edges
};

Expected<ReflexiveGraph> validate_graph(const ReflexiveGraph& g);

struct GraphMorphism {
  FinMap node_map;
  FinMap edge_map;
};

bool graph_morphism_valid(const ReflexiveGraph& g, const ReflexiveGraph& h,
                          const GraphMorphism& m);
std::vector<GraphMorphism> all_graph_morphisms(const ReflexiveGraph& g, const ReflexiveGraph& h);

/// nabla(I): nodes I, one edge per ordered pair, reflexive loop on the
/// diagonal. gamma(G): the global sections, i.e. the nodes.
ReflexiveGraph nabla(const FinSet& I);
FinSet gamma(const ReflexiveGraph& g);

ReflexiveGraph graph_coproduct(const ReflexiveGraph& g, const ReflexiveGraph& h);

struct AdjunctionReport {
  Verdict verdict = Verdict::HoldsWithinBounds;
  long long pairs_checked = 0;
  std::string detail;
};

/// Gamma -| nabla: graph morphisms G -> nabla(I) restrict bijectively to
/// functions Gamma(G) -> I, checked by enumerating both sides.
AdjunctionReport check_nabla_adjunction(int max_nodes, int max_extra_edges, int max_i);

struct CocontinuityReport {
  int nabla_of_sum_edges = 0;
  int sum_of_nablas_edges = 0;
  bool isomorphic = false;
  long long isos_searched = 0;
  std::string conclusion;
};

/// nabla(1+1) has four edges, nabla(1)+nabla(1) has two: no iso exists, so
/// nabla preserves limits (it has the left adjoint Gamma) but not colimits.
CocontinuityReport nabla_not_cocontinuous();

struct CoverWitness {
  FinSet index;          // I = edge set of G
  ReflexiveGraph c;      // subgraph of nabla(I), at most one edge per pair
  GraphMorphism inclusion;  // C >-> nabla(I)
  GraphMorphism cover;      // C ->> G
  bool at_most_one_edge = false;
  bool inclusion_mono = false;
  bool cover_epi = false;
  Verdict verdict = Verdict::Fails;
};

/// The direct subquotient cover: I is the edge set, C links d -> d' when
/// d = d' or the edges compose, and the cover sends d to its target.
CoverWitness cover_by_nabla(const ReflexiveGraph& g);

/// Canonical enumeration: reflexive loops first (refl(v) = v), then up to
/// `max_extra` freely placed extra edges; covers all shapes at desk scale up
/// to relabeling.
std::vector<ReflexiveGraph> enumerate_reflexive_graphs(int max_nodes, int max_extra);

}  // namespace tripos
