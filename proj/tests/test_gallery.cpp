#include <doctest.h>

#include "tripos/gallery.hpp"
#include "tripos/laws.hpp"

using namespace tripos;

TEST_CASE("the power family passes the full law suite and regularity") {
  // exponent 1 at size 3 runs inside the law-suite test; the higher
  // exponents need smaller caps to keep the triple sweeps bounded
  CHECK(run_law_suite(make_power_tripos(2), LawCaps{2}).all_hold());
  CHECK(run_law_suite(make_power_tripos(3), LawCaps{2}).all_hold());
  for (int n = 1; n <= 3; ++n)
    CHECK(check_regular(make_power_tripos(n), 3).verdict == Verdict::HoldsWithinBounds);
}

TEST_CASE("power_tripos") {
  SUBCASE("exponent 1 is the identity flavor") {
    PowerTriposReport r = power_tripos(1, 3);
    CHECK(r.instance.flavor_name() == "identity");
    CHECK(r.verdict == Verdict::HoldsWithinBounds);
  }
  SUBCASE("F_2 preserves capped limits and splits diagonals") {
    PowerTriposReport r = power_tripos(2, 3);
    INFO(r.detail);
    CHECK(r.verdict == Verdict::HoldsWithinBounds);
    CHECK(r.limit_checks > 0);
    CHECK(r.split_checks == 4);
  }
  SUBCASE("F_3 on smaller caps") {
    PowerTriposReport r = power_tripos(3, 2);
    INFO(r.detail);
    CHECK(r.verdict == Verdict::HoldsWithinBounds);
  }
  SUBCASE("the diagonal into F_2(2) is split by the first projection") {
    TriposInstance p2 = make_power_tripos(2);
    FinSet two(2);
    // delta: i -> (i,i); first projection retracts it
    FinMap delta(two, f_object(p2, two), {0, 3});
    FinMap pi1 = select_coords({two, two}, {0});
    CHECK(compose(delta, pi1) == identity_map(two));
  }
}

TEST_CASE("counterexample_report") {
  CHECK(counterexample_report(1, 1).fiber_n == 4);
  CHECK(counterexample_report(2, 2).fiber_n == 16);
  CHECK(counterexample_report(3, 3).fiber_n == 256);

  CounterexampleReport r21 = counterexample_report(2, 1);
  CHECK(r21.fiber_n == 16);
  CHECK(r21.fiber_m == 4);
  CHECK_FALSE(r21.equivalent);

  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m) CHECK(counterexample_report(n, m).equivalent == (n == m));
}

TEST_CASE("nabla and gamma") {
  SUBCASE("nabla(1) has one node and its reflexive edge") {
    ReflexiveGraph g = nabla(FinSet(1));
    CHECK(g.nodes.size == 1);
    CHECK(g.edges.size == 1);
    CHECK(validate_graph(g).ok());
  }
  SUBCASE("nabla(2) has two nodes and four edges") {
    ReflexiveGraph g = nabla(FinSet(2));
    CHECK(g.nodes.size == 2);
    CHECK(g.edges.size == 4);
    CHECK(validate_graph(g).ok());
  }
  SUBCASE("gamma extracts the nodes") { CHECK(gamma(nabla(FinSet(3))).size == 3); }
}

TEST_CASE("graph enumeration and validation") {
  std::vector<ReflexiveGraph> graphs = enumerate_reflexive_graphs(2, 2);
  CHECK(!graphs.empty());
  for (const ReflexiveGraph& g : graphs) {
    CHECK(validate_graph(g).ok());
    CHECK(g.nodes.size <= 2);
    CHECK(g.edges.size <= g.nodes.size + 2);
  }
  // a graph violating the reflexivity laws is rejected
  ReflexiveGraph bad = nabla(FinSet(2));
  bad.refl = FinMap(bad.nodes, bad.edges, {1, 1});
  CHECK_FALSE(validate_graph(bad).ok());
}

TEST_CASE("gamma is left adjoint to nabla on the enumerated corpus") {
  AdjunctionReport r = check_nabla_adjunction(2, 2, 2);
  INFO(r.detail);
  CHECK(r.verdict == Verdict::HoldsWithinBounds);
  CHECK(r.pairs_checked > 0);
}

TEST_CASE("nabla does not preserve sums") {
  CocontinuityReport r = nabla_not_cocontinuous();
  CHECK(r.nabla_of_sum_edges == 4);
  CHECK(r.sum_of_nablas_edges == 2);
  CHECK_FALSE(r.isomorphic);
  // the discriminator is the edge count, not the node count
  CHECK(nabla(FinSet(2)).nodes.size ==
        graph_coproduct(nabla(FinSet(1)), nabla(FinSet(1))).nodes.size);
}

TEST_CASE("cover_by_nabla") {
  SUBCASE("nabla(1) covers itself") {
    CoverWitness w = cover_by_nabla(nabla(FinSet(1)));
    CHECK(w.verdict == Verdict::HoldsWithinBounds);
    CHECK(w.index.size == 1);
    CHECK(epi_mono(w.cover.node_map).is_iso);
    CHECK(epi_mono(w.cover.edge_map).is_iso);
  }
  SUBCASE("a single node with an extra loop is covered through nabla(2)") {
    // edges: the reflexive loop and one extra loop on the same node
    FinSet nodes(1), edges(2);
    ReflexiveGraph g{nodes, edges, FinMap(edges, nodes, {0, 0}), FinMap(edges, nodes, {0, 0}),
                     FinMap(nodes, edges, {0})};
    REQUIRE(validate_graph(g).ok());
    CoverWitness w = cover_by_nabla(g);
    CHECK(w.verdict == Verdict::HoldsWithinBounds);
    CHECK(w.index.size == 2);
    CHECK(epi_mono(w.cover.edge_map).is_epi);  // both loops are hit
  }
  SUBCASE("every small reflexive graph validates") {
    for (const ReflexiveGraph& g : enumerate_reflexive_graphs(2, 2)) {
      CoverWitness w = cover_by_nabla(g);
      CHECK(w.at_most_one_edge);
      CHECK(w.inclusion_mono);
      CHECK(w.cover_epi);
      CHECK(w.verdict == Verdict::HoldsWithinBounds);
    }
  }
  SUBCASE("node surjectivity via reflexive loops, edge surjectivity via pairs") {
    for (const ReflexiveGraph& g : enumerate_reflexive_graphs(2, 1)) {
      CoverWitness w = cover_by_nabla(g);
      // refl(v) is a node of C mapping to v
      for (int v = 0; v < g.nodes.size; ++v)
        CHECK(w.cover.node_map(g.refl(v)) == v);
    }
  }
}
