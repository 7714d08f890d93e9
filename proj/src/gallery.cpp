#include "tripos/gallery.hpp"

#include <algorithm>
#include <stdexcept>

namespace tripos {

PowerTriposReport power_tripos(int exponent, int max_obj) {
  PowerTriposReport out{make_power_tripos(exponent), Verdict::HoldsWithinBounds, 0, 0, ""};
  const TriposInstance& T = out.instance;
  std::vector<FinSet> objs;
  for (int s = 0; s <= max_obj; ++s) objs.emplace_back(s);

  auto fail = [&](const std::string& msg) {
    if (out.verdict == Verdict::HoldsWithinBounds) {
      out.verdict = Verdict::Fails;
      out.detail = msg;
    }
  };

  // Terminal object.
  ++out.limit_checks;
  if (f_object(T, FinSet(1)).size != 1) fail("F(1) is not terminal");

  // Binary products, via the canonical comparison <F(pi1), F(pi2)>.
  for (const FinSet& I : objs)
    for (const FinSet& J : objs) {
      ++out.limit_checks;
      FinMap cmp = pair_map(f_map(T, product_proj1(I, J)), f_map(T, product_proj2(I, J)));
      if (!epi_mono(cmp).is_iso)
        fail("F does not preserve the product " + std::to_string(I.size) + "x" +
             std::to_string(J.size));
    }

  // Equalizers.
  for (const FinSet& I : objs)
    for (const FinSet& J : objs)
      for (const FinMap& f : all_maps(I, J))
        for (const FinMap& g : all_maps(I, J)) {
          ++out.limit_checks;
          LimitCone eq = equalizer_limit(f, g);
          LimitCone feq = equalizer_limit(f_map(T, f), f_map(T, g));
          std::optional<FinMap> cmp = feq.mediate({f_map(T, eq.legs[0])});
          if (!cmp || !epi_mono(*cmp).is_iso) {
            fail("F does not preserve an equalizer at sizes " + std::to_string(I.size) + "," +
                 std::to_string(J.size));
          }
        }

  // Pullbacks.
  for (const FinSet& X : objs)
    for (const FinSet& Y : objs)
      for (const FinSet& Z : objs)
        for (const FinMap& f : all_maps(X, Z))
          for (const FinMap& g : all_maps(Y, Z)) {
            ++out.limit_checks;
            LimitCone pb = pullback_limit(f, g);
            LimitCone fpb = pullback_limit(f_map(T, f), f_map(T, g));
            std::optional<FinMap> cmp =
                fpb.mediate({f_map(T, pb.legs[0]), f_map(T, pb.legs[1])});
            if (!cmp || !epi_mono(*cmp).is_iso)
              fail("F does not preserve a pullback over size " + std::to_string(Z.size));
          }

  // Every capped I splits through F(I) via the diagonal.
  for (const FinSet& I : objs) {
    ++out.split_checks;
    std::vector<int> diag(static_cast<size_t>(I.size));
    for (int i = 0; i < I.size; ++i)
      diag[static_cast<size_t>(i)] =
          static_cast<int>(encode_tuple(std::vector<int>(static_cast<size_t>(exponent), i), I.size));
    FinMap delta(I, f_object(T, I), std::move(diag));
    if (!epi_mono(delta).is_mono) fail("diagonal not mono at |I|=" + std::to_string(I.size));
    // retraction: the first coordinate
    FinMap first = select_coords(std::vector<FinSet>(static_cast<size_t>(exponent), I), {0});
    if (!(compose(delta, first) == identity_map(I)))
      fail("first projection does not retract the diagonal at |I|=" + std::to_string(I.size));
  }

  return out;
}

CounterexampleReport counterexample_report(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("counterexample_report: exponents must be >= 1");
  CounterexampleReport out;
  out.n = n;
  out.m = m;
  out.fiber_n = 1LL << (1LL << n);
  out.fiber_m = 1LL << (1LL << m);
  out.equivalent = (out.fiber_n == out.fiber_m);
  out.anchor = "fiber over 2: |F_n*Sub(2)| = 2^(2^n); the counts discriminate unless n = m";
  return out;
}

Expected<ReflexiveGraph> validate_graph(const ReflexiveGraph& g) {
  if (!(g.src.dom == g.edges) || !(g.src.cod == g.nodes) || !(g.tgt.dom == g.edges) ||
      !(g.tgt.cod == g.nodes) || !(g.refl.dom == g.nodes) || !(g.refl.cod == g.edges))
    return Expected<ReflexiveGraph>::failure("graph maps have wrong boundaries");
  if (!(compose(g.refl, g.src) == identity_map(g.nodes)))
    return Expected<ReflexiveGraph>::failure("src . refl is not the identity");
  if (!(compose(g.refl, g.tgt) == identity_map(g.nodes)))
    return Expected<ReflexiveGraph>::failure("tgt . refl is not the identity");
  return g;
}

bool graph_morphism_valid(const ReflexiveGraph& g, const ReflexiveGraph& h,
                          const GraphMorphism& m) {
  if (!(m.node_map.dom == g.nodes) || !(m.node_map.cod == h.nodes) ||
      !(m.edge_map.dom == g.edges) || !(m.edge_map.cod == h.edges))
    return false;
  if (!(compose(m.edge_map, h.src) == compose(g.src, m.node_map))) return false;
  if (!(compose(m.edge_map, h.tgt) == compose(g.tgt, m.node_map))) return false;
  if (!(compose(g.refl, m.edge_map) == compose(m.node_map, h.refl))) return false;
  return true;
}

std::vector<GraphMorphism> all_graph_morphisms(const ReflexiveGraph& g,
                                               const ReflexiveGraph& h) {
  std::vector<GraphMorphism> out;
  for (const FinMap& nodes : all_maps(g.nodes, h.nodes))
    for (const FinMap& edges : all_maps(g.edges, h.edges)) {
      GraphMorphism m{nodes, edges};
      if (graph_morphism_valid(g, h, m)) out.push_back(std::move(m));
    }
  return out;
}

ReflexiveGraph nabla(const FinSet& I) {
  FinSet edges = product_object(I, I);
  std::vector<int> src(static_cast<size_t>(edges.size));
  std::vector<int> tgt(static_cast<size_t>(edges.size));
  for (int z = 0; z < edges.size; ++z) {
    src[static_cast<size_t>(z)] = z / I.size;
    tgt[static_cast<size_t>(z)] = z % I.size;
  }
  std::vector<int> refl(static_cast<size_t>(I.size));
  for (int v = 0; v < I.size; ++v) refl[static_cast<size_t>(v)] = pair_encode(v, v, I.size);
  return ReflexiveGraph{I, edges, FinMap(edges, I, std::move(src)),
                        FinMap(edges, I, std::move(tgt)), FinMap(I, edges, std::move(refl))};
}

FinSet gamma(const ReflexiveGraph& g) { return g.nodes; }

ReflexiveGraph graph_coproduct(const ReflexiveGraph& g, const ReflexiveGraph& h) {
  FinSet nodes(g.nodes.size + h.nodes.size);
  FinSet edges(g.edges.size + h.edges.size);
  std::vector<int> src, tgt, refl;
  for (int e = 0; e < g.edges.size; ++e) {
    src.push_back(g.src(e));
    tgt.push_back(g.tgt(e));
  }
  for (int e = 0; e < h.edges.size; ++e) {
    src.push_back(h.src(e) + g.nodes.size);
    tgt.push_back(h.tgt(e) + g.nodes.size);
  }
  for (int v = 0; v < g.nodes.size; ++v) refl.push_back(g.refl(v));
  for (int v = 0; v < h.nodes.size; ++v) refl.push_back(h.refl(v) + g.edges.size);
  return ReflexiveGraph{nodes, edges, FinMap(edges, nodes, std::move(src)),
                        FinMap(edges, nodes, std::move(tgt)),
                        FinMap(nodes, edges, std::move(refl))};
}

AdjunctionReport check_nabla_adjunction(int max_nodes, int max_extra_edges, int max_i) {
  AdjunctionReport out;
  for (const ReflexiveGraph& g : enumerate_reflexive_graphs(max_nodes, max_extra_edges))
    for (int isize = 0; isize <= max_i; ++isize) {
      FinSet I(isize);
      ReflexiveGraph nb = nabla(I);
      std::vector<GraphMorphism> homs = all_graph_morphisms(g, nb);
      std::vector<FinMap> funcs = all_maps(gamma(g), I);
      ++out.pairs_checked;
      // The restriction morphism -> node_map must be a bijection onto the
      // function set.
      bool injective = true;
      for (size_t a = 0; a < homs.size() && injective; ++a)
        for (size_t b = a + 1; b < homs.size() && injective; ++b)
          if (homs[a].node_map == homs[b].node_map) injective = false;
      if (!injective || homs.size() != funcs.size()) {
        out.verdict = Verdict::Fails;
        out.detail = "hom-set bijection fails at graph with " + std::to_string(g.nodes.size) +
                     " nodes, " + std::to_string(g.edges.size) + " edges, |I|=" +
                     std::to_string(isize) + " (" + std::to_string(homs.size()) +
                     " morphisms vs " + std::to_string(funcs.size()) + " functions)";
        return out;
      }
    }
  return out;
}

CocontinuityReport nabla_not_cocontinuous() {
  CocontinuityReport out;
  ReflexiveGraph lhs = nabla(FinSet(2));  // nabla(1+1)
  ReflexiveGraph one = nabla(FinSet(1));
  ReflexiveGraph rhs = graph_coproduct(one, one);
  out.nabla_of_sum_edges = lhs.edges.size;
  out.sum_of_nablas_edges = rhs.edges.size;
  out.isomorphic = false;
  for (const GraphMorphism& m : all_graph_morphisms(lhs, rhs)) {
    ++out.isos_searched;
    if (epi_mono(m.node_map).is_iso && epi_mono(m.edge_map).is_iso) out.isomorphic = true;
  }
  out.conclusion =
      "nabla(1+1) has " + std::to_string(out.nabla_of_sum_edges) + " edges, nabla(1)+nabla(1) has " +
      std::to_string(out.sum_of_nablas_edges) +
      "; no isomorphism exists, so nabla preserves limits (left adjoint Gamma) but not "
      "colimits and has no right adjoint";
  return out;
}

CoverWitness cover_by_nabla(const ReflexiveGraph& g) {
  CoverWitness out;
  FinSet I = g.edges;
  out.index = I;
  ReflexiveGraph nb = nabla(I);

  // C: edges (d, d') of nabla(I) with d = d' or src(d') = tgt(d).
  std::vector<int> chosen;  // nabla edge codes, ascending
  for (int z = 0; z < nb.edges.size; ++z) {
    int d = nb.src(z);
    int d2 = nb.tgt(z);
    if (d == d2 || g.src(d2) == g.tgt(d)) chosen.push_back(z);
  }
  FinSet cedges(static_cast<int>(chosen.size()));
  std::vector<int> csrc, ctgt;
  std::vector<int> crefl(static_cast<size_t>(I.size), -1);
  for (size_t k = 0; k < chosen.size(); ++k) {
    int d = nb.src(chosen[k]);
    int d2 = nb.tgt(chosen[k]);
    csrc.push_back(d);
    ctgt.push_back(d2);
    if (d == d2) crefl[static_cast<size_t>(d)] = static_cast<int>(k);
  }
  out.c = ReflexiveGraph{I, cedges, FinMap(cedges, I, csrc), FinMap(cedges, I, ctgt),
                         FinMap(I, cedges, crefl)};

  out.inclusion = GraphMorphism{identity_map(I), FinMap(cedges, nb.edges, chosen)};

  // e: node d -> tgt(d); edge (d,d') -> d' for distinct pairs, else the
  // reflexive loop at tgt(d).
  std::vector<int> enodes(static_cast<size_t>(I.size));
  for (int d = 0; d < I.size; ++d) enodes[static_cast<size_t>(d)] = g.tgt(d);
  std::vector<int> eedges(chosen.size());
  for (size_t k = 0; k < chosen.size(); ++k) {
    int d = csrc[k];
    int d2 = ctgt[k];
    eedges[k] = (d == d2) ? g.refl(g.tgt(d)) : d2;
  }
  out.cover = GraphMorphism{FinMap(I, g.nodes, std::move(enodes)),
                            FinMap(cedges, g.edges, std::move(eedges))};

  // Validations.
  out.at_most_one_edge = true;
  for (size_t a = 0; a < chosen.size(); ++a)
    for (size_t b = a + 1; b < chosen.size(); ++b)
      if (csrc[a] == csrc[b] && ctgt[a] == ctgt[b]) out.at_most_one_edge = false;
  bool c_valid = validate_graph(out.c).ok();
  bool inc_valid = graph_morphism_valid(out.c, nb, out.inclusion);
  out.inclusion_mono = inc_valid && epi_mono(out.inclusion.node_map).is_mono &&
                       epi_mono(out.inclusion.edge_map).is_mono;
  bool cover_valid = graph_morphism_valid(out.c, g, out.cover);
  out.cover_epi = cover_valid && epi_mono(out.cover.node_map).is_epi &&
                  epi_mono(out.cover.edge_map).is_epi;
  out.verdict = (out.at_most_one_edge && c_valid && out.inclusion_mono && out.cover_epi)
                    ? Verdict::HoldsWithinBounds
                    : Verdict::Fails;
  return out;
}

std::vector<ReflexiveGraph> enumerate_reflexive_graphs(int max_nodes, int max_extra) {
  std::vector<ReflexiveGraph> out;
  for (int n = 0; n <= max_nodes; ++n) {
    for (int k = 0; k <= max_extra; ++k) {
      if (n == 0 && k > 0) continue;  // extra edges need endpoints
      long long assignments = 1;
      for (int e = 0; e < k; ++e) assignments *= static_cast<long long>(n) * n;
      for (long long code = 0; code < assignments; ++code) {
        FinSet nodes(n);
        FinSet edges(n + k);
        std::vector<int> src, tgt, refl;
        for (int v = 0; v < n; ++v) {
          src.push_back(v);
          tgt.push_back(v);
          refl.push_back(v);
        }
        long long rest = code;
        for (int e = 0; e < k; ++e) {
          int pair = static_cast<int>(rest % (static_cast<long long>(n) * n));
          rest /= static_cast<long long>(n) * n;
          src.push_back(pair / n);
          tgt.push_back(pair % n);
        }
        ReflexiveGraph g{nodes, edges, FinMap(edges, nodes, std::move(src)),
                         FinMap(edges, nodes, std::move(tgt)),
                         FinMap(nodes, edges, std::move(refl))};
        out.push_back(std::move(g));
      }
    }
  }
  return out;
}

}  // namespace tripos
