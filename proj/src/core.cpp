#include "tripos/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace tripos {

std::string TriposInstance::flavor_name() const {
  if (is_power()) return power_exponent == 1 ? "identity" : "power:" + std::to_string(power_exponent);
  return "implicative(|A|=" + std::to_string(algebra->structure.size()) + ")";
}

TriposInstance make_power_tripos(int exponent, EnumCaps caps) {
  if (exponent < 1) throw std::invalid_argument("power tripos exponent must be >= 1");
  TriposInstance t;
  t.power_exponent = exponent;
  t.caps = caps;
  return t;
}

TriposInstance make_identity_tripos(EnumCaps caps) { return make_power_tripos(1, caps); }

TriposInstance make_implicative_tripos(ImplicativeAlgebra alg, EnumCaps caps) {
  TriposInstance t;
  t.caps = caps;
  const ImplicativeStructure& A = alg.structure;
  const FinLattice& L = A.lattice;
  int n = A.size();
  t.and_table.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  t.or_table = t.and_table;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> ands;
      std::vector<int> ors;
      ands.reserve(static_cast<size_t>(n));
      for (int c = 0; c < n; ++c) {
        ands.push_back(A.arrow(A.arrow(a, A.arrow(b, c)), c));
        ors.push_back(A.arrow(A.arrow(a, c), A.arrow(A.arrow(b, c), c)));
      }
      t.and_table[static_cast<size_t>(a)][static_cast<size_t>(b)] = big_meet(L, ands);
      t.or_table[static_cast<size_t>(a)][static_cast<size_t>(b)] = big_meet(L, ors);
    }
  t.algebra = std::move(alg);
  return t;
}

FinSet f_object(const TriposInstance& T, const FinSet& I) {
  if (!T.is_power()) throw std::invalid_argument("f_object: power flavor only");
  return power_object(I, T.power_exponent, T.caps.max_carrier);
}

FinMap f_map(const TriposInstance& T, const FinMap& u) {
  if (!T.is_power()) throw std::invalid_argument("f_map: power flavor only");
  return power_map(u, T.power_exponent, T.caps.max_carrier);
}

long long fiber_size(const TriposInstance& T, const FinSet& I) {
  if (T.is_power())
    return checked_pow(2, f_object(T, I).size, T.caps.max_fiber, "fiber_size");
  return checked_pow(T.algebra->structure.size(), I.size, T.caps.max_fiber, "fiber_size");
}

Predicate fiber_element(const TriposInstance& T, const FinSet& I, long long k) {
  if (T.is_power()) {
    FinSet amb = f_object(T, I);
    std::vector<bool> mask(static_cast<size_t>(amb.size));
    for (int j = 0; j < amb.size; ++j)
      mask[static_cast<size_t>(j)] = (k >> (amb.size - 1 - j)) & 1;
    return Predicate{I, Subobject(amb, std::move(mask))};
  }
  return Predicate{I, decode_tuple(k, I.size, T.algebra->structure.size())};
}

long long fiber_rank(const TriposInstance& T, const Predicate& p) {
  if (T.is_power()) {
    long long code = 0;
    for (bool b : p.sub().members) code = (code << 1) | (b ? 1 : 0);
    return code;
  }
  return encode_tuple(p.table(), T.algebra->structure.size());
}

std::vector<Predicate> fiber_enumerate(const TriposInstance& T, const FinSet& I) {
  long long total = fiber_size(T, I);
  std::vector<Predicate> out;
  out.reserve(static_cast<size_t>(total));
  for (long long k = 0; k < total; ++k) out.push_back(fiber_element(T, I, k));
  return out;
}

namespace {

void require_same_index(const Predicate& a, const Predicate& b, const char* op) {
  if (!(a.index == b.index)) throw std::invalid_argument(std::string(op) + ": index mismatch");
}

Predicate const_table(const FinSet& I, int value) {
  return Predicate{I, std::vector<int>(static_cast<size_t>(I.size), value)};
}

Predicate zip_tables(const Predicate& a, const Predicate& b,
                     const std::vector<std::vector<int>>& table) {
  std::vector<int> out(a.table().size());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = table[static_cast<size_t>(a.table()[i])][static_cast<size_t>(b.table()[i])];
  return Predicate{a.index, std::move(out)};
}

}  // namespace

Predicate top_pred(const TriposInstance& T, const FinSet& I) {
  if (T.is_power()) return Predicate{I, full_subobject(f_object(T, I))};
  return const_table(I, T.algebra->structure.lattice.top);
}

Predicate bot_pred(const TriposInstance& T, const FinSet& I) {
  if (T.is_power()) return Predicate{I, empty_subobject(f_object(T, I))};
  return const_table(I, T.algebra->structure.lattice.bottom);
}

Predicate and_pred(const TriposInstance& T, const Predicate& a, const Predicate& b) {
  require_same_index(a, b, "and");
  if (T.is_power()) return Predicate{a.index, sub_meet(a.sub(), b.sub())};
  return zip_tables(a, b, T.and_table);
}

Predicate or_pred(const TriposInstance& T, const Predicate& a, const Predicate& b) {
  require_same_index(a, b, "or");
  if (T.is_power()) return Predicate{a.index, sub_join(a.sub(), b.sub())};
  return zip_tables(a, b, T.or_table);
}

Predicate imp_pred(const TriposInstance& T, const Predicate& a, const Predicate& b) {
  require_same_index(a, b, "imp");
  if (T.is_power()) {
    std::vector<bool> m(a.sub().members.size());
    for (size_t j = 0; j < m.size(); ++j) m[j] = !a.sub().members[j] || b.sub().members[j];
    return Predicate{a.index, Subobject(a.sub().ambient, std::move(m))};
  }
  return zip_tables(a, b, T.algebra->structure.imp);
}

Predicate pointwise_predicate(const TriposInstance& T, const Subobject& which) {
  const FinSet& I = which.ambient;
  if (T.is_power()) {
    int n = T.power_exponent;
    FinSet amb = f_object(T, I);
    std::vector<bool> mask(static_cast<size_t>(amb.size), true);
    for (int w = 0; w < amb.size; ++w)
      for (int d : decode_tuple(w, n, I.size))
        if (!which.contains(d)) {
          mask[static_cast<size_t>(w)] = false;
          break;
        }
    return Predicate{I, Subobject(amb, std::move(mask))};
  }
  const FinLattice& L = T.algebra->structure.lattice;
  std::vector<int> tab(static_cast<size_t>(I.size));
  for (int i = 0; i < I.size; ++i) tab[static_cast<size_t>(i)] = which.contains(i) ? L.top : L.bottom;
  return Predicate{I, std::move(tab)};
}

bool entails(const TriposInstance& T, const Predicate& a, const Predicate& b) {
  require_same_index(a, b, "entails");
  if (T.is_power()) return sub_leq(a.sub(), b.sub());
  const ImplicativeStructure& A = T.algebra->structure;
  const FinLattice& L = A.lattice;
  int acc = L.top;
  for (size_t i = 0; i < a.table().size(); ++i)
    acc = L.meet[static_cast<size_t>(acc)]
                [static_cast<size_t>(A.arrow(a.table()[i], b.table()[i]))];
  return T.algebra->separator.contains(acc);
}

bool equiv(const TriposInstance& T, const Predicate& a, const Predicate& b) {
  return entails(T, a, b) && entails(T, b, a);
}

Predicate reindex(const TriposInstance& T, const Predicate& phi, const FinMap& u) {
  if (!(u.cod == phi.index)) throw std::invalid_argument("reindex: sort mismatch");
  if (T.is_power()) {
    FinMap fu = f_map(T, u);
    std::vector<bool> mask(static_cast<size_t>(fu.dom.size));
    for (int x = 0; x < fu.dom.size; ++x)
      mask[static_cast<size_t>(x)] = phi.sub().contains(fu(x));
    return Predicate{u.dom, Subobject(fu.dom, std::move(mask))};
  }
  std::vector<int> tab(static_cast<size_t>(u.dom.size));
  for (int i = 0; i < u.dom.size; ++i) tab[static_cast<size_t>(i)] = phi.table()[static_cast<size_t>(u(i))];
  return Predicate{u.dom, std::move(tab)};
}

Predicate exists_along(const TriposInstance& T, const FinMap& u, const Predicate& phi) {
  if (!(u.dom == phi.index)) throw std::invalid_argument("exists_along: sort mismatch");
  if (T.is_power()) {
    FinMap fu = f_map(T, u);
    std::vector<bool> mask(static_cast<size_t>(fu.cod.size), false);
    for (int x = 0; x < fu.dom.size; ++x)
      if (phi.sub().contains(x)) mask[static_cast<size_t>(fu(x))] = true;
    return Predicate{u.cod, Subobject(fu.cod, std::move(mask))};
  }
  const ImplicativeStructure& A = T.algebra->structure;
  const FinLattice& L = A.lattice;
  int n = A.size();
  std::vector<int> tab(static_cast<size_t>(u.cod.size));
  for (int j = 0; j < u.cod.size; ++j) {
    std::vector<int> outer;
    outer.reserve(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c) {
      int inner = L.top;
      for (int i = 0; i < u.dom.size; ++i)
        if (u(i) == j)
          inner = L.meet[static_cast<size_t>(inner)]
                        [static_cast<size_t>(A.arrow(phi.table()[static_cast<size_t>(i)], c))];
      outer.push_back(A.arrow(inner, c));
    }
    tab[static_cast<size_t>(j)] = big_meet(L, outer);
  }
  return Predicate{u.cod, std::move(tab)};
}

Predicate forall_along(const TriposInstance& T, const FinMap& u, const Predicate& phi) {
  if (!(u.dom == phi.index)) throw std::invalid_argument("forall_along: sort mismatch");
  if (T.is_power()) {
    FinMap fu = f_map(T, u);
    std::vector<bool> mask(static_cast<size_t>(fu.cod.size), true);
    for (int x = 0; x < fu.dom.size; ++x)
      if (!phi.sub().contains(x)) mask[static_cast<size_t>(fu(x))] = false;
    return Predicate{u.cod, Subobject(fu.cod, std::move(mask))};
  }
  const ImplicativeStructure& A = T.algebra->structure;
  const FinLattice& L = A.lattice;
  std::vector<int> tab(static_cast<size_t>(u.cod.size));
  for (int j = 0; j < u.cod.size; ++j) {
    int acc = L.top;
    for (int i = 0; i < u.dom.size; ++i)
      if (u(i) == j)
        acc = L.meet[static_cast<size_t>(acc)]
                    [static_cast<size_t>(phi.table()[static_cast<size_t>(i)])];
    tab[static_cast<size_t>(j)] = acc;
  }
  return Predicate{u.cod, std::move(tab)};
}

Expected<bool> validate_pullback_square(const CospanSquare& sq) {
  if (!(sq.f.cod == sq.g.cod)) return Expected<bool>::failure("cospan codomain mismatch");
  if (!(sq.to_x.dom == sq.to_y.dom)) return Expected<bool>::failure("apex legs disagree on domain");
  if (!(sq.to_x.cod == sq.f.dom) || !(sq.to_y.cod == sq.g.dom))
    return Expected<bool>::failure("apex legs have wrong codomains");
  if (!(compose(sq.to_x, sq.f) == compose(sq.to_y, sq.g)))
    return Expected<bool>::failure("square does not commute");
  LimitCone canonical = pullback_limit(sq.f, sq.g);
  std::optional<FinMap> med = canonical.mediate({sq.to_x, sq.to_y});
  if (!med) return Expected<bool>::failure("apex does not factor through the pullback");
  if (!epi_mono(*med).is_iso)
    return Expected<bool>::failure("apex is not the pullback (comparison map not iso)");
  return true;
}

CospanSquare canonical_pullback_square(const FinMap& f, const FinMap& g) {
  LimitCone pb = pullback_limit(f, g);
  return CospanSquare{f, g, pb.legs[0], pb.legs[1]};
}

std::string pred_str(const Predicate& p) {
  std::string s;
  if (p.is_sub()) {
    for (bool b : p.sub().members) s += b ? '1' : '0';
    return "mask:" + s;
  }
  for (size_t i = 0; i < p.table().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p.table()[i]);
  }
  return "table:[" + s + "]";
}

BeckChevalleyResult beck_chevalley_check(const TriposInstance& T, const CospanSquare& sq,
                                         const Predicate& phi) {
  Expected<bool> valid = validate_pullback_square(sq);
  if (!valid) throw std::invalid_argument("beck_chevalley_check: not a pullback: " + valid.error());
  if (!(phi.index == sq.f.dom))
    throw std::invalid_argument("beck_chevalley_check: predicate must live over dom(f)");
  Predicate via_base = reindex(T, exists_along(T, sq.f, phi), sq.g);
  Predicate via_apex = exists_along(T, sq.to_y, reindex(T, phi, sq.to_x));
  if (!equiv(T, via_base, via_apex))
    return {false, "exists: " + pred_str(via_base) + " vs " + pred_str(via_apex) + " at phi=" +
                       pred_str(phi)};
  Predicate all_base = reindex(T, forall_along(T, sq.f, phi), sq.g);
  Predicate all_apex = forall_along(T, sq.to_y, reindex(T, phi, sq.to_x));
  if (!equiv(T, all_base, all_apex))
    return {false, "forall: " + pred_str(all_base) + " vs " + pred_str(all_apex) + " at phi=" +
                       pred_str(phi)};
  return {true, ""};
}

PrestackResult prestack_check(const TriposInstance& T, const FinMap& e) {
  if (!epi_mono(e).is_epi) throw std::invalid_argument("prestack_check: map is not epic");
  std::vector<Predicate> fiber = fiber_enumerate(T, e.cod);
  std::vector<Predicate> pulled;
  pulled.reserve(fiber.size());
  for (const Predicate& p : fiber) pulled.push_back(reindex(T, p, e));
  for (size_t a = 0; a < fiber.size(); ++a)
    for (size_t b = 0; b < fiber.size(); ++b) {
      if (entails(T, pulled[a], pulled[b]) && !entails(T, fiber[a], fiber[b]))
        return {false, "phi=" + pred_str(fiber[a]) + " psi=" + pred_str(fiber[b])};
    }
  return {true, ""};
}

}  // namespace tripos
