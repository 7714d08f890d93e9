#include "tripos/finset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tripos {

FinSet::FinSet(int n, std::vector<std::string> names) : size(n), labels(std::move(names)) {
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != size)
      throw std::invalid_argument("FinSet: label count must equal size");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (static_cast<int>(seen.size()) != size)
      throw std::invalid_argument("FinSet: labels must be distinct");
  }
}

std::string FinSet::label(int x) const {
  if (x < 0 || x >= size) throw std::out_of_range("FinSet::label");
  if (!labels.empty()) return labels[static_cast<size_t>(x)];
  return std::to_string(x);
}

FinMap::FinMap(FinSet d, FinSet c, std::vector<int> t)
    : dom(std::move(d)), cod(std::move(c)), table(std::move(t)) {
  if (static_cast<int>(table.size()) != dom.size)
    throw std::invalid_argument("FinMap: table length must equal domain size");
  for (int v : table)
    if (v < 0 || v >= cod.size)
      throw std::invalid_argument("FinMap: table entry out of codomain range");
}

FinMap identity_map(const FinSet& X) {
  std::vector<int> t(static_cast<size_t>(X.size));
  for (int x = 0; x < X.size; ++x) t[static_cast<size_t>(x)] = x;
  return FinMap(X, X, std::move(t));
}

FinMap constant_map(const FinSet& X, const FinSet& Y, int y) {
  if (y < 0 || y >= Y.size) throw std::invalid_argument("constant_map: value out of range");
  return FinMap(X, Y, std::vector<int>(static_cast<size_t>(X.size), y));
}

FinMap compose(const FinMap& f, const FinMap& g) {
  if (!(f.cod == g.dom))
    throw std::invalid_argument("compose: codomain of first map must equal domain of second");
  std::vector<int> t(static_cast<size_t>(f.dom.size));
  for (int x = 0; x < f.dom.size; ++x) t[static_cast<size_t>(x)] = g(f(x));
  return FinMap(f.dom, g.cod, std::move(t));
}

EpiMono epi_mono(const FinMap& f) {
  std::vector<bool> hit(static_cast<size_t>(f.cod.size), false);
  bool mono = true;
  for (int x = 0; x < f.dom.size; ++x) {
    size_t v = static_cast<size_t>(f(x));
    if (hit[v]) mono = false;
    hit[v] = true;
  }
  bool epi = std::find(hit.begin(), hit.end(), false) == hit.end();
  return {epi, mono, epi && mono};
}

ImageFactorization image_factorization(const FinMap& f) {
  std::set<int> range(f.table.begin(), f.table.end());
  std::vector<int> image(range.begin(), range.end());  // sorted by value
  std::map<int, int> position;
  for (size_t k = 0; k < image.size(); ++k) position[image[k]] = static_cast<int>(k);

  FinSet img(static_cast<int>(image.size()));
  std::vector<int> etab(static_cast<size_t>(f.dom.size));
  for (int x = 0; x < f.dom.size; ++x) etab[static_cast<size_t>(x)] = position[f(x)];
  return {FinMap(f.dom, img, std::move(etab)), FinMap(img, f.cod, std::move(image))};
}

std::optional<FinMap> LimitCone::mediate(const std::vector<FinMap>& cone) const {
  if (cone.size() != legs.size())
    throw std::invalid_argument("mediate: cone has wrong number of legs");
  for (size_t k = 0; k < cone.size(); ++k)
    if (!(cone[k].cod == legs[k].cod))
      throw std::invalid_argument("mediate: cone leg has wrong codomain");
  int n = cone.empty() ? 0 : cone[0].dom.size;
  FinSet src = cone.empty() ? FinSet(0) : cone[0].dom;
  for (const FinMap& c : cone) {
    if (!(c.dom == src)) throw std::invalid_argument("mediate: cone legs must share a domain");
  }
  // Tuples are in lexicographic order, so binary search locates each one.
  std::vector<int> t(static_cast<size_t>(n));
  std::vector<int> probe(legs.size());
  for (int c = 0; c < n; ++c) {
    for (size_t k = 0; k < cone.size(); ++k) probe[k] = cone[k](c);
    auto it = std::lower_bound(tuples.begin(), tuples.end(), probe);
    if (it == tuples.end() || *it != probe) return std::nullopt;
    t[static_cast<size_t>(c)] = static_cast<int>(it - tuples.begin());
  }
  return FinMap(src, apex, std::move(t));
}

namespace {

LimitCone cone_from_tuples(std::vector<std::vector<int>> tuples, const std::vector<FinSet>& cods) {
  LimitCone cone;
  cone.apex = FinSet(static_cast<int>(tuples.size()));
  cone.tuples = std::move(tuples);
  for (size_t k = 0; k < cods.size(); ++k) {
    std::vector<int> t(cone.tuples.size());
    for (size_t a = 0; a < cone.tuples.size(); ++a) t[a] = cone.tuples[a][k];
    cone.legs.emplace_back(cone.apex, cods[k], std::move(t));
  }
  return cone;
}

}  // namespace

LimitCone terminal_limit() {
  LimitCone cone;
  cone.apex = FinSet(1);
  cone.tuples = {{}};
  return cone;
}

LimitCone product_limit(const std::vector<FinSet>& factors) {
  long long total = 1;
  for (const FinSet& f : factors) {
    total *= f.size;
    if (total > (1 << 22)) throw CapExceeded("product_limit: apex too large");
  }
  std::vector<std::vector<int>> tuples;
  tuples.reserve(static_cast<size_t>(total));
  std::vector<int> cur(factors.size(), 0);
  if (total > 0) {
    for (;;) {
      tuples.push_back(cur);
      int k = static_cast<int>(factors.size()) - 1;
      while (k >= 0 && ++cur[static_cast<size_t>(k)] == factors[static_cast<size_t>(k)].size) {
        cur[static_cast<size_t>(k)] = 0;
        --k;
      }
      if (k < 0) break;
    }
  }
  return cone_from_tuples(std::move(tuples), factors);
}

LimitCone equalizer_limit(const FinMap& f, const FinMap& g) {
  if (!(f.dom == g.dom) || !(f.cod == g.cod))
    throw std::invalid_argument("equalizer_limit: maps must be parallel");
  std::vector<std::vector<int>> tuples;
  for (int x = 0; x < f.dom.size; ++x)
    if (f(x) == g(x)) tuples.push_back({x});
  return cone_from_tuples(std::move(tuples), {f.dom});
}

LimitCone pullback_limit(const FinMap& f, const FinMap& g) {
  if (!(f.cod == g.cod))
    throw std::invalid_argument("pullback_limit: cospan must share a codomain");
  std::vector<std::vector<int>> tuples;
  for (int x = 0; x < f.dom.size; ++x)
    for (int y = 0; y < g.dom.size; ++y)
      if (f(x) == g(y)) tuples.push_back({x, y});
  return cone_from_tuples(std::move(tuples), {f.dom, g.dom});
}

FinSet product_object(const FinSet& X, const FinSet& Y) { return FinSet(X.size * Y.size); }

FinMap product_proj1(const FinSet& X, const FinSet& Y) {
  std::vector<int> t(static_cast<size_t>(X.size * Y.size));
  for (int z = 0; z < X.size * Y.size; ++z) t[static_cast<size_t>(z)] = z / Y.size;
  return FinMap(product_object(X, Y), X, std::move(t));
}

FinMap product_proj2(const FinSet& X, const FinSet& Y) {
  std::vector<int> t(static_cast<size_t>(X.size * Y.size));
  for (int z = 0; z < X.size * Y.size; ++z) t[static_cast<size_t>(z)] = z % Y.size;
  return FinMap(product_object(X, Y), Y, std::move(t));
}

FinMap pair_map(const FinMap& f, const FinMap& g) {
  if (!(f.dom == g.dom)) throw std::invalid_argument("pair_map: maps must share a domain");
  std::vector<int> t(static_cast<size_t>(f.dom.size));
  for (int a = 0; a < f.dom.size; ++a)
    t[static_cast<size_t>(a)] = pair_encode(f(a), g(a), g.cod.size);
  return FinMap(f.dom, product_object(f.cod, g.cod), std::move(t));
}

FinMap product_map(const FinMap& f, const FinMap& g) {
  FinSet dom = product_object(f.dom, g.dom);
  std::vector<int> t(static_cast<size_t>(dom.size));
  for (int z = 0; z < dom.size; ++z) {
    auto [x, y] = pair_decode(z, g.dom.size);
    t[static_cast<size_t>(z)] = pair_encode(f(x), g(y), g.cod.size);
  }
  return FinMap(dom, product_object(f.cod, g.cod), std::move(t));
}

FinMap diagonal_map(const FinSet& X) {
  std::vector<int> t(static_cast<size_t>(X.size));
  for (int x = 0; x < X.size; ++x) t[static_cast<size_t>(x)] = pair_encode(x, x, X.size);
  return FinMap(X, product_object(X, X), std::move(t));
}

FinMap select_coords(const std::vector<FinSet>& shape, const std::vector<int>& pick) {
  long long dom_size = 1;
  for (const FinSet& s : shape) dom_size *= s.size;
  long long cod_size = 1;
  for (int k : pick) {
    if (k < 0 || k >= static_cast<int>(shape.size()))
      throw std::invalid_argument("select_coords: index out of range");
    cod_size *= shape[static_cast<size_t>(k)].size;
  }
  if (dom_size > (1 << 22) || cod_size > (1 << 22))
    throw CapExceeded("select_coords: product too large");
  std::vector<int> table(static_cast<size_t>(dom_size));
  for (long long code = 0; code < dom_size; ++code) {
    long long rest = code;
    std::vector<int> digits(shape.size());
    for (size_t k = shape.size(); k-- > 0;) {
      digits[k] = static_cast<int>(rest % shape[k].size);
      rest /= shape[k].size;
    }
    long long enc = 0;
    for (int k : pick) enc = enc * shape[static_cast<size_t>(k)].size + digits[static_cast<size_t>(k)];
    table[static_cast<size_t>(code)] = static_cast<int>(enc);
  }
  return FinMap(FinSet(static_cast<int>(dom_size)), FinSet(static_cast<int>(cod_size)),
                std::move(table));
}

FinSet power_object(const FinSet& X, int n, long long cap) {
  if (n < 1) throw std::invalid_argument("power_object: exponent must be >= 1");
  return FinSet(static_cast<int>(checked_pow(X.size, n, cap, "power_object")));
}

FinMap power_map(const FinMap& u, int n, long long cap) {
  FinSet dom = power_object(u.dom, n, cap);
  FinSet cod = power_object(u.cod, n, cap);
  std::vector<int> t(static_cast<size_t>(dom.size));
  for (int z = 0; z < dom.size; ++z) {
    std::vector<int> digits = decode_tuple(z, n, u.dom.size);
    for (int& d : digits) d = u(d);
    t[static_cast<size_t>(z)] = static_cast<int>(encode_tuple(digits, u.cod.size));
  }
  return FinMap(dom, cod, std::move(t));
}

Subobject::Subobject(FinSet amb, std::vector<bool> mask)
    : ambient(std::move(amb)), members(std::move(mask)) {
  if (static_cast<int>(members.size()) != ambient.size)
    throw std::invalid_argument("Subobject: mask length must equal ambient size");
}

int Subobject::count() const {
  return static_cast<int>(std::count(members.begin(), members.end(), true));
}

Subobject empty_subobject(const FinSet& X) {
  return Subobject(X, std::vector<bool>(static_cast<size_t>(X.size), false));
}

Subobject full_subobject(const FinSet& X) {
  return Subobject(X, std::vector<bool>(static_cast<size_t>(X.size), true));
}

bool sub_leq(const Subobject& a, const Subobject& b) {
  if (!(a.ambient == b.ambient)) throw std::invalid_argument("sub_leq: ambient mismatch");
  for (int x = 0; x < a.ambient.size; ++x)
    if (a.contains(x) && !b.contains(x)) return false;
  return true;
}

Subobject sub_meet(const Subobject& a, const Subobject& b) {
  if (!(a.ambient == b.ambient)) throw std::invalid_argument("sub_meet: ambient mismatch");
  std::vector<bool> m(a.members);
  for (size_t x = 0; x < m.size(); ++x) m[x] = m[x] && b.members[x];
  return Subobject(a.ambient, std::move(m));
}

Subobject sub_join(const Subobject& a, const Subobject& b) {
  if (!(a.ambient == b.ambient)) throw std::invalid_argument("sub_join: ambient mismatch");
  std::vector<bool> m(a.members);
  for (size_t x = 0; x < m.size(); ++x) m[x] = m[x] || b.members[x];
  return Subobject(a.ambient, std::move(m));
}

bool subset_code_contains(long long code, int x) { return (code >> x) & 1; }

std::vector<Subobject> subobject_lattice(const FinSet& X, int cap) {
  if (X.size > cap) throw CapExceeded("subobject_lattice: object size exceeds cap");
  long long total = 1LL << X.size;
  std::vector<Subobject> subs;
  subs.reserve(static_cast<size_t>(total));
  for (long long code = 0; code < total; ++code) {
    std::vector<bool> mask(static_cast<size_t>(X.size));
    for (int x = 0; x < X.size; ++x) mask[static_cast<size_t>(x)] = subset_code_contains(code, x);
    subs.emplace_back(X, std::move(mask));
  }
  return subs;
}

MembershipRel powerset_membership(const FinSet& X, int cap) {
  if (X.size > cap) throw CapExceeded("powerset_membership: object size exceeds cap");
  FinSet power(static_cast<int>(1LL << X.size));
  FinSet amb = product_object(X, power);
  std::vector<bool> mask(static_cast<size_t>(amb.size), false);
  for (int x = 0; x < X.size; ++x)
    for (int u = 0; u < power.size; ++u)
      if (subset_code_contains(u, x))
        mask[static_cast<size_t>(pair_encode(x, u, power.size))] = true;
  return {X, power, Subobject(amb, std::move(mask))};
}

std::vector<FinMap> all_maps(const FinSet& A, const FinSet& B, long long cap) {
  if (A.size == 0) return {FinMap(A, B, {})};
  if (B.size == 0) return {};  // no map from a nonempty set into the empty set
  long long total = checked_pow(B.size, A.size, cap, "all_maps");
  std::vector<FinMap> maps;
  maps.reserve(static_cast<size_t>(total));
  for (long long code = 0; code < total; ++code)
    maps.emplace_back(A, B, decode_tuple(code, A.size, B.size));
  return maps;
}

std::vector<FinMap> all_epis(const FinSet& A, const FinSet& B, long long cap) {
  std::vector<FinMap> out;
  for (FinMap& f : all_maps(A, B, cap))
    if (epi_mono(f).is_epi) out.push_back(std::move(f));
  return out;
}

std::vector<FinMap> all_monos(const FinSet& A, const FinSet& B, long long cap) {
  std::vector<FinMap> out;
  for (FinMap& f : all_maps(A, B, cap))
    if (epi_mono(f).is_mono) out.push_back(std::move(f));
  return out;
}

}  // namespace tripos
