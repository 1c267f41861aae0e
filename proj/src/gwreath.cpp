#include "rabu/gwreath.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "rabu/errors.hpp"

namespace rabu {

void GwpSpec::validate() const {
  const std::size_t n = set_sizes.size();
  if (less.size() != n || factors.size() != n ||
      (!element_names.empty() && element_names.size() != n)) {
    throw InputError("gwp spec field sizes disagree");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (less[a].size() != n) throw InputError("gwp order relation is not square");
    if (less[a][a]) throw InputError("gwp order must be irreflexive");
    if (set_sizes[a] < 1) throw InputError("gwp coordinate sets must be nonempty");
    if (factors[a].degree() != set_sizes[a]) {
      throw InputError("gwp factor degree does not match its coordinate set");
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (less[a][b] && less[b][a]) throw InputError("gwp order must be antisymmetric");
      for (std::size_t c = 0; c < n; ++c) {
        if (less[a][b] && less[b][c] && !less[a][c]) {
          throw InputError("gwp order must be transitive");
        }
      }
    }
  }
}

std::vector<int> GwpSpec::minimal_elements() const {
  std::vector<int> out;
  for (int s = 0; s < size(); ++s) {
    bool minimal = true;
    for (int t = 0; t < size(); ++t) {
      if (less[t][s]) { minimal = false; break; }
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

std::uint64_t tuple_count(const GwpSpec& spec, std::uint64_t cap) {
  std::uint64_t count = 1;
  for (int size : spec.set_sizes) {
    count *= static_cast<std::uint64_t>(size);
    if (count > cap) {
      throw CapExceeded("tuple space exceeds enumeration cap " + std::to_string(cap));
    }
  }
  return count;
}

std::vector<std::vector<int>> all_tuples(const GwpSpec& spec, std::uint64_t cap) {
  const std::uint64_t count = tuple_count(spec, cap);
  std::vector<std::vector<int>> tuples;
  tuples.reserve(count);
  std::vector<int> tuple(spec.size(), 1);
  while (true) {
    tuples.push_back(tuple);
    int k = spec.size();
    while (k > 0 && tuple[k - 1] == spec.set_sizes[k - 1]) {
      tuple[k - 1] = 1;
      --k;
    }
    if (k == 0) break;
    ++tuple[k - 1];
  }
  return tuples;
}

int tuple_index(const GwpSpec& spec, const std::vector<int>& tuple) {
  int index = 0;
  for (int s = 0; s < spec.size(); ++s) {
    index = index * spec.set_sizes[s] + (tuple[s] - 1);
  }
  return index;
}

namespace {

// Class key of a tuple under agreement on a coordinate subset.
std::vector<int> restricted(const std::vector<int>& tuple, const std::vector<int>& coords) {
  std::vector<int> key;
  key.reserve(coords.size());
  for (int t : coords) key.push_back(tuple[t]);
  return key;
}

std::vector<int> strictly_above(const GwpSpec& spec, int s) {
  std::vector<int> out;
  for (int t = 0; t < spec.size(); ++t) {
    if (spec.less[s][t]) out.push_back(t);
  }
  return out;
}

std::vector<int> class_ids(const std::vector<std::vector<int>>& tuples,
                           const std::vector<int>& coords) {
  std::map<std::vector<int>, int> ids;
  std::vector<int> out(tuples.size());
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    auto [it, inserted] =
        ids.try_emplace(restricted(tuples[i], coords), static_cast<int>(ids.size()));
    (void)inserted;
    out[i] = it->second;
  }
  return out;
}

bool preserves_classes(const Permutation& g, const std::vector<int>& cls) {
  const int n = g.degree();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if ((cls[x] == cls[y]) != (cls[g(x)] == cls[g(y)])) return false;
    }
  }
  return true;
}

}  // namespace

bool gwp_member(const GwpSpec& spec, const Permutation& g) {
  spec.validate();
  const std::vector<std::vector<int>> tuples =
      all_tuples(spec, 1u << 20);  // membership is a desk-scale oracle
  if (g.degree() != static_cast<int>(tuples.size())) {
    throw InputError("gwp membership: permutation degree does not match tuple space");
  }
  for (int s = 0; s < spec.size(); ++s) {
    std::vector<int> above = strictly_above(spec, s);
    const std::vector<int> sim = class_ids(tuples, above);
    above.push_back(s);
    std::sort(above.begin(), above.end());
    const std::vector<int> simeq = class_ids(tuples, above);
    if (!preserves_classes(g, sim) || !preserves_classes(g, simeq)) return false;

    // Local components per sim-class must be well-defined permutations
    // inside the factor group.
    std::map<int, std::map<int, int>> component;  // class -> (value -> image value)
    for (std::size_t x = 0; x < tuples.size(); ++x) {
      int value = tuples[x][s];
      int image = tuples[g(static_cast<int>(x))][s];
      auto [it, inserted] = component[sim[x]].try_emplace(value, image);
      if (!inserted && it->second != image) return false;
    }
    for (const auto& [cls, mapping] : component) {
      (void)cls;
      std::vector<int> images(spec.set_sizes[s], -1);
      if (static_cast<int>(mapping.size()) != spec.set_sizes[s]) return false;
      for (const auto& [value, image] : mapping) images[value - 1] = image - 1;
      if (!spec.factors[s].contains(Permutation(std::move(images)))) return false;
    }
  }
  return true;
}

namespace {

std::vector<Permutation> slice_generators(const GwpSpec& spec,
                                          const std::vector<std::vector<int>>& tuples,
                                          int s) {
  std::vector<Permutation> gens;
  const std::vector<int> above = strictly_above(spec, s);
  // Assignments of the coordinates strictly above s, in lex order.
  std::vector<std::vector<int>> assignments;
  {
    std::vector<int> a(above.size(), 1);
    while (true) {
      assignments.push_back(a);
      std::size_t k = a.size();
      while (k > 0 && a[k - 1] == spec.set_sizes[above[k - 1]]) {
        a[k - 1] = 1;
        --k;
      }
      if (k == 0) break;
      ++a[k - 1];
    }
  }
  for (const std::vector<int>& assignment : assignments) {
    for (const Permutation& gamma : spec.factors[s].generators()) {
      std::vector<int> images(tuples.size());
      for (std::size_t x = 0; x < tuples.size(); ++x) {
        bool match = true;
        for (std::size_t k = 0; k < above.size(); ++k) {
          if (tuples[x][above[k]] != assignment[k]) { match = false; break; }
        }
        if (!match) {
          images[x] = static_cast<int>(x);
          continue;
        }
        std::vector<int> moved = tuples[x];
        moved[s] = gamma(moved[s] - 1) + 1;
        images[x] = tuple_index(spec, moved);
      }
      gens.emplace_back(std::move(images));
    }
  }
  return gens;
}

}  // namespace

ActionGroup gwp_generate(const GwpSpec& spec, const Caps& caps) {
  spec.validate();
  const std::vector<std::vector<int>> tuples = all_tuples(spec, caps.enumeration);
  std::vector<Permutation> gens;
  for (int s = 0; s < spec.size(); ++s) {
    std::vector<Permutation> slice = slice_generators(spec, tuples, s);
    gens.insert(gens.end(), slice.begin(), slice.end());
  }
  return ActionGroup{PermGroup(static_cast<int>(tuples.size()), std::move(gens)),
                     tuples};
}

Uint128 gwp_exponent(const GwpSpec& spec, int r) {
  Uint128 exponent = 1;
  for (int t = 0; t < spec.size(); ++t) {
    if (spec.less[r][t]) {
      exponent = checked_mul(exponent, static_cast<Uint128>(spec.set_sizes[t]));
    }
  }
  return exponent;
}

Uint128 gwp_order_formula(const GwpSpec& spec) {
  Uint128 order = 1;
  for (int s = 0; s < spec.size(); ++s) {
    Uint128 exponent = gwp_exponent(spec, s);
    order = checked_mul(order, checked_pow(spec.factors[s].order(),
                                           static_cast<std::uint64_t>(exponent)));
  }
  return order;
}

bool ideal_check(const GwpSpec& spec, const std::vector<int>& ideal) {
  spec.validate();
  std::vector<bool> in(spec.size(), false);
  for (int s : ideal) {
    if (s < 0 || s >= spec.size()) throw InputError("ideal element out of range");
    in[s] = true;
  }
  for (int s = 0; s < spec.size(); ++s) {
    if (!in[s]) continue;
    for (int t = 0; t < spec.size(); ++t) {
      if (spec.less[t][s] && !in[t]) return false;
    }
  }
  return true;
}

ActionGroup d_of_ideal(const GwpSpec& spec, const std::vector<int>& ideal,
                       const Caps& caps) {
  if (!ideal_check(spec, ideal)) {
    throw PreconditionError("subset is not an ideal of the poset");
  }
  const std::vector<std::vector<int>> tuples = all_tuples(spec, caps.enumeration);
  if (ideal.size() == 1) {
    return ActionGroup{
        PermGroup(static_cast<int>(tuples.size()),
                  slice_generators(spec, tuples, ideal.front())),
        tuples};
  }
  // No closed form past singletons: filter the enumerated group.
  std::vector<bool> in(spec.size(), false);
  for (int s : ideal) in[s] = true;
  const ActionGroup whole = gwp_generate(spec, caps);
  std::vector<Permutation> members;
  for (const Permutation& g : whole.group.elements(caps.enumeration)) {
    bool inside = true;
    for (std::size_t x = 0; x < tuples.size() && inside; ++x) {
      const std::vector<int>& image = tuples[g(static_cast<int>(x))];
      for (int t = 0; t < spec.size(); ++t) {
        if (!in[t] && image[t] != tuples[x][t]) { inside = false; break; }
      }
    }
    if (inside) members.push_back(g);
  }
  return ActionGroup{PermGroup(static_cast<int>(tuples.size()), std::move(members)),
                     tuples};
}

SplitCheck semidirect_split(const GwpSpec& spec, int r, const Caps& caps) {
  spec.validate();
  if (r < 0 || r >= spec.size()) throw InputError("split element out of range");
  if (!ideal_check(spec, {r})) {
    throw PreconditionError("split element must be minimal in the poset");
  }
  const std::vector<std::vector<int>> tuples = all_tuples(spec, caps.enumeration);

  SplitCheck out;
  out.d = ActionGroup{
      PermGroup(static_cast<int>(tuples.size()), slice_generators(spec, tuples, r)),
      tuples};
  std::vector<Permutation> h_gens;
  for (int s = 0; s < spec.size(); ++s) {
    if (s == r) continue;
    std::vector<Permutation> slice = slice_generators(spec, tuples, s);
    h_gens.insert(h_gens.end(), slice.begin(), slice.end());
  }
  out.h = ActionGroup{PermGroup(static_cast<int>(tuples.size()), std::move(h_gens)),
                      tuples};
  const ActionGroup whole = gwp_generate(spec, caps);

  out.d_order = out.d.group.order();
  out.h_order = out.h.group.order();
  out.g_order = whole.group.order();
  out.d_order_matches_formula =
      out.d_order == checked_pow(spec.factors[r].order(),
                                 static_cast<std::uint64_t>(gwp_exponent(spec, r)));
  out.order_product_matches = checked_mul(out.d_order, out.h_order) == out.g_order;

  out.d_normal = true;
  for (const Permutation& g : whole.group.generators()) {
    const Permutation gi = g.inverse();
    for (const Permutation& n : out.d.group.generators()) {
      if (!out.d.group.contains(g * n * gi)) { out.d_normal = false; break; }
    }
    if (!out.d_normal) break;
  }

  // Every element of H fixes coordinate r of every tuple (its generators
  // do), while nontrivial elements of D move only coordinate r; their
  // intersection is therefore trivial as soon as the generators check out.
  out.trivial_intersection = true;
  for (const Permutation& g : out.h.group.generators()) {
    for (std::size_t x = 0; x < tuples.size(); ++x) {
      if (tuples[g(static_cast<int>(x))][r] != tuples[x][r]) {
        out.trivial_intersection = false;
        break;
      }
    }
    if (!out.trivial_intersection) break;
  }
  if (out.trivial_intersection && out.g_order <= 20'000) {
    // Desk scale: confirm literally.
    std::vector<Permutation> d_elems = out.d.group.elements(20'000);
    std::sort(d_elems.begin(), d_elems.end());
    for (const Permutation& g : out.h.group.elements(20'000)) {
      if (g.is_identity()) continue;
      if (std::binary_search(d_elems.begin(), d_elems.end(), g)) {
        out.trivial_intersection = false;
        break;
      }
    }
  }
  return out;
}

PermGroup color_stabilizer(const CoxeterDiagram& d, int s) {
  const PermGroup stab = d.local_group(s).point_stabilizer(1);
  std::vector<int> points(d.thickness(s) - 1);
  std::iota(points.begin(), points.end(), 1);
  return stab.restrict_to(points);
}

GwpSpec sphere_spec(const CoxeterDiagram& d, const Word& w) {
  if (!is_reduced(d, w)) {
    throw PreconditionError("sphere spec requires a reduced word");
  }
  const PositionPoset poset = position_poset(d, w);
  GwpSpec spec;
  const int n = static_cast<int>(w.size());
  spec.less.assign(n, std::vector<bool>(n, false));
  for (int i = 1; i <= n; ++i) {
    spec.element_names.push_back(d.name(w[i - 1]) + "@" + std::to_string(i));
    for (int j = 1; j <= n; ++j) {
      if (poset.precedes(i, j)) spec.less[i - 1][j - 1] = true;
    }
  }
  for (int i = 0; i < n; ++i) {
    spec.set_sizes.push_back(d.thickness(w[i]) - 1);
    spec.factors.push_back(color_stabilizer(d, w[i]));
  }
  spec.validate();
  return spec;
}

ActionGroup wreath_intersection(const CoxeterDiagram& d, const Word& w,
                                const Caps& caps) {
  if (!is_reduced(d, w)) {
    throw PreconditionError("wreath intersection requires a reduced word");
  }
  GwpSpec base = sphere_spec(d, w);
  const std::vector<std::vector<int>> tuples = all_tuples(base, caps.enumeration);
  const int n = base.size();

  std::vector<Permutation> intersection;
  bool first = true;
  for (const RepEntry& rep : rep_set(d, w)) {
    // The rewriting's chain: original position a below b when a's letter
    // comes later in the rewriting.
    std::vector<int> place(n);
    for (int j = 0; j < n; ++j) place[rep.sigma[j]] = j;
    GwpSpec chain = base;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        chain.less[a][b] = place[a] > place[b];
      }
    }
    std::vector<Permutation> elems =
        gwp_generate(chain, caps).group.elements(caps.enumeration);
    std::sort(elems.begin(), elems.end());
    if (first) {
      intersection = std::move(elems);
      first = false;
    } else {
      std::vector<Permutation> kept;
      std::set_intersection(intersection.begin(), intersection.end(), elems.begin(),
                            elems.end(), std::back_inserter(kept));
      intersection = std::move(kept);
    }
  }
  return ActionGroup{PermGroup(static_cast<int>(tuples.size()), std::move(intersection)),
                     tuples};
}

}  // namespace rabu
