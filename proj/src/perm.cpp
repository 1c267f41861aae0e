#include "rabu/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "rabu/errors.hpp"

namespace rabu {

Permutation Permutation::identity(int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v]) {
      throw InputError("permutation image list is not a bijection");
    }
    seen[v] = true;
  }
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw InputError("composing permutations of different degree");
  }
  std::vector<int> images(a.degree());
  for (int i = 0; i < a.degree(); ++i) images[i] = a.images_[b.images_[i]];
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> done(images_.size(), false);
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (done[i] || images_[i] == i) continue;
    any = true;
    out << '(';
    int j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) out << ' ';
      out << (j + 1);
      first = false;
      j = images_[j];
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

namespace {

std::vector<int> parse_int_list(const std::string& body, char sep) {
  std::vector<int> values;
  std::string token;
  std::istringstream in(body);
  while (std::getline(in, token, sep)) {
    if (token.find_first_not_of(' ') == std::string::npos) {
      throw InputError("empty entry in permutation: '" + body + "'");
    }
    std::istringstream t(token);
    int v;
    if (!(t >> v)) throw InputError("bad integer in permutation: '" + token + "'");
    std::string rest;
    if (t >> rest) throw InputError("bad integer in permutation: '" + token + "'");
    values.push_back(v);
  }
  return values;
}

}  // namespace

Permutation parse_permutation(const std::string& text, int degree) {
  std::string s = text;
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw InputError("empty permutation string");
  s = s.substr(first, last - first + 1);

  if (s == "id" || s == "()") return Permutation::identity(degree);

  if (s.front() == '[') {
    if (s.back() != ']') throw InputError("unterminated image list: " + text);
    std::vector<int> one_based = parse_int_list(s.substr(1, s.size() - 2), ',');
    if (static_cast<int>(one_based.size()) != degree) {
      throw InputError("image list has length " + std::to_string(one_based.size()) +
                       ", expected " + std::to_string(degree));
    }
    std::vector<int> images(degree);
    for (int i = 0; i < degree; ++i) {
      int v = one_based[i];
      if (v < 1 || v > degree) {
        throw InputError("image " + std::to_string(v) + " out of range 1.." +
                         std::to_string(degree));
      }
      images[i] = v - 1;
    }
    return Permutation(std::move(images));  // bijection check in ctor
  }

  if (s.front() == '(') {
    std::vector<int> images(degree);
    std::iota(images.begin(), images.end(), 0);
    std::vector<bool> used(degree, false);
    std::size_t pos = 0;
    while (pos < s.size()) {
      if (s[pos] == ' ') { ++pos; continue; }
      if (s[pos] != '(') throw InputError("expected '(' in cycle notation: " + text);
      auto close = s.find(')', pos);
      if (close == std::string::npos) throw InputError("unterminated cycle: " + text);
      std::string body = s.substr(pos + 1, close - pos - 1);
      pos = close + 1;
      if (body.find_first_not_of(' ') == std::string::npos) continue;
      std::vector<int> cycle = parse_int_list(body, ' ');
      for (int& v : cycle) {
        if (v < 1 || v > degree) {
          throw InputError("cycle point " + std::to_string(v) + " out of range 1.." +
                           std::to_string(degree));
        }
        v -= 1;
        if (used[v]) throw InputError("repeated point in cycles: " + text);
        used[v] = true;
      }
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        images[cycle[i]] = cycle[(i + 1) % cycle.size()];
      }
    }
    return Permutation(std::move(images));
  }

  throw InputError("unrecognized permutation syntax: " + text);
}

// --- PermGroup: deterministic Schreier-Sims --------------------------------

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : PermGroup(degree, std::move(generators), {}) {}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators,
                     const std::vector<int>& forced_base_prefix)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree_ < 0) throw InputError("negative permutation degree");
  for (const Permutation& g : generators_) {
    if (g.degree() != degree_) {
      throw InputError("generator degree " + std::to_string(g.degree()) +
                       " does not match group degree " + std::to_string(degree_));
    }
  }
  build_chain(forced_base_prefix);
}

void PermGroup::recompute_level(std::size_t i) {
  Level& level = levels_[i];
  level.orbit = {level.base};
  level.orbit_pos.assign(degree_, 0);
  level.orbit_pos[level.base] = 1;
  level.transversal = {Permutation::identity(degree_)};
  const std::vector<const Permutation*> gens = level_generators(i);
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    int p = level.orbit[k];
    for (const Permutation* g : gens) {
      int q = (*g)(p);
      if (level.orbit_pos[q] == 0) {
        level.orbit.push_back(q);
        level.orbit_pos[q] = static_cast<int>(level.orbit.size());
        level.transversal.push_back(*g * level.transversal[k]);
      }
    }
  }
}

std::vector<const Permutation*> PermGroup::level_generators(std::size_t i) const {
  // Strong generators fixing the first i base points.
  std::vector<const Permutation*> out;
  for (const Permutation& g : strong_) {
    bool fixes = true;
    for (std::size_t k = 0; k < i; ++k) {
      if (g(levels_[k].base) != levels_[k].base) { fixes = false; break; }
    }
    if (fixes) out.push_back(&g);
  }
  return out;
}

std::pair<std::size_t, Permutation> PermGroup::strip(const Permutation& p,
                                                     std::size_t start) const {
  Permutation h = p;
  for (std::size_t i = start; i < levels_.size(); ++i) {
    const Level& level = levels_[i];
    int image = h(level.base);
    int pos = level.orbit_pos[image];
    if (pos == 0) return {i, h};
    h = level.transversal[pos - 1].inverse() * h;
  }
  return {levels_.size(), h};
}

void PermGroup::append_level(int base) {
  Level level;
  level.base = base;
  level.orbit = {base};
  level.orbit_pos.assign(degree_, 0);
  level.orbit_pos[base] = 1;
  level.transversal = {Permutation::identity(degree_)};
  levels_.push_back(std::move(level));
}

void PermGroup::build_chain(const std::vector<int>& forced_base_prefix) {
  levels_.clear();
  strong_.clear();
  for (int b : forced_base_prefix) append_level(b);
  for (const Permutation& g : generators_) {
    if (g.is_identity()) continue;
    if (std::find(strong_.begin(), strong_.end(), g) == strong_.end()) {
      strong_.push_back(g);
    }
  }
  // Every strong generator must move some base point.
  for (const Permutation& g : strong_) {
    bool moves_base = false;
    for (const Level& level : levels_) {
      if (g(level.base) != level.base) { moves_base = true; break; }
    }
    if (!moves_base) {
      int b = 0;
      while (g(b) == b) ++b;
      append_level(b);
    }
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) recompute_level(i);

  // Verify levels from the deepest up; a failed Schreier generator is
  // inserted where its sift stops and verification resumes there.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    recompute_level(static_cast<std::size_t>(i));
    const Level& level = levels_[static_cast<std::size_t>(i)];
    const std::vector<const Permutation*> gens =
        level_generators(static_cast<std::size_t>(i));
    bool added = false;
    for (std::size_t k = 0; k < level.orbit.size() && !added; ++k) {
      int p = level.orbit[k];
      for (const Permutation* g : gens) {
        int q = (*g)(p);
        Permutation schreier =
            level.transversal[level.orbit_pos[q] - 1].inverse() *
            (*g * level.transversal[k]);
        if (schreier.is_identity()) continue;
        auto [j, residue] = strip(schreier, static_cast<std::size_t>(i) + 1);
        if (residue.is_identity()) continue;
        if (j == levels_.size()) {
          int b = 0;
          while (residue(b) == b) ++b;
          append_level(b);
        }
        strong_.push_back(residue);
        i = static_cast<std::ptrdiff_t>(j);
        added = true;
        break;
      }
    }
    if (!added) --i;
  }

  order_ = 1;
  for (const Level& level : levels_) {
    order_ = checked_mul(order_, static_cast<Uint128>(level.orbit.size()));
  }
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [level, residue] = strip(p, 0);
  (void)level;
  return residue.is_identity();
}

std::vector<int> PermGroup::orbit(int point) const {
  if (point < 1 || point > degree_) throw InputError("orbit point out of range");
  std::vector<int> result{point - 1};
  std::vector<bool> seen(degree_, false);
  seen[point - 1] = true;
  for (std::size_t k = 0; k < result.size(); ++k) {
    for (const Permutation& g : generators_) {
      int q = g(result[k]);
      if (!seen[q]) {
        seen[q] = true;
        result.push_back(q);
      }
    }
  }
  for (int& p : result) ++p;
  std::sort(result.begin(), result.end());
  return result;
}

bool PermGroup::is_transitive() const {
  if (degree_ == 0) return true;
  return static_cast<int>(orbit(1).size()) == degree_;
}

PermGroup PermGroup::point_stabilizer(int point) const {
  if (point < 1 || point > degree_) {
    throw InputError("stabilizer point " + std::to_string(point) +
                     " out of range 1.." + std::to_string(degree_));
  }
  // Rebuild the chain with the point forced first; the strong generators
  // fixing it are sifted Schreier generators of the stabilizer.
  PermGroup chain(degree_, generators_, std::vector<int>{point - 1});
  std::vector<Permutation> gens;
  for (const Permutation& g : chain.strong_) {
    if (g(point - 1) == point - 1 &&
        std::find(gens.begin(), gens.end(), g) == gens.end()) {
      gens.push_back(g);
    }
  }
  return PermGroup(degree_, std::move(gens));
}

bool PermGroup::satisfies_st() const {
  if (!is_transitive()) return false;
  std::vector<Permutation> union_gens;
  for (int y = 1; y <= degree_; ++y) {
    const PermGroup stab = point_stabilizer(y);
    for (const Permutation& g : stab.generators()) {
      if (std::find(union_gens.begin(), union_gens.end(), g) == union_gens.end()) {
        union_gens.push_back(g);
      }
    }
  }
  return PermGroup(degree_, std::move(union_gens)).order() == order_;
}

bool PermGroup::same_action(const PermGroup& other) const {
  if (degree_ != other.degree_) {
    throw InputError("same_action on groups of different degree");
  }
  if (order_ != other.order_) return false;
  for (const Permutation& g : generators_) {
    if (!other.contains(g)) return false;
  }
  for (const Permutation& g : other.generators_) {
    if (!contains(g)) return false;
  }
  return true;
}

std::vector<Permutation> PermGroup::elements(std::uint64_t cap) const {
  if (order_ > static_cast<Uint128>(cap)) {
    throw CapExceeded("group order " + rabu::to_string(order_) +
                      " exceeds enumeration cap " + std::to_string(cap));
  }
  // Every element factors uniquely as t_0 * t_1 * ... * t_{L-1} along the
  // chain's transversals.
  std::vector<Permutation> result{Permutation::identity(degree_)};
  for (std::size_t i = levels_.size(); i-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(result.size() * levels_[i].transversal.size());
    for (const Permutation& t : levels_[i].transversal) {
      for (const Permutation& tail : result) next.push_back(t * tail);
    }
    result = std::move(next);
  }
  return result;
}

PermGroup PermGroup::restrict_to(const std::vector<int>& points) const {
  std::vector<int> new_index(degree_, -1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    int p = points[i];
    if (p < 0 || p >= degree_) throw InputError("restriction point out of range");
    if (new_index[p] != -1) throw InputError("repeated restriction point");
    new_index[p] = static_cast<int>(i);
  }
  std::vector<Permutation> gens;
  gens.reserve(generators_.size());
  for (const Permutation& g : generators_) {
    std::vector<int> images(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      int q = g(points[i]);
      if (new_index[q] == -1) {
        throw PreconditionError("generator does not stabilize the restriction set");
      }
      images[i] = new_index[q];
    }
    gens.emplace_back(std::move(images));
  }
  return PermGroup(static_cast<int>(points.size()), std::move(gens));
}

}  // namespace rabu
