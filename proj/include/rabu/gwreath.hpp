#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rabu/bigint.hpp"
#include "rabu/words.hpp"

namespace rabu {

// A generalized wreath product specification: a finite strict poset, one
// finite coordinate set per element (values 1..size), and one permutation
// group per element acting on its set.
struct GwpSpec {
  std::vector<std::string> element_names;   // size n, for diagnostics
  std::vector<std::vector<bool>> less;      // less[a][b]: a strictly below b
  std::vector<int> set_sizes;               // |X_s| >= 1
  std::vector<PermGroup> factors;           // degree |X_s|

  int size() const { return static_cast<int>(set_sizes.size()); }
  // Throws InputError on a non-strict order or mismatched fields.
  void validate() const;
  std::vector<int> minimal_elements() const;
};

// Tuples carry 1-based coordinate values and are indexed lexicographically
// with coordinate 0 most significant. This indexing is shared with the
// ball's within-sphere chamber order.
std::uint64_t tuple_count(const GwpSpec& spec, std::uint64_t cap);
std::vector<std::vector<int>> all_tuples(const GwpSpec& spec, std::uint64_t cap);
int tuple_index(const GwpSpec& spec, const std::vector<int>& tuple);

// A permutation group acting on an indexed finite set, remembering the
// tuple behind each point when there is one.
struct ActionGroup {
  PermGroup group;
  std::vector<std::vector<int>> tuples;
};

// Definition-first membership: g preserves both equivalence families and
// every induced local component lies in the factor group. Doubles as the
// brute-force oracle for generation.
bool gwp_member(const GwpSpec& spec, const Permutation& g);

// Generates the group from one generator per (element s, assignment of
// the coordinates strictly above s, factor generator), acting on
// coordinate s of exactly the matching tuples.
ActionGroup gwp_generate(const GwpSpec& spec, const Caps& caps = {});

// Exponent of the factor at r in the closed-form order: the number of
// assignments of the coordinates strictly above r.
Uint128 gwp_exponent(const GwpSpec& spec, int r);
// prod_s |G^s|^gwp_exponent(s).
Uint128 gwp_order_formula(const GwpSpec& spec);

// Downward closure test.
bool ideal_check(const GwpSpec& spec, const std::vector<int>& ideal);

// The normal subgroup of elements moving only coordinates inside the
// ideal. Singleton ideals use the generator slice; larger ideals filter
// the enumerated group. Throws PreconditionError when `ideal` is not one.
ActionGroup d_of_ideal(const GwpSpec& spec, const std::vector<int>& ideal,
                       const Caps& caps = {});

// The split off a minimal element r: D moves only coordinate r, H is the
// embedded product over the remaining elements acting trivially on r.
struct SplitCheck {
  ActionGroup d;
  ActionGroup h;
  Uint128 d_order = 0, h_order = 0, g_order = 0;
  bool d_order_matches_formula = false;
  bool d_normal = false;
  bool trivial_intersection = false;
  bool order_product_matches = false;
  bool pass() const {
    return d_order_matches_formula && d_normal && trivial_intersection &&
           order_product_matches;
  }
};
SplitCheck semidirect_split(const GwpSpec& spec, int r, const Caps& caps = {});

// The point stabilizer of color 1 in the local group at s, acting on the
// remaining colors: point y of the result is color y+1.
PermGroup color_stabilizer(const CoxeterDiagram& d, int s);

// The spec whose poset is the position order of the reduced word w, with
// coordinate sets {2..q_s} and the color stabilizers as factors.
GwpSpec sphere_spec(const CoxeterDiagram& d, const Word& w);

// Intersection, over all reduced rewritings of w, of the iterated
// (imprimitive) wreath products of the color stabilizers acting on the
// tuple set with coordinates permuted by the rewriting.
ActionGroup wreath_intersection(const CoxeterDiagram& d, const Word& w,
                                const Caps& caps = {});

}  // namespace rabu
