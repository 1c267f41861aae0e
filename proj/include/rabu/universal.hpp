#pragma once

#include <string>
#include <vector>

#include "rabu/ball.hpp"
#include "rabu/gwreath.hpp"

namespace rabu {

// One verification item; JSON mirrors this shape exactly.
struct Check {
  std::string check;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct Report {
  std::vector<Check> checks;
  bool pass() const {
    for (const Check& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

// The point stabilizer of color 1 inside the local group at s, still of
// full degree q_s.
PermGroup color1_stabilizer(const CoxeterDiagram& d, int s);

// An automorphism of the ball moving, on each chamber crossing the wall,
// the color at the unique crossing position by `local`. Fixes the base
// chamber, preserves every sphere, and fixes the wing of the wall
// containing the base chamber.
struct TreeWallGenerator {
  TreeWallId wall;
  Permutation local;   // on {1..q_s}, fixes color 1
  Permutation action;  // on the ball index
};

TreeWallGenerator tree_wall_generator(const Ball& ball, const TreeWallId& wall,
                                      const Permutation& local);

// Tree-walls with some panel lying entirely inside the ball, i.e. gate at
// distance at most radius-1; sorted by (type, gate).
std::vector<TreeWallId> crossed_tree_walls(const Ball& ball);

struct BallGroup {
  int radius = 0;
  PermGroup group;
  std::vector<TreeWallGenerator> provenance;
};

// The chamber stabilizer's action on the ball, generated from the crossed
// tree-walls; certified from above by the exact order formula.
BallGroup ball_stabilizer(const Ball& ball);
BallGroup ball_stabilizer(const CoxeterDiagram& d, int radius, const Caps& caps = {});

// Restriction of the ball group to the sphere of the reduced word w,
// with points indexed by color tuples in lex order.
ActionGroup sphere_stabilizer(const CoxeterDiagram& d, const Word& w,
                              const Caps& caps = {});

// Exact order bookkeeping from the word calculus alone.
struct SphereOrderEntry {
  Word word;                           // canonical representative
  std::vector<std::uint64_t> exponents;  // one per letter position
  Uint128 order = 1;
};

struct OrderFormulas {
  int up_to = 0;
  std::vector<SphereOrderEntry> spheres;           // all elements, length <= up_to
  std::vector<std::vector<std::uint64_t>> d_sn;    // [n][s], n = 0..up_to
  std::vector<std::vector<std::uint64_t>> t_sn;    // [n][s]
  std::vector<Uint128> ball_orders;                // [n]
};

Uint128 sphere_order_formula(const CoxeterDiagram& d, const Word& w);
OrderFormulas order_formulas(const CoxeterDiagram& d, int up_to,
                             const Caps& caps = {});

// Checks the one-step decomposition from radius n to n+1: the order
// product over the crossing pairs, the kernel of the restriction, its
// pointwise triviality away from the one-descent part of the new sphere,
// and the disconnection of the two sphere parts.
Report verify_recursion(const CoxeterDiagram& d, int n, const Caps& caps = {});

// Thickness, irreducibility, rank, and per-generator transitivity and
// point-stabilizer generation; the hypotheses under which the universal
// group is known to be simple.
Report check_preconditions(const CoxeterDiagram& d);

// True when g maps every typed edge of the ball to an edge of the same
// type.
bool is_typed_ball_automorphism(const Ball& ball, const Permutation& g);

// The color permutation induced on an s-panel read through the standard
// coloring.
Permutation panel_local_action(const Ball& ball, const Permutation& g,
                               const Chamber& short_chamber, int type);

// Sound membership test for the stabilizer action at finite radius:
// typed automorphism fixing the base chamber whose local action lies in
// the local group on every panel not meeting the boundary sphere.
// Boundary panels are excluded because their behavior is not determined
// at finite radius.
bool stabilizer_membership_interior(const Ball& ball, const Permutation& g);

}  // namespace rabu
