#pragma once

#include <utility>
#include <vector>

#include "rabu/chamber.hpp"

namespace rabu {

// A tree-wall, identified by its type and the unique chamber of the
// carrying (s union s-perp)-residue closest to the base chamber.
struct TreeWallId {
  int type = 0;
  Chamber gate;

  friend bool operator==(const TreeWallId&, const TreeWallId&) = default;
  friend std::strong_ordering operator<=>(const TreeWallId&, const TreeWallId&) = default;
};

// All chambers at gallery distance <= radius from the base chamber, with
// their typed adjacency graph. Indexing is deterministic: chambers sorted
// by (word length, word lex, colors lex); this order is the contract for
// every permutation action built on top. Construction is single-writer;
// a finished Ball is immutable and safe for concurrent readers.
class Ball {
public:
  Ball(const CoxeterDiagram& d, int radius, const Caps& caps = {});

  const CoxeterDiagram& diagram() const { return diagram_; }
  int radius() const { return radius_; }
  int size() const { return static_cast<int>(chambers_.size()); }

  const Chamber& chamber(int idx) const { return chambers_[idx]; }
  int index_of(const Chamber& c) const;   // -1 when outside the ball
  int require_index(const Chamber& c) const;

  // Chambers of word length n occupy the contiguous index range
  // [sphere_begin(n), sphere_end(n)).
  int sphere_begin(int n) const { return sphere_begin_[n]; }
  int sphere_end(int n) const { return sphere_begin_[n + 1]; }

  // Typed edges (generator, neighbor index), both directions stored.
  const std::vector<std::pair<int, int>>& neighbors(int idx) const {
    return adjacency_[idx];
  }

  // Gallery distances from one chamber to the whole ball, by breadth-first
  // search inside the ball (exact: minimal galleries between ball chambers
  // never have to leave the ball).
  std::vector<int> distances_from(int idx) const;
  int distance(int a, int b) const;

  // The reduced word of edge types along one minimal gallery; independent
  // of the gallery chosen.
  Word weyl_distance(int a, int b) const;

  // One minimal gallery as a chamber index sequence, endpoints included.
  std::vector<int> minimal_gallery(int a, int b) const;

  // The unique chamber of the panel closest to c. Every panel chamber must
  // lie in the ball.
  int project_to_panel(const Panel& p, int c) const;

  struct ResidueSet {
    std::vector<int> chambers;  // sorted ball indices
    bool truncated = false;     // continues outside the ball
  };
  // Connected component of c under adjacencies typed in J, inside the ball.
  ResidueSet residue(int c, const std::vector<int>& types) const;

  // The tree-wall carrying the s-panel of chamber c.
  TreeWallId tree_wall(int c, int s) const;
  // Its chambers inside the ball.
  ResidueSet tree_wall_chambers(const TreeWallId& t) const;

  // The chamber of the tree-wall's gate panel whose wing contains x.
  int wing_of(const TreeWallId& t, int x) const;

private:
  int bfs_gate(const ResidueSet& members) const;

  CoxeterDiagram diagram_;
  int radius_;
  std::vector<Chamber> chambers_;
  std::vector<int> sphere_begin_;  // size radius+2
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

// Closing squares. Both validate the configuration (levels, adjacency,
// distinct types) and throw PreconditionError when it does not match;
// both check that the two types commute.
//
// Given c1, c2 one sphere below c3 with c1 ~t c3 and c2 ~s c3, returns the
// chamber c4 one sphere below c1 with c1 ~s c4 and c2 ~t c4.
int close_square_up(const Ball& ball, int c1, int c2, int c3);
// Given s-adjacent c1, c2 on one sphere and c3 below c2 with c2 ~t c3,
// returns c4 below c1 with c1 ~t c4 and c3 ~s c4.
int close_square_level(const Ball& ball, int c1, int c2, int c3);

// A minimal gallery from a to b whose distance-to-base profile strictly
// decreases, stays level, then strictly increases; obtained by closing
// squares starting from a breadth-first minimal gallery.
std::vector<int> concave_gallery(const Ball& ball, int a, int b);

// The bipartite graph on s-tree-walls and residues of the complementary
// type meeting the ball. Restricted to a ball it is acyclic and connected.
struct TreeWallTree {
  int type = 0;
  std::vector<TreeWallId> walls;           // part 1
  std::vector<Chamber> residue_gates;      // part 2, residues named by gate
  std::vector<std::pair<int, int>> edges;  // (wall index, residue index)

  bool connected = false;
  bool acyclic = false;
  bool is_tree() const { return connected && acyclic; }
};

TreeWallTree tree_wall_tree(const Ball& ball, int s);

// Half the graph distance between two wall vertices of the tree.
int tree_wall_distance(const TreeWallTree& tree, const TreeWallId& t1,
                       const TreeWallId& t2);

}  // namespace rabu
