#include <algorithm>
#include <map>
#include <random>
#include <set>

#include <doctest.h>

#include "rabu/ball.hpp"
#include "rabu/errors.hpp"
#include "test_diagrams.hpp"

using rabu::Ball;
using rabu::Chamber;
using rabu::CoxeterDiagram;
using rabu::Word;

namespace {

Chamber ch(const CoxeterDiagram& d, const std::string& word,
           const std::vector<int>& colors) {
  return rabu::canonical_chamber(d, rabu::parse_word(d, word), colors);
}

}  // namespace

TEST_CASE("canonical chambers") {
  const CoxeterDiagram d3 = testdiagrams::d3();
  const CoxeterDiagram d1 = testdiagrams::d1();

  // Colors ride along with their letters under the commutation swap.
  const Chamber a = ch(d3, "t s", {3, 2});
  CHECK(rabu::format_chamber(d3, a) == "[s t|2 3]");

  const Chamber b = ch(d1, "s t", {2, 2});
  CHECK(rabu::format_chamber(d1, b) == "[s t|2 2]");

  CHECK(rabu::canonical_chamber(d1, {}, {}) == rabu::base_chamber());

  CHECK_THROWS_AS(ch(d3, "t s t", {2, 2, 2}), rabu::PreconditionError);
  CHECK_THROWS_AS(ch(d3, "s", {4}), rabu::InputError);
  CHECK_THROWS_AS(ch(d3, "s", {1}), rabu::InputError);

  // Equivalent matrices, one canonical image.
  CHECK(ch(d3, "t s", {3, 2}) == ch(d3, "s t", {2, 3}));
  CHECK(ch(d3, "u s", {2, 3}) != ch(d3, "s u", {3, 2}));
}

TEST_CASE("equivalent matrices canonicalize identically") {
  const CoxeterDiagram d3 = testdiagrams::d3();
  std::mt19937 rng(0);
  std::uniform_int_distribution<int> color(2, 3);
  for (const Word& word : rabu::enumerate_elements(d3, 4, 100000)) {
    std::vector<int> colors(word.size());
    for (int& c : colors) c = color(rng);
    const Chamber canonical = rabu::canonical_chamber(d3, word, colors);
    for (const rabu::RepEntry& rep : rabu::rep_set(d3, word)) {
      std::vector<int> permuted(colors.size());
      for (std::size_t j = 0; j < colors.size(); ++j) {
        permuted[j] = colors[rep.sigma[j]];
      }
      CHECK(rabu::canonical_chamber(d3, rep.word, permuted) == canonical);
    }
  }
}

TEST_CASE("panels") {
  const CoxeterDiagram d1 = testdiagrams::d1();
  const int s = 0, t = 1;

  const rabu::Panel p0 = rabu::panel(d1, rabu::base_chamber(), s);
  REQUIRE(p0.chambers.size() == 3);
  CHECK(p0.chambers[0] == rabu::base_chamber());
  CHECK(p0.chambers[1] == ch(d1, "s", {2}));
  CHECK(p0.chambers[2] == ch(d1, "s", {3}));

  // The panel of a non-shortest member is the same panel.
  CHECK(rabu::panel(d1, ch(d1, "s", {2}), s) == p0);

  const rabu::Panel pt = rabu::panel(d1, ch(d1, "s", {2}), t);
  REQUIRE(pt.chambers.size() == 3);
  CHECK(pt.chambers[0] == ch(d1, "s", {2}));
  CHECK(pt.chambers[1] == ch(d1, "s t", {2, 2}));
  CHECK(pt.chambers[2] == ch(d1, "s t", {2, 3}));

  // Panels are panels regardless of the member used to name them.
  const CoxeterDiagram d3 = testdiagrams::d3();
  CHECK(rabu::panel(d3, ch(d3, "s t", {2, 3}), s) ==
        rabu::panel(d3, ch(d3, "t", {3}), s));
}

TEST_CASE("standard coloring") {
  const CoxeterDiagram d1 = testdiagrams::d1();
  const int s = 0, t = 1;
  CHECK(rabu::standard_color(d1, ch(d1, "s", {2}), s) == 2);
  CHECK(rabu::standard_color(d1, ch(d1, "s", {2}), t) == 1);
  CHECK(rabu::standard_color(d1, rabu::base_chamber(), s) == 1);

  // On every panel the coloring is a bijection onto {1..q} and the
  // shortest chamber carries color 1.
  const CoxeterDiagram d3 = testdiagrams::d3();
  const Ball ball(d3, 3);
  for (int idx = 0; idx < ball.size(); ++idx) {
    for (int type = 0; type < d3.rank(); ++type) {
      const rabu::Panel p = rabu::panel(d3, ball.chamber(idx), type);
      std::set<int> colors;
      for (const Chamber& member : p.chambers) {
        colors.insert(rabu::standard_color(d3, member, type));
      }
      CHECK(colors.size() == 3);
      CHECK(*colors.begin() == 1);
      CHECK(rabu::standard_color(d3, p.chambers.front(), type) == 1);
    }
  }
}

TEST_CASE("perp") {
  const CoxeterDiagram d3 = testdiagrams::d3();
  const CoxeterDiagram d1 = testdiagrams::d1();
  CHECK(d3.perp(0) == std::vector<int>{1});
  CHECK(d3.perp(2).empty());
  CHECK(d1.perp(0).empty());
}

TEST_CASE("ball sizes and sphere counts") {
  const CoxeterDiagram d1 = testdiagrams::d1();
  const Ball ball(d1, 3);
  CHECK(ball.size() == 1 + 4 + 8 + 16);
  CHECK(ball.sphere_end(0) - ball.sphere_begin(0) == 1);
  CHECK(ball.sphere_end(1) - ball.sphere_begin(1) == 4);
  CHECK(ball.sphere_end(3) - ball.sphere_begin(3) == 16);

  // Sphere size is the product of the panel sizes minus one along the word.
  for (const CoxeterDiagram& d :
       {testdiagrams::d1(), testdiagrams::d2(), testdiagrams::d3()}) {
    const Ball b(d, 3);
    std::map<Word, int> counts;
    for (int idx = 0; idx < b.size(); ++idx) ++counts[b.chamber(idx).word];
    for (const auto& [word, count] : counts) {
      int expected = 1;
      for (int letter : word) expected *= d.thickness(letter) - 1;
      CHECK(count == expected);
    }
  }
}

TEST_CASE("ball index is deterministic and ordered") {
  const CoxeterDiagram d3 = testdiagrams::d3();
  const Ball ball(d3, 2);
  for (int idx = 0; idx + 1 < ball.size(); ++idx) {
    CHECK(ball.chamber(idx) < ball.chamber(idx + 1));
  }
  CHECK(ball.index_of(rabu::base_chamber()) == 0);
  CHECK(ball.index_of(ch(d3, "u s u", {2, 2, 2})) == -1);
  CHECK_THROWS_AS(ball.require_index(ch(d3, "u s u", {2, 2, 2})), rabu::CapExceeded);
}

TEST_CASE("radius cap") {
  rabu::Caps caps;
  caps.radius = 2;
  CHECK_THROWS_AS(Ball(testdiagrams::d1(), 3, caps), rabu::CapExceeded);
  caps = rabu::Caps{};
  caps.ball_size = 10;
  CHECK_THROWS_AS(Ball(testdiagrams::d1(), 3, caps), rabu::CapExceeded);
}

TEST_CASE("distances and weyl words") {
  const CoxeterDiagram d1 = testdiagrams::d1();
  const Ball ball(d1, 2);
  const int s2 = ball.require_index(ch(d1, "s", {2}));
  const int s3 = ball.require_index(ch(d1, "s", {3}));
  const int t2 = ball.require_index(ch(d1, "t", {2}));

  CHECK(ball.distance(s2, s3) == 1);
  CHECK(rabu::format_word(d1, ball.weyl_distance(s2, s3)) == "s");
  CHECK(ball.distance(s2, t2) == 2);
  CHECK(rabu::format_word(d1, ball.weyl_distance(s2, t2)) == "s t");
  CHECK(ball.distance(s2, s2) == 0);
  CHECK(ball.weyl_distance(s2, s2).empty());

  // Distance from the base chamber equals word length.
  for (int idx = 0; idx < ball.size(); ++idx) {
    CHECK(ball.distance(0, idx) == ball.chamber(idx).length());
  }
}

TEST_CASE("weyl distance does not depend on the gallery") {
  // All chamber pairs in a small d3 ball: reversing endpoints gives the
  // reversed reduced word.
  const CoxeterDiagram d3 = testdiagrams::d3();
  const Ball ball(d3, 2);
  for (int a = 0; a < ball.size(); ++a) {
    for (int b = 0; b < ball.size(); ++b) {
      Word forward = ball.weyl_distance(a, b);
      Word backward = ball.weyl_distance(b, a);
      std::reverse(backward.begin(), backward.end());
      CHECK(rabu::words_equal(d3, forward, backward));
      CHECK(static_cast<int>(forward.size()) == ball.distance(a, b));
    }
  }
}

TEST_CASE("projections to panels") {
  const CoxeterDiagram d1 = testdiagrams::d1();
  const Ball ball(d1, 2);
  const rabu::Panel sp = rabu::panel(d1, rabu::base_chamber(), 0);

  CHECK(ball.chamber(ball.project_to_panel(sp, ball.require_index(ch(d1, "s t", {2, 2})))) ==
        ch(d1, "s", {2}));
  CHECK(ball.project_to_panel(sp, 0) == 0);

  const CoxeterDiagram d2 = testdiagrams::d2();
  const Ball grid(d2, 2);
  const rabu::Panel sp2 = rabu::panel(d2, rabu::base_chamber(), 0);
  CHECK(grid.project_to_panel(sp2, grid.require_index(ch(d2, "t", {2}))) == 0);
}

TEST_CASE("gate property on a radius-2 ball") {
  for (const CoxeterDiagram& d :
       {testdiagrams::d1(), testdiagrams::d2(), testdiagrams::d3()}) {
    const Ball ball(d, 2);
    for (int idx = 0; idx < ball.size(); ++idx) {
      const Chamber& c = ball.chamber(idx);
      if (c.length() > ball.radius() - 1) continue;
      for (int type = 0; type < d.rank(); ++type) {
        if (rabu::standard_color(d, c, type) != 1) continue;
        const rabu::Panel p = rabu::panel(d, c, type);
        for (int from = 0; from < ball.size(); ++from) {
          const int gate = ball.project_to_panel(p, from);
          const std::vector<int> dist = ball.distances_from(from);
          for (const Chamber& member : p.chambers) {
            const int target = ball.require_index(member);
            CHECK(dist[target] == dist[gate] + ball.distance(gate, target));
          }
        }
      }
    }
  }
}

TEST_CASE("residues") {
  const CoxeterDiagram d3 = testdiagrams::d3();
  const Ball ball(d3, 3);

  const Ball::ResidueSet grid = ball.residue(0, {0, 1});
  CHECK(grid.chambers.size() == 9);
  CHECK_FALSE(grid.truncated);

  const Ball::ResidueSet self = ball.residue(5, {});
  CHECK(self.chambers == std::vector<int>{5});

  const CoxeterDiagram d1 = testdiagrams::d1();
  const Ball tree(d1, 2);
  const Ball::ResidueSet panel0 = tree.residue(0, {0});
  CHECK(panel0.chambers.size() == 3);
  CHECK_FALSE(panel0.truncated);

  // The whole building is one residue; at finite radius it is truncated.
  const Ball::ResidueSet everything = tree.residue(0, {0, 1});
  CHECK(everything.chambers.size() == tree.size());
  CHECK(everything.truncated);
}

TEST_CASE("tree-walls") {
  const CoxeterDiagram d1 = testdiagrams::d1();
  const Ball tree(d1, 2);
  const int s = 0;

  // No commuting partner: the wall is a single panel.
  const rabu::TreeWallId w1 = tree.tree_wall(tree.require_index(ch(d1, "s", {2})), s);
  CHECK(w1.type == s);
  CHECK(w1.gate == rabu::base_chamber());
  CHECK(tree.tree_wall_chambers(w1).chambers.size() == 3);

  const rabu::TreeWallId w2 = tree.tree_wall(tree.require_index(ch(d1, "t", {2})), s);
  CHECK(w2.gate == ch(d1, "t", {2}));

  // The commuting pair spans the whole rank-2 residue.
  const CoxeterDiagram d3 = testdiagrams::d3();
  const Ball ball(d3, 2);
  const rabu::TreeWallId w3 = ball.tree_wall(0, s);
  CHECK(w3.gate == rabu::base_chamber());
  CHECK(ball.tree_wall_chambers(w3).chambers.size() == 9);

  // Same wall from any member chamber.
  for (int idx : ball.tree_wall_chambers(w3).chambers) {
    CHECK(ball.tree_wall(idx, s) == w3);
  }
}

TEST_CASE("wings") {
  const CoxeterDiagram d1 = testdiagrams::d1();
  const Ball ball(d1, 2);
  const rabu::TreeWallId wall = ball.tree_wall(0, 0);

  CHECK(ball.chamber(ball.wing_of(wall, ball.require_index(ch(d1, "s t", {2, 2})))) ==
        ch(d1, "s", {2}));
  CHECK(ball.wing_of(wall, ball.require_index(ch(d1, "t", {3}))) == 0);
  // A chamber of the wall itself projects to its own panel representative.
  CHECK(ball.chamber(ball.wing_of(wall, ball.require_index(ch(d1, "s", {3})))) ==
        ch(d1, "s", {3}));
}

TEST_CASE("wing partition does not depend on the reference panel") {
  const CoxeterDiagram d3 = testdiagrams::d3();
  const Ball ball(d3, 2);
  const rabu::TreeWallId wall = ball.tree_wall(0, 0);
  const Ball::ResidueSet members = ball.tree_wall_chambers(wall);
  // For every panel of the wall, projecting x to that panel and then to
  // the gate panel lands where x projects directly.
  const rabu::Panel gate_panel = rabu::panel(d3, wall.gate, wall.type);
  for (int member : members.chambers) {
    const Chamber& mc = ball.chamber(member);
    if (rabu::standard_color(d3, mc, wall.type) != 1) continue;
    if (mc.length() + 1 > ball.radius()) continue;
    const rabu::Panel p = rabu::panel(d3, mc, wall.type);
    for (int x = 0; x < ball.size(); ++x) {
      const int via = ball.project_to_panel(gate_panel, ball.project_to_panel(p, x));
      CHECK(via == ball.wing_of(wall, x));
    }
  }
}

TEST_CASE("closing squares") {
  const CoxeterDiagram d2 = testdiagrams::d2();
  const Ball grid(d2, 2);
  const int c1 = grid.require_index(ch(d2, "s", {2}));
  const int c2 = grid.require_index(ch(d2, "t", {2}));
  const int c3 = grid.require_index(ch(d2, "s t", {2, 2}));

  CHECK(rabu::close_square_up(grid, c1, c2, c3) == 0);

  // Same-type configuration is rejected.
  const int s3 = grid.require_index(ch(d2, "s", {3}));
  CHECK_THROWS_AS(rabu::close_square_level(grid, c1, s3, 0), rabu::PreconditionError);
  // Levels that do not match the pattern are rejected.
  CHECK_THROWS_AS(rabu::close_square_up(grid, c1, c2, 0), rabu::PreconditionError);

  // Level variant: a ~t b by recoloring, b ~s below by dropping s.
  const int a = grid.require_index(ch(d2, "s t", {2, 2}));
  const int b = grid.require_index(ch(d2, "s t", {2, 3}));
  const int below = grid.require_index(ch(d2, "t", {3}));
  const int c4 = rabu::close_square_level(grid, a, b, below);
  CHECK(grid.chamber(c4) == ch(d2, "t", {2}));
}

TEST_CASE("closing squares hold wherever the configuration appears") {
  for (const CoxeterDiagram& d :
       {testdiagrams::d1(), testdiagrams::d2(), testdiagrams::d3()}) {
    bool has_commuting_pair = false;
    for (int a = 0; a < d.rank(); ++a) {
      for (int b = a + 1; b < d.rank(); ++b) {
        if (d.commute(a, b)) has_commuting_pair = true;
      }
    }
    const Ball ball(d, 3);
    int checked_up = 0, checked_level = 0;
    for (int c3 = 0; c3 < ball.size(); ++c3) {
      const int n3 = ball.chamber(c3).length();
      for (auto [t, c1] : ball.neighbors(c3)) {
        for (auto [s, c2] : ball.neighbors(c3)) {
          if (s == t || c1 == c2) continue;
          if (ball.chamber(c1).length() == n3 - 1 &&
              ball.chamber(c2).length() == n3 - 1) {
            const int c4 = rabu::close_square_up(ball, c1, c2, c3);
            CHECK(ball.chamber(c4).length() == n3 - 2);
            ++checked_up;
          }
        }
      }
      // Level pattern: c2 ~s c1 on one sphere, c3 below c2.
      for (auto [s, c2] : ball.neighbors(c3)) {
        if (ball.chamber(c2).length() != n3) continue;
        for (auto [t, below] : ball.neighbors(c2)) {
          if (t == s || ball.chamber(below).length() != n3 - 1) continue;
          const int c4 = rabu::close_square_level(ball, c3, c2, below);
          CHECK(ball.chamber(c4).length() == n3 - 1);
          ++checked_level;
        }
      }
    }
    // The patterns require a commuting pair; a tree has none.
    CHECK((checked_up > 0) == has_commuting_pair);
    CHECK((checked_level > 0) == has_commuting_pair);
  }
}

TEST_CASE("concave galleries") {
  const CoxeterDiagram d2 = testdiagrams::d2();
  const Ball grid(d2, 2);
  const int c1 = grid.require_index(ch(d2, "s", {2}));
  const int c2 = grid.require_index(ch(d2, "t", {2}));
  const std::vector<int> gallery = rabu::concave_gallery(grid, c1, c2);
  CHECK(gallery == std::vector<int>{c1, 0, c2});

  CHECK(rabu::concave_gallery(grid, c1, c1) == std::vector<int>{c1});

  const CoxeterDiagram d1 = testdiagrams::d1();
  const Ball tree(d1, 2);
  const int a = tree.require_index(ch(d1, "s", {2}));
  const int b = tree.require_index(ch(d1, "s t", {2, 2}));
  CHECK(rabu::concave_gallery(tree, a, b) == std::vector<int>{a, b});
}

TEST_CASE("concave galleries satisfy the three monotonicity clauses") {
  std::mt19937 rng(0);
  for (const CoxeterDiagram& d :
       {testdiagrams::d1(), testdiagrams::d2(), testdiagrams::d3()}) {
    const Ball ball(d, 3);
    std::uniform_int_distribution<int> pick(0, ball.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const int a = pick(rng), b = pick(rng);
      const std::vector<int> gallery = rabu::concave_gallery(ball, a, b);
      CHECK(static_cast<int>(gallery.size()) == ball.distance(a, b) + 1);
      // Strictly down, then level, then strictly up.
      int phase = 0;
      for (std::size_t i = 1; i < gallery.size(); ++i) {
        const int prev = ball.chamber(gallery[i - 1]).length();
        const int cur = ball.chamber(gallery[i]).length();
        const int step = cur - prev;
        if (phase == 0 && step != -1) phase = step == 0 ? 1 : 2;
        else if (phase == 1 && step != 0) { CHECK(step == 1); phase = 2; }
        else if (phase == 2) CHECK(step == 1);
      }
    }
  }
}

TEST_CASE("tree-wall trees") {
  const CoxeterDiagram d1 = testdiagrams::d1();
  const Ball tree(d1, 2);
  const rabu::TreeWallTree g1 = rabu::tree_wall_tree(tree, 0);
  CHECK(g1.is_tree());
  // s-walls are s-panels here: one at the base and one per t-chamber at
  // sphere 1, plus deeper gates visible at radius 2.
  CHECK(g1.walls.size() > 1);

  const CoxeterDiagram d2 = testdiagrams::d2();
  const Ball grid(d2, 2);
  const rabu::TreeWallTree g2 = rabu::tree_wall_tree(grid, 0);
  CHECK(g2.is_tree());
  CHECK(g2.walls.size() == 1);          // the single wall spans everything
  CHECK(g2.residue_gates.size() == 3);  // one t-panel per s-color

  const rabu::TreeWallId base_wall = grid.tree_wall(0, 0);
  CHECK(rabu::tree_wall_distance(g2, base_wall, base_wall) == 0);

  for (const CoxeterDiagram& d :
       {testdiagrams::d1(), testdiagrams::d2(), testdiagrams::d3()}) {
    const Ball ball(d, 3);
    for (int s = 0; s < d.rank(); ++s) {
      CHECK(rabu::tree_wall_tree(ball, s).is_tree());
    }
  }
}

TEST_CASE("adjacent same-sphere chambers share a unique lower neighbor") {
  for (const CoxeterDiagram& d :
       {testdiagrams::d1(), testdiagrams::d2(), testdiagrams::d3()}) {
    const Ball ball(d, 3);
    for (int a = 0; a < ball.size(); ++a) {
      for (auto [type, b] : ball.neighbors(a)) {
        if (ball.chamber(a).length() != ball.chamber(b).length() || a > b) continue;
        int lower = 0;
        for (auto [t2, c] : ball.neighbors(a)) {
          if (t2 == type && ball.chamber(c).length() == ball.chamber(a).length() - 1) {
            ++lower;
            // The same chamber closes b's panel too.
            bool shared = false;
            for (auto [t3, c2] : ball.neighbors(b)) {
              if (t3 == type && c2 == c) shared = true;
            }
            CHECK(shared);
          }
        }
        CHECK(lower == 1);
      }
    }
  }
}

TEST_CASE("projections landing on the outer sphere are commuting-adjacent") {
  // A panel projection that stays on the outer sphere must hang off a
  // commuting letter into the sphere below.
  for (const CoxeterDiagram& d :
       {testdiagrams::d1(), testdiagrams::d2(), testdiagrams::d3()}) {
    const Ball ball(d, 3);
    for (int c1 = 0; c1 < ball.size(); ++c1) {
      const int n = ball.chamber(c1).length();
      if (n + 1 > ball.radius()) continue;
      for (int s = 0; s < d.rank(); ++s) {
        if (rabu::standard_color(d, ball.chamber(c1), s) != 1) continue;
        const rabu::Panel p = rabu::panel(d, ball.chamber(c1), s);
        bool panel_in_ball = true;
        for (const Chamber& m : p.chambers) {
          if (ball.index_of(m) < 0) panel_in_ball = false;
        }
        if (!panel_in_ball) continue;
        for (int c = 0; c < ball.size(); ++c) {
          if (ball.chamber(c).length() > n + 1) continue;
          bool in_panel = false;
          for (const Chamber& m : p.chambers) {
            if (ball.index_of(m) == c) in_panel = true;
          }
          if (in_panel) continue;
          const int proj = ball.project_to_panel(p, c);
          if (ball.chamber(proj).length() != n + 1) continue;
          bool found = false;
          for (auto [t, c3] : ball.neighbors(proj)) {
            if (t != s && ball.chamber(c3).length() == n && d.commute(s, t)) {
              found = true;
            }
          }
          CHECK(found);
        }
      }
    }
  }
}

TEST_CASE("projections between distinct tree-walls are inverse to each other") {
  const CoxeterDiagram d3 = testdiagrams::d3();
  const Ball ball(d3, 3);
  // Collect distinct s-walls and project mutually via chamber distances.
  std::set<rabu::TreeWallId> walls;
  for (int idx = 0; idx < ball.size(); ++idx) walls.insert(ball.tree_wall(idx, 0));
  auto project_to_wall = [&](const rabu::TreeWallId& wall, int from) {
    const Ball::ResidueSet members = ball.tree_wall_chambers(wall);
    const std::vector<int> dist = ball.distances_from(from);
    int best = members.chambers.front();
    for (int m : members.chambers) {
      if (dist[m] < dist[best]) best = m;
    }
    return best;
  };
  int pairs_checked = 0;
  for (const rabu::TreeWallId& w1 : walls) {
    for (const rabu::TreeWallId& w2 : walls) {
      if (w1 == w2) continue;
      // Sample c2 in the projection of w1 onto w2.
      for (int c1 : ball.tree_wall_chambers(w1).chambers) {
        const int c2 = project_to_wall(w2, c1);
        const int back = project_to_wall(w1, c2);
        const int forward = project_to_wall(w2, back);
        CHECK(forward == c2);
        ++pairs_checked;
      }
    }
  }
  CHECK(pairs_checked > 0);
}

TEST_CASE("parallel panels project bijectively") {
  const CoxeterDiagram d3 = testdiagrams::d3();
  const Ball ball(d3, 3);
  int bijections = 0;
  for (int a = 0; a < ball.size(); ++a) {
    const Chamber& ca = ball.chamber(a);
    if (rabu::standard_color(d3, ca, 0) != 1 || ca.length() + 1 > 2) continue;
    const rabu::Panel p1 = rabu::panel(d3, ca, 0);
    for (int b = 0; b < ball.size(); ++b) {
      const Chamber& cb = ball.chamber(b);
      if (rabu::standard_color(d3, cb, 0) != 1 || cb.length() + 1 > 2) continue;
      const rabu::Panel p2 = rabu::panel(d3, cb, 0);
      if (p1 == p2) continue;
      std::set<int> images;
      for (const Chamber& m : p2.chambers) {
        images.insert(ball.project_to_panel(p1, ball.require_index(m)));
      }
      if (images.size() > 1) {
        // Two distinct projections force a full bijection.
        CHECK(images.size() == p1.chambers.size());
        ++bijections;
      }
    }
  }
  CHECK(bijections > 0);
}
