#include "rabu/ball.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "rabu/errors.hpp"

namespace rabu {

Ball::Ball(const CoxeterDiagram& d, int radius, const Caps& caps)
    : diagram_(d), radius_(radius) {
  if (radius < 0) throw InputError("negative ball radius");
  if (radius > caps.radius) {
    throw CapExceeded("radius " + std::to_string(radius) + " exceeds cap " +
                      std::to_string(caps.radius));
  }
  const std::vector<Word> words = enumerate_elements(d, radius, caps.ball_size);
  sphere_begin_.assign(radius + 2, 0);
  for (const Word& w : words) {
    // Color tuples in lex order; enumerate_elements is (length, lex)
    // sorted, so chambers come out in index order directly.
    std::vector<int> colors(w.size(), 2);
    while (true) {
      chambers_.push_back(Chamber{w, colors});
      if (chambers_.size() > caps.ball_size) {
        throw CapExceeded("ball size exceeds cap " + std::to_string(caps.ball_size));
      }
      std::size_t k = colors.size();
      while (k > 0 && colors[k - 1] == d.thickness(w[k - 1])) {
        colors[k - 1] = 2;
        --k;
      }
      if (k == 0) break;
      ++colors[k - 1];
    }
  }
  for (int idx = 0; idx < size(); ++idx) {
    sphere_begin_[chambers_[idx].length() + 1] = idx + 1;
  }
  for (int n = 1; n <= radius + 1; ++n) {
    sphere_begin_[n] = std::max(sphere_begin_[n], sphere_begin_[n - 1]);
  }

  adjacency_.resize(chambers_.size());
  for (int idx = 0; idx < size(); ++idx) {
    const Chamber& c = chambers_[idx];
    for (int s = 0; s < d.rank(); ++s) {
      for (const Chamber& other : panel(d, c, s).chambers) {
        if (other == c) continue;
        int j = index_of(other);
        if (j >= 0) adjacency_[idx].emplace_back(s, j);
      }
    }
  }
}

int Ball::index_of(const Chamber& c) const {
  auto it = std::lower_bound(chambers_.begin(), chambers_.end(), c);
  if (it != chambers_.end() && *it == c) {
    return static_cast<int>(it - chambers_.begin());
  }
  return -1;
}

int Ball::require_index(const Chamber& c) const {
  int idx = index_of(c);
  if (idx < 0) {
    throw CapExceeded("chamber " + format_chamber(diagram_, c) +
                      " lies outside the ball of radius " + std::to_string(radius_));
  }
  return idx;
}

std::vector<int> Ball::distances_from(int idx) const {
  std::vector<int> dist(size(), -1);
  dist[idx] = 0;
  std::deque<int> queue{idx};
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (auto [type, j] : adjacency_[c]) {
      (void)type;
      if (dist[j] < 0) {
        dist[j] = dist[c] + 1;
        queue.push_back(j);
      }
    }
  }
  return dist;
}

int Ball::distance(int a, int b) const { return distances_from(a)[b]; }

std::vector<int> Ball::minimal_gallery(int a, int b) const {
  std::vector<int> parent(size(), -1);
  std::vector<int> dist(size(), -1);
  dist[a] = 0;
  std::deque<int> queue{a};
  while (!queue.empty() && dist[b] < 0) {
    int c = queue.front();
    queue.pop_front();
    // Neighbors in index order keep the output deterministic.
    std::vector<std::pair<int, int>> sorted = adjacency_[c];
    std::sort(sorted.begin(), sorted.end(),
              [](auto x, auto y) { return x.second < y.second; });
    for (auto [type, j] : sorted) {
      (void)type;
      if (dist[j] < 0) {
        dist[j] = dist[c] + 1;
        parent[j] = c;
        queue.push_back(j);
      }
    }
  }
  std::vector<int> path;
  for (int c = b; c != -1; c = parent[c]) path.push_back(c);
  std::reverse(path.begin(), path.end());
  return path;
}

Word Ball::weyl_distance(int a, int b) const {
  const std::vector<int> path = minimal_gallery(a, b);
  Word types;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    types.push_back(adjacency_type(diagram_, chambers_[path[i]],
                                   chambers_[path[i + 1]]));
  }
  return reduce(diagram_, types);
}

int Ball::project_to_panel(const Panel& p, int c) const {
  const std::vector<int> dist = distances_from(c);
  int best = -1;
  int best_dist = -1;
  int ties = 0;
  for (const Chamber& member : p.chambers) {
    int idx = require_index(member);
    if (best < 0 || dist[idx] < best_dist) {
      best = idx;
      best_dist = dist[idx];
      ties = 1;
    } else if (dist[idx] == best_dist) {
      ++ties;
    }
  }
  if (ties != 1) {
    throw std::logic_error("panel projection is not unique; ball adjacency broken");
  }
  return best;
}

Ball::ResidueSet Ball::residue(int c, const std::vector<int>& types) const {
  ResidueSet out;
  std::vector<bool> seen(size(), false);
  seen[c] = true;
  std::vector<int> stack{c};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    out.chambers.push_back(x);
    const Chamber& cx = chambers_[x];
    for (int s : types) {
      // An upward extension at the boundary leaves the ball.
      if (cx.length() == radius_ && standard_color(diagram_, cx, s) == 1) {
        out.truncated = true;
      }
    }
    for (auto [type, j] : adjacency_[x]) {
      if (!seen[j] && std::find(types.begin(), types.end(), type) != types.end()) {
        seen[j] = true;
        stack.push_back(j);
      }
    }
  }
  std::sort(out.chambers.begin(), out.chambers.end());
  return out;
}

int Ball::bfs_gate(const ResidueSet& members) const {
  // The gate is the unique member of minimal word length (= minimal
  // gallery distance from the base chamber); the minimum is attained
  // inside the ball because concave minimal galleries stay both in the
  // residue and in the ball.
  int best = members.chambers.front();  // index order starts with shortest
  int best_len = chambers_[best].length();
  for (int idx : members.chambers) {
    if (chambers_[idx].length() == best_len && idx != best) {
      throw std::logic_error("residue gate is not unique; geometry broken");
    }
    if (chambers_[idx].length() > best_len) break;
  }
  return best;
}

TreeWallId Ball::tree_wall(int c, int s) const {
  std::vector<int> types = diagram_.perp(s);
  types.push_back(s);
  const ResidueSet members = residue(c, types);
  return TreeWallId{s, chambers_[bfs_gate(members)]};
}

Ball::ResidueSet Ball::tree_wall_chambers(const TreeWallId& t) const {
  std::vector<int> types = diagram_.perp(t.type);
  types.push_back(t.type);
  return residue(require_index(t.gate), types);
}

int Ball::wing_of(const TreeWallId& t, int x) const {
  const Panel reference = panel(diagram_, t.gate, t.type);
  return project_to_panel(reference, x);
}

namespace {

int edge_type(const Ball& ball, int a, int b) {
  for (auto [type, j] : ball.neighbors(a)) {
    if (j == b) return type;
  }
  return -1;
}

int level(const Ball& ball, int c) { return ball.chamber(c).length(); }

// The unique neighbor of c one sphere down inside its s-panel.
int drop_in_panel(const Ball& ball, int c, int s) {
  const Panel p = panel(ball.diagram(), ball.chamber(c), s);
  int idx = ball.require_index(p.chambers.front());
  if (level(ball, idx) != level(ball, c) - 1) {
    throw PreconditionError("chamber has no lower neighbor of the required type");
  }
  return idx;
}

}  // namespace

int close_square_up(const Ball& ball, int c1, int c2, int c3) {
  const int n = level(ball, c1);
  if (level(ball, c2) != n || level(ball, c3) != n + 1) {
    throw PreconditionError("closing squares: expected levels (n, n, n+1)");
  }
  const int t = edge_type(ball, c1, c3);
  const int s = edge_type(ball, c2, c3);
  if (t < 0 || s < 0) {
    throw PreconditionError("closing squares: c1, c2 must be adjacent to c3");
  }
  if (s == t) {
    throw PreconditionError("closing squares: the two types must differ");
  }
  if (!ball.diagram().commute(s, t)) {
    throw std::logic_error("closing squares: types fail to commute; geometry broken");
  }
  const int c4 = drop_in_panel(ball, c1, s);
  if (edge_type(ball, c2, c4) != t) {
    throw std::logic_error("closing squares: no closing chamber; geometry broken");
  }
  return c4;
}

int close_square_level(const Ball& ball, int c1, int c2, int c3) {
  const int n = level(ball, c1);
  if (level(ball, c2) != n || level(ball, c3) != n - 1) {
    throw PreconditionError("closing squares: expected levels (n, n, n-1)");
  }
  const int s = edge_type(ball, c1, c2);
  const int t = edge_type(ball, c2, c3);
  if (s < 0 || t < 0) {
    throw PreconditionError("closing squares: expected a gallery c1, c2, c3");
  }
  if (s == t) {
    throw PreconditionError("closing squares: the two types must differ");
  }
  if (!ball.diagram().commute(s, t)) {
    throw std::logic_error("closing squares: types fail to commute; geometry broken");
  }
  const int c4 = drop_in_panel(ball, c1, t);
  if (edge_type(ball, c3, c4) != s) {
    throw std::logic_error("closing squares: no closing chamber; geometry broken");
  }
  return c4;
}

std::vector<int> concave_gallery(const Ball& ball, int a, int b) {
  std::vector<int> gallery = ball.minimal_gallery(a, b);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 1; i + 1 < gallery.size(); ++i) {
      const int la = level(ball, gallery[i - 1]);
      const int lb = level(ball, gallery[i]);
      const int lc = level(ball, gallery[i + 1]);
      int replacement = -1;
      if (lb == la + 1 && lc == la) {
        replacement = close_square_up(ball, gallery[i - 1], gallery[i + 1], gallery[i]);
      } else if (lb == la + 1 && lc == la + 1) {
        replacement = close_square_level(ball, gallery[i + 1], gallery[i], gallery[i - 1]);
      } else if (lb == la && lc == la - 1) {
        replacement = close_square_level(ball, gallery[i - 1], gallery[i], gallery[i + 1]);
      }
      if (replacement >= 0) {
        gallery[i] = replacement;
        changed = true;
      }
    }
  }
  return gallery;
}

TreeWallTree tree_wall_tree(const Ball& ball, int s) {
  TreeWallTree tree;
  tree.type = s;
  std::vector<int> complement;
  for (int t = 0; t < ball.diagram().rank(); ++t) {
    if (t != s) complement.push_back(t);
  }
  std::map<TreeWallId, int> wall_index;
  std::map<Chamber, int> residue_index;
  std::set<std::pair<int, int>> edges;
  for (int c = 0; c < ball.size(); ++c) {
    const TreeWallId wall = ball.tree_wall(c, s);
    auto [wit, winserted] =
        wall_index.try_emplace(wall, static_cast<int>(tree.walls.size()));
    if (winserted) tree.walls.push_back(wall);

    const Ball::ResidueSet res = ball.residue(c, complement);
    const Chamber gate = ball.chamber(res.chambers.front());
    auto [rit, rinserted] =
        residue_index.try_emplace(gate, static_cast<int>(tree.residue_gates.size()));
    if (rinserted) tree.residue_gates.push_back(gate);

    edges.emplace(wit->second, rit->second);
  }
  tree.edges.assign(edges.begin(), edges.end());

  // Connectivity over the union of both parts.
  const std::size_t nodes = tree.walls.size() + tree.residue_gates.size();
  std::vector<std::vector<std::size_t>> graph(nodes);
  for (auto [w, r] : tree.edges) {
    graph[w].push_back(tree.walls.size() + r);
    graph[tree.walls.size() + r].push_back(w);
  }
  std::vector<bool> seen(nodes, false);
  std::size_t components = 0;
  for (std::size_t start = 0; start < nodes; ++start) {
    if (seen[start]) continue;
    ++components;
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t u : graph[v]) {
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
  }
  tree.connected = components <= 1;
  tree.acyclic = tree.edges.size() + components == nodes;
  return tree;
}

int tree_wall_distance(const TreeWallTree& tree, const TreeWallId& t1,
                       const TreeWallId& t2) {
  auto find_wall = [&](const TreeWallId& t) {
    for (std::size_t i = 0; i < tree.walls.size(); ++i) {
      if (tree.walls[i] == t) return static_cast<int>(i);
    }
    throw InputError("tree-wall not present in the tree");
  };
  const int a = find_wall(t1);
  const int b = find_wall(t2);
  const std::size_t nodes = tree.walls.size() + tree.residue_gates.size();
  std::vector<std::vector<int>> graph(nodes);
  for (auto [w, r] : tree.edges) {
    int rv = static_cast<int>(tree.walls.size()) + r;
    graph[w].push_back(rv);
    graph[rv].push_back(w);
  }
  std::vector<int> dist(nodes, -1);
  dist[a] = 0;
  std::deque<int> queue{a};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : graph[v]) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  if (dist[b] < 0) throw InputError("tree-walls in different components");
  return dist[b] / 2;
}

}  // namespace rabu
