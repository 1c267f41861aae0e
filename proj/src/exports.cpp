#include "rabu/exports.hpp"

#include <ostream>

#include <json.hpp>

namespace rabu {

void write_ball_dot(std::ostream& out, const Ball& ball) {
  out << "graph ball {\n";
  for (int idx = 0; idx < ball.size(); ++idx) {
    out << "  n" << idx << " [label=\""
        << format_chamber(ball.diagram(), ball.chamber(idx)) << "\"];\n";
  }
  for (int idx = 0; idx < ball.size(); ++idx) {
    for (auto [type, j] : ball.neighbors(idx)) {
      if (j < idx) continue;  // one edge per unordered pair
      out << "  n" << idx << " -- n" << j << " [label=\""
          << ball.diagram().name(type) << "\"];\n";
    }
  }
  out << "}\n";
}

void write_tree_wall_tree_dot(std::ostream& out, const CoxeterDiagram& d,
                              const TreeWallTree& tree) {
  out << "graph treewalls {\n";
  for (std::size_t i = 0; i < tree.walls.size(); ++i) {
    out << "  w" << i << " [shape=box, label=\"" << d.name(tree.walls[i].type)
        << " @ " << format_chamber(d, tree.walls[i].gate) << "\"];\n";
  }
  for (std::size_t i = 0; i < tree.residue_gates.size(); ++i) {
    out << "  r" << i << " [shape=ellipse, label=\""
        << format_chamber(d, tree.residue_gates[i]) << "\"];\n";
  }
  for (auto [w, r] : tree.edges) {
    out << "  w" << w << " -- r" << r << ";\n";
  }
  out << "}\n";
}

std::string ball_index_json(const Ball& ball) {
  nlohmann::json rows = nlohmann::json::array();
  for (int idx = 0; idx < ball.size(); ++idx) {
    const Chamber& c = ball.chamber(idx);
    nlohmann::json row;
    row["index"] = idx;
    row["word"] = format_word(ball.diagram(), c.word);
    row["colors"] = c.colors;
    rows.push_back(std::move(row));
  }
  return rows.dump(2);
}

std::string report_json(const Report& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const Check& c : report.checks) {
    nlohmann::json row;
    row["check"] = c.check;
    row["expected"] = c.expected;
    row["actual"] = c.actual;
    row["pass"] = c.pass;
    rows.push_back(std::move(row));
  }
  return rows.dump(2);
}

}  // namespace rabu
