#pragma once

#include <iosfwd>
#include <string>

#include "rabu/ball.hpp"
#include "rabu/universal.hpp"

namespace rabu {

// Ball adjacency as an undirected DOT graph, edge label = generator type.
void write_ball_dot(std::ostream& out, const Ball& ball);

// Tree-wall tree as DOT: wall vertices box-shaped, residue vertices
// ellipse-shaped.
void write_tree_wall_tree_dot(std::ostream& out, const CoxeterDiagram& d,
                              const TreeWallTree& tree);

// Ball index table as JSON text.
std::string ball_index_json(const Ball& ball);

// Verification report as JSON text, one object per check.
std::string report_json(const Report& report);

}  // namespace rabu
