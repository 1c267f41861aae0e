#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rabu/perm.hpp"

namespace rabu {

// Resource limits. Radius bounds ball construction, ball_size the number
// of chambers in a ball, enumeration the number of group elements or
// product tuples any single operation may materialize.
struct Caps {
  int radius = 6;
  std::uint64_t ball_size = 1'000'000;
  std::uint64_t enumeration = 10'000'000;
};

// A right-angled Coxeter diagram with per-generator panel thickness and
// local permutation group. Coxeter matrix entries are 2 (the generators
// commute) or infinity (no relation); m_ss = 1 implicitly.
class CoxeterDiagram {
public:
  static constexpr int kInfinity = 0;  // matrix entry for m = infinity

  CoxeterDiagram(std::vector<std::string> generator_names,
                 std::vector<std::vector<int>> coxeter_matrix,
                 std::vector<int> thickness,
                 std::vector<PermGroup> local_groups);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::string& name(int s) const { return names_[s]; }
  // Throws InputError for unknown names.
  int generator_index(const std::string& name) const;

  // m_st as a matrix entry: 1, 2, or kInfinity.
  int coxeter_entry(int s, int t) const { return matrix_[s][t]; }
  bool commute(int s, int t) const { return matrix_[s][t] == 2; }

  int thickness(int s) const { return thickness_[s]; }
  const PermGroup& local_group(int s) const { return local_groups_[s]; }

  // Generators distinct from every element of J and commuting with all of
  // them.
  std::vector<int> perp(const std::vector<int>& J) const;
  std::vector<int> perp(int s) const { return perp(std::vector<int>{s}); }

private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> matrix_;
  std::vector<int> thickness_;
  std::vector<PermGroup> local_groups_;
};

}  // namespace rabu
