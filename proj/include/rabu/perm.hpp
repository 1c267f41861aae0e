#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rabu/bigint.hpp"

namespace rabu {

// A permutation of {1..q}, stored 0-based: images()[i] is the image of
// point i. Text I/O uses 1-based points, accepting both the image-list
// form "[2,1,3]" and cycle form "(1 2)(3 4)"; output is cycle form.
class Permutation {
public:
  Permutation() = default;
  static Permutation identity(int degree);

  // Throws InputError unless `images` is a bijection of {0..degree-1}.
  explicit Permutation(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  // Function composition: (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

  std::string to_cycle_string() const;  // 1-based, "()" for the identity

private:
  std::vector<int> images_;
};

// Parses either "[2,1,3]" or "(1 2)(3 4)" (also "()" / "id") as a
// permutation of {1..degree}.
Permutation parse_permutation(const std::string& text, int degree);

// A finite permutation group on {1..degree()} given by generators.
// A stabilizer chain is computed once at construction; the value is
// immutable afterwards and safe to share across threads.
class PermGroup {
public:
  PermGroup() = default;  // trivial group on no points
  explicit PermGroup(int degree, std::vector<Permutation> generators = {});

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  Uint128 order() const { return order_; }
  bool contains(const Permutation& p) const;
  bool is_trivial() const { return order_ == 1; }

  // Orbit of a 1-based point.
  std::vector<int> orbit(int point) const;
  bool is_transitive() const;

  // Stabilizer of the 1-based point y, generated by sifted Schreier
  // generators. Every generator of the result fixes y.
  PermGroup point_stabilizer(int point) const;

  // Transitive and generated by the union of its point stabilizers.
  bool satisfies_st() const;

  // Equal as sets of permutations of the same point set. Throws
  // InputError on degree mismatch.
  bool same_action(const PermGroup& other) const;

  // All elements, in no particular order. Throws CapExceeded when the
  // order exceeds `cap`.
  std::vector<Permutation> elements(std::uint64_t cap) const;

  // The action on an invariant subset of points (0-based indices into
  // {0..degree-1}). Throws PreconditionError if some generator moves
  // the subset.
  PermGroup restrict_to(const std::vector<int>& points) const;

private:
  struct Level {
    int base = 0;                         // 0-based base point
    std::vector<int> orbit;               // discovery order, orbit[0] == base
    std::vector<int> orbit_pos;           // point -> index+1 into orbit, 0 if absent
    std::vector<Permutation> transversal; // transversal[k] maps base -> orbit[k]
  };

  void build_chain(const std::vector<int>& forced_base_prefix);
  void append_level(int base);
  void recompute_level(std::size_t i);
  std::vector<const Permutation*> level_generators(std::size_t i) const;
  // Strips p through levels >= start; returns the level where stripping
  // stopped and the residue (identity iff p factors through the chain).
  std::pair<std::size_t, Permutation> strip(const Permutation& p,
                                            std::size_t start) const;

  // Construction helper used by point_stabilizer.
  PermGroup(int degree, std::vector<Permutation> generators,
            const std::vector<int>& forced_base_prefix);

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> strong_;  // sifted strong generating set
  std::vector<Level> levels_;
  Uint128 order_ = 1;
};

}  // namespace rabu
