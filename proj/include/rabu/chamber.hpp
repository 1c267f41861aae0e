#pragma once

#include <compare>
#include <string>
#include <vector>

#include "rabu/words.hpp"

namespace rabu {

// A chamber of the directed building: a reduced word together with one
// color in {2..q_s} per letter, canonicalized so that the word is the
// lexicographically least rewriting and the colors ride along with their
// letters. Two (word, colors) matrices describe the same chamber exactly
// when they have equal canonical form.
struct Chamber {
  Word word;
  std::vector<int> colors;

  int length() const { return static_cast<int>(word.size()); }
  friend bool operator==(const Chamber&, const Chamber&) = default;

  // Ball index order: word length, then word lex, then colors lex.
  friend std::strong_ordering operator<=>(const Chamber& a, const Chamber& b) {
    if (a.word.size() != b.word.size()) {
      return a.word.size() <=> b.word.size();
    }
    if (auto c = a.word <=> b.word; c != 0) return c;
    return a.colors <=> b.colors;
  }
};

// Canonicalizes an arbitrary matrix representation. Throws
// PreconditionError when the word is not reduced, InputError when a color
// is outside {2..q}.
Chamber canonical_chamber(const CoxeterDiagram& d, const Word& word,
                          const std::vector<int>& colors);

inline Chamber base_chamber() { return Chamber{}; }

std::string format_chamber(const CoxeterDiagram& d, const Chamber& c);

// An s-panel: its q_s chambers, the unique shortest one first and the
// extensions in color order.
struct Panel {
  int type = 0;
  std::vector<Chamber> chambers;

  friend bool operator==(const Panel&, const Panel&) = default;
  friend std::strong_ordering operator<=>(const Panel&, const Panel&) = default;
};

Panel panel(const CoxeterDiagram& d, const Chamber& c, int s);

// The standard coloring: 1 when s extends the chamber's word, otherwise
// the color attached to a terminal letter s.
int standard_color(const CoxeterDiagram& d, const Chamber& c, int s);

// The type of the panel shared by two distinct adjacent chambers, or -1
// when the chambers are equal or not adjacent.
int adjacency_type(const CoxeterDiagram& d, const Chamber& a, const Chamber& b);

}  // namespace rabu
