#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rabu/diagram.hpp"

namespace rabu {

// A word in the free monoid over the generators, as indices into the
// diagram's generator list. Text syntax is space- or comma-separated
// generator names; the empty string is the identity.
using Word = std::vector<int>;

Word parse_word(const CoxeterDiagram& d, const std::string& text);
std::string format_word(const CoxeterDiagram& d, const Word& w);

// A word is reduced when no sequence of commutation swaps exposes an
// adjacent equal pair.
bool is_reduced(const CoxeterDiagram& d, const Word& w);

// Canonical normal form: the lexicographically least (by declared
// generator order) reduced word representing the same group element.
// Idempotent.
Word reduce(const CoxeterDiagram& d, const Word& w);

// The position permutation realizing the canonical rewriting of a reduced
// word: output letter j sits at original position order[j].
std::vector<int> canonical_order(const CoxeterDiagram& d, const Word& w);

bool words_equal(const CoxeterDiagram& d, const Word& w1, const Word& w2);

// One reduced rewriting of w, as the position permutation that realizes
// it: word[j] == w[sigma[j]], i.e. sigma maps new positions (0-based) to
// original positions.
struct RepEntry {
  std::vector<int> sigma;
  Word word;
};

// All reduced rewritings of a reduced word, by breadth-first closure over
// single adjacent commutation swaps. Always contains the identity entry.
// Exponential in the worst case; guarded by max_length (default 10).
// Throws PreconditionError when w is not reduced.
std::vector<RepEntry> rep_set(const CoxeterDiagram& d, const Word& w,
                              std::size_t max_length = 10);

// The strict partial order on letter positions of a reduced word: i < j
// holds when position i's letter comes after position j's letter in every
// reduced rewriting. Positions are 1-based in the pair list.
class PositionPoset {
public:
  PositionPoset(int length, std::vector<std::vector<bool>> after);

  int length() const { return length_; }
  // precedes(i, j) == true means i comes strictly after j in every
  // rewriting (1-based positions).
  bool precedes(int i, int j) const { return after_[i - 1][j - 1]; }
  std::vector<std::pair<int, int>> pairs() const;

private:
  int length_;
  std::vector<std::vector<bool>> after_;  // after_[i][j]: pos i+1 always after pos j+1
};

// Fast path: transitive closure of the non-commutation dependencies.
PositionPoset position_poset(const CoxeterDiagram& d, const Word& w);

// Baseline oracle: intersect position orders over the full rep_set.
PositionPoset position_poset_by_rep(const CoxeterDiagram& d, const Word& w,
                                    std::size_t max_length = 10);

// Descent data of a reduced word: the set L(w) of generators shortening w
// on the right, and whether it is a single forced last letter.
struct DescentData {
  enum class Class { Identity, OneDescent, ManyDescents };
  std::vector<int> descents;         // sorted generator indices
  Class word_class = Class::Identity;
  std::optional<int> last_letter;    // set iff word_class == OneDescent
};

DescentData descent_data(const CoxeterDiagram& d, const Word& w);

// All canonical reduced words of length <= max_length, sorted by (length,
// lex); one entry per group element. Throws CapExceeded past `cap` words.
std::vector<Word> enumerate_elements(const CoxeterDiagram& d, int max_length,
                                     std::uint64_t cap);

}  // namespace rabu
