#include "rabu/words.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "rabu/errors.hpp"

namespace rabu {

CoxeterDiagram::CoxeterDiagram(std::vector<std::string> generator_names,
                               std::vector<std::vector<int>> coxeter_matrix,
                               std::vector<int> thickness,
                               std::vector<PermGroup> local_groups)
    : names_(std::move(generator_names)),
      matrix_(std::move(coxeter_matrix)),
      thickness_(std::move(thickness)),
      local_groups_(std::move(local_groups)) {
  const std::size_t n = names_.size();
  std::set<std::string> distinct(names_.begin(), names_.end());
  if (distinct.size() != n) throw InputError("duplicate generator names");
  for (const std::string& name : names_) {
    if (name.empty() || name.find(' ') != std::string::npos ||
        name.find(',') != std::string::npos) {
      throw InputError("generator name must be nonempty without spaces or commas: '" +
                       name + "'");
    }
  }
  if (matrix_.size() != n || thickness_.size() != n || local_groups_.size() != n) {
    throw InputError("diagram field sizes do not match the generator count");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix_[i].size() != n) throw InputError("coxeter matrix is not square");
    if (matrix_[i][i] != 1) throw InputError("coxeter matrix diagonal must be 1");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && matrix_[i][j] != 2 && matrix_[i][j] != kInfinity) {
        throw InputError("off-diagonal coxeter entries must be 2 or infinity");
      }
      if (matrix_[i][j] != matrix_[j][i]) {
        throw InputError("coxeter matrix must be symmetric");
      }
    }
    if (thickness_[i] < 2) {
      throw InputError("thickness of '" + names_[i] + "' must be at least 2");
    }
    if (local_groups_[i].degree() != thickness_[i]) {
      throw InputError("local group of '" + names_[i] + "' has degree " +
                       std::to_string(local_groups_[i].degree()) +
                       ", expected thickness " + std::to_string(thickness_[i]));
    }
  }
}

int CoxeterDiagram::generator_index(const std::string& name) const {
  for (int i = 0; i < rank(); ++i) {
    if (names_[i] == name) return i;
  }
  throw InputError("unknown generator '" + name + "'");
}

std::vector<int> CoxeterDiagram::perp(const std::vector<int>& J) const {
  std::vector<int> result;
  for (int t = 0; t < rank(); ++t) {
    if (std::find(J.begin(), J.end(), t) != J.end()) continue;
    bool all = true;
    for (int s : J) {
      if (!commute(s, t)) { all = false; break; }
    }
    if (all) result.push_back(t);
  }
  return result;
}

Word parse_word(const CoxeterDiagram& d, const std::string& text) {
  Word w;
  std::string token;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    char c = i < text.size() ? text[i] : ' ';
    if (c == ' ' || c == ',' || c == '\t') {
      if (!token.empty()) {
        w.push_back(d.generator_index(token));
        token.clear();
      }
    } else {
      token.push_back(c);
    }
  }
  return w;
}

std::string format_word(const CoxeterDiagram& d, const Word& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out << ' ';
    out << d.name(w[i]);
  }
  return out.str();
}

namespace {

void check_well_formed(const CoxeterDiagram& d, const Word& w) {
  for (int s : w) {
    if (s < 0 || s >= d.rank()) throw InputError("letter index out of range");
  }
}

// Deletes one letter if the new letter cancels against a matching one
// that can be commuted next to it; otherwise appends. Keeps the word
// reduced at every step.
void pile_letter(const CoxeterDiagram& d, Word& w,
                 std::vector<int>* colors, int s, int color) {
  for (std::size_t k = w.size(); k-- > 0;) {
    if (w[k] == s) {
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(k));
      if (colors) colors->erase(colors->begin() + static_cast<std::ptrdiff_t>(k));
      return;
    }
    if (!d.commute(w[k], s)) break;
  }
  w.push_back(s);
  if (colors) colors->push_back(color);
}

}  // namespace

bool is_reduced(const CoxeterDiagram& d, const Word& w) {
  check_well_formed(d, w);
  Word piled;
  for (int s : w) pile_letter(d, piled, nullptr, s, 0);
  return piled.size() == w.size();
}

// Lexicographically least linear extension of the dependency order:
// repeatedly emit the smallest letter among positions all of whose
// earlier letters already emitted or commuting. order[j] is the original
// position of output letter j.
std::vector<int> canonical_order(const CoxeterDiagram& d, const Word& w) {
  const std::size_t n = w.size();
  std::vector<bool> taken(n, false);
  std::vector<int> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    int best = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (taken[i]) continue;
      bool available = true;
      for (std::size_t j = 0; j < i; ++j) {
        if (!taken[j] && !d.commute(w[j], w[i])) { available = false; break; }
      }
      if (available && (best == -1 || w[i] < w[best])) best = static_cast<int>(i);
    }
    taken[best] = true;
    order.push_back(best);
  }
  return order;
}

Word reduce(const CoxeterDiagram& d, const Word& w) {
  check_well_formed(d, w);
  Word piled;
  for (int s : w) pile_letter(d, piled, nullptr, s, 0);
  std::vector<int> order = canonical_order(d, piled);
  Word out(piled.size());
  for (std::size_t j = 0; j < piled.size(); ++j) out[j] = piled[order[j]];
  return out;
}

bool words_equal(const CoxeterDiagram& d, const Word& w1, const Word& w2) {
  return reduce(d, w1) == reduce(d, w2);
}

std::vector<RepEntry> rep_set(const CoxeterDiagram& d, const Word& w,
                              std::size_t max_length) {
  if (!is_reduced(d, w)) {
    throw PreconditionError("rep_set requires a reduced word");
  }
  if (w.size() > max_length) {
    throw CapExceeded("rep_set guard: word length " + std::to_string(w.size()) +
                      " exceeds " + std::to_string(max_length));
  }
  const std::size_t n = w.size();
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<RepEntry> result{{id, w}};
  std::set<Word> seen{w};
  for (std::size_t k = 0; k < result.size(); ++k) {
    const RepEntry cur = result[k];  // by value: result may reallocate
    for (std::size_t r = 0; r + 1 < n; ++r) {
      if (!d.commute(cur.word[r], cur.word[r + 1])) continue;
      RepEntry next = cur;
      std::swap(next.word[r], next.word[r + 1]);
      std::swap(next.sigma[r], next.sigma[r + 1]);
      if (seen.insert(next.word).second) result.push_back(std::move(next));
    }
  }
  return result;
}

PositionPoset::PositionPoset(int length, std::vector<std::vector<bool>> after)
    : length_(length), after_(std::move(after)) {}

std::vector<std::pair<int, int>> PositionPoset::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < length_; ++i) {
    for (int j = 0; j < length_; ++j) {
      if (after_[i][j]) out.emplace_back(i + 1, j + 1);
    }
  }
  return out;
}

PositionPoset position_poset(const CoxeterDiagram& d, const Word& w) {
  if (!is_reduced(d, w)) {
    throw PreconditionError("position_poset requires a reduced word");
  }
  const std::size_t n = w.size();
  // after[i][j]: letter at position i can never cross to the left of the
  // letter at position j. Direct blocks are non-commuting earlier letters
  // (equal letters never commute); transitive closure over increasing
  // position chains.
  std::vector<std::vector<bool>> after(n, std::vector<bool>(n, false));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j + 1; i < n; ++i) {
      if (!d.commute(w[i], w[j])) after[i][j] = true;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (after[i][k] && after[k][j]) after[i][j] = true;
      }
    }
  }
  return PositionPoset(static_cast<int>(n), std::move(after));
}

PositionPoset position_poset_by_rep(const CoxeterDiagram& d, const Word& w,
                                    std::size_t max_length) {
  const std::vector<RepEntry> reps = rep_set(d, w, max_length);
  const std::size_t n = w.size();
  std::vector<std::vector<bool>> after(n, std::vector<bool>(n, true));
  for (std::size_t i = 0; i < n; ++i) after[i][i] = false;
  for (const RepEntry& rep : reps) {
    // place[p] = position of original letter p in this rewriting
    std::vector<int> place(n);
    for (std::size_t j = 0; j < n; ++j) place[rep.sigma[j]] = static_cast<int>(j);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (after[i][j] && place[i] < place[j]) after[i][j] = false;
      }
    }
  }
  return PositionPoset(static_cast<int>(n), std::move(after));
}

DescentData descent_data(const CoxeterDiagram& d, const Word& w) {
  if (!is_reduced(d, w)) {
    throw PreconditionError("descent_data requires a reduced word");
  }
  DescentData out;
  const std::size_t n = w.size();
  if (n == 0) return out;
  // Position p is terminal when every later letter commutes with it; the
  // descent set collects the terminal letters.
  std::set<int> descents;
  for (std::size_t p = 0; p < n; ++p) {
    bool terminal = true;
    for (std::size_t q = p + 1; q < n; ++q) {
      if (!d.commute(w[p], w[q])) { terminal = false; break; }
    }
    if (terminal) descents.insert(w[p]);
  }
  out.descents.assign(descents.begin(), descents.end());
  if (out.descents.size() == 1) {
    out.word_class = DescentData::Class::OneDescent;
    out.last_letter = out.descents.front();
  } else {
    out.word_class = DescentData::Class::ManyDescents;
  }
  return out;
}

std::vector<Word> enumerate_elements(const CoxeterDiagram& d, int max_length,
                                     std::uint64_t cap) {
  std::vector<Word> result{Word{}};
  std::set<Word> seen{Word{}};
  std::size_t layer_begin = 0;
  for (int len = 1; len <= max_length; ++len) {
    const std::size_t layer_end = result.size();
    for (std::size_t k = layer_begin; k < layer_end; ++k) {
      for (int s = 0; s < d.rank(); ++s) {
        Word extended = result[k];
        extended.push_back(s);
        Word canon = reduce(d, extended);
        if (static_cast<int>(canon.size()) != len) continue;
        if (seen.insert(canon).second) {
          result.push_back(std::move(canon));
          if (result.size() > cap) {
            throw CapExceeded("element enumeration exceeds cap");
          }
        }
      }
    }
    std::sort(result.begin() + static_cast<std::ptrdiff_t>(layer_end), result.end());
    layer_begin = layer_end;
  }
  return result;
}

}  // namespace rabu
