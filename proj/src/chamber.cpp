#include "rabu/chamber.hpp"

#include <algorithm>
#include <sstream>

#include "rabu/errors.hpp"

namespace rabu {

Chamber canonical_chamber(const CoxeterDiagram& d, const Word& word,
                          const std::vector<int>& colors) {
  if (!is_reduced(d, word)) {
    throw PreconditionError("chamber word must be reduced: '" +
                            format_word(d, word) + "'");
  }
  if (colors.size() != word.size()) {
    throw InputError("color count does not match word length");
  }
  for (std::size_t i = 0; i < word.size(); ++i) {
    int q = d.thickness(word[i]);
    if (colors[i] < 2 || colors[i] > q) {
      throw InputError("color " + std::to_string(colors[i]) + " for letter '" +
                       d.name(word[i]) + "' outside 2.." + std::to_string(q));
    }
  }
  const std::vector<int> order = canonical_order(d, word);
  Chamber c;
  c.word.resize(word.size());
  c.colors.resize(word.size());
  for (std::size_t j = 0; j < word.size(); ++j) {
    c.word[j] = word[order[j]];
    c.colors[j] = colors[order[j]];
  }
  return c;
}

std::string format_chamber(const CoxeterDiagram& d, const Chamber& c) {
  if (c.word.empty()) return "[]";
  std::ostringstream out;
  out << '[' << format_word(d, c.word) << '|';
  for (std::size_t i = 0; i < c.colors.size(); ++i) {
    if (i > 0) out << ' ';
    out << c.colors[i];
  }
  out << ']';
  return out.str();
}

namespace {

// Index of the terminal letter equal to s (every later letter commutes
// with it), or -1. A reduced word can have at most one such position.
int terminal_position(const CoxeterDiagram& d, const Word& w, int s) {
  for (std::size_t p = w.size(); p-- > 0;) {
    if (w[p] == s) return static_cast<int>(p);
    if (!d.commute(w[p], s)) return -1;
  }
  return -1;
}

}  // namespace

Panel panel(const CoxeterDiagram& d, const Chamber& c, int s) {
  if (s < 0 || s >= d.rank()) throw InputError("panel type out of range");
  Panel result;
  result.type = s;
  const int q = d.thickness(s);
  const int p = terminal_position(d, c.word, s);
  if (p < 0) {
    // The word extends: c is the shortest chamber of its panel.
    result.chambers.push_back(c);
    Word longer = c.word;
    longer.push_back(s);
    std::vector<int> colors = c.colors;
    colors.push_back(0);
    for (int color = 2; color <= q; ++color) {
      colors.back() = color;
      result.chambers.push_back(canonical_chamber(d, longer, colors));
    }
  } else {
    // Rewrite with the terminal s last: dropping it gives the shortest
    // chamber, recoloring it gives the rest.
    Word shorter = c.word;
    shorter.erase(shorter.begin() + p);
    std::vector<int> short_colors = c.colors;
    short_colors.erase(short_colors.begin() + p);
    result.chambers.push_back(canonical_chamber(d, shorter, short_colors));
    Word longer = shorter;
    longer.push_back(s);
    std::vector<int> colors = short_colors;
    colors.push_back(0);
    for (int color = 2; color <= q; ++color) {
      colors.back() = color;
      result.chambers.push_back(canonical_chamber(d, longer, colors));
    }
  }
  return result;
}

int standard_color(const CoxeterDiagram& d, const Chamber& c, int s) {
  const int p = terminal_position(d, c.word, s);
  return p < 0 ? 1 : c.colors[p];
}

int adjacency_type(const CoxeterDiagram& d, const Chamber& a, const Chamber& b) {
  if (a == b) return -1;
  const Chamber& longer = a.length() >= b.length() ? a : b;
  const Chamber& other = a.length() >= b.length() ? b : a;
  for (int s = 0; s < d.rank(); ++s) {
    if (terminal_position(d, longer.word, s) < 0 &&
        longer.length() != other.length()) {
      continue;
    }
    Panel p = panel(d, longer, s);
    if (std::find(p.chambers.begin(), p.chambers.end(), other) != p.chambers.end()) {
      return s;
    }
  }
  return -1;
}

}  // namespace rabu
