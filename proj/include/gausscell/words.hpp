#pragma once

// Free-group words over the standard genus-g generators a1,b1,...,ag,bg.
// A letter is a nonzero int: +k encodes generator k-1, -k its inverse.

#include <string>
#include <vector>

#include "gausscell/config.hpp"

namespace gausscell {

using Word = std::vector<int>;

inline Word word_inverse(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
  return r;
}

inline Word word_reduce(const Word& w) {
  Word r;
  for (int l : w) {
    if (l == 0) throw Error(ErrorCode::InvalidInput, "zero letter");
    if (!r.empty() && r.back() == -l)
      r.pop_back();
    else
      r.push_back(l);
  }
  return r;
}

inline Word word_concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return word_reduce(r);
}

inline std::string generator_name(int index) {
  // a1, b1, a2, b2, ...
  int pair = index / 2 + 1;
  char c = (index % 2 == 0) ? 'a' : 'b';
  return std::string(1, c) + std::to_string(pair);
}

inline std::string word_to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (int l : w) {
    if (!s.empty()) s += ".";
    s += generator_name(std::abs(l) - 1);
    if (l < 0) s += "'";
  }
  return s;
}

struct Presentation {
  int genus;

  explicit Presentation(int g) : genus(g) {
    if (g < 2) throw Error(ErrorCode::InvalidInput, "genus must be >= 2");
  }

  int num_generators() const { return 2 * genus; }

  // [a1,b1][a2,b2]...[ag,bg]
  Word relator() const {
    Word r;
    for (int i = 0; i < genus; ++i) {
      int a = 2 * i + 1, b = 2 * i + 2;
      r.push_back(a);
      r.push_back(b);
      r.push_back(-a);
      r.push_back(-b);
    }
    return word_reduce(r);
  }

  // All freely reduced words of length <= radius (identity included).
  std::vector<Word> reduced_words(int radius) const {
    std::vector<Word> out;
    out.push_back({});
    std::vector<Word> frontier = {{}};
    int n = num_generators();
    for (int len = 1; len <= radius; ++len) {
      std::vector<Word> next;
      for (const Word& w : frontier) {
        for (int g = 1; g <= n; ++g) {
          for (int s : {g, -g}) {
            if (!w.empty() && w.back() == -s) continue;
            Word nw = w;
            nw.push_back(s);
            next.push_back(nw);
          }
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    return out;
  }
};

}  // namespace gausscell
