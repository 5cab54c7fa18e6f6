#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "frf/common.hpp"

namespace frf {

/// A word over the map alphabet {0..m-1}. The empty word denotes the whole
/// fractal; length = level.
struct Word {
  std::vector<std::uint8_t> syms;

  Word() = default;
  explicit Word(std::vector<std::uint8_t> s) : syms(std::move(s)) {}

  std::size_t level() const { return syms.size(); }
  bool empty() const { return syms.empty(); }

  Word child(int j) const {
    Word w = *this;
    w.syms.push_back(static_cast<std::uint8_t>(j));
    return w;
  }

  // Index of this word in the lexicographic enumeration of its level.
  std::size_t index(int m) const {
    std::size_t idx = 0;
    for (auto s : syms) idx = idx * static_cast<std::size_t>(m) + s;
    return idx;
  }

  static Word from_index(std::size_t idx, int m, std::size_t level) {
    Word w;
    w.syms.resize(level);
    for (std::size_t k = level; k-- > 0;) {
      w.syms[k] = static_cast<std::uint8_t>(idx % static_cast<std::size_t>(m));
      idx /= static_cast<std::size_t>(m);
    }
    return w;
  }

  // 1-based digits, e.g. "132"; "-" for the empty word.
  std::string str() const {
    if (syms.empty()) return "-";
    std::string s;
    s.reserve(syms.size());
    for (auto d : syms) s += static_cast<char>('1' + d);
    return s;
  }

  static Word parse(const std::string& s, int m) {
    Word w;
    if (s == "-" || s.empty()) return w;
    for (char c : s) {
      int d = c - '1';
      if (d < 0 || d >= m) throw UsageError("bad word digit in '" + s + "'");
      w.syms.push_back(static_cast<std::uint8_t>(d));
    }
    return w;
  }

  bool operator==(const Word& o) const { return syms == o.syms; }
};

inline std::size_t pow_size(int m, int n) {
  std::size_t p = 1;
  for (int i = 0; i < n; ++i) p *= static_cast<std::size_t>(m);
  return p;
}

}  // namespace frf
