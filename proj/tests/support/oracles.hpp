#pragma once

// Reference implementations the library is checked against. None of them
// shares code with core/.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "relxl/dihedral_garside.hpp"
#include "relxl/link_builder.hpp"

namespace relxl::testing {

// Word problem for <a,b | prod(a,b;m) = prod(b,a;m)> through the central
// quotient. For m = 2k+1 put x = prod(a,b;m), y = ab: the group is
// <x,y | x^2 = y^m> and modulo the centre it is Z/2 * Z/m. For m = 2k put
// y = ab: modulo Delta = y^k it is Z * Z/k with a free. The centre is
// infinite cyclic with non-zero exponent sum, so a word is trivial iff its
// image is trivial and its exponent sum is 0.
class CentralQuotientOracle {
 public:
  explicit CentralQuotientOracle(int m) : m_(m) {
    if (m % 2 == 1) {
      const int k = m / 2;
      order_ = {2, m};
      image_[0] = {{1, -k}, {0, 1}};
      image_[1] = {{0, 1}, {1, k + 1}};
    } else {
      order_ = {0, m / 2};
      image_[0] = {{0, 1}};
      image_[1] = {{0, -1}, {1, 1}};
    }
  }

  // Canonical form: reduced free-product syllables, then the exponent sum.
  std::vector<std::pair<int, int>> key(const Word& w) const {
    std::vector<std::pair<int, int>> out;
    int sum = 0;
    for (const Letter& x : w) {
      sum += x.inverse ? -1 : 1;
      auto syl = image_[x.gen];
      if (x.inverse) {
        std::reverse(syl.begin(), syl.end());
        for (auto& s : syl) s.second = -s.second;
      }
      for (auto s : syl) push(out, s);
    }
    out.emplace_back(-1, sum);
    return out;
  }

  bool equal(const Word& u, const Word& v) const { return key(u) == key(v); }

 private:
  int reduce(int factor, int e) const {
    const int o = order_[factor];
    if (o == 0) return e;
    return ((e % o) + o) % o;
  }

  void push(std::vector<std::pair<int, int>>& out, std::pair<int, int> s) const {
    s.second = reduce(s.first, s.second);
    while (s.second != 0 && !out.empty() && out.back().first == s.first) {
      s.second = reduce(s.first, s.second + out.back().second);
      out.pop_back();
    }
    if (s.second != 0) out.push_back(s);
  }

  int m_;
  std::array<int, 2> order_{};
  std::array<std::vector<std::pair<int, int>>, 2> image_;
};

// Equivalence classes of all words of length <= bound under free
// cancellation/insertion and substitution of relator pieces: u -> v whenever
// u v^-1 is a cyclic conjugate of the relator or its inverse. Words are coded
// in base 5 (letters a, A, b, B as 1..4) so every word has its own slot.
class RewritingClosure {
 public:
  RewritingClosure(int m, int bound) : bound_(bound) {
    std::size_t slots = 1;
    for (int i = 0; i < bound; ++i) slots *= 5;
    parent_.resize(slots);
    for (std::size_t i = 0; i < slots; ++i) parent_[i] = static_cast<std::uint32_t>(i);

    std::vector<int> rel;  // prod(a,b;m) prod(b,a;m)^-1
    for (int i = 0; i < m; ++i) rel.push_back(i % 2 == 0 ? 1 : 3);
    for (int i = m - 1; i >= 0; --i) rel.push_back(i % 2 == 0 ? 4 : 2);
    const std::vector<int> rel_inv = invert(rel);
    const int n = 2 * m;
    for (const std::vector<int>* r : std::array<const std::vector<int>*, 2>{&rel, &rel_inv}) {
      for (int rot = 0; rot < n; ++rot) {
        std::vector<int> c;
        for (int i = 0; i < n; ++i) c.push_back((*r)[static_cast<std::size_t>((rot + i) % n)]);
        for (int k = 1; k < n; ++k) {
          std::vector<int> u(c.begin(), c.begin() + k);
          std::vector<int> rest(c.begin() + k, c.end());
          pieces_.emplace_back(u, invert(rest));
        }
      }
    }
    for (int x = 1; x <= 4; ++x) pieces_.push_back({{x, partner(x)}, {}});

    std::vector<int> w;
    enumerate(w);
  }

  bool same(const Word& u, const Word& v) { return root(u) == root(v); }
  std::uint32_t root(const Word& w) { return find(code(letters(w))); }

 private:
  static int partner(int x) { return x % 2 == 1 ? x + 1 : x - 1; }
  static std::vector<int> invert(const std::vector<int>& w) {
    std::vector<int> out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(partner(*it));
    return out;
  }
  static std::vector<int> letters(const Word& w) {
    std::vector<int> out;
    for (const Letter& x : w) out.push_back(1 + 2 * x.gen + (x.inverse ? 1 : 0));
    return out;
  }
  static std::size_t code(const std::vector<int>& w) {
    std::size_t c = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) c = c * 5 + static_cast<std::size_t>(*it);
    return c;
  }
  std::uint32_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return static_cast<std::uint32_t>(x);
  }
  void unite(std::size_t a, std::size_t b) {
    const auto ra = find(a), rb = find(b);
    if (ra != rb) parent_[std::max(ra, rb)] = std::min(ra, rb);
  }

  // Every substitution is symmetric, so linking each word to the results of
  // replacing pieces found in it covers all moves between bounded words.
  void visit(const std::vector<int>& w) {
    const std::size_t here = code(w);
    for (const auto& [u, v] : pieces_) {
      if (u.size() > w.size()) continue;
      const int grown = static_cast<int>(w.size() - u.size() + v.size());
      if (grown > bound_) continue;
      for (std::size_t p = 0; p + u.size() <= w.size(); ++p) {
        if (!std::equal(u.begin(), u.end(), w.begin() + static_cast<std::ptrdiff_t>(p))) continue;
        std::vector<int> next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
        next.insert(next.end(), v.begin(), v.end());
        next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(p + u.size()), w.end());
        unite(here, code(next));
      }
    }
  }

  void enumerate(std::vector<int>& w) {
    visit(w);
    if (static_cast<int>(w.size()) == bound_) return;
    for (int x = 1; x <= 4; ++x) {
      w.push_back(x);
      enumerate(w);
      w.pop_back();
    }
  }

  int bound_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> pieces_;
};

// Every word over a, b and their inverses with at most max_len letters.
inline std::vector<Word> all_words(int max_len, int rank = 2) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (int g = 0; g < rank; ++g) {
        for (bool inv : {false, true}) {
          Word w = out[i];
          w.push_back({g, inv});
          out.push_back(std::move(w));
        }
      }
    }
    begin = end;
  }
  return out;
}

// Positive words equal in the monoid: closure under replacing one
// alternating block of length m by the other.
inline std::vector<std::string> positive_class(const std::string& w, int m) {
  std::string ab, ba;
  for (int i = 0; i < m; ++i) {
    ab += (i % 2 == 0) ? 'a' : 'b';
    ba += (i % 2 == 0) ? 'b' : 'a';
  }
  std::vector<std::string> seen{w};
  for (std::size_t i = 0; i < seen.size(); ++i) {
    const std::string cur = seen[i];
    for (std::size_t p = 0; p + static_cast<std::size_t>(m) <= cur.size(); ++p) {
      const std::string block = cur.substr(p, static_cast<std::size_t>(m));
      const std::string* other = block == ab ? &ba : block == ba ? &ab : nullptr;
      if (other == nullptr) continue;
      std::string next = cur;
      next.replace(p, static_cast<std::size_t>(m), *other);
      if (std::find(seen.begin(), seen.end(), next) == seen.end()) seen.push_back(next);
    }
  }
  std::sort(seen.begin(), seen.end());
  return seen;
}

// Minimum weight over all simple cycles, by exhaustive DFS. Small graphs only.
inline int brute_force_girth(const LinkGraph& g) {
  const int n = g.vertex_count();
  int best = -1;
  std::vector<bool> on(static_cast<std::size_t>(n), false);
  std::function<void(int, int, int, int)> walk = [&](int start, int v, int weight, int depth) {
    for (auto [w, len] : g.neighbours(v)) {
      if (w == start && depth >= 3) {
        if (best < 0 || weight + len < best) best = weight + len;
      }
      if (w <= start || on[static_cast<std::size_t>(w)]) continue;
      on[static_cast<std::size_t>(w)] = true;
      walk(start, w, weight + len, depth + 1);
      on[static_cast<std::size_t>(w)] = false;
    }
  };
  for (int s = 0; s < n; ++s) {
    on[static_cast<std::size_t>(s)] = true;
    walk(s, s, 0, 1);
    on[static_cast<std::size_t>(s)] = false;
  }
  return best;
}

}  // namespace relxl::testing
