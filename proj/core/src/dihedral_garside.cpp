#include "relxl/dihedral_garside.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "relxl/errors.hpp"

namespace relxl {

namespace {

std::string inverse_name(const std::string& name) {
  std::string out = name;
  if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

}  // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& names) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    bool found = false;
    for (std::size_t g = 0; g < names.size() && !found; ++g) {
      if (token == names[g]) {
        w.push_back({static_cast<int>(g), false});
        found = true;
      } else if (token == inverse_name(names[g]) && inverse_name(names[g]) != names[g]) {
        w.push_back({static_cast<int>(g), true});
        found = true;
      }
    }
    if (!found) throw InputError("unknown letter '" + token + "' in word");
  }
  return w;
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  std::string out;
  for (const Letter& x : w) {
    if (!out.empty()) out += ' ';
    const std::string& name = names.at(static_cast<std::size_t>(x.gen));
    out += x.inverse ? inverse_name(name) : name;
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& x : out) x.inverse = !x.inverse;
  return out;
}

Word power(int gen, int exponent) {
  return Word(static_cast<std::size_t>(std::abs(exponent)), Letter{gen, exponent < 0});
}

Word free_reduce(const Word& w) {
  Word out;
  for (const Letter& x : w) {
    if (!out.empty() && out.back().gen == x.gen && out.back().inverse != x.inverse) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

int syllable_length(const Word& w) {
  // Blocks as (generator, exponent); a block that cancels out lets its
  // neighbours merge.
  std::vector<std::pair<int, int>> blocks;
  for (const Letter& x : w) {
    const int step = x.inverse ? -1 : 1;
    if (!blocks.empty() && blocks.back().first == x.gen) {
      blocks.back().second += step;
      if (blocks.back().second == 0) {
        blocks.pop_back();
      }
    } else {
      blocks.emplace_back(x.gen, step);
    }
  }
  return static_cast<int>(blocks.size());
}

std::size_t DihedralElementHash::operator()(const DihedralElement& g) const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(static_cast<std::int64_t>(g.delta_power));
  for (Simple x : g.factors) {
    h ^= static_cast<std::uint64_t>(x.first) << 8 | x.length;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::string encode(const DihedralElement& g) {
  std::string out(4, '\0');
  const auto k = static_cast<std::uint32_t>(g.delta_power);
  for (int i = 0; i < 4; ++i) out[static_cast<std::size_t>(i)] = static_cast<char>((k >> (8 * i)) & 0xFFU);
  for (Simple x : g.factors) out += static_cast<char>(x.first << 7 | x.length);
  return out;
}

DihedralGroup::DihedralGroup(int m, std::string a, std::string b) : m_(m), names_{std::move(a), std::move(b)} {
  if (m < 2 || m > 120) throw std::invalid_argument("dihedral label must lie in [2, 120]");
}

std::uint8_t DihedralGroup::last_letter(Simple x) const {
  return (x.length % 2 == 1) ? x.first : static_cast<std::uint8_t>(1 - x.first);
}

void DihedralGroup::tau(DihedralElement& g) const {
  if (m_ % 2 == 0) return;
  for (Simple& x : g.factors) x.first = static_cast<std::uint8_t>(1 - x.first);
}

void DihedralGroup::multiply_positive(DihedralElement& g, std::uint8_t gen) const {
  Simple y{gen, 1};
  while (true) {
    if (g.factors.empty()) {
      g.factors.push_back(y);
      return;
    }
    const Simple x = g.factors.back();
    if (y.first == last_letter(x)) {
      g.factors.push_back(y);
      return;
    }
    const int combined = x.length + y.length;
    if (combined < m_) {
      g.factors.back().length = static_cast<std::uint8_t>(combined);
      return;
    }
    // x y starts with Delta; move it to the front past the earlier factors.
    const int rest = combined - m_;
    const auto rest_first = static_cast<std::uint8_t>(m_ % 2 == 0 ? x.first : 1 - x.first);
    g.factors.pop_back();
    tau(g);
    ++g.delta_power;
    if (rest == 0) return;
    y = Simple{rest_first, static_cast<std::uint8_t>(rest)};
  }
}

void DihedralGroup::multiply(DihedralElement& g, Letter x) const {
  if (!x.inverse) {
    multiply_positive(g, static_cast<std::uint8_t>(x.gen));
    return;
  }
  // x^-1 = x* Delta^-1 with x* the alternating word of length m-1 starting
  // at the other generator.
  const auto other = static_cast<std::uint8_t>(1 - x.gen);
  for (int i = 0; i < m_ - 1; ++i) {
    multiply_positive(g, i % 2 == 0 ? other : static_cast<std::uint8_t>(x.gen));
  }
  tau(g);
  --g.delta_power;
}

DihedralElement DihedralGroup::multiply(DihedralElement g, const Word& w) const {
  for (const Letter& x : w) multiply(g, x);
  return g;
}

Word DihedralGroup::to_word(const DihedralElement& g) const {
  Word w;
  for (int i = 0; i < std::abs(g.delta_power); ++i) {
    if (g.delta_power > 0) {
      for (int j = 0; j < m_; ++j) w.push_back({j % 2, false});
    } else {
      for (int j = m_ - 1; j >= 0; --j) w.push_back({j % 2, true});
    }
  }
  for (Simple x : g.factors) {
    for (int j = 0; j < x.length; ++j) w.push_back({(x.first + j) % 2, false});
  }
  return w;
}

int DihedralGroup::size(const DihedralElement& g) const {
  int n = std::abs(g.delta_power) * m_;
  for (Simple x : g.factors) n += x.length;
  return n;
}

int DihedralGroup::exponent_sum(const DihedralElement& g) const {
  int e = g.delta_power * m_;
  for (Simple x : g.factors) e += x.length;
  return e;
}

std::array<int, 2> DihedralGroup::exponent_sums(const DihedralElement& g) const {
  std::array<int, 2> e{g.delta_power * (m_ / 2), g.delta_power * (m_ / 2)};
  if (m_ % 2 == 1) e[0] += g.delta_power;  // Delta spelled from a
  for (Simple x : g.factors) {
    e[x.first] += (x.length + 1) / 2;
    e[1 - x.first] += x.length / 2;
  }
  return e;
}

int DihedralGroup::length_lower_bound(const DihedralElement& g, const std::array<int, 2>& sums) const {
  const int e = sums[0] + sums[1];
  int bound = std::max({std::abs(e), 2 * g.sup() - e, e - 2 * g.inf()});
  if (m_ % 2 == 0) bound = std::max(bound, std::abs(sums[0]) + std::abs(sums[1]));
  return bound;
}

bool DihedralGroup::rep_less(const DihedralElement& x, int size_x, const DihedralElement& y, int size_y) {
  if (size_x != size_y) return size_x < size_y;
  if (x.delta_power != y.delta_power) return x.delta_power < y.delta_power;
  if (x.factors.size() != y.factors.size()) return x.factors.size() < y.factors.size();
  return std::lexicographical_compare(x.factors.begin(), x.factors.end(), y.factors.begin(), y.factors.end(),
                                      [](Simple p, Simple q) {
                                        return std::pair(p.first, p.length) < std::pair(q.first, q.length);
                                      });
}

DihedralElement DihedralGroup::coset_rep(const DihedralElement& g, int gen) const {
  // size(g s^j) >= |exponent sum| = |e + j|, so any element no larger than g
  // has j in [-size - e, size - e].
  const int sz = size(g);
  const int e = exponent_sum(g);
  const int lo = -sz - e;
  const int hi = sz - e;
  DihedralElement h = g;
  for (int j = 0; j > lo; --j) multiply(h, Letter{gen, true});
  DihedralElement best = g;
  int best_size = sz;
  for (int j = lo; j <= hi; ++j) {
    const int s = size(h);
    if (rep_less(h, s, best, best_size)) {
      best = h;
      best_size = s;
    }
    multiply(h, Letter{gen, false});
  }
  return best;
}

std::vector<BallElement> DihedralGroup::ball(int radius, std::size_t cap) const {
  constexpr int kNone = std::numeric_limits<int>::max() / 2;
  std::vector<BallElement> out;
  std::vector<std::array<int, 2>> ending;  // fewest syllables of a geodesic ending in a / b
  std::unordered_map<DihedralElement, std::size_t, DihedralElementHash> index;
  out.push_back({identity(), 0, 0});
  ending.push_back({kNone, kNone});
  index.emplace(identity(), 0);
  std::size_t layer_begin = 0;
  for (int d = 0; d < radius; ++d) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (int gen = 0; gen < 2; ++gen) {
        const int via = i == 0 ? 1 : std::min(ending[i][gen], ending[i][1 - gen] + 1);
        for (bool inv : {false, true}) {
          DihedralElement h = out[i].element;
          multiply(h, Letter{gen, inv});
          auto [it, inserted] = index.emplace(h, out.size());
          if (inserted) {
            if (out.size() >= cap) throw ResourceLimitError("dihedral ball enumeration", out.size());
            out.push_back({std::move(h), d + 1, 0});
            ending.push_back({kNone, kNone});
          }
          const std::size_t j = it->second;
          if (out[j].length == d + 1) ending[j][gen] = std::min(ending[j][gen], via);
        }
      }
    }
    layer_begin = layer_end;
  }
  for (std::size_t i = 1; i < out.size(); ++i) out[i].geodesic_syllables = std::min(ending[i][0], ending[i][1]);
  return out;
}

FreeGroup::FreeGroup(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("free group needs at least one generator");
}

void FreeGroup::multiply(Word& g, Letter x) const {
  if (!g.empty() && g.back().gen == x.gen && g.back().inverse != x.inverse) {
    g.pop_back();
  } else {
    g.push_back(x);
  }
}

Word FreeGroup::coset_rep(Word g, int gen) const {
  while (!g.empty() && g.back().gen == gen) g.pop_back();
  return g;
}

Answer DihedralOracle::equals(const Word& u, const Word& v) const {
  return group_.equals(u, v) ? Answer::Yes : Answer::No;
}

std::string DihedralOracle::key(const Word& w) const { return encode(group_.normal_form(w)); }

std::string DihedralOracle::coset_key(const Word& w, int gen) const {
  return encode(group_.coset_rep(group_.normal_form(w), gen));
}

std::vector<OracleBallEntry> DihedralOracle::ball(int radius, std::size_t cap) const {
  std::vector<OracleBallEntry> out;
  for (const BallElement& b : group_.ball(radius, cap)) {
    out.push_back({encode(b.element), group_.to_word(b.element), b.length});
  }
  return out;
}

namespace {

std::string free_key(const Word& w) {
  std::string out;
  for (const Letter& x : w) out += static_cast<char>(x.gen * 2 + (x.inverse ? 1 : 0));
  return out;
}

}  // namespace

Answer FreeOracle::equals(const Word& u, const Word& v) const {
  return free_reduce(u) == free_reduce(v) ? Answer::Yes : Answer::No;
}

std::string FreeOracle::key(const Word& w) const { return free_key(free_reduce(w)); }

std::string FreeOracle::coset_key(const Word& w, int gen) const {
  return free_key(group_.coset_rep(free_reduce(w), gen));
}

std::vector<OracleBallEntry> FreeOracle::ball(int radius, std::size_t cap) const {
  std::vector<OracleBallEntry> out{{free_key({}), {}, 0}};
  std::size_t layer_begin = 0;
  for (int d = 0; d < radius; ++d) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (int gen = 0; gen < group_.rank(); ++gen) {
        for (bool inv : {false, true}) {
          const Word& w = out[i].word;
          if (!w.empty() && w.back().gen == gen && w.back().inverse != inv) continue;
          if (out.size() >= cap) throw ResourceLimitError("free group ball enumeration", out.size());
          Word next = w;
          next.push_back({gen, inv});
          out.push_back({free_key(next), next, d + 1});
        }
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

CoxeterQuotientOracle::CoxeterQuotientOracle(int m, std::vector<std::string> names)
    : m_(m), names_(std::move(names)) {
  if (m < 2) throw std::invalid_argument("dihedral label must be at least 2");
}

std::pair<int, bool> CoxeterQuotientOracle::image(const Word& w) const {
  // rho = s0 s1; an element is rho^k or rho^k s0. Both generators are involutions.
  int k = 0;
  bool reflection = false;
  for (const Letter& x : w) {
    if (x.gen == 0) {
      reflection = !reflection;
    } else if (reflection) {
      k = (k + 1) % m_;
      reflection = false;
    } else {
      k = (k + m_ - 1) % m_;
      reflection = true;
    }
  }
  return {k, reflection};
}

Answer CoxeterQuotientOracle::equals(const Word& u, const Word& v) const {
  return image(u) == image(v) ? Answer::Unknown : Answer::No;
}

std::string CoxeterQuotientOracle::key(const Word&) const {
  throw std::logic_error("the Coxeter quotient engine cannot name elements");
}

std::string CoxeterQuotientOracle::coset_key(const Word&, int) const {
  throw std::logic_error("the Coxeter quotient engine cannot name cosets");
}

std::vector<OracleBallEntry> CoxeterQuotientOracle::ball(int, std::size_t) const {
  throw std::logic_error("the Coxeter quotient engine cannot enumerate balls");
}

}  // namespace relxl
