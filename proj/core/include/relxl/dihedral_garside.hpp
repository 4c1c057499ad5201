#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace relxl {

/// A generator or its inverse. Generators are numbered from 0.
struct Letter {
  int gen = 0;
  bool inverse = false;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Parses whitespace-separated tokens; a generator's name is the letter, the
/// name with its first character upper-cased is the inverse ("a b A b").
/// Throws InputError on an unknown token.
Word parse_word(std::string_view text, const std::vector<std::string>& names);
std::string format_word(const Word& w, const std::vector<std::string>& names);

Word inverse(const Word& w);
Word power(int gen, int exponent);
Word free_reduce(const Word& w);

/// Maximal blocks of one generator after cancelling inside each block.
/// Blocks that cancel to nothing disappear and their neighbours merge.
int syllable_length(const Word& w);

/// A proper alternating simple element: `length` letters starting at
/// generator `first`, 1 <= length < m.
struct Simple {
  std::uint8_t first = 0;
  std::uint8_t length = 0;

  friend bool operator==(const Simple&, const Simple&) = default;
};

/// Left normal form Delta^k x1 ... xr with every (xi, xi+1) left-weighted.
struct DihedralElement {
  int delta_power = 0;
  std::vector<Simple> factors;

  int inf() const { return delta_power; }
  int sup() const { return delta_power + static_cast<int>(factors.size()); }
  bool is_identity() const { return delta_power == 0 && factors.empty(); }

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
};

struct DihedralElementHash {
  std::size_t operator()(const DihedralElement& g) const noexcept;
};

/// Compact byte encoding, equal iff the elements are equal.
std::string encode(const DihedralElement& g);

struct BallElement {
  DihedralElement element;
  int length = 0;  // word length
  /// Fewest syllables over geodesic words for g.
  int geodesic_syllables = 0;
};

/// The dihedral Artin group <a, b | prod(a,b;m) = prod(b,a;m)>.
class DihedralGroup {
 public:
  /// Throws std::invalid_argument unless 2 <= m <= 120.
  explicit DihedralGroup(int m, std::string a = "a", std::string b = "b");

  int label() const { return m_; }
  const std::vector<std::string>& names() const { return names_; }

  DihedralElement identity() const { return {}; }
  void multiply(DihedralElement& g, Letter x) const;
  DihedralElement multiply(DihedralElement g, const Word& w) const;
  DihedralElement normal_form(const Word& w) const { return multiply(identity(), w); }
  bool equals(const Word& u, const Word& v) const { return normal_form(u) == normal_form(v); }

  /// Delta^k spelled out, followed by the factors.
  Word to_word(const DihedralElement& g) const;
  /// Letters of to_word(g); an upper bound for the word length.
  int size(const DihedralElement& g) const;
  /// Exponent sum over all letters.
  int exponent_sum(const DihedralElement& g) const;
  /// Exponent sums of a and of b separately. Only invariants when m is even.
  std::array<int, 2> exponent_sums(const DihedralElement& g) const;
  /// A lower bound for the word length: a geodesic word has at least sup
  /// positive letters and at least -inf negative ones, and at least as many
  /// letters as any abelianised exponent.
  int length_lower_bound(const DihedralElement& g) const { return length_lower_bound(g, exponent_sums(g)); }
  /// Same, with the per-generator exponent sums of any word for g supplied.
  int length_lower_bound(const DihedralElement& g, const std::array<int, 2>& sums) const;

  /// Representative of the coset g<gen>: the element of least size, ties
  /// broken by Delta-power, then factor count, then factor sequence.
  DihedralElement coset_rep(const DihedralElement& g, int gen) const;

  /// Every element of word length <= radius, in BFS order. Throws
  /// ResourceLimitError once more than `cap` elements are found.
  std::vector<BallElement> ball(int radius, std::size_t cap = 1'000'000) const;

  std::string format(const DihedralElement& g) const { return format_word(to_word(g), names_); }

 private:
  std::uint8_t last_letter(Simple x) const;
  void multiply_positive(DihedralElement& g, std::uint8_t gen) const;
  void tau(DihedralElement& g) const;
  static bool rep_less(const DihedralElement& x, int size_x, const DihedralElement& y, int size_y);

  int m_;
  std::vector<std::string> names_;
};

/// Free group on `rank` generators, elements stored as reduced words.
class FreeGroup {
 public:
  explicit FreeGroup(std::vector<std::string> names);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  void multiply(Word& g, Letter x) const;
  Word normal_form(const Word& w) const { return free_reduce(w); }
  /// Strips trailing powers of gen.
  Word coset_rep(Word g, int gen) const;

 private:
  std::vector<std::string> names_;
};

enum class Answer { No, Yes, Unknown };

struct OracleBallEntry {
  std::string key;
  Word word;  // normal-form spelling, not necessarily geodesic
  int length = 0;
};

/// Word problem contract used by link development. Exact engines decide
/// equality; the finite quotient engine can only tell elements apart.
class WordProblemOracle {
 public:
  virtual ~WordProblemOracle() = default;

  virtual std::string engine() const = 0;
  virtual bool exact() const = 0;
  virtual const std::vector<std::string>& names() const = 0;
  virtual Answer equals(const Word& u, const Word& v) const = 0;
  /// Canonical key; equal keys iff equal elements (exact engines only).
  virtual std::string key(const Word& w) const = 0;
  /// Canonical key of the coset w<gen>.
  virtual std::string coset_key(const Word& w, int gen) const = 0;
  virtual std::vector<OracleBallEntry> ball(int radius, std::size_t cap) const = 0;
};

class DihedralOracle final : public WordProblemOracle {
 public:
  explicit DihedralOracle(DihedralGroup group) : group_(std::move(group)) {}

  const DihedralGroup& group() const { return group_; }
  std::string engine() const override { return "dihedral-garside"; }
  bool exact() const override { return true; }
  const std::vector<std::string>& names() const override { return group_.names(); }
  Answer equals(const Word& u, const Word& v) const override;
  std::string key(const Word& w) const override;
  std::string coset_key(const Word& w, int gen) const override;
  std::vector<OracleBallEntry> ball(int radius, std::size_t cap) const override;

 private:
  DihedralGroup group_;
};

class FreeOracle final : public WordProblemOracle {
 public:
  explicit FreeOracle(FreeGroup group) : group_(std::move(group)) {}

  const FreeGroup& group() const { return group_; }
  std::string engine() const override { return "free"; }
  bool exact() const override { return true; }
  const std::vector<std::string>& names() const override { return group_.names(); }
  Answer equals(const Word& u, const Word& v) const override;
  std::string key(const Word& w) const override;
  std::string coset_key(const Word& w, int gen) const override;
  std::vector<OracleBallEntry> ball(int radius, std::size_t cap) const override;

 private:
  FreeGroup group_;
};

/// Image in the finite Coxeter group I2(m) of order 2m. Different images
/// prove the words differ; equal images prove nothing. ball() and the key
/// functions throw std::logic_error.
class CoxeterQuotientOracle final : public WordProblemOracle {
 public:
  CoxeterQuotientOracle(int m, std::vector<std::string> names = {"a", "b"});

  std::string engine() const override { return "coxeter-quotient"; }
  bool exact() const override { return false; }
  const std::vector<std::string>& names() const override { return names_; }
  Answer equals(const Word& u, const Word& v) const override;
  std::string key(const Word& w) const override;
  std::string coset_key(const Word& w, int gen) const override;
  std::vector<OracleBallEntry> ball(int radius, std::size_t cap) const override;

  /// Element of I2(m) as (rotation r in Z/m, reflection flag): r^k or r^k s.
  std::pair<int, bool> image(const Word& w) const;

 private:
  int m_;
  std::vector<std::string> names_;
};

}  // namespace relxl
