#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace plg {

/// Signed letter: +(g+1) is generator g, -(g+1) its inverse.
using Letter = int;

constexpr Letter make_letter(int generator, int sign) { return sign > 0 ? generator + 1 : -(generator + 1); }
constexpr int letter_generator(Letter l) { return (l > 0 ? l : -l) - 1; }
constexpr int letter_sign(Letter l) { return l > 0 ? 1 : -1; }

struct Syllable {
  int generator = 0;
  long exponent = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// A freely reduced word stored as maximal syllables g^k (adjacent syllables
/// use distinct generators, no zero exponents). The empty word is the identity.
class ReducedWord {
 public:
  ReducedWord() = default;
  explicit ReducedWord(int alphabet_size) : alphabet_(alphabet_size) {}

  /// Reduces an arbitrary syllable sequence (zero exponents and cancellations allowed).
  static ReducedWord from_syllables(std::span<const Syllable> syllables, int alphabet_size);
  static ReducedWord generator(int index, int alphabet_size, long exponent = 1);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  int alphabet_size() const { return alphabet_; }
  bool is_identity() const { return syllables_.empty(); }
  std::size_t num_syllables() const { return syllables_.size(); }
  /// Number of letters.
  long length() const;
  std::vector<Letter> letters() const;

  ReducedWord inverse() const;
  ReducedWord with_alphabet(int alphabet_size) const;

  friend ReducedWord operator*(const ReducedWord& lhs, const ReducedWord& rhs);
  friend bool operator==(const ReducedWord& lhs, const ReducedWord& rhs) {
    return lhs.syllables_ == rhs.syllables_;
  }
  /// Shortlex: by length, then lexicographically with a < a^-1 < b < b^-1 < ...
  friend std::strong_ordering operator<=>(const ReducedWord& lhs, const ReducedWord& rhs);

  bool all_exponents_positive() const;
  bool all_exponents_negative() const;
  bool is_mixed_sign() const { return !is_identity() && !all_exponents_positive() && !all_exponents_negative(); }
  int max_generator() const;

 private:
  std::vector<Syllable> syllables_;
  int alphabet_ = 2;
};

ReducedWord reduce(std::span<const Letter> raw, int alphabet_size);
ReducedWord power(const ReducedWord& w, long n);

/// Naive letter-level reduction with an explicit stack; kept separate from the
/// syllable path so tests can use it as an oracle.
std::vector<Letter> naive_reduce_letters(std::span<const Letter> raw);

/// Generator names: a, b, c, d, f, g, ... ('e' is reserved for the identity).
char generator_name(int index);
int generator_index(char name);

/// Parses text such as "a^-1 b a^2", "e", "aBAb" (uppercase = inverse).
/// The alphabet is max(min_alphabet, 1 + highest generator used).
ReducedWord parse_word(std::string_view text, int min_alphabet = 2);
std::string to_string(const ReducedWord& w);

ReducedWord commutator(const ReducedWord& u, const ReducedWord& v);
/// [u,v]_1 = u v u^-1 v^-1, [u,v]_{k+1} = [[u,v]_k, v]_1.
ReducedWord engel(const ReducedWord& u, const ReducedWord& v, int n);

/// Substitutes x_i -> a^-i b a^i and reduces. Throws EmptyWord.
ReducedWord law_to_two_letters(const ReducedWord& w);

/// Conjugate a^c w a^-c of a two-letter word written as
/// a^{n_k} b^{m_{k-1}} ... b^{m_1} a^{n_1} with every exponent nonzero.
struct SyllableForm {
  int k = 0;
  std::vector<long> a_exponents;  // n_1 .. n_k (n_1 acts first)
  std::vector<long> b_exponents;  // m_1 .. m_{k-1}
  long conjugator_power = 0;      // c
  ReducedWord conjugated;         // a^c w a^-c

  /// Rebuilds w = a^-c (conjugated) a^c.
  ReducedWord original() const;
};

/// Throws PureBPower if w has no a-syllable, EmptyWord for the identity.
SyllableForm syllable_normal_form(const ReducedWord& w);

/// w = W1 a^-n W2 after an optional a<->b swap, W2 the maximal all-positive suffix.
struct ConstructionSplit {
  ReducedWord w1;
  long n = 0;
  ReducedWord w2;
  bool swapped = false;

  /// The (possibly swapped) word W1 a^-n W2.
  ReducedWord reassemble() const;
};

ReducedWord swap_letters(const ReducedWord& w);
/// Throws NotMixedSign.
ConstructionSplit decompose_for_construction(const ReducedWord& w);

/// Every reduced word of length <= radius, in shortlex order.
std::vector<ReducedWord> enumerate_ball(int radius, int alphabet_size);
/// 1 + sum_{l=1..R} 2m (2m-1)^{l-1}.
std::uint64_t ball_size(int radius, int alphabet_size);

/// Uniform letters subject to no immediate cancellation.
ReducedWord random_reduced_word(std::mt19937_64& rng, int length, int alphabet_size);
/// Random reduced word of length in [min_length, max_length] with mixed exponent signs.
ReducedWord random_mixed_sign_word(std::mt19937_64& rng, int min_length, int max_length, int alphabet_size);

}  // namespace plg
