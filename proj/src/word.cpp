#include "plg/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "plg/error.hpp"

namespace plg {

namespace {

int letter_rank(Letter l) { return 2 * letter_generator(l) + (l < 0 ? 1 : 0); }

}  // namespace

ReducedWord ReducedWord::from_syllables(std::span<const Syllable> syllables, int alphabet_size) {
  ReducedWord out(alphabet_size);
  auto& stack = out.syllables_;
  for (const Syllable& s : syllables) {
    if (s.exponent == 0) continue;
    if (s.generator < 0 || s.generator >= alphabet_size) {
      throw Error(ErrorCode::InvalidArgument, "generator index out of alphabet");
    }
    if (!stack.empty() && stack.back().generator == s.generator) {
      stack.back().exponent += s.exponent;
      if (stack.back().exponent == 0) stack.pop_back();
    } else {
      stack.push_back(s);
    }
  }
  return out;
}

ReducedWord ReducedWord::generator(int index, int alphabet_size, long exponent) {
  const Syllable s{index, exponent};
  return from_syllables(std::span(&s, 1), alphabet_size);
}

long ReducedWord::length() const {
  long n = 0;
  for (const auto& s : syllables_) n += std::labs(s.exponent);
  return n;
}

std::vector<Letter> ReducedWord::letters() const {
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(length()));
  for (const auto& s : syllables_) {
    const Letter l = make_letter(s.generator, s.exponent > 0 ? 1 : -1);
    for (long i = 0; i < std::labs(s.exponent); ++i) out.push_back(l);
  }
  return out;
}

ReducedWord ReducedWord::inverse() const {
  ReducedWord out(alphabet_);
  out.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
    out.syllables_.push_back({it->generator, -it->exponent});
  }
  return out;
}

ReducedWord ReducedWord::with_alphabet(int alphabet_size) const {
  if (max_generator() >= alphabet_size) throw Error(ErrorCode::InvalidArgument, "word does not fit alphabet");
  ReducedWord out = *this;
  out.alphabet_ = alphabet_size;
  return out;
}

ReducedWord operator*(const ReducedWord& lhs, const ReducedWord& rhs) {
  std::vector<Syllable> all = lhs.syllables_;
  all.insert(all.end(), rhs.syllables_.begin(), rhs.syllables_.end());
  return ReducedWord::from_syllables(all, std::max(lhs.alphabet_, rhs.alphabet_));
}

std::strong_ordering operator<=>(const ReducedWord& lhs, const ReducedWord& rhs) {
  if (auto c = lhs.length() <=> rhs.length(); c != 0) return c;
  const auto a = lhs.letters();
  const auto b = rhs.letters();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = letter_rank(a[i]) <=> letter_rank(b[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool ReducedWord::all_exponents_positive() const {
  return std::all_of(syllables_.begin(), syllables_.end(), [](const Syllable& s) { return s.exponent > 0; });
}

bool ReducedWord::all_exponents_negative() const {
  return std::all_of(syllables_.begin(), syllables_.end(), [](const Syllable& s) { return s.exponent < 0; });
}

int ReducedWord::max_generator() const {
  int m = -1;
  for (const auto& s : syllables_) m = std::max(m, s.generator);
  return m;
}

ReducedWord reduce(std::span<const Letter> raw, int alphabet_size) {
  if (alphabet_size < 1) throw Error(ErrorCode::InvalidArgument, "alphabet size must be positive");
  std::vector<Syllable> syl;
  syl.reserve(raw.size());
  for (Letter l : raw) {
    if (l == 0) throw Error(ErrorCode::InvalidArgument, "letter 0 is not a generator");
    syl.push_back({letter_generator(l), letter_sign(l)});
  }
  return ReducedWord::from_syllables(syl, alphabet_size);
}

ReducedWord power(const ReducedWord& w, long n) {
  const ReducedWord base = n >= 0 ? w : w.inverse();
  std::vector<Syllable> all;
  for (long i = 0; i < std::labs(n); ++i) {
    all.insert(all.end(), base.syllables().begin(), base.syllables().end());
  }
  return ReducedWord::from_syllables(all, w.alphabet_size());
}

std::vector<Letter> naive_reduce_letters(std::span<const Letter> raw) {
  std::vector<Letter> stack;
  for (Letter l : raw) {
    if (!stack.empty() && stack.back() == -l) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return stack;
}

char generator_name(int index) {
  if (index < 0 || index >= 25) throw Error(ErrorCode::InvalidArgument, "generator index out of range");
  return static_cast<char>(index < 4 ? 'a' + index : 'a' + index + 1);
}

int generator_index(char name) {
  const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(name)));
  if (c < 'a' || c > 'z' || c == 'e') return -1;
  return c < 'e' ? c - 'a' : c - 'a' - 1;
}

ReducedWord parse_word(std::string_view text, int min_alphabet) {
  std::vector<Syllable> syl;
  int max_gen = -1;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorCode::MalformedInput, "word '" + std::string(text) + "' at offset " + std::to_string(i) + ": " + why);
  };
  skip_ws();
  while (i < text.size()) {
    const char c = text[i];
    if (c == 'e') {
      ++i;
    } else {
      const int g = generator_index(c);
      if (g < 0) throw fail("expected a generator letter");
      long exponent = std::isupper(static_cast<unsigned char>(c)) ? -1 : 1;
      ++i;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        const std::size_t digits = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == digits) throw fail("expected an integer exponent");
        exponent *= std::stol(std::string(text.substr(start, i - start)));
      }
      syl.push_back({g, exponent});
      max_gen = std::max(max_gen, g);
    }
    skip_ws();
  }
  return ReducedWord::from_syllables(syl, std::max(min_alphabet, max_gen + 1));
}

std::string to_string(const ReducedWord& w) {
  if (w.is_identity()) return "e";
  std::ostringstream out;
  bool first = true;
  for (const auto& s : w.syllables()) {
    if (!first) out << ' ';
    first = false;
    out << generator_name(s.generator);
    if (s.exponent != 1) out << '^' << s.exponent;
  }
  return out.str();
}

ReducedWord commutator(const ReducedWord& u, const ReducedWord& v) {
  return u * v * u.inverse() * v.inverse();
}

ReducedWord engel(const ReducedWord& u, const ReducedWord& v, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "Engel index must be >= 1");
  ReducedWord w = commutator(u, v);
  for (int i = 1; i < n; ++i) w = commutator(w, v);
  return w;
}

ReducedWord law_to_two_letters(const ReducedWord& w) {
  if (w.is_identity()) throw Error(ErrorCode::EmptyWord, "a law must be a nonempty word");
  std::vector<Syllable> out;
  for (const auto& s : w.syllables()) {
    const long i = s.generator;
    out.push_back({0, -i});
    out.push_back({1, s.exponent});
    out.push_back({0, i});
  }
  return ReducedWord::from_syllables(out, 2);
}

ReducedWord SyllableForm::original() const {
  const ReducedWord a = ReducedWord::generator(0, 2);
  return power(a, -conjugator_power) * conjugated * power(a, conjugator_power);
}

SyllableForm syllable_normal_form(const ReducedWord& w) {
  if (w.is_identity()) throw Error(ErrorCode::EmptyWord, "syllable form of the identity");
  if (w.max_generator() > 1) throw Error(ErrorCode::InvalidArgument, "syllable form needs a two-letter word");
  const bool has_a = std::any_of(w.syllables().begin(), w.syllables().end(),
                                 [](const Syllable& s) { return s.generator == 0; });
  if (!has_a) throw Error(ErrorCode::PureBPower, "word '" + to_string(w) + "' has no a-syllable");

  const ReducedWord a = ReducedWord::generator(0, 2);
  const long bound = w.length();
  for (long mag = 0; mag <= bound; ++mag) {
    for (long c : {mag, -mag}) {
      if (mag == 0 && c < 0) continue;
      ReducedWord conj = power(a, c) * w.with_alphabet(2) * power(a, -c);
      const auto& s = conj.syllables();
      if (s.empty() || s.front().generator != 0 || s.back().generator != 0) continue;
      SyllableForm form;
      form.conjugator_power = c;
      form.conjugated = conj;
      for (auto it = s.rbegin(); it != s.rend(); ++it) {
        (it->generator == 0 ? form.a_exponents : form.b_exponents).push_back(it->exponent);
      }
      form.k = static_cast<int>(form.a_exponents.size());
      return form;
    }
  }
  // Unreachable for words with an a-syllable; kept as a hard failure.
  throw Error(ErrorCode::SearchExhausted, "no conjugator found for '" + to_string(w) + "'");
}

ReducedWord swap_letters(const ReducedWord& w) {
  if (w.max_generator() > 1) throw Error(ErrorCode::InvalidArgument, "letter swap needs a two-letter word");
  std::vector<Syllable> s = w.syllables();
  for (auto& x : s) x.generator = 1 - x.generator;
  return ReducedWord::from_syllables(s, 2);
}

ReducedWord ConstructionSplit::reassemble() const {
  return w1 * ReducedWord::generator(0, 2, -n) * w2;
}

ConstructionSplit decompose_for_construction(const ReducedWord& w) {
  if (!w.is_mixed_sign()) {
    throw Error(ErrorCode::NotMixedSign, "word '" + to_string(w) + "' does not carry both exponent signs");
  }
  if (w.max_generator() > 1) throw Error(ErrorCode::InvalidArgument, "construction needs a two-letter word");
  const auto& s = w.syllables();
  std::size_t split = s.size();
  while (split > 0 && s[split - 1].exponent > 0) --split;
  // split > 0 since the word has a negative syllable.
  const std::size_t neg = split - 1;

  ConstructionSplit out;
  out.swapped = s[neg].generator != 0;
  const ReducedWord ww = out.swapped ? swap_letters(w) : w.with_alphabet(2);
  const auto& t = ww.syllables();
  out.n = -t[neg].exponent;
  out.w1 = ReducedWord::from_syllables(std::span(t.data(), neg), 2);
  out.w2 = ReducedWord::from_syllables(std::span(t.data() + neg + 1, t.size() - neg - 1), 2);
  return out;
}

std::vector<ReducedWord> enumerate_ball(int radius, int alphabet_size) {
  if (radius < 0) throw Error(ErrorCode::InvalidArgument, "radius must be nonnegative");
  std::vector<Letter> order;
  for (int g = 0; g < alphabet_size; ++g) {
    order.push_back(make_letter(g, 1));
    order.push_back(make_letter(g, -1));
  }
  std::vector<std::vector<Letter>> layer{{}};
  std::vector<ReducedWord> out{ReducedWord(alphabet_size)};
  for (int len = 1; len <= radius; ++len) {
    std::vector<std::vector<Letter>> next;
    next.reserve(layer.size() * order.size());
    for (const auto& w : layer) {
      for (Letter l : order) {
        if (!w.empty() && w.back() == -l) continue;
        auto ext = w;
        ext.push_back(l);
        out.push_back(reduce(ext, alphabet_size));
        next.push_back(std::move(ext));
      }
    }
    layer = std::move(next);
  }
  return out;
}

std::uint64_t ball_size(int radius, int alphabet_size) {
  std::uint64_t total = 1;
  std::uint64_t sphere = 2ull * static_cast<std::uint64_t>(alphabet_size);
  for (int l = 1; l <= radius; ++l) {
    total += sphere;
    sphere *= 2ull * static_cast<std::uint64_t>(alphabet_size) - 1;
  }
  return total;
}

ReducedWord random_reduced_word(std::mt19937_64& rng, int length, int alphabet_size) {
  std::uniform_int_distribution<int> pick(0, 2 * alphabet_size - 1);
  std::vector<Letter> letters;
  while (static_cast<int>(letters.size()) < length) {
    const int r = pick(rng);
    const Letter l = make_letter(r / 2, r % 2 == 0 ? 1 : -1);
    if (!letters.empty() && letters.back() == -l) continue;
    letters.push_back(l);
  }
  return reduce(letters, alphabet_size);
}

ReducedWord random_mixed_sign_word(std::mt19937_64& rng, int min_length, int max_length, int alphabet_size) {
  if (min_length < 2) min_length = 2;
  std::uniform_int_distribution<int> len(min_length, max_length);
  for (;;) {
    ReducedWord w = random_reduced_word(rng, len(rng), alphabet_size);
    if (w.is_mixed_sign()) return w;
  }
}

}  // namespace plg
