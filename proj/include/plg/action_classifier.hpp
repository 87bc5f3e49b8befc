#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plg/pl_homeo.hpp"
#include "plg/word.hpp"

namespace plg {

struct MarkedAction {
  std::vector<PLHomeo> generators;
  int depth = 8;  // word-length bound L for the searches
};

enum class Verdict { TypeI, TypeII, TypeIII, GlobalFixedPoint, Inconclusive };
const char* verdict_name(Verdict v);

struct DiscreteOrbitWitness {
  Rational base;  // x0
  Rational step;  // the set x0 + step Z is invariant
};

struct TranslationWitness {
  std::vector<Rational> numbers;  // per generator
};

struct ExpansionWitness {
  Rational c, c_prime, a, b, a_prime, b_prime;
  ReducedWord word;
  Rational image_a;  // word(a) < a'
  Rational image_b;  // word(b) > b'
};

struct Classification {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Rational> fixed_point;
  std::optional<DiscreteOrbitWitness> discrete;
  std::optional<TranslationWitness> translations;
  std::optional<Rational> period;
  std::optional<ExpansionWitness> expansion;
  std::vector<std::string> trace;
};

Classification classify(const MarkedAction& act);

std::optional<Rational> common_fixed_point(const std::vector<PLHomeo>& generators);
std::optional<DiscreteOrbitWitness> find_discrete_orbit(const MarkedAction& act);
std::optional<TranslationWitness> additive_translation_numbers(const std::vector<PLHomeo>& generators);
std::optional<Rational> common_period(const std::vector<PLHomeo>& generators);

/// Shortlex-first word of length <= act.depth with g(a) < a' and g(b) > b'.
/// Requires a < c < c' < b and a' < b'.
std::optional<ExpansionWitness> find_expansion_witness(const MarkedAction& act, const Rational& c,
                                                       const Rational& c_prime, const Rational& a, const Rational& b,
                                                       const Rational& a_prime, const Rational& b_prime);

}  // namespace plg
