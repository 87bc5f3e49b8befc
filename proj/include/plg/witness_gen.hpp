#pragma once

#include <optional>
#include <vector>

#include "plg/ping_pong.hpp"

namespace plg {

/// Two maps supported on [0, 1] whose interior fixed points interleave:
/// p_1 < q_1 < ... < p_{2k+1} < q_{2k+1}, with Fix(g) ∩ (0,1) = {p_j} and
/// Fix(f) ∩ (0,1) = {q_j}.
struct IntertwinedPair {
  PLHomeo f;
  PLHomeo g;
  std::vector<Rational> p;
  std::vector<Rational> q;
  int k = 0;
};

IntertwinedPair gen_intertwined_pair(int k);

/// f gains an extra one-sided fixed point at p_{k+1}; no power of the pair
/// passes the ping-pong check.
IntertwinedPair tampered_pair(int k);

/// Throws NotIntertwined if the fixed sets do not match the recorded points.
void check_intertwined(const IntertwinedPair& pair);

Rational neighbourhood_radius(int k);

/// Smallest N <= max_power for which (f^N, g^N) passes verify_certificate.
PingPongCertificate build_certificate(const IntertwinedPair& pair, long max_power = 64);

struct NoLawWitness {
  ReducedWord word;            // as given
  ReducedWord two_letter;      // after law_to_two_letters when needed
  int k = 0;
  long power = 1;              // N
  PingPongCertificate certificate;
  bool direct = false;         // single-syllable word: one nontrivial map moves x
  std::optional<WordImageReport> chain;
  Rational x;
  Rational image;              // W(f^N, g^N)(x) != x
};

/// Certificate-backed proof that `w` is not a law. `certificates` may hold
/// prebuilt certificates indexed by k - 1; missing ones are generated.
NoLawWitness no_law_witness(const ReducedWord& w, const std::vector<PingPongCertificate>& certificates = {});

/// Degree-one PL circle lifts (period 1) generating a free group: F has a
/// repelling fixed point at 0 and an attracting one at 1/2 (mod 1), and
/// G(x) = F(x - 1/4) + 1/4.
std::pair<PLHomeo, PLHomeo> schottky_lift_pair();

/// Ping-pong certificate of the lifted pair with A_1 = A_2 and B_1 = B_2, so
/// the same chain closes for words with any number of syllables.
PingPongCertificate schottky_certificate();

}  // namespace plg
