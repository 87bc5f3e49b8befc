#include "doctest.h"

#include <random>

#include "../support/brute_force.hpp"
#include "plg/error.hpp"
#include "plg/witness_gen.hpp"

using namespace plg;

TEST_CASE("intertwined pairs") {
  const auto p1 = gen_intertwined_pair(1);
  CHECK(p1.p == std::vector<Rational>{Rational(1, 4), Rational(1, 2), Rational(3, 4)});
  for (int k = 1; k <= 5; ++k) {
    const auto pair = gen_intertwined_pair(k);
    CHECK(pair.p.size() == static_cast<std::size_t>(2 * k + 1));
    // independent check: the two grids never meet and each listed point is fixed with a sign change
    for (std::size_t j = 0; j < pair.p.size(); ++j) {
      const Rational eps = Rational(1) / (1000 * (k + 1));
      CHECK(pair.g(pair.p[j]) == pair.p[j]);
      CHECK(pair.f(pair.q[j]) == pair.q[j]);
      CHECK(pair.f(pair.p[j]) != pair.p[j]);
      CHECK(pair.g(pair.q[j]) != pair.q[j]);
      CHECK(sign(pair.g(pair.p[j] - eps) - (pair.p[j] - eps)) == -sign(pair.g(pair.p[j] + eps) - (pair.p[j] + eps)));
      CHECK(sign(pair.f(pair.q[j] - eps) - (pair.q[j] - eps)) == -sign(pair.f(pair.q[j] + eps) - (pair.q[j] + eps)));
    }
    CHECK(pair.f(Rational(-3)) == -3);
    CHECK(pair.g(Rational(5, 4)) == Rational(5, 4));
  }
}

TEST_CASE("certificates for k = 1..5") {
  for (int k = 1; k <= 5; ++k) {
    const auto c = build_certificate(gen_intertwined_pair(k));
    CHECK(c.k == k);
    CHECK(c.power >= 1);
    CHECK(c.power <= 64);
    CHECK(verify_certificate(c).ok());
    // minimality: one power less fails
    if (c.power > 1) {
      const auto pair = gen_intertwined_pair(k);
      auto smaller = from_interleaved_points(power(pair.f, c.power - 1), power(pair.g, c.power - 1), pair.p, pair.q,
                                             neighbourhood_radius(k));
      CHECK_FALSE(verify_certificate(smaller).ok());
    }
  }
}

TEST_CASE("tampered pair is rejected for every power") {
  const auto bad = tampered_pair(2);
  CHECK_THROWS_AS(check_intertwined(bad), Error);
  try {
    build_certificate(bad, 64);
    FAIL("expected SearchExhausted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SearchExhausted);
  }
}

TEST_CASE("no-law witnesses") {
  const auto comm = no_law_witness(parse_word("a b a^-1 b^-1"));
  CHECK(comm.k == 3);
  CHECK(comm.certificate.k == 3);
  const Assignment act{comm.certificate.f, comm.certificate.g};
  CHECK(apply_word(comm.two_letter, act, comm.x) == comm.image);
  CHECK(comm.image != comm.x);

  const auto e4 = no_law_witness(engel(parse_word("a"), parse_word("b"), 4));
  const Assignment act4{e4.certificate.f, e4.certificate.g};
  CHECK(apply_word(e4.two_letter, act4, e4.x) != e4.x);

  const auto pw = no_law_witness(parse_word("a^10"));
  CHECK(pw.direct);
  CHECK(apply_power(pw.certificate.f, 10, pw.x) != pw.x);

  const auto bb = no_law_witness(parse_word("b^3"));
  CHECK(bb.direct);

  const auto three = no_law_witness(parse_word("a b c a^-1"));
  CHECK(three.two_letter == law_to_two_letters(parse_word("a b c a^-1")));

  CHECK_THROWS_AS(no_law_witness(parse_word("e")), Error);
}

TEST_CASE("random words with few a-syllables") {
  std::vector<PingPongCertificate> certs;
  for (int k = 1; k <= 3; ++k) certs.push_back(build_certificate(gen_intertwined_pair(k)));
  std::mt19937_64 rng(99);
  int tried = 0;
  while (tried < 60) {
    const ReducedWord w = random_reduced_word(rng, 1 + static_cast<int>(rng() % 10), 2);
    if (w.is_identity()) continue;
    const int k = w.num_syllables() == 1 ? 1 : syllable_normal_form(w).k;
    if (k > 3) continue;
    ++tried;
    const auto r = no_law_witness(w, certs);
    const Assignment act{r.certificate.f, r.certificate.g};
    CHECK(evaluate_word(w, act)(r.x) != r.x);
  }
}
