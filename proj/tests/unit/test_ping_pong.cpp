#include "doctest.h"

#include "../support/brute_force.hpp"
#include "plg/error.hpp"
#include "plg/witness_gen.hpp"

using namespace plg;

namespace {

Rational q(const char* s) { return parse_rational(s); }
ClosedInterval iv(const char* lo, const char* hi) { return {parse_ext_rational(lo), parse_ext_rational(hi)}; }

PingPongCertificate translation_certificate(IntervalSet b) {
  return PingPongCertificate{PLHomeo::translation(1), PLHomeo::identity(), 1,
                             {IntervalSet({iv("-1/4", "1/4")})}, {std::move(b)}, 1};
}

}  // namespace

TEST_CASE("interval sets normalize and compare") {
  const IntervalSet s({iv("2", "3"), iv("0", "1"), iv("1", "3/2")});
  REQUIRE(s.components().size() == 2);
  CHECK(s.components()[0] == iv("0", "3/2"));
  CHECK(s.contains(iv("1/2", "3/2")));
  CHECK_FALSE(s.contains(iv("1", "2")));
  CHECK(s.contains(q("5/2")));
  CHECK(s.intersects(IntervalSet({iv("3", "inf")})));
  CHECK_FALSE(s.intersects(IntervalSet({iv("-inf", "-1/100")})));

  const IntervalSet per({iv("15/16", "17/16")}, Rational(1));
  CHECK(per.contains(q("-1")));
  CHECK(per.contains(iv("191/16", "193/16")));
  CHECK_FALSE(per.contains(iv("1/2", "9/16")));
  CHECK(per.intersects(IntervalSet({iv("5", "5")})));
  CHECK_FALSE(per.intersects(IntervalSet({iv("1/8", "7/8")})));
}

TEST_CASE("translation certificate") {
  const IntervalSet b({iv("-inf", "-3/4"), iv("3/4", "inf")});
  const auto good = translation_certificate(b);
  CHECK(verify_certificate(good).ok());
  CHECK(testing::brute_force_certificate(good).empty());

  const auto bad = translation_certificate(IntervalSet({iv("3/4", "10")}));
  const auto r = verify_certificate(bad);
  REQUIRE_FALSE(r.ok());
  CHECK(r.failure->kind == CertificateFailure::Kind::MapF);
  CHECK(r.failure->index == 1);
  CHECK(r.failure->component == 0);
  // positive powers run off to +inf as well, beyond 10
  CHECK(r.failure->direction == PowerDirection::Positive);
  CHECK_FALSE(testing::brute_force_certificate(bad).empty());

  const auto img = word_image(good, parse_word("a^3"));
  CHECK(img.conjugated_witness == 0);
  CHECK(img.conjugated_image == 3);
  CHECK(b.contains(img.image));

  CHECK_THROWS_AS(word_image(good, parse_word("a b a^-1 b^-1")), Error);
  try {
    word_image(good, parse_word("a b a^-1 b^-1"));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SyllableOverflow);
  }
}

TEST_CASE("from interleaved points") {
  const std::vector<Rational> p{0, q("1/2"), 1};
  const std::vector<Rational> qq{q("1/4"), q("3/4"), q("9/8")};
  const auto c = from_interleaved_points(PLHomeo::identity(), PLHomeo::identity(), p, qq, q("1/16"));
  CHECK(c.A[0] == IntervalSet({iv("7/16", "9/16")}));
  CHECK(c.B[0] == IntervalSet({iv("3/16", "5/16"), iv("11/16", "13/16")}));

  try {
    from_interleaved_points(PLHomeo::identity(), PLHomeo::identity(), qq, p, q("1/16"));
    FAIL("expected NotIntertwined");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotIntertwined);
  }
  try {
    from_interleaved_points(PLHomeo::identity(), PLHomeo::identity(), p, qq, q("1/8"));
    FAIL("expected OverlappingNeighborhoods");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OverlappingNeighborhoods);
  }
}

TEST_CASE("generated certificates are sound") {
  for (int k = 1; k <= 3; ++k) {
    const auto c = build_certificate(gen_intertwined_pair(k));
    REQUIRE(verify_certificate(c).ok());
    CHECK(testing::brute_force_certificate(c).empty());

    // enlarging the targets keeps the certificate valid
    auto bigger = c;
    for (std::size_t i = 0; i < bigger.B.size(); ++i) {
      std::vector<ClosedInterval> comps;
      for (const auto& x : bigger.B[i].components()) {
        comps.push_back({ExtRational(Rational(x.lo.value() - q("1/1000"))), ExtRational(Rational(x.hi.value() + q("1/1000")))});
      }
      bigger.B[i] = IntervalSet(comps);
    }
    for (std::size_t i = 1; i < bigger.A.size(); ++i) {
      std::vector<ClosedInterval> comps;
      for (const auto& x : bigger.A[i].components()) {
        comps.push_back({ExtRational(Rational(x.lo.value() - q("1/1000"))), ExtRational(Rational(x.hi.value() + q("1/1000")))});
      }
      bigger.A[i] = IntervalSet(comps);
    }
    CHECK(verify_certificate(bigger).ok());
  }
}

TEST_CASE("word image on a k = 5 certificate") {
  const auto c = build_certificate(gen_intertwined_pair(5));
  const ReducedWord w = engel(parse_word("a"), parse_word("b"), 2);
  const auto r = word_image(c, w);
  CHECK(r.form.k == 5);
  CHECK(r.chain.size() == r.form.conjugated.num_syllables());
  CHECK(c.B[4].contains(r.conjugated_image));
  const Assignment act{c.f, c.g};
  CHECK(apply_word(w, act, r.witness) != r.witness);
  CHECK(evaluate_word(w, act)(r.witness) == r.image);
}

TEST_CASE("periodic certificate of the lifted Schottky pair") {
  const auto c = schottky_certificate();
  CHECK(verify_certificate(c).ok());
  CHECK(testing::brute_force_certificate(c).empty());
  // any number of a-syllables closes because A_1 = A_2 and B_1 = B_2
  auto big = c;
  big.k = 6;
  big.A.assign(6, c.A[0]);
  big.B.assign(6, c.B[0]);
  CHECK(verify_certificate(big).ok());
  const auto r = word_image(big, engel(parse_word("a"), parse_word("b"), 2));
  CHECK(r.image != r.witness);
}
