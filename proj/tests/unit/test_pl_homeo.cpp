#include "doctest.h"

#include <random>

#include "plg/pl_homeo.hpp"

using namespace plg;

namespace {

Rational q(const char* s) { return parse_rational(s); }

Rational fr(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

Rational random_rational(std::mt19937_64& rng, int span = 8) {
  std::uniform_int_distribution<int> num(-span * 16, span * 16);
  std::uniform_int_distribution<int> den(1, 16);
  return fr(num(rng), den(rng));
}

PLHomeo random_map(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 4);
  std::uniform_int_distribution<int> slope_exp(-2, 2);
  std::vector<Rational> xs{random_rational(rng, 3)};
  std::vector<Rational> ys{random_rational(rng, 3)};
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    xs.push_back(xs.back() + fr(1 + static_cast<int>(rng() % 7), 4));
    ys.push_back(ys.back() + (xs.back() - xs[xs.size() - 2]) * pow2(slope_exp(rng)));
  }
  return PLHomeo::from_points(xs, ys, pow2(slope_exp(rng)), pow2(slope_exp(rng)));
}

PLHomeo random_periodic(std::mt19937_64& rng) {
  // one period [0, T] with a couple of kinks
  const Rational T(1 + static_cast<int>(rng() % 3));
  const Rational S = T * fr(1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3));
  const Rational x1 = T / 3;
  const Rational y1 = S * fr(1 + static_cast<int>(rng() % 5), 6);
  const Rational c = random_rational(rng, 1);
  return PLHomeo::periodic({0, x1, T}, {c, c + y1, c + S}, T, S);
}

// Segment interpolation written independently of the class.
Rational oracle_eval(const std::vector<Rational>& xs, const std::vector<Rational>& ys, const Rational& ls,
                     const Rational& rs, const Rational& x) {
  if (x <= xs.front()) return ys.front() + ls * (x - xs.front());
  if (x >= xs.back()) return ys.back() + rs * (x - xs.back());
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (x <= xs[i + 1]) return ys[i] + (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]) * (x - xs[i]);
  }
  return 0;
}

}  // namespace

TEST_CASE("evaluate") {
  CHECK(PLHomeo::affine(2, 0)(q("1/3")) == q("2/3"));
  CHECK(PLHomeo::identity()(q("-7/5")) == q("-7/5"));
  const auto f = PLHomeo::from_points({0, 1}, {0, 3}, 1, 1);
  CHECK(f(q("1/2")) == oracle_eval({0, 1}, {0, 3}, 1, 1, q("1/2")));
  CHECK(f(q("1/2")) == q("3/2"));
  CHECK(f.evaluate_inverse(q("3/2")) == q("1/2"));
}

TEST_CASE("canonical form") {
  const auto id = PLHomeo::from_points({-3, 1, 5}, {-3, 1, 5}, 1, 1);
  CHECK(id.same_representation(PLHomeo::identity()));
  CHECK(id.breakpoints() == std::vector<Rational>{0});
  const auto f = PLHomeo::from_points({0, 1, 2}, {0, 2, 4}, 2, 1);
  CHECK(f.breakpoints() == std::vector<Rational>{2});
  CHECK(f.values() == std::vector<Rational>{4});
  CHECK(PLHomeo::translation(3).same_representation(PLHomeo::from_points({5}, {8}, 1, 1)));
}

TEST_CASE("compose, invert, power") {
  CHECK(compose(PLHomeo::translation(1), PLHomeo::translation(2)) == PLHomeo::translation(3));
  CHECK(invert(PLHomeo::affine(2, 0)) == PLHomeo::affine(q("1/2"), 0));
  CHECK(power(PLHomeo::affine(2, 0), 0) == PLHomeo::identity());

  std::mt19937_64 rng(11);
  const auto b3 = compose(power(PLHomeo::affine(2, 0), 3), PLHomeo::translation(1));
  for (int i = 0; i < 100; ++i) {
    const Rational x = random_rational(rng);
    CHECK(b3(x) == 8 * x + 8);
  }
}

TEST_CASE("random algebra on eventually affine maps") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const auto f = random_map(rng);
    const auto g = random_map(rng);
    const auto h = random_map(rng);
    CHECK(compose(compose(f, g), h).same_representation(compose(f, compose(g, h))));
    if (trial < 100) {
      const auto fg = compose(f, g);
      for (int i = 0; i < 100; ++i) {
        const Rational x = random_rational(rng);
        REQUIRE(fg(x) == f(g(x)));
      }
    }
    CHECK(compose(f, invert(f)).same_representation(PLHomeo::identity()));
    CHECK(invert(invert(f)).same_representation(f));
  }
  const auto f = random_map(rng);
  for (int m = -5; m <= 5; ++m) {
    for (int n = -5; n <= 5; ++n) {
      CHECK(power(f, m + n).same_representation(compose(power(f, m), power(f, n))));
    }
  }
}

TEST_CASE("periodic tails") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_periodic(rng);
    const auto g = trial % 2 ? random_periodic(rng) : random_map(rng);
    const auto fg = compose(f, g);
    const auto gf = compose(g, f);
    for (int i = 0; i < 30; ++i) {
      const Rational x = random_rational(rng, 20);
      REQUIRE(fg(x) == f(g(x)));
      REQUIRE(gf(x) == g(f(x)));
      REQUIRE(f.evaluate_inverse(f(x)) == x);
    }
    CHECK(compose(f, f.inverse()).is_identity());
    CHECK(compose(fg, g.inverse()) == f);
  }
  // Shift by the period is recognized as a translation.
  const auto t = PLHomeo::periodic({0, q("1/2"), 1}, {1, q("3/2"), 2}, 1, 1);
  CHECK(t.same_representation(PLHomeo::translation(1)));
}

TEST_CASE("evaluate_word") {
  const Assignment act{PLHomeo::translation(1), PLHomeo::translation(2)};
  CHECK(evaluate_word(parse_word("e"), act) == PLHomeo::identity());
  CHECK(evaluate_word(parse_word("a b"), act) == PLHomeo::translation(3));
  CHECK(evaluate_word(parse_word("a b A B"), act).is_identity());
  const Assignment bs{PLHomeo::translation(1), PLHomeo::affine(2, 0)};
  const auto u = parse_word("a b^2 a^-1");
  const auto v = parse_word("b a^3 b");
  CHECK(evaluate_word(u * v, bs) == compose(evaluate_word(u, bs), evaluate_word(v, bs)));
  CHECK(apply_word(u, bs, Rational(5)) == evaluate_word(u, bs)(Rational(5)));
  CHECK_THROWS(evaluate_word(parse_word("c"), bs));
}

TEST_CASE("fixed sets") {
  CHECK(fixed_sets(PLHomeo::translation(1)).empty());

  const auto ray = PLHomeo::from_points({1}, {1}, 1, 2);
  const auto fr = fixed_sets(ray);
  REQUIRE(fr.components.size() == 1);
  CHECK(fr.components[0].lo.is_neg_inf());
  CHECK(fr.components[0].hi == ExtRational(1));

  // displacement +, -, + : zigzag with two transversal fixed points 1 and 2
  const auto zig = PLHomeo::from_points({0, 3}, {1, 2}, 1, 1);  // slope 1/3 in between
  const auto fz = fixed_sets(zig);
  REQUIRE(fz.components.size() == 1);
  CHECK(fz.components[0].lo == ExtRational(q("3/2")));
  CHECK(fz.kind(0) == FixedPointKind::Attracting);

  const auto zz = PLHomeo::from_points({0, 1, 2}, {q("1/2"), 1, 3}, 1, 1);
  const auto fzz = fixed_sets(zz);
  // oracle: per-segment solve of f(x) = x
  REQUIRE(fzz.components.size() == 1);
  CHECK(fzz.components[0].lo == ExtRational(1));
  CHECK(fzz.kind(0) == FixedPointKind::OneSidedPositive);

  const auto three = PLHomeo::from_points({-1, 0, 2, 3}, {-q("1/2"), q("1/2"), q("3/2"), q("7/2")}, 1, 1);
  const auto ft = fixed_sets(three);
  REQUIRE(ft.components.size() == 2);
  CHECK(ft.is_transversal(0));
  CHECK(ft.is_transversal(1));
  for (std::size_t i = 0; i < ft.components.size(); ++i) {
    const Rational p = ft.components[i].lo.value();
    const Rational eps = q("1/1000");
    CHECK(sign(three(p - eps) - (p - eps)) == ft.gap_signs[i]);
    CHECK(sign(three(p + eps) - (p + eps)) == ft.gap_signs[i + 1]);
  }
}

TEST_CASE("fixed sets of circle lifts repeat") {
  // degree one lift with fixed points at 0 and 1/2 (mod 1)
  const auto f = PLHomeo::periodic({0, q("1/4"), q("1/2"), q("3/4"), 1}, {0, q("1/8"), q("1/2"), q("7/8"), 1}, 1, 1);
  const auto fs = fixed_sets(f);
  REQUIRE(fs.right_period.has_value());
  CHECK(next_fixed_at_or_above(f, q("101/10")) == ExtRational(q("21/2")));
  CHECK(next_fixed_at_or_below(f, q("-101/10")) == ExtRational(q("-21/2")));
  CHECK(next_fixed_at_or_above(f, q("-26/10")) == ExtRational(q("-5/2")));
  CHECK(next_fixed_at_or_below(f, q("27/10")) == ExtRational(q("5/2")));
}

TEST_CASE("forward orbit hull") {
  const ClosedInterval I{Rational(1), Rational(2)};
  auto h = forward_orbit_hull(PLHomeo::affine(2, 0), I, PowerDirection::Positive);
  CHECK(h.lo == ExtRational(2));
  CHECK(h.hi.is_pos_inf());
  h = forward_orbit_hull(PLHomeo::affine(q("1/2"), 0), I, PowerDirection::Positive);
  CHECK(h.lo == ExtRational(0));
  CHECK(h.hi == ExtRational(1));

  // bump on [0,1] pushing right
  const auto bump = PLHomeo::supported_on({0, q("1/2"), 1}, {0, q("3/4"), 1});
  const ClosedInterval J{q("1/4"), q("1/2")};
  h = forward_orbit_hull(bump, J, PowerDirection::Positive);
  CHECK(h.lo == ExtRational(bump(q("1/4"))));
  CHECK(h.hi == ExtRational(1));
  Rational lo = q("1/4"), hi = q("1/2");
  for (int n = 1; n <= 50; ++n) {
    lo = bump(lo);
    hi = bump(hi);
    CHECK(h.lo <= ExtRational(lo));
    CHECK(ExtRational(hi) <= h.hi);
  }
  h = forward_orbit_hull(bump, J, PowerDirection::Negative);
  CHECK(h.lo == ExtRational(0));
  CHECK(h.hi == ExtRational(bump.evaluate_inverse(q("1/2"))));
}

TEST_CASE("translation number") {
  auto t = translation_number(PLHomeo::translation(q("5/3")));
  CHECK(t.kind == TranslationNumber::Kind::Value);
  CHECK(t.value == q("5/3"));
  CHECK(translation_number(PLHomeo::affine(2, 0)).kind == TranslationNumber::Kind::FixedPoint);
  const auto mixed = PLHomeo::from_points({0, 1}, {1, 3}, 1, 1);
  CHECK(translation_number(mixed).kind == TranslationNumber::Kind::Undefined);
}
