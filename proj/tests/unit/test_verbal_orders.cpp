#include "doctest.h"

#include <random>
#include <set>

#include "plg/error.hpp"
#include "plg/verbal_orders.hpp"

using namespace plg;

namespace {

Rational fr(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

DynOrder translations(const Rational& a, const Rational& b) {
  return DynOrder{{PLHomeo::translation(a), PLHomeo::translation(b)}, {}, {}};
}

// two generators of a Thompson-type group, identity off [0, 1]
DynOrder thompson() {
  return DynOrder{{PLHomeo::supported_on({0, fr(1, 2), fr(3, 4), 1}, {0, fr(1, 4), fr(1, 2), 1}),
                   PLHomeo::supported_on({0, fr(1, 2), fr(3, 4), fr(7, 8), 1}, {0, fr(1, 2), fr(5, 8), fr(3, 4), 1})},
                  {fr(1, 3)},
                  {}};
}

Rational eval_at_zero(const ReducedWord& w, const PLHomeo& f, const PLHomeo& g) {
  // letter-by-letter, rightmost first
  Rational x = 0;
  const auto letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const PLHomeo& h = std::abs(*it) == 1 ? f : g;
    x = *it > 0 ? h(x) : h.evaluate_inverse(x);
  }
  return x;
}

}  // namespace

TEST_CASE("compare by reference points") {
  const auto a = parse_word("a");
  const auto b = parse_word("b");
  CHECK(compare(translations(1, 2), a, b).order < 0);
  CHECK(compare(translations(1, 2), b, a).order > 0);
  // agree at 0, differ at the second reference point 1
  DynOrder scaling{{PLHomeo::affine(2, 0), PLHomeo::affine(3, 0)}, {}, {}};
  const auto c = compare(scaling, a, b);
  CHECK(c.order < 0);
  CHECK_FALSE(c.tiebreak);
  CHECK(height_enumeration(7) == std::vector<Rational>{0, 1, -1, fr(1, 2), fr(-1, 2), 2, -2});
}

TEST_CASE("equal maps are decided by the tiebreak") {
  OrderContext ctx(translations(1, 1));
  const auto a = parse_word("a");
  const auto b = parse_word("b");
  const auto ab = ctx.compare(a, b);
  const auto ba = ctx.compare(b, a);
  CHECK(ab.tiebreak);
  CHECK(ab.order != 0);
  CHECK((ab.order < 0) == (ba.order > 0));
  CHECK(ctx.compare(a, a).order == 0);
  CHECK(ctx.tiebreak_count() >= 1);
}

TEST_CASE("construct_violation") {
  std::vector<ReducedWord> words{parse_word("a^-1 b a"), parse_word("a^-1 b a^2"),
                                 commutator(parse_word("a"), parse_word("b"))};
  for (int n = 1; n <= 4; ++n) words.push_back(engel(parse_word("a"), parse_word("b"), n));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 60; ++i) words.push_back(random_mixed_sign_word(rng, 2, 16, 2));
  for (const auto& w : words) {
    const auto v = construct_violation(w);
    CHECK(v.f(Rational(0)) > 0);
    CHECK(v.g(Rational(0)) > 0);
    CHECK(eval_at_zero(w, v.f, v.g) < 0);
  }
  const auto neg = construct_violation(parse_word("a^-1 b^-1"));
  CHECK(neg.trivial);
  CHECK(neg.f == PLHomeo::translation(1));
  CHECK(neg.g == PLHomeo::translation(1));
  try {
    construct_violation(parse_word("a b a"));
    FAIL("expected NotMixedSign");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotMixedSign);
  }
}

TEST_CASE("W-orders on balls") {
  OrderContext abelian(translations(1, fr(5, 7)));
  CHECK_FALSE(is_W_order_on_ball(abelian, parse_word("a^-1 b a"), 3));

  const auto v = construct_violation(parse_word("a^-1 b a"));
  OrderContext broken(DynOrder{{v.f, v.g}, {}, {}});
  const auto ce = is_W_order_on_ball(broken, parse_word("a^-1 b a"), 1);
  REQUIRE(ce);
  CHECK(ce->u == parse_word("a"));
  CHECK(ce->v == parse_word("b"));

  OrderContext free_order(auxiliary_free_order());
  CHECK_FALSE(is_W_order_on_ball(free_order, parse_word("a b"), 3));
  OrderContext th(thompson());
  CHECK_FALSE(is_W_order_on_ball(th, parse_word("a b"), 3));
}

TEST_CASE("left invariance on random triples") {
  for (const auto& order : {thompson(), auxiliary_free_order(), translations(1, fr(2, 3))}) {
    OrderContext ctx(order);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> len(0, 4);
    int tested = 0;
    while (tested < 200) {
      const auto u = random_reduced_word(rng, len(rng), 2);
      const auto v = random_reduced_word(rng, len(rng), 2);
      const auto w = random_reduced_word(rng, len(rng), 2);
      if (u == v) continue;
      const bool less = ctx.less(u, v);
      CHECK(ctx.less(w * u, w * v) == less);
      ++tested;
    }
  }
}

TEST_CASE("free order is total without tiebreaks") {
  OrderContext ctx(auxiliary_free_order());
  const auto ranked = rank_ball(ctx, 3);
  CHECK(ctx.tiebreak_count() == 0);
  std::set<std::size_t> ranks(ranked.rank.begin(), ranked.rank.end());
  CHECK(ranks.size() == ranked.words.size());
}

TEST_CASE("conjugate orders") {
  const DynOrder base = auxiliary_free_order();
  OrderContext plain(base);
  OrderContext same(conjugate_order(base, ReducedWord()));
  for (const auto& u : enumerate_ball(2, 2)) CHECK(plain.sign(u) == same.sign(u));

  for (const auto& h : enumerate_ball(2, 2)) {
    OrderContext conj(conjugate_order(base, h));
    for (const auto& u : enumerate_ball(2, 2)) CHECK(conj.sign(u) == plain.sign(h.inverse() * u * h));
  }
  OrderContext ab(translations(1, fr(2, 5)));
  OrderContext ab_conj(conjugate_order(translations(1, fr(2, 5)), parse_word("a b^-2")));
  for (const auto& u : enumerate_ball(3, 2)) CHECK(ab.sign(u) == ab_conj.sign(u));
}

TEST_CASE("order distance") {
  const auto d = order_distance(translations(1, fr(2, 5)), translations(1, fr(3, 5)), 5);
  CHECK(d.agreement_radius == 2);
  CHECK(d.value == fr(1, 3));
  CHECK_FALSE(d.at_resolution);

  const auto same = order_distance(translations(1, fr(2, 5)), translations(1, fr(2, 5)), 4);
  CHECK(same.agreement_radius == 4);
  CHECK(same.at_resolution);
  CHECK(same.value == fr(1, 5));

  const auto far = order_distance(translations(1, 1), translations(1, -1), 4);
  CHECK(far.agreement_radius == 0);
  CHECK(far.value == 1);
}

TEST_CASE("order distance is an ultrametric") {
  std::vector<DynOrder> orders;
  for (long q : {3, 5, 7}) orders.push_back(translations(1, fr(q - 1, q)));
  orders.push_back(auxiliary_free_order());
  orders.push_back(conjugate_order(auxiliary_free_order(), parse_word("a")));
  orders.push_back(thompson());
  std::vector<std::unique_ptr<OrderContext>> ctx;
  for (const auto& o : orders) ctx.push_back(std::make_unique<OrderContext>(o));
  const std::size_t n = orders.size();
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d[i][j] = order_distance(*ctx[i], *ctx[j], 3).value;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(d[i][j] == d[j][i]);
      for (std::size_t k = 0; k < n; ++k) CHECK(d[i][k] <= std::max(d[i][j], d[j][k]));
    }
  }
}

TEST_CASE("resilient pairs") {
  OrderContext abelian(translations(1, fr(5, 7)));
  CHECK_FALSE(find_resilient_pair(abelian, 2, 3));

  OrderContext th(thompson());
  const auto w = find_resilient_pair(th, 3, 5);
  REQUIRE(w);
  CHECK(is_resilient(th, w->f, w->g, w->h1, w->h2, 1));
  for (const auto& [n, ok] : w->powers) CHECK(ok == is_resilient(th, w->f, w->g, w->h1, w->h2, n));
  // independent check of the chain at n = 1 via pairwise comparisons
  const auto& [f, g, h1, h2, powers] = *w;
  CHECK(th.less(h1, f * h1));
  CHECK(th.less(f * h1, f * h2));
  CHECK(th.less(f * h2, g * h1));
  CHECK(th.less(g * h1, g * h2));
  CHECK(th.less(g * h2, h2));
}
