#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "plg/pl_homeo.hpp"
#include "plg/word.hpp"

namespace plg {

/// Left-order on the free group induced by a marked action.
///
/// u ≺ v iff U(x) < V(x) at the first reference point x where the maps
/// differ. Reference points are `refpoints` followed by every rational in
/// height order (0, 1, -1, 1/2, -1/2, 2, -2, 1/3, ...). Words acting by the
/// same map are compared by the same rule on a fixed free action (convex
/// extension). A nontrivial `conjugator` h turns this into ≺_h:
/// u ≺_h v iff u h ≺ v h.
struct DynOrder {
  Assignment action;
  std::vector<Rational> refpoints;
  ReducedWord conjugator;
  int probe_depth = 32;
};

/// First `count` rationals ordered by height max(|p|, q), then |x|, positive first.
std::vector<Rational> height_enumeration(std::size_t count);
/// Position key of x in that enumeration (smaller key = earlier).
struct HeightKey {
  mpz_class height;
  Rational magnitude;
  bool negative = false;
  friend bool operator<(const HeightKey& a, const HeightKey& b);
};
HeightKey height_key(const Rational& x);

/// Earliest rational of the height enumeration in the open interval (lo, hi).
Rational first_enumerated_in(const ExtRational& lo, const ExtRational& hi);

struct Comparison {
  std::strong_ordering order = std::strong_ordering::equal;
  bool tiebreak = false;  // decided by the auxiliary free action
};

/// Caches word maps and probe values for repeated comparisons under one order.
class OrderContext {
 public:
  explicit OrderContext(DynOrder order);
  ~OrderContext();
  OrderContext(const OrderContext&) = delete;
  OrderContext& operator=(const OrderContext&) = delete;

  Comparison compare(const ReducedWord& u, const ReducedWord& v);
  bool less(const ReducedWord& u, const ReducedWord& v) { return compare(u, v).order < 0; }
  /// compare(w, identity)
  int sign(const ReducedWord& w);
  const PLHomeo& map_of(const ReducedWord& w);

  const DynOrder& order() const { return order_; }
  std::size_t tiebreak_count() const { return tiebreaks_; }

 private:
  struct Entry {
    PLHomeo map;
    std::vector<Rational> probes;
  };
  Entry& entry(const ReducedWord& w);
  const Rational& probe(Entry& e, std::size_t i);
  std::strong_ordering compare_maps(Entry& a, Entry& b, bool& equal_maps);

  DynOrder order_;
  std::vector<Rational> points_;
  std::map<ReducedWord, Entry> cache_;
  std::unique_ptr<OrderContext> aux_;
  std::size_t tiebreaks_ = 0;
};

Comparison compare(const DynOrder& o, const ReducedWord& u, const ReducedWord& v);

/// The certified free action used to break ties (generators a, b).
DynOrder auxiliary_free_order();
/// x_i -> a^-i b a^i, identity allowed.
ReducedWord embed_in_two_letters(const ReducedWord& w);
/// w(images[0], images[1], ...)
ReducedWord substitute(const ReducedWord& w, const std::vector<ReducedWord>& images);

DynOrder conjugate_order(const DynOrder& o, const ReducedWord& h);

struct OrderViolationWitness {
  ReducedWord word;
  PLHomeo f;
  PLHomeo g;
  Rational f0;  // f(0) > 0
  Rational g0;  // g(0) > 0
  Rational w0;  // W(f, g)(0) < 0
  bool swapped = false;
  bool trivial = false;  // all-negative word: f = g = x + 1
};

/// Maps with f(0) > 0, g(0) > 0 and W(f,g)(0) < 0, re-verified exactly.
/// Throws NotMixedSign for all-positive words.
OrderViolationWitness construct_violation(const ReducedWord& w);

struct WOrderCounterexample {
  ReducedWord u;
  ReducedWord v;
  ReducedWord value;  // W(u, v), not positive
};

/// First pair (u, v) of positive ball elements with W(u, v) ⪯ id, in shortlex order.
std::optional<WOrderCounterexample> is_W_order_on_ball(OrderContext& ctx, const ReducedWord& w, int radius);

struct OrderDistance {
  int agreement_radius = 0;
  Rational value;               // 1 / (1 + R)
  bool at_resolution = false;   // R reached max_radius: only an upper bound
};

OrderDistance order_distance(OrderContext& a, OrderContext& b, int max_radius);
OrderDistance order_distance(const DynOrder& a, const DynOrder& b, int max_radius);

struct ResilientWitness {
  ReducedWord f, g, h1, h2;
  /// n, whether h1 ≺ f^n h1 ≺ f^n h2 ≺ g^n h1 ≺ g^n h2 ≺ h2 holds
  std::vector<std::pair<int, bool>> powers;
};

bool is_resilient(OrderContext& ctx, const ReducedWord& f, const ReducedWord& g, const ReducedWord& h1,
                  const ReducedWord& h2, int n);

/// Shortlex-first (f, g, h1, h2) in the ball satisfying the chain at n = 1;
/// found witnesses are re-checked for n = 2..n_max.
std::optional<ResilientWitness> find_resilient_pair(OrderContext& ctx, int radius, int n_max);

/// Sorted ball with ranks: equal ranks only for equal words.
struct RankedBall {
  std::vector<ReducedWord> words;
  std::vector<std::size_t> rank;  // rank[i] of words[i]
  std::map<ReducedWord, std::size_t> index;
};
RankedBall rank_ball(OrderContext& ctx, int radius);

}  // namespace plg
