#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plg/rational.hpp"
#include "plg/word.hpp"

namespace plg {

/// Behaviour of a PL homeomorphism beyond its core breakpoints.
///
/// Affine: f is affine with the given slope past the last core breakpoint.
/// Periodic: f(x + period) = f(x) + shift on the tail; the fundamental window
/// [x_r - period, x_r] (resp. [x_0, x_0 + period]) lies inside the core.
/// Degree-one circle lifts are the Periodic tails with shift == period.
struct Tail {
  enum class Kind { Affine, Periodic };

  Kind kind = Kind::Affine;
  Rational slope = 1;
  Rational period = 0;
  Rational shift = 0;

  static Tail affine(Rational slope) { return {Kind::Affine, std::move(slope), 0, 0}; }
  static Tail periodic(Rational period, Rational shift) { return {Kind::Periodic, 0, std::move(period), std::move(shift)}; }

  bool is_affine() const { return kind == Kind::Affine; }
  bool is_periodic() const { return kind == Kind::Periodic; }

  friend bool operator==(const Tail& a, const Tail& b) {
    if (a.kind != b.kind) return false;
    return a.is_affine() ? a.slope == b.slope : (a.period == b.period && a.shift == b.shift);
  }
};

/// Orientation-preserving piecewise-linear homeomorphism of the line with
/// rational breakpoints and eventually affine or eventually periodic tails.
///
/// Canonical form: no interior breakpoint with equal incoming and outgoing
/// slopes; affine tails start at the last genuine breakpoint; affine maps are
/// stored with the single core point x_0 = 0. For eventually affine maps the
/// canonical form is unique, so `same_representation` is map equality there.
class PLHomeo {
 public:
  PLHomeo();  // identity

  /// Eventually affine map through the given points. Validates and canonicalizes.
  static PLHomeo from_points(std::vector<Rational> xs, std::vector<Rational> ys, Rational left_slope,
                             Rational right_slope);
  static PLHomeo from_parts(std::vector<Rational> xs, std::vector<Rational> ys, Tail left, Tail right);
  static PLHomeo identity() { return PLHomeo(); }
  static PLHomeo affine(const Rational& slope, const Rational& intercept);
  static PLHomeo translation(const Rational& t) { return affine(1, t); }
  /// Equals the identity outside [xs.front(), xs.back()]; the end points must be fixed.
  static PLHomeo supported_on(std::vector<Rational> xs, std::vector<Rational> ys);
  /// Map with f(x + period) = f(x) + shift everywhere, given on one period
  /// [xs.front(), xs.front() + period] with ys.back() = ys.front() + shift.
  static PLHomeo periodic(std::vector<Rational> xs, std::vector<Rational> ys, const Rational& period,
                          const Rational& shift);

  const std::vector<Rational>& breakpoints() const { return xs_; }
  const std::vector<Rational>& values() const { return ys_; }
  const Tail& left_tail() const { return left_; }
  const Tail& right_tail() const { return right_; }
  bool is_eventually_affine() const { return left_.is_affine() && right_.is_affine(); }

  Rational operator()(const Rational& x) const { return evaluate(x); }
  Rational evaluate(const Rational& x) const;
  Rational evaluate_inverse(const Rational& y) const;
  ExtRational evaluate(const ExtRational& x) const;
  ExtRational evaluate_inverse(const ExtRational& y) const;

  /// Points of [lo, hi] where f may fail to be affine (core points and their tail translates).
  std::vector<Rational> kinks_in(const Rational& lo, const Rational& hi) const;

  PLHomeo inverse() const;
  /// x -> -f(-x).
  PLHomeo mirrored() const;

  bool is_identity() const;
  bool same_representation(const PLHomeo& other) const;
  /// Map equality (exact; independent of representation).
  friend bool operator==(const PLHomeo& f, const PLHomeo& g);

 private:
  PLHomeo(std::vector<Rational> xs, std::vector<Rational> ys, Tail left, Tail right);

  void validate() const;
  void canonicalize();
  void canonicalize_right();
  Rational core_eval(const Rational& x) const;

  friend PLHomeo compose(const PLHomeo& f, const PLHomeo& g);

  std::vector<Rational> xs_;
  std::vector<Rational> ys_;
  Tail left_;
  Tail right_;
};

/// (f o g)(x) = f(g(x)).
PLHomeo compose(const PLHomeo& f, const PLHomeo& g);
PLHomeo invert(const PLHomeo& f);
PLHomeo power(const PLHomeo& f, long n);

/// Assignment generator index -> map; rightmost syllables act first.
using Assignment = std::vector<PLHomeo>;

PLHomeo evaluate_word(const ReducedWord& w, std::span<const PLHomeo> assignment);
/// Pointwise evaluation without building the composite map.
Rational apply_word(const ReducedWord& w, std::span<const PLHomeo> assignment, const Rational& x);
ExtRational apply_word(const ReducedWord& w, std::span<const PLHomeo> assignment, const ExtRational& x);
/// Applies f^n (n of either sign) to a point by iteration.
Rational apply_power(const PLHomeo& f, long n, const Rational& x);

/// A maximal connected piece of Fix(f): an isolated point (lo == hi) or a closed interval/ray.
struct FixedComponent {
  ExtRational lo;
  ExtRational hi;

  bool is_point() const { return lo == hi; }
  friend bool operator==(const FixedComponent&, const FixedComponent&) = default;
};

enum class FixedPointKind {
  Attracting,          // + on the left, - on the right
  Repelling,           // - on the left, + on the right
  OneSidedPositive,    // + on both sides (not transversal)
  OneSidedNegative,    // - on both sides (not transversal)
  IntervalEndpoint,    // part of an interval of fixed points
};

/// Fixed set of f on an explicit window, plus how it continues past the window.
///
/// `components` are ordered and disjoint; `gap_signs[i]` is sign(f(x) - x) on
/// the open gap left of `components[i]` (i = components.size() is the gap
/// right of the last one; 0 when the gap is empty). When a tail is periodic
/// with shift == period, the fixed points found in the last window repeat with
/// that period (`left_period`/`right_period`); otherwise the window contains
/// every fixed point.
struct FixedSet {
  std::vector<FixedComponent> components;
  std::vector<int> gap_signs;
  ExtRational window_lo;
  ExtRational window_hi;
  std::optional<Rational> left_period;
  std::optional<Rational> right_period;

  bool empty() const { return components.empty(); }
  std::size_t isolated_count() const;
  /// Kind of an isolated component (or IntervalEndpoint for intervals).
  FixedPointKind kind(std::size_t index) const;
  bool is_transversal(std::size_t index) const;
};

FixedSet fixed_sets(const PLHomeo& f);
bool has_fixed_point(const PLHomeo& f);
/// Smallest fixed point >= x, or +inf.
ExtRational next_fixed_at_or_above(const PLHomeo& f, const Rational& x);
/// Largest fixed point <= x, or -inf.
ExtRational next_fixed_at_or_below(const PLHomeo& f, const Rational& x);

struct ClosedInterval {
  ExtRational lo;
  ExtRational hi;
  friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;
};

enum class PowerDirection { Positive, Negative };

/// Closed convex hull of the union of f^n(I) over n >= 1 (Positive) or
/// n <= -1 (Negative), including limit points.
ClosedInterval forward_orbit_hull(const PLHomeo& f, const ClosedInterval& interval, PowerDirection direction);

struct TranslationNumber {
  enum class Kind { FixedPoint, Value, Undefined };
  Kind kind = Kind::Undefined;
  Rational value;
};

TranslationNumber translation_number(const PLHomeo& f);

/// Some x with f(x) != x, if f is not the identity.
std::optional<Rational> moved_point(const PLHomeo& f);

/// True when f(x + t) = f(x) + t for all x.
bool commutes_with_translation(const PLHomeo& f, const Rational& t);

std::string describe(const PLHomeo& f);

}  // namespace plg
