#include "plg/pl_homeo.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "plg/error.hpp"

namespace plg {

namespace {

Rational ceil_div(const Rational& x, const Rational& period) {
  return -floor_div(-x, period);
}

void sort_unique(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// Interpolates on [xs.front(), xs.back()].
Rational interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys, const Rational& x) {
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  if (it == xs.begin()) return ys.front();
  std::size_t j = static_cast<std::size_t>(it - xs.begin()) - 1;
  if (j + 1 >= xs.size()) return ys.back();
  if (xs[j] == x) return ys[j];
  return ys[j] + (ys[j + 1] - ys[j]) * (x - xs[j]) / (xs[j + 1] - xs[j]);
}

/// Evaluates the map described by (xs, ys, left, right) with tails in x-units.
Rational evaluate_parts(const std::vector<Rational>& xs, const std::vector<Rational>& ys, const Tail& left,
                        const Tail& right, const Rational& x) {
  if (x < xs.front()) {
    if (left.is_affine()) return ys.front() + left.slope * (x - xs.front());
    const Rational n = ceil_div(xs.front() - x, left.period);
    return interpolate(xs, ys, x + n * left.period) - n * left.shift;
  }
  if (x > xs.back()) {
    if (right.is_affine()) return ys.back() + right.slope * (x - xs.back());
    const Rational n = ceil_div(x - xs.back(), right.period);
    return interpolate(xs, ys, x - n * right.period) + n * right.shift;
  }
  return interpolate(xs, ys, x);
}

Tail inverse_tail(const Tail& t) {
  if (t.is_affine()) return Tail::affine(1 / t.slope);
  return Tail::periodic(t.shift, t.period);
}

Rational segment_slope(const std::vector<Rational>& xs, const std::vector<Rational>& ys, std::size_t i) {
  return (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
}

void remove_collinear(std::vector<Rational>& xs, std::vector<Rational>& ys) {
  if (xs.size() < 3) return;
  std::vector<Rational> nx{xs.front()};
  std::vector<Rational> ny{ys.front()};
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    const Rational in = (ys[i] - ny.back()) / (xs[i] - nx.back());
    const Rational out = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
    if (in != out) {
      nx.push_back(xs[i]);
      ny.push_back(ys[i]);
    }
  }
  nx.push_back(xs.back());
  ny.push_back(ys.back());
  xs = std::move(nx);
  ys = std::move(ny);
}

}  // namespace

PLHomeo::PLHomeo() : xs_{0}, ys_{0}, left_(Tail::affine(1)), right_(Tail::affine(1)) {}

PLHomeo::PLHomeo(std::vector<Rational> xs, std::vector<Rational> ys, Tail left, Tail right)
    : xs_(std::move(xs)), ys_(std::move(ys)), left_(std::move(left)), right_(std::move(right)) {}

PLHomeo PLHomeo::from_parts(std::vector<Rational> xs, std::vector<Rational> ys, Tail left, Tail right) {
  PLHomeo f(std::move(xs), std::move(ys), std::move(left), std::move(right));
  f.validate();
  f.canonicalize();
  return f;
}

PLHomeo PLHomeo::from_points(std::vector<Rational> xs, std::vector<Rational> ys, Rational left_slope,
                             Rational right_slope) {
  return from_parts(std::move(xs), std::move(ys), Tail::affine(std::move(left_slope)),
                    Tail::affine(std::move(right_slope)));
}

PLHomeo PLHomeo::affine(const Rational& slope, const Rational& intercept) {
  return from_points({0}, {intercept}, slope, slope);
}

PLHomeo PLHomeo::supported_on(std::vector<Rational> xs, std::vector<Rational> ys) {
  if (xs.empty() || ys.empty() || xs.front() != ys.front() || xs.back() != ys.back()) {
    throw Error(ErrorCode::InvalidArgument, "supported_on: end points must be fixed");
  }
  return from_points(std::move(xs), std::move(ys), 1, 1);
}

PLHomeo PLHomeo::periodic(std::vector<Rational> xs, std::vector<Rational> ys, const Rational& period,
                          const Rational& shift) {
  if (xs.size() < 2 || xs.back() - xs.front() != period || ys.back() - ys.front() != shift) {
    throw Error(ErrorCode::InvalidArgument, "periodic: points must span exactly one period");
  }
  return from_parts(std::move(xs), std::move(ys), Tail::periodic(period, shift), Tail::periodic(period, shift));
}

void PLHomeo::validate() const {
  auto bad = [](const std::string& why) { return Error(ErrorCode::InvalidArgument, "PLHomeo: " + why); };
  if (xs_.empty() || xs_.size() != ys_.size()) throw bad("breakpoints and values must be nonempty and equal in size");
  for (std::size_t i = 1; i < xs_.size(); ++i) {
    if (!(xs_[i - 1] < xs_[i])) throw bad("breakpoints must be strictly increasing");
    if (!(ys_[i - 1] < ys_[i])) throw bad("values must be strictly increasing");
  }
  for (const Tail* t : {&left_, &right_}) {
    if (t->is_affine() && !(t->slope > 0)) throw bad("tail slopes must be positive");
    if (t->is_periodic() && (!(t->period > 0) || !(t->shift > 0))) throw bad("tail period and shift must be positive");
  }
  if (right_.is_periodic()) {
    if (xs_.back() - right_.period < xs_.front()) throw bad("right period window exceeds the core");
    if (ys_.back() != interpolate(xs_, ys_, xs_.back() - right_.period) + right_.shift) {
      throw bad("right periodic tail is discontinuous");
    }
  }
  if (left_.is_periodic()) {
    if (xs_.front() + left_.period > xs_.back()) throw bad("left period window exceeds the core");
    if (ys_.front() != interpolate(xs_, ys_, xs_.front() + left_.period) - left_.shift) {
      throw bad("left periodic tail is discontinuous");
    }
  }
}

Rational PLHomeo::core_eval(const Rational& x) const { return interpolate(xs_, ys_, x); }

Rational PLHomeo::evaluate(const Rational& x) const { return evaluate_parts(xs_, ys_, left_, right_, x); }

Rational PLHomeo::evaluate_inverse(const Rational& y) const {
  return evaluate_parts(ys_, xs_, inverse_tail(left_), inverse_tail(right_), y);
}

ExtRational PLHomeo::evaluate(const ExtRational& x) const {
  return x.is_finite() ? ExtRational(evaluate(x.value())) : x;
}

ExtRational PLHomeo::evaluate_inverse(const ExtRational& y) const {
  return y.is_finite() ? ExtRational(evaluate_inverse(y.value())) : y;
}

std::vector<Rational> PLHomeo::kinks_in(const Rational& lo, const Rational& hi) const {
  std::vector<Rational> out;
  if (hi < lo) return out;
  for (const auto& x : xs_) {
    if (lo <= x && x <= hi) out.push_back(x);
  }
  if (right_.is_periodic() && hi > xs_.back()) {
    const Rational& T = right_.period;
    for (const auto& p : xs_) {
      if (!(p > xs_.back() - T)) continue;
      // copies p + nT with n >= 1 inside [lo, hi]
      Rational n = std::max(Rational(1), ceil_div(lo - p, T));
      for (Rational c = p + n * T; c <= hi; c += T) out.push_back(c);
    }
  }
  if (left_.is_periodic() && lo < xs_.front()) {
    const Rational& T = left_.period;
    for (const auto& p : xs_) {
      if (!(p < xs_.front() + T)) continue;
      Rational n = std::max(Rational(1), ceil_div(p - hi, T));
      for (Rational c = p - n * T; c >= lo; c -= T) out.push_back(c);
    }
  }
  sort_unique(out);
  return out;
}

PLHomeo PLHomeo::inverse() const {
  PLHomeo g(ys_, xs_, inverse_tail(left_), inverse_tail(right_));
  g.canonicalize();
  return g;
}

PLHomeo PLHomeo::mirrored() const {
  std::vector<Rational> xs(xs_.rbegin(), xs_.rend());
  std::vector<Rational> ys(ys_.rbegin(), ys_.rend());
  for (auto& x : xs) x = -x;
  for (auto& y : ys) y = -y;
  PLHomeo g(std::move(xs), std::move(ys), right_, left_);
  return g;
}

bool PLHomeo::is_identity() const {
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    if (xs_[i] != ys_[i]) return false;
  }
  auto tail_ok = [](const Tail& t) { return t.is_affine() ? t.slope == 1 : t.shift == t.period; };
  return tail_ok(left_) && tail_ok(right_);
}

bool PLHomeo::same_representation(const PLHomeo& other) const {
  return xs_ == other.xs_ && ys_ == other.ys_ && left_ == other.left_ && right_ == other.right_;
}

bool operator==(const PLHomeo& f, const PLHomeo& g) {
  if (f.is_eventually_affine() && g.is_eventually_affine()) return f.same_representation(g);
  return compose(f, g.inverse()).is_identity();
}

void PLHomeo::canonicalize_right() {
  for (int guard = 0; guard < 4; ++guard) {
    if (right_.is_affine()) {
      const Rational floor_x = left_.is_periodic() ? Rational(xs_.front() + left_.period) : xs_.front();
      while (xs_.size() >= 2 && segment_slope(xs_, ys_, xs_.size() - 2) == right_.slope &&
             xs_[xs_.size() - 2] >= floor_x) {
        xs_.pop_back();
        ys_.pop_back();
      }
      return;
    }

    const Rational T = right_.period;
    const Rational S = right_.shift;
    const Rational& xr = xs_.back();
    const bool interior = std::any_of(xs_.begin(), xs_.end(), [&](const Rational& x) { return x > xr - T && x < xr; });
    if (!interior) {
      // Linear across a full period, hence affine on the whole tail.
      right_ = Tail::affine(S / T);
      continue;
    }

    // Shortest period: the pattern repeats under T/d for some d dividing the kink count.
    const long kinks = std::count_if(xs_.begin(), xs_.end(), [&](const Rational& x) { return x > xr - T && x <= xr; });
    for (long d = kinks; d >= 2; --d) {
      const Rational t = T / d;
      const Rational s = S / d;
      std::vector<Rational> cand = kinks_in(xr - T, xr);
      for (const auto& k : kinks_in(xr - T + t, xr + t)) cand.push_back(k - t);
      cand.push_back(xr - T);
      cand.push_back(xr);
      const bool ok = std::all_of(cand.begin(), cand.end(), [&](const Rational& x) {
        return evaluate(x + t) - evaluate(x) - s == 0;
      });
      if (ok) {
        right_ = Tail::periodic(t, s);
        break;
      }
    }

    // Pull the periodic regime as far left as the map allows.
    const Rational Tp = right_.period;
    const Rational Sp = right_.shift;
    Rational lower = xs_.front();
    if (left_.is_periodic()) lower = std::max(lower, Rational(xs_.front() + left_.period - Tp));
    Rational anchor = xs_.back() - Tp;
    std::vector<Rational> cand;
    for (const auto& x : xs_) {
      if (x < anchor && x >= lower) cand.push_back(x);
      if (x - Tp < anchor && x - Tp >= lower) cand.push_back(x - Tp);
    }
    cand.push_back(lower);
    sort_unique(cand);
    for (auto it = cand.rbegin(); it != cand.rend(); ++it) {
      if (!(*it < anchor)) continue;
      if (evaluate(*it + Tp) - evaluate(*it) - Sp != 0) break;
      anchor = *it;
    }
    const Rational new_xr = anchor + Tp;
    if (new_xr < xs_.back()) {
      const Rational new_yr = evaluate(new_xr);
      while (!xs_.empty() && xs_.back() >= new_xr) {
        xs_.pop_back();
        ys_.pop_back();
      }
      xs_.push_back(new_xr);
      ys_.push_back(new_yr);
      continue;  // the shorter core may now expose an affine tail
    }
    return;
  }
}

void PLHomeo::canonicalize() {
  remove_collinear(xs_, ys_);
  canonicalize_right();
  *this = mirrored();
  canonicalize_right();
  *this = mirrored();
  remove_collinear(xs_, ys_);
  if (xs_.size() == 1 && left_.is_affine() && right_.is_affine() && left_.slope == right_.slope) {
    const Rational y0 = evaluate(Rational(0));
    xs_ = {Rational(0)};
    ys_ = {y0};
  }
}

PLHomeo compose(const PLHomeo& f, const PLHomeo& g) {
  // Right tail relation of f o g.
  auto combine = [](const Tail& tf, const Tail& tg) -> Tail {
    if (tf.is_affine() && tg.is_affine()) return Tail::affine(tf.slope * tg.slope);
    if (tf.is_affine()) return Tail::periodic(tg.period, tf.slope * tg.shift);
    if (tg.is_affine()) return Tail::periodic(tf.period / tg.slope, tf.shift);
    const Rational ratio = tg.shift / tf.period;  // p * Sg = q * Tf with p = den, q = num
    const Rational p(ratio.get_den());
    const Rational q(ratio.get_num());
    return Tail::periodic(p * tg.period, q * tf.shift);
  };
  const Tail right = combine(f.right_, g.right_);
  const Tail left = combine(f.left_, g.left_);

  const Rational rg = g.right_.is_affine() ? g.xs_.back() : Rational(g.xs_.back() - g.right_.period);
  const Rational rf = f.right_.is_affine() ? f.xs_.back() : Rational(f.xs_.back() - f.right_.period);
  const Rational lg = g.left_.is_affine() ? g.xs_.front() : Rational(g.xs_.front() + g.left_.period);
  const Rational lf = f.left_.is_affine() ? f.xs_.front() : Rational(f.xs_.front() + f.left_.period);

  Rational xr = std::max(rg, g.evaluate_inverse(rf));
  const Rational xl = std::min(lg, g.evaluate_inverse(lf));
  xr = std::max(xr, xl);
  const Rational core_lo = left.is_affine() ? xl : Rational(xl - left.period);
  const Rational core_hi = right.is_affine() ? xr : Rational(xr + right.period);

  std::vector<Rational> xs = g.kinks_in(core_lo, core_hi);
  for (const auto& k : f.kinks_in(g.evaluate(core_lo), g.evaluate(core_hi))) xs.push_back(g.evaluate_inverse(k));
  xs.push_back(core_lo);
  xs.push_back(core_hi);
  sort_unique(xs);
  std::vector<Rational> ys;
  ys.reserve(xs.size());
  for (const auto& x : xs) ys.push_back(f.evaluate(g.evaluate(x)));

  PLHomeo h(std::move(xs), std::move(ys), left, right);
  h.canonicalize();
  return h;
}

PLHomeo invert(const PLHomeo& f) { return f.inverse(); }

PLHomeo power(const PLHomeo& f, long n) {
  PLHomeo base = n < 0 ? f.inverse() : f;
  unsigned long e = static_cast<unsigned long>(std::labs(n));
  PLHomeo result;
  while (e > 0) {
    if (e & 1ul) result = compose(result, base);
    e >>= 1;
    if (e > 0) base = compose(base, base);
  }
  return result;
}

PLHomeo evaluate_word(const ReducedWord& w, std::span<const PLHomeo> assignment) {
  PLHomeo result;
  for (const auto& s : w.syllables()) {
    if (s.generator < 0 || static_cast<std::size_t>(s.generator) >= assignment.size()) {
      throw Error(ErrorCode::MissingGenerator, std::string("no map assigned to generator '") +
                                                   generator_name(s.generator) + "'");
    }
    result = compose(result, power(assignment[static_cast<std::size_t>(s.generator)], s.exponent));
  }
  return result;
}

Rational apply_power(const PLHomeo& f, long n, const Rational& x) {
  Rational y = x;
  if (n >= 0) {
    for (long i = 0; i < n; ++i) y = f.evaluate(y);
  } else {
    for (long i = 0; i < -n; ++i) y = f.evaluate_inverse(y);
  }
  return y;
}

Rational apply_word(const ReducedWord& w, std::span<const PLHomeo> assignment, const Rational& x) {
  Rational y = x;
  const auto& syl = w.syllables();
  for (auto it = syl.rbegin(); it != syl.rend(); ++it) {
    if (it->generator < 0 || static_cast<std::size_t>(it->generator) >= assignment.size()) {
      throw Error(ErrorCode::MissingGenerator, std::string("no map assigned to generator '") +
                                                   generator_name(it->generator) + "'");
    }
    y = apply_power(assignment[static_cast<std::size_t>(it->generator)], it->exponent, y);
  }
  return y;
}

ExtRational apply_word(const ReducedWord& w, std::span<const PLHomeo> assignment, const ExtRational& x) {
  return x.is_finite() ? ExtRational(apply_word(w, assignment, x.value())) : x;
}

// ---------------------------------------------------------------------------
// Fixed points

namespace {

int displacement_sign(const PLHomeo& f, const Rational& x) { return sign(f.evaluate(x) - x); }

void add_component(std::vector<FixedComponent>& comps, ExtRational lo, ExtRational hi) {
  comps.push_back({std::move(lo), std::move(hi)});
}

void merge_components(std::vector<FixedComponent>& comps) {
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  std::vector<FixedComponent> out;
  for (auto& c : comps) {
    if (!out.empty() && c.lo <= out.back().hi) {
      if (c.hi > out.back().hi) out.back().hi = c.hi;
    } else {
      out.push_back(c);
    }
  }
  comps = std::move(out);
}

/// Window bound past which a periodic tail with shift != period has no fixed points.
Rational drifting_extent(const PLHomeo& f) {
  const Tail& t = f.right_tail();
  const Rational& xr = f.breakpoints().back();
  std::vector<Rational> pts = f.kinks_in(xr - t.period, xr);
  pts.push_back(xr - t.period);
  Rational dmin = f.evaluate(pts.front()) - pts.front();
  Rational dmax = dmin;
  for (const auto& p : pts) {
    const Rational d = f.evaluate(p) - p;
    dmin = std::min(dmin, d);
    dmax = std::max(dmax, d);
  }
  const Rational drift = t.shift - t.period;
  Rational n_max = 0;
  if (drift > 0 && dmin < 0) n_max = floor_div(-dmin, drift);
  if (drift < 0 && dmax > 0) n_max = floor_div(dmax, -drift);
  return xr + (n_max + 1) * t.period;
}

}  // namespace

FixedSet fixed_sets(const PLHomeo& f) {
  FixedSet fs;
  const auto& xs = f.breakpoints();
  const auto& ys = f.values();
  const Tail& lt = f.left_tail();
  const Tail& rt = f.right_tail();

  Rational lo = xs.front();
  Rational hi = xs.back();
  if (rt.is_periodic()) {
    if (rt.shift == rt.period) {
      hi = xs.back() + rt.period;
      fs.right_period = rt.period;
    } else {
      hi = drifting_extent(f);
    }
  }
  if (lt.is_periodic()) {
    if (lt.shift == lt.period) {
      lo = xs.front() - lt.period;
      fs.left_period = lt.period;
    } else {
      lo = -drifting_extent(f.mirrored());
    }
  }

  std::vector<Rational> pts = f.kinks_in(lo, hi);
  pts.push_back(lo);
  pts.push_back(hi);
  sort_unique(pts);

  std::vector<FixedComponent> comps;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Rational& u = pts[i];
    const Rational& v = pts[i + 1];
    const Rational du = f.evaluate(u) - u;
    const Rational dv = f.evaluate(v) - v;
    if (du == 0 && dv == 0) {
      add_component(comps, u, v);
    } else if (du == 0) {
      add_component(comps, u, u);
    } else if (dv == 0) {
      add_component(comps, v, v);
    } else if (sign(du) != sign(dv)) {
      const Rational root = u + du * (v - u) / (du - dv);
      add_component(comps, root, root);
    }
  }
  if (pts.size() == 1 && f.evaluate(pts[0]) == pts[0]) add_component(comps, pts[0], pts[0]);

  fs.window_lo = lo;
  fs.window_hi = hi;
  if (rt.is_affine()) {
    fs.window_hi = ExtRational::pos_inf();
    const Rational d = ys.back() - xs.back();
    if (rt.slope == 1) {
      if (d == 0) add_component(comps, xs.back(), ExtRational::pos_inf());
    } else {
      const Rational root = xs.back() - d / (rt.slope - 1);
      if (root > xs.back()) add_component(comps, root, root);
    }
  } else if (rt.shift != rt.period) {
    fs.window_hi = ExtRational::pos_inf();
  }
  if (lt.is_affine()) {
    fs.window_lo = ExtRational::neg_inf();
    const Rational d = ys.front() - xs.front();
    if (lt.slope == 1) {
      if (d == 0) add_component(comps, ExtRational::neg_inf(), xs.front());
    } else {
      const Rational root = xs.front() - d / (lt.slope - 1);
      if (root < xs.front()) add_component(comps, root, root);
    }
  } else if (lt.shift != lt.period) {
    fs.window_lo = ExtRational::neg_inf();
  }
  merge_components(comps);
  fs.components = std::move(comps);

  // Sign of the displacement on each gap.
  const std::size_t n = fs.components.size();
  fs.gap_signs.resize(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i) {
    ExtRational a = i == 0 ? fs.window_lo : fs.components[i - 1].hi;
    ExtRational b = i == n ? fs.window_hi : fs.components[i].lo;
    if (a.is_finite() && b.is_finite()) {
      if (!(a.value() < b.value())) continue;
      fs.gap_signs[i] = displacement_sign(f, (a.value() + b.value()) / 2);
    } else if (a.is_finite()) {
      if (b.is_neg_inf()) continue;
      fs.gap_signs[i] = displacement_sign(f, a.value() + 1);
    } else if (b.is_finite()) {
      if (a.is_pos_inf()) continue;
      fs.gap_signs[i] = displacement_sign(f, b.value() - 1);
    } else if (a.is_neg_inf() && b.is_pos_inf()) {
      fs.gap_signs[i] = displacement_sign(f, Rational(0));
    }
  }
  return fs;
}

std::size_t FixedSet::isolated_count() const {
  return static_cast<std::size_t>(std::count_if(components.begin(), components.end(),
                                                [](const FixedComponent& c) { return c.is_point(); }));
}

FixedPointKind FixedSet::kind(std::size_t index) const {
  if (!components.at(index).is_point()) return FixedPointKind::IntervalEndpoint;
  int left = gap_signs.at(index);
  int right = gap_signs.at(index + 1);
  if (left == 0) left = right;
  if (right == 0) right = left;
  if (left > 0 && right < 0) return FixedPointKind::Attracting;
  if (left < 0 && right > 0) return FixedPointKind::Repelling;
  return left > 0 ? FixedPointKind::OneSidedPositive : FixedPointKind::OneSidedNegative;
}

bool FixedSet::is_transversal(std::size_t index) const {
  const auto k = kind(index);
  return k == FixedPointKind::Attracting || k == FixedPointKind::Repelling;
}

bool has_fixed_point(const PLHomeo& f) { return !fixed_sets(f).empty(); }

namespace {

ExtRational next_fixed_above(const FixedSet& fs, const Rational& x) {
  std::optional<Rational> best;
  auto offer = [&](const Rational& c) {
    if (!best || c < *best) best = c;
  };
  for (const auto& c : fs.components) {
    if (c.hi < ExtRational(x)) continue;
    if (c.lo <= ExtRational(x)) return ExtRational(x);
    offer(c.lo.value());
  }
  if (fs.right_period && fs.window_hi.is_finite()) {
    const Rational& T = *fs.right_period;
    const Rational& w = fs.window_hi.value();
    for (const auto& c : fs.components) {
      if (!c.lo.is_finite() || !c.hi.is_finite() || c.lo.value() < w - T || !(c.lo.value() < w)) continue;
      const Rational n = std::max(Rational(1), ceil_div(x - c.hi.value(), T));
      const Rational clo = c.lo.value() + n * T;
      const Rational chi = c.hi.value() + n * T;
      if (clo <= x && x <= chi) return ExtRational(x);
      if (clo >= x) offer(clo);
    }
  }
  if (fs.left_period && fs.window_lo.is_finite() && ExtRational(x) < fs.window_lo) {
    const Rational& T = *fs.left_period;
    const Rational& w = fs.window_lo.value();
    for (const auto& c : fs.components) {
      if (!c.lo.is_finite() || !c.hi.is_finite() || c.lo.value() < w || !(c.lo.value() < w + T)) continue;
      const Rational n = floor_div(c.hi.value() - x, T);
      if (n < 1) continue;
      const Rational clo = c.lo.value() - n * T;
      const Rational chi = c.hi.value() - n * T;
      if (clo <= x && x <= chi) return ExtRational(x);
      if (clo >= x) offer(clo);
    }
  }
  return best ? ExtRational(*best) : ExtRational::pos_inf();
}

ExtRational negate(const ExtRational& x) {
  if (x.is_pos_inf()) return ExtRational::neg_inf();
  if (x.is_neg_inf()) return ExtRational::pos_inf();
  return ExtRational(Rational(-x.value()));
}

}  // namespace

ExtRational next_fixed_at_or_above(const PLHomeo& f, const Rational& x) {
  return next_fixed_above(fixed_sets(f), x);
}

ExtRational next_fixed_at_or_below(const PLHomeo& f, const Rational& x) {
  const PLHomeo m = f.mirrored();
  return negate(next_fixed_above(fixed_sets(m), -x));
}

ClosedInterval forward_orbit_hull(const PLHomeo& f, const ClosedInterval& interval, PowerDirection direction) {
  const PLHomeo g = direction == PowerDirection::Positive ? f : f.inverse();
  ClosedInterval hull;
  if (interval.lo.is_finite()) {
    const Rational& lo = interval.lo.value();
    const Rational img = g.evaluate(lo);
    if (img > lo) {
      hull.lo = img;
    } else if (img < lo) {
      hull.lo = next_fixed_at_or_below(g, lo);
    } else {
      hull.lo = lo;
    }
  } else {
    hull.lo = interval.lo;
  }
  if (interval.hi.is_finite()) {
    const Rational& hi = interval.hi.value();
    const Rational img = g.evaluate(hi);
    if (img < hi) {
      hull.hi = img;
    } else if (img > hi) {
      hull.hi = next_fixed_at_or_above(g, hi);
    } else {
      hull.hi = hi;
    }
  } else {
    hull.hi = interval.hi;
  }
  return hull;
}

TranslationNumber translation_number(const PLHomeo& f) {
  if (has_fixed_point(f)) return {TranslationNumber::Kind::FixedPoint, 0};
  const auto& lt = f.left_tail();
  const auto& rt = f.right_tail();
  if (lt.is_affine() && rt.is_affine() && lt.slope == 1 && rt.slope == 1) {
    const Rational dl = f.values().front() - f.breakpoints().front();
    const Rational dr = f.values().back() - f.breakpoints().back();
    if (dl == dr) return {TranslationNumber::Kind::Value, dl};
  }
  return {TranslationNumber::Kind::Undefined, 0};
}

std::optional<Rational> moved_point(const PLHomeo& f) {
  for (const auto& x : f.breakpoints()) {
    if (f.evaluate(x) != x) return x;
  }
  const FixedSet fs = fixed_sets(f);
  for (std::size_t i = 0; i < fs.gap_signs.size(); ++i) {
    if (fs.gap_signs[i] == 0) continue;
    const ExtRational a = i == 0 ? fs.window_lo : fs.components[i - 1].hi;
    const ExtRational b = i == fs.components.size() ? fs.window_hi : fs.components[i].lo;
    Rational x = 0;
    if (a.is_finite() && b.is_finite()) {
      x = (a.value() + b.value()) / 2;
    } else if (a.is_finite()) {
      x = a.value() + 1;
    } else if (b.is_finite()) {
      x = b.value() - 1;
    }
    if (f.evaluate(x) != x) return x;
  }
  return std::nullopt;
}

bool commutes_with_translation(const PLHomeo& f, const Rational& t) {
  const PLHomeo shift = PLHomeo::translation(t);
  return compose(f, shift) == compose(shift, f);
}

std::string describe(const PLHomeo& f) {
  std::ostringstream out;
  auto tail = [](const Tail& t) {
    return t.is_affine() ? "slope " + to_string(t.slope)
                         : "period " + to_string(t.period) + " shift " + to_string(t.shift);
  };
  out << "[left " << tail(f.left_tail()) << "]";
  for (std::size_t i = 0; i < f.breakpoints().size(); ++i) {
    out << " (" << to_string(f.breakpoints()[i]) << ", " << to_string(f.values()[i]) << ")";
  }
  out << " [right " << tail(f.right_tail()) << "]";
  return out.str();
}

}  // namespace plg
