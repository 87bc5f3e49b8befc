#include "plg/action_classifier.hpp"

#include <algorithm>
#include <set>

#include "plg/error.hpp"

namespace plg {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::TypeI: return "TypeI";
    case Verdict::TypeII: return "TypeII";
    case Verdict::TypeIII: return "TypeIII";
    case Verdict::GlobalFixedPoint: return "GlobalFixedPoint";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

using Pieces = std::vector<ClosedInterval>;

/// Fixed set of f restricted to [lo, hi], periodic repeats unrolled.
Pieces fixed_pieces(const PLHomeo& f, const Rational& lo, const Rational& hi) {
  const FixedSet fs = fixed_sets(f);
  Pieces out;
  auto clip = [&](const ExtRational& a, const ExtRational& b) {
    const ExtRational l = std::max(a, ExtRational(lo));
    const ExtRational h = std::min(b, ExtRational(hi));
    if (l <= h) out.push_back({l, h});
  };
  for (const auto& c : fs.components) clip(c.lo, c.hi);
  auto unroll = [&](const Rational& T, const Rational& from, const Rational& to, int dir) {
    for (const auto& c : fs.components) {
      if (!c.lo.is_finite() || !c.hi.is_finite() || c.lo.value() < from || !(c.lo.value() < to)) continue;
      for (long n = 1;; ++n) {
        const Rational s = dir * n * T;
        if (dir > 0 ? c.lo.value() + s > hi : c.hi.value() + s < lo) break;
        clip(ExtRational(Rational(c.lo.value() + s)), ExtRational(Rational(c.hi.value() + s)));
      }
    }
  };
  if (fs.right_period && fs.window_hi.is_finite()) {
    unroll(*fs.right_period, fs.window_hi.value() - *fs.right_period, fs.window_hi.value(), 1);
  }
  if (fs.left_period && fs.window_lo.is_finite()) {
    unroll(*fs.left_period, fs.window_lo.value(), fs.window_lo.value() + *fs.left_period, -1);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  return out;
}

Pieces intersect(const Pieces& x, const Pieces& y) {
  Pieces out;
  for (const auto& a : x) {
    for (const auto& b : y) {
      const ExtRational l = std::max(a.lo, b.lo);
      const ExtRational h = std::min(a.hi, b.hi);
      if (l <= h) out.push_back({l, h});
    }
  }
  return out;
}

bool is_translation(const PLHomeo& f) {
  return f.is_eventually_affine() && f.breakpoints().size() == 1 && f.left_tail().slope == 1;
}

}  // namespace

std::optional<Rational> common_fixed_point(const std::vector<PLHomeo>& generators) {
  if (generators.empty()) return Rational(0);
  // A window holding every core, widened by a common multiple of the periods.
  Rational lo = 0, hi = 0;
  std::optional<Rational> period;
  for (const auto& g : generators) {
    lo = std::min(lo, g.breakpoints().front());
    hi = std::max(hi, g.breakpoints().back());
    for (const Tail* t : {&g.left_tail(), &g.right_tail()}) {
      if (t->is_periodic()) period = period ? rational_lcm(*period, t->period) : t->period;
    }
  }
  if (period) {
    lo -= 2 * *period;
    hi += 2 * *period;
  }
  lo -= 1;
  hi += 1;
  Pieces common = fixed_pieces(generators.front(), lo, hi);
  for (std::size_t i = 1; i < generators.size() && !common.empty(); ++i) {
    common = intersect(common, fixed_pieces(generators[i], lo, hi));
  }
  for (const auto& c : common) {
    const Rational x = c.lo.value();
    if (std::all_of(generators.begin(), generators.end(), [&](const PLHomeo& g) { return g(x) == x; })) return x;
  }
  return std::nullopt;
}

std::optional<DiscreteOrbitWitness> find_discrete_orbit(const MarkedAction& act) {
  constexpr long kMaxPoints = 4096;
  std::vector<Rational> bases{0};
  for (const auto& g : act.generators) {
    for (const auto& x : g.breakpoints()) {
      if (bases.size() < 4 && std::find(bases.begin(), bases.end(), x) == bases.end()) bases.push_back(x);
    }
  }
  for (const auto& x0 : bases) {
    // orbit of x0 under words of length <= depth
    std::set<Rational> seen{x0};
    std::vector<Rational> frontier{x0};
    for (int l = 0; l < act.depth && !frontier.empty(); ++l) {
      std::vector<Rational> next;
      for (const auto& x : frontier) {
        for (const auto& g : act.generators) {
          for (const Rational& y : {g(x), g.evaluate_inverse(x)}) {
            if (seen.insert(y).second) next.push_back(y);
          }
        }
      }
      frontier = std::move(next);
      if (seen.size() > 20000) break;
    }
    Rational d = 0;
    for (const auto& y : seen) d = rational_gcd(d, y - x0);
    if (d == 0) continue;

    auto in_set = [&](const Rational& y) { return is_integer_multiple(y - x0, d); };
    bool ok = true;
    for (const auto& g : act.generators) {
      for (const PLHomeo& h : {g, g.inverse()}) {
        // tails: translation by a multiple of d, or periodic with period and shift in dZ
        for (const Tail* t : {&h.left_tail(), &h.right_tail()}) {
          if (t->is_affine() && t->slope != 1) ok = false;
          if (t->is_periodic() && !(is_integer_multiple(t->period, d) && is_integer_multiple(t->shift, d))) ok = false;
        }
        if (!ok) break;
        const Rational first = x0 + floor_div(h.breakpoints().front() - x0, d) * d - d;
        const Rational last = h.breakpoints().back() + d;
        if ((last - first) / d > kMaxPoints) {
          ok = false;
          break;
        }
        for (Rational x = first; x <= last; x += d) {
          if (!in_set(h(x))) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    if (ok) return DiscreteOrbitWitness{x0, d};
  }
  return std::nullopt;
}

std::optional<TranslationWitness> additive_translation_numbers(const std::vector<PLHomeo>& generators) {
  auto value = [](const PLHomeo& f) -> std::optional<Rational> {
    const auto t = translation_number(f);
    if (t.kind == TranslationNumber::Kind::Value) return t.value;
    if (t.kind == TranslationNumber::Kind::FixedPoint) return Rational(0);
    return std::nullopt;
  };
  TranslationWitness w;
  for (const auto& g : generators) {
    const auto t = translation_number(g);
    if (t.kind != TranslationNumber::Kind::Value) return std::nullopt;
    w.numbers.push_back(t.value);
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = 0; j < generators.size(); ++j) {
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) {
          const PLHomeo prod = compose(power(generators[i], si), power(generators[j], sj));
          const auto v = value(prod);
          if (!v || *v != si * w.numbers[i] + sj * w.numbers[j]) return std::nullopt;
        }
      }
    }
  }
  return w;
}

std::optional<Rational> common_period(const std::vector<PLHomeo>& generators) {
  std::optional<Rational> pi;
  for (const auto& g : generators) {
    if (is_translation(g)) continue;
    const Tail& t = g.right_tail();
    if (!t.is_periodic() || t.shift != t.period) return std::nullopt;
    pi = pi ? rational_lcm(*pi, t.period) : t.period;
  }
  if (!pi) return std::nullopt;
  for (const auto& g : generators) {
    if (!commutes_with_translation(g, *pi)) return std::nullopt;
  }
  return pi;
}

std::optional<ExpansionWitness> find_expansion_witness(const MarkedAction& act, const Rational& c,
                                                       const Rational& c_prime, const Rational& a, const Rational& b,
                                                       const Rational& a_prime, const Rational& b_prime) {
  if (!(a < c && c < c_prime && c_prime < b) || !(a_prime < b_prime)) {
    throw Error(ErrorCode::InvalidArgument, "need a < c < c' < b and a' < b'");
  }
  const int m = static_cast<int>(act.generators.size());
  if (m == 0) return std::nullopt;
  for (const auto& w : enumerate_ball(act.depth, m)) {
    const Rational ga = apply_word(w, act.generators, a);
    if (!(ga < a_prime)) continue;
    const Rational gb = apply_word(w, act.generators, b);
    if (gb > b_prime) return ExpansionWitness{c, c_prime, a, b, a_prime, b_prime, w, ga, gb};
  }
  return std::nullopt;
}

Classification classify(const MarkedAction& act) {
  Classification out;
  auto note = [&](std::string s) { out.trace.push_back(std::move(s)); };

  if (const auto x = common_fixed_point(act.generators)) {
    note("stage 0: common fixed point at " + to_string(*x));
    out.verdict = Verdict::GlobalFixedPoint;
    out.fixed_point = x;
    return out;
  }
  note("stage 0: no common fixed point");

  if (auto d = find_discrete_orbit(act)) {
    note("stage 1: invariant discrete set " + to_string(d->base) + " + " + to_string(d->step) + "Z");
    out.verdict = Verdict::TypeI;
    out.discrete = d;
    return out;
  }
  if (auto t = additive_translation_numbers(act.generators)) {
    note("stage 1: translation numbers additive on products of length <= 2");
    out.verdict = Verdict::TypeI;
    out.translations = t;
    return out;
  }
  note("stage 1: no type I witness");

  if (auto pi = common_period(act.generators)) {
    note("stage 2: every generator commutes with x -> x + " + to_string(*pi));
    out.verdict = Verdict::TypeII;
    out.period = pi;
    return out;
  }
  note("stage 2: no common rational period");

  std::vector<Rational> pts;
  for (const auto& g : act.generators) pts.insert(pts.end(), g.breakpoints().begin(), g.breakpoints().end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Rational c = 0, c_prime = 1;
  if (pts.size() >= 2) {
    c = pts[0];
    c_prime = pts[1];
  }
  const Rational a = c - 1;
  const Rational b = c_prime + 1;
  Rational scale = std::max({Rational(1), abs(a), abs(b)});
  long j = 4;
  while (pow2(j - 4) < scale) ++j;
  const Rational target = pow2(j);
  note("stage 3: probes c = " + to_string(c) + ", c' = " + to_string(c_prime) + ", targets +-" + to_string(target));
  if (auto e = find_expansion_witness(act, c, c_prime, a, b, -target, target)) {
    note("stage 3: expansion witness '" + to_string(e->word) + "'");
    out.verdict = Verdict::TypeIII;
    out.expansion = e;
    return out;
  }
  note("stage 3: no expansion witness up to length " + std::to_string(act.depth));
  return out;
}

}  // namespace plg
