#include "plg/verbal_orders.hpp"

#include <algorithm>
#include <numeric>

#include "plg/error.hpp"
#include "plg/witness_gen.hpp"

namespace plg {

bool operator<(const HeightKey& a, const HeightKey& b) {
  if (a.height != b.height) return a.height < b.height;
  if (a.magnitude != b.magnitude) return a.magnitude < b.magnitude;
  return !a.negative && b.negative;
}

HeightKey height_key(const Rational& x) {
  mpz_class num = abs(x.get_num());
  const mpz_class& den = x.get_den();
  return HeightKey{num > den ? num : den, abs(x), x < 0};
}

std::vector<Rational> height_enumeration(std::size_t count) {
  std::vector<Rational> out;
  for (long h = 1; out.size() < count; ++h) {
    std::vector<Rational> level;
    for (long q = 1; q <= h; ++q) {
      for (long p = -h; p <= h; ++p) {
        if (std::max(std::labs(p), q) != h || std::gcd(std::labs(p), q) != 1) continue;
        Rational x(p, q);
        x.canonicalize();
        level.push_back(x);
      }
    }
    std::sort(level.begin(), level.end(),
              [](const Rational& a, const Rational& b) { return height_key(a) < height_key(b); });
    for (auto& x : level) {
      if (out.size() < count) out.push_back(x);
    }
  }
  return out;
}

Rational first_enumerated_in(const ExtRational& lo, const ExtRational& hi) {
  if (!(lo < hi)) throw Error(ErrorCode::InvalidArgument, "empty interval");
  if (lo < ExtRational(0) && ExtRational(0) < hi) return 0;
  const bool positive = lo >= ExtRational(0);
  std::optional<Rational> best;
  std::optional<HeightKey> best_key;
  for (long q = 1;; ++q) {
    if (best_key && mpz_class(q) > best_key->height) break;
    mpz_class p;
    if (positive) {
      // smallest p with p/q > lo
      const Rational scaled = lo.value() * q;
      p = floor_div(scaled, 1).get_num() + 1;
      if (!(ExtRational(Rational(p, q)) < hi)) continue;
    } else {
      const Rational scaled = hi.value() * q;
      p = -floor_div(-scaled, 1).get_num() - 1;  // largest p with p/q < hi
      if (!(lo < ExtRational(Rational(p, q)))) continue;
    }
    Rational x(p, q);
    x.canonicalize();
    const HeightKey key = height_key(x);
    if (!best_key || key < *best_key) {
      best = x;
      best_key = key;
    }
  }
  return *best;
}

namespace {

/// Earliest enumerated point moved by d (d is not the identity).
Rational first_moved_point(const PLHomeo& d) {
  const FixedSet fs = fixed_sets(d);
  if (fs.empty()) return 0;
  std::optional<Rational> best;
  std::optional<HeightKey> best_key;
  auto consider = [&](const ExtRational& a, const ExtRational& b) {
    if (!(a < b)) return;
    const Rational x = first_enumerated_in(a, b);
    const HeightKey key = height_key(x);
    if (!best_key || key < *best_key) {
      best = x;
      best_key = key;
    }
  };
  const std::size_t n = fs.components.size();
  std::vector<std::pair<ExtRational, ExtRational>> gaps;
  for (std::size_t i = 0; i <= n; ++i) {
    const ExtRational a = i == 0 ? fs.window_lo : fs.components[i - 1].hi;
    const ExtRational b = i == n ? fs.window_hi : fs.components[i].lo;
    if (a < b) gaps.emplace_back(a, b);
  }
  for (const auto& [a, b] : gaps) consider(a, b);

  // Periodic continuation past the window: translates of the gaps in the end periods.
  auto continue_side = [&](const Rational& T, const Rational& from, const Rational& to, int dir) {
    std::vector<std::pair<Rational, Rational>> pattern;
    for (const auto& [a, b] : gaps) {
      const ExtRational lo = std::max(a, ExtRational(from));
      const ExtRational hi = std::min(b, ExtRational(to));
      if (lo < hi) pattern.emplace_back(lo.value(), hi.value());
    }
    if (pattern.empty()) return;
    for (long k = 1;; ++k) {
      const Rational shift = dir * k * T;
      const Rational near = dir > 0 ? Rational(from + shift) : Rational(to + shift);
      if (best_key && dir * near > 0 && Rational(abs(near)) > Rational(best_key->height)) break;
      for (const auto& [a, b] : pattern) consider(ExtRational(Rational(a + shift)), ExtRational(Rational(b + shift)));
    }
  };
  if (fs.left_period && fs.window_lo.is_finite()) {
    const Rational& T = *fs.left_period;
    continue_side(T, fs.window_lo.value(), fs.window_lo.value() + T, -1);
  }
  if (fs.right_period && fs.window_hi.is_finite()) {
    const Rational& T = *fs.right_period;
    continue_side(T, fs.window_hi.value() - T, fs.window_hi.value(), 1);
  }
  return *best;
}

}  // namespace

// ---------------------------------------------------------------------------

OrderContext::OrderContext(DynOrder order) : order_(std::move(order)) {
  points_ = order_.refpoints;
  const auto tail = height_enumeration(static_cast<std::size_t>(std::max(order_.probe_depth, 0)));
  points_.insert(points_.end(), tail.begin(), tail.end());
}

OrderContext::~OrderContext() = default;

OrderContext::Entry& OrderContext::entry(const ReducedWord& w) {
  if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  PLHomeo map;
  if (!w.is_identity()) {
    std::vector<Syllable> syl = w.syllables();
    const Syllable first = syl.front();
    if (first.generator >= static_cast<int>(order_.action.size())) {
      throw Error(ErrorCode::MissingGenerator, std::string("no map for generator '") + generator_name(first.generator) + "'");
    }
    const long step = first.exponent > 0 ? 1 : -1;
    syl.front().exponent -= step;
    const ReducedWord rest = ReducedWord::from_syllables(syl, w.alphabet_size());
    const PLHomeo& gen = order_.action[static_cast<std::size_t>(first.generator)];
    const PLHomeo& tail = entry(rest).map;
    map = compose(step > 0 ? gen : gen.inverse(), tail);
  }
  return cache_.emplace(w, Entry{std::move(map), {}}).first->second;
}

const PLHomeo& OrderContext::map_of(const ReducedWord& w) { return entry(w).map; }

const Rational& OrderContext::probe(Entry& e, std::size_t i) {
  while (e.probes.size() <= i) e.probes.push_back(e.map(points_[e.probes.size()]));
  return e.probes[i];
}

std::strong_ordering OrderContext::compare_maps(Entry& a, Entry& b, bool& equal_maps) {
  equal_maps = false;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const Rational& x = probe(a, i);
    const Rational& y = probe(b, i);
    if (x != y) return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  const PLHomeo d = compose(b.map.inverse(), a.map);
  if (d.is_identity()) {
    equal_maps = true;
    return std::strong_ordering::equal;
  }
  const Rational x = first_moved_point(d);
  return a.map(x) < b.map(x) ? std::strong_ordering::less : std::strong_ordering::greater;
}

Comparison OrderContext::compare(const ReducedWord& u0, const ReducedWord& v0) {
  const ReducedWord u = order_.conjugator.is_identity() ? u0 : u0 * order_.conjugator;
  const ReducedWord v = order_.conjugator.is_identity() ? v0 : v0 * order_.conjugator;
  if (u == v) return {std::strong_ordering::equal, false};
  bool equal_maps = false;
  const auto ord = compare_maps(entry(u), entry(v), equal_maps);
  if (!equal_maps) return {ord, false};

  if (!aux_) aux_ = std::make_unique<OrderContext>(auxiliary_free_order());
  ++tiebreaks_;
  auto lift = [&](const ReducedWord& w) {
    return order_.action.size() <= 2 ? w.with_alphabet(2) : embed_in_two_letters(w);
  };
  bool aux_equal = false;
  const ReducedWord lu = lift(u);
  const ReducedWord lv = lift(v);
  const auto t = aux_->compare_maps(aux_->entry(lu), aux_->entry(lv), aux_equal);
  if (aux_equal) throw Error(ErrorCode::InvalidArgument, "auxiliary action identifies distinct words");
  return {t, true};
}

int OrderContext::sign(const ReducedWord& w) {
  const auto c = compare(w, ReducedWord(w.alphabet_size()));
  return c.order > 0 ? 1 : (c.order < 0 ? -1 : 0);
}

Comparison compare(const DynOrder& o, const ReducedWord& u, const ReducedWord& v) {
  OrderContext ctx(o);
  return ctx.compare(u, v);
}

DynOrder auxiliary_free_order() {
  auto [F, G] = schottky_lift_pair();
  return DynOrder{{F, G}, {}, ReducedWord(2), 32};
}

ReducedWord substitute(const ReducedWord& w, const std::vector<ReducedWord>& images) {
  int alphabet = 1;
  for (const auto& im : images) alphabet = std::max(alphabet, im.alphabet_size());
  ReducedWord out(alphabet);
  for (const auto& s : w.syllables()) {
    if (s.generator >= static_cast<int>(images.size())) {
      throw Error(ErrorCode::MissingGenerator, std::string("no image for generator '") + generator_name(s.generator) + "'");
    }
    out = out * power(images[static_cast<std::size_t>(s.generator)], s.exponent);
  }
  return out;
}

ReducedWord embed_in_two_letters(const ReducedWord& w) {
  return w.is_identity() ? ReducedWord(2) : law_to_two_letters(w);
}

DynOrder conjugate_order(const DynOrder& o, const ReducedWord& h) {
  DynOrder out = o;
  out.conjugator = h * o.conjugator;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

/// Piecewise-linear map under construction, as a set of graph points.
struct PointMap {
  std::map<Rational, Rational> pts;
  void add(const Rational& x, const Rational& y) { pts[x] = y; }
  PLHomeo build() const {
    std::vector<Rational> xs, ys;
    for (const auto& [x, y] : pts) {
      xs.push_back(x);
      ys.push_back(y);
    }
    return PLHomeo::from_points(xs, ys, 1, 1);
  }
};

}  // namespace

OrderViolationWitness construct_violation(const ReducedWord& w) {
  if (w.max_generator() > 1) throw Error(ErrorCode::InvalidArgument, "construction needs a two-letter word");
  OrderViolationWitness out;
  out.word = w;
  if (w.is_identity() || w.all_exponents_positive()) {
    throw Error(ErrorCode::NotMixedSign,
                "word '" + to_string(w) + "' is positive in every left order once a and b are positive");
  }
  if (w.all_exponents_negative()) {
    out.f = out.g = PLHomeo::translation(1);
    out.trivial = true;
  } else {
    const ConstructionSplit split = decompose_for_construction(w);
    out.swapped = split.swapped;
    const long L = w.length();
    const Rational M = std::max(2L, L);
    const Rational X = (L + 1) * M + 1;

    // The contracting map for 'b' on [0, X]; positive powers of both maps keep
    // the suffix inside [0, X] and the b-syllable at its left end lands it in [1/2, 1].
    PointMap A, B;
    B.add(0, Rational(1, 2));
    B.add(X, 1);
    const PLHomeo B0 = B.build();
    const PLHomeo A0 = PLHomeo::translation(M);
    const Rational w2 = apply_word(split.w2, Assignment{A0, B0}, Rational(0));
    const Rational p = w2 - split.n * M;
    A.add(p, p + M);
    A.add(p - 1, p - 1);

    auto e = [&](long j) { return Rational(p - j); };
    Rational z = p;
    const auto& syl = split.w1.syllables();
    long j = 0;
    for (auto it = syl.rbegin(); it != syl.rend(); ++it) {
      ++j;
      PointMap& h = j % 2 ? B : A;
      const Rational lo = e(j + 1);
      const Rational target = e(j) - Rational(1, 4);
      h.add(lo, lo);
      if (it->exponent > 0) {
        long t = 1;
        while (lo + (z - lo) / pow2(t) > target) ++t;
        h.add(z, lo + (z - lo) / pow2(t));
      } else {
        long t = 1;
        while (lo + (z - lo) / pow2(t) > target) ++t;
        h.add(lo + (z - lo) / pow2(t), z);
      }
      z = apply_power(h.build(), it->exponent, z);
    }
    out.f = A.build();
    out.g = B.build();
    if (out.swapped) std::swap(out.f, out.g);
  }
  const Assignment act{out.f, out.g};
  out.f0 = out.f(Rational(0));
  out.g0 = out.g(Rational(0));
  out.w0 = apply_word(w, act, Rational(0));
  if (!(out.f0 > 0 && out.g0 > 0 && out.w0 < 0)) {
    throw Error(ErrorCode::InvalidArgument, "construction failed its exact check for '" + to_string(w) + "'");
  }
  return out;
}

// ---------------------------------------------------------------------------

std::optional<WOrderCounterexample> is_W_order_on_ball(OrderContext& ctx, const ReducedWord& w, int radius) {
  if (w.max_generator() > 1) throw Error(ErrorCode::InvalidArgument, "W must be a two-letter word");
  const int m = static_cast<int>(ctx.order().action.size());
  std::vector<ReducedWord> positive;
  for (const auto& u : enumerate_ball(radius, m)) {
    if (ctx.sign(u) > 0) positive.push_back(u);
  }
  for (const auto& u : positive) {
    for (const auto& v : positive) {
      ReducedWord value = substitute(w, {u, v});
      if (ctx.sign(value) <= 0) return WOrderCounterexample{u, v, std::move(value)};
    }
  }
  return std::nullopt;
}

OrderDistance order_distance(OrderContext& a, OrderContext& b, int max_radius) {
  const int m = static_cast<int>(a.order().action.size());
  if (m != static_cast<int>(b.order().action.size())) {
    throw Error(ErrorCode::InvalidArgument, "orders on different alphabets");
  }
  OrderDistance out;
  out.agreement_radius = max_radius;
  out.at_resolution = true;
  for (const auto& u : enumerate_ball(max_radius, m)) {
    if (a.sign(u) != b.sign(u)) {
      out.agreement_radius = static_cast<int>(u.length()) - 1;
      out.at_resolution = false;
      break;
    }
  }
  out.value = Rational(1) / (1 + out.agreement_radius);
  return out;
}

OrderDistance order_distance(const DynOrder& a, const DynOrder& b, int max_radius) {
  OrderContext ca(a), cb(b);
  return order_distance(ca, cb, max_radius);
}

bool is_resilient(OrderContext& ctx, const ReducedWord& f, const ReducedWord& g, const ReducedWord& h1,
                  const ReducedWord& h2, int n) {
  const ReducedWord fn = power(f, n);
  const ReducedWord gn = power(g, n);
  const std::vector<ReducedWord> chain{h1, fn * h1, fn * h2, gn * h1, gn * h2, h2};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!ctx.less(chain[i], chain[i + 1])) return false;
  }
  return true;
}

RankedBall rank_ball(OrderContext& ctx, int radius) {
  RankedBall out;
  out.words = enumerate_ball(radius, static_cast<int>(ctx.order().action.size()));
  std::vector<std::size_t> idx(out.words.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t i, std::size_t j) { return ctx.less(out.words[i], out.words[j]); });
  out.rank.resize(out.words.size());
  for (std::size_t r = 0; r < idx.size(); ++r) out.rank[idx[r]] = r;
  for (std::size_t i = 0; i < out.words.size(); ++i) out.index.emplace(out.words[i], i);
  return out;
}

std::optional<ResilientWitness> find_resilient_pair(OrderContext& ctx, int radius, int n_max) {
  if (radius < 1 || n_max < 1) throw Error(ErrorCode::InvalidArgument, "radius and n_max must be positive");
  const auto ball = enumerate_ball(radius, static_cast<int>(ctx.order().action.size()));
  const std::size_t n = ball.size();

  // Every element the chain mentions, ranked once.
  std::map<ReducedWord, std::size_t> slot;
  std::vector<ReducedWord> elems;
  auto intern = [&](const ReducedWord& w) {
    auto [it, fresh] = slot.emplace(w, elems.size());
    if (fresh) elems.push_back(w);
    return it->second;
  };
  std::vector<std::size_t> self(n);
  std::vector<std::size_t> prod(n * n);
  for (std::size_t i = 0; i < n; ++i) self[i] = intern(ball[i]);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = intern(ball[i] * ball[j]);
  }
  std::vector<std::size_t> order(elems.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ctx.less(elems[a], elems[b]); });
  std::vector<std::size_t> rank(elems.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
  auto R = [&](std::size_t i, std::size_t j) { return rank[prod[i * n + j]]; };

  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t h1 = 0; h1 < n; ++h1) {
        const std::size_t r1 = rank[self[h1]];
        const std::size_t rf1 = R(f, h1);
        const std::size_t rg1 = R(g, h1);
        if (!(r1 < rf1 && rf1 < rg1)) continue;
        for (std::size_t h2 = 0; h2 < n; ++h2) {
          const std::size_t rf2 = R(f, h2);
          if (!(rf1 < rf2 && rf2 < rg1)) continue;
          const std::size_t rg2 = R(g, h2);
          if (!(rg1 < rg2 && rg2 < rank[self[h2]])) continue;
          ResilientWitness wit{ball[f], ball[g], ball[h1], ball[h2], {}};
          wit.powers.emplace_back(1, is_resilient(ctx, wit.f, wit.g, wit.h1, wit.h2, 1));
          for (int k = 2; k <= n_max; ++k) {
            wit.powers.emplace_back(k, is_resilient(ctx, wit.f, wit.g, wit.h1, wit.h2, k));
          }
          return wit;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace plg
