#include "plg/witness_gen.hpp"

#include "plg/error.hpp"

namespace plg {

namespace {

// Piecewise linear bump on [u, v] with slopes 2 and 1/2 (in that order for
// sign > 0, reversed otherwise); appends the kink and the right end.
void append_bump(std::vector<Rational>& xs, std::vector<Rational>& ys, const Rational& u, const Rational& v, int sign) {
  const Rational c = sign > 0 ? Rational((2 * u + v) / 3) : Rational((u + 2 * v) / 3);
  const Rational fc = sign > 0 ? Rational(u + 2 * (c - u)) : Rational(u + (c - u) / 2);
  xs.push_back(c);
  ys.push_back(fc);
  xs.push_back(v);
  ys.push_back(v);
}

/// Identity outside [0, 1]; alternating bumps between consecutive cut points.
PLHomeo zigzag(const std::vector<Rational>& cuts, int first_sign) {
  std::vector<Rational> xs{0};
  std::vector<Rational> ys{0};
  Rational prev = 0;
  int s = first_sign;
  for (const auto& c : cuts) {
    append_bump(xs, ys, prev, c, s);
    prev = c;
    s = -s;
  }
  append_bump(xs, ys, prev, 1, s);
  return PLHomeo::supported_on(xs, ys);
}

std::vector<Rational> grid(int k, const Rational& offset) {
  std::vector<Rational> out;
  for (int j = 1; j <= 2 * k + 1; ++j) out.push_back(Rational(j) / (2 * k + 2) + offset);
  return out;
}

}  // namespace

Rational neighbourhood_radius(int k) { return Rational(1) / (16 * (k + 1)); }

IntertwinedPair gen_intertwined_pair(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  IntertwinedPair pair;
  pair.k = k;
  pair.p = grid(k, 0);
  pair.q = grid(k, Rational(1) / (4 * k + 4));
  pair.g = zigzag(pair.p, 1);
  pair.f = zigzag(pair.q, 1);
  check_intertwined(pair);
  return pair;
}

IntertwinedPair tampered_pair(int k) {
  IntertwinedPair pair = gen_intertwined_pair(k);
  std::vector<Rational> cuts = pair.q;
  const Rational extra = pair.p[static_cast<std::size_t>(k)];
  // splitting one bump into two of the same sign leaves a fixed point without a sign change
  std::vector<Rational> xs{0};
  std::vector<Rational> ys{0};
  Rational prev = 0;
  int s = 1;
  for (const auto& c : cuts) {
    if (prev < extra && extra < c) {
      append_bump(xs, ys, prev, extra, s);
      prev = extra;
    }
    append_bump(xs, ys, prev, c, s);
    prev = c;
    s = -s;
  }
  append_bump(xs, ys, prev, 1, s);
  pair.f = PLHomeo::supported_on(xs, ys);
  return pair;
}

void check_intertwined(const IntertwinedPair& pair) {
  const std::size_t n = static_cast<std::size_t>(2 * pair.k + 1);
  if (pair.p.size() != n || pair.q.size() != n) throw Error(ErrorCode::NotIntertwined, "wrong number of points");
  for (std::size_t j = 0; j < n; ++j) {
    if (!(pair.p[j] < pair.q[j]) || (j + 1 < n && !(pair.q[j] < pair.p[j + 1]))) {
      throw Error(ErrorCode::NotIntertwined, "points are not interleaved");
    }
  }
  auto check = [](const PLHomeo& map, const std::vector<Rational>& pts, const char* name) {
    const FixedSet fs = fixed_sets(map);
    std::vector<Rational> interior;
    for (std::size_t i = 0; i < fs.components.size(); ++i) {
      const auto& c = fs.components[i];
      if (c.hi <= ExtRational(0) || c.lo >= ExtRational(1)) continue;
      if (!c.is_point() || !fs.is_transversal(i)) {
        throw Error(ErrorCode::NotIntertwined, std::string(name) + " has a non-transversal fixed point in (0,1)");
      }
      interior.push_back(c.lo.value());
    }
    if (interior != pts) throw Error(ErrorCode::NotIntertwined, std::string(name) + " fixed points differ from the grid");
  };
  check(pair.g, pair.p, "g");
  check(pair.f, pair.q, "f");
}

PingPongCertificate build_certificate(const IntertwinedPair& pair, long max_power) {
  const Rational radius = neighbourhood_radius(pair.k);
  PLHomeo F = pair.f;
  PLHomeo G = pair.g;
  for (long n = 1; n <= max_power; ++n) {
    if (n > 1) {
      F = compose(F, pair.f);
      G = compose(G, pair.g);
    }
    PingPongCertificate c = from_interleaved_points(F, G, pair.p, pair.q, radius);
    c.power = n;
    if (verify_certificate(c).ok()) return c;
  }
  throw Error(ErrorCode::SearchExhausted,
              "no power N <= " + std::to_string(max_power) + " passes for k = " + std::to_string(pair.k));
}

NoLawWitness no_law_witness(const ReducedWord& w, const std::vector<PingPongCertificate>& certificates) {
  if (w.is_identity()) throw Error(ErrorCode::EmptyWord, "the identity is a law");
  NoLawWitness out;
  out.word = w;
  out.two_letter = w.max_generator() > 1 ? law_to_two_letters(w) : w.with_alphabet(2);

  const auto& syl = out.two_letter.syllables();
  int k = 1;
  if (syl.size() > 1) k = syllable_normal_form(out.two_letter).k;
  out.k = k;
  if (static_cast<std::size_t>(k) <= certificates.size() && certificates[static_cast<std::size_t>(k - 1)].k == k) {
    out.certificate = certificates[static_cast<std::size_t>(k - 1)];
  } else {
    out.certificate = build_certificate(gen_intertwined_pair(k));
  }
  out.power = out.certificate.power;
  const Assignment act{out.certificate.f, out.certificate.g};

  if (syl.size() == 1) {
    out.direct = true;
    const PLHomeo& map = syl.front().generator == 0 ? out.certificate.f : out.certificate.g;
    const auto x = moved_point(map);
    if (!x) throw Error(ErrorCode::InvalidCertificate, "certificate map is the identity");
    out.x = *x;
  } else {
    out.chain = word_image(out.certificate, out.two_letter);
    out.x = out.chain->witness;
  }
  out.image = apply_word(out.two_letter, act, out.x);
  if (out.image == out.x) throw Error(ErrorCode::InvalidCertificate, "witness point is fixed");
  return out;
}

std::pair<PLHomeo, PLHomeo> schottky_lift_pair() {
  const Rational q = Rational(1) / 4;
  std::vector<Rational> xs{0, Rational(1) / 16, Rational(1) / 2, Rational(15) / 16, 1};
  std::vector<Rational> ys{0, Rational(7) / 16, Rational(1) / 2, Rational(9) / 16, 1};
  PLHomeo F = PLHomeo::periodic(xs, ys, 1, 1);
  for (auto& x : xs) x += q;
  for (auto& y : ys) y += q;
  PLHomeo G = PLHomeo::periodic(xs, ys, 1, 1);
  return {F, G};
}

PingPongCertificate schottky_certificate() {
  auto [F, G] = schottky_lift_pair();
  auto iv = [](int lo, int hi) {
    return ClosedInterval{ExtRational(Rational(lo) / 16), ExtRational(Rational(hi) / 16)};
  };
  // A: neighbourhoods of G's fixed points 1/4, 3/4; B: of F's fixed points 0, 1/2.
  const IntervalSet A({iv(3, 5), iv(11, 13)}, Rational(1));
  const IntervalSet B({iv(-1, 1), iv(7, 9)}, Rational(1));
  return PingPongCertificate{F, G, 2, {A, A}, {B, B}, 1};
}

}  // namespace plg
