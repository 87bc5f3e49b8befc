#include "plg/ping_pong.hpp"

#include <algorithm>
#include <sstream>

#include "plg/error.hpp"

namespace plg {

namespace {

bool overlaps(const ClosedInterval& a, const ClosedInterval& b) { return a.lo <= b.hi && b.lo <= a.hi; }

bool inside(const ClosedInterval& inner, const ClosedInterval& outer) {
  return outer.lo <= inner.lo && inner.hi <= outer.hi;
}

ClosedInterval shifted(const ClosedInterval& c, const Rational& t) {
  return {ExtRational(Rational(c.lo.value() + t)), ExtRational(Rational(c.hi.value() + t))};
}

std::vector<ClosedInterval> merged(std::vector<ClosedInterval> comps) {
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  std::vector<ClosedInterval> out;
  for (auto& c : comps) {
    if (!out.empty() && c.lo <= out.back().hi) {
      if (c.hi > out.back().hi) out.back().hi = c.hi;
    } else {
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace

IntervalSet::IntervalSet(std::vector<ClosedInterval> components, std::optional<Rational> period)
    : period_(std::move(period)) {
  for (const auto& c : components) {
    if (c.hi < c.lo) throw Error(ErrorCode::InvalidArgument, "interval with hi < lo: " + to_string(c));
  }
  if (!period_) {
    components_ = merged(std::move(components));
    return;
  }
  const Rational P = *period_;
  if (!(P > 0)) throw Error(ErrorCode::InvalidArgument, "interval set period must be positive");
  for (auto& c : components) {
    if (!c.lo.is_finite() || !c.hi.is_finite()) {
      throw Error(ErrorCode::InvalidArgument, "periodic interval sets need finite components");
    }
    if (c.hi.value() - c.lo.value() >= P) {
      components_ = {{ExtRational::neg_inf(), ExtRational::pos_inf()}};
      period_.reset();
      return;
    }
    c = shifted(c, -floor_div(c.lo.value(), P) * P);
  }
  auto comps = merged(std::move(components));
  if (comps.size() >= 2 && comps.back().hi.value() >= comps.front().lo.value() + P) {
    comps.back().hi = std::max(comps.back().hi, ExtRational(Rational(comps.front().hi.value() + P)));
    comps.erase(comps.begin());
  }
  components_ = std::move(comps);
}

bool IntervalSet::contains(const Rational& x) const { return contains(ClosedInterval{x, x}); }

bool IntervalSet::contains(const ClosedInterval& interval) const {
  if (!period_) {
    return std::any_of(components_.begin(), components_.end(),
                       [&](const ClosedInterval& c) { return inside(interval, c); });
  }
  if (!interval.lo.is_finite() || !interval.hi.is_finite()) return false;
  const Rational& P = *period_;
  const ClosedInterval i = shifted(interval, -floor_div(interval.lo.value(), P) * P);
  for (const auto& c : components_) {
    if (inside(i, c) || inside(i, shifted(c, -P))) return true;
  }
  return false;
}

bool IntervalSet::contains(const IntervalSet& other) const {
  if (other.period_ && other.period_ != period_) return other.empty();
  return std::all_of(other.components_.begin(), other.components_.end(),
                     [&](const ClosedInterval& c) { return contains(c); });
}

bool IntervalSet::intersects(const IntervalSet& other) const {
  if (!period_ && !other.period_) {
    for (const auto& a : components_) {
      for (const auto& b : other.components_) {
        if (overlaps(a, b)) return true;
      }
    }
    return false;
  }
  if (period_ && other.period_) {
    if (*period_ != *other.period_) {
      throw Error(ErrorCode::InvalidArgument, "intersection of periodic sets with different periods");
    }
    for (const auto& a : components_) {
      for (const auto& b : other.components_) {
        for (int n = -1; n <= 1; ++n) {
          if (overlaps(a, shifted(b, n * *period_))) return true;
        }
      }
    }
    return false;
  }
  const IntervalSet& per = period_ ? *this : other;
  const IntervalSet& flat = period_ ? other : *this;
  const Rational& P = *per.period_;
  for (const auto& b : flat.components_) {
    if (!b.lo.is_finite() || !b.hi.is_finite()) {
      if (!per.empty()) return true;
      continue;
    }
    for (const auto& c : per.components_) {
      const Rational n = -floor_div(c.hi.value() - b.lo.value(), P);  // smallest n with c.hi + nP >= b.lo
      if (overlaps(b, shifted(c, n * P))) return true;
    }
  }
  return false;
}

std::string to_string(const ClosedInterval& interval) {
  return "[" + to_string(interval.lo) + ", " + to_string(interval.hi) + "]";
}

std::string to_string(const IntervalSet& set) {
  std::ostringstream out;
  if (set.empty()) out << "{}";
  for (std::size_t i = 0; i < set.components().size(); ++i) {
    if (i) out << " u ";
    out << to_string(set.components()[i]);
  }
  if (set.period()) out << " + " << to_string(*set.period()) << "Z";
  return out.str();
}

// ---------------------------------------------------------------------------

VerificationReport verify_certificate(const PingPongCertificate& c) {
  VerificationReport report;
  auto structural = [&](const std::string& why) {
    report.failure = CertificateFailure{CertificateFailure::Kind::Structure, 0, -1, PowerDirection::Positive, why};
    return report;
  };
  if (c.k < 1) return structural("k must be positive");
  if (c.A.size() != static_cast<std::size_t>(c.k) || c.B.size() != static_cast<std::size_t>(c.k)) {
    return structural("expected " + std::to_string(c.k) + " sets in each of A and B");
  }
  const auto& period = c.A.front().period();
  for (const auto* family : {&c.A, &c.B}) {
    for (const auto& s : *family) {
      if (s.period() != period) return structural("all sets must share the same periodicity");
    }
  }
  if (period) {
    if (!commutes_with_translation(c.f, *period) || !commutes_with_translation(c.g, *period)) {
      return structural("periodic sets need maps commuting with x -> x + " + to_string(*period));
    }
  }

  auto check = [&](const PLHomeo& map, CertificateFailure::Kind kind, const std::vector<IntervalSet>& from,
                   const std::vector<IntervalSet>& to, int count) -> bool {
    for (int i = 0; i < count; ++i) {
      const auto& comps = from[static_cast<std::size_t>(i)].components();
      for (std::size_t j = 0; j < comps.size(); ++j) {
        for (auto dir : {PowerDirection::Positive, PowerDirection::Negative}) {
          const ClosedInterval hull = forward_orbit_hull(map, comps[j], dir);
          if (!to[static_cast<std::size_t>(i)].contains(hull)) {
            report.failure = CertificateFailure{kind, i + 1, static_cast<int>(j), dir,
                                                "orbit hull " + to_string(hull) + " not inside " +
                                                    to_string(to[static_cast<std::size_t>(i)])};
            return false;
          }
        }
      }
    }
    return true;
  };
  if (!check(c.f, CertificateFailure::Kind::MapF, c.A, c.B, c.k)) return report;
  std::vector<IntervalSet> next(c.A.begin() + 1, c.A.end());
  if (!check(c.g, CertificateFailure::Kind::MapG, c.B, next, c.k - 1)) return report;
  if (c.A.front().intersects(c.B.back())) {
    report.failure = CertificateFailure{CertificateFailure::Kind::Disjointness, c.k, -1, PowerDirection::Positive,
                                        "A_1 meets B_" + std::to_string(c.k)};
  }
  return report;
}

std::string describe(const CertificateFailure& failure) {
  std::ostringstream out;
  const char* dir = failure.direction == PowerDirection::Positive ? "positive" : "negative";
  switch (failure.kind) {
    case CertificateFailure::Kind::Structure:
      out << "structure: " << failure.detail;
      break;
    case CertificateFailure::Kind::MapF:
      out << "f, A_" << failure.index << " component " << failure.component << ", " << dir
          << " powers: " << failure.detail;
      break;
    case CertificateFailure::Kind::MapG:
      out << "g, B_" << failure.index << " component " << failure.component << ", " << dir
          << " powers: " << failure.detail;
      break;
    case CertificateFailure::Kind::Disjointness:
      out << "disjointness: " << failure.detail;
      break;
  }
  return out.str();
}

// ---------------------------------------------------------------------------

namespace {

Rational sample_point(const ClosedInterval& c) {
  if (c.lo.is_finite() && c.hi.is_finite()) return (c.lo.value() + c.hi.value()) / 2;
  if (c.lo.is_finite()) return c.lo.value() + 1;
  if (c.hi.is_finite()) return c.hi.value() - 1;
  return 0;
}

ClosedInterval image_of(const PLHomeo& map, long n, const ClosedInterval& c) {
  auto end = [&](const ExtRational& x) {
    return x.is_finite() ? ExtRational(apply_power(map, n, x.value())) : x;
  };
  return {end(c.lo), end(c.hi)};
}

}  // namespace

WordImageReport word_image(const PingPongCertificate& c, const ReducedWord& w) {
  if (w.is_identity()) throw Error(ErrorCode::EmptyWord, "the identity is a law");
  if (w.max_generator() > 1) throw Error(ErrorCode::InvalidArgument, "word_image needs a two-letter word");
  const Assignment act{c.f, c.g};
  WordImageReport report;
  report.word = w;

  const bool has_a = std::any_of(w.syllables().begin(), w.syllables().end(),
                                 [](const Syllable& s) { return s.generator == 0; });
  if (!has_a) {
    // A nontrivial PL map has infinite order: any point it moves is moved by every power.
    const auto x = moved_point(c.g);
    if (!x) throw Error(ErrorCode::InvalidCertificate, "g is the identity");
    report.witness = report.conjugated_witness = *x;
    report.image = report.conjugated_image = apply_word(w, act, *x);
    if (report.image == report.witness) throw Error(ErrorCode::InvalidCertificate, "pure b-power fixes its witness");
    return report;
  }

  report.form = syllable_normal_form(w);
  const int kk = report.form.k;
  if (kk > c.k) {
    throw Error(ErrorCode::SyllableOverflow, "word needs " + std::to_string(kk) + " a-syllables, certificate has k = " +
                                                 std::to_string(c.k));
  }
  const IntervalSet& start = c.A.front();
  const IntervalSet& finish = c.B[static_cast<std::size_t>(kk - 1)];
  if (start.intersects(finish)) {
    throw Error(ErrorCode::InvalidCertificate, "A_1 meets B_" + std::to_string(kk));
  }

  std::vector<ClosedInterval> current = start.components();
  const auto& syl = report.form.conjugated.syllables();
  int level = 1;
  for (auto it = syl.rbegin(); it != syl.rend(); ++it) {
    const bool is_a = it->generator == 0;
    const PLHomeo& map = is_a ? c.f : c.g;
    if (!is_a) ++level;
    const IntervalSet& target = is_a ? c.B[static_cast<std::size_t>(level - 1)] : c.A[static_cast<std::size_t>(level - 1)];
    std::vector<ClosedInterval> next;
    for (const auto& comp : current) next.push_back(image_of(map, it->exponent, comp));
    ChainStep step;
    step.syllable = *it;
    step.target = std::string(is_a ? "B_" : "A_") + std::to_string(level);
    step.contained = std::all_of(next.begin(), next.end(), [&](const ClosedInterval& i) { return target.contains(i); });
    step.image = IntervalSet(next, start.period());
    report.chain.push_back(step);
    if (!step.contained) {
      throw Error(ErrorCode::InvalidCertificate, "chain breaks at step " + std::to_string(report.chain.size()) +
                                                     ": image " + to_string(step.image) + " not inside " + step.target);
    }
    current = std::move(next);
  }

  const Rational x = sample_point(start.components().front());
  report.conjugated_witness = x;
  report.conjugated_image = apply_word(report.form.conjugated, act, x);
  if (!finish.contains(report.conjugated_image) || report.conjugated_image == x) {
    throw Error(ErrorCode::InvalidCertificate, "witness point does not land in B_" + std::to_string(kk));
  }
  // W = a^-c W' a^c, so y = f^-c(x) is moved by W.
  report.witness = apply_power(c.f, -report.form.conjugator_power, x);
  report.image = apply_word(w, act, report.witness);
  if (report.image == report.witness) throw Error(ErrorCode::InvalidCertificate, "conjugated witness is fixed");
  return report;
}

PingPongCertificate from_interleaved_points(const PLHomeo& f, const PLHomeo& g, const std::vector<Rational>& p,
                                            const std::vector<Rational>& q, const Rational& radius) {
  if (p.size() != q.size() || p.size() < 3 || p.size() % 2 == 0) {
    throw Error(ErrorCode::NotIntertwined, "need 2k+1 points of each kind with k >= 1");
  }
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (!(p[j] < q[j]) || (j + 1 < p.size() && !(q[j] < p[j + 1]))) {
      throw Error(ErrorCode::NotIntertwined, "points are not interleaved at index " + std::to_string(j + 1));
    }
  }
  if (!(radius > 0)) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
  const int k = static_cast<int>(p.size() / 2);
  auto P = [&](int j) { return p[static_cast<std::size_t>(j - 1)]; };  // 1-based
  auto Q = [&](int j) { return q[static_cast<std::size_t>(j - 1)]; };

  // Only p_2..p_2k and q_1..q_2k are used.
  std::vector<Rational> used;
  for (int j = 2; j <= 2 * k; ++j) used.push_back(P(j));
  for (int j = 1; j <= 2 * k; ++j) used.push_back(Q(j));
  std::sort(used.begin(), used.end());
  for (std::size_t j = 1; j < used.size(); ++j) {
    if (2 * radius >= used[j] - used[j - 1]) {
      throw Error(ErrorCode::OverlappingNeighborhoods,
                  "radius " + to_string(radius) + " is not below half the gap " + to_string(used[j] - used[j - 1]));
    }
  }
  auto ball = [&](const Rational& x) {
    return ClosedInterval{ExtRational(Rational(x - radius)), ExtRational(Rational(x + radius))};
  };

  PingPongCertificate c{f, g, k, {}, {}, 1};
  for (int i = 1; i <= k; ++i) {
    std::vector<ClosedInterval> a, b;
    for (int j = -(i - 1); j <= i - 1; ++j) a.push_back(ball(P(k + 1 + j)));
    for (int j = -i; j <= i - 1; ++j) b.push_back(ball(Q(k + 1 + j)));
    c.A.emplace_back(std::move(a));
    c.B.emplace_back(std::move(b));
  }
  return c;
}

}  // namespace plg
