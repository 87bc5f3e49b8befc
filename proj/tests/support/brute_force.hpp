#pragma once

// Independent checks used by several test binaries: plain iteration of maps
// on interval end points, no orbit hulls involved.

#include <string>

#include "plg/ping_pong.hpp"

namespace plg::testing {

inline ExtRational iterate(const PLHomeo& f, long n, const ExtRational& x) {
  if (!x.is_finite()) return x;
  Rational y = x.value();
  for (long i = 0; i < (n < 0 ? -n : n); ++i) y = n > 0 ? f.evaluate(y) : f.evaluate_inverse(y);
  return y;
}

/// Empty string when f^n(from_i) ⊆ to_i for 1 <= |n| <= max_n, else a description.
inline std::string brute_force_family(const PLHomeo& f, const std::vector<IntervalSet>& from,
                                      const std::vector<IntervalSet>& to, std::size_t count, long max_n) {
  for (std::size_t i = 0; i < count; ++i) {
    for (const auto& c : from[i].components()) {
      for (long sgn : {1L, -1L}) {
        ClosedInterval img = c;
        for (long n = 1; n <= max_n; ++n) {
          img = {iterate(f, sgn, img.lo), iterate(f, sgn, img.hi)};
          if (!to[i].contains(img)) {
            return "set " + std::to_string(i + 1) + " power " + std::to_string(sgn * n) + " image " + to_string(img);
          }
        }
      }
    }
  }
  return {};
}

inline std::string brute_force_certificate(const PingPongCertificate& c, long max_n = 50) {
  auto r = brute_force_family(c.f, c.A, c.B, static_cast<std::size_t>(c.k), max_n);
  if (!r.empty()) return "f: " + r;
  std::vector<IntervalSet> next(c.A.begin() + 1, c.A.end());
  r = brute_force_family(c.g, c.B, next, static_cast<std::size_t>(c.k - 1), max_n);
  if (!r.empty()) return "g: " + r;
  return {};
}

}  // namespace plg::testing
