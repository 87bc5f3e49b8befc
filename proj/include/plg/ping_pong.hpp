#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plg/pl_homeo.hpp"
#include "plg/word.hpp"

namespace plg {

/// Finite union of disjoint closed intervals. With `period` set the set is
/// the union of all translates of `components` by integer multiples of it;
/// the components then lie in one window of that length.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<ClosedInterval> components, std::optional<Rational> period = std::nullopt);

  const std::vector<ClosedInterval>& components() const { return components_; }
  const std::optional<Rational>& period() const { return period_; }
  bool empty() const { return components_.empty(); }

  bool contains(const Rational& x) const;
  bool contains(const ClosedInterval& interval) const;
  bool intersects(const IntervalSet& other) const;
  bool contains(const IntervalSet& other) const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<ClosedInterval> components_;
  std::optional<Rational> period_;
};

std::string to_string(const ClosedInterval& interval);
std::string to_string(const IntervalSet& set);

struct PingPongCertificate {
  PLHomeo f;
  PLHomeo g;
  int k = 1;
  std::vector<IntervalSet> A;  // A_1 .. A_k
  std::vector<IntervalSet> B;  // B_1 .. B_k
  long power = 1;              // informational: f, g are N-th powers of a base pair
};

struct CertificateFailure {
  enum class Kind { Structure, MapF, MapG, Disjointness };
  Kind kind = Kind::Structure;
  int index = 0;       // 1-based set index i; k for the A_1 / B_k overlap
  int component = -1;  // component of A_i (f) or B_i (g)
  PowerDirection direction = PowerDirection::Positive;
  std::string detail;
};

struct VerificationReport {
  std::optional<CertificateFailure> failure;
  bool ok() const { return !failure.has_value(); }
};

/// Checks f^n(A_i) ⊆ B_i and g^n(B_i) ⊆ A_{i+1} for every n != 0 via closed
/// orbit hulls, then A_1 ∩ B_k = ∅. The first failure in that order is reported.
VerificationReport verify_certificate(const PingPongCertificate& c);
std::string describe(const CertificateFailure& failure);

struct ChainStep {
  Syllable syllable;
  std::string target;  // "B_i" or "A_i"
  IntervalSet image;
  bool contained = false;
};

struct WordImageReport {
  ReducedWord word;
  SyllableForm form;           // empty form (k = 0) for pure b-powers
  std::vector<ChainStep> chain;
  Rational conjugated_witness;  // x in A_1 with W'(x) in B_k'
  Rational conjugated_image;
  Rational witness;             // y with W(y) != y for the original word
  Rational image;
};

/// Replays the ping-pong chain of `w` on the certificate. Throws
/// SyllableOverflow when w needs more than c.k a-syllables and
/// InvalidCertificate when the chain breaks.
WordImageReport word_image(const PingPongCertificate& c, const ReducedWord& w);

/// Nested neighbourhood sets around interleaved fixed points
/// p_1 < q_1 < ... < p_{2k+1} < q_{2k+1}.
PingPongCertificate from_interleaved_points(const PLHomeo& f, const PLHomeo& g, const std::vector<Rational>& p,
                                            const std::vector<Rational>& q, const Rational& radius);

}  // namespace plg
