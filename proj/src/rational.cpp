#include "plg/rational.hpp"

#include <cctype>

#include "plg/error.hpp"

namespace plg {

namespace {

bool valid_integer_text(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
  if (!valid_integer_text(num, true) || (slash != std::string_view::npos && !valid_integer_text(den, false))) {
    throw Error(ErrorCode::MalformedInput, "malformed rational: '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d = 1;
  if (slash != std::string_view::npos) d = mpz_class(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::MalformedInput, "zero denominator: '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

int sign(const Rational& q) { return sgn(q); }

Rational floor_div(const Rational& x, const Rational& period) {
  Rational ratio = x / period;
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
  return Rational(f);
}

Rational rational_gcd(const Rational& x, const Rational& y) {
  // gcd(a/b, c/d) = gcd(a d, c b) / (b d), then canonicalized.
  mpz_class num;
  const mpz_class lhs = x.get_num() * y.get_den();
  const mpz_class rhs = y.get_num() * x.get_den();
  mpz_gcd(num.get_mpz_t(), lhs.get_mpz_t(), rhs.get_mpz_t());
  Rational g(num, x.get_den() * y.get_den());
  g.canonicalize();
  return g;
}

Rational rational_lcm(const Rational& x, const Rational& y) {
  const Rational ax = abs(x);
  const Rational ay = abs(y);
  if (ax == 0 || ay == 0) throw Error(ErrorCode::InvalidArgument, "rational_lcm of zero");
  return ax * ay / rational_gcd(ax, ay);
}

bool is_integer_multiple(const Rational& x, const Rational& step) {
  Rational ratio = x / step;
  return ratio.get_den() == 1;
}

Rational pow2(long exponent) {
  mpz_class p = 1;
  const unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), e);
  return exponent < 0 ? Rational(mpz_class(1), p) : Rational(p);
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (!a.is_finite()) return std::strong_ordering::equal;
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(const ExtRational& q) {
  if (q.is_neg_inf()) return "-inf";
  if (q.is_pos_inf()) return "inf";
  return to_string(q.value());
}

ExtRational parse_ext_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s == "-inf") return ExtRational::neg_inf();
  if (s == "inf" || s == "+inf") return ExtRational::pos_inf();
  return ExtRational(parse_rational(s));
}

}  // namespace plg
