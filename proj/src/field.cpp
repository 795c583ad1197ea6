#include "suig/field.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace suig {

namespace {

int sgn_q(const Rational& q) { return sgn(q); }

std::size_t bits(const mpz_class& z) { return mpz_sizeinbase(z.get_mpz_t(), 2); }

double log2_abs(const Rational& q) {
  long en = 0;
  long ed = 0;
  double dn = std::fabs(mpz_get_d_2exp(&en, q.get_num_mpz_t()));
  double dd = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::log2(dn) + static_cast<double>(en) - std::log2(dd) - static_cast<double>(ed);
}

double log2_sum(double x, double y) {
  double hi = std::max(x, y);
  double lo = std::min(x, y);
  return hi + std::log2(1.0 + std::exp2(lo - hi));
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 ||
      mpz_perfect_square_p(q.get_den_mpz_t()) == 0) {
    return std::nullopt;
  }
  mpz_class n;
  mpz_class d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) throw std::invalid_argument("empty rational");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-')) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
  }
  Rational q;
  if (q.set_str(s, 10) != 0 || sgn(q.get_den()) == 0) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace

int Scalar::sign() const {
  const int sa = sgn_q(a_);
  const int sb = sgn_q(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: whichever of a^2, 3b^2 is larger dominates (never equal).
  Rational a2 = a_ * a_;
  Rational b2 = 3 * b_ * b_;
  return a2 > b2 ? sa : sb;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Scalar& Scalar::scale_by(const Rational& q) {
  if (q == 1) return *this;
  a_ *= q;
  if (sgn(b_) != 0) b_ *= q;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (o.is_rational()) return scale_by(o.a_);
  Rational a = a_ * o.a_ + 3 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
  if (o.is_rational()) {
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  // Multiply through by the conjugate c - d*sqrt3.
  Rational norm = o.a_ * o.a_ - 3 * o.b_ * o.b_;
  Rational a = (a_ * o.a_ - 3 * b_ * o.b_) / norm;
  Rational b = (b_ * o.a_ - a_ * o.b_) / norm;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

std::strong_ordering operator<=>(const Scalar& l, const Scalar& r) {
  // Equal parts on one side reduce to a rational comparison without temporaries.
  int s = 0;
  if (l.root3_part() == r.root3_part()) {
    s = cmp(l.rational_part(), r.rational_part());
  } else if (l.rational_part() == r.rational_part()) {
    s = cmp(l.root3_part(), r.root3_part());
  } else {
    s = (l - r).sign();
  }
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::size_t Scalar::bit_length() const {
  return std::max({bits(a_.get_num()), bits(a_.get_den()), bits(b_.get_num()),
                   bits(b_.get_den())});
}

double Scalar::approx() const {
  const int s = sign();
  if (s == 0) return 0.0;
  return s * std::exp2(log2_magnitude());
}

double Scalar::log2_magnitude() const {
  if (is_zero()) throw std::domain_error("log2_magnitude of zero");
  // Computed without catastrophic cancellation.
  double l2 = 0.0;
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) {
    l2 = log2_abs(a_);
  } else if (sa == 0) {
    l2 = log2_abs(b_) + 0.5 * std::log2(3.0);
  } else if (sa == sb) {
    l2 = log2_sum(log2_abs(a_), log2_abs(b_) + 0.5 * std::log2(3.0));
  } else {
    // |a + b r| = |a^2 - 3b^2| / |a - b r|, and a - b r has no cancellation.
    Rational norm = a_ * a_ - 3 * b_ * b_;
    l2 = log2_abs(norm) - log2_sum(log2_abs(a_), log2_abs(b_) + 0.5 * std::log2(3.0));
  }
  return l2;
}

std::string Scalar::to_string() const {
  if (is_rational()) return a_.get_str();
  std::string out;
  if (sgn(a_) != 0) {
    out = a_.get_str();
    if (sgn(b_) > 0) out += '+';
  }
  out += b_.get_str();
  out += "*sqrt3";
  return out;
}

Scalar Scalar::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  constexpr std::string_view kRoot = "sqrt3";
  if (text.size() < kRoot.size() || text.substr(text.size() - kRoot.size()) != kRoot) {
    return Scalar(parse_rational(text));
  }
  std::string_view head = text.substr(0, text.size() - kRoot.size());
  bool explicit_coeff = false;
  if (!head.empty() && head.back() == '*') {
    head.remove_suffix(1);
    explicit_coeff = true;
  }
  // Split "a+b" / "a-b" at the last sign that is not leading.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if (head[i] == '+' || head[i] == '-') {
      split = i;
      break;
    }
  }
  std::string_view a_text = split == std::string_view::npos ? std::string_view{} : head.substr(0, split);
  std::string_view b_text = split == std::string_view::npos ? head : head.substr(split);
  Rational b;
  if (b_text.empty() || b_text == "+" || b_text == "-") {
    if (explicit_coeff) throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
    b = b_text == "-" ? -1 : 1;
  } else {
    if (!explicit_coeff) throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
    b = parse_rational(b_text);
  }
  Rational a = a_text.empty() ? Rational(0) : parse_rational(a_text);
  return Scalar(std::move(a), std::move(b));
}

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

Scalar square(const Scalar& s) { return s * s; }

std::optional<Scalar> exact_sqrt(const Scalar& s) {
  const int sg = s.sign();
  if (sg < 0) return std::nullopt;
  if (sg == 0) return Scalar(0);
  const Rational& a = s.rational_part();
  const Rational& b = s.root3_part();
  if (s.is_rational()) {
    if (auto r = rational_sqrt(a)) return Scalar(*r);
    if (auto r = rational_sqrt(a / 3)) return Scalar(Rational(0), *r);
    return std::nullopt;
  }
  // (c + e r)^2 = c^2 + 3e^2 + 2ce r, so c^2 solves x^2 - a x + 3b^2/4 = 0.
  auto t = rational_sqrt(a * a - 3 * b * b);
  if (!t) return std::nullopt;
  for (const Rational& c2 : {Rational((a + *t) / 2), Rational((a - *t) / 2)}) {
    if (sgn(c2) <= 0) continue;
    auto c = rational_sqrt(c2);
    if (!c) continue;
    Rational e = b / (2 * *c);
    Scalar root(*c, e);
    if (root.sign() < 0) root = -root;
    if (square(root) == s) return root;
  }
  return std::nullopt;
}

Rational sqrt_lower_bound(const Scalar& s) {
  const int sg = s.sign();
  if (sg < 0) throw std::domain_error("sqrt_lower_bound: negative argument");
  if (sg == 0) return Rational(0);
  constexpr mp_bitcnt_t kPrec = 256;
  mpf_class r3(3, kPrec);
  r3 = sqrt(r3);
  const Rational& a = s.rational_part();
  const Rational& b = s.root3_part();
  mpf_class value(0, kPrec);
  if (sgn(a) >= 0 && sgn(b) >= 0) {
    value = mpf_class(a, kPrec) + mpf_class(b, kPrec) * r3;
  } else {
    // Mixed signs: go through the conjugate so nothing cancels.
    mpf_class norm(Rational(a * a - 3 * b * b), kPrec);
    mpf_class conj = mpf_class(a, kPrec) - mpf_class(b, kPrec) * r3;
    value = norm / conj;
  }
  mpf_class root(0, kPrec);
  root = sqrt(value);
  mpf_class shrink(1, kPrec);
  mpf_div_2exp(shrink.get_mpf_t(), shrink.get_mpf_t(), 110);
  root *= mpf_class(1, kPrec) - shrink;
  Rational lower(root);
  while (Scalar(square(Scalar(lower))) > s) {
    lower *= Rational(1, 1) - Rational(1, mpz_class(1) << 100);
  }
  lower.canonicalize();
  return lower;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

std::size_t Point2::bit_length() const { return std::max(x.bit_length(), y.bit_length()); }

Scalar dot(const Point2& u, const Point2& v) { return u.x * v.x + u.y * v.y; }

Scalar cross(const Point2& u, const Point2& v) { return u.x * v.y - u.y * v.x; }

Scalar dist_sq(const Point2& p, const Point2& q) {
  Point2 d = q - p;
  return dot(d, d);
}

int orientation(const Point2& p, const Point2& q, const Point2& r) {
  return cross(q - p, r - p).sign();
}

std::ostream& operator<<(std::ostream& os, const Point2& p) {
  return os << '(' << p.x << ", " << p.y << ')';
}

}  // namespace suig
