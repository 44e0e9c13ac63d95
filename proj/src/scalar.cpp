#include "satake/scalar.hpp"

#include <sstream>
#include <stdexcept>

#include "satake/error.hpp"

namespace satake {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotGCM: return "NotGCM";
    case Errc::NotSymmetrizable: return "NotSymmetrizable";
    case Errc::Decomposable: return "Decomposable";
    case Errc::NotFiniteType: return "NotFiniteType";
    case Errc::NotInWeylGroup: return "NotInWeylGroup";
    case Errc::BeyondBruteForce: return "BeyondBruteForce";
    case Errc::NotCompatible: return "NotCompatible";
    case Errc::InvalidCharacter: return "InvalidCharacter";
    case Errc::RankGuardExceeded: return "RankGuardExceeded";
    case Errc::NotGeneralizedSatake: return "NotGeneralizedSatake";
    case Errc::OrderCapExceeded: return "OrderCapExceeded";
    case Errc::UnrecognizedRestrictedType: return "UnrecognizedRestrictedType";
    case Errc::TruncationOverflow: return "TruncationOverflow";
    case Errc::CaseMismatch: return "CaseMismatch";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Rational parse_rational(std::string_view s) {
  auto bad = [&] { return std::invalid_argument("not a rational: '" + std::string(s) + "'"); };
  if (s.empty()) throw bad();
  std::size_t slash = s.find('/');
  auto digits_ok = [](std::string_view t) {
    std::size_t k = 0;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) k = 1;
    if (k >= t.size()) return false;
    for (; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9') return false;
    return true;
  };
  std::string num(s.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(s.substr(slash + 1));
  if (!digits_ok(num) || !digits_ok(den) || den[0] == '-' || den[0] == '+') throw bad();
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw bad();
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

GaussQ& GaussQ::operator*=(const GaussQ& o) {
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussQ GaussQ::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw std::domain_error("inverse of zero in Q(i)");
  return GaussQ(re_ / n, -im_ / n);
}

GaussQ GaussQ::pow(Int e) const {
  GaussQ base = e < 0 ? inverse() : *this;
  Int k = e < 0 ? -e : e;
  GaussQ r(1);
  while (k > 0) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

GaussQ parse_gauss(std::string_view s) {
  std::size_t bar = s.find('|');
  if (bar == std::string_view::npos) return GaussQ(parse_rational(s));
  return GaussQ(parse_rational(s.substr(0, bar)), parse_rational(s.substr(bar + 1)));
}

std::string to_spec(const GaussQ& z) {
  if (z.is_real()) return z.re().get_str();
  return z.re().get_str() + "|" + z.im().get_str();
}

std::string to_string(const GaussQ& z) {
  if (z.is_real()) return z.re().get_str();
  std::string im;
  if (z.im() == 1)
    im = "i";
  else if (z.im() == -1)
    im = "-i";
  else
    im = z.im().get_str() + "i";
  if (sgn(z.re()) == 0) return im;
  if (im[0] != '-') im = "+" + im;
  return z.re().get_str() + im;
}

std::ostream& operator<<(std::ostream& os, const GaussQ& z) { return os << to_string(z); }

Int height(const IVec& v) {
  Int h = 0;
  for (Int x : v) h += x;
  return h;
}

Rational height(const QVec& v) {
  Rational h = 0;
  for (const auto& x : v) h += x;
  return h;
}

QVec to_q(const IVec& v) {
  QVec q(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) q[k] = Rational(static_cast<long>(v[k]));
  return q;
}

bool is_nonneg(const IVec& v) {
  for (Int x : v)
    if (x < 0) return false;
  return true;
}

bool is_nonpos(const IVec& v) {
  for (Int x : v)
    if (x > 0) return false;
  return true;
}

bool is_zero_vec(const IVec& v) {
  for (Int x : v)
    if (x != 0) return false;
  return true;
}

IVec neg(IVec v) {
  for (Int& x : v) x = -x;
  return v;
}

IVec add(IVec a, const IVec& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

IVec sub(IVec a, const IVec& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

IVec unit(int n, int i) {
  IVec v(n, 0);
  v[i] = 1;
  return v;
}

std::string to_string(const IVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ')';
  return os.str();
}

std::string to_string(const QVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k].get_str();
  os << ')';
  return os.str();
}

}  // namespace satake
