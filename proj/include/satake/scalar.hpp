#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace satake {

using Int = std::int64_t;
using Rational = mpq_class;

using IVec = std::vector<Int>;
using QVec = std::vector<Rational>;

// Accepts "p" or "p/q" with an optional sign.
Rational parse_rational(std::string_view s);
std::string to_string(const Rational& q);

// Elements of Q(i).
class GaussQ {
 public:
  GaussQ() = default;
  GaussQ(int v) : re_(v) {}
  GaussQ(long v) : re_(v) {}
  GaussQ(Rational re) : re_(std::move(re)) {}
  GaussQ(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussQ i() { return GaussQ(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussQ conj() const { return GaussQ(re_, -im_); }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussQ inverse() const;
  GaussQ pow(Int e) const;

  GaussQ& operator+=(const GaussQ& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussQ& operator-=(const GaussQ& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussQ& operator*=(const GaussQ& o);
  GaussQ& operator*=(const Rational& q) {
    re_ *= q;
    im_ *= q;
    return *this;
  }
  GaussQ& operator/=(const GaussQ& o) { return *this *= o.inverse(); }

  friend GaussQ operator+(GaussQ a, const GaussQ& b) { return a += b; }
  friend GaussQ operator-(GaussQ a, const GaussQ& b) { return a -= b; }
  friend GaussQ operator*(GaussQ a, const GaussQ& b) { return a *= b; }
  friend GaussQ operator*(GaussQ a, const Rational& b) { return a *= b; }
  friend GaussQ operator*(const Rational& b, GaussQ a) { return a *= b; }
  friend GaussQ operator/(GaussQ a, const GaussQ& b) { return a /= b; }
  GaussQ operator-() const { return GaussQ(-re_, -im_); }

  friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const GaussQ& a, const GaussQ& b) { return !(a == b); }

 private:
  Rational re_{0};
  Rational im_{0};
};

// "re|im" or "re" (re, im rationals).
GaussQ parse_gauss(std::string_view s);
// Same syntax as parse_gauss; "3/2", "0|1", "1/2|-3".
std::string to_spec(const GaussQ& z);
// Human readable: "3/2", "i", "1/2-3i".
std::string to_string(const GaussQ& z);
std::ostream& operator<<(std::ostream& os, const GaussQ& z);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const GaussQ& z) { return z.is_zero(); }
inline bool is_zero(Int v) { return v == 0; }

Int height(const IVec& v);
Rational height(const QVec& v);
QVec to_q(const IVec& v);
bool is_nonneg(const IVec& v);
bool is_nonpos(const IVec& v);
bool is_zero_vec(const IVec& v);
IVec neg(IVec v);
IVec add(IVec a, const IVec& b);
IVec sub(IVec a, const IVec& b);
IVec unit(int n, int i);
std::string to_string(const IVec& v);
std::string to_string(const QVec& v);

struct IVecHash {
  std::size_t operator()(const IVec& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Int x : v) h = (h ^ static_cast<std::size_t>(x + 0x9e3779b9)) * 1099511628211ull;
    return h;
  }
};

}  // namespace satake
