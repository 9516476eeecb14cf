#pragma once

// Exact coefficient arithmetic for the two ground fields used throughout:
// the rationals Q and the rational function field Q(q).  Values are
// immutable and canonically normalized, so equality is plain comparison.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rta {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Error with a stable machine-readable code, surfaced verbatim by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline Int int_pow(Int base, unsigned long e) {
  Int r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline Rat rat_pow(const Rat& base, long long e) {
  if (e == 0) return Rat(1);
  if (base == 0) {
    if (e < 0) throw Error("DivisionByZero", "0 raised to a negative power");
    return Rat(0);
  }
  Int n = numerator(base), d = denominator(base);
  unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  Int np = int_pow(n, a), dp = int_pow(d, a);
  if (e < 0) std::swap(np, dp);
  if (dp < 0) {
    np = -np;
    dp = -dp;
  }
  return Rat(np, dp);
}

// Dense integer-coefficient polynomial in one variable, used as the
// numerator/denominator type of Q(q).  coeff_[i] is the coefficient of q^i;
// the vector carries no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(Int c) {
    if (c != 0) coeff_.push_back(std::move(c));
  }
  explicit IntPoly(std::vector<Int> c) : coeff_(std::move(c)) { trim(); }

  static IntPoly variable() { return IntPoly(std::vector<Int>{0, 1}); }

  bool is_zero() const { return coeff_.empty(); }
  // degree of 0 is -1 by convention
  int degree() const { return static_cast<int>(coeff_.size()) - 1; }
  int valuation() const {  // lowest nonzero power; -1 for the zero polynomial
    for (size_t i = 0; i < coeff_.size(); ++i)
      if (coeff_[i] != 0) return static_cast<int>(i);
    return -1;
  }
  const Int& lead() const { return coeff_.back(); }
  Int coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeff_.size())) return Int(0);
    return coeff_[static_cast<size_t>(i)];
  }
  const std::vector<Int>& coeffs() const { return coeff_; }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeff_ == b.coeff_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  friend IntPoly operator-(const IntPoly& a) {
    std::vector<Int> c(a.coeff_);
    for (auto& x : c) x = -x;
    return IntPoly(std::move(c));
  }
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.coeff_.size(), b.coeff_.size()), Int(0));
    for (size_t i = 0; i < a.coeff_.size(); ++i) c[i] += a.coeff_[i];
    for (size_t i = 0; i < b.coeff_.size(); ++i) c[i] += b.coeff_[i];
    return IntPoly(std::move(c));
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> c(a.coeff_.size() + b.coeff_.size() - 1, Int(0));
    for (size_t i = 0; i < a.coeff_.size(); ++i) {
      if (a.coeff_[i] == 0) continue;
      for (size_t j = 0; j < b.coeff_.size(); ++j) c[i + j] += a.coeff_[i] * b.coeff_[j];
    }
    return IntPoly(std::move(c));
  }

  Int content() const {  // gcd of the coefficients, nonnegative
    Int g = 0;
    for (const auto& c : coeff_) g = boost::multiprecision::gcd(g, c);
    return g;
  }

  IntPoly divide_by_int(const Int& g) const {
    std::vector<Int> c(coeff_);
    for (auto& x : c) x /= g;
    return IntPoly(std::move(c));
  }

  // exact division; the remainder must vanish
  IntPoly divide_exact(const IntPoly& d) const {
    if (d.is_zero()) throw Error("DivisionByZero", "polynomial division by zero");
    IntPoly rem = *this;
    if (rem.is_zero()) return IntPoly();
    std::vector<Int> q(static_cast<size_t>(std::max(0, rem.degree() - d.degree() + 1)), Int(0));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
      Int c = rem.lead() / d.lead();
      if (c * d.lead() != rem.lead())
        throw Error("InternalError", "inexact polynomial division");
      int shift = rem.degree() - d.degree();
      q[static_cast<size_t>(shift)] = c;
      std::vector<Int> sub(static_cast<size_t>(shift), Int(0));
      for (const auto& x : d.coeff_) sub.push_back(c * x);
      rem = rem - IntPoly(std::move(sub));
      if (!rem.is_zero() && rem.degree() >= d.degree() + shift)
        throw Error("InternalError", "polynomial division did not reduce degree");
    }
    if (!rem.is_zero()) throw Error("InternalError", "inexact polynomial division");
    return IntPoly(std::move(q));
  }

  // primitive part with positive leading coefficient
  IntPoly primitive() const {
    if (is_zero()) return IntPoly();
    Int g = content();
    if (lead() < 0) g = -g;
    return divide_by_int(g);
  }

  // gcd via the primitive PRS; result primitive with positive leading coeff
  static IntPoly gcd(IntPoly a, IntPoly b) {
    a = a.primitive();
    b = b.primitive();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
      // pseudo-remainder of a by b
      IntPoly rem = a;
      int k = a.degree() - b.degree() + 1;
      Int lb = b.lead();
      Int scale = int_pow(lb, static_cast<unsigned long>(k));
      rem = rem.mul_int(scale);
      while (!rem.is_zero() && rem.degree() >= b.degree()) {
        Int c = rem.lead() / lb;
        int shift = rem.degree() - b.degree();
        std::vector<Int> sub(static_cast<size_t>(shift), Int(0));
        for (const auto& x : b.coeff_) sub.push_back(c * x);
        rem = rem - IntPoly(std::move(sub));
      }
      a = b;
      b = rem.primitive();
    }
    return a.primitive();
  }

  IntPoly mul_int(const Int& k) const {
    if (k == 0) return IntPoly();
    std::vector<Int> c(coeff_);
    for (auto& x : c) x *= k;
    return IntPoly(std::move(c));
  }

  Rat eval(const Rat& x) const {  // Horner
    Rat r = 0;
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) r = r * x + Rat(*it);
    return r;
  }

  friend bool operator<(const IntPoly& a, const IntPoly& b) { return a.coeff_ < b.coeff_; }

  std::string to_string(const std::string& var = "q") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Int& c = coeff_[static_cast<size_t>(i)];
      if (c == 0) continue;
      Int a = c < 0 ? Int(-c) : c;
      if (out.empty())
        out += (c < 0 ? "-" : "");
      else
        out += (c < 0 ? " - " : " + ");
      bool unit = (a == 1);
      if (i == 0) {
        out += a.str();
      } else {
        if (!unit) out += a.str() + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
  }
  std::vector<Int> coeff_;
};

enum class Field { Q, Qq };

inline std::string field_name(Field f) { return f == Field::Q ? "Q" : "Q(q)"; }

// Element of the active coefficient field.  Q values are stored as reduced
// rationals.  Q(q) values are stored as a pair of integer polynomials with
// no common polynomial factor, no common integer content, and positive
// leading coefficient on the denominator — one representation per value.
class Scalar {
 public:
  Scalar() : field_(Field::Q), rat_(0) {}

  static Scalar rational(Rat r) {
    Scalar s;
    s.field_ = Field::Q;
    s.rat_ = std::move(r);
    return s;
  }
  static Scalar integer(long long v, Field f = Field::Q) {
    if (f == Field::Q) return rational(Rat(v));
    return ratfunc(IntPoly(Int(v)), IntPoly(Int(1)));
  }
  static Scalar of(const Rat& r, Field f) {
    if (f == Field::Q) return rational(r);
    return ratfunc(IntPoly(numerator(r)), IntPoly(denominator(r)));
  }
  static Scalar ratfunc(IntPoly num, IntPoly den) {
    if (den.is_zero()) throw Error("DivisionByZero", "zero denominator in Q(q)");
    Scalar s;
    s.field_ = Field::Qq;
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    s.normalize();
    return s;
  }
  static Scalar q() { return ratfunc(IntPoly::variable(), IntPoly(Int(1))); }
  static Scalar zero(Field f) { return integer(0, f); }
  static Scalar one(Field f) { return integer(1, f); }

  Field field() const { return field_; }
  bool is_zero() const { return field_ == Field::Q ? rat_ == 0 : num_.is_zero(); }
  bool is_one() const {
    if (field_ == Field::Q) return rat_ == 1;
    return num_ == IntPoly(Int(1)) && den_ == IntPoly(Int(1));
  }
  const Rat& rat() const {
    if (field_ != Field::Q) throw Error("MixedField", "not a rational value");
    return rat_;
  }
  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }

  // a Q(q) value that happens to be a constant, returned as a rational
  std::optional<Rat> as_constant() const {
    if (field_ == Field::Q) return rat_;
    if (num_.degree() <= 0 && den_.degree() <= 0) {
      if (num_.is_zero()) return Rat(0);
      return Rat(num_.coeff(0), den_.coeff(0));
    }
    return std::nullopt;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) return false;
    if (a.field_ == Field::Q) return a.rat_ == b.rat_;
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b) {  // structural order for containers
    if (a.field_ != b.field_) return a.field_ < b.field_;
    if (a.field_ == Field::Q) return a.rat_ < b.rat_;
    if (a.num_ != b.num_) return a.num_ < b.num_;
    return a.den_ < b.den_;
  }

  friend Scalar operator-(const Scalar& a) {
    if (a.field_ == Field::Q) return rational(-a.rat_);
    Scalar s = a;
    s.num_ = -s.num_;
    return s;
  }
  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    check_fields(a, b);
    if (a.field_ == Field::Q) return rational(a.rat_ + b.rat_);
    return ratfunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    check_fields(a, b);
    if (a.field_ == Field::Q) return rational(a.rat_ * b.rat_);
    return ratfunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    check_fields(a, b);
    if (b.is_zero()) throw Error("DivisionByZero", "division by zero scalar");
    if (a.field_ == Field::Q) return rational(a.rat_ / b.rat_);
    return ratfunc(a.num_ * b.den_, a.den_ * b.num_);
  }

  Scalar inverse() const { return one(field_) / *this; }

  Scalar pow(long long e) const {
    if (e == 0) return one(field_);
    Scalar base = e < 0 ? inverse() : *this;
    unsigned long long k = static_cast<unsigned long long>(e < 0 ? -e : e);
    Scalar r = one(field_);
    while (k) {
      if (k & 1) r = r * base;
      base = base * base;
      k >>= 1;
    }
    return r;
  }

  // false, or the minimal positive order n with value^n = 1.  Over Q and
  // Q(q) the only roots of unity are +-1.
  std::optional<int> root_of_unity_order() const {
    if (is_zero()) throw Error("ZeroInput", "root-of-unity test on zero");
    auto c = as_constant();
    if (!c) return std::nullopt;
    if (*c == 1) return 1;
    if (*c == -1) return 2;
    return std::nullopt;
  }

  // exact evaluation of a Q(q) value at q = q0
  Scalar specialize(const Rat& q0) const {
    if (field_ != Field::Qq) throw Error("MixedField", "specialize needs a Q(q) value");
    Rat d = den_.eval(q0);
    if (d == 0) throw Error("PoleAtPoint", "denominator vanishes at q = " + rat_to_string(q0));
    return rational(num_.eval(q0) / d);
  }

  // Laurent-degree data used by the q-dominance arguments: degree of the
  // value (deg num - deg den) and its valuation at q = 0.
  int q_degree() const {
    if (field_ == Field::Q || is_zero())
      throw Error("ZeroInput", "q_degree of zero or rational");
    return num_.degree() - den_.degree();
  }
  int q_valuation() const {
    if (field_ == Field::Q || is_zero())
      throw Error("ZeroInput", "q_valuation of zero or rational");
    return num_.valuation() - den_.valuation();
  }

  static std::string rat_to_string(const Rat& r) {
    Int n = numerator(r), d = denominator(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
  }

  std::string to_string() const {
    if (field_ == Field::Q) return rat_to_string(rat_);
    if (den_ == IntPoly(Int(1))) {
      if (num_.degree() <= 0) return num_.to_string();
      return "(" + num_.to_string() + ")";
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  static void check_fields(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_)
      throw Error("MixedField", "operands from different coefficient fields");
  }

  void normalize() {
    if (num_.is_zero()) {
      den_ = IntPoly(Int(1));
      return;
    }
    IntPoly g = IntPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divide_exact(g);
      den_ = den_.divide_exact(g);
    }
    Int cn = num_.content(), cd = den_.content();
    Int ci = boost::multiprecision::gcd(cn, cd);
    if (ci > 1) {
      num_ = num_.divide_by_int(ci);
      den_ = den_.divide_by_int(ci);
    }
    if (den_.lead() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  Field field_;
  Rat rat_;
  IntPoly num_, den_;
};

enum class ArithOp { Add, Sub, Mul, Div };

inline Scalar arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw Error("InternalError", "bad ArithOp");
}

}  // namespace rta
