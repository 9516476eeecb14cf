#pragma once

// The commutative Cartan families H, their elements, the three closed
// automorphism families, weights, the dual action theta * lambda, and the
// weight-to-root / root-to-weight maps for the Hopf families.
//
// Families:
//   Poly      F[h], univariate polynomials
//   GroupAlg  F[Gamma] for Gamma = Z^r x Z/n_1 x ... x Z/n_t
//   FunZ      finitely supported functions on Z plus constants
//             (t^m pointwise idempotents; Example: continuous Hecke of GL(1))

#include <map>
#include <numeric>
#include <sstream>
#include <variant>
#include <vector>

#include "rta/scalar.hpp"

namespace rta {

enum class Family { Poly, GroupAlg, FunZ };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::Poly: return "poly";
    case Family::GroupAlg: return "group";
    case Family::FunZ: return "funz";
  }
  return "?";
}

struct BaseFamily {
  Family kind = Family::Poly;
  Field field = Field::Q;
  int rank = 0;                 // GroupAlg: free rank r
  std::vector<int> torsion;     // GroupAlg: torsion orders n_i >= 2

  int generator_count() const { return rank + static_cast<int>(torsion.size()); }

  void validate() const {
    for (int n : torsion)
      if (n < 2) throw Error("ValidationError", "torsion order must be >= 2");
    if (kind != Family::GroupAlg && (rank != 0 || !torsion.empty()))
      throw Error("ValidationError", "rank/torsion only apply to the group family");
  }

  friend bool operator==(const BaseFamily& a, const BaseFamily& b) {
    return a.kind == b.kind && a.field == b.field && a.rank == b.rank && a.torsion == b.torsion;
  }
};

// canonical tuple (free part, torsion part reduced mod n_i)
struct GroupEl {
  std::vector<long long> free_part;
  std::vector<int> tors_part;

  friend bool operator==(const GroupEl& a, const GroupEl& b) {
    return a.free_part == b.free_part && a.tors_part == b.tors_part;
  }
  friend bool operator<(const GroupEl& a, const GroupEl& b) {
    if (a.free_part != b.free_part) return a.free_part < b.free_part;
    return a.tors_part < b.tors_part;
  }
};

inline GroupEl group_identity(const BaseFamily& fam) {
  return GroupEl{std::vector<long long>(static_cast<size_t>(fam.rank), 0),
                 std::vector<int>(fam.torsion.size(), 0)};
}

inline GroupEl group_mul(const BaseFamily& fam, const GroupEl& a, const GroupEl& b) {
  GroupEl c = a;
  for (size_t i = 0; i < c.free_part.size(); ++i) c.free_part[i] += b.free_part[i];
  for (size_t i = 0; i < c.tors_part.size(); ++i) {
    c.tors_part[i] = (c.tors_part[i] + b.tors_part[i]) % fam.torsion[i];
    if (c.tors_part[i] < 0) c.tors_part[i] += fam.torsion[i];
  }
  return c;
}

inline GroupEl group_inv(const BaseFamily& fam, const GroupEl& a) {
  GroupEl c = a;
  for (auto& x : c.free_part) x = -x;
  for (size_t i = 0; i < c.tors_part.size(); ++i)
    c.tors_part[i] = (fam.torsion[i] - c.tors_part[i]) % fam.torsion[i];
  return c;
}

inline GroupEl group_pow(const BaseFamily& fam, const GroupEl& a, long long n) {
  GroupEl c = a;
  for (auto& x : c.free_part) x *= n;
  for (size_t i = 0; i < c.tors_part.size(); ++i) {
    long long v = (static_cast<long long>(a.tors_part[i]) * n) % fam.torsion[i];
    if (v < 0) v += fam.torsion[i];
    c.tors_part[i] = static_cast<int>(v);
  }
  return c;
}

// Element of a Cartan algebra.  Zero coefficients are never stored, so equal
// elements have identical representations.
class BaseElement {
 public:
  BaseElement() = default;
  BaseElement(const BaseFamily& fam) : fam_(fam), cst_(Scalar::zero(fam.field)) {}

  static BaseElement zero(const BaseFamily& fam) { return BaseElement(fam); }
  static BaseElement constant(const BaseFamily& fam, const Scalar& c) {
    BaseElement e(fam);
    if (fam.kind == Family::Poly) {
      e.set_poly(0, c);
    } else if (fam.kind == Family::GroupAlg) {
      e.set_group(group_identity(fam), c);
    } else {
      e.cst_ = c;
    }
    return e;
  }
  static BaseElement one(const BaseFamily& fam) {
    return constant(fam, Scalar::one(fam.field));
  }
  // Poly: h^k
  static BaseElement h_power(const BaseFamily& fam, int k, const Scalar& c) {
    BaseElement e(fam);
    e.set_poly(k, c);
    return e;
  }
  // GroupAlg: c * g
  static BaseElement group_term(const BaseFamily& fam, const GroupEl& g, const Scalar& c) {
    BaseElement e(fam);
    e.set_group(g, c);
    return e;
  }
  // FunZ: c * t^m
  static BaseElement point_mass(const BaseFamily& fam, long long m, const Scalar& c) {
    BaseElement e(fam);
    e.set_funz(m, c);
    return e;
  }

  const BaseFamily& family() const { return fam_; }
  bool is_zero() const { return poly_.empty() && grp_.empty() && fun_.empty() && cst_.is_zero(); }
  bool is_one() const {
    const BaseFamily& f = fam_;
    return *this == one(f);
  }

  const std::map<int, Scalar>& poly_coeffs() const { return poly_; }
  const std::map<GroupEl, Scalar>& group_coeffs() const { return grp_; }
  const std::map<long long, Scalar>& funz_support() const { return fun_; }
  const Scalar& funz_constant() const { return cst_; }

  int poly_degree() const { return poly_.empty() ? -1 : poly_.rbegin()->first; }

  void set_poly(int k, const Scalar& c) {
    if (c.is_zero())
      poly_.erase(k);
    else
      poly_[k] = c;
  }
  void set_group(const GroupEl& g, const Scalar& c) {
    if (c.is_zero())
      grp_.erase(g);
    else
      grp_[g] = c;
  }
  void set_funz(long long m, const Scalar& c) {
    if (c.is_zero())
      fun_.erase(m);
    else
      fun_[m] = c;
  }
  void add_poly(int k, const Scalar& c) { set_poly(k, get_poly(k) + c); }
  void add_group(const GroupEl& g, const Scalar& c) { set_group(g, get_group(g) + c); }
  void add_funz(long long m, const Scalar& c) { set_funz(m, get_funz(m) + c); }
  void add_funz_constant(const Scalar& c) { cst_ = cst_ + c; }

  Scalar get_poly(int k) const {
    auto it = poly_.find(k);
    return it == poly_.end() ? Scalar::zero(fam_.field) : it->second;
  }
  Scalar get_group(const GroupEl& g) const {
    auto it = grp_.find(g);
    return it == grp_.end() ? Scalar::zero(fam_.field) : it->second;
  }
  Scalar get_funz(long long m) const {
    auto it = fun_.find(m);
    return it == fun_.end() ? Scalar::zero(fam_.field) : it->second;
  }

  friend bool operator==(const BaseElement& a, const BaseElement& b) {
    return a.fam_ == b.fam_ && a.poly_ == b.poly_ && a.grp_ == b.grp_ && a.fun_ == b.fun_ &&
           a.cst_ == b.cst_;
  }
  friend bool operator!=(const BaseElement& a, const BaseElement& b) { return !(a == b); }

  friend BaseElement operator+(const BaseElement& a, const BaseElement& b) {
    check(a, b);
    BaseElement c = a;
    for (const auto& [k, v] : b.poly_) c.add_poly(k, v);
    for (const auto& [g, v] : b.grp_) c.add_group(g, v);
    for (const auto& [m, v] : b.fun_) c.add_funz(m, v);
    c.cst_ = c.cst_ + b.cst_;
    return c;
  }
  friend BaseElement operator-(const BaseElement& a) {
    BaseElement c = a;
    for (auto& [k, v] : c.poly_) v = -v;
    for (auto& [g, v] : c.grp_) v = -v;
    for (auto& [m, v] : c.fun_) v = -v;
    c.cst_ = -c.cst_;
    return c;
  }
  friend BaseElement operator-(const BaseElement& a, const BaseElement& b) { return a + (-b); }

  friend BaseElement operator*(const BaseElement& a, const Scalar& s) {
    BaseElement c(a.fam_);
    if (s.is_zero()) return c;
    c = a;
    for (auto& [k, v] : c.poly_) v = v * s;
    for (auto& [g, v] : c.grp_) v = v * s;
    for (auto& [m, v] : c.fun_) v = v * s;
    c.cst_ = c.cst_ * s;
    return c;
  }

  friend BaseElement operator*(const BaseElement& a, const BaseElement& b) {
    check(a, b);
    BaseElement c(a.fam_);
    switch (a.fam_.kind) {
      case Family::Poly:
        for (const auto& [i, u] : a.poly_)
          for (const auto& [j, v] : b.poly_) c.add_poly(i + j, u * v);
        break;
      case Family::GroupAlg:
        for (const auto& [g, u] : a.grp_)
          for (const auto& [h, v] : b.grp_) c.add_group(group_mul(a.fam_, g, h), u * v);
        break;
      case Family::FunZ: {
        // pointwise: t^m t^n = delta_{m,n} t^m; the unit is (1, empty)
        c.cst_ = a.cst_ * b.cst_;
        for (const auto& [m, u] : a.fun_) c.add_funz(m, u * b.cst_);
        for (const auto& [m, v] : b.fun_) c.add_funz(m, a.cst_ * v);
        for (const auto& [m, u] : a.fun_) {
          auto it = b.fun_.find(m);
          if (it != b.fun_.end()) c.add_funz(m, u * it->second);
        }
        break;
      }
    }
    return c;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
      if (!first) os << " + ";
      first = false;
    };
    switch (fam_.kind) {
      case Family::Poly:
        for (auto it = poly_.rbegin(); it != poly_.rend(); ++it) {
          sep();
          if (it->first == 0) {
            os << it->second.to_string();
          } else {
            if (!it->second.is_one()) os << it->second.to_string() << "*";
            os << "h";
            if (it->first > 1) os << "^" << it->first;
          }
        }
        break;
      case Family::GroupAlg:
        for (const auto& [g, v] : grp_) {
          sep();
          os << v.to_string() << "*[";
          for (size_t i = 0; i < g.free_part.size(); ++i)
            os << (i ? "," : "") << g.free_part[i];
          for (size_t i = 0; i < g.tors_part.size(); ++i)
            os << (g.free_part.empty() && i == 0 ? "" : ",") << g.tors_part[i];
          os << "]";
        }
        break;
      case Family::FunZ:
        if (!cst_.is_zero()) {
          sep();
          os << cst_.to_string();
        }
        for (const auto& [m, v] : fun_) {
          sep();
          if (!v.is_one()) os << v.to_string() << "*";
          os << "t[" << m << "]";
        }
        break;
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  static void check(const BaseElement& a, const BaseElement& b) {
    if (!(a.fam_ == b.fam_)) throw Error("FamilyMismatch", "elements from different families");
  }

  BaseFamily fam_;
  std::map<int, Scalar> poly_;
  std::map<GroupEl, Scalar> grp_;
  std::map<long long, Scalar> fun_;
  Scalar cst_;  // FunZ constant part
};

// ---------------------------------------------------------------------------
// Automorphisms

struct PolyAffine {  // theta(h) = a*h + b, a != 0
  Scalar a, b;
};
struct CharTwist {  // theta(g) = chi(g) * g, values on the r+t generators
  std::vector<Scalar> chi;
};
struct ZShift {  // theta(t^m) = t^{m+k}, constants fixed
  long long k = 0;
};

struct Endo {
  std::variant<PolyAffine, CharTwist, ZShift> v;

  static Endo poly_affine(Scalar a, Scalar b) {
    if (a.is_zero()) throw Error("ValidationError", "affine map with a = 0 is not invertible");
    return Endo{PolyAffine{std::move(a), std::move(b)}};
  }
  static Endo char_twist(std::vector<Scalar> chi) {
    for (const auto& c : chi)
      if (c.is_zero()) throw Error("ValidationError", "character value must be nonzero");
    return Endo{CharTwist{std::move(chi)}};
  }
  static Endo z_shift(long long k) { return Endo{ZShift{k}}; }

  const PolyAffine& affine() const { return std::get<PolyAffine>(v); }
  const CharTwist& twist() const { return std::get<CharTwist>(v); }
  const ZShift& shift() const { return std::get<ZShift>(v); }

  bool matches(const BaseFamily& fam) const {
    switch (fam.kind) {
      case Family::Poly: return std::holds_alternative<PolyAffine>(v);
      case Family::GroupAlg:
        return std::holds_alternative<CharTwist>(v) &&
               static_cast<int>(twist().chi.size()) == fam.generator_count();
      case Family::FunZ: return std::holds_alternative<ZShift>(v);
    }
    return false;
  }

  void validate_for(const BaseFamily& fam) const {
    if (!matches(fam)) throw Error("FamilyMismatch", "automorphism does not match the family");
    if (std::holds_alternative<CharTwist>(v)) {
      const auto& chi = twist().chi;
      for (size_t i = 0; i < fam.torsion.size(); ++i) {
        const Scalar& c = chi[static_cast<size_t>(fam.rank) + i];
        if (!c.pow(fam.torsion[i]).is_one())
          throw Error("ValidationError",
                      "character value on a torsion generator must have compatible order");
      }
    }
  }
};

// chi evaluated on an arbitrary group element
inline Scalar char_value(const BaseFamily& fam, const std::vector<Scalar>& chi, const GroupEl& g) {
  Scalar v = Scalar::one(fam.field);
  for (size_t i = 0; i < g.free_part.size(); ++i) v = v * chi[i].pow(g.free_part[i]);
  for (size_t i = 0; i < g.tors_part.size(); ++i)
    v = v * chi[static_cast<size_t>(fam.rank) + i].pow(g.tors_part[i]);
  return v;
}

// theta^n as a closed-form substitution, any integer n
inline BaseElement apply_endo_pow(const BaseFamily& fam, const Endo& theta, long long n,
                                  const BaseElement& h) {
  theta.validate_for(fam);
  if (!(h.family() == fam)) throw Error("FamilyMismatch", "element from a different family");
  if (n == 0) return h;
  BaseElement out(fam);
  switch (fam.kind) {
    case Family::Poly: {
      const auto& [a, b] = theta.affine();
      // theta^n(h) = a^n h + b (a^{n-1} + ... + 1); negative n via the inverse
      Scalar an = a.pow(n);
      Scalar bn = Scalar::zero(fam.field);
      if (a.is_one()) {
        bn = b * Scalar::of(Rat(n), fam.field);
      } else {
        // b * (a^n - 1)/(a - 1)
        bn = b * (an - Scalar::one(fam.field)) / (a - Scalar::one(fam.field));
      }
      // substitute h -> an*h + bn
      BaseElement img = BaseElement::h_power(fam, 1, an);
      img.add_poly(0, bn);
      BaseElement acc = BaseElement::zero(fam);
      for (const auto& [k, c] : h.poly_coeffs()) {
        BaseElement p = BaseElement::one(fam);
        for (int i = 0; i < k; ++i) p = p * img;
        acc = acc + p * c;
      }
      out = acc;
      break;
    }
    case Family::GroupAlg: {
      const auto& chi = theta.twist().chi;
      for (const auto& [g, c] : h.group_coeffs())
        out.add_group(g, c * char_value(fam, chi, g).pow(n));
      break;
    }
    case Family::FunZ: {
      long long k = theta.shift().k * n;
      out.add_funz_constant(h.funz_constant());
      for (const auto& [m, c] : h.funz_support()) out.add_funz(m + k, c);
      break;
    }
  }
  return out;
}

inline BaseElement apply_endo(const BaseFamily& fam, const Endo& theta, const BaseElement& h) {
  return apply_endo_pow(fam, theta, 1, h);
}

// ---------------------------------------------------------------------------
// Weights

struct PolyWeight {  // lambda(h) = a
  Scalar a;
};
struct GroupWeight {  // values on the r+t generators
  std::vector<Scalar> values;
};
struct ZPointWeight {  // mu_m(t^n) = delta_{m,n}
  long long m = 0;
};

struct Weight {
  std::variant<PolyWeight, GroupWeight, ZPointWeight> v;

  static Weight poly(Scalar a) { return Weight{PolyWeight{std::move(a)}}; }
  static Weight group(std::vector<Scalar> values) { return Weight{GroupWeight{std::move(values)}}; }
  static Weight z_point(long long m) { return Weight{ZPointWeight{m}}; }

  const PolyWeight& as_poly() const { return std::get<PolyWeight>(v); }
  const GroupWeight& as_group() const { return std::get<GroupWeight>(v); }
  const ZPointWeight& as_z_point() const { return std::get<ZPointWeight>(v); }

  bool matches(const BaseFamily& fam) const {
    switch (fam.kind) {
      case Family::Poly: return std::holds_alternative<PolyWeight>(v);
      case Family::GroupAlg:
        return std::holds_alternative<GroupWeight>(v) &&
               static_cast<int>(as_group().values.size()) == fam.generator_count();
      case Family::FunZ: return std::holds_alternative<ZPointWeight>(v);
    }
    return false;
  }

  void validate_for(const BaseFamily& fam) const {
    if (!matches(fam)) throw Error("FamilyMismatch", "weight does not match the family");
    if (std::holds_alternative<GroupWeight>(v)) {
      const auto& vals = as_group().values;
      for (const auto& x : vals)
        if (x.is_zero()) throw Error("ValidationError", "weight value must be nonzero");
      for (size_t i = 0; i < fam.torsion.size(); ++i)
        if (!vals[static_cast<size_t>(fam.rank) + i].pow(fam.torsion[i]).is_one())
          throw Error("ValidationError", "weight value on a torsion generator of order n must be an n-th root of unity");
    }
  }

  friend bool operator==(const Weight& a, const Weight& b) {
    if (a.v.index() != b.v.index()) return false;
    if (std::holds_alternative<PolyWeight>(a.v)) return a.as_poly().a == b.as_poly().a;
    if (std::holds_alternative<GroupWeight>(a.v)) return a.as_group().values == b.as_group().values;
    return a.as_z_point().m == b.as_z_point().m;
  }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) {
    if (a.v.index() != b.v.index()) return a.v.index() < b.v.index();
    if (std::holds_alternative<PolyWeight>(a.v)) return a.as_poly().a < b.as_poly().a;
    if (std::holds_alternative<GroupWeight>(a.v)) return a.as_group().values < b.as_group().values;
    return a.as_z_point().m < b.as_z_point().m;
  }

  std::string to_string() const {
    if (std::holds_alternative<PolyWeight>(v)) return "h=" + as_poly().a.to_string();
    if (std::holds_alternative<ZPointWeight>(v)) return "mu_" + std::to_string(as_z_point().m);
    std::string s;
    const auto& vals = as_group().values;
    for (size_t i = 0; i < vals.size(); ++i) s += (i ? "," : "") + vals[i].to_string();
    return "(" + s + ")";
  }
};

inline Scalar eval_weight(const BaseFamily& fam, const Weight& w, const BaseElement& h) {
  w.validate_for(fam);
  Scalar acc = Scalar::zero(fam.field);
  switch (fam.kind) {
    case Family::Poly: {
      const Scalar& a = w.as_poly().a;
      for (const auto& [k, c] : h.poly_coeffs()) acc = acc + c * a.pow(k);
      break;
    }
    case Family::GroupAlg: {
      const auto& vals = w.as_group().values;
      for (const auto& [g, c] : h.group_coeffs()) {
        Scalar v = Scalar::one(fam.field);
        for (size_t i = 0; i < g.free_part.size(); ++i) v = v * vals[i].pow(g.free_part[i]);
        for (size_t i = 0; i < g.tors_part.size(); ++i)
          v = v * vals[static_cast<size_t>(fam.rank) + i].pow(g.tors_part[i]);
        acc = acc + c * v;
      }
      break;
    }
    case Family::FunZ: {
      acc = h.funz_constant();
      auto it = h.funz_support().find(w.as_z_point().m);
      if (it != h.funz_support().end()) acc = acc + it->second;
      break;
    }
  }
  return acc;
}

// theta^n * lambda = lambda o theta^{-n}, in closed form per family
inline Weight dual_act(const BaseFamily& fam, const Endo& theta, long long n, const Weight& w) {
  theta.validate_for(fam);
  w.validate_for(fam);
  switch (fam.kind) {
    case Family::Poly: {
      // lambda(theta^{-n}(h)); theta^{-n}(h) = a' h + b'
      BaseElement img = apply_endo_pow(fam, theta, -n, BaseElement::h_power(fam, 1, Scalar::one(fam.field)));
      return Weight::poly(eval_weight(fam, w, img));
    }
    case Family::GroupAlg: {
      const auto& chi = theta.twist().chi;
      auto vals = w.as_group().values;
      for (size_t i = 0; i < vals.size(); ++i) vals[i] = vals[i] * chi[i].pow(-n);
      return Weight::group(std::move(vals));
    }
    case Family::FunZ: {
      return Weight::z_point(w.as_z_point().m + n * theta.shift().k);
    }
  }
  throw Error("InternalError", "unreachable");
}

// convolution of weights (the group law on H^ for the Hopf families):
// addition of values on Poly, pointwise product on GroupAlg
inline Weight convolve(const BaseFamily& fam, const Weight& a, const Weight& b) {
  a.validate_for(fam);
  b.validate_for(fam);
  switch (fam.kind) {
    case Family::Poly: return Weight::poly(a.as_poly().a + b.as_poly().a);
    case Family::GroupAlg: {
      auto va = a.as_group().values;
      const auto& vb = b.as_group().values;
      for (size_t i = 0; i < va.size(); ++i) va[i] = va[i] * vb[i];
      return Weight::group(std::move(va));
    }
    case Family::FunZ: throw Error("NotHopfFamily", "FunZ carries no convolution");
  }
  throw Error("InternalError", "unreachable");
}

// ---------------------------------------------------------------------------
// Freeness of the theta-orbit through a weight

struct FreeVerdict {
  enum class Kind { Free, FixedAt, TorsionOrbit } kind;
  long long n = 0;  // FixedAt: a fixed point of theta^n; TorsionOrbit: the period

  bool is_free() const { return kind == Kind::Free; }
  std::string to_string() const {
    switch (kind) {
      case Kind::Free: return "Free";
      case Kind::FixedAt: return "FixedAt(" + std::to_string(n) + ")";
      case Kind::TorsionOrbit: return "TorsionOrbit(" + std::to_string(n) + ")";
    }
    return "?";
  }
};

// order of a character as an automorphism: 0 means infinite
inline long long char_order(const std::vector<Scalar>& chi) {
  long long ord = 1;
  for (const auto& c : chi) {
    auto o = c.root_of_unity_order();
    if (!o) return 0;
    ord = std::lcm(ord, static_cast<long long>(*o));
  }
  return ord;
}

inline FreeVerdict is_free(const BaseFamily& fam, const Endo& theta, const Weight& w) {
  theta.validate_for(fam);
  w.validate_for(fam);
  using K = FreeVerdict::Kind;
  switch (fam.kind) {
    case Family::Poly: {
      const auto& [a, b] = theta.affine();
      if (a.is_one()) {
        if (b.is_zero()) return {K::TorsionOrbit, 1};  // identity
        return {K::Free, 0};                           // translation, char 0
      }
      auto ord = a.root_of_unity_order();
      Scalar fixed = b / (Scalar::one(fam.field) - a);
      if (ord && *ord > 1) return {K::TorsionOrbit, *ord};
      if (w.as_poly().a == fixed) return {K::FixedAt, 1};
      return {K::Free, 0};
    }
    case Family::GroupAlg: {
      long long ord = char_order(theta.twist().chi);
      if (ord == 0) return {K::Free, 0};
      return {K::TorsionOrbit, ord};
    }
    case Family::FunZ: {
      if (theta.shift().k == 0) return {K::TorsionOrbit, 1};
      return {K::Free, 0};
    }
  }
  throw Error("InternalError", "unreachable");
}

// ---------------------------------------------------------------------------
// Weight-to-root and root-to-weight maps (Hopf families only)

inline Endo rho(const BaseFamily& fam, const Weight& mu) {
  mu.validate_for(fam);
  switch (fam.kind) {
    case Family::Poly:
      // h primitive: rho(mu)(h) = h - mu(h)
      return Endo::poly_affine(Scalar::one(fam.field), -mu.as_poly().a);
    case Family::GroupAlg: {
      // grouplike g: rho(mu)(g) = mu(g)^{-1} g
      auto vals = mu.as_group().values;
      for (auto& x : vals) x = x.inverse();
      return Endo::char_twist(std::move(vals));
    }
    case Family::FunZ: throw Error("NotHopfFamily", "FunZ is not a Hopf algebra");
  }
  throw Error("InternalError", "unreachable");
}

inline Weight psi_eps(const BaseFamily& fam, const Endo& theta) {
  theta.validate_for(fam);
  switch (fam.kind) {
    case Family::Poly: {
      // eps o theta^{-1}: eps(h) = 0, so psi(theta)(h) = eps((h - b)/a) = -b/a
      const auto& [a, b] = theta.affine();
      return Weight::poly(-b / a);
    }
    case Family::GroupAlg: {
      // eps(g) = 1: psi(theta)(g) = chi(g)^{-1}
      auto vals = theta.twist().chi;
      for (auto& x : vals) x = x.inverse();
      return Weight::group(std::move(vals));
    }
    case Family::FunZ: throw Error("NotHopfFamily", "FunZ is not a Hopf algebra");
  }
  throw Error("InternalError", "unreachable");
}

}  // namespace rta
