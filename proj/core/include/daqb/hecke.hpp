#pragma once

#include "daqb/laurent.hpp"
#include "daqb/word.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace daqb {

/// One-line notation, values 1..N.
using Perm = std::vector<int>;

Perm identity_perm(int n);
/// Coxeter length = number of inversions.
int coxeter_length(const Perm &w);
/// Leftmost-descent reduced word: w = s_{i_1} ... s_{i_l}.
std::vector<int> reduced_word(const Perm &w);
/// w * s_i (swap positions i, i+1).
Perm right_mul_simple(Perm w, int i);
/// s_i * w (swap values i, i+1).
Perm left_mul_simple(Perm w, int i);
/// (x*y)(j) = x(y(j)).
Perm compose_perm(const Perm &x, const Perm &y);
std::string perm_label(const Perm &w);

/// Element of the finite Hecke algebra H_N(t): sum of c_w T_w.
class FiniteHecke {
public:
  explicit FiniteHecke(int n) : n_(n) {}

  static FiniteHecke basis(const Perm &w, const LaurentPoly &c = 1);
  static FiniteHecke one(int n) { return basis(identity_perm(n)); }
  /// T_i^{+-1}
  static FiniteHecke generator(int n, int i, int sign = 1);

  int n() const noexcept { return n_; }
  const std::map<Perm, LaurentPoly> &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  LaurentPoly coefficient(const Perm &w) const;
  void add(const Perm &w, const LaurentPoly &c);

  /// x * T_i^{sign}
  FiniteHecke mul_generator(int i, int sign = 1) const;
  /// T_i^{sign} * x
  FiniteHecke generator_mul(int i, int sign = 1) const;

  FiniteHecke &operator+=(const FiniteHecke &o);
  FiniteHecke &operator-=(const FiniteHecke &o);
  friend FiniteHecke operator+(FiniteHecke a, const FiniteHecke &b) { return a += b; }
  friend FiniteHecke operator-(FiniteHecke a, const FiniteHecke &b) { return a -= b; }
  friend FiniteHecke operator*(const FiniteHecke &x, const FiniteHecke &y);
  friend FiniteHecke operator*(const LaurentPoly &c, const FiniteHecke &x);
  friend bool operator==(const FiniteHecke &, const FiniteHecke &) = default;

  std::string to_string() const;
  /// [{"label": "[2,1,3]", "poly": [[k_s, k_q, "c"], ...]}, ...]
  std::string to_json() const;

private:
  int n_;
  std::map<Perm, LaurentPoly> terms_;
};

/// T_i^{sign} as a finite Hecke element, then the product along a T-word.
FiniteHecke hecke_of_t_word(const Word &w);

/// Y-exponents and a permutation: the basis element Y^a T_w.
struct AffineLabel {
  std::vector<int> y;
  Perm w;
  friend auto operator<=>(const AffineLabel &, const AffineLabel &) = default;
  friend bool operator==(const AffineLabel &, const AffineLabel &) = default;
};

/// Element of the affine Hecke algebra in the basis Y^a T_w.
class AffineHecke {
public:
  explicit AffineHecke(int n) : n_(n) {}

  static AffineHecke basis(const AffineLabel &label, const LaurentPoly &c = 1);
  static AffineHecke one(int n);

  int n() const noexcept { return n_; }
  const std::map<AffineLabel, LaurentPoly> &terms() const noexcept { return terms_; }
  LaurentPoly coefficient(const AffineLabel &label) const;
  void add(const AffineLabel &label, const LaurentPoly &c);

  /// x * T_i^{sign}
  AffineHecke mul_t(int i, int sign) const;
  /// x * Y_j^{e}
  AffineHecke mul_y(int j, int e) const;
  /// T_i^{sign} * x
  AffineHecke t_mul(int i, int sign) const;
  /// Y_j^{e} * x
  AffineHecke y_mul(int j, int e) const;

  AffineHecke &operator+=(const AffineHecke &o);
  AffineHecke &operator-=(const AffineHecke &o);
  friend AffineHecke operator+(AffineHecke a, const AffineHecke &b) { return a += b; }
  friend AffineHecke operator-(AffineHecke a, const AffineHecke &b) { return a -= b; }
  friend AffineHecke operator*(const LaurentPoly &c, const AffineHecke &x);
  friend bool operator==(const AffineHecke &, const AffineHecke &) = default;

  /// "Y2 T[2,1,3] - (s - s^-1) Y2"
  std::string to_string() const;
  std::string to_json() const;

private:
  int n_;
  std::map<AffineLabel, LaurentPoly> terms_;
};

enum class StraightenOrder {
  LeftToRight, // multiply letters onto the right, pushing each Y leftward through T_w
  RightToLeft, // multiply letters onto the left, pushing each T rightward through Y^a
};

/// Rewrites a T/Y word into the Y^a T_w basis using
///   T_i Y_{i+1} = Y_i T_i - (s - s^-1) Y_i
///   T_i Y_i     = Y_{i+1} T_i + (s - s^-1) Y_i
///   T_i Y_j     = Y_j T_i        (j != i, i+1)
/// together with the Hecke relation. Throws DomainError on other letters.
AffineHecke affine_straighten(const Word &w, StraightenOrder order = StraightenOrder::LeftToRight);

/// Formal sum over Q-free normalized group words (labels are canonical
/// serializations).
struct GroupForm {
  int n = 2;
  std::map<std::string, LaurentPoly> terms;
  std::string to_json() const;
};

} // namespace daqb
