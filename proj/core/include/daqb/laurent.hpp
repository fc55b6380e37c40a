#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

namespace daqb {

/// Integral Laurent polynomial in s (= t^{1/2}) and q.
class LaurentPoly {
public:
  using Exponent = std::pair<int, int>; // (k_s, k_q)
  using Terms = std::map<Exponent, mpz_class>;

  LaurentPoly() = default;
  LaurentPoly(long c); // NOLINT: integers convert implicitly

  static LaurentPoly monomial(int ks, int kq, const mpz_class &c = 1);
  static LaurentPoly s(int k = 1) { return monomial(k, 0); }
  static LaurentPoly q(int k = 1) { return monomial(0, k); }
  /// s - s^{-1}
  static LaurentPoly hecke_gap();

  const Terms &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  mpz_class coefficient(int ks, int kq) const;

  /// s -> 1; the result only depends on q.
  LaurentPoly at_s_one() const;
  /// Value at s = 1, q = 1.
  mpz_class at_one() const;

  LaurentPoly &operator+=(const LaurentPoly &o);
  LaurentPoly &operator-=(const LaurentPoly &o);
  LaurentPoly &operator*=(const LaurentPoly &o);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
  friend bool operator==(const LaurentPoly &a, const LaurentPoly &b) { return a.terms_ == b.terms_; }

  /// "s - s^-1", "2 q^-1", "1", "0"; terms ordered by descending s then q degree.
  std::string to_string() const;
  /// [[k_s, k_q, "coeff"], ...] in ascending exponent order.
  std::string to_json() const;

private:
  void add_term(const Exponent &e, const mpz_class &c);
  Terms terms_;
};

} // namespace daqb
