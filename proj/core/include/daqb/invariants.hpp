#pragma once

#include "daqb/family.hpp"
#include "daqb/word.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace daqb {

/// Element of the discrete Heisenberg group: a counts Y-windings, b counts
/// Z-windings and c counts Q-twists of one strand.
/// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b').
struct Heisenberg {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  Heisenberg inverse() const noexcept { return {-a, -b, a * b - c}; }
  bool is_identity() const noexcept { return a == 0 && b == 0 && c == 0; }

  friend Heisenberg operator*(const Heisenberg &x, const Heisenberg &y) noexcept {
    return {x.a + y.a, x.b + y.b, x.c + y.c + x.a * y.b};
  }
  friend bool operator==(const Heisenberg &, const Heisenberg &) = default;
};

/// Permutation of strand positions with one Heisenberg element per strand.
/// `perm[j]` (0-based) is the top position of the strand that ends at bottom
/// position j; `strands[j]` is that strand's accumulated data.
class WreathElement {
public:
  explicit WreathElement(int n);
  WreathElement(std::vector<int> perm, std::vector<Heisenberg> strands);

  static WreathElement identity(int n) { return WreathElement(n); }

  int n() const noexcept { return static_cast<int>(perm_.size()); }
  const std::vector<int> &perm() const noexcept { return perm_; }
  const std::vector<Heisenberg> &strands() const noexcept { return strands_; }
  bool is_identity() const noexcept;

  WreathElement inverse() const;
  /// Drops the twist component of every strand.
  WreathElement without_twists() const;

  /// (p1,h1)(p2,h2) = (p1 o p2, j -> h1[p2(j)] * h2[j]).
  friend WreathElement operator*(const WreathElement &x, const WreathElement &y);
  friend bool operator==(const WreathElement &, const WreathElement &) = default;

  /// {"perm": [...1-based...], "strands": [[a,b,c], ...]}
  std::string to_json() const;
  std::string to_string() const;

private:
  std::vector<int> perm_;
  std::vector<Heisenberg> strands_;
};

/// Image of a single letter. Sigma is rejected: eliminate it first.
WreathElement letter_image(const Letter &l, int n);

/// Homomorphic image of a word; sigma letters are expanded through
/// sigma_introduce before folding.
WreathElement invariant(const Word &w);

struct HomomorphismViolation {
  std::string label;
  std::string lhs;
  std::string rhs;
  WreathElement lhs_image;
  WreathElement rhs_image;
};

struct HomomorphismReport {
  GroupFamily family;
  std::size_t checked = 0;
  std::vector<HomomorphismViolation> violations;
  bool passed() const noexcept { return violations.empty(); }
};

/// Checks invariant(lhs) == invariant(rhs) for every instantiated defining
/// relation of the family.
HomomorphismReport verify_homomorphism(const GroupFamily &family);

} // namespace daqb
