#include "daqb/invariants.hpp"

#include "daqb/presentations.hpp"

#include <numeric>
#include <sstream>

namespace daqb {

WreathElement::WreathElement(int n)
    : perm_(static_cast<std::size_t>(n)), strands_(static_cast<std::size_t>(n)) {
  std::iota(perm_.begin(), perm_.end(), 0);
}

WreathElement::WreathElement(std::vector<int> perm, std::vector<Heisenberg> strands)
    : perm_(std::move(perm)), strands_(std::move(strands)) {
  if (perm_.size() != strands_.size())
    throw DomainError("permutation and strand data differ in size");
}

bool WreathElement::is_identity() const noexcept {
  for (std::size_t j = 0; j < perm_.size(); ++j)
    if (perm_[j] != static_cast<int>(j) || !strands_[j].is_identity())
      return false;
  return true;
}

WreathElement operator*(const WreathElement &x, const WreathElement &y) {
  if (x.n() != y.n())
    throw DomainError("wreath elements of different degree");
  const auto n = static_cast<std::size_t>(x.n());
  std::vector<int> perm(n);
  std::vector<Heisenberg> strands(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto from = static_cast<std::size_t>(y.perm_[j]);
    perm[j] = x.perm_[from];
    strands[j] = x.strands_[from] * y.strands_[j];
  }
  return WreathElement(std::move(perm), std::move(strands));
}

WreathElement WreathElement::inverse() const {
  const auto n = perm_.size();
  std::vector<int> perm(n);
  std::vector<Heisenberg> strands(n);
  // (p,h)^{-1} = (p^{-1}, j -> h[p^{-1}(j)]^{-1})
  for (std::size_t j = 0; j < n; ++j)
    perm[static_cast<std::size_t>(perm_[j])] = static_cast<int>(j);
  for (std::size_t j = 0; j < n; ++j)
    strands[j] = strands_[static_cast<std::size_t>(perm[j])].inverse();
  return WreathElement(std::move(perm), std::move(strands));
}

WreathElement WreathElement::without_twists() const {
  WreathElement out = *this;
  for (auto &h : out.strands_)
    h.c = 0;
  return out;
}

std::string WreathElement::to_json() const {
  std::ostringstream os;
  os << "{\"perm\":[";
  for (std::size_t j = 0; j < perm_.size(); ++j)
    os << (j ? "," : "") << perm_[j] + 1;
  os << "],\"strands\":[";
  for (std::size_t j = 0; j < strands_.size(); ++j) {
    const auto &h = strands_[j];
    os << (j ? "," : "") << '[' << h.a << ',' << h.b << ',' << h.c << ']';
  }
  os << "]}";
  return os.str();
}

std::string WreathElement::to_string() const {
  std::ostringstream os;
  os << "perm [";
  for (std::size_t j = 0; j < perm_.size(); ++j)
    os << (j ? " " : "") << perm_[j] + 1;
  os << "] strands";
  for (const auto &h : strands_)
    os << " (" << h.a << ',' << h.b << ',' << h.c << ')';
  return os.str();
}

namespace {

WreathElement unit_image(Gen kind, int index, int n) {
  WreathElement out(n);
  if (kind == Gen::T) {
    std::vector<int> perm = out.perm();
    std::swap(perm[static_cast<std::size_t>(index - 1)], perm[static_cast<std::size_t>(index)]);
    return WreathElement(std::move(perm), out.strands());
  }
  std::vector<Heisenberg> strands = out.strands();
  auto &h = strands[static_cast<std::size_t>(index - 1)];
  switch (kind) {
  case Gen::Y: h.a = 1; break;
  case Gen::Z: h.b = 1; break;
  case Gen::Q: h.c = 1; break;
  default: break;
  }
  return WreathElement(out.perm(), std::move(strands));
}

WreathElement power(const WreathElement &x, int k) {
  WreathElement base = k < 0 ? x.inverse() : x;
  WreathElement out(x.n());
  for (int i = 0; i < std::abs(k); ++i)
    out = out * base;
  return out;
}

} // namespace

WreathElement letter_image(const Letter &l, int n) {
  if (l.kind == Gen::Sigma)
    throw DomainError("sigma has no direct image; apply sigma_introduce first");
  check_letter(l, n);
  return power(unit_image(l.kind, l.index, n), l.exponent);
}

WreathElement invariant(const Word &w) {
  const Word expanded = w.contains(Gen::Sigma) ? sigma_introduce(w) : w;
  WreathElement out(w.n());
  for (const auto &l : expanded.letters())
    out = out * letter_image(l, w.n());
  return out;
}

HomomorphismReport verify_homomorphism(const GroupFamily &family) {
  HomomorphismReport report{family, 0, {}};
  for (const auto &rel : relation_table(family).relations) {
    ++report.checked;
    auto lhs = invariant(rel.lhs);
    auto rhs = invariant(rel.rhs);
    if (!(lhs == rhs))
      report.violations.push_back(
          {rel.label, rel.lhs.format(), rel.rhs.format(), std::move(lhs), std::move(rhs)});
  }
  return report;
}

} // namespace daqb
