#include "daqb/presentations.hpp"

#include <algorithm>
#include <cstdlib>

namespace daqb {

Word sigma_definition(int n) {
  Word out(n);
  for (int i = n - 1; i >= 1; --i)
    out.push_back(Letter::t(i, -1));
  out.push_back(Letter::y(1));
  return out;
}

Word sigma_introduce(const Word &w) {
  const int n = w.n();
  const Word def = sigma_definition(n);
  Word out(n);
  for (const auto &l : w.letters()) {
    if (l.kind == Gen::Sigma)
      out *= def.power(l.exponent);
    else
      out.push_back(l);
  }
  return out;
}

Word y_in_sigma_form(int i, int n) {
  Word out(n);
  for (int k = i; k <= n - 1; ++k)
    out.push_back(Letter::t(k));
  out.push_back(Letter::sigma());
  for (int k = 1; k <= i - 1; ++k)
    out.push_back(Letter::t(k, -1));
  return out;
}

Word sigma_eliminate(const Word &w) {
  const int n = w.n();
  Word out(n);
  for (const auto &l : w.letters()) {
    if (l.kind == Gen::Y)
      out *= y_in_sigma_form(l.index, n).power(l.exponent);
    else
      out.push_back(l);
  }
  return out;
}

int transport_q_index(int j, const Letter &l, int n) {
  switch (l.kind) {
  case Gen::T:
    if (std::abs(l.exponent) % 2 == 0)
      return j;
    if (j == l.index)
      return j + 1;
    if (j == l.index + 1)
      return j - 1;
    return j;
  case Gen::Sigma: {
    // sigma Q_j = Q_{j-1} sigma, indices cyclic in 1..N
    int shifted = (j - 1 - l.exponent) % n;
    if (shifted < 0)
      shifted += n;
    return shifted + 1;
  }
  default:
    return j;
  }
}

bool QPrefix::q_is_zero() const noexcept {
  return std::all_of(q.begin(), q.end(), [](int v) { return v == 0; });
}

QPrefix q_prefix_normalize(const Word &w) {
  const int n = w.n();
  QPrefix out{std::vector<int>(static_cast<std::size_t>(n), 0), Word(n)};
  const auto &letters = w.letters();
  for (std::size_t pos = 0; pos < letters.size(); ++pos) {
    const Letter &l = letters[pos];
    if (l.kind != Gen::Q) {
      out.residual.push_back(l);
      continue;
    }
    int j = l.index;
    const auto &res = out.residual.letters();
    for (auto it = res.rbegin(); it != res.rend(); ++it)
      j = transport_q_index(j, *it, n);
    out.q[static_cast<std::size_t>(j - 1)] += l.exponent;
  }
  return out;
}

Word q_monomial(int n, std::span<const int> q) {
  Word out(n);
  for (std::size_t k = 0; k < q.size(); ++k)
    if (q[k] != 0)
      out.push_back(Letter::q(static_cast<int>(k) + 1, q[k]));
  return out;
}

} // namespace daqb
