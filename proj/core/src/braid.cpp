#include "daqb/braid.hpp"

#include <cstdlib>

namespace daqb {

void free_reduce(BraidWord &w) {
  BraidWord out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  w.swap(out);
}

namespace {

// Handle (p, q) with the smallest closing position q. Such a handle contains
// no nested handle, so it is permitted.
bool find_handle(const BraidWord &w, std::size_t &p_out, std::size_t &q_out) {
  for (std::size_t q = 1; q < w.size(); ++q) {
    const int level = std::abs(w[q]);
    std::size_t p = q;
    while (p-- > 0) {
      if (std::abs(w[p]) <= level)
        break;
    }
    if (p < q && std::abs(w[p]) == level && w[p] == -w[q]) {
      p_out = p;
      q_out = q;
      return true;
    }
  }
  return false;
}

} // namespace

BraidWord handle_reduce(BraidWord w, std::size_t max_steps) {
  free_reduce(w);
  std::size_t steps = 0;
  std::size_t p = 0, q = 0;
  while (find_handle(w, p, q)) {
    if (++steps > max_steps)
      throw BudgetExhausted("handle reduction exceeded its step budget", steps);
    const int e = w[p] > 0 ? 1 : -1;
    const int level = std::abs(w[p]);
    BraidWord out;
    out.reserve(w.size() + 2 * (q - p));
    out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
    for (std::size_t k = p + 1; k < q; ++k) {
      const int x = w[k];
      if (std::abs(x) == level + 1) {
        const int d = x > 0 ? 1 : -1;
        out.push_back(-e * (level + 1));
        out.push_back(d * level);
        out.push_back(e * (level + 1));
      } else {
        out.push_back(x);
      }
    }
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(q) + 1, w.end());
    free_reduce(out);
    w.swap(out);
  }
  return w;
}

bool braid_is_trivial(const BraidWord &w, std::size_t max_steps) {
  return handle_reduce(w, max_steps).empty();
}

namespace {

void append_power(BraidWord &out, const BraidWord &piece, int exponent) {
  if (exponent > 0) {
    for (int k = 0; k < exponent; ++k)
      out.insert(out.end(), piece.begin(), piece.end());
  } else {
    for (int k = 0; k < -exponent; ++k)
      for (auto it = piece.rbegin(); it != piece.rend(); ++it)
        out.push_back(-*it);
  }
}

BraidWord y_image(int i) {
  // Y_i = T_{i-1}^{-1} ... T_1^{-1} Y_1 T_1^{-1} ... T_{i-1}^{-1}
  BraidWord out;
  for (int k = i - 1; k >= 1; --k)
    out.push_back(-(k + 1));
  out.push_back(-1);
  out.push_back(-1);
  for (int k = 1; k <= i - 1; ++k)
    out.push_back(-(k + 1));
  return out;
}

BraidWord sigma_image(int n) {
  BraidWord out;
  for (int k = n - 1; k >= 1; --k)
    out.push_back(-(k + 1));
  out.push_back(-1);
  out.push_back(-1);
  return out;
}

} // namespace

BraidWord annular_image(std::span<const Letter> letters, int n) {
  BraidWord out;
  for (const auto &l : letters) {
    switch (l.kind) {
    case Gen::T: append_power(out, {l.index + 1}, l.exponent); break;
    case Gen::Y: append_power(out, y_image(l.index), l.exponent); break;
    case Gen::Sigma: append_power(out, sigma_image(n), l.exponent); break;
    default: throw DomainError("annular image is defined on T, Y and sigma only");
    }
  }
  free_reduce(out);
  return out;
}

bool affine_word_is_trivial(std::span<const Letter> letters, int n, std::size_t max_steps) {
  return braid_is_trivial(annular_image(letters, n), max_steps);
}

BraidWord t_word_to_braid(std::span<const Letter> letters) {
  BraidWord out;
  for (const auto &l : letters) {
    if (l.kind != Gen::T)
      throw DomainError("braid conversion expects T letters only");
    append_power(out, {l.index}, l.exponent);
  }
  return out;
}

std::vector<Letter> braid_to_t_word(const BraidWord &w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (int x : w)
    out.push_back(Letter::t(std::abs(x), x > 0 ? 1 : -1));
  return out;
}

} // namespace daqb
