#pragma once

#include "daqb/family.hpp"
#include "daqb/ribbon.hpp"
#include "daqb/word.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace daqb::check {

/// Random word over the generators the family admits (sigma optional).
inline Word random_word(std::mt19937_64 &rng, const GroupFamily &fam, int max_len,
                        bool with_sigma = false) {
  std::vector<Gen> kinds{Gen::T, Gen::Q};
  if (fam.tag != Family::QBraid)
    kinds.push_back(Gen::Y);
  if (fam.tag == Family::DoubleAffineQBraid)
    kinds.push_back(Gen::Z);
  if (with_sigma && fam.tag != Family::QBraid)
    kinds.push_back(Gen::Sigma);
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> kind(0, kinds.size() - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  Word w(fam.n);
  const int l = len(rng);
  for (int k = 0; k < l; ++k) {
    const Gen g = kinds[kind(rng)];
    const int top = g == Gen::T ? fam.n - 1 : fam.n;
    const int idx = g == Gen::Sigma ? 0 : std::uniform_int_distribution<int>(1, top)(rng);
    w.push_back({g, idx, sign(rng) ? 1 : -1});
  }
  return w;
}

/// Artin's action of the braid group B_m on the free group F_m, as a test
/// oracle for braid triviality. Free words are lists of +-j (1-based).
class ArtinAction {
public:
  explicit ArtinAction(int m) : images_(m) {
    for (int j = 0; j < m; ++j)
      images_[j] = {j + 1};
  }

  /// Applies b_i^{+-1} (i >= 1); returns false if the images grow past `cap`.
  bool apply(int gen, std::size_t cap = 200'000) {
    for (auto &img : images_) {
      std::vector<int> next;
      for (int x : img) {
        for (int y : substitute(x, gen))
          push(next, y);
      }
      img = std::move(next);
      if (img.size() > cap)
        return false;
    }
    return true;
  }

  bool is_identity() const {
    for (std::size_t j = 0; j < images_.size(); ++j)
      if (images_[j] != std::vector<int>{static_cast<int>(j) + 1})
        return false;
    return true;
  }

private:
  static void push(std::vector<int> &w, int x) {
    if (!w.empty() && w.back() == -x)
      w.pop_back();
    else
      w.push_back(x);
  }

  // b_i:      x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
  // b_i^-1:   x_i -> x_{i+1},            x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
  static std::vector<int> substitute(int x, int gen) {
    const int j = x > 0 ? x : -x;
    const int i = gen > 0 ? gen : -gen;
    std::vector<int> out;
    if (j == i)
      out = gen > 0 ? std::vector<int>{i, i + 1, -i} : std::vector<int>{i + 1};
    else if (j == i + 1)
      out = gen > 0 ? std::vector<int>{i} : std::vector<int>{-(i + 1), i, i + 1};
    else
      out = {j};
    if (x < 0) {
      std::vector<int> inv(out.rbegin(), out.rend());
      for (int &y : inv)
        y = -y;
      return inv;
    }
    return out;
  }

  std::vector<std::vector<int>> images_;
};

/// Triviality of an Artin braid word by the free-group action. Returns -1
/// when the images outgrow the cap.
inline int artin_trivial(const std::vector<int> &braid, int strands) {
  ArtinAction a(strands);
  for (int g : braid)
    if (!a.apply(g))
      return -1;
  return a.is_identity() ? 1 : 0;
}

/// Tangent sweeping a cone of half-angle theta about z; the ribbon stays
/// horizontal. The no-roll frame picks up the cone's solid-angle defect, so
/// the exact twist is -2 pi cos(theta).
inline RibbonPath cone_path(double theta, int m) {
  constexpr double turn = 2 * std::numbers::pi;
  RibbonPath p;
  p.max_step = 1.0;
  Vec3 x{0, 0, 0};
  auto u = [&](double t) {
    return Vec3{std::sin(theta) * std::cos(turn * t), std::sin(theta) * std::sin(turn * t), std::cos(theta)};
  };
  for (int k = 0; k <= m; ++k) {
    const double t = static_cast<double>(k) / m;
    if (k > 0)
      x = x + (0.5 / m) * (u(t - 1.0 / m) + u(t));
    p.samples.push_back({t, x, u(t), Vec3{-std::sin(turn * t), std::cos(turn * t), 0}, Crossing::None});
  }
  return p;
}

/// Least-squares slope of log(err) against log(m).
inline double loglog_slope(const std::vector<double> &ms, const std::vector<double> &errs) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const double x = std::log(ms[i]), y = std::log(errs[i]);
    sx += x, sy += y, sxx += x * x, sxy += x * y;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

} // namespace daqb::check
