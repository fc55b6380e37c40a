#pragma once

#include "daqb/word.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace daqb {

/// Artin braid word: +i is b_i, -i is b_i^{-1} (i >= 1).
using BraidWord = std::vector<int>;

class BudgetExhausted : public std::runtime_error {
public:
  explicit BudgetExhausted(const std::string &what, std::size_t used = 0)
      : std::runtime_error(what), used_(used) {}
  std::size_t used() const noexcept { return used_; }

private:
  std::size_t used_;
};

void free_reduce(BraidWord &w);

/// Dehornoy handle reduction. The result is empty iff the input braid is
/// trivial; otherwise it is a nonempty sigma-positive or sigma-negative word
/// representing the same braid. Throws BudgetExhausted past `max_steps`
/// handle reductions.
BraidWord handle_reduce(BraidWord w, std::size_t max_steps = 1'000'000);

bool braid_is_trivial(const BraidWord &w, std::size_t max_steps = 1'000'000);

/// Image of a word in T, Y and sigma inside B_{N+1} under
/// T_i -> b_{i+1}, Y_1 -> b_1^{-2}. This identifies the affine braid group
/// with the braids of N+1 strands whose first strand is straight, so the
/// map is injective and triviality can be decided on the image.
BraidWord annular_image(std::span<const Letter> letters, int n);

/// Exact triviality test for Q-free, Z-free words in T, Y, sigma.
bool affine_word_is_trivial(std::span<const Letter> letters, int n,
                            std::size_t max_steps = 1'000'000);

/// T_i <-> b_i, for sigma-free braid-only words.
BraidWord t_word_to_braid(std::span<const Letter> letters);
std::vector<Letter> braid_to_t_word(const BraidWord &w);

} // namespace daqb
