#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace daqb {

/// Generator kinds of the double affine Q-dependent braid group.
/// Sigma is the cyclic shift and carries no index.
enum class Gen : std::uint8_t { T, Y, Z, Q, Sigma };

char gen_symbol(Gen g);

/// Thrown when the word grammar is violated. `position` is a byte offset
/// into the input text.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, std::size_t position);
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Thrown for structurally invalid arguments (index out of range, mismatched
/// strand counts, letters that a family does not admit, ...).
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct Letter {
  Gen kind = Gen::T;
  int index = 0; // 0 for Sigma
  int exponent = 1;

  static Letter t(int i, int e = 1) { return {Gen::T, i, e}; }
  static Letter y(int i, int e = 1) { return {Gen::Y, i, e}; }
  static Letter z(int i, int e = 1) { return {Gen::Z, i, e}; }
  static Letter q(int i, int e = 1) { return {Gen::Q, i, e}; }
  static Letter sigma(int e = 1) { return {Gen::Sigma, 0, e}; }

  bool same_generator(const Letter &o) const noexcept {
    return kind == o.kind && index == o.index;
  }
  Letter inverse() const noexcept { return {kind, index, -exponent}; }

  friend bool operator==(const Letter &, const Letter &) = default;
  friend auto operator<=>(const Letter &, const Letter &) = default;
};

/// Range check of a letter against the ambient strand count.
/// Throws DomainError.
void check_letter(const Letter &l, int n);

/// A freely reduced word in the generators, read left to right
/// (left = top of the stack). The empty word is the identity.
class Word {
public:
  explicit Word(int n);
  Word(int n, std::span<const Letter> letters);
  Word(int n, std::initializer_list<Letter> letters);

  static Word identity(int n) { return Word(n); }
  static Word parse(std::string_view text, int n);

  int n() const noexcept { return n_; }
  const std::vector<Letter> &letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// Sum of |exponent| over all letters.
  std::size_t length() const noexcept;
  bool contains(Gen g) const noexcept;

  /// Appends with free reduction against the tail.
  void push_back(Letter l);
  Word &operator*=(const Word &rhs);

  Word inverse() const;
  Word power(int k) const;

  /// Canonical serialization; "e" for the identity.
  std::string format() const;

  friend bool operator==(const Word &, const Word &) = default;

private:
  int n_;
  std::vector<Letter> letters_;
};

/// Freely reduced concatenation; throws DomainError on mismatched n.
Word compose(const Word &a, const Word &b);
Word operator*(const Word &a, const Word &b);
Word invert(const Word &a);

std::string format(const Word &w);
std::string format_letter(const Letter &l);

/// Expands every letter into unit-exponent letters.
std::vector<Letter> expand_units(const Word &w);
/// Builds a freely reduced word from unit (or arbitrary) letters.
Word from_letters(int n, std::span<const Letter> letters);

} // namespace daqb
