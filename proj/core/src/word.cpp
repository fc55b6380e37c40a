#include "daqb/word.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace daqb {

char gen_symbol(Gen g) {
  switch (g) {
  case Gen::T: return 'T';
  case Gen::Y: return 'Y';
  case Gen::Z: return 'Z';
  case Gen::Q: return 'Q';
  case Gen::Sigma: return 's';
  }
  return '?';
}

ParseError::ParseError(const std::string &what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)),
      position_(position) {}

void check_letter(const Letter &l, int n) {
  if (l.exponent == 0)
    throw DomainError("letter with zero exponent");
  if (l.kind == Gen::Sigma) {
    if (l.index != 0)
      throw DomainError("sigma carries no index");
    return;
  }
  int hi = l.kind == Gen::T ? n - 1 : n;
  if (l.index < 1 || l.index > hi)
    throw DomainError(std::string(1, gen_symbol(l.kind)) + std::to_string(l.index) +
                      " out of range for N=" + std::to_string(n));
}

Word::Word(int n) : n_(n) {
  if (n < 2)
    throw DomainError("strand count must be at least 2");
}

Word::Word(int n, std::span<const Letter> letters) : Word(n) {
  for (const auto &l : letters)
    push_back(l);
}

Word::Word(int n, std::initializer_list<Letter> letters)
    : Word(n, std::span<const Letter>(letters.begin(), letters.size())) {}

std::size_t Word::length() const noexcept {
  std::size_t len = 0;
  for (const auto &l : letters_)
    len += static_cast<std::size_t>(std::abs(l.exponent));
  return len;
}

bool Word::contains(Gen g) const noexcept {
  for (const auto &l : letters_)
    if (l.kind == g)
      return true;
  return false;
}

void Word::push_back(Letter l) {
  check_letter(l, n_);
  if (!letters_.empty() && letters_.back().same_generator(l)) {
    letters_.back().exponent += l.exponent;
    if (letters_.back().exponent == 0)
      letters_.pop_back();
    return;
  }
  letters_.push_back(l);
}

Word &Word::operator*=(const Word &rhs) {
  if (rhs.n_ != n_)
    throw DomainError("cannot compose words with different strand counts");
  for (const auto &l : rhs.letters_)
    push_back(l);
  return *this;
}

Word Word::inverse() const {
  Word out(n_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back(it->inverse());
  return out;
}

Word Word::power(int k) const {
  Word base = k < 0 ? inverse() : *this;
  Word out(n_);
  for (int i = 0; i < std::abs(k); ++i)
    out *= base;
  return out;
}

std::string format_letter(const Letter &l) {
  std::string s(1, gen_symbol(l.kind));
  if (l.kind != Gen::Sigma)
    s += std::to_string(l.index);
  if (l.exponent != 1)
    s += "^" + std::to_string(l.exponent);
  return s;
}

std::string Word::format() const {
  if (letters_.empty())
    return "e";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i)
      out += ' ';
    out += format_letter(letters_[i]);
  }
  return out;
}

std::string format(const Word &w) { return w.format(); }

Word compose(const Word &a, const Word &b) {
  Word out = a;
  out *= b;
  return out;
}

Word operator*(const Word &a, const Word &b) { return compose(a, b); }

Word invert(const Word &a) { return a.inverse(); }

std::vector<Letter> expand_units(const Word &w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (const auto &l : w.letters()) {
    int sign = l.exponent > 0 ? 1 : -1;
    for (int k = 0; k < std::abs(l.exponent); ++k)
      out.push_back({l.kind, l.index, sign});
  }
  return out;
}

Word from_letters(int n, std::span<const Letter> letters) { return Word(n, letters); }

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

int read_int(std::string_view text, std::size_t &pos, bool allow_sign, const char *what) {
  std::size_t start = pos;
  if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
    ++pos;
  std::size_t digits = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    ++pos;
  if (pos == digits)
    throw ParseError(std::string("expected ") + what, start);
  int value = 0;
  const char *first = text.data() + start + (text[start] == '+' ? 1 : 0);
  auto [ptr, ec] = std::from_chars(first, text.data() + pos, value);
  if (ec != std::errc() || ptr != text.data() + pos)
    throw ParseError(std::string("malformed ") + what, start);
  return value;
}

} // namespace

Word Word::parse(std::string_view text, int n) {
  Word out(n);
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && is_space(text[pos]))
      ++pos;
    if (pos >= text.size())
      break;
    std::size_t token_start = pos;
    char c = text[pos++];
    Letter l;
    switch (c) {
    case 'T': l.kind = Gen::T; break;
    case 'Y': l.kind = Gen::Y; break;
    case 'Z': l.kind = Gen::Z; break;
    case 'Q': l.kind = Gen::Q; break;
    case 's': l.kind = Gen::Sigma; break;
    case 'e':
      if (pos < text.size() && !is_space(text[pos]))
        throw ParseError("unexpected character after 'e'", pos);
      continue;
    default:
      throw ParseError(std::string("unexpected character '") + c + "'", token_start);
    }
    if (l.kind != Gen::Sigma) {
      l.index = read_int(text, pos, false, "generator index");
    }
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      l.exponent = read_int(text, pos, true, "exponent");
      if (l.exponent == 0)
        throw ParseError("zero exponent", token_start);
    }
    if (pos < text.size() && !is_space(text[pos]))
      throw ParseError("expected whitespace between tokens", pos);
    try {
      out.push_back(l);
    } catch (const DomainError &err) {
      throw ParseError(err.what(), token_start);
    }
  }
  return out;
}

} // namespace daqb
