#include "daqb/laurent.hpp"

#include <sstream>

namespace daqb {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0)
    terms_.emplace(Exponent{0, 0}, mpz_class(c));
}

LaurentPoly LaurentPoly::monomial(int ks, int kq, const mpz_class &c) {
  LaurentPoly p;
  p.add_term({ks, kq}, c);
  return p;
}

LaurentPoly LaurentPoly::hecke_gap() { return s(1) - s(-1); }

void LaurentPoly::add_term(const Exponent &e, const mpz_class &c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

mpz_class LaurentPoly::coefficient(int ks, int kq) const {
  auto it = terms_.find({ks, kq});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

LaurentPoly LaurentPoly::at_s_one() const {
  LaurentPoly out;
  for (const auto &[e, c] : terms_)
    out.add_term({0, e.second}, c);
  return out;
}

mpz_class LaurentPoly::at_one() const {
  mpz_class sum = 0;
  for (const auto &[e, c] : terms_)
    sum += c;
  return sum;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o) {
  for (const auto &[e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &o) {
  for (const auto &[e, c] : o.terms_)
    add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
  LaurentPoly out;
  for (const auto &[ea, ca] : a.terms_)
    for (const auto &[eb, cb] : b.terms_)
      out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return out;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &o) { return *this = *this * o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto &[e, c] : terms_)
    out.terms_.emplace(e, -c);
  return out;
}

namespace {

void append_power(std::ostringstream &os, char var, int k, bool &need_space) {
  if (k == 0)
    return;
  if (need_space)
    os << ' ';
  os << var;
  if (k != 1)
    os << '^' << k;
  need_space = true;
}

} // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto &[e, c] = *it;
    mpz_class mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    const bool constant = e.first == 0 && e.second == 0;
    bool need_space = false;
    if (mag != 1 || constant) {
      os << mag.get_str();
      need_space = true;
    }
    append_power(os, 's', e.first, need_space);
    append_power(os, 'q', e.second, need_space);
  }
  return os.str();
}

std::string LaurentPoly::to_json() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto &[e, c] : terms_) {
    os << (first ? "" : ",") << '[' << e.first << ',' << e.second << ",\"" << c.get_str() << "\"]";
    first = false;
  }
  os << ']';
  return os.str();
}

} // namespace daqb
