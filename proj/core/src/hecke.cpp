#include "daqb/hecke.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace daqb {

Perm identity_perm(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  return p;
}

int coxeter_length(const Perm &w) {
  int inv = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (w[a] > w[b])
        ++inv;
  return inv;
}

std::vector<int> reduced_word(const Perm &w) {
  Perm x = w;
  std::vector<int> rev;
  bool found = true;
  while (found) {
    found = false;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
      if (x[i] > x[i + 1]) {
        std::swap(x[i], x[i + 1]);
        rev.push_back(static_cast<int>(i) + 1);
        found = true;
        break;
      }
    }
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

Perm right_mul_simple(Perm w, int i) {
  std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  return w;
}

Perm left_mul_simple(Perm w, int i) {
  for (auto &v : w) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return w;
}

Perm compose_perm(const Perm &x, const Perm &y) {
  Perm out(y.size());
  for (std::size_t j = 0; j < y.size(); ++j)
    out[j] = x[static_cast<std::size_t>(y[j] - 1)];
  return out;
}

std::string perm_label(const Perm &w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t j = 0; j < w.size(); ++j)
    os << (j ? "," : "") << w[j];
  os << ']';
  return os.str();
}

namespace {

void check_index(int n, int i) {
  if (i < 1 || i > n - 1)
    throw DomainError("Hecke generator index out of range: " + std::to_string(i));
}

std::string t_label(const Perm &w) {
  std::string out;
  for (int i : reduced_word(w)) {
    if (!out.empty())
      out += ' ';
    out += 'T' + std::to_string(i);
  }
  return out;
}

std::string y_label(const std::vector<int> &a) {
  std::string out;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] == 0)
      continue;
    if (!out.empty())
      out += ' ';
    out += 'Y' + std::to_string(j + 1);
    if (a[j] != 1)
      out += '^' + std::to_string(a[j]);
  }
  return out;
}

// Appends "c B" to a sum, with sign handling and parentheses.
void append_term(std::ostringstream &os, bool first, const LaurentPoly &c, const std::string &basis) {
  std::string coef = c.to_string();
  bool negative = false;
  if (coef.front() == '-') {
    negative = true;
    coef = c.terms().size() == 1 ? coef.substr(1) : (-c).to_string();
  }
  if (first)
    os << (negative ? "-" : "");
  else
    os << (negative ? " - " : " + ");
  if (basis.empty()) {
    os << (c.terms().size() > 1 ? "(" + coef + ")" : coef);
    return;
  }
  if (coef != "1")
    os << (c.terms().size() > 1 ? "(" + coef + ")" : coef) << ' ';
  os << basis;
}

} // namespace

// FiniteHecke

FiniteHecke FiniteHecke::basis(const Perm &w, const LaurentPoly &c) {
  FiniteHecke x(static_cast<int>(w.size()));
  x.add(w, c);
  return x;
}

FiniteHecke FiniteHecke::generator(int n, int i, int sign) {
  check_index(n, i);
  return one(n).mul_generator(i, sign);
}

LaurentPoly FiniteHecke::coefficient(const Perm &w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void FiniteHecke::add(const Perm &w, const LaurentPoly &c) {
  if (static_cast<int>(w.size()) != n_)
    throw DomainError("permutation size differs from N");
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

FiniteHecke FiniteHecke::mul_generator(int i, int sign) const {
  check_index(n_, i);
  FiniteHecke out(n_);
  const LaurentPoly gap = LaurentPoly::hecke_gap();
  for (const auto &[w, c] : terms_) {
    const auto k = static_cast<std::size_t>(i - 1);
    out.add(right_mul_simple(w, i), c);
    if (w[k] > w[k + 1])
      out.add(w, gap * c);
  }
  if (sign < 0) {
    // T_i^{-1} = T_i - (s - s^-1)
    for (const auto &[w, c] : terms_)
      out.add(w, -(gap * c));
  }
  return out;
}

FiniteHecke FiniteHecke::generator_mul(int i, int sign) const {
  check_index(n_, i);
  FiniteHecke out(n_);
  const LaurentPoly gap = LaurentPoly::hecke_gap();
  for (const auto &[w, c] : terms_) {
    const auto pos_i = std::find(w.begin(), w.end(), i);
    const auto pos_next = std::find(w.begin(), w.end(), i + 1);
    out.add(left_mul_simple(w, i), c);
    if (pos_i > pos_next)
      out.add(w, gap * c);
  }
  if (sign < 0)
    for (const auto &[w, c] : terms_)
      out.add(w, -(gap * c));
  return out;
}

FiniteHecke &FiniteHecke::operator+=(const FiniteHecke &o) {
  if (o.n_ != n_)
    throw DomainError("Hecke elements of different N");
  for (const auto &[w, c] : o.terms_)
    add(w, c);
  return *this;
}

FiniteHecke &FiniteHecke::operator-=(const FiniteHecke &o) {
  if (o.n_ != n_)
    throw DomainError("Hecke elements of different N");
  for (const auto &[w, c] : o.terms_)
    add(w, -c);
  return *this;
}

FiniteHecke operator*(const FiniteHecke &x, const FiniteHecke &y) {
  if (x.n_ != y.n_)
    throw DomainError("Hecke elements of different N");
  FiniteHecke out(x.n_);
  for (const auto &[v, c] : y.terms_) {
    FiniteHecke z = x;
    for (int i : reduced_word(v))
      z = z.mul_generator(i, 1);
    out += c * z;
  }
  return out;
}

FiniteHecke operator*(const LaurentPoly &c, const FiniteHecke &x) {
  FiniteHecke out(x.n_);
  for (const auto &[w, d] : x.terms_)
    out.add(w, c * d);
  return out;
}

std::string FiniteHecke::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  // longest basis elements first
  std::vector<std::pair<Perm, LaurentPoly>> items(terms_.begin(), terms_.end());
  std::stable_sort(items.begin(), items.end(), [](const auto &a, const auto &b) {
    return coxeter_length(a.first) > coxeter_length(b.first);
  });
  for (const auto &[w, c] : items) {
    append_term(os, first, c, t_label(w));
    first = false;
  }
  return os.str();
}

std::string FiniteHecke::to_json() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto &[w, c] : terms_) {
    os << (first ? "" : ",") << "{\"label\":\"" << perm_label(w) << "\",\"poly\":" << c.to_json() << '}';
    first = false;
  }
  os << ']';
  return os.str();
}

FiniteHecke hecke_of_t_word(const Word &w) {
  FiniteHecke x = FiniteHecke::one(w.n());
  for (const auto &l : w.letters()) {
    if (l.kind != Gen::T)
      throw DomainError("finite Hecke words contain T letters only");
    for (int k = 0; k < std::abs(l.exponent); ++k)
      x = x.mul_generator(l.index, l.exponent > 0 ? 1 : -1);
  }
  return x;
}

// AffineHecke

namespace {

struct Pushed {
  LaurentPoly coef;
  std::vector<int> y;
  bool keeps_t;
};

// T_i Y^a = sum coef Y^b (T_i if keeps_t)
std::vector<Pushed> push_t(int i, const std::vector<int> &a) {
  const LaurentPoly gap = LaurentPoly::hecke_gap();
  const auto ii = static_cast<std::size_t>(i - 1), jj = static_cast<std::size_t>(i);
  std::map<std::pair<std::vector<int>, bool>, LaurentPoly> acc;
  acc[{std::vector<int>(a.size(), 0), true}] = 1;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const int e = a[j] > 0 ? 1 : -1;
    for (int r = 0; r < std::abs(a[j]); ++r) {
      std::map<std::pair<std::vector<int>, bool>, LaurentPoly> next;
      auto put = [&next](std::vector<int> y, bool t, const LaurentPoly &c) {
        auto &slot = next[{std::move(y), t}];
        slot += c;
      };
      for (const auto &[key, c] : acc) {
        std::vector<int> y = key.first;
        if (!key.second || (j != ii && j != jj)) {
          y[j] += e;
          put(std::move(y), key.second, c);
          continue;
        }
        std::vector<int> y2 = y;
        if (e > 0 && j == jj) {
          y[ii] += 1;
          y2[ii] += 1;
          put(y, true, c);
          put(y2, false, -(gap * c));
        } else if (e > 0) {
          y[jj] += 1;
          y2[ii] += 1;
          put(y, true, c);
          put(y2, false, gap * c);
        } else if (j == ii) {
          y[jj] -= 1;
          y2[jj] -= 1;
          put(y, true, c);
          put(y2, false, -(gap * c));
        } else {
          y[ii] -= 1;
          y2[jj] -= 1;
          put(y, true, c);
          put(y2, false, gap * c);
        }
      }
      acc.clear();
      for (auto &[k, c] : next)
        if (!c.is_zero())
          acc.emplace(k, std::move(c));
    }
  }
  std::vector<Pushed> out;
  for (auto &[k, c] : acc)
    out.push_back({c, k.first, k.second});
  return out;
}

} // namespace

AffineHecke AffineHecke::basis(const AffineLabel &label, const LaurentPoly &c) {
  AffineHecke x(static_cast<int>(label.w.size()));
  x.add(label, c);
  return x;
}

AffineHecke AffineHecke::one(int n) {
  return basis({std::vector<int>(static_cast<std::size_t>(n), 0), identity_perm(n)});
}

LaurentPoly AffineHecke::coefficient(const AffineLabel &label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void AffineHecke::add(const AffineLabel &label, const LaurentPoly &c) {
  if (static_cast<int>(label.w.size()) != n_ || static_cast<int>(label.y.size()) != n_)
    throw DomainError("affine label size differs from N");
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(label, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

AffineHecke AffineHecke::mul_t(int i, int sign) const {
  check_index(n_, i);
  AffineHecke out(n_);
  for (const auto &[label, c] : terms_) {
    const FiniteHecke moved = FiniteHecke::basis(label.w, c).mul_generator(i, sign);
    for (const auto &[w, d] : moved.terms())
      out.add({label.y, w}, d);
  }
  return out;
}

AffineHecke AffineHecke::t_mul(int i, int sign) const {
  check_index(n_, i);
  AffineHecke out(n_);
  for (const auto &[label, c] : terms_) {
    for (const auto &p : push_t(i, label.y)) {
      if (!p.keeps_t) {
        out.add({p.y, label.w}, p.coef * c);
        continue;
      }
      const FiniteHecke moved = FiniteHecke::basis(label.w).generator_mul(i, 1);
      for (const auto &[w, d] : moved.terms())
        out.add({p.y, w}, p.coef * c * d);
    }
  }
  if (sign < 0)
    out -= LaurentPoly::hecke_gap() * *this;
  return out;
}

AffineHecke AffineHecke::y_mul(int j, int e) const {
  if (j < 1 || j > n_)
    throw DomainError("Y index out of range: " + std::to_string(j));
  AffineHecke out(n_);
  for (const auto &[label, c] : terms_) {
    AffineLabel shifted = label;
    shifted.y[static_cast<std::size_t>(j - 1)] += e;
    out.add(shifted, c);
  }
  return out;
}

AffineHecke AffineHecke::mul_y(int j, int e) const {
  if (j < 1 || j > n_)
    throw DomainError("Y index out of range: " + std::to_string(j));
  AffineHecke out(n_);
  for (const auto &[label, c] : terms_) {
    // T_w Y_j^e, built by pushing the letters of w leftward onto Y_j^e
    AffineHecke z = one(n_).y_mul(j, e);
    const auto rw = reduced_word(label.w);
    for (auto it = rw.rbegin(); it != rw.rend(); ++it)
      z = z.t_mul(*it, 1);
    for (const auto &[zl, d] : z.terms_) {
      AffineLabel moved = zl;
      for (std::size_t k = 0; k < moved.y.size(); ++k)
        moved.y[k] += label.y[k];
      out.add(moved, c * d);
    }
  }
  return out;
}

AffineHecke &AffineHecke::operator+=(const AffineHecke &o) {
  for (const auto &[l, c] : o.terms_)
    add(l, c);
  return *this;
}

AffineHecke &AffineHecke::operator-=(const AffineHecke &o) {
  for (const auto &[l, c] : o.terms_)
    add(l, -c);
  return *this;
}

AffineHecke operator*(const LaurentPoly &c, const AffineHecke &x) {
  AffineHecke out(x.n_);
  for (const auto &[l, d] : x.terms_)
    out.add(l, c * d);
  return out;
}

std::string AffineHecke::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string label = y_label(it->first.y);
    const std::string t = t_label(it->first.w);
    if (!t.empty())
      label += (label.empty() ? "" : " ") + t;
    append_term(os, first, it->second, label);
    first = false;
  }
  return os.str();
}

std::string AffineHecke::to_json() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto &[l, c] : terms_) {
    os << (first ? "" : ",") << "{\"label\":{\"y\":[";
    for (std::size_t k = 0; k < l.y.size(); ++k)
      os << (k ? "," : "") << l.y[k];
    os << "],\"perm\":\"" << perm_label(l.w) << "\"},\"poly\":" << c.to_json() << '}';
    first = false;
  }
  os << ']';
  return os.str();
}

AffineHecke affine_straighten(const Word &w, StraightenOrder order) {
  for (const auto &l : w.letters())
    if (l.kind != Gen::T && l.kind != Gen::Y)
      throw DomainError("affine straightening expects T and Y letters only");
  const auto units = expand_units(w);
  AffineHecke x = AffineHecke::one(w.n());
  if (order == StraightenOrder::LeftToRight) {
    for (const auto &l : units)
      x = l.kind == Gen::T ? x.mul_t(l.index, l.exponent) : x.mul_y(l.index, l.exponent);
  } else {
    for (auto it = units.rbegin(); it != units.rend(); ++it)
      x = it->kind == Gen::T ? x.t_mul(it->index, it->exponent) : x.y_mul(it->index, it->exponent);
  }
  return x;
}

std::string GroupForm::to_json() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto &[label, c] : terms) {
    os << (first ? "" : ",") << "{\"label\":\"" << label << "\",\"poly\":" << c.to_json() << '}';
    first = false;
  }
  os << ']';
  return os.str();
}

} // namespace daqb
