#include "daqb/equality.hpp"

#include "daqb/presentations.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace daqb {

std::string_view verdict_name(EqVerdict::Kind k) {
  switch (k) {
  case EqVerdict::Kind::Equal: return "Equal";
  case EqVerdict::Kind::Distinct: return "Distinct";
  case EqVerdict::Kind::Unknown: return "Unknown";
  }
  return "?";
}

int QReduction::q_degree() const noexcept { return std::accumulate(q.begin(), q.end(), 0); }

bool AppendixReport::passed() const noexcept {
  return std::all_of(steps.begin(), steps.end(), [](const AppendixStep &s) { return s.passed; });
}

namespace {

using Units = std::vector<Letter>;
using Iter = Units::const_iterator;

// Right action on positions; only used to discard candidates cheaply.
std::vector<int> segment_perm(Iter first, Iter last, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  auto swap_at = [&p](int i) { std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(i)]); };
  for (auto it = first; it != last; ++it) {
    if (it->kind == Gen::T) {
      swap_at(it->index);
    } else if (it->kind == Gen::Sigma) {
      if (it->exponent > 0)
        for (int i = n - 1; i >= 1; --i)
          swap_at(i);
      else
        for (int i = 1; i <= n - 1; ++i)
          swap_at(i);
    }
  }
  return p;
}

Units sigma_power_units(int k) {
  return Units(static_cast<std::size_t>(std::abs(k)), Letter::sigma(k > 0 ? 1 : -1));
}

// T/Y/sigma words (Z read as Y) go through the annular embedding.
Units as_affine(Iter first, Iter last) {
  Units out(first, last);
  for (auto &l : out)
    if (l.kind == Gen::Z)
      l.kind = Gen::Y;
  return out;
}

bool segment_equals(Iter first, Iter last, const Units &candidate, int n) {
  Units w = as_affine(first, last);
  for (auto it = candidate.rbegin(); it != candidate.rend(); ++it) {
    Letter l = it->inverse();
    if (l.kind == Gen::Z)
      l.kind = Gen::Y;
    w.push_back(l);
  }
  return affine_word_is_trivial(w, n);
}

void replace(UnitState &state, std::size_t lo, std::size_t hi, const Units &with) {
  Units out(state.units.begin(), state.units.begin() + static_cast<std::ptrdiff_t>(lo));
  out.insert(out.end(), with.begin(), with.end());
  out.insert(out.end(), state.units.begin() + static_cast<std::ptrdiff_t>(hi), state.units.end());
  state.units.swap(out);
  state.free_reduce();
}

// Z-free stretch [lo, hi) equal to a shorter power of sigma.
bool shrink_sigma_runs(UnitState &state, Trace *trace) {
  const auto &u = state.units;
  const int n = state.n;
  std::size_t start = 0;
  while (start < u.size()) {
    if (u[start].kind == Gen::Z) {
      ++start;
      continue;
    }
    std::size_t end = start;
    while (end < u.size() && u[end].kind != Gen::Z)
      ++end;
    for (std::size_t len = end - start; len >= 2; --len) {
      for (std::size_t lo = start; lo + len <= end; ++lo) {
        const auto first = u.begin() + static_cast<std::ptrdiff_t>(lo);
        const auto last = first + static_cast<std::ptrdiff_t>(len);
        int k = 0;
        for (auto it = first; it != last; ++it)
          if (it->kind == Gen::Sigma)
            k += it->exponent;
        if (static_cast<std::size_t>(std::abs(k)) >= len)
          continue;
        const Units target = sigma_power_units(k);
        if (segment_perm(first, last, n) != segment_perm(target.begin(), target.end(), n))
          continue;
        if (!segment_equals(first, last, target, n))
          continue;
        replace(state, lo, lo + len, target);
        if (trace)
          trace->push_back({"segment-sigma-power", lo});
        return true;
      }
    }
    start = end;
  }
  return false;
}

// Sigma-free stretch of T and Z letters equal to a shorter Z monomial.
bool shrink_z_runs(UnitState &state, Trace *trace) {
  const auto &u = state.units;
  const int n = state.n;
  std::size_t start = 0;
  while (start < u.size()) {
    if (u[start].kind == Gen::Sigma) {
      ++start;
      continue;
    }
    std::size_t end = start;
    while (end < u.size() && u[end].kind != Gen::Sigma)
      ++end;
    for (std::size_t len = end - start; len >= 2; --len) {
      for (std::size_t lo = start; lo + len <= end; ++lo) {
        const auto first = u.begin() + static_cast<std::ptrdiff_t>(lo);
        const auto last = first + static_cast<std::ptrdiff_t>(len);
        if (std::none_of(first, last, [](const Letter &l) { return l.kind == Gen::Z; }))
          continue;
        const Units seg(first, last);
        const WreathElement image = invariant(Word(n, seg));
        bool identity_perm = true;
        for (int j = 0; j < n; ++j)
          identity_perm = identity_perm && image.perm()[static_cast<std::size_t>(j)] == j;
        if (!identity_perm)
          continue;
        Units target;
        std::size_t target_len = 0;
        for (int j = 1; j <= n; ++j) {
          const auto b = image.strands()[static_cast<std::size_t>(j - 1)].b;
          target_len += static_cast<std::size_t>(std::llabs(b));
          for (std::int64_t r = 0; r < std::llabs(b); ++r)
            target.push_back(Letter::z(j, b > 0 ? 1 : -1));
        }
        if (target_len >= len)
          continue;
        if (!segment_equals(first, last, target, n))
          continue;
        replace(state, lo, lo + len, target);
        if (trace)
          trace->push_back({"segment-z-monomial", lo});
        return true;
      }
    }
    start = end;
  }
  return false;
}

// Maximal T-only runs through handle reduction when that shortens them.
bool shrink_t_runs(UnitState &state, Trace *trace) {
  const auto &u = state.units;
  std::size_t start = 0;
  while (start < u.size()) {
    if (u[start].kind != Gen::T) {
      ++start;
      continue;
    }
    std::size_t end = start;
    while (end < u.size() && u[end].kind == Gen::T)
      ++end;
    if (end - start >= 3) {
      const auto first = u.begin() + static_cast<std::ptrdiff_t>(start);
      const auto last = u.begin() + static_cast<std::ptrdiff_t>(end);
      BraidWord reduced = handle_reduce(t_word_to_braid(Units(first, last)));
      if (reduced.size() < end - start) {
        replace(state, start, end, braid_to_t_word(reduced));
        if (trace)
          trace->push_back({"segment-braid", start});
        return true;
      }
    }
    start = end;
  }
  return false;
}

bool is_trivial_residual(const UnitState &s) {
  if (s.units.empty())
    return true;
  if (s.count(Gen::Z) > 0)
    return false;
  return affine_word_is_trivial(s.units, s.n);
}

} // namespace

UnitState canonicalize_segments(UnitState state, std::size_t budget, Trace *trace) {
  std::size_t used = 0;
  while (true) {
    used += sigma_right(state, budget > used ? budget - used : 1, trace);
    if (used >= budget)
      throw BudgetExhausted("segment canonicalization exceeded its step budget", used);
    ++used;
    if (shrink_sigma_runs(state, trace) || shrink_z_runs(state, trace) ||
        shrink_t_runs(state, trace))
      continue;
    return state;
  }
}

QReduction reduce_to_q_monomial(const Word &w, const GroupFamily &family, const Budget &budget) {
  family.check(w);
  QReduction out;
  const Word start = w.contains(Gen::Y) ? sigma_eliminate(w) : w;
  UnitState state = UnitState::from_word(start);
  try {
    state = canonicalize_segments(std::move(state), budget.steps, &out.trace);
  } catch (const BudgetExhausted &e) {
    out.state = UnitState::from_word(start);
    out.q = out.state.q;
    out.budget_exhausted = true;
    out.used = e.used();
    return out;
  }
  out.used = out.trace.size();

  if (state.count(Gen::Z) > 0) {
    const auto rules = search_rules(family);
    auto cost = [](const UnitState &s) {
      return static_cast<long>(4 * s.count(Gen::Z) + 2 * s.count(Gen::Sigma) + s.count(Gen::T));
    };
    auto goal = [](const UnitState &s) { return is_trivial_residual(s); };
    SearchOutcome found = best_first_search(state, rules, budget, cost, goal);
    out.used += found.expanded;
    out.trace.insert(out.trace.end(), found.path.begin(), found.path.end());
    out.budget_exhausted = found.budget_exhausted;
    state = found.best;
    if (found.goal_reached) {
      out.trivial = true;
      state.units.clear();
    }
  }

  out.z_free = state.count(Gen::Z) == 0;
  if (out.z_free && !out.trivial)
    out.trivial = is_trivial_residual(state);
  out.q = state.q;
  out.state = std::move(state);
  return out;
}

EqVerdict equal_under_relations(const Word &a, const Word &b, const GroupFamily &family,
                                const Budget &budget) {
  if (a.n() != b.n() || a.n() != family.n)
    throw DomainError("words and family disagree on the number of strands");
  family.check(a);
  family.check(b);

  EqVerdict v;
  WreathElement ia = invariant(a), ib = invariant(b);
  if (!(ia == ib)) {
    v.kind = EqVerdict::Kind::Distinct;
    std::ostringstream why;
    why << "invariant mismatch:";
    if (ia.perm() != ib.perm())
      why << " permutation";
    for (int j = 0; j < a.n(); ++j) {
      const auto &x = ia.strands()[static_cast<std::size_t>(j)];
      const auto &y = ib.strands()[static_cast<std::size_t>(j)];
      if (x.a != y.a)
        why << " Y-slot of strand " << j + 1;
      if (x.b != y.b)
        why << " Z-slot of strand " << j + 1;
      if (x.c != y.c)
        why << " Q-slot of strand " << j + 1;
    }
    v.reason = why.str();
    v.image_a = std::move(ia);
    v.image_b = std::move(ib);
    return v;
  }

  QReduction r = reduce_to_q_monomial(a * b.inverse(), family, budget);
  v.budget_used = r.used;
  v.witness = std::move(r.trace);
  const bool q_zero = std::all_of(r.q.begin(), r.q.end(), [](int x) { return x == 0; });
  if (r.trivial && q_zero) {
    v.kind = EqVerdict::Kind::Equal;
    v.reason = "a*b^-1 reduced to the identity";
    return v;
  }
  if (r.z_free && family.tag != Family::DoubleAffineQBraid) {
    // Q^q R with R a T/Y/sigma word: the family is Z^N semidirect the affine
    // braid group, and R is decided exactly in B_{N+1}.
    v.kind = EqVerdict::Kind::Distinct;
    v.reason = r.trivial ? "nonzero Q monomial" : "braid embedding: residual is nontrivial";
    return v;
  }
  v.kind = EqVerdict::Kind::Unknown;
  v.reason = r.budget_exhausted ? "search budget exhausted" : "no reduction to the identity found";
  return v;
}

Word appendix_p(int k, int n) {
  Word out = Word(n, {Letter::sigma()}).power(k);
  for (int start = 1; start <= n - k; ++start) {
    Word block(n);
    for (int i = start; i <= start + k - 1; ++i)
      block.push_back(Letter::t(i));
    out *= block.inverse();
  }
  return out;
}

namespace {

AppendixStep check_identity(std::string label, const Word &w, std::size_t budget) {
  AppendixStep step;
  step.label = std::move(label);
  step.word = w.format();
  UnitState state = UnitState::from_word(sigma_eliminate(w));
  sigma_right(state, budget, &step.trace);
  if (state.units.empty() && std::all_of(state.q.begin(), state.q.end(), [](int x) { return x == 0; })) {
    step.passed = true;
    step.method = "sigma-right";
    return step;
  }
  state = canonicalize_segments(std::move(state), budget, &step.trace);
  const bool q_zero = std::all_of(state.q.begin(), state.q.end(), [](int x) { return x == 0; });
  if (state.units.empty()) {
    step.passed = q_zero;
    step.method = "segments";
    return step;
  }
  step.passed = q_zero && state.count(Gen::Z) == 0 && affine_word_is_trivial(state.units, state.n);
  step.method = "braid-embedding";
  return step;
}

} // namespace

AppendixReport verify_appendix_a(int n, std::size_t step_budget) {
  if (n < 2)
    throw DomainError("n must be at least 2");
  AppendixReport report;
  report.n = n;
  const Word sigma_n = Word(n, {Letter::sigma()}).power(n);
  report.steps.push_back(
      check_identity("product-of-Y", product_of(Gen::Y, n) * sigma_n.inverse(), step_budget));
  report.steps.push_back(check_identity(
      "P1-base", appendix_p(1, n) * Word(n, {Letter::y(n, -1)}), step_budget));
  for (int k = 1; k <= n - 2; ++k) {
    const Word w = appendix_p(k, n) * Word(n, {Letter::y(n - k)}) * appendix_p(k + 1, n).inverse();
    report.steps.push_back(check_identity("P" + std::to_string(k) + "-step", w, step_budget));
  }
  report.steps.push_back(check_identity(
      "P" + std::to_string(n - 1) + "-final",
      appendix_p(n - 1, n) * Word(n, {Letter::y(1)}) * sigma_n.inverse(), step_budget));
  return report;
}

std::vector<QExpression> q_expressions(int n) {
  std::vector<QExpression> out;
  const Letter s = Letter::sigma(), si = Letter::sigma(-1);
  out.push_back({"sigma-Z1-conjugate", Word(n, {s, Letter::z(1), si, Letter::z(n, -1)}), n, 1});
  out.push_back({"Z-sigma-clockwise", Word(n, {Letter::z(n), s, Letter::z(1, -1), si}), n, -1});
  const Word sn = Word(n, {s}).power(n);
  for (int i = 1; i <= n; ++i)
    out.push_back({"sigmaN-Z" + std::to_string(i),
                   sn * Word(n, {Letter::z(i)}) * sn.inverse() * Word(n, {Letter::z(i, -1)}), i, 1});
  const Word pz = product_of(Gen::Z, n);
  for (int i = 1; i <= n; ++i) {
    const Word yi(n, {Letter::y(i)});
    out.push_back({"Y" + std::to_string(i) + "-prodZ", yi * pz * yi.inverse() * pz.inverse(), i, 1});
  }
  return out;
}

std::vector<QExpressionResult> q_expression_reduce(int n, const Budget &budget) {
  const GroupFamily d{Family::DoubleAffineQBraid, n};
  std::vector<QExpressionResult> out;
  for (auto &e : q_expressions(n)) {
    EqVerdict v = equal_under_relations(e.word, Word(n, {Letter::q(e.index, e.exponent)}), d, budget);
    out.push_back({std::move(e), std::move(v)});
  }
  return out;
}

} // namespace daqb
