#include "daqb/rewriting.hpp"

#include "daqb/braid.hpp"
#include "daqb/presentations.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

namespace daqb {

std::string_view strategy_name(Strategy s) {
  switch (s) {
  case Strategy::Free: return "free";
  case Strategy::QPrefix: return "q-prefix";
  case Strategy::SigmaRight: return "sigma-right";
  case Strategy::Search: return "search";
  }
  return "?";
}

Strategy parse_strategy(std::string_view text) {
  for (auto s : {Strategy::Free, Strategy::QPrefix, Strategy::SigmaRight, Strategy::Search})
    if (strategy_name(s) == text)
      return s;
  throw DomainError("unknown strategy '" + std::string(text) + "'");
}

std::string trace_to_json(const Trace &trace) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < trace.size(); ++k)
    os << (k ? "," : "") << "[\"" << trace[k].rule << "\"," << trace[k].position << ']';
  os << ']';
  return os.str();
}

// UnitState

UnitState UnitState::from_word(const Word &w) {
  UnitState s;
  s.n = w.n();
  s.q.assign(static_cast<std::size_t>(w.n()), 0);
  for (const auto &l : expand_units(w)) {
    if (l.kind == Gen::Q)
      s.absorb_q(s.units.size(), l.index, l.exponent);
    else
      s.units.push_back(l);
  }
  s.free_reduce();
  return s;
}

Word UnitState::residual() const { return Word(n, units); }

Word UnitState::to_word() const { return q_monomial(n, q) * residual(); }

void UnitState::absorb_q(std::size_t pos, int j, int e) {
  for (std::size_t k = pos; k-- > 0;)
    j = transport_q_index(j, units[k], n);
  q[static_cast<std::size_t>(j - 1)] += e;
}

std::size_t UnitState::free_reduce(Trace *trace) {
  std::vector<Letter> out;
  out.reserve(units.size());
  std::size_t cancelled = 0;
  for (const auto &l : units) {
    if (!out.empty() && out.back().same_generator(l) && out.back().exponent == -l.exponent) {
      if (trace)
        trace->push_back({"free", out.size() - 1});
      out.pop_back();
      ++cancelled;
    } else {
      out.push_back(l);
    }
  }
  units.swap(out);
  return cancelled;
}

std::size_t UnitState::count(Gen g) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(units.begin(), units.end(), [g](const Letter &l) { return l.kind == g; }));
}

std::string UnitState::key() const {
  std::string k;
  k.reserve(units.size() * 2 + q.size() * 2);
  for (int v : q) {
    k += std::to_string(v);
    k += ',';
  }
  k += '|';
  for (const auto &l : units) {
    k += static_cast<char>('A' + static_cast<int>(l.kind));
    k += static_cast<char>((l.exponent > 0 ? 'a' : 'A') + l.index);
  }
  return k;
}

// Rules

namespace {

using Units = std::vector<Letter>;

Units inverse_units(const Units &u) {
  Units out;
  out.reserve(u.size());
  for (auto it = u.rbegin(); it != u.rend(); ++it)
    out.push_back(it->inverse());
  return out;
}

struct Relator {
  Units letters;
  std::string label;
};

std::vector<Relator> sigma_form_relators(const GroupFamily &family) {
  const int n = family.n;
  std::vector<Relator> rels;
  auto T = [](int i, int e = 1) { return Letter::t(i, e); };
  auto Z = [](int i, int e = 1) { return Letter::z(i, e); };
  const Letter s = Letter::sigma(), si = Letter::sigma(-1);

  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      rels.push_back({{T(i), T(j), T(i, -1), T(j, -1)}, "T1"});
  for (int i = 1; i + 1 <= n - 1; ++i)
    rels.push_back(
        {{T(i), T(i + 1), T(i), T(i + 1, -1), T(i, -1), T(i + 1, -1)}, "T2"});
  if (family.tag == Family::QBraid)
    return rels;

  for (int i = 2; i <= n - 1; ++i)
    rels.push_back({{T(i - 1), s, T(i, -1), si}, "Ts"});
  rels.push_back({{T(n - 1), s, s, T(1, -1), si, si}, "Tss"});
  if (family.tag == Family::AffineQBraid)
    return rels;

  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      rels.push_back({{Z(i), Z(j), Z(i, -1), Z(j, -1)}, "Z1"});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n; ++j)
      if (j != i && j != i + 1)
        rels.push_back({{T(i), Z(j), T(i, -1), Z(j, -1)}, "Z2"});
  for (int i = 1; i <= n - 1; ++i)
    rels.push_back({{T(i), Z(i + 1), T(i), Z(i, -1)}, "Z3"});
  for (int i = 2; i <= n; ++i)
    rels.push_back({{Z(i - 1), s, Z(i, -1), si}, "Zs"});
  rels.push_back({{Z(n), s, Z(1, -1), si, Letter::q(n)}, "ZNs"});
  return rels;
}

bool cyclically_reduced(const Units &u) {
  for (std::size_t k = 0; k + 1 < u.size(); ++k)
    if (u[k].same_generator(u[k + 1]) && u[k].exponent == -u[k + 1].exponent)
      return false;
  return true;
}

} // namespace

std::vector<UnitRule> search_rules(const GroupFamily &family) {
  std::vector<UnitRule> rules;
  std::set<std::pair<Units, Units>> seen;
  for (const auto &rel : sigma_form_relators(family)) {
    for (const Units &base : {rel.letters, inverse_units(rel.letters)}) {
      const std::size_t len = base.size();
      for (std::size_t rot = 0; rot < len; ++rot) {
        Units r(base.begin() + static_cast<std::ptrdiff_t>(rot), base.end());
        r.insert(r.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(rot));
        for (std::size_t k = 1; k < len; ++k) {
          Units lhs(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k));
          Units rest(r.begin() + static_cast<std::ptrdiff_t>(k), r.end());
          if (std::any_of(lhs.begin(), lhs.end(), [](const Letter &l) { return l.kind == Gen::Q; }))
            continue;
          Units rhs = inverse_units(rest);
          std::size_t rhs_len = static_cast<std::size_t>(std::count_if(
              rhs.begin(), rhs.end(), [](const Letter &l) { return l.kind != Gen::Q; }));
          if (rhs_len > k + 2 || !cyclically_reduced(lhs))
            continue;
          if (lhs == rhs)
            continue;
          if (!seen.insert({lhs, rhs}).second)
            continue;
          rules.push_back({std::move(lhs), std::move(rhs), rel.label});
        }
      }
    }
  }
  return rules;
}

bool apply_rule(UnitState &state, const UnitRule &rule, std::size_t pos) {
  const auto &u = state.units;
  if (pos + rule.lhs.size() > u.size())
    return false;
  if (!std::equal(rule.lhs.begin(), rule.lhs.end(), u.begin() + static_cast<std::ptrdiff_t>(pos)))
    return false;
  Units out(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(pos));
  std::vector<std::pair<std::size_t, Letter>> qs;
  for (const auto &l : rule.rhs) {
    if (l.kind == Gen::Q)
      qs.push_back({out.size(), l});
    else
      out.push_back(l);
  }
  out.insert(out.end(), u.begin() + static_cast<std::ptrdiff_t>(pos + rule.lhs.size()), u.end());
  state.units.swap(out);
  for (const auto &[at, l] : qs)
    state.absorb_q(at, l.index, l.exponent);
  return true;
}

// sigma-right

namespace {

struct SigmaMove {
  std::size_t width;    // letters consumed
  Units replacement;    // may contain Q letters
  const char *label;
};

bool is_sigma(const Letter &l, int e) { return l.kind == Gen::Sigma && l.exponent == e; }

bool match_sigma_move(const Units &u, std::size_t p, int n, SigmaMove &m) {
  const Letter &x = u[p];
  if (x.kind != Gen::T && x.kind != Gen::Z)
    return false;
  if (p + 1 >= u.size() || u[p + 1].kind != Gen::Sigma)
    return false;
  const int e = x.exponent;
  const bool forward = is_sigma(u[p + 1], 1);
  const bool two = p + 2 < u.size() && u[p + 2] == u[p + 1];
  const Letter s = u[p + 1];
  if (x.kind == Gen::T) {
    if (forward) {
      if (x.index <= n - 2) {
        m = {2, {s, Letter::t(x.index + 1, e)}, "Ts"};
        return true;
      }
      if (two) {
        m = {3, {s, s, Letter::t(1, e)}, "Tss"};
        return true;
      }
      return false;
    }
    if (x.index >= 2) {
      m = {2, {s, Letter::t(x.index - 1, e)}, "Ts"};
      return true;
    }
    if (two) {
      m = {3, {s, s, Letter::t(n - 1, e)}, "Tss"};
      return true;
    }
    return false;
  }
  // Z letters
  if (forward) {
    if (x.index <= n - 1)
      m = {2, {s, Letter::z(x.index + 1, e)}, "Zs"};
    else
      m = {2, {Letter::q(n, -e), s, Letter::z(1, e)}, "ZNs"};
    return true;
  }
  if (x.index >= 2)
    m = {2, {s, Letter::z(x.index - 1, e)}, "Zs"};
  else
    m = {2, {Letter::q(1, e), s, Letter::z(n, e)}, "ZNs"};
  return true;
}

} // namespace

std::size_t sigma_right(UnitState &state, std::size_t budget, Trace *trace) {
  std::size_t steps = 0;
  state.free_reduce(trace);
  while (true) {
    bool fired = false;
    for (std::size_t p = 0; p + 1 < state.units.size(); ++p) {
      SigmaMove m;
      if (!match_sigma_move(state.units, p, state.n, m))
        continue;
      if (steps >= budget)
        throw BudgetExhausted("sigma-right exceeded its step budget", steps);
      UnitRule rule{Units(state.units.begin() + static_cast<std::ptrdiff_t>(p),
                          state.units.begin() + static_cast<std::ptrdiff_t>(p + m.width)),
                    m.replacement, m.label};
      apply_rule(state, rule, p);
      if (trace)
        trace->push_back({m.label, p});
      ++steps;
      steps += state.free_reduce(trace);
      fired = true;
      break;
    }
    if (!fired)
      return steps;
  }
}

// search

SearchOutcome best_first_search(const UnitState &start, const std::vector<UnitRule> &rules,
                                const Budget &budget,
                                const std::function<long(const UnitState &)> &cost,
                                const std::function<bool(const UnitState &)> &goal) {
  struct Node {
    UnitState state;
    std::size_t parent;
    TraceStep move;
    int depth;
  };
  std::vector<Node> arena;
  std::unordered_map<std::string, std::size_t> seen;
  using Entry = std::tuple<long, std::size_t>; // cost, arena index
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  arena.push_back({start, none, {}, 0});
  seen.emplace(start.key(), 0);
  frontier.push({cost(start), 0});

  SearchOutcome out;
  std::size_t best = 0;
  long best_cost = cost(start);

  auto path_to = [&](std::size_t idx) {
    Trace path;
    for (std::size_t k = idx; arena[k].parent != none; k = arena[k].parent)
      path.push_back(arena[k].move);
    std::reverse(path.begin(), path.end());
    return path;
  };

  while (!frontier.empty()) {
    auto [c, idx] = frontier.top();
    frontier.pop();
    if (goal(arena[idx].state)) {
      out.best = arena[idx].state;
      out.path = path_to(idx);
      out.goal_reached = true;
      return out;
    }
    if (out.expanded >= budget.steps) {
      out.budget_exhausted = true;
      break;
    }
    ++out.expanded;
    if (arena[idx].depth >= budget.depth)
      continue;
    const std::size_t len = arena[idx].state.units.size();
    for (std::size_t p = 0; p < len; ++p) {
      for (const auto &rule : rules) {
        UnitState next = arena[idx].state;
        if (!apply_rule(next, rule, p))
          continue;
        next.free_reduce();
        auto [it, inserted] = seen.emplace(next.key(), arena.size());
        if (!inserted)
          continue;
        long nc = cost(next);
        arena.push_back({std::move(next), idx, {rule.label, p}, arena[idx].depth + 1});
        frontier.push({nc, arena.size() - 1});
        if (nc < best_cost) {
          best_cost = nc;
          best = arena.size() - 1;
        }
      }
    }
  }
  out.best = arena[best].state;
  out.path = path_to(best);
  return out;
}

// rewrite_normalize

RewriteResult rewrite_normalize(const Word &w, const GroupFamily &family, Strategy strategy,
                                std::size_t step_budget) {
  if (step_budget == 0)
    throw DomainError("step budget must be positive");
  family.check(w);
  RewriteResult result{w, true, 0, {}};
  switch (strategy) {
  case Strategy::Free:
    // words are kept freely reduced on construction
    return result;
  case Strategy::QPrefix: {
    auto qp = q_prefix_normalize(w);
    for (std::size_t pos = 0; pos < w.letters().size(); ++pos)
      if (w.letters()[pos].kind == Gen::Q)
        result.trace.push_back({"Q-transport", pos});
    result.steps = result.trace.size();
    result.word = q_monomial(w.n(), qp.q) * qp.residual;
    return result;
  }
  case Strategy::SigmaRight: {
    UnitState st = UnitState::from_word(w);
    try {
      result.steps = sigma_right(st, step_budget, &result.trace);
    } catch (const BudgetExhausted &e) {
      result.normal = false;
      result.steps = e.used();
    }
    result.word = st.to_word();
    return result;
  }
  case Strategy::Search: {
    UnitState st = UnitState::from_word(w);
    Budget b{step_budget, 20};
    auto outcome = best_first_search(
        st, search_rules(family), b,
        [](const UnitState &s) { return static_cast<long>(s.units.size()); },
        [](const UnitState &s) { return s.units.empty(); });
    result.word = outcome.best.to_word();
    result.trace = std::move(outcome.path);
    result.steps = outcome.expanded;
    result.normal = !outcome.budget_exhausted;
    return result;
  }
  }
  return result;
}

} // namespace daqb
