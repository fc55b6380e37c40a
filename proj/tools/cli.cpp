#include "cli.hpp"

#include "daqb/equality.hpp"
#include "daqb/family.hpp"
#include "daqb/hecke.hpp"
#include "daqb/invariants.hpp"
#include "daqb/presentations.hpp"
#include "daqb/quotient.hpp"
#include "daqb/rewriting.hpp"
#include "daqb/ribbon.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace daqb::cli {

using nlohmann::json;

void RunConfig::validate() const {
  if (n < 2)
    throw std::invalid_argument("-n must be at least 2");
  if (budget <= 0 || depth <= 0)
    throw std::invalid_argument("budgets must be positive");
  if (!(tolerance > 0 && tolerance < 1e-2))
    throw std::invalid_argument("tolerance must lie in (0, 1e-2)");
  if (samples < 16)
    throw std::invalid_argument("--samples must be at least 16");
}

namespace {

// Flat JSON object of option values: {"n": 4, "family": "A", ...}.
class JsonConfig : public CLI::Config {
public:
  std::string to_config(const CLI::App *app, bool default_also, bool, std::string) const override {
    json j = json::object();
    for (const CLI::Option *opt : app->get_options({})) {
      if (opt->get_lnames().empty() || !opt->get_configurable())
        continue;
      const std::string name = opt->get_lnames()[0];
      if (opt->count() > 0)
        j[name] = opt->as<std::string>();
      else if (default_also && !opt->get_default_str().empty())
        j[name] = opt->get_default_str();
    }
    return j.dump(2) + "\n";
  }

  std::vector<CLI::ConfigItem> from_config(std::istream &in) const override {
    json j;
    try {
      in >> j;
    } catch (const json::exception &e) {
      throw CLI::ConversionError(std::string("config: ") + e.what());
    }
    if (!j.is_object())
      throw CLI::ConversionError("config: top level must be an object");
    std::vector<CLI::ConfigItem> items;
    for (const auto &[key, value] : j.items()) {
      CLI::ConfigItem item;
      item.name = key;
      if (value.is_string())
        item.inputs = {value.get<std::string>()};
      else if (value.is_boolean())
        item.inputs = {value.get<bool>() ? "true" : "false"};
      else if (value.is_number() || value.is_null())
        item.inputs = {value.dump()};
      else
        throw CLI::ConversionError("config: '" + key + "' must be a scalar");
      items.push_back(std::move(item));
    }
    return items;
  }
};

// Thrown by the commands once the report is printed.
struct Exit {
  int code;
};

struct Context {
  RunConfig cfg;
  std::ostream &out;
  std::ostream &err;

  GroupFamily family() const { return {parse_family(cfg.family), cfg.n}; }
  Budget budget() const { return {static_cast<std::size_t>(cfg.budget), cfg.depth}; }
  bool as_json() const { return cfg.format == Format::Json; }

  void emit(const json &j) const { out << j.dump(2) << '\n'; }
};

json parsed(const std::string &text) { return json::parse(text); }

json trace_json(const Trace &t) { return parsed(trace_to_json(t)); }

json config_json(const RunConfig &c) {
  return {{"n", c.n},       {"family", c.family}, {"budget", c.budget},       {"depth", c.depth},
          {"seed", c.seed}, {"samples", c.samples}, {"tolerance", c.tolerance}};
}

int verdict_exit(EqVerdict::Kind k) {
  switch (k) {
  case EqVerdict::Kind::Equal: return Ok;
  case EqVerdict::Kind::Distinct: return Failed;
  case EqVerdict::Kind::Unknown: return Undecided;
  }
  return Undecided;
}

// normalize ---------------------------------------------------------------

int cmd_normalize(const Context &ctx, const std::string &text, const std::vector<std::string> &names) {
  const GroupFamily fam = ctx.family();
  Word w = Word::parse(text, fam.n);
  fam.check(w);
  json steps = json::array();
  bool normal = true;
  std::size_t remaining = static_cast<std::size_t>(ctx.cfg.budget);
  for (const auto &name : names) {
    const Strategy s = parse_strategy(name);
    RewriteResult r = rewrite_normalize(w, fam, s, std::max<std::size_t>(remaining, 1));
    remaining -= std::min(remaining, r.steps);
    steps.push_back({{"strategy", std::string(strategy_name(s))},
                     {"steps", r.steps},
                     {"trace", trace_json(r.trace)}});
    w = std::move(r.word);
    if (!r.normal) {
      normal = false;
      break;
    }
  }
  if (ctx.as_json())
    ctx.emit({{"input", text}, {"word", w.format()}, {"normal", normal}, {"pipeline", steps}});
  else
    ctx.out << w.format() << '\n';
  if (!normal) {
    ctx.err << "budget exhausted; best effort printed\n";
    return OutOfBudget;
  }
  return Ok;
}

// eq ----------------------------------------------------------------------

int cmd_eq(const Context &ctx, const std::string &a_text, const std::string &b_text) {
  const GroupFamily fam = ctx.family();
  const Word a = Word::parse(a_text, fam.n), b = Word::parse(b_text, fam.n);
  fam.check(a);
  fam.check(b);
  const EqVerdict v = equal_under_relations(a, b, fam, ctx.budget());
  if (ctx.as_json()) {
    json j{{"a", a.format()},
           {"b", b.format()},
           {"family", std::string(family_name(fam.tag))},
           {"n", fam.n},
           {"verdict", std::string(verdict_name(v.kind))},
           {"reason", v.reason},
           {"budget_used", v.budget_used},
           {"witness", trace_json(v.witness)}};
    if (v.image_a && v.image_b) {
      j["image_a"] = parsed(v.image_a->to_json());
      j["image_b"] = parsed(v.image_b->to_json());
    }
    ctx.emit(j);
  } else {
    ctx.out << verdict_name(v.kind) << '\n' << "reason: " << v.reason << '\n';
    if (v.kind == EqVerdict::Kind::Equal)
      ctx.out << "witness: " << v.witness.size() << " moves\n";
    if (v.image_a && v.image_b)
      ctx.out << "image a: " << v.image_a->to_string() << '\n'
              << "image b: " << v.image_b->to_string() << '\n';
  }
  return verdict_exit(v.kind);
}

// invariant, relations ------------------------------------------------------

int cmd_invariant(const Context &ctx, const std::string &text) {
  const GroupFamily fam = ctx.family();
  const Word w = Word::parse(text, fam.n);
  fam.check(w);
  const WreathElement img = invariant(w);
  if (ctx.as_json())
    ctx.emit({{"word", w.format()}, {"invariant", parsed(img.to_json())}});
  else
    ctx.out << img.to_string() << '\n';
  return Ok;
}

int cmd_relations(const Context &ctx) {
  const RelationTable table = relation_table(ctx.family());
  if (ctx.as_json()) {
    json rels = json::array();
    for (const auto &r : table.relations)
      rels.push_back({{"label", r.label}, {"lhs", r.lhs.format()}, {"rhs", r.rhs.format()}});
    ctx.emit({{"family", std::string(family_name(table.family.tag))},
              {"n", table.family.n},
              {"count", table.relations.size()},
              {"relations", rels}});
  } else {
    for (const auto &r : table.relations)
      ctx.out << r.label << ": " << r.lhs.format() << " = " << r.rhs.format() << '\n';
  }
  return Ok;
}

// verify --------------------------------------------------------------------

struct Check {
  std::string label;
  bool passed = false;
  json detail = json::object();
};

std::vector<Check> suite_relations(const Context &ctx) {
  const GroupFamily fam = ctx.family();
  std::vector<Check> out;
  for (const auto &r : relation_table(fam).relations) {
    const EqVerdict v = equal_under_relations(r.lhs, r.rhs, fam, ctx.budget());
    out.push_back({r.label, v.kind == EqVerdict::Kind::Equal,
                   {{"lhs", r.lhs.format()},
                    {"rhs", r.rhs.format()},
                    {"verdict", std::string(verdict_name(v.kind))},
                    {"budget_used", v.budget_used}}});
  }
  return out;
}

std::vector<Check> suite_homomorphism(const Context &ctx) {
  std::vector<Check> out;
  for (const auto &r : relation_table(ctx.family()).relations) {
    const WreathElement l = invariant(r.lhs), rr = invariant(r.rhs);
    Check c{r.label, l == rr, {{"lhs", r.lhs.format()}, {"rhs", r.rhs.format()}}};
    if (!c.passed) {
      c.detail["lhs_image"] = parsed(l.to_json());
      c.detail["rhs_image"] = parsed(rr.to_json());
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Check> suite_appendix(const Context &ctx) {
  std::vector<Check> out;
  for (const auto &s : verify_appendix_a(ctx.cfg.n, static_cast<std::size_t>(ctx.cfg.budget)).steps)
    out.push_back({s.label, s.passed,
                   {{"word", s.word}, {"method", s.method}, {"moves", s.trace.size()}}});
  return out;
}

std::vector<Check> suite_daha(const Context &ctx) {
  std::vector<Check> out;
  for (const auto &c : verify_daha_relations(ctx.cfg.n, ctx.budget()).checks)
    out.push_back({c.label, c.passed,
                   {{"lhs", c.lhs},
                    {"rhs", c.rhs},
                    {"expected_q", c.expected_q},
                    {"observed_q", c.observed_q},
                    {"residual_equal", c.residual_equal}}});
  return out;
}

std::vector<Check> suite_twist(const Context &ctx) {
  const int n = ctx.cfg.n, m = ctx.cfg.samples;
  const double tol = ctx.cfg.tolerance, turn = 2 * std::numbers::pi;
  std::vector<Check> out;
  auto expect = [&](std::string label, const RibbonPath &p, double target) {
    const TwistResult r = total_twist(p);
    out.push_back({std::move(label), std::abs(r.total_twist - target) <= tol,
                   {{"total_twist", r.total_twist},
                    {"expected", target},
                    {"error", std::abs(r.total_twist - target)},
                    {"samples", r.samples}}});
  };

  const RibbonPath q = analytic_q_path(n, 1, m);
  expect("analytic-Q", q, turn);
  expect("analytic-Q-inverse", inverse(q), -turn);
  for (int i = 1; i <= n; ++i) {
    const std::string k = std::to_string(i);
    expect("Q" + k, generator_path(Letter::q(i), n, m), turn);
    expect("Q" + k + "^-1", generator_path(Letter::q(i, -1), n, m), -turn);
    expect("Y" + k, generator_path(Letter::y(i), n, m), 0);
    expect("Z" + k, generator_path(Letter::z(i), n, m), 0);
  }

  const auto transported = transport_frame(q, analytic_transported_frame(0));
  const auto ribbon = ribbon_frames(q);
  double dt = 0, dr = 0;
  for (std::size_t k = 0; k < q.samples.size(); ++k) {
    dt = std::max(dt, frame_deviation(transported[k], analytic_transported_frame(q.samples[k].s)));
    dr = std::max(dr, frame_deviation(ribbon[k], analytic_ribbon_frame(q.samples[k].s)));
  }
  out.push_back({"closed-form-transported", dt <= tol, {{"max_deviation", dt}}});
  out.push_back({"closed-form-ribbon", dr <= tol, {{"max_deviation", dr}}});
  return out;
}

int cmd_verify(const Context &ctx, const std::string &suite, bool timings) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Check> checks;
  if (suite == "relations")
    checks = suite_relations(ctx);
  else if (suite == "homomorphism")
    checks = suite_homomorphism(ctx);
  else if (suite == "appendix-a")
    checks = suite_appendix(ctx);
  else if (suite == "daha")
    checks = suite_daha(ctx);
  else if (suite == "twist")
    checks = suite_twist(ctx);
  else
    throw DomainError("unknown suite '" + suite + "'");
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  std::stable_sort(checks.begin(), checks.end(),
                   [](const Check &a, const Check &b) { return a.label < b.label; });
  const auto failed = std::count_if(checks.begin(), checks.end(), [](const Check &c) { return !c.passed; });

  if (ctx.as_json()) {
    json items = json::array();
    for (const auto &c : checks) {
      json j = c.detail;
      j["label"] = c.label;
      j["passed"] = c.passed;
      items.push_back(std::move(j));
    }
    json report{{"suite", suite},
                {"config", config_json(ctx.cfg)},
                {"checks", items},
                {"total", checks.size()},
                {"failed", failed},
                {"passed", failed == 0}};
    if (timings)
      report["elapsed_ms"] = ms;
    ctx.emit(report);
  } else {
    for (const auto &c : checks)
      ctx.out << (c.passed ? "PASS " : "FAIL ") << c.label << '\n';
    ctx.out << suite << ": " << checks.size() - failed << "/" << checks.size() << " passed";
    if (timings)
      ctx.out << " in " << ms << " ms";
    ctx.out << '\n';
  }
  return failed == 0 ? Ok : Failed;
}

// hecke -----------------------------------------------------------------------

struct Term {
  long coefficient = 1;
  Word word;
};

// "2 T1 T2 - T1^-1 + 3*Y1": integer coefficients, words joined by + and -.
std::vector<Term> parse_sum(const std::string &text, int n) {
  std::vector<std::pair<int, std::string>> pieces{{1, ""}};
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    const bool sign = (c == '+' || c == '-') && (i == 0 || text[i - 1] != '^');
    if (!sign) {
      pieces.back().second += c;
      continue;
    }
    if (pieces.back().second.find_first_not_of(" \t") == std::string::npos) {
      pieces.back().first *= c == '-' ? -1 : 1; // unary sign
    } else {
      pieces.push_back({c == '-' ? -1 : 1, ""});
    }
  }

  std::vector<Term> terms;
  for (auto &[sgn, body] : pieces) {
    std::size_t p = body.find_first_not_of(" \t");
    if (p == std::string::npos)
      throw ParseError("empty term", text.size());
    long coef = 1;
    if (std::isdigit(static_cast<unsigned char>(body[p]))) {
      std::size_t used = 0;
      coef = std::stol(body.substr(p), &used);
      p = body.find_first_not_of(" \t", p + used);
      if (p != std::string::npos && body[p] == '*')
        p = body.find_first_not_of(" \t", p + 1);
    }
    const std::string word = p == std::string::npos ? "e" : body.substr(p);
    terms.push_back({sgn * coef, Word::parse(word, n)});
  }
  return terms;
}

int cmd_hecke(const Context &ctx, const std::string &text) {
  const int n = ctx.cfg.n;
  const auto terms = parse_sum(text, n);
  bool affine = false;
  for (const auto &t : terms) {
    if (t.word.contains(Gen::Q) || t.word.contains(Gen::Z))
      throw DomainError("hecke expressions take T, Y and s letters only");
    affine = affine || t.word.contains(Gen::Y) || t.word.contains(Gen::Sigma);
  }
  std::string shown, encoded;
  if (affine) {
    AffineHecke sum(n);
    for (const auto &t : terms)
      sum += LaurentPoly(t.coefficient) * affine_straighten(sigma_introduce(t.word));
    shown = sum.to_string();
    encoded = sum.to_json();
  } else {
    FiniteHecke sum(n);
    for (const auto &t : terms)
      sum += LaurentPoly(t.coefficient) * hecke_of_t_word(t.word);
    shown = sum.to_string();
    encoded = sum.to_json();
  }
  if (ctx.as_json())
    ctx.emit({{"input", text},
              {"algebra", affine ? "affine" : "finite"},
              {"n", n},
              {"element", shown},
              {"terms", parsed(encoded)}});
  else
    ctx.out << shown << '\n';
  return Ok;
}

// twist -----------------------------------------------------------------------

int cmd_twist(const Context &ctx, const std::string &arg) {
  RibbonPath path;
  std::string source;
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    path = read_csv(in);
    source = "csv";
  } else {
    const Word w = Word::parse(arg, ctx.cfg.n);
    if (w.size() != 1)
      throw DomainError("twist takes a single generator or a CSV path");
    path = generator_path(w.letters()[0], ctx.cfg.n, ctx.cfg.samples);
    source = w.format();
  }
  const TwistResult r = total_twist(path);
  const double turns = r.total_twist / (2 * std::numbers::pi);
  if (ctx.as_json()) {
    ctx.emit({{"source", source},
              {"total_twist", r.total_twist},
              {"turns", turns},
              {"samples", r.samples},
              {"residual_orthogonality_error", r.residual_orthogonality_error}});
  } else {
    std::ostringstream os;
    os.precision(12);
    os << "total_twist " << r.total_twist << " (" << turns << " turns, " << r.samples << " samples)";
    ctx.out << os.str() << '\n';
  }
  return Ok;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Words, invariants, quotients and ribbon twists of the double affine Q-braid group",
               "daqb"};
  app.fallthrough();
  app.require_subcommand(1);
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON file of option defaults");

  RunConfig cfg;
  std::string format = "text";
  app.add_option("-n", cfg.n, "Number of strands")->envname("DAQB_N")->capture_default_str();
  app.add_option("--family", cfg.family, "B, A or D")->envname("DAQB_FAMILY")->capture_default_str();
  app.add_option("--budget", cfg.budget, "Rewrite step budget")->envname("DAQB_BUDGET")->capture_default_str();
  app.add_option("--depth", cfg.depth, "Search depth")->envname("DAQB_DEPTH")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for randomized suites")->envname("DAQB_SEED")->capture_default_str();
  app.add_option("--tolerance", cfg.tolerance, "Numeric tolerance")
      ->envname("DAQB_TOLERANCE")
      ->capture_default_str();
  app.add_option("--samples", cfg.samples, "Samples per ribbon path")
      ->envname("DAQB_SAMPLES")
      ->capture_default_str();
  app.add_option("--format", format, "text or json")
      ->envname("DAQB_FORMAT")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string word_a, word_b, suite, expr, target;
  std::vector<std::string> strategies{"free", "q-prefix"};
  bool timings = false;

  auto *normalize = app.add_subcommand("normalize", "Rewrite a word to normal form");
  normalize->add_option("word", word_a)->required();
  normalize->add_option("--strategy", strategies, "free, q-prefix, sigma-right, search (repeatable)")
      ->capture_default_str();

  auto *eq = app.add_subcommand("eq", "Decide equality of two words");
  eq->add_option("a", word_a)->required();
  eq->add_option("b", word_b)->required();

  auto *inv = app.add_subcommand("invariant", "Wreath-product invariant of a word");
  inv->add_option("word", word_a)->required();

  auto *rels = app.add_subcommand("relations", "List the instantiated defining relations");

  auto *verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember({"relations", "appendix-a", "daha", "homomorphism", "twist"}));
  verify->add_flag("--timings", timings, "Add wall-clock time to the report");

  auto *hecke = app.add_subcommand("hecke", "Reduce a Hecke expression to basis form");
  hecke->add_option("expr", expr)->required();

  auto *twist = app.add_subcommand("twist", "Total twist of a generator path or CSV polyline");
  twist->add_option("path", target, "generator letter or CSV file")->required();

  try {
    app.parse(argc, argv);
    cfg.format = format == "json" ? Format::Json : Format::Text;
    cfg.validate();
    parse_family(cfg.family);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : BadInput;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return BadInput;
  }

  const Context ctx{cfg, out, err};
  try {
    if (*normalize)
      return cmd_normalize(ctx, word_a, strategies);
    if (*eq)
      return cmd_eq(ctx, word_a, word_b);
    if (*inv)
      return cmd_invariant(ctx, word_a);
    if (*rels)
      return cmd_relations(ctx);
    if (*verify)
      return cmd_verify(ctx, suite, timings);
    if (*hecke)
      return cmd_hecke(ctx, expr);
    if (*twist)
      return cmd_twist(ctx, target);
  } catch (const daqb::ParseError &e) {
    err << "parse error: " << e.what() << '\n';
    return BadInput;
  } catch (const BudgetExhausted &e) {
    err << "budget exhausted after " << e.used() << " steps: " << e.what() << '\n';
    return OutOfBudget;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return BadInput;
  } catch (const GeometryError &e) {
    err << "geometry error: " << e.what() << '\n';
    return BadInput;
  }
  return BadInput;
}

} // namespace daqb::cli
