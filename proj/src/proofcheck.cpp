#include "cia/proofcheck.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <variant>

#include "cia/groebner.hpp"
#include "cia/parallel.hpp"

namespace cia {

using Poly = Polynomial<Rational>;

namespace {

const FieldDesc kQQ = FieldDesc::rationals();

// ------------------------------------------------------ formula mini-language

struct Env {
  int n = 0, a = 0, b = 0;
  std::optional<int> i;
};

// c + cn*n + ca*a + cb*b + ci*i
struct Lin {
  int c = 0, cn = 0, ca = 0, cb = 0, ci = 0;

  int eval(const Env& e) const {
    if (ci != 0 && !e.i) throw InvalidArgument("table expression uses i outside a summation row");
    return c + cn * e.n + ca * e.a + cb * e.b + ci * e.i.value_or(0);
  }
};

std::string trim(std::string_view s) {
  std::size_t lo = 0, hi = s.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(s[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(s[hi - 1]))) --hi;
  return std::string(s.substr(lo, hi - lo));
}

Lin parse_lin(std::string_view text) {
  Lin e;
  std::string s = trim(text);
  if (s.empty()) throw InvalidArgument("empty table expression");
  std::size_t pos = 0;
  int sign = 1;
  bool expect_term = true;
  while (pos < s.size()) {
    char ch = s[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++pos;
    } else if (ch == '+' || ch == '-') {
      sign = ch == '-' ? -1 : 1;
      expect_term = true;
      ++pos;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      int v = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) v = 10 * v + (s[pos++] - '0');
      e.c += sign * v;
      sign = 1;
      expect_term = false;
    } else {
      int* slot = ch == 'n' ? &e.cn : ch == 'a' ? &e.ca : ch == 'b' ? &e.cb : ch == 'i' ? &e.ci : nullptr;
      if (!slot) throw InvalidArgument("bad symbol in table expression \"" + s + "\"");
      *slot += sign;
      sign = 1;
      expect_term = false;
      ++pos;
    }
  }
  if (expect_term) throw InvalidArgument("dangling sign in table expression \"" + s + "\"");
  return e;
}

struct Comparison {
  Lin lhs;
  std::string op;
  Lin rhs;
};

std::vector<Comparison> parse_condition(const std::string& text) {
  std::vector<Comparison> out;
  std::stringstream clauses(text);
  std::string clause;
  while (std::getline(clauses, clause, ',')) {
    std::vector<std::string> operands, ops;
    std::string cur;
    for (std::size_t p = 0; p < clause.size(); ++p) {
      char ch = clause[p];
      if (ch == '<' || ch == '>' || ch == '=') {
        std::string op(1, ch);
        if (ch != '=' && p + 1 < clause.size() && clause[p + 1] == '=') op += clause[++p];
        operands.push_back(cur);
        ops.push_back(op);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    operands.push_back(cur);
    if (ops.empty()) throw InvalidArgument("table condition without comparison: " + clause);
    for (std::size_t k = 0; k < ops.size(); ++k)
      out.push_back({parse_lin(operands[k]), ops[k], parse_lin(operands[k + 1])});
  }
  return out;
}

bool holds(const std::vector<Comparison>& cond, const Env& env) {
  for (const auto& c : cond) {
    int x = c.lhs.eval(env), y = c.rhs.eval(env);
    bool ok = c.op == "<" ? x < y : c.op == "<=" ? x <= y : c.op == "=" ? x == y : c.op == ">" ? x > y : x >= y;
    if (!ok) return false;
  }
  return true;
}

bool uses_i(const std::vector<Comparison>& cond) {
  for (const auto& c : cond)
    if (c.lhs.ci || c.rhs.ci) return true;
  return false;
}

struct Segment {
  Lin r0, c0, r1, c1;
  bool run = false;
};

std::vector<Segment> parse_formula(const std::string& text) {
  auto parse_var = [&](std::string_view tok) -> std::pair<Lin, Lin> {
    std::string t = trim(tok);
    if (t.size() < 5 || t.substr(0, 2) != "p(" || t.back() != ')')
      throw InvalidArgument("bad variable token \"" + t + "\" in table formula");
    std::string inner = t.substr(2, t.size() - 3);
    auto comma = inner.find(',');
    if (comma == std::string::npos) throw InvalidArgument("bad variable token \"" + t + "\"");
    return {parse_lin(inner.substr(0, comma)), parse_lin(inner.substr(comma + 1))};
  };
  std::vector<Segment> out;
  std::stringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    auto dots = tok.find("..");
    if (dots == std::string::npos) {
      auto [r, c] = parse_var(tok);
      out.push_back({r, c, r, c, false});
    } else {
      auto [r0, c0] = parse_var(tok.substr(0, dots));
      auto [r1, c1] = parse_var(tok.substr(dots + 2));
      out.push_back({r0, c0, r1, c1, true});
    }
  }
  return out;
}

// Instantiates a formula; an error string describes a malformed instance.
std::variant<Monomial, std::string> instantiate(const std::vector<Segment>& segs, const Env& env, const Ring& ring) {
  std::vector<Monomial::Factor> factors;
  auto push = [&](int r, int c) -> std::optional<std::string> {
    if (r < 1 || r > ring.d || c < 1 || c > ring.kl)
      return "p_{" + std::to_string(r) + "," + std::to_string(c) + "} lies outside the matrix";
    factors.push_back({static_cast<std::uint16_t>(ring.index({r, c})), 1});
    return std::nullopt;
  };
  for (const auto& s : segs) {
    int r0 = s.r0.eval(env), c0 = s.c0.eval(env), r1 = s.r1.eval(env), c1 = s.c1.eval(env);
    if (!s.run) {
      if (auto err = push(r0, c0)) return *err;
      continue;
    }
    if (r1 < r0) continue;
    if (c1 - r1 != c0 - r0)
      return "run p_{" + std::to_string(r0) + "," + std::to_string(c0) + "}..p_{" + std::to_string(r1) + "," +
             std::to_string(c1) + "} is not a diagonal";
    for (int r = r0; r <= r1; ++r)
      if (auto err = push(r, c0 + (r - r0))) return *err;
  }
  return Monomial(std::move(factors));
}

// ---------------------------------------------------------------- identities

Poly det(const Ring& ring, CellSet rows, CellSet cols) {
  if (rows.empty()) return Poly::constant(ring, kQQ, 1);
  return minor<Rational>(ring, kQQ, std::move(rows), std::move(cols));
}

Poly var(const Ring& ring, int r, int c) { return Poly::variable(ring, kQQ, {r, c}); }

CellSet range_without(int n, std::initializer_list<int> drop) {
  CellSet out;
  for (int x = 1; x <= n; ++x)
    if (std::find(drop.begin(), drop.end(), x) == drop.end()) out.push_back(x);
  return out;
}

struct Product {
  std::string name;
  int e = 1;   // the identity reads sum e * f1 * f2 = 0
  int i = 0;   // summation index, 0 for the two left-hand products
  Poly f1, f2, q;
};

// Both sides moved to one side. `shift_lt`/`shift_gt` add to the exponent of
// -1 in the i<b and i>b sums; the printed forms are (0,0) for the square
// identity and (0,1) for the n x (n+1) one.
std::vector<Product> identity(bool wide, int n, int a, int b, int shift_lt, int shift_gt) {
  const int m = wide ? n + 1 : n;
  Ring ring{n, m};
  CellSet rows_b = wide ? range_without(n, {}) : range_without(n, {b});
  std::vector<Product> out;
  auto add = [&](std::string name, int e, int i, Poly f1, Poly f2) {
    Poly q = f1 * f2;
    out.push_back({std::move(name), e, i, std::move(f1), std::move(f2), std::move(q)});
  };
  add("p_{b,a} minor", 1, 0, var(ring, b, a), det(ring, rows_b, range_without(m, {a})));
  add("p_{b,a+1} minor", -1, 0, var(ring, b, a + 1), det(ring, rows_b, range_without(m, {a + 1})));
  for (int i = 1; i <= n; ++i) {
    if (i == b) continue;
    int expo = a + i - 1 + (i < b ? shift_lt : shift_gt);
    int coeff = expo % 2 == 0 ? 1 : -1;
    CellSet two = {std::min(i, b), std::max(i, b)};
    CellSet rest_rows = wide ? range_without(n, {i}) : range_without(n, {i, b});
    add("summand i=" + std::to_string(i), -coeff, i, det(ring, two, {a, a + 1}),
        det(ring, rest_rows, range_without(m, {a, a + 1})));
  }
  return out;
}

Poly residual(const std::vector<Product>& terms) {
  Poly sum(terms.front().q.ring(), kQQ);
  for (const auto& t : terms) sum = sum.add_mul(Rational(t.e), Monomial(), t.q);
  return sum;
}

nlohmann::json terms_json(const Poly& f, std::size_t limit = 8) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t k = 0; k < f.size() && k < limit; ++k) {
    const auto& t = f.terms()[k];
    out.push_back(t.coeff.to_string() + "*" + t.mono.to_string(f.ring()));
  }
  return out;
}

VerificationReport verify_identity(bool wide, int n, int a, int b) {
  std::string tag = wide ? "eq2" : "eq1";
  VerificationReport report(tag + " n=" + std::to_string(n) + " a=" + std::to_string(a) + " b=" + std::to_string(b));
  const int printed_gt = wide ? 1 : 0;
  Poly r = residual(identity(wide, n, a, b, 0, printed_gt));
  if (r.is_zero()) {
    report.add("expansion of both sides agrees", true, "printed signs confirmed");
    return report;
  }
  nlohmann::json witness{{"difference_terms", terms_json(r)}, {"difference_size", r.size()}};
  std::string detail = "sides differ in " + std::to_string(r.size()) + " terms";
  for (int lt = 0; lt < 2; ++lt)
    for (int gt = 0; gt < 2; ++gt) {
      if (lt == 0 && gt == printed_gt) continue;
      if (residual(identity(wide, n, a, b, lt, gt)).is_zero()) {
        witness["corrected_sign_i_lt_b"] = "(-1)^(a+i-1" + std::string(lt ? "+1" : "") + ")";
        witness["corrected_sign_i_gt_b"] = "(-1)^(a+i-1" + std::string(gt ? "+1" : "") + ")";
        detail += "; holds with corrected signs";
      }
    }
  report.add("expansion of both sides agrees", false, detail, witness);
  return report;
}

}  // namespace

VerificationReport verify_eq1(int n, int a, int b) {
  if (n < 2 || a < 1 || a >= n || b < 1 || b > n || b == a)
    throw InvalidArgument("eq1 needs 1 <= a < n, b in [n], b != a; got n=" + std::to_string(n) +
                          " a=" + std::to_string(a) + " b=" + std::to_string(b));
  return verify_identity(false, n, a, b);
}

VerificationReport verify_eq2(int n, int a, int b) {
  if (n < 2 || a < 1 || a > n || b < 1 || b > n)
    throw InvalidArgument("eq2 needs 1 <= a <= n, b in [n]; got n=" + std::to_string(n) + " a=" + std::to_string(a) +
                          " b=" + std::to_string(b));
  return verify_identity(true, n, a, b);
}

// -------------------------------------------------------------------- tables

std::string case_name(Case c) {
  switch (c) {
    case Case::i: return "3.i";
    case Case::ii: return "3.ii";
    case Case::iii: return "3.iii";
    case Case::iv: return "3.iv";
  }
  return "?";
}

void CaseSpec::validate() const {
  bool ok = n >= 2 && a >= 1 && b >= 1 && b <= n;
  switch (id) {
    case Case::i: ok = ok && a < b; break;
    case Case::ii: ok = ok && b <= a && a <= n - 1; break;
    case Case::iii: ok = ok && a < b; break;
    case Case::iv: ok = ok && b < a && a <= n; break;
  }
  if (!ok) throw InvalidArgument("case constraints violated: " + to_string());
}

std::string CaseSpec::to_string() const {
  return case_name(id) + " n=" + std::to_string(n) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
}

std::vector<CaseSpec> cases_for(Case id, int n) {
  std::vector<CaseSpec> out;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      CaseSpec c{id, n, a, b};
      try {
        c.validate();
        out.push_back(c);
      } catch (const InvalidArgument&) {
      }
    }
  return out;
}

std::string TableRow::id() const {
  static const char* names[] = {"lhs p_{b,a}", "lhs p_{b,a+1}", "[ib|a,a+1]", "[bi|a,a+1]", "second", "S"};
  std::string s = "T" + std::to_string(table) + " " + names[static_cast<int>(part)];
  if (!condition.empty()) s += " (" + condition + ")";
  if (!erratum.empty()) s += " [erratum " + erratum + "]";
  return s;
}

VerificationReport verify_table(const CaseSpec& spec, std::set<std::string>* hits) {
  spec.validate();
  VerificationReport report("table " + spec.to_string());
  const bool wide = spec.id == Case::iii || spec.id == Case::iv;
  const int n = spec.n, a = spec.a, b = spec.b;
  auto terms = identity(wide, n, a, b, 0, wide ? 1 : 0);
  const Ring ring = terms.front().q.ring();
  if (!residual(terms).is_zero()) {
    report.add("identity holds", false, "the expanded identity does not vanish");
    return report;
  }

  const int g1_index = spec.id == Case::ii ? a + 1 : a;
  const bool g2_from_a1 = spec.id == Case::i || spec.id == Case::iii;
  const Product* t1 = nullptr;
  const Product* t2 = g2_from_a1 ? &terms[1] : &terms[0];
  for (const auto& t : terms)
    if (t.i == g1_index) t1 = &t;
  if (!t1) throw InvalidArgument("no g1 summand for " + spec.to_string());

  const Poly& g1 = t1->f1;
  const Poly& h = t1->f2;
  const Poly& p = t2->f1;
  const Poly& g2 = t2->f2;
  Poly in_h = Poly::monomial(ring, kQQ, Rational(1), h.leading_monomial());
  Poly A = in_h * g1;
  Poly B = p * g2;
  Poly S = A - B;

  Monomial L = lcm(g1.leading_monomial(), g2.leading_monomial());
  bool lcm_ok = A.leading_monomial() == L && B.leading_monomial() == L && A.leading_coeff() == B.leading_coeff();
  report.add("in(h) in(g1) = p in(g2) = lcm", lcm_ok, L.to_string(ring));
  report.add("S equals the S-polynomial of g1, g2", S == s_polynomial(g1, g2));
  report.add("g1 h and p g2 carry opposite signs in the identity", t1->e == -t2->e,
             "e(g1 h)=" + std::to_string(t1->e) + " e(p g2)=" + std::to_string(t2->e));
  if (S.is_zero()) {
    report.add("S is nonzero", false);
    return report;
  }
  const Monomial& in_S = S.leading_monomial();
  auto contains = [](const Poly& f, const Monomial& m) {
    return std::any_of(f.terms().begin(), f.terms().end(), [&](const auto& t) { return t.mono == m; });
  };
  const bool from1 = contains(A, in_S), from2 = contains(B, in_S);
  const int tag = from1 && !from2 ? 1 : from2 && !from1 ? 2 : 0;

  // S = -e1 * sum_{others} e_k Q_k - (h - in h) g1
  {
    const int eps = t1->e;
    Poly rep(ring, kQQ);
    bool order_ok = true;
    nlohmann::json offenders = nlohmann::json::array();
    auto take = [&](const Poly& piece, const std::string& name) {
      if (piece.is_zero()) return;
      rep += piece;
      if (in_S < piece.leading_monomial()) {
        order_ok = false;
        offenders.push_back({{"part", name}, {"initial", piece.leading_monomial().to_string(ring)}});
      }
    };
    for (const auto& t : terms)
      if (&t != t1 && &t != t2) take(t.q.scale(Rational(-eps * t.e)), t.name);
    take(-((h - in_h) * g1), "(h - in h) g1");
    report.add("S equals the rearranged identity", rep == S);
    report.add("every other term is at most in(S)", order_ok, "in(S) = " + in_S.to_string(ring),
               order_ok ? nlohmann::json(nullptr) : offenders);
  }

  for (const auto& row : table_rows()) {
    if (row.table != static_cast<int>(spec.id)) continue;
    auto cond = parse_condition(row.condition);
    auto segs = parse_formula(row.formula);
    auto compare = [&](const Env& env, const Monomial& actual, const std::string& suffix, int want_tag) {
      auto expected = instantiate(segs, env, ring);
      std::string name = row.id() + suffix;
      if (!row.superseded_when.empty() && holds(parse_condition(row.superseded_when), env)) {
        std::string printed = std::holds_alternative<Monomial>(expected)
                                  ? std::get<Monomial>(expected).to_string(ring)
                                  : std::get<std::string>(expected);
        report.note(name + ": printed formula gives " + printed + ", computed " + actual.to_string(ring) +
                    "; erratum rows asserted instead");
        return;
      }
      if (hits) hits->insert(row.id());
      if (auto* err = std::get_if<std::string>(&expected)) {
        report.add(name, false, "formula malformed here: " + *err, {{"actual", actual.to_string(ring)}});
        return;
      }
      const Monomial& m = std::get<Monomial>(expected);
      bool ok = m == actual;
      std::string detail = actual.to_string(ring);
      if (!ok) detail = "table " + m.to_string(ring) + ", computed " + actual.to_string(ring);
      if (want_tag) {
        ok = ok && want_tag == tag;
        detail += "; tag table (" + std::to_string(want_tag) + "), computed (" + std::to_string(tag) + ")";
      }
      report.add(name, ok, detail);
    };
    Env env{n, a, b, std::nullopt};
    switch (row.part) {
      case Part::lhs_a:
      case Part::lhs_a1:
        if (holds(cond, env)) compare(env, terms[row.part == Part::lhs_a ? 0 : 1].q.leading_monomial(), "", 0);
        break;
      case Part::sum_ib:
      case Part::sum_bi:
        for (const auto& t : terms) {
          if (t.i == 0 || (row.part == Part::sum_ib) != (t.i < b)) continue;
          Env ei = env;
          ei.i = t.i;
          if (holds(cond, ei)) compare(ei, t.q.leading_monomial(), " i=" + std::to_string(t.i), 0);
        }
        break;
      case Part::second:
        if (uses_i(cond)) throw InvalidArgument("second-term row conditioned on i: " + row.id());
        if (holds(cond, env)) {
          if (t1->q.size() < 2)
            report.add(row.id(), false, "g1 h has a single term");
          else
            compare(env, t1->q.terms()[1].mono, "", 0);
        }
        break;
      case Part::s_poly:
        if (holds(cond, env)) compare(env, in_S, "", row.tag);
        break;
    }
  }
  report.note("in(S) tag (" + std::to_string(tag) + ")");
  return report;
}

VerificationReport verify_appendix(int eq_lo, int eq_hi, int tab_lo, int tab_hi) {
  VerificationReport report("appendix");
  struct Job {
    int kind;  // 0 eq1, 1 eq2, 2 table
    int n, a, b;
    CaseSpec spec;
  };
  std::vector<Job> jobs;
  for (int n = eq_lo; n <= eq_hi; ++n)
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        if (a < n && b != a) jobs.push_back({0, n, a, b, {}});
        jobs.push_back({1, n, a, b, {}});
      }
  for (int n = tab_lo; n <= tab_hi; ++n)
    for (Case c : {Case::i, Case::ii, Case::iii, Case::iv})
      for (const auto& s : cases_for(c, n)) jobs.push_back({2, n, s.a, s.b, s});

  std::vector<VerificationReport> results(jobs.size());
  std::vector<std::set<std::string>> hit_sets(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t k) {
    const Job& j = jobs[k];
    results[k] = j.kind == 0   ? verify_eq1(j.n, j.a, j.b)
                 : j.kind == 1 ? verify_eq2(j.n, j.a, j.b)
                               : verify_table(j.spec, &hit_sets[k]);
  });
  std::set<std::string> hits;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    hits.insert(hit_sets[k].begin(), hit_sets[k].end());
    const auto& r = results[k];
    std::string detail;
    nlohmann::json witness;
    std::size_t failed = 0;
    for (const auto& c : r.checks)
      if (!c.passed) {
        if (failed++ == 0) {
          detail = c.name + ": " + c.detail;
          witness = c.witness;
        }
      }
    if (failed > 1) detail += " (+" + std::to_string(failed - 1) + " more)";
    report.add(r.target, failed == 0, detail, witness);
    for (const auto& note : r.notes)
      if (note.find("erratum") != std::string::npos) report.note(r.target + ": " + note);
  }
  std::vector<std::string> missing;
  for (const auto& row : table_rows())
    if (!hits.count(row.id())) missing.push_back(row.id());
  report.add("branch coverage of table rows", missing.empty(),
             std::to_string(table_rows().size() - missing.size()) + "/" + std::to_string(table_rows().size()) +
                 " rows exercised",
             missing.empty() ? nlohmann::json(nullptr) : nlohmann::json(missing));
  return report;
}

// -------------------------------------------------------------- localization

VerificationReport check_nzd(const Grid& grid, int d, int j, bool verify_basis) {
  const int k = grid.k(), l = grid.l();
  if (!main_regime(d, k, l, 2, l)) throw RegimeError("the non-zerodivisor condition needs 2 <= k <= l <= d");
  if (j < 1 || j > l - 1)
    throw RegimeError("j must lie in [1, l-1] = [1, " + std::to_string(l - 1) + "], got " + std::to_string(j));
  const int col = (j - 1) * k + 1;
  VerificationReport report("non-zerodivisor k=" + std::to_string(k) + " l=" + std::to_string(l) + " d=" +
                            std::to_string(d) + " j=" + std::to_string(j));
  auto I0 = ideal_I0_minimal<Rational>(grid, d, 2, l, kQQ);
  if (verify_basis) report.absorb(is_groebner<Rational>(I0.generators(), false), "G(I_0): ");
  const int v = I0.ring().index({d, col});
  nlohmann::json offenders = nlohmann::json::array();
  for (std::size_t g = 0; g < I0.size(); ++g)
    if (I0.generators()[g].leading_monomial().exponent(v) > 0)
      offenders.push_back(I0.generator_labels()[g]);
  report.add("p" + std::to_string(d) + "_" + std::to_string(col) + " divides no leading term of G(I_0)",
             offenders.empty(), std::to_string(I0.size()) + " generators",
             offenders.empty() ? nlohmann::json(nullptr) : offenders);
  return report;
}

namespace {

using SpecKey = std::pair<CellSet, CellSet>;  // (cols, rows)

CellSet set_union(const CellSet& x, const CellSet& y) {
  CellSet out;
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

bool spec_less(const MinorSpec& x, const MinorSpec& y) {
  if (x.cols.size() != y.cols.size()) return x.cols.size() < y.cols.size();
  if (x.cols != y.cols) return x.cols < y.cols;
  return x.rows < y.rows;
}

std::vector<MinorSpec> normalized(std::vector<MinorSpec> v) {
  std::sort(v.begin(), v.end(), spec_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::string spec_label(const MinorSpec& s) {
  return "[" + cells_label(s.rows) + "|" + cells_label(s.cols) + "]";
}

nlohmann::json difference(const std::vector<MinorSpec>& x, const std::vector<MinorSpec>& y) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : x)
    if (!std::binary_search(y.begin(), y.end(), s, spec_less)) {
      out.push_back(spec_label(s));
      if (out.size() >= 10) break;
    }
  return out;
}

void compare_sets(VerificationReport& report, const std::string& name, const std::vector<MinorSpec>& got,
                  const std::vector<MinorSpec>& want) {
  bool ok = got == want;
  nlohmann::json w = nullptr;
  if (!ok) w = {{"unexpected", difference(got, want)}, {"missing", difference(want, got)}};
  report.add(name, ok, std::to_string(got.size()) + " generators, expected " + std::to_string(want.size()), w);
}

CellSet iota(int lo, int hi) {
  CellSet out;
  for (int x = lo; x <= hi; ++x) out.push_back(x);
  return out;
}

// p_{d,1} divides no leading term of the listed minors
bool first_variable_free(const Ring& ring, const std::vector<MinorSpec>& G) {
  const int v = ring.index({ring.d, 1});
  for (const auto& s : G)
    if (minor<Rational>(ring, kQQ, s).leading_monomial().exponent(v) > 0) return false;
  return true;
}

}  // namespace

std::vector<MinorSpec> localize(const Ring& ring, const std::vector<MinorSpec>& G, const CellSet& rows,
                                const CellSet& cols) {
  CellSet I = rows, Jc = cols;
  std::sort(I.begin(), I.end());
  std::sort(Jc.begin(), Jc.end());
  MinorSpec::make(ring, I, Jc);  // validates the localizing minor
  std::set<SpecKey> present;
  for (const auto& g : G) present.insert({g.cols, g.rows});

  for (const auto& g : G) {
    for (const auto& alpha : subsets(set_union(g.rows, I), static_cast<int>(g.cols.size())))
      if (!present.count({g.cols, alpha}))
        throw InvalidArgument("closure hypothesis fails: " + spec_label(g) + " is present but " +
                              spec_label({alpha, g.cols}) + " is not");
  }

  std::vector<MinorSpec> out;
  for (const auto& g : G) {
    CellSet rest;
    std::set_difference(g.cols.begin(), g.cols.end(), Jc.begin(), Jc.end(), std::back_inserter(rest));
    if (rest.size() == g.cols.size()) {
      out.push_back(g);
      continue;
    }
    if (rest.empty()) throw InvalidArgument("generator " + spec_label(g) + " lies inside the localized columns");
    for (auto& alpha : subsets(set_union(g.rows, I), static_cast<int>(rest.size())))
      out.push_back({std::move(alpha), rest});
  }
  out = normalized(std::move(out));

  std::map<int, int> column_vars;
  for (const auto& s : out)
    if (s.cols.size() == 1) ++column_vars[s.cols[0]];
  std::set<int> full;
  for (auto [c, count] : column_vars)
    if (count == ring.d) full.insert(c);
  std::vector<MinorSpec> kept;
  for (auto& s : out) {
    bool redundant = s.cols.size() > 1 && std::any_of(s.cols.begin(), s.cols.end(), [&](int c) { return full.count(c); });
    if (!redundant) kept.push_back(std::move(s));
  }
  return kept;
}

std::vector<MinorSpec> transversal_specs(const Grid& grid, int d, int t) {
  const Ring ring{d, grid.size()};
  std::vector<MinorSpec> out;
  auto add_all_rows = [&](const CellSet& B) {
    if (static_cast<int>(B.size()) > d) return;
    for (auto& A : subsets(iota(1, d), static_cast<int>(B.size()))) out.push_back(MinorSpec::make(ring, A, B));
  };
  for (int j = 1; j <= grid.l(); ++j)
    for (const auto& B : subsets(grid.column(j), 2)) add_all_rows(B);
  for (const auto& B : subsets(iota(1, grid.size()), t)) {
    std::vector<int> seen(grid.l() + 1, 0);
    bool once = true;
    for (int c : B) once = once && !seen[grid.col_of(c)]++;
    if (once) add_all_rows(B);
  }
  return normalized(std::move(out));
}

VerificationReport verify_localization_step(int k, int l, int d) {
  if (k < 2 || l < 2 || l > d) throw RegimeError("localization step needs k >= 2 and 2 <= l <= d");
  VerificationReport report("localization step k=" + std::to_string(k) + " l=" + std::to_string(l) + " d=" +
                            std::to_string(d));
  Grid grid(k, l);
  const Ring ring{d, grid.size()};
  auto G = transversal_specs(grid, d, l);
  report.add("p_{d,1} divides no leading term", first_variable_free(ring, G));
  auto J = normalized(localize(ring, G, {d}, {1}));

  // J as described directly: the rest of block C_1 as variables, 2-minors of
  // the other blocks, and (l-1)-minors meeting each of C_2..C_l once
  std::vector<MinorSpec> want;
  for (int c = 2; c <= k; ++c)
    for (int x = 1; x <= d; ++x) want.push_back(MinorSpec::make(ring, {x}, {c}));
  for (int j = 2; j <= l; ++j)
    for (const auto& B : subsets(grid.column(j), 2))
      for (auto& A : subsets(iota(1, d), 2)) want.push_back(MinorSpec::make(ring, A, B));
  for (const auto& B : subsets(iota(k + 1, grid.size()), l - 1)) {
    std::vector<int> seen(l + 1, 0);
    bool once = true;
    for (int c : B) once = once && !seen[grid.col_of(c)]++;
    if (!once) continue;
    for (auto& A : subsets(iota(1, d), l - 1)) want.push_back(MinorSpec::make(ring, A, B));
  }
  want = normalized(std::move(want));
  compare_sets(report, "localization at p_{d,1} gives J", J, want);

  // strip the variables of C_1 and relabel the remaining columns
  Grid smaller(k, l - 1);
  const Ring small_ring{d, smaller.size()};
  std::vector<MinorSpec> reduced;
  for (const auto& s : J) {
    if (s.cols.front() <= k) {
      if (s.cols.size() != 1) report.add("only variables touch C_1", false, spec_label(s));
      continue;
    }
    CellSet shifted = s.cols;
    for (int& c : shifted) c -= k;
    reduced.push_back(MinorSpec::make(small_ring, s.rows, shifted));
  }
  reduced = normalized(std::move(reduced));
  compare_sets(report, "J without the variable block is G(I_0) at l-1, t-1", reduced,
               transversal_specs(smaller, d, l - 1));
  return report;
}

VerificationReport verify_localization_chain(int k, int l, int d) {
  if (!main_regime(d, k, l, 2, l)) throw RegimeError("the induction starts in the main regime 2 <= k <= l <= d");
  VerificationReport report("localization chain k=" + std::to_string(k) + " l=" + std::to_string(l) + " d=" +
                            std::to_string(d));
  for (int cur = l; cur >= 3; --cur)
    report.absorb(verify_localization_step(k, cur, d), "l=" + std::to_string(cur) + ": ");

  // base case: every 2-minor of a d x 2k matrix
  Grid base(k, 2);
  const Ring ring{d, base.size()};
  auto G = transversal_specs(base, d, 2);
  std::vector<MinorSpec> all;
  for (const auto& B : subsets(iota(1, base.size()), 2))
    for (auto& A : subsets(iota(1, d), 2)) all.push_back(MinorSpec::make(ring, A, B));
  compare_sets(report, "l=2: the minors are all 2-minors of the d x 2k matrix", G, normalized(std::move(all)));
  report.add("l=2: p_{d,1} divides no leading term", first_variable_free(ring, G));
  auto last = normalized(localize(ring, G, {d}, {1}));
  std::vector<MinorSpec> vars;
  for (int c = 2; c <= base.size(); ++c)
    for (int x = 1; x <= d; ++x) vars.push_back(MinorSpec::make(ring, {x}, {c}));
  compare_sets(report, "l=2: localizing at p_{d,1} leaves the variables of columns 2..2k", last,
               normalized(std::move(vars)));
  return report;
}

}  // namespace cia
