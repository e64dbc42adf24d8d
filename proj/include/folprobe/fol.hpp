#pragma once

// Formulas of the existential-conjunctive fragment: chains of leading
// existential quantifiers over conjunctions of (possibly negated) atoms.
// Two concrete syntaxes are accepted and printed:
//   unicode:  ∃x ∃y (Car(x) ∧ red(x) ∧ ¬blue(y))
//   ascii:    exists x. exists y. (Car(x) & red(x) & ~blue(y))

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

namespace folprobe::fol {

// ---------------------------------------------------------------------------
// Names

// Matching fold: case-insensitive, hyphens and underscores stripped.
// "Infrontof", "in-front-of" and "in_front_of" all fold to "infrontof".
inline std::string fold_name(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '-' || c == '_') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

inline bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

inline bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '-' || c == '_';
}

// Canonical variable supply: x, y, z, x1, x2, ...
inline std::string nth_variable_name(std::size_t n) {
  static const char* base[] = {"x", "y", "z"};
  if (n < 3) return base[n];
  return "x" + std::to_string(n - 2);
}

// ---------------------------------------------------------------------------
// Terms, atoms, literals

enum class TermKind { Variable, Constant };

struct Term {
  TermKind kind = TermKind::Variable;
  std::string name;
  // Constants spelled with a leading capital ("Car") are candidates for the
  // noun-as-argument repair; genuine constants like "they" are not.
  bool noun_like = false;

  static Term variable(std::string n) { return Term{TermKind::Variable, std::move(n), false}; }
  static Term constant(std::string n) {
    bool noun = !n.empty() && std::isupper(static_cast<unsigned char>(n.front())) != 0;
    return Term{TermKind::Constant, std::move(n), noun};
  }

  friend bool operator==(const Term& a, const Term& b) {
    return a.kind == b.kind && a.name == b.name;
  }
};

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  friend bool operator==(const Atom&, const Atom&) = default;
};

struct Literal {
  Atom atom;
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

// ---------------------------------------------------------------------------
// Formula tree

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Exists {
  std::string var;
  FormulaPtr body;
};

struct And {
  FormulaPtr left;
  FormulaPtr right;
};

struct Not {
  FormulaPtr body;
};

class Formula {
 public:
  using Node = std::variant<Atom, Exists, And, Not>;

  explicit Formula(Node n) : node_(std::move(n)) {}

  const Node& node() const { return node_; }

  static FormulaPtr atom(Atom a) { return std::make_shared<Formula>(Node{std::move(a)}); }
  static FormulaPtr exists(std::string var, FormulaPtr body) {
    return std::make_shared<Formula>(Node{Exists{std::move(var), std::move(body)}});
  }
  static FormulaPtr conj(FormulaPtr l, FormulaPtr r) {
    return std::make_shared<Formula>(Node{And{std::move(l), std::move(r)}});
  }
  static FormulaPtr negate(FormulaPtr b) {
    return std::make_shared<Formula>(Node{Not{std::move(b)}});
  }

 private:
  Node node_;
};

inline bool structurally_equal(const Formula& a, const Formula& b) {
  const auto& na = a.node();
  const auto& nb = b.node();
  if (na.index() != nb.index()) return false;
  if (const auto* at = std::get_if<Atom>(&na)) return *at == std::get<Atom>(nb);
  if (const auto* ex = std::get_if<Exists>(&na)) {
    const auto& eb = std::get<Exists>(nb);
    return ex->var == eb.var && structurally_equal(*ex->body, *eb.body);
  }
  if (const auto* an = std::get_if<And>(&na)) {
    const auto& ab = std::get<And>(nb);
    return structurally_equal(*an->left, *ab.left) && structurally_equal(*an->right, *ab.right);
  }
  const auto& nt = std::get<Not>(na);
  return structurally_equal(*nt.body, *std::get<Not>(nb).body);
}

inline bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b) {
  return a && b && structurally_equal(*a, *b);
}

// ---------------------------------------------------------------------------
// Rendering

enum class Style { Unicode, Ascii };

namespace detail {

inline void render_term(const Term& t, std::string& out) { out += t.name; }

inline void render_atom(const Atom& a, std::string& out) {
  out += a.predicate;
  out.push_back('(');
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) out.push_back(',');
    render_term(a.args[i], out);
  }
  out.push_back(')');
}

// Within conjunctions the left operand keeps the flat chain (parse is
// left-associative); anything that would reassociate gets parenthesized.
inline void render_body(const Formula& f, Style s, bool parenthesize, std::string& out);

inline void render_full(const Formula& f, Style s, std::string& out);

inline void render_body(const Formula& f, Style s, bool parenthesize, std::string& out) {
  const auto& n = f.node();
  if (const auto* a = std::get_if<Atom>(&n)) {
    render_atom(*a, out);
    return;
  }
  if (const auto* nt = std::get_if<Not>(&n)) {
    out += (s == Style::Unicode) ? "¬" : "~";
    bool inner_parens = std::holds_alternative<And>(nt->body->node()) ||
                        std::holds_alternative<Exists>(nt->body->node());
    render_body(*nt->body, s, inner_parens, out);
    return;
  }
  if (const auto* an = std::get_if<And>(&n)) {
    if (parenthesize) out.push_back('(');
    render_body(*an->left, s, std::holds_alternative<Exists>(an->left->node()), out);
    out += (s == Style::Unicode) ? " ∧ " : " & ";
    bool right_parens = std::holds_alternative<And>(an->right->node()) ||
                        std::holds_alternative<Exists>(an->right->node());
    render_body(*an->right, s, right_parens, out);
    if (parenthesize) out.push_back(')');
    return;
  }
  // Quantifier in body position: not parseable, but still printable.
  out.push_back('(');
  render_full(f, s, out);
  out.push_back(')');
}

inline void render_full(const Formula& f, Style s, std::string& out) {
  const Formula* cur = &f;
  std::vector<const std::string*> quants;
  while (const auto* ex = std::get_if<Exists>(&cur->node())) {
    quants.push_back(&ex->var);
    cur = ex->body.get();
  }
  for (const auto* v : quants) {
    if (s == Style::Unicode) {
      out += "∃";
      out += *v;
      out.push_back(' ');
    } else {
      out += "exists ";
      out += *v;
      out += ". ";
    }
  }
  bool wrap = !quants.empty() && !std::holds_alternative<Atom>(cur->node());
  render_body(*cur, s, wrap, out);
}

}  // namespace detail

inline std::string render_fol(const Formula& f, Style style = Style::Unicode) {
  std::string out;
  detail::render_full(f, style, out);
  return out;
}

inline std::string render_fol(const FormulaPtr& f, Style style = Style::Unicode) {
  return render_fol(*f, style);
}

// ---------------------------------------------------------------------------
// Parsing

struct SyntaxError : std::runtime_error {
  std::size_t offset;
  std::vector<std::string> expected;

  SyntaxError(std::size_t off, std::vector<std::string> exp)
      : std::runtime_error(format(off, exp)), offset(off), expected(std::move(exp)) {}

  static std::string format(std::size_t off, const std::vector<std::string>& exp) {
    std::ostringstream os;
    os << "syntax error at byte " << off << ": expected ";
    for (std::size_t i = 0; i < exp.size(); ++i) {
      if (i) os << (i + 1 == exp.size() ? " or " : ", ");
      os << exp[i];
    }
    return os.str();
  }
};

namespace detail {

enum class Tok { Exists, Dot, LParen, RParen, Comma, AndOp, NotOp, Ident, End };

struct Lexer {
  std::string_view src;
  std::size_t pos = 0;
  Tok tok = Tok::End;
  std::string_view text;   // for Ident
  std::size_t tok_off = 0;

  explicit Lexer(std::string_view s) : src(s) { advance(); }

  bool starts_with(std::string_view p) const { return src.substr(pos, p.size()) == p; }

  void advance() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    tok_off = pos;
    if (pos >= src.size()) {
      tok = Tok::End;
      return;
    }
    if (starts_with("∃")) { tok = Tok::Exists; pos += 3; return; }
    if (starts_with("∧")) { tok = Tok::AndOp; pos += 3; return; }
    if (starts_with("¬")) { tok = Tok::NotOp; pos += 2; return; }
    char c = src[pos];
    switch (c) {
      case '.': tok = Tok::Dot; ++pos; return;
      case '(': tok = Tok::LParen; ++pos; return;
      case ')': tok = Tok::RParen; ++pos; return;
      case ',': tok = Tok::Comma; ++pos; return;
      case '&': tok = Tok::AndOp; ++pos; return;
      case '~': tok = Tok::NotOp; ++pos; return;
      default: break;
    }
    if (is_ident_start(c)) {
      std::size_t start = pos;
      while (pos < src.size() && is_ident_char(src[pos])) ++pos;
      text = src.substr(start, pos - start);
      if (text == "exists") tok = Tok::Exists;
      else if (text == "and" || text == "AND") tok = Tok::AndOp;
      else if (text == "not") tok = Tok::NotOp;
      else tok = Tok::Ident;
      return;
    }
    throw SyntaxError(pos, {"a quantifier", "a predicate", "'('"});
  }
};

class Parser {
 public:
  explicit Parser(std::string_view s) : lx_(s) {}

  FormulaPtr parse() {
    std::vector<std::string> quants;
    while (lx_.tok == Tok::Exists) {
      lx_.advance();
      if (lx_.tok != Tok::Ident) fail({"a variable name"});
      quants.emplace_back(lx_.text);
      bound_.insert(quants.back());
      lx_.advance();
      if (lx_.tok == Tok::Dot) lx_.advance();
    }
    FormulaPtr body = parse_body();
    if (lx_.tok != Tok::End) fail({"end of input", "'∧'"});
    for (auto it = quants.rbegin(); it != quants.rend(); ++it)
      body = Formula::exists(*it, std::move(body));
    return body;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected) {
    throw SyntaxError(lx_.tok_off, std::move(expected));
  }

  FormulaPtr parse_body() {
    FormulaPtr lhs = parse_unary();
    while (lx_.tok == Tok::AndOp) {
      lx_.advance();
      lhs = Formula::conj(std::move(lhs), parse_unary());
    }
    return lhs;
  }

  FormulaPtr parse_unary() {
    if (lx_.tok == Tok::NotOp) {
      lx_.advance();
      return Formula::negate(parse_unary());
    }
    if (lx_.tok == Tok::LParen) {
      lx_.advance();
      FormulaPtr inner = parse_body();
      if (lx_.tok != Tok::RParen) fail({"')'"});
      lx_.advance();
      return inner;
    }
    if (lx_.tok == Tok::Ident) return parse_atom();
    fail({"a predicate", "'('", "'¬'"});
  }

  FormulaPtr parse_atom() {
    Atom a;
    a.predicate.assign(lx_.text);
    lx_.advance();
    if (lx_.tok != Tok::LParen) fail({"'('"});
    lx_.advance();
    a.args.push_back(parse_term());
    while (lx_.tok == Tok::Comma) {
      lx_.advance();
      a.args.push_back(parse_term());
    }
    if (lx_.tok != Tok::RParen) fail({"')'", "','"});
    lx_.advance();
    return Formula::atom(std::move(a));
  }

  Term parse_term() {
    if (lx_.tok != Tok::Ident) fail({"a term"});
    std::string name(lx_.text);
    lx_.advance();
    if (bound_.count(name)) return Term::variable(std::move(name));
    return Term::constant(std::move(name));
  }

  Lexer lx_;
  std::set<std::string, std::less<>> bound_;
};

}  // namespace detail

// Throws SyntaxError on malformed input; any byte sequence is safe to pass.
inline FormulaPtr parse_fol(std::string_view text) {
  detail::Parser p(text);
  return p.parse();
}

struct ParseOutcome {
  FormulaPtr formula;
  std::optional<SyntaxError> error;

  bool ok() const { return formula != nullptr; }
};

inline ParseOutcome try_parse_fol(std::string_view text) {
  try {
    return ParseOutcome{parse_fol(text), std::nullopt};
  } catch (const SyntaxError& e) {
    return ParseOutcome{nullptr, e};
  }
}

// ---------------------------------------------------------------------------
// Canonical (prenex conjunctive) form

enum class DefectKind { FreeVariable, NonPrenex, NonConjunctive };

struct Defect {
  DefectKind kind;
  std::string detail;

  friend bool operator==(const Defect&, const Defect&) = default;
};

inline const char* defect_kind_name(DefectKind k) {
  switch (k) {
    case DefectKind::FreeVariable: return "free-variable";
    case DefectKind::NonPrenex: return "non-prenex";
    case DefectKind::NonConjunctive: return "non-conjunctive";
  }
  return "?";
}

namespace detail {

struct LiteralKey {
  std::string folded;
  std::string pred;
  std::size_t arity;
  std::vector<std::pair<int, std::string>> args;
  bool negated;

  auto tie() const { return std::tie(folded, pred, arity, args, negated); }
  friend bool operator<(const LiteralKey& a, const LiteralKey& b) { return a.tie() < b.tie(); }
};

inline LiteralKey literal_key(const Literal& l) {
  LiteralKey k;
  k.folded = fold_name(l.atom.predicate);
  k.pred = l.atom.predicate;
  k.arity = l.atom.args.size();
  for (const Term& t : l.atom.args)
    k.args.emplace_back(t.kind == TermKind::Variable ? 0 : 1, t.name);
  k.negated = l.negated;
  return k;
}

}  // namespace detail

struct PrenexConjunction {
  std::vector<std::string> vars;     // binder order: first occurrence in the body
  std::vector<Literal> literals;     // canonically sorted
  std::vector<Defect> defects;

  bool defect_free() const { return defects.empty(); }

  friend bool operator==(const PrenexConjunction&, const PrenexConjunction&) = default;

  FormulaPtr to_formula() const {
    FormulaPtr body;
    for (const Literal& l : literals) {
      FormulaPtr unit = Formula::atom(l.atom);
      if (l.negated) unit = Formula::negate(std::move(unit));
      body = body ? Formula::conj(std::move(body), std::move(unit)) : std::move(unit);
    }
    if (!body) body = Formula::atom(Atom{"true", {Term::constant("unit")}});
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
      body = Formula::exists(*it, std::move(body));
    return body;
  }

  std::string render(Style style = Style::Unicode) const { return render_fol(to_formula(), style); }
};

inline PrenexConjunction canonicalize(const Formula& f) {
  PrenexConjunction pc;
  std::set<std::string> binders;
  auto add_binder = [&](const std::string& v) {
    if (binders.insert(v).second) pc.vars.push_back(v);
  };

  const Formula* cur = &f;
  while (const auto* ex = std::get_if<Exists>(&cur->node())) {
    add_binder(ex->var);
    cur = ex->body.get();
  }

  std::vector<Literal> source_order;
  auto walk = [&](auto&& self, const Formula& node, int neg_depth) -> void {
    const auto& n = node.node();
    if (const auto* a = std::get_if<Atom>(&n)) {
      source_order.push_back(Literal{*a, neg_depth % 2 == 1});
      return;
    }
    if (const auto* an = std::get_if<And>(&n)) {
      self(self, *an->left, neg_depth);
      self(self, *an->right, neg_depth);
      return;
    }
    if (const auto* nt = std::get_if<Not>(&n)) {
      const auto& inner = nt->body->node();
      if (!std::holds_alternative<Atom>(inner) && !std::holds_alternative<Not>(inner))
        pc.defects.push_back({DefectKind::NonConjunctive, "negation over a non-atom"});
      self(self, *nt->body, neg_depth + 1);
      return;
    }
    const auto& ex = std::get<Exists>(n);
    pc.defects.push_back({DefectKind::NonPrenex, "quantifier not in leading position: " + ex.var});
    add_binder(ex.var);
    self(self, *ex.body, neg_depth);
  };
  walk(walk, *cur, 0);

  // Binder order follows first occurrence in the body, not source order;
  // binders that never occur keep their source position at the end.
  std::vector<std::string> ordered;
  std::set<std::string> seen;
  for (const Literal& l : source_order)
    for (const Term& t : l.atom.args)
      if (t.kind == TermKind::Variable && binders.count(t.name) && seen.insert(t.name).second)
        ordered.push_back(t.name);
  for (const std::string& v : pc.vars)
    if (!seen.count(v)) ordered.push_back(v);
  pc.vars = std::move(ordered);

  std::set<std::string> reported_free;
  for (const Literal& l : source_order)
    for (const Term& t : l.atom.args)
      if (t.kind == TermKind::Variable && !binders.count(t.name) && reported_free.insert(t.name).second)
        pc.defects.push_back({DefectKind::FreeVariable, t.name});

  std::stable_sort(source_order.begin(), source_order.end(), [](const Literal& a, const Literal& b) {
    return detail::literal_key(a) < detail::literal_key(b);
  });
  pc.literals = std::move(source_order);
  return pc;
}

inline PrenexConjunction canonicalize(const FormulaPtr& f) { return canonicalize(*f); }

// ---------------------------------------------------------------------------
// Alpha equivalence

struct TooManyVariables : std::runtime_error {
  explicit TooManyVariables(std::size_t n)
      : std::runtime_error("too many variables for bijection search: " + std::to_string(n)) {}
};

struct DefectiveFormula : std::runtime_error {
  DefectiveFormula() : std::runtime_error("formula has canonicalization defects") {}
};

inline constexpr std::size_t kMaxBijectionVars = 8;

namespace detail {

inline std::vector<LiteralKey> mapped_keys(const PrenexConjunction& pc,
                                           const std::map<std::string, std::string>& rename) {
  std::vector<LiteralKey> keys;
  keys.reserve(pc.literals.size());
  for (const Literal& l : pc.literals) {
    LiteralKey k;
    k.folded = fold_name(l.atom.predicate);
    k.pred = k.folded;  // renamed comparison is fold-only
    k.arity = l.atom.args.size();
    for (const Term& t : l.atom.args) {
      if (t.kind == TermKind::Variable) {
        auto it = rename.find(t.name);
        k.args.emplace_back(0, it == rename.end() ? t.name : it->second);
      } else {
        k.args.emplace_back(1, t.name);
      }
    }
    k.negated = l.negated;
    keys.push_back(std::move(k));
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace detail

// True iff some bijection between the variable lists maps one literal multiset
// onto the other. Predicate names compare under the matching fold; constants
// compare literally. Exhaustive search, capped at kMaxBijectionVars.
inline bool alpha_equivalent(const PrenexConjunction& a, const PrenexConjunction& b) {
  if (!a.defect_free() || !b.defect_free()) throw DefectiveFormula();
  if (a.vars.size() != b.vars.size()) return false;
  if (a.literals.size() != b.literals.size()) return false;
  if (a.vars.size() > kMaxBijectionVars) throw TooManyVariables(a.vars.size());

  const std::vector<detail::LiteralKey> target = detail::mapped_keys(b, {});
  std::vector<std::size_t> perm(b.vars.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::vector<std::size_t> sorted_perm = perm;
  do {
    std::map<std::string, std::string> rename;
    for (std::size_t i = 0; i < perm.size(); ++i) rename[a.vars[i]] = b.vars[perm[i]];
    if (detail::mapped_keys(a, rename) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return a.vars.empty() && detail::mapped_keys(a, {}) == target;
}

// ---------------------------------------------------------------------------
// Match verdicts

enum class MatchPolicy { StrictString, Canonical };

inline const char* policy_name(MatchPolicy p) {
  return p == MatchPolicy::StrictString ? "strict-string" : "canonical";
}

inline std::optional<MatchPolicy> parse_policy(std::string_view s) {
  if (s == "strict-string" || s == "strict") return MatchPolicy::StrictString;
  if (s == "canonical") return MatchPolicy::Canonical;
  return std::nullopt;
}

enum class NoMatchReason {
  None,
  ParseFailure,
  DefectivePredicted,
  DefectiveGold,
  TooManyVariables,
  VariableCountMismatch,
  MissingLiterals,
  ExtraLiterals,
  LiteralMismatch,
  StringMismatch,
};

inline const char* no_match_reason_name(NoMatchReason r) {
  switch (r) {
    case NoMatchReason::None: return "none";
    case NoMatchReason::ParseFailure: return "parse-failure";
    case NoMatchReason::DefectivePredicted: return "defective-predicted";
    case NoMatchReason::DefectiveGold: return "defective-gold";
    case NoMatchReason::TooManyVariables: return "too-many-variables";
    case NoMatchReason::VariableCountMismatch: return "variable-count-mismatch";
    case NoMatchReason::MissingLiterals: return "missing-literals";
    case NoMatchReason::ExtraLiterals: return "extra-literals";
    case NoMatchReason::LiteralMismatch: return "literal-mismatch";
    case NoMatchReason::StringMismatch: return "string-mismatch";
  }
  return "?";
}

struct MatchVerdict {
  bool matched = false;
  NoMatchReason reason = NoMatchReason::None;
  std::vector<Defect> predicted_defects;
  std::vector<Defect> gold_defects;
};

namespace detail {

// Shape multiset: folded predicate + arity + polarity, ignoring arguments.
inline std::map<std::tuple<std::string, std::size_t, bool>, long> literal_shapes(
    const PrenexConjunction& pc) {
  std::map<std::tuple<std::string, std::size_t, bool>, long> shapes;
  for (const Literal& l : pc.literals)
    ++shapes[{fold_name(l.atom.predicate), l.atom.args.size(), l.negated}];
  return shapes;
}

inline NoMatchReason diagnose_mismatch(const PrenexConjunction& predicted,
                                       const PrenexConjunction& gold) {
  auto ps = literal_shapes(predicted);
  auto gs = literal_shapes(gold);
  bool pred_subset = true, gold_subset = true;
  for (const auto& [shape, n] : ps) {
    auto it = gs.find(shape);
    if (it == gs.end() || it->second < n) pred_subset = false;
  }
  for (const auto& [shape, n] : gs) {
    auto it = ps.find(shape);
    if (it == ps.end() || it->second < n) gold_subset = false;
  }
  if (pred_subset && !gold_subset) return NoMatchReason::MissingLiterals;
  if (gold_subset && !pred_subset) return NoMatchReason::ExtraLiterals;
  if (predicted.vars.size() != gold.vars.size()) return NoMatchReason::VariableCountMismatch;
  return NoMatchReason::LiteralMismatch;
}

}  // namespace detail

inline MatchVerdict formulas_match(const Formula& predicted, const Formula& gold,
                                   MatchPolicy policy = MatchPolicy::Canonical) {
  MatchVerdict v;
  PrenexConjunction pp = canonicalize(predicted);
  PrenexConjunction gp = canonicalize(gold);
  v.predicted_defects = pp.defects;
  v.gold_defects = gp.defects;

  if (policy == MatchPolicy::StrictString) {
    if (render_fol(predicted, Style::Unicode) == render_fol(gold, Style::Unicode)) {
      v.matched = true;
    } else {
      v.reason = NoMatchReason::StringMismatch;
    }
    return v;
  }

  if (!gp.defect_free()) {
    v.reason = NoMatchReason::DefectiveGold;
    return v;
  }
  if (!pp.defect_free()) {
    v.reason = NoMatchReason::DefectivePredicted;
    return v;
  }
  try {
    if (alpha_equivalent(pp, gp)) {
      v.matched = true;
    } else {
      v.reason = detail::diagnose_mismatch(pp, gp);
    }
  } catch (const TooManyVariables&) {
    v.reason = NoMatchReason::TooManyVariables;
  }
  return v;
}

inline MatchVerdict formulas_match(const FormulaPtr& predicted, const FormulaPtr& gold,
                                   MatchPolicy policy = MatchPolicy::Canonical) {
  return formulas_match(*predicted, *gold, policy);
}

// Text-level entry point; malformed predictions yield NoMatch(ParseFailure).
inline MatchVerdict match_prediction(std::string_view predicted_text, const Formula& gold,
                                     MatchPolicy policy = MatchPolicy::Canonical) {
  ParseOutcome p = try_parse_fol(predicted_text);
  if (!p.ok()) {
    MatchVerdict v;
    v.reason = NoMatchReason::ParseFailure;
    return v;
  }
  return formulas_match(*p.formula, gold, policy);
}

}  // namespace folprobe::fol
