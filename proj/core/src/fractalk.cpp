#include "fracterm/fractalk.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "fracterm/detail/decode.hpp"
#include "fracterm/error.hpp"
#include "fracterm/rewrite.hpp"
#include "fracterm/semantics.hpp"
#include "fracterm/syntax.hpp"

namespace fracterm::fractalk {

std::string_view to_string(ClaimKind kind) {
  switch (kind) {
    case ClaimKind::has_numerator: return "HasNumerator";
    case ClaimKind::has_denominator: return "HasDenominator";
    case ClaimKind::numerator_parity: return "NumeratorParity";
    case ClaimKind::denominator_parity: return "DenominatorParity";
    case ClaimKind::unique_numerator: return "UniqueNumerator";
    case ClaimKind::equals: return "Equals";
    case ClaimKind::compares: return "Compares";
    case ClaimKind::is_rational: return "IsRational";
    case ClaimKind::may_be_rational: return "MayBeRational";
    case ClaimKind::is_fracterm: return "IsFracterm";
    case ClaimKind::is_fraxion: return "IsFraxion";
    case ClaimKind::fracterm_and_fracvalue: return "FractermAndFracvalue";
    case ClaimKind::taxonomy: return "TaxonomyClaim";
    case ClaimKind::can_be_simplified: return "CanBeSimplified";
    case ClaimKind::is_integer: return "IsInteger";
    case ClaimKind::written_as: return "WrittenAs";
    case ClaimKind::contradicts: return "Contradicts";
    case ClaimKind::not_all_fracterms_rational: return "NotAllFractermsRational";
    case ClaimKind::rationals_not_fracterms: return "RationalsAreNotFracterms";
    case ClaimKind::rationals_are_fraxions: return "RationalsAreFraxions";
    case ClaimKind::not_all_fraxions_rational: return "NotAllFraxionsRational";
    case ClaimKind::level_directive: return "LevelDirective";
    case ClaimKind::conclude: return "Conclude";
    case ClaimKind::definitional: return "Definitional";
  }
  return "?";
}

std::string_view to_string(LevelSource source) {
  switch (source) {
    case LevelSource::annotation: return "annotation";
    case LevelSource::decoration: return "decoration";
    case LevelSource::directive: return "directive";
    case LevelSource::definitional: return "definitional";
    case LevelSource::claim: return "claim";
    case LevelSource::fallback: return "default";
  }
  return "?";
}

std::string_view to_string(StepStatus status) {
  switch (status) {
    case StepStatus::valid: return "valid";
    case StepStatus::invalid: return "invalid";
    case StepStatus::level_conflict: return "level-conflict";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

bool is_word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

class ClaimParser {
 public:
  ClaimParser(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  Claim parse() {
    Claim c{};
    if (accept("def:")) {
      c.kind = ClaimKind::definitional;
      accept("a") || accept("an");
      expect("fraction");
      expect("is");
      accept("a") || accept("an");
      c.word = word();
      c.level = definitional_level(c.word);
    } else if (accept("level(")) {
      c.kind = ClaimKind::level_directive;
      c.target = index();
      expect(")");
      expect("=");
      const std::string tag = word();
      const auto level = parse_level(tag);
      if (!level) fail("unknown level '" + tag + "'");
      c.level = *level;
    } else if (accept("conclude")) {
      c.kind = ClaimKind::conclude;
      c.lhs_numeral = numeral();
      expect("=");
      c.rhs_numeral = numeral();
    } else if (accept("unique numerator")) {
      c.kind = ClaimKind::unique_numerator;
    } else if (accept("rationals are not fracterms")) {
      c.kind = ClaimKind::rationals_not_fracterms;
    } else if (accept("rationals are fraxions")) {
      c.kind = ClaimKind::rationals_are_fraxions;
    } else if (accept("not all fraxions are rational")) {
      c.kind = ClaimKind::not_all_fraxions_rational;
    } else if (accept("not all fracterms are rational")) {
      c.kind = ClaimKind::not_all_fracterms_rational;
      if (accept(":")) c.terms.push_back(term());
    } else {
      subject_claim(c);
    }
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(text_.substr(pos_)) + "'");
    return c;
  }

 private:
  void subject_claim(Claim& c) {
    Term subject = term();
    const bool extraction =
        subject.kind() == NodeKind::numerator || subject.kind() == NodeKind::denominator;
    if (extraction) {
      const bool num = subject.kind() == NodeKind::numerator;
      c.terms.push_back(subject.operand());
      if (accept("=")) {
        c.kind = num ? ClaimKind::has_numerator : ClaimKind::has_denominator;
        c.lhs_numeral = numeral();
      } else if (accept("is")) {
        c.kind = num ? ClaimKind::numerator_parity : ClaimKind::denominator_parity;
        c.even = parity();
      } else {
        fail("expected '=' or 'is' after " + std::string(num ? "num(...)" : "denom(...)"));
      }
      return;
    }
    c.terms.push_back(subject);
    if (accept("==")) {
      c.kind = ClaimKind::equals;
      c.terms.push_back(term());
    } else if (const auto rel = relation()) {
      c.kind = ClaimKind::compares;
      c.relation = *rel;
      c.terms.push_back(term());
    } else if (accept("can be simplified")) {
      c.kind = ClaimKind::can_be_simplified;
    } else if (accept("can be written as")) {
      c.kind = ClaimKind::written_as;
      c.terms.push_back(term());
    } else if (accept("may be rational")) {
      c.kind = ClaimKind::may_be_rational;
    } else if (accept("contradicts")) {
      c.kind = ClaimKind::contradicts;
      c.target = index();
    } else if (accept("is")) {
      c.positive = !accept("not");
      is_claim(c);
    } else {
      fail("expected a claim about the fracsign");
    }
  }

  void is_claim(Claim& c) {
    auto positive_only = [&] {
      if (!c.positive) fail("'is not' is not supported here");
    };
    if (accept("rational")) {
      c.kind = ClaimKind::is_rational;
    } else if (accept("fracterm and fracvalue")) {
      positive_only();
      c.kind = ClaimKind::fracterm_and_fracvalue;
    } else if (accept("fracterm")) {
      positive_only();
      c.kind = ClaimKind::is_fracterm;
    } else if (accept("fraxion")) {
      positive_only();
      c.kind = ClaimKind::is_fraxion;
    } else if (accept("even")) {
      positive_only();
      accept("integer");
      c.kind = ClaimKind::is_integer;
      c.require_even = true;
    } else if (accept("integer")) {
      positive_only();
      c.kind = ClaimKind::is_integer;
    } else {
      c.kind = ClaimKind::taxonomy;
      do {
        const std::string flag = word();
        static const std::set<std::string> flags = {"flat", "simple", "simplified", "proper",
                                                    "safe"};
        if (!flags.count(flag)) fail("unknown property '" + flag + "'");
        c.flags.push_back(flag);
      } while (accept("and"));
      if (!c.positive && c.flags.size() > 1) fail("'is not' takes a single property");
    }
  }

  std::optional<std::string> relation() {
    for (const char* r : {"<=", ">=", "<", ">"}) {
      if (accept(r)) return r;
    }
    return std::nullopt;
  }

  static Level definitional_level(const std::string& w) {
    if (w == "number" || w == "rational" || w == "fracvalue" || w == "value") {
      return Level::fracvalue;
    }
    if (w == "fracterm" || w == "term" || w == "expression") return Level::fracterm;
    if (w == "fracsign" || w == "sign") return Level::fracsign;
    if (w == "fraxion") return Level::fraxion;
    throw Error(ErrorKind::syntax, "unknown definitional reading '" + w + "'");
  }

  bool parity() {
    if (accept("even")) return true;
    if (accept("odd")) return false;
    fail("expected 'even' or 'odd'");
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool accept(std::string_view phrase) {
    skip_space();
    if (text_.substr(pos_, phrase.size()) != phrase) return false;
    const std::size_t end = pos_ + phrase.size();
    if (is_word_char(phrase.back()) && end < text_.size() && is_word_char(text_[end])) {
      return false;
    }
    pos_ = end;
    return true;
  }

  void expect(std::string_view phrase) {
    if (!accept(phrase)) fail("expected '" + std::string(phrase) + "'");
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_word_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected a word");
    return std::string(text_.substr(start, pos_ - start));
  }

  Integer numeral() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    if (pos_ == start || text_[pos_ - 1] == '-') fail("expected a numeral");
    return parse_integer(text_.substr(start, pos_ - start));
  }

  std::size_t index() {
    const Integer k = numeral();
    if (k < 1) fail("assertion indices start at 1");
    return static_cast<std::size_t>(k);
  }

  Term term() {
    skip_space();
    try {
      PrefixParse p = parse_prefix(text_, pos_);
      pos_ = p.end;
      return p.term;
    } catch (const Error& e) {
      fail(e.what());
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::syntax, "line " + std::to_string(line_) + ": " + what, pos_);
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

Script parse_script(std::string_view text) {
  Script script;
  std::set<std::size_t> seen;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fail = [&](const std::string& what) {
      throw Error(ErrorKind::syntax, "line " + std::to_string(line_number) + ": " + what);
    };
    if (line.front() == '%') {
      std::istringstream pragma(line.substr(1));
      std::string name, value;
      pragma >> name >> value;
      if (name != "shape" || value.empty()) fail("unknown pragma '" + line + "'");
      script.shape = parse_shape_id(value);
      continue;
    }
    if (const auto hash = line.find('#'); hash != std::string::npos) line = trim(line.substr(0, hash));

    const auto colon = line.find(':');
    if (colon == std::string::npos || colon == 0 ||
        !std::all_of(line.begin(), line.begin() + static_cast<long>(colon),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      fail("expected '<index>: <claim>'");
    }
    Line entry;
    entry.index = std::stoul(line.substr(0, colon));
    entry.line_number = line_number;
    if (!seen.insert(entry.index).second) {
      fail("assertion " + std::to_string(entry.index) + " is numbered twice");
    }
    std::string body = trim(line.substr(colon + 1));
    if (const auto at = body.rfind('@'); at != std::string::npos) {
      const std::string tag = trim(body.substr(at + 1));
      const auto level = parse_level(tag);
      if (!level) fail("unknown level annotation '@" + tag + "'");
      entry.annotation = level;
      body = trim(body.substr(0, at));
    }
    entry.text = body;
    entry.claim = ClaimParser(body, line_number).parse();
    script.lines.push_back(std::move(entry));
  }
  for (const Line& l : script.lines) {
    if (l.claim.kind != ClaimKind::level_directive && l.claim.kind != ClaimKind::contradicts) {
      continue;
    }
    if (!seen.count(l.claim.target)) {
      throw Error(ErrorKind::dangling_reference,
                  "assertion " + std::to_string(l.index) + " refers to missing assertion " +
                      std::to_string(l.claim.target));
    }
  }
  return script;
}

// ---------------------------------------------------------------------------
// Level inference

namespace {

std::optional<Level> forced_level(ClaimKind kind) {
  switch (kind) {
    case ClaimKind::has_numerator:
    case ClaimKind::has_denominator:
    case ClaimKind::numerator_parity:
    case ClaimKind::denominator_parity:
    case ClaimKind::unique_numerator:
    case ClaimKind::is_fracterm:
    case ClaimKind::taxonomy:
    case ClaimKind::can_be_simplified:
    case ClaimKind::written_as:
    case ClaimKind::not_all_fracterms_rational:
      return Level::fracterm;
    case ClaimKind::equals:
    case ClaimKind::compares:
    case ClaimKind::is_rational:
    case ClaimKind::is_integer:
      return Level::fracvalue;
    case ClaimKind::is_fraxion:
    case ClaimKind::may_be_rational:
    case ClaimKind::contradicts:
    case ClaimKind::fracterm_and_fracvalue:
      return Level::fraxion;
    default:
      return std::nullopt;
  }
}

std::optional<Level> decoration_level(const Term& t) {
  if (!t.is_division()) return std::nullopt;
  switch (t.decoration()) {
    case Decoration::fracterm: return Level::fracterm;
    case Decoration::fracvalue: return Level::fracvalue;
    case Decoration::none: break;
  }
  return std::nullopt;
}

std::string tag(Level l) { return std::string(to_string(l)); }

}  // namespace

LeveledScript assign_levels(const Script& script) {
  LeveledScript out{script, {}};

  // level(k) directives, keyed by target index.
  std::map<std::size_t, std::pair<Level, std::size_t>> directives;
  std::map<std::size_t, LevelConflict> directive_conflicts;
  for (const Line& l : script.lines) {
    if (l.claim.kind != ClaimKind::level_directive) continue;
    const auto [it, inserted] = directives.emplace(l.claim.target, std::pair{l.claim.level, l.index});
    if (!inserted && it->second.first != l.claim.level) {
      directive_conflicts.emplace(
          l.claim.target,
          LevelConflict{l.claim.target, 0, it->second.first, l.claim.level,
                        "assertions " + std::to_string(it->second.second) + " and " +
                            std::to_string(l.index) + " assign different levels"});
    }
  }

  std::optional<Level> definitional;
  for (const Line& l : script.lines) {
    LeveledLine ll{Level::fracvalue, LevelSource::fallback, {}, std::nullopt};
    const auto forced = forced_level(l.claim.kind);
    const auto directive = directives.find(l.index);

    if (l.annotation) {
      ll.level = *l.annotation;
      ll.source = LevelSource::annotation;
      if (directive != directives.end() && directive->second.first != *l.annotation) {
        ll.conflict = LevelConflict{
            l.index, 0, directive->second.first, *l.annotation,
            "assertion " + std::to_string(directive->second.second) + " requires level " +
                tag(directive->second.first) + " but the assertion is annotated " +
                tag(*l.annotation)};
      }
    } else if (directive != directives.end()) {
      ll.level = directive->second.first;
      ll.source = LevelSource::directive;
    } else if (definitional && l.claim.kind != ClaimKind::definitional) {
      ll.level = *definitional;
      ll.source = LevelSource::definitional;
    } else if (forced) {
      ll.level = *forced;
      ll.source = LevelSource::claim;
    }
    if (!ll.conflict) {
      if (auto dc = directive_conflicts.find(l.index); dc != directive_conflicts.end()) {
        ll.conflict = dc->second;
      }
    }
    // A fraxion reading is refined as soon as a level-specific predicate applies.
    if (ll.level == Level::fraxion && forced && *forced != Level::fraxion) ll.level = *forced;

    for (std::size_t i = 0; i < l.claim.terms.size(); ++i) {
      const Term& t = l.claim.terms[i];
      Occurrence occ{l.index, i + 1, erase_decorations(t), ll.level, ll.source};
      if (const auto d = decoration_level(t)) {
        const bool explicit_claim =
            ll.source == LevelSource::annotation || ll.source == LevelSource::directive;
        if (explicit_claim && *d != ll.level && !ll.conflict) {
          ll.conflict = LevelConflict{l.index, i + 1, ll.level, *d,
                                      "occurrence " + std::to_string(i + 1) + " is decorated " +
                                          tag(*d) + " but the assertion has level " +
                                          tag(ll.level)};
        }
        occ.level = *d;
        occ.source = LevelSource::decoration;
      }
      ll.occurrences.push_back(std::move(occ));
    }
    if (l.claim.kind == ClaimKind::definitional) definitional = l.claim.level;
    out.lines.push_back(std::move(ll));
  }
  return out;
}

LeveledScript infer_levels(const Script& script) {
  LeveledScript leveled = assign_levels(script);
  for (const LeveledLine& l : leveled.lines) {
    if (l.conflict) {
      throw Error(ErrorKind::level_conflict,
                  "assertion " + std::to_string(l.conflict->step) + ": " + l.conflict->detail);
    }
  }
  return leveled;
}

// ---------------------------------------------------------------------------
// Checking

namespace {

struct Outcome {
  bool ok;
  std::string reason;
};

Outcome holds() { return {true, {}}; }
Outcome fails(std::string reason) { return {false, std::move(reason)}; }

std::string show(const Term& t) { return format(t); }

class Checker {
 public:
  Checker(const LeveledScript& leveled, ShapeId shape, bool disjoint)
      : leveled_(leveled), shape_(shape), disjoint_(disjoint) {}

  Verdict run() {
    Verdict verdict;
    verdict.shape = shape_;
    verdict.disjoint = disjoint_;
    const auto& lines = leveled_.script.lines;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const LeveledLine& ll = leveled_.lines[i];
      StepVerdict step{lines[i].index, lines[i].text, ll.level, StepStatus::valid, {},
                       ll.occurrences, ll.conflict};
      if (ll.conflict) {
        step.status = StepStatus::level_conflict;
        step.reason = ll.conflict->detail;
      } else {
        Outcome o = check_line(i);
        if (!o.ok) {
          step.status = StepStatus::invalid;
          step.reason = o.reason;
        }
      }
      verdict.steps.push_back(std::move(step));
      status_.push_back(verdict.steps.back().status);
    }
    for (const StepVerdict& s : verdict.steps) {
      if (s.status == StepStatus::valid) continue;
      verdict.sound = false;
      verdict.blocked_step = s.index;
      verdict.explanation = "assertion " + std::to_string(s.index) + ": " + s.reason;
      break;
    }
    return verdict;
  }

 private:
  // Value readings ----------------------------------------------------------

  std::optional<Fracvalue> value(const Term& t) const {
    try {
      return eval(t, EvalConfig{Policy::common_meadow, shape_, {}});
    } catch (const Error&) {
      return std::nullopt;
    }
  }

  bool has_number_value(const Term& t) const {
    const auto v = value(t);
    return v && v->is_number();
  }

  bool rational_at(const Term& t, Level level) const {
    switch (level) {
      case Level::fracvalue: return has_number_value(t);
      case Level::fracterm: return !disjoint_ && classify(t).simplified;
      case Level::fraxion:
        return rational_at(t, Level::fracvalue) || rational_at(t, Level::fracterm);
      default: return false;
    }
  }

  bool fracterm_at(const Term& t, Level level) const {
    switch (level) {
      case Level::fracterm: return is_fracterm(t);
      case Level::fracvalue: return !disjoint_ && has_number_value(t);
      case Level::fraxion: return is_fracterm(t);
      default: return false;
    }
  }

  std::string not_rational_reason(const Term& t, Level level) const {
    switch (level) {
      case Level::fracvalue:
        return "the fracvalue of " + show(t) + " is not a number";
      case Level::fracterm:
        if (disjoint_) {
          return "at level ft " + show(t) +
                 " is a fracterm, and fracterms are not rational numbers when fracterms and "
                 "fracvalues are disjoint";
        }
        return "the fracterm " + show(t) + " is not a simplified simple fracterm, so it is not a "
               "rational number of rat.ssft";
      default:
        return "a " + std::string(long_name(level)) + " is not a number";
    }
  }

  // Claims ------------------------------------------------------------------

  Outcome check_line(std::size_t i) {
    const Line& line = leveled_.script.lines[i];
    const LeveledLine& ll = leveled_.lines[i];
    const Claim& c = line.claim;
    auto occ = [&](std::size_t k) -> const Occurrence& { return ll.occurrences.at(k); };

    switch (c.kind) {
      case ClaimKind::has_numerator:
      case ClaimKind::has_denominator:
      case ClaimKind::numerator_parity:
      case ClaimKind::denominator_parity:
        return component(c, occ(0));
      case ClaimKind::unique_numerator:
        if (ll.level == Level::fracvalue) {
          return fails("fracvalues have no numerator, so numerator uniqueness is unavailable at "
                       "level fv");
        }
        if (ll.level == Level::fraxion) {
          return fails("fraxions have no unique numerator: their fracterm and fracvalue readings "
                       "disagree");
        }
        return holds();
      case ClaimKind::equals:
        return equals(occ(0), occ(1));
      case ClaimKind::compares:
        return compares(c, occ(0), occ(1));
      case ClaimKind::is_rational: {
        const bool r = rational_at(occ(0).fracsign, occ(0).level);
        if (r == c.positive) return holds();
        if (c.positive) return fails(not_rational_reason(occ(0).fracsign, occ(0).level));
        return fails(show(occ(0).fracsign) + " is a rational number at level " +
                     tag(occ(0).level));
      }
      case ClaimKind::may_be_rational: {
        const Occurrence& o = occ(0);
        const Level at = o.level;
        if (rational_at(o.fracsign, at)) return holds();
        return fails("no admissible reading of " + show(o.fracsign) + " is a rational number");
      }
      case ClaimKind::is_fracterm: {
        const Occurrence& o = occ(0);
        if (fracterm_at(o.fracsign, o.level)) return holds();
        if (o.level == Level::fracvalue) {
          return fails("at level fv " + show(o.fracsign) +
                       " denotes a fracvalue, and fracvalues are not fracterms when the two are "
                       "disjoint");
        }
        if (!is_fracterm(o.fracsign)) {
          return fails(show(o.fracsign) + " does not have division as its leading operator");
        }
        return fails("a " + std::string(long_name(o.level)) + " is not a fracterm");
      }
      case ClaimKind::is_fraxion:
        if (is_fracterm(occ(0).fracsign)) return holds();
        return fails(show(occ(0).fracsign) + " is not a fracsign");
      case ClaimKind::fracterm_and_fracvalue:
        return both_readings(occ(0));
      case ClaimKind::taxonomy:
        return taxonomy(c, occ(0));
      case ClaimKind::can_be_simplified:
        return simplifiable(occ(0));
      case ClaimKind::is_integer:
        return integer(c, occ(0));
      case ClaimKind::written_as:
        return written_as(occ(0), occ(1));
      case ClaimKind::contradicts:
        return contradicts(c, occ(0));
      case ClaimKind::not_all_fracterms_rational:
        if (c.terms.empty()) return holds();
        if (!rational_at(occ(0).fracsign, Level::fracterm)) return holds();
        return fails("the fracterm " + show(occ(0).fracsign) + " is a rational number of " +
                     std::string(to_string(shape_)));
      case ClaimKind::rationals_not_fracterms:
        if (disjoint_) return holds();
        return fails("under rat.ssft every rational number is a simplified simple fracterm");
      case ClaimKind::rationals_are_fraxions:
      case ClaimKind::not_all_fraxions_rational:
      case ClaimKind::definitional:
        return holds();
      case ClaimKind::level_directive: {
        const std::size_t t = line_of(c.target);
        if (leveled_.lines[t].occurrences.empty()) {
          return fails("assertion " + std::to_string(c.target) +
                       " contains no fracsign occurrence");
        }
        return holds();
      }
      case ClaimKind::conclude:
        return conclude(i);
    }
    return fails("unsupported claim");
  }

  Outcome component(const Claim& c, const Occurrence& o) const {
    const bool num =
        c.kind == ClaimKind::has_numerator || c.kind == ClaimKind::numerator_parity;
    const char* part = num ? "numerator" : "denominator";
    if (o.level == Level::fracvalue) {
      return fails(std::string("fracvalues have no ") + part + "; " + show(o.fracsign) +
                   " is read as a fracvalue (" + std::string(to_string(o.source)) + ")");
    }
    if (!is_fracterm(o.fracsign)) {
      return fails(show(o.fracsign) + " is not a fracterm and has no " + part);
    }
    const Term component = num ? numerator(o.fracsign) : denominator(o.fracsign);
    if (!component.is_literal()) {
      return fails(std::string("the ") + part + " of " + show(o.fracsign) + " is " +
                   show(component) + ", not a numeral");
    }
    const Integer v = literal_value(component);
    if (c.kind == ClaimKind::has_numerator || c.kind == ClaimKind::has_denominator) {
      if (v == c.lhs_numeral) return holds();
      return fails(std::string("the ") + part + " of " + show(o.fracsign) + " is " +
                   show(component));
    }
    const bool even = v % 2 == 0;
    if (even == c.even) return holds();
    return fails(std::string("the ") + part + " " + show(component) + " is " +
                 (even ? "even" : "odd"));
  }

  Outcome equals(const Occurrence& a, const Occurrence& b) const {
    if (a.level != b.level) {
      return fails("the occurrences have different levels (" + tag(a.level) + " and " +
                   tag(b.level) + ")");
    }
    switch (a.level) {
      case Level::fracvalue:
      case Level::fraxion: {
        const auto v = value(a.fracsign);
        const auto w = value(b.fracsign);
        if (v && w && value_eq(*v, *w)) return holds();
        return fails("the fracvalues of " + show(a.fracsign) + " and " + show(b.fracsign) +
                     " differ");
      }
      case Level::fracterm:
      case Level::fracsign:
        if (a.fracsign == b.fracsign) return holds();
        return fails(show(a.fracsign) + " and " + show(b.fracsign) + " are different " +
                     std::string(long_name(a.level)) + "s");
      case Level::fracsign_occurrence:
        return fails("distinct fracsign occurrences are distinct entities");
    }
    return fails("unknown level");
  }

  Outcome both_readings(const Occurrence& o) const {
    std::vector<Level> readings = {o.level};
    if (o.level == Level::fraxion) readings = {Level::fracvalue, Level::fracterm};
    for (Level l : readings) {
      if (fracterm_at(o.fracsign, l) && rational_at(o.fracsign, l)) return holds();
    }
    if (disjoint_) {
      return fails("fracterms and fracvalues are disjoint, so " + show(o.fracsign) +
                   " cannot be both");
    }
    return fails("no reading of " + show(o.fracsign) + " is both a fracterm and a fracvalue");
  }

  Outcome taxonomy(const Claim& c, const Occurrence& o) const {
    for (const std::string& flag : c.flags) {
      if (o.level == Level::fracvalue || o.level == Level::fraxion) {
        return fails("'" + flag + "' is a property of fracterms, but " + show(o.fracsign) +
                     " is read at level " + tag(o.level));
      }
      const TaxonomyFlags f = classify(o.fracsign);
      bool value = false;
      if (flag == "flat") value = f.flat;
      if (flag == "simple") value = f.simple;
      if (flag == "simplified") value = f.simplified;
      if (flag == "safe") value = f.safe;
      if (flag == "proper") {
        if (!f.proper && c.positive) {
          return fails("proper is defined only for simple fracterms");
        }
        value = f.proper.value_or(false);
      }
      if (value != c.positive) {
        return fails(show(o.fracsign) + (value ? " is " : " is not ") + flag);
      }
    }
    return holds();
  }

  Outcome compares(const Claim& c, const Occurrence& a, const Occurrence& b) const {
    for (const Occurrence* o : {&a, &b}) {
      if (o->level != Level::fracvalue && o->level != Level::fraxion) {
        return fails("order is a relation on fracvalues, but " + show(o->fracsign) +
                     " is read at level " + tag(o->level));
      }
    }
    const auto v = value(a.fracsign);
    const auto w = value(b.fracsign);
    const auto x = v && v->is_number() ? detail::decode(v->number()) : std::nullopt;
    const auto y = w && w->is_number() ? detail::decode(w->number()) : std::nullopt;
    if (!x || !y) return fails("bot is not ordered");
    bool ok = false;
    if (c.relation == "<") ok = *x < *y;
    if (c.relation == ">") ok = *x > *y;
    if (c.relation == "<=") ok = *x <= *y;
    if (c.relation == ">=") ok = *x >= *y;
    if (ok) return holds();
    return fails(show(a.fracsign) + " " + c.relation + " " + show(b.fracsign) + " is false");
  }

  Outcome simplifiable(const Occurrence& o) const {
    if (o.level == Level::fracvalue || o.level == Level::fraxion) {
      return fails("simplification applies to fracterms, not at level " + tag(o.level));
    }
    const TaxonomyFlags f = classify(o.fracsign);
    if (!f.simple) return fails(show(o.fracsign) + " is not a simple fracterm");
    if (!f.safe) return fails(show(o.fracsign) + " has a zero denominator");
    const Term s = simplify(o.fracsign);
    if (s == o.fracsign) return fails(show(o.fracsign) + " is already simplified");
    return holds();
  }

  Outcome integer(const Claim& c, const Occurrence& o) const {
    if (o.level != Level::fracvalue) {
      return fails("being an integer is a property of values, but " + show(o.fracsign) +
                   " is read at level " + tag(o.level));
    }
    const auto v = value(o.fracsign);
    if (!v || !v->is_number()) return fails("the fracvalue of " + show(o.fracsign) + " is ⊥");
    const auto r = detail::decode(v->number());
    if (!r || boost::multiprecision::denominator(*r) != 1) {
      return fails("the fracvalue of " + show(o.fracsign) + " is not an integer");
    }
    if (c.require_even && boost::multiprecision::numerator(*r) % 2 != 0) {
      return fails("the fracvalue of " + show(o.fracsign) + " is odd");
    }
    return holds();
  }

  Outcome written_as(const Occurrence& a, const Occurrence& b) const {
    if (a.level == Level::fracvalue || b.level == Level::fracvalue) {
      return fails("rewriting applies to fracterms, not fracvalues");
    }
    const auto v = value(a.fracsign);
    const auto w = value(b.fracsign);
    if (!v || !w || !v->is_number() || !w->is_number()) {
      return fails("only fracterms with a numeric value can be rewritten");
    }
    if (!value_eq(*v, *w)) {
      return fails(show(a.fracsign) + " and " + show(b.fracsign) + " have different values");
    }
    return holds();
  }

  Outcome contradicts(const Claim& c, const Occurrence& o) const {
    const Line& target = leveled_.script.lines[line_of(c.target)];
    const std::string k = std::to_string(c.target);
    if (target.claim.kind == ClaimKind::rationals_not_fracterms) {
      std::vector<Level> readings = {o.level};
      if (o.level == Level::fraxion) readings = {Level::fracvalue, Level::fracterm};
      for (Level l : readings) {
        if (rational_at(o.fracsign, l) && fracterm_at(o.fracsign, l)) return holds();
      }
      return fails("no single reading of " + show(o.fracsign) +
                   " is both a rational number and a fracterm" + other_levels(o));
    }
    if (target.claim.kind == ClaimKind::not_all_fracterms_rational) {
      if (target.claim.terms.empty()) {
        return fails("assertion " + k + " is existential; one fracsign cannot refute it");
      }
      const Term& witness = erase_decorations(target.claim.terms.front());
      if (!(witness == o.fracsign)) {
        return fails("assertion " + k + " is about " + show(witness) + ", not " +
                     show(o.fracsign));
      }
      if (rational_at(o.fracsign, Level::fracterm)) return holds();
      return fails("the fracterm " + show(o.fracsign) + " is not a rational number" +
                   other_levels(o));
    }
    return fails("assertion " + k + " is not a universal claim that one fracsign can refute");
  }

  // Lists other occurrences of the same fracsign whose level differs.
  std::string other_levels(const Occurrence& o) const {
    std::string out;
    for (const LeveledLine& ll : leveled_.lines) {
      for (const Occurrence& p : ll.occurrences) {
        if (p.step == o.step || !(p.fracsign == o.fracsign)) continue;
        out += (out.empty() ? "" : ", ") + std::string("step ") + std::to_string(p.step) + " at " +
               tag(p.level);
      }
    }
    if (out.empty()) return "";
    return "; the same fracsign " + show(o.fracsign) +
           " has different occurrence levels (" + out + ")";
  }

  // Conclusions -------------------------------------------------------------

  struct Links {
    std::vector<std::size_t> parent;
    std::size_t find(std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
    std::size_t add() {
      parent.push_back(parent.size());
      return parent.size() - 1;
    }
  };

  bool derivable(std::size_t upto, const Integer& n, const Integer& m, bool level_aware) {
    if (n == m) return true;
    const auto& lines = leveled_.script.lines;
    struct Node {
      const Occurrence* occ;
    };
    std::vector<Node> occs;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> id;
    Links links;
    std::vector<std::size_t> premises;
    for (std::size_t i = 0; i < upto; ++i) {
      if (lines[i].claim.kind == ClaimKind::conclude) continue;
      if (level_aware && status_[i] != StepStatus::valid) continue;
      premises.push_back(i);
      for (const Occurrence& o : leveled_.lines[i].occurrences) {
        id[{o.step, o.position}] = links.add();
        occs.push_back({&o});
      }
    }
    // Same fracsign, same level: the same object (occurrences stay distinct).
    for (std::size_t a = 0; a < occs.size(); ++a) {
      for (std::size_t b = a + 1; b < occs.size(); ++b) {
        const Occurrence& x = *occs[a].occ;
        const Occurrence& y = *occs[b].occ;
        if (!(x.fracsign == y.fracsign)) continue;
        const bool same_level = x.level == y.level && x.level != Level::fracsign_occurrence &&
                                x.level != Level::fraxion;
        if (!level_aware || same_level) links.unite(a, b);
      }
    }
    std::set<Level> unique;
    bool any_unique = false;
    for (std::size_t i : premises) {
      const Claim& c = lines[i].claim;
      const LeveledLine& ll = leveled_.lines[i];
      if (c.kind == ClaimKind::equals) {
        links.unite(id[{ll.occurrences[0].step, 1}], id[{ll.occurrences[1].step, 2}]);
      }
      if (c.kind == ClaimKind::unique_numerator) {
        unique.insert(ll.level);
        any_unique = true;
      }
    }
    std::map<std::size_t, std::size_t> numerator_of_class;
    std::map<Integer, std::size_t> numeral;
    auto numeral_node = [&](const Integer& v) {
      auto it = numeral.find(v);
      if (it == numeral.end()) it = numeral.emplace(v, links.add()).first;
      return it->second;
    };
    for (std::size_t i : premises) {
      const Claim& c = lines[i].claim;
      if (c.kind != ClaimKind::has_numerator) continue;
      const Occurrence& o = leveled_.lines[i].occurrences[0];
      const bool applies = level_aware ? unique.count(o.level) > 0 : any_unique;
      if (!applies) continue;
      const std::size_t cls = links.find(id[{o.step, o.position}]);
      auto it = numerator_of_class.find(cls);
      if (it == numerator_of_class.end()) it = numerator_of_class.emplace(cls, links.add()).first;
      links.unite(it->second, numeral_node(c.lhs_numeral));
    }
    if (!numeral.count(n) || !numeral.count(m)) return false;
    return links.find(numeral[n]) == links.find(numeral[m]);
  }

  Outcome conclude(std::size_t i) {
    const Claim& c = leveled_.script.lines[i].claim;
    const std::string eq = to_decimal(c.lhs_numeral) + " = " + to_decimal(c.rhs_numeral);
    if (derivable(i, c.lhs_numeral, c.rhs_numeral, true)) return holds();
    if (!derivable(i, c.lhs_numeral, c.rhs_numeral, false)) {
      return fails(eq + " does not follow from the preceding assertions");
    }
    std::string unique, equal;
    for (std::size_t k = 0; k < i; ++k) {
      const Claim& p = leveled_.script.lines[k].claim;
      const std::string where = "step " + std::to_string(leveled_.script.lines[k].index) +
                                " at " + tag(leveled_.lines[k].level);
      if (p.kind == ClaimKind::unique_numerator) unique += (unique.empty() ? "" : ", ") + where;
      if (p.kind == ClaimKind::equals) equal += (equal.empty() ? "" : ", ") + where;
    }
    std::string why = eq + " follows only by confusing levels";
    if (!unique.empty() && !equal.empty()) {
      why += ": numerator uniqueness is established for " + unique +
             ", while the equality is asserted for " + equal;
    }
    return fails(why);
  }

  std::size_t line_of(std::size_t index) const {
    const auto& lines = leveled_.script.lines;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (lines[i].index == index) return i;
    }
    throw Error(ErrorKind::dangling_reference, "missing assertion " + std::to_string(index));
  }

  const LeveledScript& leveled_;
  ShapeId shape_;
  bool disjoint_;
  std::vector<StepStatus> status_;
};

}  // namespace

Verdict check(const Script& script, const CheckConfig& config) {
  const ShapeId shape = config.shape.value_or(script.shape.value_or(ShapeId::rat_pcs));
  if (label_of(shape) != Label::rat) {
    throw Error(ErrorKind::unsupported_shape,
                "fractalk needs a rat shape, got " + std::string(to_string(shape)));
  }
  const bool disjoint = config.disjoint.value_or(shape != ShapeId::rat_ssft);
  const LeveledScript leveled = assign_levels(script);
  return Checker(leveled, shape, disjoint).run();
}

Verdict check_text(std::string_view text, const CheckConfig& config) {
  return check(parse_script(text), config);
}

}  // namespace fracterm::fractalk
