// fracterm: command-line workbench for the fracterm library.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fracterm/error.hpp"
#include "fracterm/fractalk.hpp"
#include "fracterm/json.hpp"
#include "fracterm/normality.hpp"
#include "fracterm/rewrite.hpp"
#include "fracterm/semantics.hpp"
#include "fracterm/shape.hpp"
#include "fracterm/syntax.hpp"
#include "fracterm/taxonomy.hpp"

#ifndef FRACTERM_CORPUS_DIR
#define FRACTERM_CORPUS_DIR "corpus"
#endif

namespace fs = std::filesystem;
using namespace fracterm;
using json::Json;

namespace {

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::string format = "inline";
  std::string policy = "common-meadow";
  std::string shape;
  std::string to;
  std::string int_shape = "int.signed";
  std::string strategy = "cross";
  unsigned bound = 50;
  bool verbatim_add = false;
  bool fold = false;
  bool all = false;
  bool demote = false;
  std::string dir = FRACTERM_CORPUS_DIR;
  std::string arg0;
  std::string arg1;
  std::vector<std::string> args;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  Notation notation() const { return parse_notation(o_.format); }
  Term term(std::size_t i) const { return parse(o_.args.at(i), notation()); }
  std::string show(const Term& t) const { return format(t, notation()); }

  ShapeId shape() const {
    if (!o_.shape.empty()) return parse_shape_id(o_.shape);
    if (const char* env = std::getenv("FRACTERM_DEFAULT_SHAPE"); env && *env) {
      return parse_shape_id(env);
    }
    return ShapeId::rat_pcs;
  }

  RnConfig rn_config() const {
    const ShapeId s = parse_shape_id(o_.int_shape);
    if (label_of(s) != Label::integer) {
      throw Error(ErrorKind::unsupported_shape, "--int-shape needs an int shape");
    }
    return {s, o_.verbatim_add ? RnAddition::verbatim : RnAddition::cross_multiply};
  }

  void emit(const Json& j, const std::string& text) const {
    if (o_.json) {
      out_ << j.dump(2) << '\n';
    } else {
      out_ << text << '\n';
    }
  }

  void parse_cmd() const {
    const Term t = term(0);
    emit(Json{{"term", show(t)}, {"tree", json::to_json(t)}}, show(t));
  }

  void classify_cmd() const {
    const Term t = term(0);
    const TaxonomyFlags f = classify(t);
    const Json j = json::to_json(f);
    std::ostringstream text;
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      text << (first ? "" : "\n") << key << ": " << (value.is_null() ? "n/a" : value.dump());
      first = false;
    }
    emit(Json{{"term", show(t)}, {"flags", j}}, text.str());
  }

  void eval_cmd() const {
    const EvalConfig config{parse_policy(o_.policy), shape(), rn_config()};
    const Fracvalue v = eval(term(0), config);
    emit(json::to_json(v), json::to_text(v));
  }

  void flatten_cmd() const {
    const FlattenResult r = flatten(term(0), FlattenOptions{o_.fold});
    std::ostringstream text;
    text << show(r.term);
    for (const RewriteStep& s : r.trace) {
      text << "\n  " << s.rule << ": " << show(s.before) << " => " << show(s.after);
    }
    emit(Json{{"result", show(r.term)},
              {"flat", classify(r.term).flat || !contains_division(r.term)},
              {"trace", json::to_json(r.trace)}},
         text.str());
  }

  void simplify_cmd() const {
    Term s = simplify(term(0));
    if (o_.demote) s = demote(s);
    emit(Json{{"result", show(s)}}, show(s));
  }

  void add_cmd() const {
    const Term a = term(0);
    const Term b = term(1);
    if (o_.all) {
      Json results = Json::array();
      std::ostringstream text;
      for (const auto& [strategy, result] : add_family_all(a, b)) {
        results.push_back({{"strategy", std::string(to_string(strategy))}, {"result", show(result)}});
        text << (results.size() > 1 ? "\n" : "") << to_string(strategy) << ": " << show(result);
      }
      emit(Json{{"results", results}}, text.str());
      return;
    }
    const AddStrategy strategy = parse_strategy(o_.strategy);
    const Term r = add_family(a, b, strategy);
    emit(Json{{"strategy", o_.strategy}, {"result", show(r)}}, show(r));
  }

  void encode_cmd() const {
    const ShapeId s = shape();
    const Instance i = encode(parse_integer(o_.args.at(0)), s);
    emit(Json{{"shape", std::string(to_string(s))}, {"instance", json::to_json(i)}},
         json::to_text(i));
  }

  void convert_cmd() const {
    const ShapeId from = shape();
    if (o_.to.empty()) throw CLI::RequiredError("--to");
    const ShapeId target = parse_shape_id(o_.to);
    const Instance r = convert(json::parse_instance(o_.args.at(0), from), target);
    emit(Json{{"shape", std::string(to_string(target))}, {"instance", json::to_json(r)}},
         json::to_text(r));
  }

  void compare_cmd() const {
    const ShapeId s = shape();
    const Instance i = json::parse_instance(o_.args.at(0), s);
    const Instance j = json::parse_instance(o_.args.at(1), s);
    const bool ieq = instance_eq(i, j);
    const bool leq = label_eq(i, j);
    emit(Json{{"shape", std::string(to_string(s))}, {"instance_eq", ieq}, {"label_eq", leq}},
         std::string("instance_eq: ") + (ieq ? "true" : "false") +
             "\nlabel_eq: " + (leq ? "true" : "false"));
  }

  void normality_cmd() const {
    std::vector<ShapeId> shapes;
    if (o_.shape.empty()) {
      shapes.assign(kAllShapes.begin(), kAllShapes.end());
    } else {
      shapes.push_back(shape());
    }
    Json rows = Json::array();
    std::ostringstream text;
    for (ShapeId s : shapes) {
      const NormalityReport r = check_normality(s, o_.bound);
      rows.push_back(json::to_json(r, s, o_.bound));
      text << (rows.size() > 1 ? "\n" : "") << to_string(s) << ": "
           << (r.normal ? "normal" : "subnormal");
      if (r.witness) {
        text << " (witness " << json::to_text(r.witness->first) << " ~ "
             << json::to_text(r.witness->second) << ")";
      }
    }
    emit(rows.size() == 1 ? rows[0] : rows, text.str());
  }

  void rns_eval_cmd() const {
    const RatioNumber r = rn_eval(term(0), rn_config());
    emit(json::to_json(Instance(r)), json::to_text(Instance(r)));
  }

  void rns_part_cmd(bool numerator_part) const {
    const Instance in = json::parse_instance(o_.args.at(0), ShapeId::rat_rns);
    RatioNumber x = std::get<RatioNumber>(in);
    const ShapeId int_shape = rn_config().int_shape;
    if (int_shape != ShapeId::int_signed) {
      x = {int_encode(detail_int(x.first), int_shape), int_encode(detail_int(x.second), int_shape)};
    }
    const RatioNumber r = numerator_part ? rn_num(x) : rn_denom(x);
    emit(json::to_json(Instance(r)), json::to_text(Instance(r)));
  }

  void check_cmd(const std::string& path) const {
    fractalk::CheckConfig config;
    if (!o_.shape.empty()) config.shape = parse_shape_id(o_.shape);
    const fractalk::Verdict v = fractalk::check_text(read_file(path), config);
    Json j = json::to_json(v);
    j["script"] = fs::path(path).filename().string();
    emit(j, verdict_text(v));
  }

  void demo_cmd() const {
    std::vector<fs::path> files;
    if (!fs::is_directory(o_.dir)) throw IoError("corpus directory not found: " + o_.dir);
    for (const auto& e : fs::directory_iterator(o_.dir)) {
      if (e.path().extension() == ".ftk") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    Json all = Json::array();
    std::ostringstream text;
    for (const fs::path& f : files) {
      const fractalk::Verdict v = fractalk::check_text(read_file(f.string()));
      Json j = json::to_json(v);
      j["script"] = f.filename().string();
      all.push_back(j);
      text << (all.size() > 1 ? "\n\n" : "") << "== " << f.filename().string() << " ==\n"
           << verdict_text(v);
    }
    emit(all, text.str());
  }

 private:
  static Integer detail_int(const IntInstance& x) {
    const auto& s = std::get<SignedInt>(x);
    return s.sign * parse_integer(s.magnitude);
  }

  static std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  static std::string verdict_text(const fractalk::Verdict& v) {
    std::ostringstream text;
    for (const auto& s : v.steps) {
      text << s.index << " [" << to_string(s.level) << "] " << fractalk::to_string(s.status)
           << "  " << s.text;
      if (!s.reason.empty()) text << "\n    " << s.reason;
      text << '\n';
    }
    if (v.sound) {
      text << "verdict: sound";
    } else {
      text << "verdict: paradox-blocked at step " << *v.blocked_step;
    }
    return text.str();
  }

  const Options& o_;
  std::ostream& out_;
};

void report(const Json& error) { std::cerr << error.dump() << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Workbench for fracterms, fracvalues and fractalk scripts", "fracterm"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Print JSON instead of text");
  app.add_option("--format", o.format, "Division notation for terms")
      ->check(CLI::IsMember({"inline", "colon", "frac", "latex-fraction"}));

  auto term_arg = [&](CLI::App* cmd, const char* what) {
    cmd->add_option("term", o.arg0, what)->required();
  };

  auto* parse_cmd = app.add_subcommand("parse", "Parse and print a term");
  term_arg(parse_cmd, "Term");
  auto* classify_cmd = app.add_subcommand("classify", "Taxonomy flags of a term");
  term_arg(classify_cmd, "Term");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a closed term to a fracvalue");
  term_arg(eval_cmd, "Closed term");
  eval_cmd->add_option("--policy", o.policy, "Division-by-zero policy")
      ->check(CLI::IsMember({"partial", "suppes-ono", "common-meadow"}));
  eval_cmd->add_option("--shape", o.shape, "Rational shape");
  eval_cmd->add_option("--int-shape", o.int_shape, "Integer shape under rat.rns");
  eval_cmd->add_flag("--verbatim-add", o.verbatim_add, "Literal ratio-number addition rule");

  auto* flatten_cmd = app.add_subcommand("flatten", "Rewrite into a flat fracterm");
  term_arg(flatten_cmd, "Closed term");
  flatten_cmd->add_flag("--fold", o.fold, "Evaluate numerator and denominator to numerals");

  auto* simplify_cmd = app.add_subcommand("simplify", "Simplify a simple fracterm");
  term_arg(simplify_cmd, "Simple fracterm");
  simplify_cmd->add_flag("--demote", o.demote, "Print n/1 as n");

  auto* add_cmd = app.add_subcommand("add", "Addition family on two terms");
  add_cmd->add_option("lhs", o.arg0, "First term")->required();
  add_cmd->add_option("rhs", o.arg1, "Second term")->required();
  auto* strategy = add_cmd->add_option("--strategy", o.strategy, "Addition strategy")
                       ->check(CLI::IsMember({"cross", "same-denom", "numeral", "trivial"}));
  add_cmd->add_flag("--all", o.all, "Run every applicable strategy")->excludes(strategy);

  auto* shape_cmd = app.add_subcommand("shape", "Number shapes");
  shape_cmd->require_subcommand(1);
  shape_cmd->fallthrough();
  shape_cmd->add_option("--shape", o.shape, "Shape id");
  auto* encode_cmd = shape_cmd->add_subcommand("encode", "Canonical instance of an integer");
  encode_cmd->add_option("k", o.arg0, "Integer")->required();
  auto* convert_cmd = shape_cmd->add_subcommand("convert", "Label-preserving conversion");
  convert_cmd->add_option("instance", o.arg0, "Instance of --shape")->required();
  convert_cmd->add_option("--to", o.to, "Target shape")->required();
  auto* compare_cmd = shape_cmd->add_subcommand("compare", "Instance and label equality");
  compare_cmd->add_option("lhs", o.arg0, "First instance")->required();
  compare_cmd->add_option("rhs", o.arg1, "Second instance")->required();
  auto* normality_cmd = shape_cmd->add_subcommand("normality", "Bounded normality check");
  normality_cmd->add_option("--bound", o.bound, "Magnitude bound")
      ->check(CLI::Range(1u, 1000u));

  auto* rns_cmd = app.add_subcommand("rns", "Ratio-number algebra");
  rns_cmd->require_subcommand(1);
  rns_cmd->fallthrough();
  rns_cmd->add_option("--int-shape", o.int_shape, "Integer shape of the pair components");
  rns_cmd->add_flag("--verbatim-add", o.verbatim_add, "Literal ratio-number addition rule");
  auto* rns_eval_cmd = rns_cmd->add_subcommand("eval", "Interpret a closed term");
  term_arg(rns_eval_cmd, "Closed term, Num and Denom allowed");
  auto* rns_num_cmd = rns_cmd->add_subcommand("num", "Num of a pair");
  rns_num_cmd->add_option("pair", o.arg0, "Pair [a, b]")->required();
  auto* rns_denom_cmd = rns_cmd->add_subcommand("denom", "Denom of a pair");
  rns_denom_cmd->add_option("pair", o.arg0, "Pair [a, b]")->required();

  auto* fractalk_cmd = app.add_subcommand("fractalk", "Fractalk scripts");
  fractalk_cmd->require_subcommand(1);
  fractalk_cmd->fallthrough();
  auto* check_cmd = fractalk_cmd->add_subcommand("check", "Check a script");
  check_cmd->add_option("script", o.arg0, "Script file")->required();
  check_cmd->add_option("--shape", o.shape, "Rational shape (overrides %shape)");

  auto* demo_cmd = app.add_subcommand("demo", "Check every script in the corpus");
  demo_cmd->add_option("--dir", o.dir, "Corpus directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  o.args = {o.arg0, o.arg1};
  Runner run(o, std::cout);
  try {
    if (*parse_cmd) run.parse_cmd();
    else if (*classify_cmd) run.classify_cmd();
    else if (*eval_cmd) run.eval_cmd();
    else if (*flatten_cmd) run.flatten_cmd();
    else if (*simplify_cmd) run.simplify_cmd();
    else if (*add_cmd) run.add_cmd();
    else if (*encode_cmd) run.encode_cmd();
    else if (*convert_cmd) run.convert_cmd();
    else if (*compare_cmd) run.compare_cmd();
    else if (*normality_cmd) run.normality_cmd();
    else if (*rns_eval_cmd) run.rns_eval_cmd();
    else if (*rns_num_cmd) run.rns_part_cmd(true);
    else if (*rns_denom_cmd) run.rns_part_cmd(false);
    else if (*check_cmd) run.check_cmd(o.args.at(0));
    else if (*demo_cmd) run.demo_cmd();
  } catch (const Error& e) {
    report(json::to_json(e));
    return kDomainError;
  } catch (const IoError& e) {
    report(Json{{"error", {{"kind", "IOError"}, {"message", e.what()}}}});
    return kDomainError;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  }
  return 0;
}
