#include "solk/cli.hpp"

#include <CLI11.hpp>

#include "solk/errors.hpp"
#include "solk/germs.hpp"
#include "solk/ktheory.hpp"
#include "solk/limits.hpp"
#include "solk/model.hpp"
#include "solk/report.hpp"
#include "solk/sft.hpp"

namespace solk::cli {

namespace {

struct Command {
  std::string input;
  std::string matrix;
  std::string order = "lex";
  bool json = false;
};

ClassOrder parse_order(const std::string& s) {
  return s == "paper" ? ClassOrder::paper : ClassOrder::lex;
}

// Loads and validates; prints findings and returns false on errors.
bool load_valid(const Command& cmd, Presentation& p, std::ostream& out, std::ostream& err) {
  p = load_presentation(cmd.input);
  ValidationReport v = validate(p);
  if (!v.ok) {
    if (cmd.json) {
      out << dump(Json{{"validation", validation_json(v)}});
    } else {
      err << validation_text(v);
    }
    return false;
  }
  for (const auto& f : v.findings) err << "warning [" << f.code << "] " << f.message << '\n';
  return true;
}

int run_validate(const Command& cmd, std::ostream& out) {
  Presentation p = load_presentation(cmd.input);
  ValidationReport v = validate(p);
  out << (cmd.json ? dump(validation_json(v)) : validation_text(v));
  return v.ok ? kExitOk : kExitInvalid;
}

int run_classes(const Command& cmd, std::ostream& out, std::ostream& err) {
  Presentation p;
  if (!load_valid(cmd, p, out, err)) return kExitInvalid;
  QuotientModel q = occurring_classes(p, parse_order(cmd.order));
  QuotientSummary s = quotient_summary(p, q);
  out << (cmd.json ? dump(classes_json(p, q, s)) : classes_text(p, q, s));
  return kExitOk;
}

int run_ktheory(const Command& cmd, std::ostream& out, std::ostream& err) {
  Presentation p;
  if (!load_valid(cmd, p, out, err)) return kExitInvalid;
  KTheoryReport r = ktheory_report(p, parse_order(cmd.order));
  out << (cmd.json ? dump(ktheory_json(p, r)) : ktheory_text(p, r));
  return kExitOk;
}

int run_sft(const Command& cmd, std::ostream& out, std::ostream& err) {
  SftPresentation s = make_sft(parse_matrix(cmd.matrix));
  ValidationReport v = validate_sft(s);
  if (!v.ok) {
    if (cmd.json) {
      out << dump(Json{{"validation", validation_json(v)}});
    } else {
      err << validation_text(v);
    }
    return kExitInvalid;
  }
  for (const auto& f : v.findings) err << "warning [" << f.code << "] " << f.message << '\n';
  SftKTheory k = sft_dimension_group(s);
  out << (cmd.json ? dump(sft_json(s, k)) : sft_text(s, k));
  return kExitOk;
}

int run_limit(const Command& cmd, std::ostream& out) {
  IntMatrix t = parse_matrix(cmd.matrix);
  if (!t.is_square()) throw ParseError(0, "limit needs a square matrix");
  LimitGroupPtr g = make_limit(t);
  out << (cmd.json ? dump(limit_json(*g)) : limit_text(*g));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"K-theory of one-dimensional solenoids and dimension groups of SFTs", "solk"};
  app.require_subcommand(1);
  Command cmd;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", cmd.json, "Emit a JSON object"); };
  auto add_order = [&](CLI::App* sub) {
    sub->add_option("--order", cmd.order, "Class order: lex (default) or paper")
        ->check(CLI::IsMember({"lex", "paper"}));
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check a presentation file");
  validate_cmd->add_option("file", cmd.input, "Presentation file")->required();
  add_json(validate_cmd);

  auto* classes_cmd = app.add_subcommand("classes", "Germ classes and the induced map");
  classes_cmd->add_option("file", cmd.input, "Presentation file")->required();
  add_order(classes_cmd);
  add_json(classes_cmd);

  auto* ktheory_cmd = app.add_subcommand("ktheory", "Full K-theory report");
  ktheory_cmd->add_option("file", cmd.input, "Presentation file")->required();
  add_order(ktheory_cmd);
  add_json(ktheory_cmd);

  auto* sft_cmd = app.add_subcommand("sft", "Dimension group of a subshift of finite type");
  sft_cmd->add_option("--matrix", cmd.matrix, "Adjacency matrix, e.g. \"1,1;1,0\"")->required();
  add_json(sft_cmd);

  auto* limit_cmd = app.add_subcommand("limit", "Classify a stationary inductive limit");
  limit_cmd->add_option("--matrix", cmd.matrix, "Square integer matrix, e.g. \"2,1;1,1\"")->required();
  add_json(limit_cmd);

  std::vector<std::string> rest(args.rbegin(), args.rend());
  if (!rest.empty()) rest.pop_back();  // program name
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate_cmd) return run_validate(cmd, out);
    if (*classes_cmd) return run_classes(cmd, out, err);
    if (*ktheory_cmd) return run_ktheory(cmd, out, err);
    if (*sft_cmd) return run_sft(cmd, out, err);
    if (*limit_cmd) return run_limit(cmd, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitUsage;
}

}  // namespace solk::cli
