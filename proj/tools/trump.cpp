// Command-line front end: check the power-mean/entropy conditions, decide
// the trumping relation, verify a supplied catalyst, or dump the R curve.
//
// Exit codes: 0 satisfied/trumped/verified, 1 violated/not-trumped/refuted,
// 2 inconclusive (or conditions certified without a constructed catalyst),
// 64 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "trump/serialize.hpp"

namespace {

using namespace trump;

struct CommonArgs {
  std::string x_csv, y_csv, input_file;
  long precision_bits = 128;
  long max_precision_bits = 2048;
  double nu_min = -40, nu_max = 40;
  int grid = 400;
  std::string mode = "strict";
};

void add_common(CLI::App *cmd, CommonArgs &a, bool with_mode) {
  cmd->add_option("--x", a.x_csv, "sequence x, comma-separated exact literals");
  cmd->add_option("--y", a.y_csv, "sequence y, comma-separated exact literals");
  cmd->add_option("--input", a.input_file,
                  "JSON file with keys x, y (and optionally c)");
  cmd->add_option("--precision-bits", a.precision_bits,
                  "base enclosure precision");
  cmd->add_option("--max-precision-bits", a.max_precision_bits,
                  "precision escalation cap");
  cmd->add_option("--nu-min", a.nu_min, "lower end of the nu grid");
  cmd->add_option("--nu-max", a.nu_max, "upper end of the nu grid");
  cmd->add_option("--grid", a.grid, "number of grid points");
  if (with_mode)
    cmd->add_option("--mode", a.mode, "strict or closure");
}

json read_input(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open input file: " + path);
  json j;
  in >> j;
  return j;
}

std::pair<ProbSequence, ProbSequence> load_pair(const CommonArgs &a) {
  if (!a.input_file.empty()) {
    json j = read_input(a.input_file);
    return {sequence_from_json(j.at("x")), sequence_from_json(j.at("y"))};
  }
  if (a.x_csv.empty() || a.y_csv.empty())
    throw std::invalid_argument("provide --x and --y, or --input");
  return {ProbSequence(parse_rat_list(a.x_csv)),
          ProbSequence(parse_rat_list(a.y_csv))};
}

ConditionOptions condition_options(const CommonArgs &a) {
  ConditionOptions o;
  o.nu_min = Rat(a.nu_min);
  o.nu_max = Rat(a.nu_max);
  o.grid = a.grid;
  o.precision = a.precision_bits;
  o.max_precision = a.max_precision_bits;
  return o;
}

CheckMode parse_mode(const std::string &m) {
  if (m == "strict")
    return CheckMode::strict;
  if (m == "closure")
    return CheckMode::closure;
  throw std::invalid_argument("mode must be strict or closure");
}

int run_check(const CommonArgs &a) {
  auto [x, y] = load_pair(a);
  ConditionReport rep =
      check_conditions(x, y, parse_mode(a.mode), condition_options(a));
  std::cout << report_to_json(rep).dump(2) << "\n";
  switch (rep.verdict) {
  case Verdict::satisfied:
    return 0;
  case Verdict::violated:
    return 1;
  case Verdict::inconclusive:
    return 2;
  }
  return 2;
}

int run_decide(const CommonArgs &a, long max_degree, bool no_construct,
               const std::string &cert_file) {
  auto [x, y] = load_pair(a);
  ReductionOptions opts;
  opts.cond = condition_options(a);
  opts.max_degree = max_degree;
  opts.precision = a.precision_bits;
  opts.construct = !no_construct;
  TrumpingReport rep = decide_trumping(x, y, opts);
  json out = trumping_to_json(rep);
  std::cout << out.dump(2) << "\n";
  if (!cert_file.empty() && rep.catalyst) {
    std::ofstream f(cert_file);
    if (!f)
      throw std::invalid_argument("cannot write certificate file: " + cert_file);
    json cert;
    cert["x"] = sequence_to_json(x);
    cert["y"] = sequence_to_json(y);
    cert["catalyst"] = catalyst_to_json(*rep.catalyst);
    if (rep.certificate)
      cert["certificate_b"] = poly_to_json(*rep.certificate);
    f << cert.dump(2) << "\n";
  }
  switch (rep.status) {
  case TrumpingStatus::trumped:
    return 0;
  case TrumpingStatus::not_trumped:
    return 1;
  default:
    return 2;
  }
}

int run_verify(const CommonArgs &a, const std::string &c_csv,
               const std::string &catalyst_file) {
  auto [x, y] = load_pair(a);
  std::optional<Catalyst> cat;
  std::optional<ProbSequence> cseq;
  if (!catalyst_file.empty()) {
    json j = read_input(catalyst_file);
    if (j.contains("catalyst"))
      j = j.at("catalyst");
    if (j.is_array())
      cseq = sequence_from_json(j);
    else
      cat = catalyst_from_json(j);
  } else if (!c_csv.empty()) {
    cseq = ProbSequence(parse_rat_list(c_csv));
  } else if (!a.input_file.empty()) {
    json j = read_input(a.input_file);
    if (j.contains("c"))
      cseq = sequence_from_json(j.at("c"));
    else if (j.contains("catalyst"))
      cat = catalyst_from_json(j.at("catalyst"));
  }
  if (!cat && !cseq)
    throw std::invalid_argument("provide --c or --catalyst");
  VerifyOutcome v = cseq ? verify_catalyst(x, y, *cseq)
                         : verify_catalyst(x, y, *cat, a.precision_bits);
  switch (v) {
  case VerifyOutcome::verified:
    std::cout << "verified\n";
    return 0;
  case VerifyOutcome::refuted:
    std::cout << "refuted\n";
    return 1;
  case VerifyOutcome::inconclusive:
    std::cout << "inconclusive\n";
    return 2;
  }
  return 2;
}

int run_curve(const CommonArgs &a) {
  auto [x, y] = load_pair(a);
  ConditionOptions o = condition_options(a);
  std::vector<ConditionSample> samples;
  const int n = std::max(2, o.grid);
  for (int j = 0; j < n; ++j) {
    Rat nu = o.nu_min + (o.nu_max - o.nu_min) * Rat(j, n - 1);
    samples.push_back({nu, r_function(x, y, nu, o.precision)});
  }
  samples_to_csv(samples, std::cout);
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact decision of the catalytic majorization (trumping) "
               "relation for nonnegative rational sequences"};
  app.require_subcommand(1);

  CommonArgs check_args, decide_args, verify_args, curve_args;
  long max_degree = 512;
  bool no_construct = false;
  std::string cert_file, c_csv, catalyst_file;

  CLI::App *check = app.add_subcommand(
      "check", "evaluate the power-mean and entropy conditions");
  add_common(check, check_args, true);

  CLI::App *decide = app.add_subcommand(
      "decide", "decide the trumping relation and construct a catalyst");
  add_common(decide, decide_args, false);
  decide->add_option("--max-degree", max_degree, "multiplier degree cap");
  decide->add_flag("--no-construct", no_construct,
                   "stop after the condition check");
  decide->add_option("--certificate", cert_file,
                     "write the catalyst certificate to this file");

  CLI::App *verify =
      app.add_subcommand("verify", "verify a supplied catalyst exactly");
  add_common(verify, verify_args, false);
  verify->add_option("--c", c_csv, "catalyst sequence, comma-separated");
  verify->add_option("--catalyst", catalyst_file,
                     "catalyst JSON (multiplicity form or element array)");

  CLI::App *curve =
      app.add_subcommand("curve", "print the R curve as CSV on stdout");
  add_common(curve, curve_args, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0)
      return app.exit(e); // --help
    app.exit(e);
    return 64;
  }

  try {
    if (check->parsed())
      return run_check(check_args);
    if (decide->parsed())
      return run_decide(decide_args, max_degree, no_construct, cert_file);
    if (verify->parsed())
      return run_verify(verify_args, c_csv, catalyst_file);
    if (curve->parsed())
      return run_curve(curve_args);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  }
  return 64;
}
