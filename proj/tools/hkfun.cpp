// hkfun command-line front end.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hkfun/errors.hpp"
#include "hkfun/report.hpp"

namespace {

constexpr int kInputError = 2;
constexpr int kBudgetError = 3;
constexpr int kSelectionError = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hkfun::PreconditionError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::uint64_t> parse_q_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    std::uint64_t q = 0;
    try {
      q = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw hkfun::PreconditionError("--qlist entry '" + item + "' is not an integer");
    out.push_back(q);
  }
  if (out.empty()) throw hkfun::PreconditionError("--qlist is empty");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert-Kunz and generalized Hilbert-Kunz functions over prime fields"};
  app.set_version_flag("--version", std::string(hkfun::kToolName) + " " + hkfun::kToolVersion);

  std::string command, input, ring_text, ideal_text, qlist, format = "table", out_path, combination;
  unsigned n_max = 0;
  std::size_t budget = 0;
  hkfun::JobSpec spec;
  app.add_option("command", command, "hk, ghk, lcprobe, decompose, verify or selfcheck")
      ->required()
      ->check(CLI::IsMember({"hk", "ghk", "lcprobe", "decompose", "verify", "selfcheck"}));
  app.add_option("--input", input, "input document with 'ring' and 'ideal' lines");
  app.add_option("--ring", ring_text, "inline ring header, e.g. \"ring p=2 vars=x,y\"");
  app.add_option("--ideal", ideal_text, "inline generators, e.g. \"x^2, x*y\"");
  auto* nmax_opt = app.add_option("--nmax", n_max, "largest n in q = p^n");
  app.add_option("--qlist", qlist, "comma separated powers of p");
  app.add_option("--seed", spec.seed, "seed for random element selection");
  app.add_option("--degree", spec.degree, "starting degree of random candidates")->check(CLI::PositiveNumber);
  app.add_option("--retries", spec.retries, "random candidates per degree")->check(CLI::PositiveNumber);
  app.add_option("--method", spec.method, "decompose method")->check(CLI::IsMember({"general", "dim1", "dim2"}));
  app.add_option("--element", spec.elements, "preferred candidate element (repeatable)")->allow_extra_args(false);
  app.add_option("--combination", combination, "decompose JSON report to verify");
  app.add_option("--format", format, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--out", out_path, "write the report here instead of stdout");
  auto* budget_opt = app.add_option("--budget", budget, "S-pair budget per Groebner basis")->check(CLI::PositiveNumber);
  app.add_flag("--ratios", spec.ratios, "add value/q^d columns to series");
  app.add_flag("--timing", spec.timing, "report wall time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    spec.command = hkfun::parse_command(command);
    if (!input.empty()) hkfun::parse_input_document(read_file(input), spec);
    if (!ring_text.empty()) spec.ring_text = ring_text;
    if (!ideal_text.empty()) spec.ideal_text = ideal_text;
    if (*nmax_opt) spec.n_max = n_max;
    if (!qlist.empty()) spec.q_list = parse_q_list(qlist);
    if (*budget_opt) spec.budget = budget;
    if (!combination.empty()) spec.combination_text = read_file(combination);

    hkfun::ReportDocument doc = hkfun::run_job(spec);
    std::string text = hkfun::emit_report(doc, hkfun::parse_format(format));
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw hkfun::PreconditionError("cannot write '" + out_path + "'");
      out << text;
      if (!out) throw hkfun::PreconditionError("failed writing '" + out_path + "'");
    }
    return hkfun::exit_status(doc);
  } catch (const hkfun::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudgetError;
  } catch (const hkfun::ElementSelectionFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSelectionError;
  } catch (const hkfun::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const hkfun::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const hkfun::RingMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
