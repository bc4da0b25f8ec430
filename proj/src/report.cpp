#include "hkfun/report.hpp"

#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>

#include "hkfun/errors.hpp"
#include "hkfun/parse.hpp"
#include "json.hpp"

namespace hkfun {

using Json = nlohmann::ordered_json;

namespace {

constexpr const char* kCommandNames[] = {"hk", "ghk", "lcprobe", "decompose", "verify", "selfcheck"};

// ParseError text is "parse error at position N: message"; keep the message.
std::string parse_message(const ParseError& e) {
  std::string what = e.what();
  auto colon = what.find(": ");
  return colon == std::string::npos ? what : what.substr(colon + 2);
}

[[noreturn]] void rethrow_shifted(const ParseError& e, std::size_t offset, const std::string& context) {
  throw ParseError(offset + e.position(), context + parse_message(e));
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::size_t skip_spaces(std::string_view s, std::size_t i) {
  while (i < s.size() && is_space(s[i])) ++i;
  return i;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto end = text.find(sep, start);
    out.emplace_back(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && is_space(s[a])) ++a;
  while (b > a && is_space(s[b - 1])) --b;
  return std::string(s.substr(a, b - a));
}

SeriesResult run_series(const Ideal& ideal, bool classical, unsigned n_max, const std::vector<std::uint64_t>& qs,
                        bool ratios) {
  SeriesResult out{qs.empty() ? (classical ? hk_series(ideal, n_max) : ghk_series(ideal, n_max))
                               : (classical ? hk_series(ideal, qs) : ghk_series(ideal, qs)),
                   {}};
  if (ratios) out.ratios = multiplicity_estimate(out.series);
  return out;
}

std::vector<Polynomial> parse_elements(const std::vector<std::string>& texts, const RingSpecPtr& ring) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) {
    try {
      out.push_back(ring->parse(t));
    } catch (const ParseError& e) {
      rethrow_shifted(e, 0, "element '" + t + "': ");
    }
  }
  return out;
}

Json ring_json(const RingSpec& ring) {
  Json quotient = Json::array();
  for (const auto& f : ring.defining_ideal()) quotient.push_back(to_string(f));
  return Json{{"p", ring.characteristic()}, {"vars", ring.variables()}, {"quotient", quotient}};
}

RingSpecPtr ring_from_json(const Json& j) {
  std::vector<std::string> quotient;
  if (j.contains("quotient"))
    for (const auto& f : j.at("quotient")) quotient.push_back(f.get<std::string>());
  return RingSpec::create(j.at("p").get<std::uint32_t>(), j.at("vars").get<std::vector<std::string>>(), quotient);
}

Json terms_json(const SignedCombination& c) {
  Json terms = Json::array();
  for (const auto& t : c.terms()) terms.push_back(Json{{"coefficient", t.coefficient}, {"ideal", t.ideal.to_string()}});
  return terms;
}

Json certificate_json(const Certificate& cert) {
  Json elements = Json::array();
  for (const auto& e : cert.elements) {
    Json checks = Json::array();
    for (const auto& c : e.checks) {
      checks.push_back(Json{{"q", c.q},
                            {"colon_is_saturation", c.colon_is_saturation},
                            {"dimension_before", c.dimension_before},
                            {"dimension_after", c.dimension_after ? Json(*c.dimension_after) : Json(nullptr)},
                            {"pass", c.pass}});
    }
    elements.push_back(Json{{"family", e.family},
                            {"element", e.element},
                            {"base_form", e.base_form},
                            {"exponent", e.exponent},
                            {"degree", e.degree},
                            {"attempts", e.attempts},
                            {"checks", checks},
                            {"pass", e.pass()}});
  }
  Json steps = Json::array();
  for (const auto& s : cert.steps) {
    Json checks = Json::array();
    for (const auto& c : s.checks) checks.push_back(Json{{"q", c.q}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
    steps.push_back(Json{{"rule", s.rule},
                         {"expression", s.expression},
                         {"coefficient", s.coefficient},
                         {"checks", checks},
                         {"pass", s.pass()}});
  }
  Json checks = Json::array();
  for (const auto& c : cert.checks)
    checks.push_back(Json{{"q", c.q}, {"combination", c.combination}, {"ghk", c.ghk}, {"pass", c.pass}});
  return Json{{"seed", cert.seed},   {"q_list", cert.q_list}, {"elements", elements},
              {"steps", steps},      {"checks", checks},      {"certified", cert.certified()}};
}

Json payload_json(const ReportDocument& doc, Json& root) {
  return std::visit(
      [&](const auto& r) -> Json {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, SeriesResult>) {
          Json entries = Json::array();
          for (std::size_t i = 0; i < r.series.entries.size(); ++i) {
            const auto& e = r.series.entries[i];
            Json row{{"n", e.n}, {"q", e.q}, {"value", e.value}};
            if (!r.ratios.empty()) {
              row["ratio_num"] = r.ratios[i].ratio.num;
              row["ratio_den"] = r.ratios[i].ratio.den;
            }
            entries.push_back(row);
          }
          return Json{{"kind", to_string(r.series.kind)}, {"entries", entries}};
        } else if constexpr (std::is_same_v<T, LCReport>) {
          Json per_q = Json::array();
          for (const auto& e : r.per_q) per_q.push_back(Json{{"q", e.q}, {"n_q", e.n_q}, {"ratio", e.ratio}});
          return Json{{"per_q", per_q}, {"inferred_n", r.inferred_n}, {"verdict", to_string(r.verdict)}};
        } else if constexpr (std::is_same_v<T, DecomposeResult>) {
          const auto& d = r.decomposition;
          root["certificate"] = certificate_json(d.certificate);
          return Json{{"method", r.method},
                      {"dimension", d.dimension ? Json(*d.dimension) : Json(nullptr)},
                      {"terms", terms_json(d.combination)},
                      {"certified", d.certificate.certified()}};
        } else if constexpr (std::is_same_v<T, VerifyResult>) {
          root["certificate"] = certificate_json(r.certificate);
          bool ok = r.certificate.certified();
          return Json{{"terms", terms_json(r.combination)}, {"certified", ok}, {"verdict", ok ? "verified" : "failed"}};
        } else {
          Json checks = Json::array();
          for (const auto& c : r.items) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
          return Json{{"checks", checks}, {"all_pass", r.all_pass()}};
        }
      },
      doc.payload);
}

std::string emit_json(const ReportDocument& doc) {
  Json root;
  root["command"] = to_string(doc.job.command);
  if (doc.ring) {
    root["ring"] = ring_json(*doc.ring);
    root["ideal"] = doc.ideal->to_string();
    root["params"] = Json{{"n_max", doc.n_max},
                          {"q_list", doc.q_list},
                          {"seed", doc.job.seed},
                          {"degree", doc.job.degree},
                          {"retries", doc.job.retries}};
  }
  Json result = payload_json(doc, root);
  root["result"] = result;
  // keep certificate after result
  if (root.contains("certificate")) {
    Json cert = root["certificate"];
    root.erase("certificate");
    root["certificate"] = cert;
  }
  root["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
  if (doc.seconds) root["timing"] = Json{{"seconds", *doc.seconds}};
  return root.dump(2) + "\n";
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string emit_csv(const ReportDocument& doc) {
  std::ostringstream out;
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, SeriesResult>) {
          out << "n,q,value" << (r.ratios.empty() ? "" : ",ratio_num,ratio_den") << "\n";
          for (std::size_t i = 0; i < r.series.entries.size(); ++i) {
            const auto& e = r.series.entries[i];
            out << e.n << ',' << e.q << ',' << e.value;
            if (!r.ratios.empty()) out << ',' << r.ratios[i].ratio.num << ',' << r.ratios[i].ratio.den;
            out << "\n";
          }
        } else if constexpr (std::is_same_v<T, LCReport>) {
          out << "q,n_q,ratio\n";
          for (const auto& e : r.per_q) out << e.q << ',' << e.n_q << ',' << e.ratio << "\n";
        } else if constexpr (std::is_same_v<T, DecomposeResult> || std::is_same_v<T, VerifyResult>) {
          const SignedCombination* c;
          if constexpr (std::is_same_v<T, DecomposeResult>)
            c = &r.decomposition.combination;
          else
            c = &r.combination;
          out << "coefficient,ideal\n";
          for (const auto& t : c->terms()) out << t.coefficient << ',' << csv_quote(t.ideal.to_string()) << "\n";
        } else {
          out << "name,pass,detail\n";
          for (const auto& c : r.items) out << csv_quote(c.name) << ',' << (c.pass ? 1 : 0) << ',' << csv_quote(c.detail) << "\n";
        }
      },
      doc.payload);
  return out.str();
}

void table_certificate(std::ostringstream& out, const Certificate& cert) {
  for (const auto& e : cert.elements)
    out << "element " << e.element << " for " << e.family << " after " << e.attempts << " attempt(s): "
        << (e.pass() ? "pass" : "FAIL") << "\n";
  std::size_t passed = 0;
  for (const auto& s : cert.steps) passed += s.pass();
  if (!cert.steps.empty()) out << "rewrite steps " << passed << "/" << cert.steps.size() << " pass\n";
  out << std::setw(6) << "q" << std::setw(14) << "combination" << std::setw(14) << "ghk"
      << "  verdict\n";
  for (const auto& c : cert.checks)
    out << std::setw(6) << c.q << std::setw(14) << c.combination << std::setw(14) << c.ghk << "  "
        << (c.pass ? "pass" : "FAIL") << "\n";
  out << (cert.certified() ? "certified" : "NOT certified") << " (seed " << cert.seed << ")\n";
}

void table_terms(std::ostringstream& out, const SignedCombination& c) {
  if (c.empty()) out << "  (empty combination)\n";
  for (const auto& t : c.terms()) out << std::setw(6) << t.coefficient << "  f_HK(R/(" << t.ideal.to_string() << "))\n";
}

std::string emit_table(const ReportDocument& doc) {
  std::ostringstream out;
  if (doc.ring) {
    out << doc.ring->header() << "\n";
    out << "ideal " << doc.ideal->to_string() << "\n";
  }
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, SeriesResult>) {
          out << to_string(r.series.kind) << " series\n";
          out << std::setw(4) << "n" << std::setw(10) << "q" << std::setw(16) << "value";
          if (!r.ratios.empty()) out << std::setw(16) << "value/q^d";
          out << "\n";
          for (std::size_t i = 0; i < r.series.entries.size(); ++i) {
            const auto& e = r.series.entries[i];
            out << std::setw(4) << e.n << std::setw(10) << e.q << std::setw(16) << e.value;
            if (!r.ratios.empty()) out << std::setw(16) << r.ratios[i].ratio.to_string();
            out << "\n";
          }
        } else if constexpr (std::is_same_v<T, LCReport>) {
          out << std::setw(10) << "q" << std::setw(8) << "N_q" << std::setw(14) << "ceil(N_q/q)" << "\n";
          for (const auto& e : r.per_q) out << std::setw(10) << e.q << std::setw(8) << e.n_q << std::setw(14) << e.ratio << "\n";
          out << "inferred N " << r.inferred_n << "\n";
          out << "verdict " << to_string(r.verdict) << "\n";
        } else if constexpr (std::is_same_v<T, DecomposeResult>) {
          out << "method " << r.method;
          if (r.decomposition.dimension) out << ", dim R/I = " << *r.decomposition.dimension;
          out << "\n";
          table_terms(out, r.decomposition.combination);
          table_certificate(out, r.decomposition.certificate);
        } else if constexpr (std::is_same_v<T, VerifyResult>) {
          table_terms(out, r.combination);
          table_certificate(out, r.certificate);
          out << "verdict " << (r.certificate.certified() ? "verified" : "failed") << "\n";
        } else {
          for (const auto& c : r.items)
            out << (c.pass ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
          out << (r.all_pass() ? "selfcheck passed" : "selfcheck FAILED") << "\n";
        }
      },
      doc.payload);
  if (doc.seconds) out << "time " << std::fixed << std::setprecision(3) << *doc.seconds << " s\n";
  return out.str();
}

}  // namespace

std::string to_string(Command command) { return kCommandNames[static_cast<int>(command)]; }

Command parse_command(std::string_view name) {
  for (int i = 0; i < 6; ++i)
    if (name == kCommandNames[i]) return static_cast<Command>(i);
  throw PreconditionError("unknown command '" + std::string(name) + "'");
}

std::string to_string(ReportFormat format) {
  switch (format) {
    case ReportFormat::kTable: return "table";
    case ReportFormat::kCsv: return "csv";
    case ReportFormat::kJson: return "json";
  }
  return "table";
}

ReportFormat parse_format(std::string_view name) {
  if (name == "table") return ReportFormat::kTable;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  throw PreconditionError("unknown format '" + std::string(name) + "' (expected table, csv or json)");
}

RingSpecPtr parse_ring_header(std::string_view text) {
  std::size_t i = skip_spaces(text, 0);
  if (text.substr(i, 4) != "ring") throw ParseError(i, "expected 'ring'");
  i += 4;
  std::optional<std::uint32_t> p;
  std::vector<std::string> vars;
  std::vector<std::pair<std::string, std::size_t>> quotient;
  while (true) {
    i = skip_spaces(text, i);
    if (i >= text.size()) break;
    auto eq = text.find('=', i);
    if (eq == std::string_view::npos) throw ParseError(i, "expected key=value");
    std::string key(text.substr(i, eq - i));
    std::size_t vstart = eq + 1;
    if (key == "quotient") {
      // runs to the end of the line; polynomials may contain spaces
      std::size_t start = vstart;
      for (const auto& piece : split(text.substr(vstart), ';')) {
        if (!trim(piece).empty()) quotient.emplace_back(piece, start);
        start += piece.size() + 1;
      }
      i = text.size();
      continue;
    }
    std::size_t vend = vstart;
    while (vend < text.size() && !is_space(text[vend])) ++vend;
    std::string_view value = text.substr(vstart, vend - vstart);
    if (key == "p") {
      std::uint64_t v = 0;
      if (value.empty()) throw ParseError(vstart, "expected a prime after p=");
      for (std::size_t k = 0; k < value.size(); ++k) {
        if (value[k] < '0' || value[k] > '9') throw ParseError(vstart + k, "expected a digit");
        v = v * 10 + static_cast<unsigned>(value[k] - '0');
        if (v > 0xffffffffu) throw ParseError(vstart, "characteristic too large");
      }
      p = static_cast<std::uint32_t>(v);
    } else if (key == "vars") {
      std::size_t start = vstart;
      for (const auto& name : split(value, ',')) {
        if (!is_identifier(name)) throw ParseError(start, "invalid variable name '" + name + "'");
        vars.push_back(name);
        start += name.size() + 1;
      }
    } else {
      throw ParseError(i, "unknown ring field '" + key + "'");
    }
    i = vend;
  }
  if (!p) throw ParseError(text.size(), "ring header needs p=<prime>");
  if (vars.empty()) throw ParseError(text.size(), "ring header needs vars=<names>");
  auto ambient = PolynomialRing::create(*p, vars);
  std::vector<Polynomial> defining;
  for (const auto& [piece, offset] : quotient) {
    try {
      defining.push_back(parse_polynomial(piece, ambient));
    } catch (const ParseError& e) {
      rethrow_shifted(e, offset, "");
    }
  }
  return std::make_shared<const RingSpec>(ambient, std::move(defining));
}

void parse_input_document(std::string_view text, JobSpec& spec) {
  bool have_ring = false, have_ideal = false;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    auto end = text.find('\n', line_start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(line_start, end - line_start);
    std::size_t i = skip_spaces(line, 0);
    if (i < line.size() && line[i] != '#') {
      std::string_view rest = line.substr(i);
      if (rest.substr(0, 4) == "ring" && (rest.size() == 4 || is_space(rest[4]))) {
        if (have_ring) throw ParseError(line_start + i, "duplicate ring line");
        try {
          parse_ring_header(rest);
        } catch (const ParseError& e) {
          rethrow_shifted(e, line_start + i, "");
        }
        spec.ring_text = trim(rest);
        have_ring = true;
      } else if (rest.substr(0, 5) == "ideal" && (rest.size() == 5 || is_space(rest[5]))) {
        if (!have_ring) throw ParseError(line_start + i, "ideal line before ring line");
        if (have_ideal) throw ParseError(line_start + i, "duplicate ideal line");
        auto ring = parse_ring_header(spec.ring_text);
        std::size_t body = skip_spaces(rest, 5);
        try {
          parse_polynomial_list(rest.substr(body), ring->ambient());
        } catch (const ParseError& e) {
          rethrow_shifted(e, line_start + i + body, "");
        }
        spec.ideal_text = trim(rest.substr(body));
        have_ideal = true;
      } else {
        throw ParseError(line_start + i, "expected a 'ring' or 'ideal' line");
      }
    }
    if (end == text.size()) break;
    line_start = end + 1;
  }
  if (!have_ring) throw ParseError(text.size(), "input has no ring line");
  if (!have_ideal) throw ParseError(text.size(), "input has no ideal line");
}

bool SelfcheckResult::all_pass() const {
  for (const auto& i : items)
    if (!i.pass) return false;
  return true;
}

SignedCombination read_combination(std::string_view json_text, const RingSpecPtr& ring) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte == 0 ? 0 : e.byte - 1, "combination report is not valid JSON");
  }
  if (!doc.contains("result") || !doc["result"].contains("terms") || !doc["result"]["terms"].is_array())
    throw PreconditionError("combination report has no result.terms");
  SignedCombination out(ring);
  try {
    for (const auto& t : doc["result"]["terms"]) {
      auto text = t.at("ideal").get<std::string>();
      out.add(t.at("coefficient").get<std::int64_t>(), Ideal(ring, parse_polynomial_list(text, ring->ambient())));
    }
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed combination term: ") + e.what());
  }
  return out;
}

ReportDocument run_job(const JobSpec& spec) {
  auto started = std::chrono::steady_clock::now();
  std::optional<ScopedGroebnerOptions> budget;
  if (spec.budget) budget.emplace(GroebnerOptions{*spec.budget});

  ReportDocument doc{spec, nullptr, std::nullopt, 0, {}, SelfcheckResult{}, std::nullopt};
  if (spec.command == Command::kSelfcheck) {
    doc.payload = run_selfcheck();
  } else {
    std::string ring_text = spec.ring_text, ideal_text = spec.ideal_text;
    std::optional<Json> report;
    if (spec.command == Command::kVerify) {
      if (spec.combination_text.empty()) throw PreconditionError("verify needs a combination report (--combination)");
      try {
        report = Json::parse(spec.combination_text);
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.byte == 0 ? 0 : e.byte - 1, "combination report is not valid JSON");
      }
    }
    if (ring_text.empty() && report && report->contains("ring")) {
      try {
        doc.ring = ring_from_json(report->at("ring"));
        ideal_text = report->value("ideal", "");
      } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("malformed ring in combination report: ") + e.what());
      }
    } else {
      if (ring_text.empty()) throw PreconditionError(to_string(spec.command) + " needs a ring and an ideal (--input)");
      doc.ring = parse_ring_header(ring_text);
    }
    doc.ideal = Ideal(doc.ring, parse_polynomial_list(ideal_text, doc.ring->ambient()));
    const std::uint32_t p = doc.ring->characteristic();
    doc.n_max = spec.n_max.value_or(default_n_max(p));
    std::vector<std::uint64_t> qs = normalize_q_list(p, spec.q_list);
    const Ideal& ideal = *doc.ideal;

    switch (spec.command) {
      case Command::kHk:
      case Command::kGhk: {
        auto series = run_series(ideal, spec.command == Command::kHk, doc.n_max, qs, spec.ratios);
        for (const auto& e : series.series.entries) doc.q_list.push_back(e.q);
        doc.payload = std::move(series);
        break;
      }
      case Command::kLcProbe: {
        auto lc = qs.empty() ? lc_probe(ideal, doc.n_max) : lc_probe(ideal, qs);
        for (const auto& e : lc.per_q) doc.q_list.push_back(e.q);
        doc.payload = std::move(lc);
        break;
      }
      case Command::kDecompose: {
        DecomposeOptions options;
        options.q_list = qs;
        options.seed = spec.seed;
        options.degree = spec.degree;
        options.max_degree = std::max(spec.degree, options.max_degree);
        options.retries = spec.retries;
        options.preferred = parse_elements(spec.elements, doc.ring);
        Decomposition d = spec.method == "general" ? decompose_general(ideal, options)
                          : spec.method == "dim1"  ? decompose_dim1(ideal, options)
                          : spec.method == "dim2"
                              ? decompose_dim2(ideal, options)
                              : throw PreconditionError("unknown method '" + spec.method + "'");
        doc.q_list = d.certificate.q_list;
        doc.payload = DecomposeResult{spec.method, std::move(d)};
        break;
      }
      case Command::kVerify: {
        if (qs.empty() && report->contains("certificate")) {
          try {
            qs = normalize_q_list(p, report->at("certificate").at("q_list").get<std::vector<std::uint64_t>>());
          } catch (const nlohmann::json::exception& e) {
            throw PreconditionError(std::string("malformed q_list in combination report: ") + e.what());
          }
        }
        if (qs.empty()) qs = default_q_list(p);
        SignedCombination combination = read_combination(spec.combination_text, doc.ring);
        Certificate cert = verify_identity(ideal, combination, qs);
        cert.seed = spec.seed;
        doc.q_list = qs;
        doc.payload = VerifyResult{std::move(combination), std::move(cert)};
        break;
      }
      case Command::kSelfcheck:
        break;
    }
  }
  if (spec.timing)
    doc.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return doc;
}

std::string emit_report(const ReportDocument& doc, ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson: return emit_json(doc);
    case ReportFormat::kCsv: return emit_csv(doc);
    case ReportFormat::kTable: return emit_table(doc);
  }
  return emit_table(doc);
}

int exit_status(const ReportDocument& doc) {
  if (auto* s = std::get_if<SelfcheckResult>(&doc.payload)) return s->all_pass() ? 0 : 1;
  return 0;
}

// ---------------------------------------------------------------------------
// Built-in invariant corpus

namespace {

template <class F>
void check(SelfcheckResult& out, std::string name, F&& body) {
  SelfcheckItem item{std::move(name), false, ""};
  try {
    item.pass = body(item.detail);
  } catch (const std::exception& e) {
    item.pass = false;
    item.detail = std::string("threw: ") + e.what();
  }
  out.items.push_back(std::move(item));
}

Ideal make(const RingSpecPtr& ring, const char* text) {
  return Ideal(ring, parse_polynomial_list(text, ring->ambient()));
}

Polynomial random_poly(const RingSpecPtr& ring, unsigned degree, std::mt19937_64& rng) {
  return random_homogeneous_form(ring, degree, rng);
}

}  // namespace

SelfcheckResult run_selfcheck() {
  SelfcheckResult out;
  auto r2 = RingSpec::create(2, {"x", "y"});
  auto r3 = RingSpec::create(2, {"x", "y", "z"});

  check(out, "ghk of (x^2, x*y) over F_2 is q^2", [&](std::string& detail) {
    auto s = ghk_series(make(r2, "x^2, x*y"), 3);
    for (const auto& e : s.entries) {
      detail += std::to_string(e.value) + " ";
      if (e.value != e.q * e.q) return false;
    }
    return true;
  });
  check(out, "hk of (x^2, y^3) is 6 q^2", [&](std::string&) {
    for (std::uint64_t q : {1u, 2u, 4u})
      if (hk_value(make(r2, "x^2, y^3"), q) != 6 * q * q) return false;
    return true;
  });
  check(out, "dim1 decomposition of (x^2, x*y)", [&](std::string& detail) {
    DecomposeOptions o;
    o.q_list = {1, 2, 4, 8};
    o.preferred = {r2->parse("y")};
    auto d = decompose_dim1(make(r2, "x^2, x*y"), o);
    const auto& t = d.combination.terms();
    detail = std::to_string(t.size()) + " terms";
    return d.certificate.certified() && t.size() == 2 && t[0].coefficient == 2 && t[1].coefficient == -1;
  });
  check(out, "dim2 decomposition of (x^2, x*y, x*z) is q^3", [&](std::string&) {
    DecomposeOptions o;
    o.q_list = {1, 2, 4};
    auto d = decompose_dim2(make(r3, "x^2, x*y, x*z"), o);
    for (const auto& c : d.certificate.checks)
      if (c.combination != static_cast<std::int64_t>(c.q * c.q * c.q)) return false;
    return d.certificate.certified();
  });
  check(out, "LC probe of (x^2, x*y): N_q = 2q - 1", [&](std::string& detail) {
    auto lc = lc_probe(make(r2, "x^2, x*y"), 3);
    for (const auto& e : lc.per_q)
      if (e.q > 1 && e.n_q != 2 * e.q - 1) return false;
    detail = "inferred N " + std::to_string(lc.inferred_n);
    return lc.inferred_n == 2 && lc.verdict == LCVerdict::kConsistent;
  });

  std::mt19937_64 rng(20240601);
  check(out, "Frobenius powers compose", [&](std::string& detail) {
    for (int k = 0; k < 10; ++k) {
      auto ring = RingSpec::create(k % 2 ? 3 : 2, {"x", "y", "z"});
      Ideal i(ring, {random_poly(ring, 1 + rng() % 2, rng), random_poly(ring, 2, rng)});
      std::uint64_t p = ring->characteristic();
      if (!frobenius_power(frobenius_power(i, p), p).equals(frobenius_power(i, p * p))) {
        detail = i.to_string();
        return false;
      }
    }
    return true;
  });
  check(out, "colon routes agree", [&](std::string& detail) {
    for (int k = 0; k < 10; ++k) {
      auto ring = k % 2 ? r3 : r2;
      Ideal i(ring, {random_poly(ring, 2, rng), random_poly(ring, 2, rng)});
      auto f = random_poly(ring, 1, rng);
      if (!colon_element(i, f).equals(colon_element_by_intersection(i, f))) {
        detail = i.to_string() + " : " + to_string(f);
        return false;
      }
    }
    return true;
  });
  check(out, "decompose_general certifies on random ideals", [&](std::string& detail) {
    int done = 0;
    for (int k = 0; k < 12 && done < 4; ++k) {
      Ideal i(r3, {random_poly(r3, 2, rng), random_poly(r3, 2, rng)});
      auto dim = krull_dimension(i);
      if (!dim || *dim == 0 || *dim > 2) continue;
      DecomposeOptions o;
      o.seed = 7 + k;
      auto d = decompose_general(i, o);
      if (!d.certificate.certified()) {
        detail = i.to_string();
        return false;
      }
      ++done;
    }
    detail = std::to_string(done) + " ideals";
    return done > 0;
  });
  return out;
}

}  // namespace hkfun
