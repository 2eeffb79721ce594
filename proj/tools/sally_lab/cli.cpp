// Copyright 2026 The sally-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "paper_examples.hpp"
#include "sallylab/closure.hpp"
#include "sallylab/error.hpp"
#include "sallylab/filtration.hpp"
#include "sallylab/hilbert.hpp"

namespace sallylab::cli {
namespace {

using nlohmann::json;

[[noreturn]] void ParseFail(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::kParseError, field + ": " + what);
}

Monomial ParseExponents(const json& value, const std::string& field) {
  if (!value.is_array() || value.empty()) {
    ParseFail(field, "expected a non-empty array of non-negative integers");
  }
  std::vector<std::int64_t> exps;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const json& e = value[i];
    if (!e.is_number_integer() || e.get<std::int64_t>() < 0) {
      ParseFail(field + "[" + std::to_string(i) + "]", "expected a non-negative integer");
    }
    exps.push_back(e.get<std::int64_t>());
  }
  return Monomial(std::move(exps));
}

std::vector<Monomial> ParseExponentList(const json& value, const std::string& field) {
  if (!value.is_array()) ParseFail(field, "expected an array of exponent vectors");
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(ParseExponents(value[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

bool ParseBool(const json& obj, const char* key, const std::string& field) {
  if (!obj.contains(key)) return false;
  if (!obj[key].is_boolean()) ParseFail(field + "." + key, "expected a boolean");
  return obj[key].get<bool>();
}

std::optional<int> ParseInt(const json& obj, const char* key, const std::string& field) {
  if (!obj.contains(key)) return std::nullopt;
  if (!obj[key].is_number_integer()) ParseFail(field + "." + key, "expected an integer");
  return obj[key].get<int>();
}

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kHypothesisFailed:
    case ErrorKind::kQNotContained:
    case ErrorKind::kQNotParameterShaped:
    case ErrorKind::kNotAReduction:
      return kExitHypothesisFailure;
    case ErrorKind::kInternalInconsistency:
    case ErrorKind::kGoldenMismatch:
    case ErrorKind::kWindowTooShort:
    case ErrorKind::kNonIntegerCoefficient:
      return kExitInternalInconsistency;
    default:
      return kExitParseError;
  }
}

std::string Yes(bool b) { return b ? "yes" : "no"; }

std::string FormatVector(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ']';
  return os.str();
}

std::string FormatMonomials(const std::vector<Monomial>& ms) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ms.size(); ++i) os << (i ? " " : "") << ms[i];
  return os.str();
}

// Two-column "key  value" block.
class TextBlock {
 public:
  void Add(std::string key, std::string value) {
    rows_.emplace_back(std::move(key), std::move(value));
  }
  std::string Render() const {
    std::size_t width = 0;
    for (const auto& [k, v] : rows_) width = std::max(width, k.size());
    std::ostringstream os;
    for (const auto& [k, v] : rows_) {
      os << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
    }
    return os.str();
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

std::string RenderTable(const std::vector<std::string>& headers,
                        const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(headers.size());
  for (std::size_t c = 0; c < headers.size(); ++c) width[c] = headers[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      os << std::right << std::setw(static_cast<int>(width[c])) << cells[c]
         << (c + 1 < cells.size() ? "  " : "\n");
    }
  };
  line(headers);
  for (const auto& row : rows) line(row);
  return os.str();
}

std::string RenderReport(const VerifierReport& report, const std::string& source) {
  TextBlock block;
  block.Add("theorem", std::string(TheoremIdName(report.theorem)));
  block.Add("source", source);
  for (const auto& h : report.hypotheses) block.Add("hypothesis", h.name + ": " + Yes(h.holds));
  block.Add("lhs", ToString(report.lhs));
  block.Add("rhs", ToString(report.rhs));
  block.Add("slack", ToString(report.slack));
  block.Add("equality", Yes(report.equality));
  block.Add("certificate", report.certificate ? Yes(*report.certificate) : "n/a");
  block.Add("depth", "[" + std::to_string(report.depth_lower) + ", " +
                         std::to_string(report.depth_upper) + "]");
  for (const auto& j : report.justifications) block.Add("justification", j);
  std::string text = block.Render();
  if (!report.rows.empty()) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : report.rows) {
      rows.push_back({std::to_string(r.n), ToString(r.lhs), ToString(r.rhs)});
    }
    text += RenderTable({"n", "lhs", "rhs"}, rows);
  }
  return text;
}

struct Context {
  const Invocation& invocation;
  InputDocument doc;
  bool json_mode = false;
};

void Emit(std::ostream& out, bool json_mode, const json& payload, const std::string& text) {
  if (json_mode) {
    out << payload.dump(2) << '\n';
  } else {
    out << text;
  }
}

MonomialIdeal BuildIdeal(const Context& ctx) {
  if (ctx.doc.ideal.empty()) ParseFail("ideal", "required for " + ctx.invocation.command);
  return MonomialIdeal::Normalize(ctx.doc.ambient, ctx.doc.ideal);
}

MonomialIdeal BuildReduction(const Context& ctx) {
  if (!ctx.doc.reduction) ParseFail("reduction", "required for " + ctx.invocation.command);
  return MonomialIdeal::Normalize(ctx.doc.ambient, *ctx.doc.reduction);
}

AnalysisOptions OptionsFor(const Context& ctx) {
  AnalysisOptions options;
  if (ctx.doc.n) options.table_size = *ctx.doc.n;
  if (ctx.doc.cap) options.cap = *ctx.doc.cap;
  options.assume_integrally_closed = ctx.doc.assume_integrally_closed;
  options.assume_rr_closed = ctx.doc.assume_rr_closed;
  return options;
}

int ReportExit(const VerifierReport& report, bool expect_equality) {
  if (!report.HypothesesHold()) return kExitHypothesisFailure;
  if (expect_equality && !report.equality) return kExitStrictInequality;
  return kExitSuccess;
}

int RunVerify(const Context& ctx, std::ostream& out) {
  const Invocation& inv = ctx.invocation;
  const auto id = ParseTheoremId(inv.target);
  if (!id) ParseFail("theorem", "unknown theorem id '" + inv.target + "'");

  VerifierReport report;
  std::string source = "live";
  if (inv.fixture) {
    if (*inv.fixture != "final-example") ParseFail("fixture", "unknown fixture '" + *inv.fixture + "'");
    const IdealInvariants fixture = FinalExampleFixture(inv.m.value_or(1), inv.d.value_or(2));
    source = fixture.source;
    switch (*id) {
      case TheoremId::kNorthcott: report = VerifyNorthcott(fixture); break;
      case TheoremId::kProp32: report = VerifyProp32(fixture); break;
      case TheoremId::kThm33: report = VerifyThm33(fixture); break;
      case TheoremId::kProp310: report = VerifyProp310(fixture); break;
      case TheoremId::kThm310: report = VerifyThm310(fixture); break;
      default:
        ParseFail("fixture", "theorem '" + inv.target + "' needs live ideals");
    }
  } else if (*id == TheoremId::kLemma36) {
    if (ctx.doc.ideal.empty()) ParseFail("ideal", "required for verify lemma36");
    const int t = inv.t.value_or(static_cast<int>(ctx.doc.ideal.front().TotalDegree()));
    report = VerifyLemma36(t, ctx.doc.ideal);
  } else if (*id == TheoremId::kLemma35) {
    report = VerifyLemma35(BuildIdeal(ctx), BuildReduction(ctx));
  } else {
    const Analysis analysis = Analyze(BuildIdeal(ctx), BuildReduction(ctx), OptionsFor(ctx));
    const IdealInvariants& invariants = analysis.invariants;
    switch (*id) {
      case TheoremId::kNorthcott: report = VerifyNorthcott(invariants); break;
      case TheoremId::kProp31: report = VerifyProp31(analysis); break;
      case TheoremId::kProp32: report = VerifyProp32(invariants); break;
      case TheoremId::kThm33: report = VerifyThm33(invariants); break;
      case TheoremId::kProp39: report = VerifyProp39(analysis); break;
      case TheoremId::kProp310: report = VerifyProp310(invariants); break;
      case TheoremId::kThm310: report = VerifyThm310(invariants); break;
      case TheoremId::kThm11a: {
        const int t = std::max(analysis.rd.r - 1, 1);
        const std::vector<Length> tail = GeneratedTail(analysis.sally.s, t);
        const int d = invariants.d;
        const std::int64_t i0 = FitPolynomial(tail, d - 1).Coefficient(0);
        report = Thm11aCheck(tail, t, d, i0);
        break;
      }
      default: break;
    }
  }
  json payload{{"command", "verify"}, {"source", source}, {"report", ToJson(report)}};
  Emit(out, ctx.json_mode, payload, RenderReport(report, source));
  return ReportExit(report, inv.expect_equality);
}

int RunCommand(const Context& ctx, std::ostream& out) {
  const std::string& cmd = ctx.invocation.command;
  json payload{{"command", cmd}};
  if (cmd == "length") {
    const MonomialIdeal ideal = BuildIdeal(ctx);
    payload["generators"] = ToJson(ideal.generators());
    payload["colength"] = ideal.Colength();
    TextBlock block;
    block.Add("generators", FormatMonomials(ideal.generators()));
    block.Add("colength", std::to_string(ideal.Colength()));
    Emit(out, ctx.json_mode, payload, block.Render());
    return kExitSuccess;
  }
  if (cmd == "power") {
    const int n = ctx.doc.n.value_or(2);
    if (n < 0) ParseFail("N", "power exponent must be non-negative");
    const MonomialIdeal power = Power(BuildIdeal(ctx), n);
    payload["n"] = n;
    payload["generators"] = ToJson(power.generators());
    payload["colength"] = power.Colength();
    TextBlock block;
    block.Add("n", std::to_string(n));
    block.Add("generators", FormatMonomials(power.generators()));
    block.Add("colength", std::to_string(power.Colength()));
    Emit(out, ctx.json_mode, payload, block.Render());
    return kExitSuccess;
  }
  if (cmd == "closure") {
    const MonomialIdeal ideal = BuildIdeal(ctx);
    const MonomialIdeal closure = NewtonClosure(ideal);
    const bool closed = closure == ideal;
    payload["generators"] = ToJson(closure.generators());
    payload["colength"] = closure.Colength();
    payload["integrally_closed"] = closed;
    TextBlock block;
    block.Add("generators", FormatMonomials(closure.generators()));
    block.Add("colength", std::to_string(closure.Colength()));
    block.Add("integrally closed", Yes(closed));
    Emit(out, ctx.json_mode, payload, block.Render());
    return kExitSuccess;
  }
  if (cmd == "hilbert" || cmd == "coeffs") {
    const MonomialIdeal ideal = BuildIdeal(ctx);
    const int d = ideal.ambient().dim();
    HilbertTable table;
    std::optional<HilbertCoefficients> coeffs;
    if (cmd == "hilbert") {
      table = HsTable(ideal, ctx.doc.n.value_or(DefaultTableSize(-1, d)));
    } else {
      HilbertFit fit = ComputeHilbertFit(ideal, ctx.doc.n.value_or(DefaultTableSize(-1, d)));
      table = std::move(fit.table);
      coeffs = std::move(fit.coefficients);
    }
    const auto diffs = table.FirstDiffs();
    payload["table"] = table.values;
    payload["first_diffs"] = diffs;
    std::vector<std::vector<std::string>> rows;
    for (std::size_t n = 0; n < table.values.size(); ++n) {
      rows.push_back({std::to_string(n), std::to_string(table.values[n]), std::to_string(diffs[n])});
    }
    std::string text = RenderTable({"n", "l(A/I^{n+1})", "l(G_n)"}, rows);
    if (coeffs) {
      payload["e"] = coeffs->e;
      payload["postulation"] = coeffs->postulation;
      TextBlock block;
      block.Add("e", FormatVector(coeffs->e));
      block.Add("postulation", std::to_string(coeffs->postulation));
      text = block.Render() + text;
    }
    Emit(out, ctx.json_mode, payload, text);
    return kExitSuccess;
  }
  if (cmd == "reduction") {
    const ReductionData rd =
        ReductionNumber(BuildIdeal(ctx), BuildReduction(ctx), ctx.doc.cap.value_or(kDefaultReductionCap));
    payload["r"] = rd.r;
    TextBlock block;
    block.Add("r", std::to_string(rd.r));
    Emit(out, ctx.json_mode, payload, block.Render());
    return kExitSuccess;
  }
  if (cmd == "sally") {
    const Analysis analysis = Analyze(BuildIdeal(ctx), BuildReduction(ctx), OptionsFor(ctx));
    payload["r"] = analysis.rd.r;
    payload["s"] = analysis.sally.s;
    payload["c"] = analysis.sally.c;
    payload["l"] = analysis.sally.l;
    std::vector<std::vector<std::string>> rows;
    for (std::size_t n = 0; n < analysis.sally.s.size(); ++n) {
      rows.push_back({std::to_string(n), std::to_string(analysis.sally.s[n]),
                      std::to_string(analysis.sally.l[n]), std::to_string(analysis.sally.c[n])});
    }
    Emit(out, ctx.json_mode, payload,
         "r  " + std::to_string(analysis.rd.r) + "\n" +
             RenderTable({"n", "l(S_n)", "l(L_n)", "l(C_n)"}, rows));
    return kExitSuccess;
  }
  if (cmd == "depth") {
    const Analysis analysis = Analyze(BuildIdeal(ctx), BuildReduction(ctx), OptionsFor(ctx));
    const DepthInterval depth = DepthBounds(analysis.invariants);
    payload["depth"] = ToJson(depth);
    TextBlock block;
    block.Add("depth", "[" + std::to_string(depth.lower) + ", " + std::to_string(depth.upper) + "]");
    for (const auto& j : depth.justifications) block.Add("justification", j);
    Emit(out, ctx.json_mode, payload, block.Render());
    return kExitSuccess;
  }
  if (cmd == "verify") return RunVerify(ctx, out);
  ParseFail("command", "unknown command '" + cmd + "'");
}

bool NeedsInput(const Invocation& inv) {
  if (inv.command == "paper-examples") return false;
  if (inv.command == "verify" && inv.fixture) return false;
  return true;
}

}  // namespace

InputDocument ParseInputDocument(const json& doc) {
  if (!doc.is_object()) ParseFail("document", "expected a JSON object");
  InputDocument out;
  if (!doc.contains("ambient") || !doc["ambient"].is_object()) {
    ParseFail("ambient", "expected an object");
  }
  const json& amb = doc["ambient"];
  if (!amb.contains("kind") || !amb["kind"].is_string()) {
    ParseFail("ambient.kind", "expected \"polynomial\" or \"semigroup\"");
  }
  const std::string kind = amb["kind"].get<std::string>();
  const bool cm = amb.contains("cm") ? ParseBool(amb, "cm", "ambient") : true;
  try {
    if (kind == "polynomial") {
      const auto d = ParseInt(amb, "d", "ambient");
      if (!d) ParseFail("ambient.d", "required for a polynomial ambient");
      out.ambient = AmbientAlgebra::Polynomial(*d);
    } else if (kind == "semigroup") {
      if (!amb.contains("generators")) ParseFail("ambient.generators", "required");
      out.ambient = AmbientAlgebra::Semigroup(
          ParseExponentList(amb["generators"], "ambient.generators"), cm);
    } else {
      ParseFail("ambient.kind", "expected \"polynomial\" or \"semigroup\"");
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kParseError) throw;
    ParseFail("ambient", e.what());
  }
  if (doc.contains("ideal")) out.ideal = ParseExponentList(doc["ideal"], "ideal");
  if (doc.contains("reduction") && !doc["reduction"].is_null()) {
    out.reduction = ParseExponentList(doc["reduction"], "reduction");
  }
  if (doc.contains("flags")) {
    const json& flags = doc["flags"];
    if (!flags.is_object()) ParseFail("flags", "expected an object");
    out.assume_integrally_closed = ParseBool(flags, "assume_integrally_closed", "flags");
    out.assume_rr_closed = ParseBool(flags, "assume_rr_closed", "flags");
  }
  if (doc.contains("options")) {
    const json& options = doc["options"];
    if (!options.is_object()) ParseFail("options", "expected an object");
    out.n = ParseInt(options, "N", "options");
    out.cap = ParseInt(options, "cap", "options");
    out.json = ParseBool(options, "json", "options");
  }
  const auto arity = out.ambient.arity();
  auto check_arity = [&](const std::vector<Monomial>& ms, const std::string& field) {
    for (std::size_t i = 0; i < ms.size(); ++i) {
      if (ms[i].arity() != arity) {
        ParseFail(field + "[" + std::to_string(i) + "]",
                  "expected " + std::to_string(arity) + " exponents");
      }
    }
  };
  check_arity(out.ideal, "ideal");
  if (out.reduction) check_arity(*out.reduction, "reduction");
  return out;
}

json ToJson(const Monomial& m) {
  return json(std::vector<std::int64_t>(m.exponents().begin(), m.exponents().end()));
}

json ToJson(const std::vector<Monomial>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(ToJson(m));
  return out;
}

json ToJson(const VerifierReport& report) {
  json hyps = json::array();
  for (const auto& h : report.hypotheses) hyps.push_back({{"name", h.name}, {"holds", h.holds}});
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"n", r.n}, {"lhs", ToString(r.lhs)}, {"rhs", ToString(r.rhs)}});
  }
  return json{
      {"theorem", std::string(TheoremIdName(report.theorem))},
      {"hypotheses", hyps},
      {"lhs", ToString(report.lhs)},
      {"rhs", ToString(report.rhs)},
      {"slack", ToString(report.slack)},
      {"equality", report.equality},
      {"certificate", report.certificate ? json(*report.certificate) : json(nullptr)},
      {"depth", {{"lower", report.depth_lower}, {"upper", report.depth_upper}}},
      {"justifications", report.justifications},
      {"rows", rows},
  };
}

json ToJson(const DepthInterval& depth) {
  return json{{"lower", depth.lower},
              {"upper", depth.upper},
              {"justifications", depth.justifications}};
}

int Run(const Invocation& invocation, std::istream& input, std::ostream& out,
        std::ostream& err) {
  try {
    if (invocation.command == "paper-examples") {
      return RunPaperExamples(invocation, out, err);
    }
    Context ctx{invocation, InputDocument{}, invocation.json};
    if (NeedsInput(invocation)) {
      json doc;
      if (invocation.in_file) {
        std::ifstream file(*invocation.in_file);
        if (!file) ParseFail("--in", "cannot open '" + *invocation.in_file + "'");
        doc = json::parse(file);
      } else {
        doc = json::parse(input);
      }
      ctx.doc = ParseInputDocument(doc);
      ctx.json_mode = invocation.json || ctx.doc.json;
    }
    if (invocation.n) ctx.doc.n = invocation.n;
    if (invocation.cap) ctx.doc.cap = invocation.cap;
    ctx.doc.assume_integrally_closed |= invocation.assume_integrally_closed;
    ctx.doc.assume_rr_closed |= invocation.assume_rr_closed;
    return RunCommand(ctx, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return ExitCodeFor(e.kind());
  } catch (const json::exception& e) {
    err << "ParseError: " << e.what() << '\n';
    return kExitParseError;
  }
}

int Main(int argc, char** argv, std::istream& input, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"sally-lab: Hilbert-Samuel functions, reduction numbers and Sally modules "
               "of m-primary monomial ideals"};
  Invocation inv;
  int n = 0, cap = 0, s = 0, t = 0, m = 0, d = 0;
  std::string in_file, fixture;
  app.add_option("command", inv.command,
                 "length | power | closure | hilbert | coeffs | reduction | sally | depth | "
                 "verify | paper-examples")
      ->required();
  app.add_option("target", inv.target,
                 "theorem id for verify (northcott, prop31, prop32, thm33, prop39, prop310, "
                 "thm310, lemma35, lemma36, thm11a) or example for paper-examples "
                 "(ex2.7, ex3.7, ex3.8, lemma3.6, final)");
  auto* in_opt = app.add_option("--in", in_file, "input JSON document (default: stdin)");
  app.add_flag("--json", inv.json, "emit JSON");
  auto* n_opt = app.add_option("--N", n, "table size / power exponent");
  auto* cap_opt = app.add_option("--cap", cap, "reduction-number search cap");
  app.add_flag("--expect-equality", inv.expect_equality, "exit 1 on a strict inequality");
  auto* s_opt = app.add_option("--s", s, "parameter s for ex3.8");
  auto* t_opt = app.add_option("--t", t, "degree t for lemma3.6 / lemma36");
  auto* m_opt = app.add_option("--m", m, "parameter m for ex2.7 / final");
  auto* d_opt = app.add_option("--d", d, "dimension d for ex2.7 / final");
  auto* fixture_opt = app.add_option("--fixture", fixture, "fixture name (final-example)");
  app.add_flag("--assume-integrally-closed", inv.assume_integrally_closed,
               "assert that I is integrally closed (semigroup ambients)");
  app.add_flag("--assume-rr-closed", inv.assume_rr_closed,
               "assert that I is Ratliff-Rush closed");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "ParseError: " << e.what() << '\n';
    return kExitParseError;
  }
  if (*in_opt) inv.in_file = in_file;
  if (*n_opt) inv.n = n;
  if (*cap_opt) inv.cap = cap;
  if (*s_opt) inv.s = s;
  if (*t_opt) inv.t = t;
  if (*m_opt) inv.m = m;
  if (*d_opt) inv.d = d;
  if (*fixture_opt) inv.fixture = fixture;
  return Run(inv, input, out, err);
}

}  // namespace sallylab::cli
