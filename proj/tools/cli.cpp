#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ncspec/errors.hpp"

namespace ncspec::cli {

namespace {

struct Range {
  long lo = 0;
  long hi = 0;
};

// "A..B" or a single "A".
Range parse_range(const std::string& text, const std::string& flag) {
  auto fail = [&] { throw InvalidParameters(flag + " expects A..B or A, got '" + text + "'"); };
  auto to_long = [&](const std::string& s) {
    if (s.empty()) fail();
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      fail();
    }
    if (used != s.size()) fail();
    return v;
  };
  Range r;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    r.lo = to_long(text.substr(0, dots));
    r.hi = to_long(text.substr(dots + 2));
  } else {
    r.lo = r.hi = to_long(text);
  }
  if (r.lo > r.hi)
    throw InvalidParameters(flag + " lower end " + std::to_string(r.lo) + " exceeds upper end " +
                            std::to_string(r.hi));
  return r;
}

Family parse_family(const std::string& tag) {
  if (tag == "q4n") return Family::GeneralizedQuaternion;
  if (tag == "qd") return Family::Quasidihedral;
  if (tag == "u6n") return Family::USixN;
  if (tag == "metacyclic") return Family::Metacyclic;
  throw InvalidParameters("unknown group '" + tag + "'");
}

GroupSpec make_spec(Family f, long n, std::optional<long> m) {
  if (f == Family::Metacyclic) {
    if (!m) throw InvalidParameters("--m is required for the metacyclic group (m > 2)");
    return GroupSpec::metacyclic(*m, n);
  }
  if (m) throw InvalidParameters("--m applies only to the metacyclic group");
  switch (f) {
    case Family::GeneralizedQuaternion: return GroupSpec::quaternion(n);
    case Family::Quasidihedral: return GroupSpec::quasidihedral(n);
    default: return GroupSpec::u6n(n);
  }
}

MatrixKind kind_from(const std::string& tag) {
  auto k = parse_kind(tag);
  if (!k) throw InvalidParameters("unknown matrix '" + tag + "'");
  return *k;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += csv_field(fields[i]);
  }
  return line + "\n";
}

std::string m_field(const GroupSpec& spec) {
  return spec.kind() == Family::Metacyclic ? std::to_string(spec.m()) : "";
}

std::string params_text(const GroupSpec& spec) {
  std::string s = spec.kind() == Family::Metacyclic ? "m=" + std::to_string(spec.m()) + " " : "";
  return s + "n=" + std::to_string(spec.n());
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::string> coefficient_strings(const IntPolynomial& p) {
  std::vector<std::string> out;
  for (long k = 0; k <= p.degree(); ++k) out.push_back(p.coefficient(k).get_str());
  return out;
}

// v^mult or q(sum,product)^mult
std::string entry_token(const SpectrumEntry& e) {
  std::string head;
  if (const auto* i = std::get_if<IntegerEigenvalue>(&e.desc))
    head = i->value.get_str();
  else {
    const auto& q = std::get<QuadraticPair>(e.desc);
    head = "q(" + q.sum.get_str() + "," + q.product.get_str() + ")";
  }
  return head + "^" + std::to_string(e.multiplicity);
}

std::string partition_text(const PartitionStructure& p) {
  std::vector<std::string> parts;
  for (const auto& ps : p.parts) parts.push_back(std::to_string(ps.size) + "^" + std::to_string(ps.count));
  return join(parts, " ");
}

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& f) {
  if (f == "json") return Format::Json;
  if (f == "csv") return Format::Csv;
  return Format::Text;
}

// ---------------------------------------------------------------------------
// spectrum

struct SpectrumArgs {
  std::string group, matrix = "d", method = "closed", format = "text";
  long n = 0;
  std::optional<long> m;
  bool charpoly = false;
  std::size_t order_cap = kDefaultOrderCap;
};

void write_spectrum_text(std::ostream& out, const Json& rec) {
  out << "family:   " << rec["family"].get<std::string>() << "\n";
  out << "params:  ";
  for (const auto& [k, v] : rec["params"].items()) out << " " << k << "=" << v.get<long>();
  out << "\n";
  out << "matrix:   " << rec["matrix"].get<std::string>() << "\n";
  out << "order:    " << rec["order"].get<long>() << "\n";
  out << "method:   " << rec["method"].get<std::string>() << "\n";
  if (rec.contains("factored")) out << "factored: " << (rec["factored"].get<bool>() ? "yes" : "no") << "\n";
  out << "spectrum:\n";
  for (const auto& e : rec["spectrum"]) {
    if (e["type"] == "integer") {
      out << "  integer    " << std::left << std::setw(28) << e["value"].get<std::string>();
    } else {
      std::string sp = "sum " + e["sum"].get<std::string>() + " product " + e["product"].get<std::string>();
      out << "  quadratic  " << std::left << std::setw(28) << sp;
    }
    out << " mult " << e["mult"].get<long>() << "\n";
  }
  out << "integral: " << (rec["integral"].get<bool>() ? "yes" : "no") << "\n";
  if (rec.contains("charpoly")) {
    std::vector<std::string> c;
    for (const auto& v : rec["charpoly"]) c.push_back(v.get<std::string>());
    out << "charpoly (ascending): " << join(c, " ") << "\n";
  }
}

void write_spectrum_csv(std::ostream& out, const Json& rec, const GroupSpec& spec) {
  out << csv_row({"family", "m", "n", "matrix", "order", "integral", "type", "value", "sum", "product", "mult",
                  "degree"});
  std::vector<std::string> head = {rec["family"].get<std::string>(), m_field(spec), std::to_string(spec.n()),
                                   rec["matrix"].get<std::string>(), std::to_string(rec["order"].get<long>()),
                                   rec["integral"].get<bool>() ? "true" : "false"};
  for (const auto& e : rec["spectrum"]) {
    auto row = head;
    if (e["type"] == "integer") {
      row.insert(row.end(), {"integer", e["value"].get<std::string>(), "", ""});
    } else {
      row.insert(row.end(), {"quadratic", "", e["sum"].get<std::string>(), e["product"].get<std::string>()});
    }
    row.push_back(std::to_string(e["mult"].get<long>()));
    row.push_back("");
    out << csv_row(row);
  }
  if (rec.contains("charpoly")) {
    long k = 0;
    for (const auto& v : rec["charpoly"]) {
      auto row = head;
      row.insert(row.end(), {"coefficient", v.get<std::string>(), "", "", "", std::to_string(k++)});
      out << csv_row(row);
    }
  }
}

int cmd_spectrum(const SpectrumArgs& a, std::ostream& out, std::ostream& err) {
  GroupSpec spec = make_spec(parse_family(a.group), a.n, a.m);
  MatrixKind kind = kind_from(a.matrix);

  Json rec;
  if (a.method == "closed") {
    SpectrumSpec s = closed_form_spectrum(spec, kind);
    IntPolynomial poly;
    if (a.charpoly) poly = spectrum_to_polynomial(s);
    rec = spectrum_record(spec, kind, "closed", s, is_integral(s), a.charpoly ? &poly : nullptr);
  } else {
    OracleInstance oracle = build_oracle(spec, a.order_cap);
    OracleSpectrum os = oracle_spectrum(oracle, kind);
    SpectrumSpec shown = os.complete ? os.spectrum : SpectrumSpec{os.spectrum.order, kind, {}};
    bool integral = os.complete && is_integral(os.spectrum);
    bool with_poly = a.charpoly || !os.complete;
    rec = spectrum_record(spec, kind, "oracle", shown, integral, with_poly ? &os.charpoly : nullptr);
    rec["factored"] = os.complete;
    if (!os.complete) err << "note: characteristic polynomial did not factor completely; coefficients only\n";
  }

  switch (parse_format(a.format)) {
    case Format::Json: out << rec.dump() << "\n"; break;
    case Format::Csv: write_spectrum_csv(out, rec, spec); break;
    case Format::Text: write_spectrum_text(out, rec); break;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string group, n_range, m_range = "3..10", matrix = "all", format = "text";
  std::size_t order_cap = kDefaultOrderCap;
  bool allow_large = false;
  bool charpoly = false;
  unsigned threads = 0;
};

std::vector<MatrixKind> kinds_from(const std::string& tag) {
  if (tag == "all") return {std::begin(kAllKinds), std::end(kAllKinds)};
  return {kind_from(tag)};
}

void write_report_text(std::ostream& out, const VerificationReport& r, bool polys) {
  out << r.spec.tag() << " " << params_text(r.spec) << " " << kind_tag(r.kind) << " [" << r.claim << "] "
      << to_string(r.status);
  if (r.status == ReportStatus::Skipped || r.status == ReportStatus::Error) {
    out << ": " << r.error << "\n";
    return;
  }
  out << " order " << r.order << "\n";
  bool detail = r.status != ReportStatus::Matched;
  if (detail) {
    out << "  diff: " << r.diff_summary << "\n";
    out << "  partition: " << partition_text(r.partition)
        << (r.partition_matches_claim ? " (as claimed)" : " (differs from claim)") << "\n";
    out << "  trace: " << r.matrix_trace.get_str() << " oracle-consistent "
        << (r.oracle_trace_consistent ? "yes" : "no") << " closed-form-sum "
        << (r.closed_trace_matches ? "yes" : "no") << "\n";
    out << "  residual: " << r.residual.to_string() << "\n";
    std::vector<std::string> roots;
    for (const auto& [v, m] : r.residual_integer_roots) roots.push_back(v.get_str() + "^" + std::to_string(m));
    if (!roots.empty()) out << "  residual integer roots: " << join(roots, " ") << "\n";
    std::vector<std::string> un;
    for (const auto& e : r.unmatched_closed) un.push_back(entry_token(e));
    if (!un.empty()) out << "  unmatched closed-form entries: " << join(un, " ") << "\n";
  }
  if (r.multipartite_formula_matched && (detail || !*r.multipartite_formula_matched))
    out << "  multipartite distance formula: " << (*r.multipartite_formula_matched ? "matched" : "MISMATCH") << "\n";
  if (polys) {
    out << "  oracle charpoly: " << r.oracle_poly.to_string() << "\n";
    out << "  closed charpoly: " << r.closed_poly.to_string() << "\n";
  }
}

void write_report_csv(std::ostream& out, const VerificationReport& r, bool polys) {
  std::vector<std::string> un, roots;
  for (const auto& e : r.unmatched_closed) un.push_back(entry_token(e));
  for (const auto& [v, m] : r.residual_integer_roots) roots.push_back(v.get_str() + "^" + std::to_string(m));
  std::vector<std::string> row = {r.spec.tag(),
                                  m_field(r.spec),
                                  std::to_string(r.spec.n()),
                                  kind_tag(r.kind),
                                  r.claim,
                                  to_string(r.status),
                                  std::to_string(r.order),
                                  r.status == ReportStatus::Matched ? "" : r.diff_summary,
                                  join(coefficient_strings(r.residual), ";"),
                                  join(roots, ";"),
                                  join(un, ";"),
                                  r.error};
  if (polys) {
    row.push_back(join(coefficient_strings(r.oracle_poly), ";"));
    row.push_back(join(coefficient_strings(r.closed_poly), ";"));
  }
  out << csv_row(row);
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  Family family = parse_family(a.group);
  Range n = parse_range(a.n_range, "--n-range");
  FamilyRange range{family, n.lo, n.hi};
  if (family == Family::Metacyclic) {
    Range m = parse_range(a.m_range, "--m-range");
    range.m_lo = m.lo;
    range.m_hi = m.hi;
  }
  auto kinds = kinds_from(a.matrix);
  auto specs = range.expand();

  VerifyOptions options;
  options.order_cap = a.allow_large ? std::max(a.order_cap, kLargeOrderCap) : a.order_cap;
  options.threads = a.threads;
  auto reports = verify_grid(specs, kinds, options);

  Format fmt = parse_format(a.format);
  if (fmt == Format::Csv) {
    std::vector<std::string> header = {"family",   "m",        "n",        "matrix",
                                       "claim",    "status",   "order",    "diff",
                                       "residual", "residual_integer_roots", "unmatched", "error"};
    if (a.charpoly) header.insert(header.end(), {"oracle_charpoly", "closed_charpoly"});
    out << csv_row(header);
  }
  std::size_t matched = 0, mismatched = 0, skipped = 0, errors = 0;
  for (const auto& r : reports) {
    switch (r.status) {
      case ReportStatus::Matched: ++matched; break;
      case ReportStatus::Mismatch: ++mismatched; break;
      case ReportStatus::Skipped: ++skipped; break;
      case ReportStatus::Error: ++errors; break;
    }
    if (fmt == Format::Json)
      out << report_record(r, a.charpoly).dump() << "\n";
    else if (fmt == Format::Csv)
      write_report_csv(out, r, a.charpoly);
    else
      write_report_text(out, r, a.charpoly);
  }
  std::ostringstream summary;
  summary << "summary: " << matched << " matched, " << mismatched << " mismatched, " << skipped << " skipped, "
          << errors << " errors\n";
  (fmt == Format::Text ? out : err) << summary.str();
  return (mismatched || errors) ? kExitMismatch : kExitOk;
}

// ---------------------------------------------------------------------------
// search-integral

struct SearchArgs {
  std::string group, matrix = "d", format = "text", m_range = "3..10";
  long max_n = 0;
  std::optional<long> min_n;
};

long smallest_n(Family f) {
  switch (f) {
    case Family::GeneralizedQuaternion: return 2;
    case Family::Quasidihedral: return 4;
    default: return 1;
  }
}

int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
  Family family = parse_family(a.group);
  MatrixKind kind = kind_from(a.matrix);
  FamilyRange range{family, a.min_n.value_or(smallest_n(family)), a.max_n};
  if (family == Family::Metacyclic) {
    Range m = parse_range(a.m_range, "--m-range");
    range.m_lo = m.lo;
    range.m_hi = m.hi;
  }
  auto records = search_integral(range, kind, a.max_n);

  Format fmt = parse_format(a.format);
  if (fmt == Format::Csv) out << csv_row({"family", "m", "n", "matrix", "witness"});
  if (fmt == Format::Text) out << "family      m     n       matrix  witness\n";
  // The integrality remarks state sufficient conditions, so only a predicted
  // integral spectrum that turns out non-integral contradicts them.
  std::size_t contradictions = 0;
  for (const auto& r : records) {
    if (!r.agrees()) {
      if (r.predicted_integral) ++contradictions;
      err << "warning: " << r.params.tag() << " " << params_text(r.params) << " " << kind_tag(r.kind)
          << ": condition '" << r.condition << "' predicts " << (r.predicted_integral ? "integral" : "non-integral")
          << " but the closed-form spectrum is " << (r.computed_integral ? "integral" : "non-integral") << "\n";
    }
    if (!r.computed_integral) continue;
    std::string witness = r.witness ? r.witness->get_str() : "";
    if (fmt == Format::Json) {
      out << integrality_json(r).dump() << "\n";
    } else if (fmt == Format::Csv) {
      out << csv_row({r.params.tag(), m_field(r.params), std::to_string(r.params.n()), kind_tag(r.kind), witness});
    } else {
      out << std::left << std::setw(12) << r.params.tag() << std::setw(6) << m_field(r.params) << std::setw(8)
          << r.params.n() << std::setw(8) << kind_tag(r.kind) << (witness.empty() ? "-" : witness) << "\n";
    }
  }
  return contradictions ? kExitMismatch : kExitOk;
}

}  // namespace

// ---------------------------------------------------------------------------
// record builders

Json params_json(const GroupSpec& spec) {
  Json p = Json::object();
  if (spec.kind() == Family::Metacyclic) p["m"] = spec.m();
  p["n"] = spec.n();
  return p;
}

Json spectrum_entries_json(const SpectrumSpec& spectrum) {
  return spectrum_entries_json(spectrum.entries);
}

Json spectrum_entries_json(const std::vector<SpectrumEntry>& entries) {
  Json arr = Json::array();
  for (const auto& e : entries) {
    Json j;
    if (const auto* i = std::get_if<IntegerEigenvalue>(&e.desc)) {
      j["type"] = "integer";
      j["value"] = i->value.get_str();
    } else {
      const auto& q = std::get<QuadraticPair>(e.desc);
      j["type"] = "quadratic";
      j["sum"] = q.sum.get_str();
      j["product"] = q.product.get_str();
    }
    j["mult"] = e.multiplicity;
    arr.push_back(std::move(j));
  }
  return arr;
}

Json polynomial_json(const IntPolynomial& p) {
  Json arr = Json::array();
  for (const auto& c : coefficient_strings(p)) arr.push_back(c);
  return arr;
}

Json spectrum_record(const GroupSpec& spec, MatrixKind kind, const std::string& method,
                     const SpectrumSpec& spectrum, bool integral, const IntPolynomial* charpoly) {
  Json rec;
  rec["family"] = spec.tag();
  rec["params"] = params_json(spec);
  rec["matrix"] = kind_tag(kind);
  rec["order"] = spectrum.order;
  rec["method"] = method;
  rec["spectrum"] = spectrum_entries_json(spectrum);
  rec["integral"] = integral;
  if (charpoly) rec["charpoly"] = polynomial_json(*charpoly);
  return rec;
}

Json report_record(const VerificationReport& r, bool include_polys) {
  Json rec;
  rec["family"] = r.spec.tag();
  rec["params"] = params_json(r.spec);
  rec["matrix"] = kind_tag(r.kind);
  rec["claim"] = r.claim;
  rec["status"] = to_string(r.status);
  rec["order"] = r.order;
  if (r.status == ReportStatus::Skipped || r.status == ReportStatus::Error) {
    rec["error"] = r.error;
    return rec;
  }
  Json parts = Json::array();
  for (const auto& p : r.partition.parts) parts.push_back(Json{{"size", p.size}, {"count", p.count}});
  rec["partition"] = parts;
  rec["partition_matches_claim"] = r.partition_matches_claim;
  rec["trace"] = r.matrix_trace.get_str();
  rec["oracle_trace_consistent"] = r.oracle_trace_consistent;
  rec["closed_trace_matches"] = r.closed_trace_matches;
  if (r.multipartite_formula_matched) rec["multipartite_formula_matched"] = *r.multipartite_formula_matched;
  rec["diff"] = r.diff_summary;
  rec["residual"] = polynomial_json(r.residual);
  Json roots = Json::array();
  for (const auto& [v, m] : r.residual_integer_roots) roots.push_back(Json{{"value", v.get_str()}, {"mult", m}});
  rec["residual_integer_roots"] = roots;
  rec["unmatched"] = spectrum_entries_json(r.unmatched_closed);
  if (include_polys) {
    rec["oracle_charpoly"] = polynomial_json(r.oracle_poly);
    rec["closed_charpoly"] = polynomial_json(r.closed_poly);
  }
  return rec;
}

Json integrality_json(const IntegralityRecord& r) {
  Json rec;
  rec["family"] = r.params.tag();
  rec["params"] = params_json(r.params);
  rec["matrix"] = kind_tag(r.kind);
  rec["condition"] = r.condition;
  rec["witness"] = r.witness ? Json(r.witness->get_str()) : Json(nullptr);
  return rec;
}

// ---------------------------------------------------------------------------

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra of non-commuting graphs: closed forms against an exact oracle", "ncspec"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  const std::vector<std::string> groups = {"q4n", "qd", "u6n", "metacyclic"};
  const std::vector<std::string> formats = {"text", "json", "csv"};
  std::string out_file;
  app.add_option("--out", out_file, "Write records to FILE instead of standard output");

  SpectrumArgs sa;
  auto* sp = app.add_subcommand("spectrum", "Spectrum of one group's D, D^L or D^Q");
  sp->add_option("--group", sa.group)->required()->check(CLI::IsMember(groups));
  sp->add_option("--n", sa.n)->required();
  sp->add_option("--m", sa.m, "metacyclic only");
  sp->add_option("--matrix", sa.matrix)->check(CLI::IsMember({"d", "dl", "dq"}))->capture_default_str();
  sp->add_option("--method", sa.method)->check(CLI::IsMember({"closed", "oracle"}))->capture_default_str();
  sp->add_option("--format", sa.format)->check(CLI::IsMember(formats))->capture_default_str();
  sp->add_flag("--charpoly", sa.charpoly, "Include characteristic polynomial coefficients");
  sp->add_option("--order-cap", sa.order_cap, "Largest graph order the oracle will build")->capture_default_str();
  sp->add_option("--out", out_file, "Write records to FILE instead of standard output");

  VerifyArgs va;
  auto* vp = app.add_subcommand("verify", "Compare closed forms with the exact oracle over a parameter grid");
  vp->add_option("--group", va.group)->required()->check(CLI::IsMember(groups));
  vp->add_option("--n-range", va.n_range, "A..B")->required();
  vp->add_option("--m-range", va.m_range, "A..B, metacyclic only")->capture_default_str();
  vp->add_option("--matrix", va.matrix)->check(CLI::IsMember({"d", "dl", "dq", "all"}))->capture_default_str();
  vp->add_option("--order-cap", va.order_cap)->capture_default_str();
  vp->add_flag("--allow-large", va.allow_large, "Raise the order cap to 256");
  vp->add_option("--threads", va.threads, "0 = hardware concurrency")->capture_default_str();
  vp->add_option("--format", va.format)->check(CLI::IsMember(formats))->capture_default_str();
  vp->add_flag("--charpoly", va.charpoly, "Include both characteristic polynomials");
  vp->add_option("--out", out_file, "Write records to FILE instead of standard output");

  SearchArgs ia;
  auto* ip = app.add_subcommand("search-integral", "Parameters whose spectrum is integral");
  ip->add_option("--group", ia.group)->required()->check(CLI::IsMember(groups));
  ip->add_option("--matrix", ia.matrix)->check(CLI::IsMember({"d", "dl", "dq"}))->capture_default_str();
  ip->add_option("--max-n", ia.max_n)->required();
  ip->add_option("--min-n", ia.min_n);
  ip->add_option("--m-range", ia.m_range, "A..B, metacyclic only")->capture_default_str();
  ip->add_option("--format", ia.format)->check(CLI::IsMember(formats))->capture_default_str();
  ip->add_option("--out", out_file, "Write records to FILE instead of standard output");

  std::vector<const char*> argv = {"ncspec"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!out_file.empty()) {
    file.open(out_file);
    if (!file) {
      err << "error: cannot open " << out_file << " for writing\n";
      return kExitUsage;
    }
    sink = &file;
  }

  try {
    if (*sp) return cmd_spectrum(sa, *sink, err);
    if (*vp) return cmd_verify(va, *sink, err);
    return cmd_search(ia, *sink, err);
  } catch (const InvalidParameters& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OrderCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
}

}  // namespace ncspec::cli
