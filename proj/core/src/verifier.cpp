#include "ncspec/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <map>
#include <stdexcept>
#include <thread>

#include "ncspec/errors.hpp"

namespace ncspec {

namespace {

Integer gershgorin_bound(const IntMatrix& m) {
  Integer best = 0;
  for (std::size_t i = 0; i < m.order(); ++i) {
    Integer row = 0;
    for (std::size_t j = 0; j < m.order(); ++j) row += abs(m(i, j));
    if (row > best) best = row;
  }
  return best;
}

std::string first_difference(const IntPolynomial& oracle, const IntPolynomial& closed) {
  if (oracle == closed) return {};
  const std::size_t len = std::max(oracle.coefficients().size(), closed.coefficients().size());
  for (std::size_t k = len; k-- > 0;) {
    const Integer a = oracle.coefficient(k);
    const Integer b = closed.coefficient(k);
    if (a != b)
      return "coefficient of x^" + std::to_string(k) + ": oracle " + a.get_str() + ", closed form " +
             b.get_str();
  }
  return {};
}

Integer Z(long v) { return Integer(v); }

}  // namespace

IntMatrix OracleInstance::matrix(MatrixKind kind) const {
  switch (kind) {
    case MatrixKind::Distance: return distances;
    case MatrixKind::DistanceLaplacian: return dl_matrix(distances);
    case MatrixKind::DistanceSignlessLaplacian: return dq_matrix(distances);
  }
  throw std::logic_error("unknown matrix kind");
}

OracleInstance build_oracle(const GroupSpec& spec, std::size_t order_cap) {
  const Integer order = graph_order(spec);
  if (order > static_cast<unsigned long>(order_cap))
    throw OrderCapExceeded(spec.display_name() + ": matrix order " + order.get_str() +
                           " exceeds the cap " + std::to_string(order_cap));
  const FiniteGroup group = enumerate_elements(spec);
  const NCGraph graph = non_commuting_graph(group);
  PartitionStructure partition = partition_structure(graph);
  NCGraph ordered = part_major(graph, partition);
  // Indices now refer to the part-major labeling.
  PartitionStructure relabeled = partition_structure(ordered.graph);
  IntMatrix distances = distance_matrix(ordered.graph);
  return OracleInstance{spec, std::move(ordered), std::move(relabeled), std::move(distances)};
}

std::string to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::Matched: return "matched";
    case ReportStatus::Mismatch: return "mismatch";
    case ReportStatus::Skipped: return "skipped";
    case ReportStatus::Error: return "error";
  }
  return "?";
}

namespace {

VerificationReport verify_on(const OracleInstance& oracle, MatrixKind kind) {
  VerificationReport r(oracle.spec, kind);
  r.claim = claim_id(oracle.spec, kind);
  r.partition = oracle.partition;
  r.partition_matches_claim = oracle.partition.parts == expected_partition(oracle.spec);
  const IntMatrix m = oracle.matrix(kind);
  r.order = static_cast<long>(m.order());
  r.oracle_poly = char_poly(m);

  const SpectrumSpec closed = closed_form_spectrum(oracle.spec, kind);
  r.closed_poly = spectrum_to_polynomial(closed);
  r.matched = r.oracle_poly == r.closed_poly;
  r.status = r.matched ? ReportStatus::Matched : ReportStatus::Mismatch;
  r.diff_summary = first_difference(r.oracle_poly, r.closed_poly);

  r.matrix_trace = m.trace();
  Integer transmission_total = 0;
  if (kind != MatrixKind::Distance)
    for (const auto& t : transmissions(oracle.distances)) transmission_total += t;
  const Integer poly_trace = -r.oracle_poly.coefficient(m.order() - 1);
  r.oracle_trace_consistent = r.matrix_trace == transmission_total && r.matrix_trace == poly_trace;
  r.closed_trace_matches = r.matrix_trace == closed.eigenvalue_sum();

  if (kind == MatrixKind::Distance)
    r.multipartite_formula_matched = multipartite_distance_charpoly(oracle.partition) == r.oracle_poly;

  r.residual = r.oracle_poly;
  for (const auto& e : closed.entries) {
    const auto want = static_cast<unsigned long>(e.multiplicity);
    const unsigned long got = divide_out(r.residual, factor_of(e.desc), want);
    if (got < want) r.unmatched_closed.push_back({e.desc, static_cast<long>(want - got)});
  }
  if (r.residual.degree() > 0)
    r.residual_integer_roots = factor_integer_roots(r.residual, gershgorin_bound(m)).roots;
  return r;
}

}  // namespace

std::vector<VerificationReport> verify_kinds(const GroupSpec& spec, const std::vector<MatrixKind>& kinds,
                                             const VerifyOptions& options) {
  const OracleInstance oracle = build_oracle(spec, options.order_cap);
  std::vector<VerificationReport> out;
  out.reserve(kinds.size());
  for (MatrixKind k : kinds) out.push_back(verify_on(oracle, k));
  return out;
}

VerificationReport verify_instance(const GroupSpec& spec, MatrixKind kind, const VerifyOptions& options) {
  return std::move(verify_kinds(spec, {kind}, options).front());
}

std::vector<GroupSpec> FamilyRange::expand() const {
  std::vector<GroupSpec> specs;
  if (family == Family::Metacyclic) {
    for (long m = m_lo; m <= m_hi; ++m)
      for (long n = n_lo; n <= n_hi; ++n) specs.push_back(GroupSpec::metacyclic(m, n));
    return specs;
  }
  for (long n = n_lo; n <= n_hi; ++n) {
    switch (family) {
      case Family::GeneralizedQuaternion: specs.push_back(GroupSpec::quaternion(n)); break;
      case Family::Quasidihedral: specs.push_back(GroupSpec::quasidihedral(n)); break;
      case Family::USixN: specs.push_back(GroupSpec::u6n(n)); break;
      case Family::Metacyclic: break;
    }
  }
  return specs;
}

std::vector<FamilyRange> default_grid(bool include_large) {
  return {
      {Family::GeneralizedQuaternion, 2, 12},
      {Family::Quasidihedral, 4, include_large ? 8 : 7},
      {Family::USixN, 1, 10},
      {Family::Metacyclic, 1, 4, 3, 10},
  };
}

std::vector<VerificationReport> verify_grid(const std::vector<GroupSpec>& specs,
                                            const std::vector<MatrixKind>& kinds,
                                            const VerifyOptions& options) {
  std::vector<std::vector<VerificationReport>> per_spec(specs.size());
  auto run_one = [&](std::size_t i) {
    const GroupSpec& spec = specs[i];
    auto embed = [&](ReportStatus status, const std::string& what) {
      std::vector<VerificationReport> rs;
      for (MatrixKind k : kinds) {
        VerificationReport r(spec, k);
        r.claim = claim_id(spec, k);
        r.status = status;
        r.error = what;
        rs.push_back(std::move(r));
      }
      return rs;
    };
    try {
      per_spec[i] = verify_kinds(spec, kinds, options);
    } catch (const OrderCapExceeded& e) {
      per_spec[i] = embed(ReportStatus::Skipped, e.what());
    } catch (const Error& e) {
      per_spec[i] = embed(ReportStatus::Error, e.what());
    }
  };

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(specs.size(), 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < specs.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < specs.size(); i = next++) run_one(i);
      });
    for (auto& th : pool) th.join();
  }

  std::vector<VerificationReport> out;
  for (auto& rs : per_spec)
    for (auto& r : rs) out.push_back(std::move(r));
  return out;
}

std::vector<VerificationReport> verify_grid(const std::vector<FamilyRange>& ranges,
                                            const std::vector<MatrixKind>& kinds,
                                            const VerifyOptions& options) {
  std::vector<GroupSpec> specs;
  for (const auto& r : ranges) {
    auto more = r.expand();
    specs.insert(specs.end(), more.begin(), more.end());
  }
  return verify_grid(specs, kinds, options);
}

// ---------------------------------------------------------------------------

OracleSpectrum oracle_spectrum(const OracleInstance& oracle, MatrixKind kind) {
  const IntMatrix m = oracle.matrix(kind);
  OracleSpectrum out;
  out.charpoly = char_poly(m);
  auto split = factor_integer_roots(out.charpoly, gershgorin_bound(m));
  SpectrumBuilder builder(kind, static_cast<long>(m.order()));
  for (const auto& [root, mult] : split.roots) builder.add(root, static_cast<long>(mult));
  out.residual = std::move(split.residual);
  try {
    for (const auto& e : closed_form_spectrum(oracle.spec, kind).entries) {
      if (!std::holds_alternative<QuadraticPair>(e.desc)) continue;
      const unsigned long k = divide_out(out.residual, factor_of(e.desc), ULONG_MAX);
      if (k > 0) builder.add(e.desc, static_cast<long>(k));
    }
  } catch (const Error&) {
    // No usable closed form: integer roots only.
  }
  out.spectrum = builder.build();
  out.complete = out.residual.degree() == 0;
  return out;
}

bool oracle_is_integral(const OracleInstance& oracle, MatrixKind kind,
                        std::vector<std::pair<Integer, unsigned long>>* roots) {
  const IntMatrix m = oracle.matrix(kind);
  auto split = factor_integer_roots(char_poly(m), gershgorin_bound(m));
  if (roots) *roots = split.roots;
  return split.residual.degree() == 0;
}

// ---------------------------------------------------------------------------

namespace {

struct Condition {
  std::string text;
  bool holds;
  std::optional<Integer> witness;
};

Condition square_condition(const std::string& text, const Integer& v) {
  auto r = is_perfect_square(v);
  return {text + " = " + v.get_str() + " is a perfect square", r.has_value(), r};
}

// Both roots of a x^2 + b x + c are integers.
Condition integral_roots_condition(const std::string& text, const Integer& a, const Integer& b,
                                   const Integer& c) {
  Condition cond{"roots of " + text + " are integers", false, std::nullopt};
  const auto roots = rational_roots_of_quadratic(a, b, c);
  if (!roots) return cond;
  cond.witness = is_perfect_square(b * b - 4 * a * c);
  cond.holds = roots->first.get_den() == 1 && roots->second.get_den() == 1;
  return cond;
}

Condition always(const std::string& text) { return {text, true, std::nullopt}; }

Condition predicted_condition(const GroupSpec& spec, MatrixKind kind) {
  const long n = spec.n();
  const long m = spec.m();
  switch (kind) {
    case MatrixKind::DistanceLaplacian:
      return always("distance Laplacian integral for every parameter");
    case MatrixKind::Distance:
      switch (spec.kind()) {
        case Family::GeneralizedQuaternion:
          return square_condition("5n^2-10n+9", Z(5 * n * n - 10 * n + 9));
        case Family::Quasidihedral: {
          Integer q = 1;
          mpz_mul_2exp(q.get_mpz_t(), q.get_mpz_t(), static_cast<mp_bitcnt_t>(n - 2));
          return square_condition("5q^2-10q+9 (q=2^(n-2))", Integer(5 * q * q - 10 * q + 9));
        }
        case Family::USixN:
          return square_condition("6n^2", Z(6 * n * n));
        case Family::Metacyclic:
          if (m % 2 == 1) return square_condition("5m^2-10m+9", Z(5 * m * m - 10 * m + 9));
          return square_condition("5m^2-20m+36", Z(5 * m * m - 20 * m + 36));
      }
      break;
    case MatrixKind::DistanceSignlessLaplacian:
      switch (spec.kind()) {
        case Family::GeneralizedQuaternion:
          return integral_roots_condition("(2n-2)x^2+(10-4n)x-2n", Z(2 * n - 2), Z(10 - 4 * n), Z(-2 * n));
        case Family::Quasidihedral: {
          Integer half = 1;
          mpz_mul_2exp(half.get_mpz_t(), half.get_mpz_t(), static_cast<mp_bitcnt_t>(n - 1));
          return integral_roots_condition("(2^(n-1)-2)x^2-(2^n-10)x-2^(n-1)", Integer(half - 2),
                                          Integer(-(2 * half - 10)), Integer(-half));
        }
        case Family::USixN:
          return always("distance signless Laplacian integral for every n");
        case Family::Metacyclic:
          if (m % 2 == 1)
            return integral_roots_condition("(m-1)x^2-(2m-5)x-m", Z(m - 1), Z(-(2 * m - 5)), Z(-m));
          if (m == 4) return always("distance signless Laplacian integral for every n when m = 4");
          return integral_roots_condition("(m-2)x^2-2(m-5)x-m", Z(m - 2), Z(-2 * (m - 5)), Z(-m));
      }
      break;
  }
  throw std::logic_error("unknown family or kind");
}

}  // namespace

IntegralityRecord integrality_record(const GroupSpec& spec, MatrixKind kind) {
  Condition cond = predicted_condition(spec, kind);
  return IntegralityRecord{spec,    kind, std::move(cond.text), cond.holds,
                           is_integral(closed_form_spectrum(spec, kind)), cond.witness};
}

std::vector<IntegralityRecord> search_integral(const FamilyRange& range, MatrixKind kind, long bound) {
  if (bound < range.n_lo)
    throw InvalidParameters("search bound " + std::to_string(bound) + " is below the smallest parameter " +
                            std::to_string(range.n_lo));
  FamilyRange r = range;
  r.n_hi = bound;
  std::vector<IntegralityRecord> out;
  for (const auto& spec : r.expand()) {
    auto rec = integrality_record(spec, kind);
    if (rec.predicted_integral || !rec.agrees()) out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace ncspec
