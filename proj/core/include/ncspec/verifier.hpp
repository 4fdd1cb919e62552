#pragma once

// Arbitration between the closed-form spectra and the exact oracle
// (group -> graph -> matrix -> characteristic polynomial).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncspec/closed_form.hpp"
#include "ncspec/exact_algebra.hpp"
#include "ncspec/graph.hpp"
#include "ncspec/group.hpp"

namespace ncspec {

inline constexpr std::size_t kDefaultOrderCap = 150;
// Raised cap for the quasidihedral group of order 256 (matrix order 254).
inline constexpr std::size_t kLargeOrderCap = 256;

struct VerifyOptions {
  std::size_t order_cap = kDefaultOrderCap;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

// Oracle-side artifacts for one group, shared by all three matrix kinds.
struct OracleInstance {
  GroupSpec spec;
  NCGraph graph;  // part-major
  PartitionStructure partition;
  IntMatrix distances;

  IntMatrix matrix(MatrixKind kind) const;
};

// Builds group, non-commuting graph, certified partition and distance matrix.
// Throws OrderCapExceeded before enumerating when the graph order exceeds the
// cap; propagates NotCompleteMultipartite and DisconnectedGraph.
OracleInstance build_oracle(const GroupSpec& spec, std::size_t order_cap = kDefaultOrderCap);

enum class ReportStatus { Matched, Mismatch, Skipped, Error };
std::string to_string(ReportStatus s);

struct VerificationReport {
  GroupSpec spec;
  MatrixKind kind;
  std::string claim;
  ReportStatus status = ReportStatus::Error;
  bool matched = false;  // oracle_poly == closed_poly

  long order = 0;
  IntPolynomial oracle_poly;
  IntPolynomial closed_poly;
  // Empty when matched; otherwise the first differing coefficient.
  std::string diff_summary;
  PartitionStructure partition;
  bool partition_matches_claim = false;

  // Oracle polynomial after dividing out every closed-form factor it contains
  // (up to the claimed multiplicity), and the claimed factors it did not contain.
  IntPolynomial residual;
  std::vector<SpectrumEntry> unmatched_closed;
  // Integer roots of the residual, when it has any.
  std::vector<std::pair<Integer, unsigned long>> residual_integer_roots;

  Integer matrix_trace;
  // trace(matrix) equals both the sum of transmissions (zero for D) and the
  // negated second-highest oracle coefficient.
  bool oracle_trace_consistent = false;
  // trace(matrix) equals the closed form's exact eigenvalue sum.
  bool closed_trace_matches = false;
  // For the distance matrix only: the complete multipartite distance
  // polynomial of the certified partition equals the oracle polynomial.
  std::optional<bool> multipartite_formula_matched;

  // Set for Skipped/Error reports.
  std::string error;

  explicit VerificationReport(GroupSpec s, MatrixKind k) : spec(s), kind(k) {}
};

// Throws OrderCapExceeded; propagates NotCompleteMultipartite.
VerificationReport verify_instance(const GroupSpec& spec, MatrixKind kind,
                                   const VerifyOptions& options = {});

// verify_instance for several kinds on one oracle build; same error behavior.
std::vector<VerificationReport> verify_kinds(const GroupSpec& spec,
                                             const std::vector<MatrixKind>& kinds,
                                             const VerifyOptions& options = {});

struct FamilyRange {
  Family family;
  long n_lo, n_hi;
  long m_lo = 0, m_hi = 0;  // metacyclic only

  // Every GroupSpec in the range, m-major then n ascending. Throws
  // InvalidParameters if any member violates its family bounds.
  std::vector<GroupSpec> expand() const;
};

// The default arbitration grid. The quasidihedral range stops at n = 7
// unless include_large is set.
std::vector<FamilyRange> default_grid(bool include_large = false);

// One report per (spec, kind), ordered by range, then parameters, then kind.
// Per-instance failures are embedded in the reports (Skipped or Error);
// independent groups run concurrently.
std::vector<VerificationReport> verify_grid(const std::vector<FamilyRange>& ranges,
                                            const std::vector<MatrixKind>& kinds,
                                            const VerifyOptions& options = {});
std::vector<VerificationReport> verify_grid(const std::vector<GroupSpec>& specs,
                                            const std::vector<MatrixKind>& kinds,
                                            const VerifyOptions& options = {});

// ---------------------------------------------------------------------------
// Oracle-only spectrum

struct OracleSpectrum {
  IntPolynomial charpoly;
  SpectrumSpec spectrum;       // integer roots plus closed-form pairs that divide
  IntPolynomial residual;      // what could not be factored
  bool complete = false;       // residual == 1
};

// Factors the exact characteristic polynomial: every integer root inside the
// Gershgorin window, then any quadratic pair the closed form predicts.
OracleSpectrum oracle_spectrum(const OracleInstance& oracle, MatrixKind kind);

// ---------------------------------------------------------------------------
// Integrality

struct IntegralityRecord {
  GroupSpec params;
  MatrixKind kind;
  std::string condition;       // the arithmetic condition evaluated
  bool predicted_integral;     // from the arithmetic condition
  bool computed_integral;      // from the normalized closed-form spectrum
  std::optional<Integer> witness;  // square root found by the condition, if any

  bool agrees() const { return predicted_integral == computed_integral; }
};

IntegralityRecord integrality_record(const GroupSpec& spec, MatrixKind kind);

// Records with predicted_integral set, plus every disagreement, over
// n in [range.n_lo, bound] (and range's m values for metacyclic).
std::vector<IntegralityRecord> search_integral(const FamilyRange& range, MatrixKind kind, long bound);

// True when the exact characteristic polynomial splits into integer linear
// factors; the roots are returned through `roots` if given.
bool oracle_is_integral(const OracleInstance& oracle, MatrixKind kind,
                        std::vector<std::pair<Integer, unsigned long>>* roots = nullptr);

}  // namespace ncspec
