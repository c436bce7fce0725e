#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rmm/boolfn.hpp"
#include "rmm/parallel.hpp"

namespace rmm::c15 {

inline constexpr int kVars = 5;
inline constexpr int kClassCount = 29;
inline constexpr int kRadius = 12;
inline constexpr std::array<int, 4> kComplementClasses = {14, 22, 26, 28};
bool is_complement_class(int c);

// Class representatives as listed in the last appendix table (index = class).
const std::vector<boolfn::AnfPolynomial>& canonical_representatives();

struct CosetClassRow {
  int class_no;
  boolfn::AnfPolynomial representative;
  std::optional<boolfn::AnfPolynomial> added_g;
  std::optional<int> class_of_g;
  std::vector<boolfn::AnfPolynomial> sum_forms;  // "a ~ b ~ c"
  std::optional<int> expected_sum_class;
  bool complement_flag;
};
struct CosetClassTable {
  std::vector<CosetClassRow> rows;
};
const CosetClassTable& table1();

struct Lemma12Row {
  int class_no;
  boolfn::AnfPolynomial f;
  std::optional<boolfn::TransformScript> f_script;  // canonical -> f (asterisk rows)
  bool skipped = false;
  std::optional<int> printed_note;  // number printed in the last column of a skipped row
  std::optional<boolfn::AnfPolynomial> g, h, h_equal;
  std::optional<boolfn::TransformScript> h_script;  // h -> h_equal
  std::optional<int> expected_class;
};
struct GDerivation {
  boolfn::AnfPolynomial from;
  boolfn::TransformScript script;
  boolfn::AnfPolynomial to;
};
// A printed value that contradicts the rest of its row.
struct Erratum {
  int complement_class;
  int row;
  std::string field;
  std::string printed;
  std::string corrected;
};
struct Lemma12Table {
  int complement_class;
  std::vector<Lemma12Row> rows;
  std::vector<GDerivation> g_derivations;
  std::vector<Erratum> errata;
};
const std::vector<Lemma12Table>& lemma12_tables();

// FNV-1a over the parsed records; guards the embedded text.
std::uint64_t data_checksum();
extern const std::uint64_t kExpectedChecksum;

// EA invariants: degree above 1, weights of f + RM(1,5), and the multiset of
// the same distribution over all nonzero derivatives.
struct Signature {
  int degree;
  std::vector<std::uint32_t> weights;
  std::vector<std::vector<std::uint32_t>> derivatives;
  auto operator<=>(const Signature&) const = default;
};
Signature signature(const boolfn::BooleanFunction& f);

enum class Decision { Invariants, Search };
struct Classification {
  int class_no;
  Decision decided_by;
};
// Throws std::domain_error for odd-weight cosets and std::logic_error when no
// class matches.
Classification classify(const boolfn::BooleanFunction& f, const ExecPolicy& policy = {});
int class_of(const boolfn::BooleanFunction& f, const ExecPolicy& policy = {});
bool complement_membership_rm15(const boolfn::BooleanFunction& f);
int distance_rm15(const boolfn::BooleanFunction& f);

struct Check {
  std::string name;
  bool ok;
  std::string detail;
};

struct RowReport {
  int table_class = 0;  // 0 for the coset class table
  int row = 0;
  std::string f, g, h, h_equal;
  std::optional<int> expected_class;
  bool skipped = false;
  std::string skip_reason;
  std::optional<int> covered_by;  // row whose sum lands in this class
  std::vector<Check> checks;
  std::vector<std::string> discrepancies;  // printed values contradicted by computation
  bool pass = true;
};

struct VerificationReport {
  std::string title;
  std::vector<Check> table_checks;
  std::vector<RowReport> rows;
  int passed = 0, failed = 0, skipped = 0;
  bool all_pass() const;
};

VerificationReport verify_table1(const ExecPolicy& policy = {});
// One report per table, in order 14, 22, 26, 28.
std::vector<VerificationReport> verify_lemma12_tables(const ExecPolicy& policy = {});

std::string report_json(const std::vector<VerificationReport>& reports);
std::string report_markdown(const std::vector<VerificationReport>& reports);
std::string report_csv(const std::vector<VerificationReport>& reports);

}  // namespace rmm::c15
