#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rmm/bitvec.hpp"
#include "rmm/cosets.hpp"
#include "rmm/parallel.hpp"

namespace rmm::rm {

struct RmParams {
  int order;
  int vars;
  bool operator==(const RmParams&) const = default;
};

class LinearCode {
 public:
  LinearCode(std::size_t length, std::vector<BitVec> generators, std::optional<RmParams> rm = std::nullopt);

  std::size_t length() const { return n_; }
  int dimension() const { return static_cast<int>(gens_.size()); }
  const std::vector<BitVec>& generators() const { return gens_; }
  const std::optional<RmParams>& rm() const { return rm_; }
  bool is_rm(int order, int vars) const { return rm_ && rm_->order == order && rm_->vars == vars; }
  std::string name() const;

  bool contains(const BitVec& v) const;
  // Needs length <= 64.
  std::vector<std::uint64_t> generator_words() const;

 private:
  std::size_t n_;
  std::vector<BitVec> gens_;
  std::optional<RmParams> rm_;
};

LinearCode rm_code(int k, int m);
// Same row space.
bool same_code(const LinearCode& a, const LinearCode& b);
// {(u, u+v)}: u from c1 in the low half, u+v in the high half.
LinearCode uuv_code(const LinearCode& c1, const LinearCode& c2);
// Parity bit prepended at position 0.
LinearCode parity_extension(const LinearCode& c);
// Position 0 deleted.
LinearCode puncture_first(const LinearCode& c);

enum class DistanceMethod { Auto, Enumeration, Walsh, Syndrome };
inline constexpr int kMaxEnumerationDimension = 26;

int distance_to_code(const BitVec& v, const LinearCode& c, DistanceMethod method = DistanceMethod::Auto);

// Deep-hole cosets of a code of length <= 64, as one source of truth for
// membership and (partitioned) enumeration of canonical representatives.
class ComplementSource {
 public:
  virtual ~ComplementSource() = default;
  virtual std::uint64_t class_count() const = 0;
  virtual bool contains(std::uint64_t v) const = 0;
  virtual std::uint64_t partitions() const = 0;
  // Stops early when visit returns false; returns false if it stopped.
  virtual bool for_each(std::uint64_t partition, const std::function<bool(std::uint64_t)>& visit) const = 0;
};

class ComplementDescription {
 public:
  ComplementDescription(LinearCode code, int radius, std::shared_ptr<const ComplementSource> source);

  const LinearCode& code() const { return code_; }
  int radius() const { return radius_; }
  std::uint64_t class_count() const { return source_->class_count(); }
  // Number of deep holes (saturates at UINT64_MAX).
  std::uint64_t size() const;

  bool contains(const BitVec& v) const;
  bool contains_word(std::uint64_t v) const { return source_->contains(v); }

  std::uint64_t partitions() const { return source_->partitions(); }
  bool for_each_in(std::uint64_t partition, const std::function<bool(std::uint64_t)>& visit) const {
    return source_->for_each(partition, visit);
  }
  void for_each_representative(const std::function<bool(std::uint64_t)>& visit) const;
  // Materialized; throws when there are more than `limit` classes.
  std::vector<std::uint64_t> representative_words(std::uint64_t limit = 1ULL << 22) const;
  std::vector<BitVec> representatives(std::uint64_t limit = 1ULL << 22) const;

 private:
  LinearCode code_;
  int radius_;
  std::shared_ptr<const ComplementSource> source_;
};

int covering_radius(const LinearCode& c, const ExecPolicy& policy = {});
ComplementDescription metric_complement(const LinearCode& c, const ExecPolicy& policy = {});
std::vector<BitVec> second_complement_members(const LinearCode& c, const ComplementDescription& comp,
                                              const ExecPolicy& policy = {});
bool is_metrically_regular(const LinearCode& c, const ExecPolicy& policy = {});
ComplementDescription extend_parity_complement(const ComplementDescription& comp, int r);
// v with the bit chosen for a deep hole of a radius-r code prepended:
// the parity of v when r is odd, its complement when r is even.
std::uint64_t parity_extended_word(std::uint64_t v, int r);
// Covering radius of the deep-hole set itself (codimension <= 26).
int complement_covering_radius(const ComplementDescription& comp);

// Per-coset minimum distance table (codimension <= 26), using the RM(1,m)
// Walsh kernel when it applies and breadth-first search otherwise.
struct CosetTable {
  std::shared_ptr<const CosetSpace> space;
  std::shared_ptr<const std::vector<std::uint8_t>> weight;
  int radius;
};
CosetTable coset_table(const LinearCode& c, const ExecPolicy& policy = {});

// d((y, w), RM(2,6)) by enumerating all 2^22 codewords.
int rm26_witness_distance(const BitVec& y, const BitVec& w);

struct Rm26Witness {
  BitVec y, w;
  std::string y_kind;  // which deep-hole family y was taken from
  int distance;
  std::uint64_t candidates_tried;
};
// Searches w over deep holes of RM(1,5) shifted by a codeword of RM(2,5)
// nearest to y; throws if no witness exists for any tried y.
Rm26Witness find_rm26_witness(const ExecPolicy& policy = {});

struct CodeReport {
  int order = -1, vars = -1;
  std::size_t length = 0;
  int dimension = 0;
  int radius = 0;
  std::uint64_t complement_class_count = 0;
  std::uint64_t complement_size = 0;
  std::optional<bool> regular;
};
CodeReport code_report(const LinearCode& c, bool with_regularity, const ExecPolicy& policy = {});

}  // namespace rmm::rm
