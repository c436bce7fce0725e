#include "rmm/cosets.hpp"

#include <stdexcept>
#include <string>

namespace rmm::rm {

CosetSpace::CosetSpace(int length, std::span<const std::uint64_t> generators) : n_(length) {
  if (length < 0 || length > 64) throw std::invalid_argument("coset machinery needs length <= 64");
  const std::uint64_t mask = length == 64 ? ~0ULL : (1ULL << length) - 1;
  std::vector<std::uint64_t> rows;
  for (auto g : generators) {
    if (g & ~mask) throw std::invalid_argument("generator longer than the code length");
    rows.push_back(g);
  }
  // reduced row echelon form, pivots at the lowest possible positions
  for (int p = 0; p < n_ && !rows.empty(); ++p) {
    const std::uint64_t bit = 1ULL << p;
    auto it = rows.begin();
    while (it != rows.end() && !(*it & bit)) ++it;
    if (it == rows.end()) continue;
    const std::uint64_t row = *it;
    rows.erase(it);
    for (auto& r : rows)
      if (r & bit) r ^= row;
    for (auto& r : basis_)
      if (r & bit) r ^= row;
    basis_.push_back(row);
    pivots_.push_back(p);
  }
  for (auto r : rows)
    if (r) throw std::invalid_argument("generators are linearly dependent");
  if (basis_.size() != generators.size()) throw std::invalid_argument("generators are linearly dependent");

  std::vector<int> slot(n_, -1);
  {
    std::size_t pi = 0;
    for (int p = 0; p < n_; ++p) {
      if (pi < pivots_.size() && pivots_[pi] == p) {
        ++pi;
        continue;
      }
      slot[p] = static_cast<int>(free_.size());
      free_.push_back(p);
    }
  }
  unit_index_.assign(n_, 0);
  for (int j = 0; j < n_; ++j) {
    std::uint64_t v = 1ULL << j;
    for (std::size_t r = 0; r < basis_.size(); ++r)
      if ((v >> pivots_[r]) & 1u) v ^= basis_[r];
    std::uint64_t idx = 0;
    for (int p = 0; p < n_; ++p)
      if (((v >> p) & 1u) && slot[p] >= 0) idx |= 1ULL << slot[p];
    unit_index_[j] = idx;
  }
  index_tables_.resize((n_ + 7) / 8);
  for (std::size_t b = 0; b < index_tables_.size(); ++b)
    for (int byte = 0; byte < 256; ++byte) {
      std::uint64_t idx = 0;
      for (int k = 0; k < 8; ++k) {
        const int j = 8 * static_cast<int>(b) + k;
        if (((byte >> k) & 1) && j < n_) idx ^= unit_index_[j];
      }
      index_tables_[b][byte] = idx;
    }
  const int codim = codimension();
  deposit_tables_.resize((codim + 7) / 8);
  for (std::size_t b = 0; b < deposit_tables_.size(); ++b)
    for (int byte = 0; byte < 256; ++byte) {
      std::uint64_t v = 0;
      for (int k = 0; k < 8; ++k) {
        const int s = 8 * static_cast<int>(b) + k;
        if (((byte >> k) & 1) && s < codim) v |= 1ULL << free_[s];
      }
      deposit_tables_[b][byte] = v;
    }
}

std::uint64_t CosetSpace::coset_count() const {
  if (codimension() >= 64) throw std::domain_error("coset count does not fit in 64 bits");
  return 1ULL << codimension();
}

std::vector<std::uint8_t> coset_leader_weights(const CosetSpace& space) {
  if (space.codimension() > kMaxTableCodimension)
    throw std::domain_error("coset table needs codimension <= " + std::to_string(kMaxTableCodimension) +
                            ", got " + std::to_string(space.codimension()));
  std::vector<std::uint8_t> marked(space.coset_count(), 0);
  marked[0] = 1;
  return distance_to_cosets(space, marked);
}

std::vector<std::uint8_t> distance_to_cosets(const CosetSpace& space, const std::vector<std::uint8_t>& marked) {
  const std::uint64_t count = space.coset_count();
  if (marked.size() != count) throw std::invalid_argument("marker table has the wrong size");
  constexpr std::uint8_t kUnseen = 0xff;
  std::vector<std::uint8_t> dist(count, kUnseen);
  std::vector<std::uint64_t> frontier, next;
  for (std::uint64_t i = 0; i < count; ++i)
    if (marked[i]) {
      dist[i] = 0;
      frontier.push_back(i);
    }
  std::vector<std::uint64_t> steps;
  for (int j = 0; j < space.length(); ++j) {
    const std::uint64_t u = space.unit_index(j);
    if (u) steps.push_back(u);
  }
  for (std::uint8_t level = 1; !frontier.empty(); ++level) {
    next.clear();
    for (auto i : frontier)
      for (auto u : steps) {
        const std::uint64_t k = i ^ u;
        if (dist[k] == kUnseen) {
          dist[k] = level;
          next.push_back(k);
        }
      }
    frontier.swap(next);
  }
  return dist;
}

}  // namespace rmm::rm
