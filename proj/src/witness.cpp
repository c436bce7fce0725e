#include <algorithm>
#include <bit>
#include <stdexcept>

#include "rmm/boolfn.hpp"
#include "rmm/rmcodes.hpp"
#include "rmm/syndrome.hpp"

namespace rmm::rm {

Rm26Witness find_rm26_witness(const ExecPolicy& policy) {
  const LinearCode rm15 = rm_code(1, 5);
  const CosetTable t15 = coset_table(rm15, policy);
  const auto& dist15 = *t15.weight;
  const CosetSpace& space15 = *t15.space;

  const LinearCode rm25 = rm_code(2, 5);
  const CosetSpace space25(32, rm25.generator_words());
  std::vector<std::uint64_t> codewords;
  codewords.reserve(1u << space25.dimension());
  space25.for_each_codeword([&](std::uint64_t c) { codewords.push_back(c); });

  const std::pair<const char*, boolfn::AnfPolynomial> families[] = {{"g1*", syn::g1star(5)}, {"g2*", syn::g2star(5)}};
  std::uint64_t tried = 0;
  for (const auto& [name, anf] : families) {
    const auto yf = boolfn::truth_table_from_anf(anf);
    const std::uint64_t y = yf.word();
    if (distance_to_code(yf.table(), rm25) != 6) throw std::logic_error(std::string(name) + " is not a deep hole of RM(2,5)");

    // codewords of RM(2,5) at distance 6 from y
    std::vector<std::uint64_t> nearest;
    for (auto u : codewords)
      if (std::popcount(y ^ u) == 6) nearest.push_back(u);
    const std::uint64_t u0 = nearest.front();

    for (std::uint64_t idx = 0; idx < dist15.size(); ++idx) {
      if (dist15[idx] != 12) continue;
      const std::uint64_t w = u0 ^ space15.representative(idx);
      bool ok = true;
      for (auto u : nearest)
        if (dist15[space15.index_of(w ^ u)] != 12) {
          ok = false;
          break;
        }
      if (!ok) continue;
      ++tried;
      // d((y,w), RM(2,6)) = min over u of d(y,u) + d(w+u, RM(1,5))
      int best = 64;
      for (auto u : codewords) {
        best = std::min(best, std::popcount(y ^ u) + dist15[space15.index_of(w ^ u)]);
        if (best < 18) break;
      }
      if (best < 18) continue;
      const BitVec yv = BitVec::from_word(32, y), wv = BitVec::from_word(32, w);
      return Rm26Witness{yv, wv, name, rm26_witness_distance(yv, wv), tried};
    }
  }
  throw std::runtime_error("no (y, w) pair at distance 18 found");
}

}  // namespace rmm::rm
