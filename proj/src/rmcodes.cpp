#include "rmm/rmcodes.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <stdexcept>

#include "rmm/bits.hpp"
#include "rmm/boolfn.hpp"
#include "rmm/gf2.hpp"
#include "rmm/syndrome.hpp"

namespace rmm::rm {

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

std::uint64_t word_of(const BitVec& v) {
  if (v.size() > 64) throw std::domain_error("vector longer than 64 bits");
  return v.word(0);
}

void require_word_length(const LinearCode& c) {
  if (c.length() > 64)
    throw std::domain_error(c.name() + ": length " + std::to_string(c.length()) +
                            " exceeds the 64-bit coset machinery");
}

std::shared_ptr<const CosetSpace> make_space(const LinearCode& c) {
  require_word_length(c);
  const auto gens = c.generator_words();
  return std::make_shared<const CosetSpace>(static_cast<int>(c.length()), gens);
}

int enumeration_distance(const BitVec& v, const LinearCode& c) {
  if (c.dimension() > kMaxEnumerationDimension)
    throw std::domain_error(c.name() + ": dimension " + std::to_string(c.dimension()) +
                            " too large to enumerate and no fast path applies");
  const auto& g = c.generators();
  if (c.length() <= 64) {
    std::uint64_t x = word_of(v);
    int best = std::popcount(x);
    const std::uint64_t count = 1ULL << g.size();
    for (std::uint64_t i = 1; i < count; ++i) {
      x ^= g[std::countr_zero(i)].word(0);
      best = std::min(best, std::popcount(x));
    }
    return best;
  }
  BitVec x = v;
  int best = static_cast<int>(x.popcount());
  const std::uint64_t count = 1ULL << g.size();
  for (std::uint64_t i = 1; i < count; ++i) {
    x ^= g[std::countr_zero(i)];
    best = std::min(best, static_cast<int>(x.popcount()));
  }
  return best;
}

class TableSource final : public ComplementSource {
 public:
  static constexpr std::uint64_t kChunk = 1ULL << 16;

  explicit TableSource(CosetTable t) : t_(std::move(t)) {
    for (auto w : *t_.weight) count_ += (w == t_.radius);
  }
  std::uint64_t class_count() const override { return count_; }
  bool contains(std::uint64_t v) const override { return (*t_.weight)[t_.space->index_of(v)] == t_.radius; }
  std::uint64_t partitions() const override { return (t_.weight->size() + kChunk - 1) / kChunk; }
  bool for_each(std::uint64_t p, const std::function<bool(std::uint64_t)>& visit) const override {
    const auto& w = *t_.weight;
    const std::uint64_t end = std::min<std::uint64_t>(w.size(), (p + 1) * kChunk);
    for (std::uint64_t i = p * kChunk; i < end; ++i)
      if (w[i] == t_.radius && !visit(t_.space->representative(i))) return false;
    return true;
  }

 private:
  CosetTable t_;
  std::uint64_t count_ = 0;
};

// Repetition code of even length n: deep holes are the weight-n/2 vectors;
// one representative per coset has the top bit clear.
class HalfWeightSource final : public ComplementSource {
 public:
  static constexpr std::uint64_t kChunk = 1ULL << 20;

  explicit HalfWeightSource(int n) : n_(n), w_(n / 2), count_(binomial(n - 1, n / 2)) {}
  std::uint64_t class_count() const override { return count_; }
  bool contains(std::uint64_t v) const override { return std::popcount(v) == w_; }
  std::uint64_t partitions() const override { return (count_ + kChunk - 1) / kChunk; }
  bool for_each(std::uint64_t p, const std::function<bool(std::uint64_t)>& visit) const override {
    const std::uint64_t begin = p * kChunk;
    const std::uint64_t end = std::min(count_, begin + kChunk);
    if (begin >= end) return true;
    std::uint64_t v = unrank(begin);
    for (std::uint64_t r = begin; r < end; ++r) {
      if (!visit(v)) return false;
      const std::uint64_t u = v & (~v + 1);
      const std::uint64_t s = v + u;
      v = (((s ^ v) >> 2) / u) | s;
    }
    return true;
  }

 private:
  // rank-th w-subset of {0..n-2} in increasing integer order
  std::uint64_t unrank(std::uint64_t rank) const {
    std::uint64_t v = 0;
    int c = n_ - 2;
    for (int i = w_; i >= 1; --i) {
      while (binomial(c, i) > rank) --c;
      v |= 1ULL << c;
      rank -= binomial(c, i);
      --c;
    }
    return v;
  }

  int n_, w_;
  std::uint64_t count_;
};

class ParityExtendedSource final : public ComplementSource {
 public:
  ParityExtendedSource(std::shared_ptr<const ComplementSource> inner, int r) : inner_(std::move(inner)), r_(r) {}
  std::uint64_t class_count() const override { return inner_->class_count(); }
  bool contains(std::uint64_t v) const override {
    const std::uint64_t body = v >> 1;
    return inner_->contains(body) && parity_extended_word(body, r_) == v;
  }
  std::uint64_t partitions() const override { return inner_->partitions(); }
  bool for_each(std::uint64_t p, const std::function<bool(std::uint64_t)>& visit) const override {
    return inner_->for_each(p, [&](std::uint64_t v) { return visit(parity_extended_word(v, r_)); });
  }

 private:
  std::shared_ptr<const ComplementSource> inner_;
  int r_;
};

bool is_repetition(const LinearCode& c) {
  if (c.dimension() != 1) return false;
  return c.generators()[0].popcount() == c.length();
}

}  // namespace

LinearCode::LinearCode(std::size_t length, std::vector<BitVec> generators, std::optional<RmParams> rm)
    : n_(length), gens_(std::move(generators)), rm_(rm) {
  for (const auto& g : gens_)
    if (g.size() != n_) throw std::invalid_argument("generator length differs from code length");
  if (!gens_.empty() && gf2::rank(gf2::BitMatrix::from_rows(gens_)) != static_cast<int>(gens_.size()))
    throw std::invalid_argument("generators are linearly dependent");
}

std::string LinearCode::name() const {
  if (rm_) return "RM(" + std::to_string(rm_->order) + "," + std::to_string(rm_->vars) + ")";
  return "[" + std::to_string(n_) + "," + std::to_string(gens_.size()) + "] code";
}

bool LinearCode::contains(const BitVec& v) const {
  if (v.size() != n_) throw std::invalid_argument("vector length differs from code length");
  if (gens_.empty()) return v.none();
  std::vector<BitVec> rows = gens_;
  const int r = gf2::rank(gf2::BitMatrix::from_rows(rows));
  rows.push_back(v);
  return gf2::rank(gf2::BitMatrix::from_rows(rows)) == r;
}

std::vector<std::uint64_t> LinearCode::generator_words() const {
  require_word_length(*this);
  std::vector<std::uint64_t> out;
  for (const auto& g : gens_) out.push_back(g.word(0));
  return out;
}

LinearCode rm_code(int k, int m) {
  if (m < 0 || m > boolfn::kMaxVars || k < 0 || k > m)
    throw std::invalid_argument("RM(k,m) needs 0 <= k <= m <= 16, got k=" + std::to_string(k) +
                                " m=" + std::to_string(m));
  const std::size_t n = std::size_t{1} << m;
  std::vector<std::uint32_t> monos;
  for (int d = 0; d <= k; ++d)
    for (std::uint32_t u = 0; u < n; ++u)
      if (std::popcount(u) == d) monos.push_back(u);
  std::vector<BitVec> gens;
  for (auto u : monos) {
    BitVec g(n);
    for (std::uint32_t x = 0; x < n; ++x)
      if ((x & u) == u) g.set(x);
    gens.push_back(std::move(g));
  }
  return LinearCode(n, std::move(gens), RmParams{k, m});
}

bool same_code(const LinearCode& a, const LinearCode& b) {
  if (a.length() != b.length() || a.dimension() != b.dimension()) return false;
  if (a.dimension() == 0) return true;
  std::vector<BitVec> rows = a.generators();
  rows.insert(rows.end(), b.generators().begin(), b.generators().end());
  return gf2::rank(gf2::BitMatrix::from_rows(rows)) == a.dimension();
}

LinearCode uuv_code(const LinearCode& c1, const LinearCode& c2) {
  if (c1.length() != c2.length()) throw std::invalid_argument("uuv: codes have different lengths");
  const std::size_t n = c1.length();
  std::vector<BitVec> gens;
  for (const auto& u : c1.generators()) {
    BitVec g(2 * n);
    for (std::size_t i = 0; i < n; ++i)
      if (u.get(i)) {
        g.set(i);
        g.set(n + i);
      }
    gens.push_back(std::move(g));
  }
  for (const auto& v : c2.generators()) {
    BitVec g(2 * n);
    for (std::size_t i = 0; i < n; ++i)
      if (v.get(i)) g.set(n + i);
    gens.push_back(std::move(g));
  }
  return LinearCode(2 * n, std::move(gens));
}

LinearCode parity_extension(const LinearCode& c) {
  std::vector<BitVec> gens;
  for (const auto& g : c.generators()) {
    BitVec e(c.length() + 1);
    for (std::size_t i = 0; i < c.length(); ++i)
      if (g.get(i)) e.set(i + 1);
    if (g.popcount() & 1u) e.set(0);
    gens.push_back(std::move(e));
  }
  return LinearCode(c.length() + 1, std::move(gens));
}

LinearCode puncture_first(const LinearCode& c) {
  if (c.length() == 0) throw std::invalid_argument("cannot puncture an empty code");
  const std::size_t n = c.length() - 1;
  std::vector<BitVec> basis;
  for (const auto& g : c.generators()) {
    BitVec p(n);
    for (std::size_t i = 0; i < n; ++i)
      if (g.get(i + 1)) p.set(i);
    std::vector<BitVec> trial = basis;
    trial.push_back(p);
    if (!p.none() && gf2::rank(gf2::BitMatrix::from_rows(trial)) == static_cast<int>(trial.size()))
      basis = std::move(trial);
  }
  return LinearCode(n, std::move(basis));
}

int distance_to_code(const BitVec& v, const LinearCode& c, DistanceMethod method) {
  if (v.size() != c.length()) throw std::invalid_argument("vector length differs from code length");
  const auto& rm = c.rm();
  if (method == DistanceMethod::Auto) {
    if (rm && rm->order >= rm->vars) return 0;
    if (rm && rm->order == rm->vars - 1) return static_cast<int>(v.popcount() & 1u);
    if (rm && rm->order == 0) {
      const int w = static_cast<int>(v.popcount());
      return std::min(w, static_cast<int>(c.length()) - w);
    }
    // extended Hamming dual: radius 2
    if (rm && rm->order == rm->vars - 2) {
      if (v.popcount() & 1u) return 1;
      return boolfn::degree(boolfn::BooleanFunction(rm->vars, v)) <= rm->order ? 0 : 2;
    }
    if (rm && rm->order == 1) method = DistanceMethod::Walsh;
    else if (rm && rm->order == rm->vars - 3 && rm->vars <= syn::kMaxSyndromeVars) method = DistanceMethod::Syndrome;
    else method = DistanceMethod::Enumeration;
  }
  switch (method) {
    case DistanceMethod::Walsh:
      if (!rm || rm->order != 1) throw std::invalid_argument("Walsh path needs RM(1,m)");
      return boolfn::nonlinearity(boolfn::BooleanFunction(rm->vars, v));
    case DistanceMethod::Syndrome: {
      if (!rm || rm->vars < 3 || rm->order != rm->vars - 3) throw std::invalid_argument("syndrome path needs RM(m-3,m)");
      const int m = rm->vars;
      BitVec punctured(c.length() - 1);
      for (std::size_t i = 0; i + 1 < c.length(); ++i)
        if (v.get(i + 1)) punctured.set(i);
      const int t = syn::distance_via_syndrome(punctured, m);
      return t + static_cast<int>((t + v.popcount()) & 1u);
    }
    default:
      return enumeration_distance(v, c);
  }
}

CosetTable coset_table(const LinearCode& c, const ExecPolicy& policy) {
  auto space = make_space(c);
  if (space->codimension() > kMaxTableCodimension)
    throw std::domain_error(c.name() + ": " + std::to_string(space->codimension()) +
                            " redundancy bits exceed the coset table limit of " +
                            std::to_string(kMaxTableCodimension));
  auto weight = std::make_shared<std::vector<std::uint8_t>>();
  if (c.rm() && c.rm()->order == 1 && c.rm()->vars >= 1) {
    const int m = c.rm()->vars;
    const int n = 1 << m;
    std::vector<std::uint64_t> lin(n);
    for (int a = 0; a < n; ++a) lin[a] = bits::linear_table(a, m);
    weight->resize(space->coset_count());
    const CosetSpace& sp = *space;
    auto& out = *weight;
    parallel_chunks(out.size(), 1ULL << 16, policy, c.name() + " coset scan",
                    [&](std::uint64_t begin, std::uint64_t end, unsigned) {
                      for (std::uint64_t i = begin; i < end; ++i) {
                        const std::uint64_t v = sp.representative(i);
                        int best = n;
                        for (int a = 0; a < n; ++a) {
                          const int w = std::popcount(v ^ lin[a]);
                          best = std::min(best, std::min(w, n - w));
                        }
                        out[i] = static_cast<std::uint8_t>(best);
                      }
                    });
  } else {
    *weight = coset_leader_weights(*space);
  }
  const int radius = *std::max_element(weight->begin(), weight->end());
  return CosetTable{space, weight, radius};
}

ComplementDescription::ComplementDescription(LinearCode code, int radius, std::shared_ptr<const ComplementSource> source)
    : code_(std::move(code)), radius_(radius), source_(std::move(source)) {}

std::uint64_t ComplementDescription::size() const {
  const int dim = code_.dimension();
  const std::uint64_t classes = class_count();
  if (dim >= 64 || (classes && (classes > (std::numeric_limits<std::uint64_t>::max() >> dim))))
    return std::numeric_limits<std::uint64_t>::max();
  return classes << dim;
}

bool ComplementDescription::contains(const BitVec& v) const {
  if (v.size() != code_.length()) throw std::invalid_argument("vector length differs from code length");
  return source_->contains(v.word(0));
}

void ComplementDescription::for_each_representative(const std::function<bool(std::uint64_t)>& visit) const {
  for (std::uint64_t p = 0; p < partitions(); ++p)
    if (!for_each_in(p, visit)) return;
}

std::vector<std::uint64_t> ComplementDescription::representative_words(std::uint64_t limit) const {
  if (class_count() > limit)
    throw std::domain_error("complement has " + std::to_string(class_count()) +
                            " classes; stream it instead of materializing");
  std::vector<std::uint64_t> out;
  out.reserve(class_count());
  for_each_representative([&](std::uint64_t v) {
    out.push_back(v);
    return true;
  });
  return out;
}

std::vector<BitVec> ComplementDescription::representatives(std::uint64_t limit) const {
  std::vector<BitVec> out;
  for (auto w : representative_words(limit)) out.push_back(BitVec::from_word(code_.length(), w));
  return out;
}

ComplementDescription metric_complement(const LinearCode& c, const ExecPolicy& policy) {
  require_word_length(c);
  const int codim = static_cast<int>(c.length()) - c.dimension();
  if (codim <= kMaxTableCodimension) {
    CosetTable t = coset_table(c, policy);
    const int radius = t.radius;
    return ComplementDescription(c, radius, std::make_shared<TableSource>(std::move(t)));
  }
  if (is_repetition(c) && c.length() % 2 == 0) {
    const int n = static_cast<int>(c.length());
    return ComplementDescription(c, n / 2, std::make_shared<HalfWeightSource>(n));
  }
  throw std::domain_error(c.name() + ": " + std::to_string(codim) +
                          " redundancy bits exceed the coset scan limit and no fast path applies");
}

int covering_radius(const LinearCode& c, const ExecPolicy& policy) { return metric_complement(c, policy).radius(); }

std::vector<BitVec> second_complement_members(const LinearCode& c, const ComplementDescription& comp,
                                              const ExecPolicy& policy) {
  if (!same_code(c, comp.code())) throw std::invalid_argument("complement was computed for a different code");
  const auto space = make_space(c);
  const std::uint64_t parts = comp.partitions();

  auto first_in = [&](std::uint64_t p, std::uint64_t& out) {
    bool found = false;
    comp.for_each_in(p, [&](std::uint64_t v) {
      out = v;
      found = true;
      return false;
    });
    return found;
  };
  std::uint64_t d0 = 0;
  bool have_d0 = false;
  for (std::uint64_t p = 0; p < parts && !have_d0; ++p) have_d0 = first_in(p, d0);
  if (!have_d0) throw std::logic_error("metric complement is empty");

  // cheap filter: a member must map a few spread-out deep holes into the complement
  std::vector<std::uint64_t> probes;
  constexpr std::uint64_t kProbes = 32;
  for (std::uint64_t j = 0; j < kProbes; ++j) {
    std::uint64_t v;
    if (first_in(j * parts / kProbes, v) && std::find(probes.begin(), probes.end(), v) == probes.end())
      probes.push_back(v);
  }

  std::mutex mu;
  std::vector<std::uint64_t> survivors;
  parallel_chunks(parts, 1, policy, "second complement filter", [&](std::uint64_t b, std::uint64_t e, unsigned) {
    std::vector<std::uint64_t> local;
    for (std::uint64_t p = b; p < e; ++p)
      comp.for_each_in(p, [&](std::uint64_t d) {
        const std::uint64_t s = d0 ^ d;
        const std::uint64_t idx = space->index_of(s);
        if (idx == 0) return true;
        for (auto t : probes)
          if (!comp.contains_word(s ^ t)) return true;
        local.push_back(idx);
        return true;
      });
    std::lock_guard lock(mu);
    survivors.insert(survivors.end(), local.begin(), local.end());
  });
  std::sort(survivors.begin(), survivors.end());

  std::vector<std::uint64_t> members{0};
  for (auto idx : survivors) {
    const std::uint64_t s = space->representative(idx);
    std::atomic<bool> ok{true};
    parallel_chunks(parts, 1, policy, "second complement check", [&](std::uint64_t b, std::uint64_t e, unsigned) {
      for (std::uint64_t p = b; p < e && ok.load(std::memory_order_relaxed); ++p)
        comp.for_each_in(p, [&](std::uint64_t d) {
          if (!comp.contains_word(s ^ d)) {
            ok = false;
            return false;
          }
          return ok.load(std::memory_order_relaxed);
        });
    });
    if (ok) members.push_back(idx);
  }
  std::vector<BitVec> out;
  for (auto idx : members) out.push_back(BitVec::from_word(c.length(), space->representative(idx)));
  return out;
}

bool is_metrically_regular(const LinearCode& c, const ExecPolicy& policy) {
  const auto comp = metric_complement(c, policy);
  return second_complement_members(c, comp, policy).size() == 1;
}

ComplementDescription extend_parity_complement(const ComplementDescription& comp, int r) {
  if (r != comp.radius())
    throw std::invalid_argument("radius " + std::to_string(r) + " does not match the complement's radius " +
                                std::to_string(comp.radius()));
  LinearCode ext = parity_extension(comp.code());
  require_word_length(ext);
  // Reuse the inner source through a thin adapter.
  struct Inner final : ComplementSource {
    explicit Inner(const ComplementDescription& c) : c_(c) {}
    std::uint64_t class_count() const override { return c_.class_count(); }
    bool contains(std::uint64_t v) const override { return c_.contains_word(v); }
    std::uint64_t partitions() const override { return c_.partitions(); }
    bool for_each(std::uint64_t p, const std::function<bool(std::uint64_t)>& visit) const override {
      return c_.for_each_in(p, visit);
    }
    ComplementDescription c_;
  };
  auto inner = std::make_shared<Inner>(comp);
  return ComplementDescription(std::move(ext), r + 1, std::make_shared<ParityExtendedSource>(inner, r));
}

std::uint64_t parity_extended_word(std::uint64_t v, int r) {
  if (v >> 63) throw std::domain_error("parity extension would exceed 64 bits");
  return (v << 1) | static_cast<std::uint64_t>((std::popcount(v) + r + 1) & 1);
}

int complement_covering_radius(const ComplementDescription& comp) {
  const auto space = make_space(comp.code());
  if (space->codimension() > kMaxTableCodimension)
    throw std::domain_error("complement radius needs codimension <= " + std::to_string(kMaxTableCodimension));
  std::vector<std::uint8_t> marked(space->coset_count(), 0);
  comp.for_each_representative([&](std::uint64_t v) {
    marked[space->index_of(v)] = 1;
    return true;
  });
  const auto dist = distance_to_cosets(*space, marked);
  return *std::max_element(dist.begin(), dist.end());
}

int rm26_witness_distance(const BitVec& y, const BitVec& w) {
  if (y.size() != 32 || w.size() != 32) throw std::invalid_argument("witness halves must have 32 bits");
  const LinearCode code = rm_code(2, 6);
  const auto gens = code.generator_words();
  std::uint64_t x = y.word(0) | (w.word(0) << 32);
  int best = std::popcount(x);
  const std::uint64_t count = 1ULL << gens.size();
  for (std::uint64_t i = 1; i < count; ++i) {
    x ^= gens[std::countr_zero(i)];
    best = std::min(best, std::popcount(x));
  }
  return best;
}

CodeReport code_report(const LinearCode& c, bool with_regularity, const ExecPolicy& policy) {
  CodeReport r;
  if (c.rm()) {
    r.order = c.rm()->order;
    r.vars = c.rm()->vars;
  }
  r.length = c.length();
  r.dimension = c.dimension();
  const auto comp = metric_complement(c, policy);
  r.radius = comp.radius();
  r.complement_class_count = comp.class_count();
  r.complement_size = comp.size();
  if (with_regularity) r.regular = second_complement_members(c, comp, policy).size() == 1;
  return r;
}

}  // namespace rmm::rm
