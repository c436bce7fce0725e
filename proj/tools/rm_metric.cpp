#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rmm/bits.hpp"
#include "rmm/boolfn.hpp"
#include "rmm/classify15.hpp"
#include "rmm/rmcodes.hpp"
#include "rmm/syndrome.hpp"

using namespace rmm;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string format = "json";
  unsigned threads = 0;
  bool quiet = false;
};

ExecPolicy policy_of(const Options& o) {
  ExecPolicy p;
  p.threads = o.threads;
  if (!o.quiet) p.progress = [](const std::string& msg) { std::cerr << msg << std::endl; };
  return p;
}

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : ";") + cell(e);
    return s;
  }
  return v.dump();
}

// One flat record in the selected format.
void emit(const json& rec, const std::string& format) {
  if (format == "json") {
    std::cout << rec.dump(2) << "\n";
  } else if (format == "csv") {
    std::string head, row;
    for (const auto& [k, v] : rec.items()) {
      head += (head.empty() ? "" : ",") + k;
      row += (row.empty() ? "" : ",") + cell(v);
    }
    std::cout << head << "\n" << row << "\n";
  } else {
    std::cout << "| field | value |\n|-------|-------|\n";
    for (const auto& [k, v] : rec.items()) std::cout << "| " << k << " | " << cell(v) << " |\n";
  }
}

rm::LinearCode code_of(int k, int m) {
  if (m < 1 || m > 16) throw UsageError("--m must be in 1..16");
  if (k < 0 || k > m) throw UsageError("--k must be in 0..m");
  return rm::rm_code(k, m);
}

// Coset scans work on words of length <= 64; the library rejects codimension
// beyond its table limit with a domain error.
void require_table_size(int k, int m) {
  if (m > 6)
    throw UsageError("RM(" + std::to_string(k) + "," + std::to_string(m) + "): coset scans need m <= 6");
}

rm::DistanceMethod method_of(const std::string& s) {
  if (s == "auto") return rm::DistanceMethod::Auto;
  if (s == "enumeration") return rm::DistanceMethod::Enumeration;
  if (s == "walsh") return rm::DistanceMethod::Walsh;
  if (s == "syndrome") return rm::DistanceMethod::Syndrome;
  throw UsageError("unknown method '" + s + "'");
}

int cmd_radius(const Options& o, int k, int m) {
  require_table_size(k, m);
  const auto c = code_of(k, m);
  const int r = rm::covering_radius(c, policy_of(o));
  if (o.format == "json") std::cout << r << "\n";
  else emit(json{{"code", c.name()}, {"radius", r}}, o.format);
  return 0;
}

int cmd_complement(const Options& o, int k, int m, std::uint64_t reps) {
  require_table_size(k, m);
  const auto c = code_of(k, m);
  const auto comp = rm::metric_complement(c, policy_of(o));
  json list = json::array();
  std::uint64_t n = 0;
  comp.for_each_representative([&](std::uint64_t w) {
    if (n++ >= reps) return false;
    list.push_back(BitVec::from_word(c.length(), w).to_hex());
    return true;
  });
  emit(json{{"code", c.name()},
            {"radius", comp.radius()},
            {"class_count", comp.class_count()},
            {"size", comp.size()},
            {"representatives", list}},
       o.format);
  return 0;
}

int cmd_regular(const Options& o, int k, int m) {
  require_table_size(k, m);
  const auto c = code_of(k, m);
  const auto rep = rm::code_report(c, true, policy_of(o));
  emit(json{{"code", c.name()},
            {"radius", rep.radius},
            {"complement_classes", rep.complement_class_count},
            {"regular", rep.regular.value_or(false)}},
       o.format);
  return 0;
}

int cmd_tofs(const Options& o, int m, const std::string& s) {
  if (m < 1 || m > syn::kMaxSyndromeVars) throw UsageError("--m must be in 1..8");
  const std::size_t need = gf2::SymmetricMatrix::packed_size(m);
  if (s.size() != need)
    throw UsageError("--s needs " + std::to_string(need) + " upper-triangle bits s11 s12 .. s1m s22 .. smm");
  BitVec bits;
  try {
    bits = BitVec::from_bits(s);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--s: ") + e.what());
  }
  const auto sm = gf2::SymmetricMatrix::from_packed(m, bits);
  const auto mf = syn::t_of_s(sm);
  json cols = json::array();
  for (auto c : mf.factor.columns) cols.push_back(c);
  emit(json{{"m", m}, {"S", bits.to_hex()}, {"t", mf.t}, {"factor_columns", cols}}, o.format);
  return 0;
}

int cmd_distance(const Options& o, int k, int m, const std::string& v, const std::string& method) {
  const auto c = code_of(k, m);
  const auto f = boolfn::parse_function(v, m);
  const int d = rm::distance_to_code(f.table(), c, method_of(method));
  emit(json{{"code", c.name()}, {"vector", f.to_hex()}, {"distance", d}}, o.format);
  return 0;
}

int cmd_classify(const Options& o, const std::string& text) {
  const auto f = boolfn::parse_function(text, c15::kVars);
  const auto r = c15::classify(f, policy_of(o));
  emit(json{{"f", f.to_hex()},
            {"class", r.class_no},
            {"decided_by", r.decided_by == c15::Decision::Invariants ? "invariants" : "search"},
            {"distance", c15::distance_rm15(f)},
            {"deep_hole", c15::complement_membership_rm15(f)}},
       o.format);
  return 0;
}

int print_reports(const std::vector<c15::VerificationReport>& reps, const std::string& format) {
  if (format == "markdown") std::cout << c15::report_markdown(reps);
  else if (format == "csv") std::cout << c15::report_csv(reps);
  else std::cout << c15::report_json(reps);
  bool ok = true;
  for (const auto& r : reps) {
    std::cerr << r.title << ": " << r.passed << " passed, " << r.failed << " failed, " << r.skipped << " skipped\n";
    ok = ok && r.all_pass();
  }
  return ok ? 0 : 1;
}

int cmd_witness(const Options& o) {
  const auto w = rm::find_rm26_witness(policy_of(o));
  emit(json{{"y", w.y.to_hex()},
            {"w", w.w.to_hex()},
            {"y_kind", w.y_kind},
            {"distance", w.distance},
            {"candidates_tried", w.candidates_tried}},
       o.format);
  return w.distance == 18 ? 0 : 1;
}

// Library fast paths against plain enumeration on random inputs.
int cmd_oracle(const Options& o, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  json checks = json::array();
  bool all = true;
  auto record = [&](const std::string& name, int agree, int total) {
    checks.push_back(json{{"check", name}, {"agree", agree}, {"total", total}, {"ok", agree == total}});
    all = all && agree == total;
  };
  const std::pair<int, int> codes[] = {{0, 4}, {1, 4}, {2, 4}, {3, 4}, {0, 5}, {1, 5}, {2, 5}, {3, 5}, {4, 5}, {1, 6}};
  for (auto [k, m] : codes) {
    const auto c = rm::rm_code(k, m);
    int agree = 0;
    for (int i = 0; i < samples; ++i) {
      const auto v = BitVec::from_word(c.length(), rng() & bits::table_mask(m));
      agree += rm::distance_to_code(v, c) == rm::distance_to_code(v, c, rm::DistanceMethod::Enumeration);
    }
    record("distance " + c.name() + " auto vs enumeration", agree, samples);
  }
  for (int m = 4; m <= 5; ++m) {
    const auto c = rm::puncture_first(rm::rm_code(m - 3, m));
    int agree = 0;
    for (int i = 0; i < samples; ++i) {
      const auto v = BitVec::from_word(c.length(), rng() & (bits::table_mask(m) >> 1));
      agree += syn::distance_via_syndrome(v, m) == rm::distance_to_code(v, c, rm::DistanceMethod::Enumeration);
    }
    record("syndrome distance m=" + std::to_string(m) + " vs enumeration", agree, samples);
  }
  for (int m = 2; m <= 6; ++m) {
    int agree = 0;
    const std::size_t n = gf2::SymmetricMatrix::packed_size(m);
    for (int i = 0; i < samples; ++i) {
      BitVec b(n);
      for (std::size_t j = 0; j < n; ++j) b.set(j, rng() & 1u);
      const auto s = gf2::SymmetricMatrix::from_packed(m, b);
      const int expect = gf2::rank(s) + (!s.is_zero() && s.diagonal() == 0 ? 1 : 0);
      agree += syn::t_of_s(s).t == expect;
    }
    record("t(S) m=" + std::to_string(m) + " vs rank formula", agree, samples);
  }
  if (o.format == "json") {
    std::cout << json{{"seed", seed}, {"checks", checks}, {"all_pass", all}}.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "check,agree,total,ok\n";
    for (const auto& c : checks)
      std::cout << cell(c["check"]) << "," << c["agree"] << "," << c["total"] << "," << c["ok"] << "\n";
  } else {
    std::cout << "| check | agree | total | ok |\n|---|---|---|---|\n";
    for (const auto& c : checks)
      std::cout << "| " << cell(c["check"]) << " | " << c["agree"] << " | " << c["total"] << " | " << c["ok"] << " |\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metric invariants of binary Reed-Muller codes"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "markdown"}))
      ->capture_default_str();
  app.add_option("--threads", o.threads, "Worker threads (default: RM_METRIC_THREADS, else all cores)");
  app.add_flag("-q,--quiet", o.quiet, "No progress on stderr");

  int k = 1, m = 5;
  auto add_km = [&](CLI::App* sub) {
    sub->add_option("--k", k, "Order")->required();
    sub->add_option("--m", m, "Number of variables")->required();
  };

  auto* radius = app.add_subcommand("radius", "Covering radius of RM(k,m)");
  add_km(radius);

  std::uint64_t reps = 16;
  auto* complement = app.add_subcommand("complement", "Deep holes of RM(k,m)");
  add_km(complement);
  complement->add_option("--reps", reps, "Coset representatives to list")->capture_default_str();

  auto* regular = app.add_subcommand("regular", "Metric regularity of RM(k,m)");
  add_km(regular);

  std::string s_bits;
  auto* tofs = app.add_subcommand("tofs", "Minimal factor of a symmetric matrix");
  tofs->add_option("--m", m, "Matrix size")->required();
  tofs->add_option("--s", s_bits, "Upper-triangle bits, row by row")->required();

  std::string vec, method = "auto";
  auto* distance = app.add_subcommand("distance", "Distance from a vector to RM(k,m)");
  add_km(distance);
  distance->add_option("--v", vec, "Truth table as 0x-hex or short ANF like 123+45")->required();
  distance->add_option("--method", method, "auto|enumeration|walsh|syndrome")->capture_default_str();

  std::string fn;
  auto* classify = app.add_subcommand("classify", "Coset class of a 5-variable function");
  classify->add_option("--f", fn, "Truth table as 0x-hex or short ANF")->required();

  std::string report;
  auto* t1 = app.add_subcommand("verify-table1", "Check the even-weight coset class table");
  t1->add_option("--report", report, "json|markdown|csv (overrides --format)");
  auto* l12 = app.add_subcommand("verify-lemma12", "Check the four complement-class sum tables");
  l12->add_option("--report", report, "json|markdown|csv (overrides --format)");

  auto* witness = app.add_subcommand("rm26-witness", "Build and check a vector at distance 18 from RM(2,6)");

  int samples = 200;
  std::uint64_t seed = 1;
  auto* oracle = app.add_subcommand("oracle-check", "Compare fast paths with enumeration");
  oracle->add_option("--samples", samples)->capture_default_str();
  oracle->add_option("--seed", seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (!report.empty()) {
      if (report != "json" && report != "markdown" && report != "csv") throw UsageError("--report must be json, markdown or csv");
      o.format = report;
    }
    if (*radius) return cmd_radius(o, k, m);
    if (*complement) return cmd_complement(o, k, m, reps);
    if (*regular) return cmd_regular(o, k, m);
    if (*tofs) return cmd_tofs(o, m, s_bits);
    if (*distance) return cmd_distance(o, k, m, vec, method);
    if (*classify) return cmd_classify(o, fn);
    if (*t1) return print_reports({c15::verify_table1(policy_of(o))}, o.format);
    if (*l12) return print_reports(c15::verify_lemma12_tables(policy_of(o)), o.format);
    if (*witness) return cmd_witness(o);
    if (*oracle) {
      if (samples < 1) throw UsageError("--samples must be positive");
      return cmd_oracle(o, samples, seed);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
