#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "rmm/bits.hpp"
#include "rmm/classify15.hpp"
#include "rmm/syndrome.hpp"

namespace rmm::c15 {

const std::uint64_t kExpectedChecksum = 0xb5fe2a0100be9b79ULL;

namespace {

using boolfn::AnfPolynomial;
using boolfn::BooleanFunction;

constexpr int kLen = 1 << kVars;

std::vector<std::uint32_t> affine_weights(std::uint64_t w) {
  std::vector<std::uint32_t> hist(kLen + 1, 0);
  for (std::uint32_t a = 0; a < kLen; ++a) {
    const int x = std::popcount(w ^ bits::linear_table(a, kVars));
    ++hist[x];
    ++hist[kLen - x];
  }
  return hist;
}

BooleanFunction fn(const AnfPolynomial& p) { return boolfn::truth_table_from_anf(p); }

std::string abbrev(const AnfPolynomial& p) { return p.is_zero() ? "0" : p.to_abbrev(); }

bool same_mod_affine(const AnfPolynomial& a, const AnfPolynomial& b) { return a.above(1) == b.above(1); }

const std::vector<Signature>& canonical_signatures() {
  static const auto sigs = [] {
    std::vector<Signature> v;
    for (const auto& p : canonical_representatives()) v.push_back(signature(fn(p)));
    return v;
  }();
  return sigs;
}

Check check(std::string name, bool ok, std::string detail = {}) { return {std::move(name), ok, std::move(detail)}; }

struct Classifier {
  ExecPolicy inner{1, {}};
  int operator()(const AnfPolynomial& p) const { return class_of(fn(p), inner); }
};

void finish(RowReport& r) {
  r.pass = std::all_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.ok; });
}

void tally(VerificationReport& rep) {
  rep.passed = rep.failed = rep.skipped = 0;
  for (const auto& r : rep.rows) {
    if (!r.pass) ++rep.failed;
    else if (r.skipped) ++rep.skipped;
    else ++rep.passed;
  }
}

const Erratum* find_erratum(const Lemma12Table& t, int row, const std::string& field) {
  for (const auto& e : t.errata)
    if (e.row == row && e.field == field) return &e;
  return nullptr;
}

Check data_check() {
  const auto sum = data_checksum();
  std::ostringstream os;
  os << std::hex << sum;
  return check("embedded data checksum", sum == kExpectedChecksum, os.str());
}

RowReport table1_row(const CosetClassRow& row, const Classifier& cls) {
  RowReport r;
  r.row = row.class_no;
  r.f = abbrev(row.representative);
  r.expected_class = row.expected_sum_class;
  r.checks.push_back(check("representative class", cls(row.representative) == row.class_no));
  if (!row.added_g) {
    r.skipped = true;
    r.skip_reason = "affine class";
    finish(r);
    return r;
  }
  const AnfPolynomial& g = *row.added_g;
  const AnfPolynomial h = row.representative + g;
  r.g = abbrev(g);
  r.h = abbrev(h);
  const int dg = distance_rm15(fn(g));
  r.checks.push_back(check("g is a deep hole", dg == kRadius, "d = " + std::to_string(dg)));
  const int cg = cls(g);
  r.checks.push_back(check("class of g", row.class_of_g && cg == *row.class_of_g, "C(g) = " + std::to_string(cg)));
  const int ch = cls(h);
  r.checks.push_back(
      check("class of f+g", row.expected_sum_class && ch == *row.expected_sum_class, "C(h) = " + std::to_string(ch)));
  r.checks.push_back(check("sum outside complement", row.expected_sum_class && !is_complement_class(*row.expected_sum_class)));
  if (!row.sum_forms.empty()) {
    r.checks.push_back(check("printed sum", row.sum_forms.front() == h));
    std::string forms;
    bool all = true;
    for (const auto& p : row.sum_forms) {
      const int c = cls(p);
      if (!forms.empty()) forms += " ~ ";
      forms += abbrev(p) + " [" + std::to_string(c) + "]";
      all = all && row.expected_sum_class && c == *row.expected_sum_class;
    }
    r.h_equal = abbrev(row.sum_forms.back());
    r.checks.push_back(check("equivalent forms", all, forms));
  }
  finish(r);
  return r;
}

RowReport lemma12_row(const Lemma12Table& t, const Lemma12Row& row, const Classifier& cls) {
  RowReport r;
  r.table_class = t.complement_class;
  r.row = row.class_no;
  r.f = abbrev(row.f);
  r.expected_class = row.expected_class;
  r.checks.push_back(check("representative class", cls(row.f) == row.class_no));
  if (row.f_script) {
    const auto& canon = canonical_representatives()[row.class_no];
    const auto got = boolfn::anf_from_truth_table(boolfn::run_script(fn(canon), *row.f_script));
    const bool exact = got == row.f;
    r.checks.push_back(check("representative script", exact || same_mod_affine(got, row.f),
                             row.f_script->to_string() + (exact ? "" : " gives " + abbrev(got))));
  }
  if (row.class_no == 0) {
    r.skipped = true;
    r.skip_reason = "affine class";
    finish(r);
    return r;
  }
  if (row.skipped) {
    r.skipped = true;
    if (row.printed_note) r.skip_reason = "printed note " + std::to_string(*row.printed_note) + "; ";
    for (const auto& other : t.rows)
      if (!other.skipped && other.expected_class == row.class_no && other.class_no != 0 &&
          !is_complement_class(other.class_no)) {
        r.covered_by = other.class_no;
        break;
      }
    if (r.covered_by) r.skip_reason += "covered by row " + std::to_string(*r.covered_by);
    r.checks.push_back(check("skip justified", r.covered_by.has_value()));
    finish(r);
    return r;
  }

  const AnfPolynomial& g = *row.g;
  const AnfPolynomial h = row.f + g;
  r.g = abbrev(g);
  r.h = abbrev(h);
  const int dg = distance_rm15(fn(g));
  r.checks.push_back(check("g is a deep hole", dg == kRadius, "d = " + std::to_string(dg)));
  const int cg = cls(g);
  r.checks.push_back(check("class of g", cg == t.complement_class, "C(g) = " + std::to_string(cg)));
  r.checks.push_back(check("printed sum", row.h && *row.h == h));
  const int ch = cls(h);
  r.checks.push_back(check("class of f+g", row.expected_class && ch == *row.expected_class, "C(h) = " + std::to_string(ch)));
  r.checks.push_back(check("sum outside complement", row.expected_class && !is_complement_class(*row.expected_class)));

  AnfPolynomial target = *row.h_equal;
  if (const Erratum* e = find_erratum(t, row.class_no, "h_equal")) {
    target = boolfn::parse_abbrev(e->corrected, kVars);
    r.discrepancies.push_back("column 5 printed as " + e->printed + ", read as " + e->corrected);
  }
  r.h_equal = abbrev(target);
  if (row.h_script) {
    const auto got = boolfn::anf_from_truth_table(boolfn::run_script(fn(h), *row.h_script));
    const bool exact = got == target;
    r.checks.push_back(check("sum script", exact || same_mod_affine(got, target),
                             row.h_script->to_string() + (exact ? "" : " gives " + abbrev(got))));
    if (!same_mod_affine(got, *row.h_equal))
      r.discrepancies.push_back("script gives " + abbrev(got) + ", printed " + abbrev(*row.h_equal));
  }
  const int ce = cls(target);
  r.checks.push_back(check("class of column 5", row.expected_class && ce == *row.expected_class, "C = " + std::to_string(ce)));
  finish(r);
  return r;
}

template <class Row, class F>
std::vector<RowReport> run_rows(const std::vector<Row>& rows, const ExecPolicy& policy, const std::string& label,
                                F&& make) {
  std::vector<RowReport> out(rows.size());
  parallel_chunks(rows.size(), 1, policy, label,
                  [&](std::uint64_t b, std::uint64_t e, unsigned) {
                    for (auto i = b; i < e; ++i) out[i] = make(rows[i]);
                  });
  return out;
}

}  // namespace

Signature signature(const BooleanFunction& f) {
  if (f.vars() != kVars) throw std::invalid_argument("expected a function of 5 variables");
  const std::uint64_t w = f.word();
  Signature s;
  const std::uint64_t anf = bits::moebius(w, kVars) & bits::degree_above_mask(1, kVars);
  s.degree = 1;
  for (std::uint32_t u = 0; u < kLen; ++u)
    if ((anf >> u) & 1u) s.degree = std::max(s.degree, std::popcount(u));
  s.weights = affine_weights(w);
  for (std::uint32_t a = 1; a < kLen; ++a) s.derivatives.push_back(affine_weights(w ^ bits::translate(w, a, kVars)));
  std::sort(s.derivatives.begin(), s.derivatives.end());
  return s;
}

Classification classify(const BooleanFunction& f, const ExecPolicy& policy) {
  if (f.vars() != kVars) throw std::invalid_argument("expected a function of 5 variables");
  if (f.weight() % 2) throw std::domain_error("odd-weight coset of RM(1,5) is outside the classified range");
  const Signature s = signature(f);
  const auto& sigs = canonical_signatures();
  std::vector<int> cand;
  for (int c = 0; c < kClassCount; ++c)
    if (sigs[c] == s) cand.push_back(c);
  if (cand.empty()) throw std::logic_error("no class matches " + f.to_hex());
  if (cand.size() == 1) return {cand.front(), Decision::Invariants};
  syn::ElOptions opt;
  opt.allow_shift = true;
  opt.use_invariants = false;
  opt.policy = policy;
  for (std::size_t i = 0; i + 1 < cand.size(); ++i)
    if (syn::el_equivalent(f, fn(canonical_representatives()[cand[i]]), 1, opt).equivalent)
      return {cand[i], Decision::Search};
  return {cand.back(), Decision::Search};
}

int class_of(const BooleanFunction& f, const ExecPolicy& policy) { return classify(f, policy).class_no; }

int distance_rm15(const BooleanFunction& f) {
  if (f.vars() != kVars) throw std::invalid_argument("expected a function of 5 variables");
  return boolfn::nonlinearity(f);
}

bool complement_membership_rm15(const BooleanFunction& f) { return distance_rm15(f) == kRadius; }

bool VerificationReport::all_pass() const {
  return failed == 0 && std::all_of(table_checks.begin(), table_checks.end(), [](const Check& c) { return c.ok; });
}

VerificationReport verify_table1(const ExecPolicy& policy) {
  VerificationReport rep;
  rep.title = "Even-weight coset classes of RM(1,5)";
  rep.table_checks.push_back(data_check());
  const auto& t = table1();
  int flagged = 0;
  for (const auto& r : t.rows) flagged += r.complement_flag;
  rep.table_checks.push_back(check("29 rows, 4 flagged", t.rows.size() == kClassCount && flagged == 4));
  const Classifier cls;
  rep.rows = run_rows(t.rows, policy, "table 1", [&](const CosetClassRow& r) { return table1_row(r, cls); });
  tally(rep);
  return rep;
}

std::vector<VerificationReport> verify_lemma12_tables(const ExecPolicy& policy) {
  std::vector<VerificationReport> out;
  const Classifier cls;
  for (const auto& t : lemma12_tables()) {
    VerificationReport rep;
    rep.title = "Sums with the complement class " + std::to_string(t.complement_class);
    rep.table_checks.push_back(data_check());
    for (const auto& d : t.g_derivations) {
      const auto got = boolfn::anf_from_truth_table(boolfn::run_script(fn(d.from), d.script));
      rep.table_checks.push_back(check("g: " + abbrev(d.from) + " o (" + d.script.to_string() + ")",
                                       same_mod_affine(got, d.to),
                                       got == d.to ? "exact" : "gives " + abbrev(got)));
    }
    rep.rows = run_rows(t.rows, policy, "table " + std::to_string(t.complement_class),
                        [&](const Lemma12Row& r) { return lemma12_row(t, r, cls); });
    tally(rep);
    out.push_back(std::move(rep));
  }
  return out;
}

namespace {

nlohmann::ordered_json to_json(const Check& c) { return {{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}}; }

std::string status(const RowReport& r) {
  if (!r.pass) return "FAIL";
  return r.skipped ? "skip" : "pass";
}

std::string label(const RowReport& r) {
  return std::to_string(r.row) + (is_complement_class(r.row) ? "*" : "");
}

}  // namespace

std::string report_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& rep : reports) {
    nlohmann::ordered_json j;
    j["title"] = rep.title;
    j["passed"] = rep.passed;
    j["failed"] = rep.failed;
    j["skipped"] = rep.skipped;
    j["all_pass"] = rep.all_pass();
    j["table_checks"] = nlohmann::ordered_json::array();
    for (const auto& c : rep.table_checks) j["table_checks"].push_back(to_json(c));
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rep.rows) {
      nlohmann::ordered_json row;
      row["row"] = r.row;
      row["status"] = status(r);
      row["f"] = r.f;
      if (!r.g.empty()) row["g"] = r.g;
      if (!r.h.empty()) row["h"] = r.h;
      if (!r.h_equal.empty()) row["h_equal"] = r.h_equal;
      if (r.expected_class) row["class"] = *r.expected_class;
      if (r.skipped) row["skip_reason"] = r.skip_reason;
      row["checks"] = nlohmann::ordered_json::array();
      for (const auto& c : r.checks) row["checks"].push_back(to_json(c));
      if (!r.discrepancies.empty()) row["discrepancies"] = r.discrepancies;
      j["rows"].push_back(std::move(row));
    }
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

std::string report_markdown(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  for (const auto& rep : reports) {
    os << "## " << rep.title << "\n\n";
    os << "| No | f | g | h = f+g | h is equal to | C(h) | result |\n";
    os << "|----|---|---|---------|---------------|------|--------|\n";
    for (const auto& r : rep.rows) {
      const auto cell = [](const std::string& s) { return s.empty() ? std::string("---") : s; };
      os << "| " << label(r) << " | " << r.f << " | " << cell(r.g) << " | " << cell(r.h) << " | " << cell(r.h_equal)
         << " | " << (r.expected_class ? std::to_string(*r.expected_class) : "---") << " | " << status(r);
      if (r.skipped && !r.skip_reason.empty()) os << " (" << r.skip_reason << ")";
      for (const auto& c : r.checks)
        if (!c.ok) os << "; " << c.name << " failed" << (c.detail.empty() ? "" : ": " + c.detail);
      for (const auto& d : r.discrepancies) os << "; " << d;
      os << " |\n";
    }
    os << "\n";
    for (const auto& c : rep.table_checks)
      os << "- " << (c.ok ? "pass" : "FAIL") << ": " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    os << "\n" << rep.passed << " passed, " << rep.failed << " failed, " << rep.skipped << " skipped\n\n";
  }
  return os.str();
}

std::string report_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "table,row,f,g,h,h_equal,class,status\n";
  for (const auto& rep : reports)
    for (const auto& r : rep.rows)
      os << r.table_class << "," << r.row << "," << r.f << "," << r.g << "," << r.h << "," << r.h_equal << ","
         << (r.expected_class ? std::to_string(*r.expected_class) : "") << "," << status(r) << "\n";
  return os.str();
}

}  // namespace rmm::c15
