#include <bit>
#include <stdexcept>

#include "rmm/boolfn.hpp"

namespace rmm::boolfn {

namespace {

constexpr std::string_view kLeftArrow = "\xe2\x86\x90";  // U+2190
constexpr std::string_view kBothArrow = "\xe2\x86\x94";  // U+2194

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_step(std::string_view step, const std::string& why) {
  throw std::invalid_argument("bad script step '" + std::string(step) + "': " + why);
}

int parse_var(std::string_view tok, std::string_view step, int m) {
  if (tok.size() != 1 || tok[0] < '1' || tok[0] > '9') bad_step(step, "expected a variable index");
  const int v = tok[0] - '0';
  if (v > m) bad_step(step, "variable exceeds m");
  return v;
}

ScriptStep parse_step(std::string_view step, int m) {
  std::size_t at;
  std::size_t len;
  if ((at = step.find("<->")) != std::string_view::npos) {
    len = 3;
  } else if ((at = step.find(kBothArrow)) != std::string_view::npos) {
    len = kBothArrow.size();
  } else {
    at = std::string_view::npos;
  }
  if (at != std::string_view::npos) {
    ScriptStep s{ScriptStep::Kind::Swap, parse_var(trim(step.substr(0, at)), step, m)};
    s.other = parse_var(trim(step.substr(at + len)), step, m);
    if (s.other == s.target) bad_step(step, "swap of a variable with itself");
    return s;
  }
  if ((at = step.find("<-")) != std::string_view::npos) {
    len = 2;
  } else if ((at = step.find(kLeftArrow)) != std::string_view::npos) {
    len = kLeftArrow.size();
  } else {
    bad_step(step, "no arrow");
  }
  ScriptStep s{ScriptStep::Kind::Add, parse_var(trim(step.substr(0, at)), step, m)};
  std::string_view rhs = trim(step.substr(at + len));
  bool first = true;
  while (!rhs.empty()) {
    const std::size_t plus = rhs.find('+');
    const std::string_view tok = trim(rhs.substr(0, plus));
    rhs = plus == std::string_view::npos ? std::string_view{} : rhs.substr(plus + 1);
    if (plus != std::string_view::npos && trim(rhs).empty()) bad_step(step, "dangling '+'");
    if (first) {
      if (parse_var(tok, step, m) != s.target) bad_step(step, "right side must start with the target");
      first = false;
      continue;
    }
    if (tok == "0") {
      if (s.constant) bad_step(step, "constant repeated");
      s.constant = true;
      continue;
    }
    const int v = parse_var(tok, step, m);
    const std::uint32_t bit = 1u << (v - 1);
    if (v == s.target || (s.sources & bit)) bad_step(step, "repeated variable");
    s.sources |= bit;
  }
  if (first) bad_step(step, "empty right side");
  if (!s.constant && s.sources == 0) bad_step(step, "nothing added");
  return s;
}

// Affine map of a single step: x -> A x + b.
void step_map(const ScriptStep& s, int m, gf2::BitMatrix& a, BitVec& b) {
  a = gf2::BitMatrix::identity(m);
  b = BitVec(m);
  const int t = s.target - 1;
  if (s.kind == ScriptStep::Kind::Swap) {
    const int o = s.other - 1;
    a.set(t, t, false);
    a.set(o, o, false);
    a.set(t, o);
    a.set(o, t);
    return;
  }
  for (int j = 0; j < m; ++j)
    if ((s.sources >> j) & 1u) a.set(t, j);
  if (s.constant) b.set(t);
}

}  // namespace

std::string TransformScript::to_string() const {
  std::string out;
  for (const auto& s : steps) {
    if (!out.empty()) out += "; ";
    out += std::to_string(s.target);
    if (s.kind == ScriptStep::Kind::Swap) {
      out += "<->" + std::to_string(s.other);
      continue;
    }
    out += "<-" + std::to_string(s.target);
    for (int j = 0; j < vars; ++j)
      if ((s.sources >> j) & 1u) out += "+" + std::to_string(j + 1);
    if (s.constant) out += "+0";
  }
  return out;
}

TransformScript parse_script(std::string_view text, int m) {
  if (m < 1 || m > 9) throw std::invalid_argument("scripts need 1 <= m <= 9");
  TransformScript script{m, {}};
  if (trim(text).empty()) return script;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t semi = text.find(';', pos);
    const std::string_view step = trim(text.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos));
    if (step.empty()) throw std::invalid_argument("empty step in script '" + std::string(text) + "'");
    script.steps.push_back(parse_step(step, m));
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  return script;
}

BooleanFunction run_script(const BooleanFunction& f, const TransformScript& s) {
  if (f.vars() != s.vars) throw std::invalid_argument("script and function disagree on m");
  BooleanFunction g = f;
  gf2::BitMatrix a;
  BitVec b;
  for (const auto& step : s.steps) {
    step_map(step, s.vars, a, b);
    g = apply_affine_substitution(g, a, b);
  }
  return g;
}

std::pair<gf2::BitMatrix, BitVec> script_affine_map(const TransformScript& s) {
  gf2::BitMatrix acc = gf2::BitMatrix::identity(s.vars);
  BitVec shift(s.vars);
  gf2::BitMatrix a;
  BitVec b;
  // f o L1 o L2 o ... : L(x) = A1 (A2 x + b2) + b1
  for (const auto& step : s.steps) {
    step_map(step, s.vars, a, b);
    shift ^= acc.multiply(b);
    acc = acc * a;
  }
  return {acc, shift};
}

}  // namespace rmm::boolfn
