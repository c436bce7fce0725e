#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "rmm/classify15.hpp"

namespace rmm::c15 {

namespace {

using boolfn::AnfPolynomial;

// class: representative
constexpr std::string_view kCanonical[kClassCount] = {
    "0",
    "2345",
    "2345+12",
    "2345+23",
    "2345+23+45",
    "2345+12+34",
    "2345+123",
    "2345+123+12",
    "2345+123+24",
    "2345+123+14",
    "2345+123+45",
    "2345+123+12+34",
    "2345+123+14+35",
    "2345+123+12+45",
    "2345+123+24+35",
    "2345+123+145",
    "2345+123+145+45",
    "2345+123+145+24+45",
    "2345+123+145+24+35",
    "123",
    "123+45",
    "123+14",
    "123+14+25",
    "123+145",
    "123+145+23",
    "123+145+24",
    "123+145+23+24+35",
    "12",
    "12+34",
};

// no | f | g | C(g) | sum forms joined by ~ | C(h)
constexpr std::string_view kTable1[] = {
    "0|0|-|-|-|-",
    "1|2345|123+14+25|22|2345+123+14+25|12",
    "2|2345+14|123+14+25|22|2345+123+25~2345+123+34|8",
    "3|2345+24|2345+123+24+35|14|123+35~123+14|21",
    "4|2345+24+35|2345+123+24+35|14|123|19",
    "5|2345+14+25|123+14+25|22|2345+123|6",
    "6|2345+123|123+14+25|22|2345+14+25|5",
    "7|2345+123+12|12+34|28|2345+123+34|8",
    "8|2345+123+34|12+34|28|2345+123+12|7",
    "9|2345+123+14|14+25|28|2345+123+25~2345+123+34|8",
    "10|2345+123+45|12+45|28|2345+123+12|7",
    "11|2345+123+12+34|12+34|28|2345+123|6",
    "12|2345+123+14+25|123+14+25|22|2345|1",
    "13|2345+123+12+45|12+45|28|2345+123|6",
    "14|2345+123+24+35|2345+123+24+35|14|0|0",
    "15|2345+123+145|123+14+25|22|2345+145+14+25~2345+123+12+34|11",
    "16|2345+123+145+45|123+145+45+24+35|26|2345+24+35|4",
    "17|2345+123+145+24+45|2345+123+24+35|14|145+35+45~123+14|21",
    "18|2345+123+145+24+35|2345+123+24+35|14|145~123|19",
    "19|123|2345+123+24+35|14|2345+24+35|4",
    "20|123+45|2345+123+24+35|14|2345+24+35+45~2345+24+35|4",
    "21|123+14|123+14+25|22|25~12|27",
    "22|123+14+25|123+14+25|22|0|0",
    "23|123+145|123+14+25|22|145+14+25~145+25~123+14|21",
    "24|123+145+23|23+45|28|123+145+45~123+145+23|24",
    "25|123+145+24|123+15+24|22|145+15~123|19",
    "26|123+145+45+24+35|123+145+45+24+35|26|0|0",
    "27|12|12+34|28|34~12|27",
    "28|12+34|12+34|28|0|0",
};

struct RawTable {
  int complement_class;
  std::vector<std::string_view> rows;  // no | f | g | h | h equal (< for same) | C(h)
  std::vector<std::pair<int, std::string_view>> f_scripts;
  std::vector<std::string_view> g_derivations;  // from | script | to
  std::vector<std::pair<int, std::string_view>> h_scripts;
};

const RawTable kRaw[4] = {
    {14,
     {
         "0|0|-|-|-|-",
         "1|2345|2345+345+123+13+24+35|123+345+13+24+35|123+145+24|25",
         "2|2345+12|2345+345+123+13+24+35|123+345+12+13+24+35|123+145+23|24",
         "3|2345+24|2345+123+24+35|123+35|123+14|21",
         "4|2345+24+35|2345+123+24+35|123|<|19",
         "5|2345+12+35|2345+123+24+35|123+12+24|123+14|21",
         "6|2345+123|2345+234+123+24+35|234+24+35|123+14|21",
         "7|2345+245+123|2345+123+24+35|245+24+35|123+14|21",
         "8|2345+123+24|2345+123+24+35|35|12|27",
         "9|2345+123+14+13|2345+345+123+13+24+35|345+14+24+35|123+14|21",
         "10|2345+123+45+23|2345+123+24+35|23+24+35+45|12|27",
         "11|2345+123+12+35|2345+123+24+35|12+24|12|27",
         "12|2345+123+14+35|2345+123+24+35|14+24|12|27",
         "13|2345+123+13+45|2345+345+123+13+24+35|345+24+35+45|123+14|21",
         "14|2345+123+24+35|2345+123+24+35|0|<|0",
         "15|2345+123+145|2345+234+123+24+35|145+234+24+35|123+145+24|25",
         "16|2345+123+145+45|2345+234+123+24+35|145+234+24+35+45|123+145+24|25",
         "17|2345+123+145+24+45|2345+123+24+35|145+45+35|123+14|21",
         "18|2345+123+145+24+35|2345+123+24+35|145|123|19",
         "19|123|-|-|-|-",
         "20|123+45|2345+123+24+35|2345+24+35+45|2345+23+45|4",
         "21|123+14|-|-|-|-",
         "22|123+24+35|2345+123+24+35|2345|<|1",
         "23|123+145|2345+123+24+35+23|2345+145+24+35+23|2345+123+45|10",
         "24|123+145+23|2345+123+24+35|2345+145+24+35+23|2345+123+45|10",
         "25|123+145+24|-|-|-|-",
         "26|123+145+23+24+35|2345+123+24+35|2345+145+23|2345+123+45|10",
         "27|12|-|-|-|-",
         "28|24+35|2345+123+24+35|2345+123|<|6",
     },
     {{7, "3<-3+0"}, {9, "4<-4+3+0"}, {10, "1<-1+0"}, {22, "4<->5;1<->3"}},
     {
         "2345+123+24+35|2<-2+0|2345+345+123+13+24+35",
         "2345+123+24+35|5<-5+0|2345+234+123+24+35",
         "2345+123+24+35|1<-1+0|2345+123+24+35+23",
     },
     {
         {1, "2<-2+0;4<-4+0;1<->3"},
         {2, "2<-2+0;4<-4+0;1<-1+4;3<-3+0;5<-5+2;1<->3;2<->4;3<->5"},
         {3, "1<->3;4<->5"},
         {5, "3<-3+0;1<->2"},
         {6, "3<-3+0;1<->3;3<->4;4<->5"},
         {7, "5<-5+0;1<->5;3<->4"},
         {8, "1<->3;2<->5"},
         {9, "4<-4+0;1<-1+2;1<->4;2<->5"},
         {10, "4<-4+3;2<-2+5;1<->4"},
         {11, "1<-1+4"},
         {12, "1<-1+2;2<->4"},
         {13, "3<-3+0;4<-4+0;1<->4;2<->5;4<->5"},
         {15, "3<-3+0;1<->4;2<->3;4<->5"},
         {16, "1<-1+0;3<-3+0;1<->4;2<->3;4<->5"},
         {17, "1<-1+0;1<->5;3<->4;2<->5"},
         {18, "2<->4;3<->5"},
         {20, "4<-4+3+0;5<-5+2+0"},
         {23, "2<->4;3<->5;5<-5+2+0;1<-1+0;4<-4+3+0"},
         {24, "2<->4;3<->5;5<-5+2+0;1<-1+0;4<-4+3+0"},
         {26, "2<->4;3<->5"},
     }},
    {22,
     {
         "0|0|-|-|-|-",
         "1|2345|123+14+25|2345+123+14+25|2345+123+14+35|12",
         "2|2345+12|123+14+25|2345+123+12+14+25|2345+123+14+35|12",
         "3|2345+23|123+14+25|2345+123+23+14+25|2345+123+14+35|12",
         "4|2345+25+34|123+14+25|2345+123+14+34|2345+123+14|9",
         "5|2345+14+25|123+14+25|2345+123|<|6",
         "6|2345+123|-|-|-|21",
         "7|2345+123+12|123+14+25|2345+12+14+25|2345+12+34|5",
         "8|2345+123+25|123+14+25|2345+14|2345+12|2",
         "9|2345+123+14|-|-|-|21",
         "10|2345+123+45|123+14+25|2345+14+25+45|2345+12+34|5",
         "11|2345+123+12+34|123+15+34|2345+12+15|2345+12|2",
         "12|2345+123+14+35|-|-|-|27",
         "13|2345+123+12+45|123+15+34|2345+12+15+45+34|2345+12+34|5",
         "14|2345+123+24+35|123+24+35|2345|<|1",
         "15|2345+123+145|123+14+25|2345+145+14+25|2345+12+34|11",
         "16|2345+123+145+45|123+14+25|2345+145+14+25+45|2345+12+34|11",
         "17|2345+123+145+24+45|123+24+35|2345+145+35+45|2345+123+24|8",
         "18|2345+123+145+24+35|123+24+35|2345+145|2345+123|6",
         "19|123+235|123+14+25|235+14+25|123+45|20",
         "20|123+45|-|-|-|-",
         "21|123+14|123+14+25|25|12|27",
         "22|123+14+25|123+14+25|0|<|0",
         "23|123+145|123+14+25|145+14+25|123+14|21",
         "24|123+145+23|123+14+25|145+14+25+23|123+45|20",
         "25|123+145+24|123+15+24|145+15|123|19",
         "26|123+145+23+24+35|123+15+24|145+15+23+35|123+45|20",
         "27|14|123+14+25|123+25|123+14|21",
         "28|14+25|123+14+25|123|<|19",
     },
     {},
     {},
     {
         {1, "2<->3"},
         {2, "4<-4+2+0;2<->3"},
         {3, "1<-1+0;2<->3"},
         {4, "3<-3+2+0;1<-1+2+3"},
         {7, "4<-4+2+0;2<->4;3<->5"},
         {8, "2<->4"},
         {10, "2<-2+4+0;2<->4;3<->5"},
         {11, "2<-2+5+0"},
         {13, "2<-2+5+0;5<-5+3+0;3<->5"},
         {15, "2<->4;3<->5"},
         {16, "1<-1+0;2<->4;3<->5"},
         {17, "1<-1+0;2<->5;3<->4"},
         {18, "2<->4;3<->5"},
         {19, "3<-3+0;1<->5"},
         {21, "1<->5"},
         {23, "5<-5+0;1<->5;2<->4;3<->5"},
         {24, "5<-5+0;3<-3+5;2<->4;3<->5"},
         {25, "4<-4+0;2<->4;3<->5"},
         {26, "4<-4+0;2<-2+5;2<->4;3<->5"},
         {27, "1<->2;4<->5"},
     }},
    {26,
     {
         "0|0|-|-|-|-",
         "1|2345|123+145+245+24+35+12|2345+123+145+245+24+35+12|2345+123+145+24+35|18",
         "2|2345+12|123+145+245+24+35|2345+123+145+245+24+35+12|2345+123+145+24+35|18",
         "3|2345+23|123+145+23+24+35|2345+123+145+24+35|<|18",
         "4|2345+245+23+45|123+145+245+24+35|2345+123+145+23+24+35+45|2345+123+145+24+35|18",
         "5|2345+12+35|123+145+245+24+35+12|2345+123+145+245+24|2345+123+145+24+45|17",
         "6|2345+123|123+145+23+24+35|2345+145+23+24+35|2345+123+45|10",
         "7|2345+123+12|123+145+245+24+35|2345+145+245+24+35+12|2345+123+35+14|12",
         "8|2345+123+24|123+145+23+24+35|2345+145+23+35|2345+123+45|10",
         "9|2345+123+14+23+24|123+145+234+24+35+14|2345+145+234+23+35|2345+123+12+45|13",
         "10|2345+123+45|-|-|-|-",
         "11|2345+123+12+34|123+145+245+25+34+12|2345+145+245+25|2345+123+24|8",
         "12|2345+123+14+35|-|-|-|-",
         "13|2345+123+12+45|-|-|-|-",
         "14|2345+123+24+35|123+145+23+24+35|2345+145+23|2345+123+45|10",
         "15|2345+123+145|123+145+23+24+35|2345+23+24+35|2345+23+45|4",
         "16|2345+123+145+45|123+145+45+24+35|2345+24+35|2345+23+45|4",
         "17|2345+123+145+24+45|123+145+23+24+35|2345+23+35+45|2345+23+45|4",
         "18|2345+123+145+24+35|-|-|-|-",
         "19|123|123+145+23+24+35|145+23+24+35|123+45|20",
         "20|123+45|-|-|-|-",
         "21|123+14|123+145+234+24+35+14|145+234+24+35|123+145+24|25",
         "22|123+14+25|123+145+23+25+34|145+14+23+34|123+45|20",
         "23|123+145|123+145+245+24+35|245+24+35|123+14|21",
         "24|123+145+23|123+145+245+24+35|245+23+24+35|123+14|21",
         "25|123+145+24|-|-|-|-",
         "26|123+145+23+24+35|123+145+23+24+35|0|<|0",
         "27|35|123+145+45+24+35|123+145+45+24|123+145+23|24",
         "28|24+35|123+145+23+24+35|123+145+23|<|24",
     },
     {{4, "3<-3+0"}, {9, "1<-1+2"}},
     {
         "123+145+23+24+35|1<-1+2|123+145+245+24+35",
         "123+145+245+24+35|3<-3+0|123+145+245+24+35+12",
         "123+145+245+24+35+12|4<->5|123+145+245+25+34+12",
         "123+145+245+24+35+12|2<->4;3<->5|123+145+234+24+35+14",
         "123+145+23+24+35|2<->4;3<->5|123+145+45+24+35",
     },
     {
         {1, "3<-3+0"},
         {2, "3<-3+0"},
         {4, "1<-1+0"},
         {5, "1<-1+2;1<-1+0"},
         {6, "2<-2+5+0;3<-3+4+0;1<-1+0;2<->4;3<->5"},
         {7, "3<-3+4;1<-1+4;2<->4;3<->5"},
         {8, "2<-2+5+0;2<->4;3<->5"},
         {9, "5<-5+0;2<-2+5+0;2<->4;3<->5"},
         {11, "3<-3+2;2<->4;3<->5;2<->3"},
         {14, "2<->4;3<->5"},
         {15, "5<-5+2+0;3<->4"},
         {16, "3<->4"},
         {17, "4<-4+3+0"},
         {19, "1<-1+0;3<-3+4;2<-2+5;2<->4;3<->5"},
         {21, "3<-3+0;1<->4;2<->3;4<->5"},
         {22, "5<-5+0;2<-2+4;2<->4;3<->5"},
         {23, "5<-5+0;1<->5;3<->4"},
         {24, "5<-5+0;5<-5+2+0;1<->5;3<->4"},
         {27, "5<-5+2;1<-1+0;3<-3+4"},
     }},
    {28,
     {
         "0|0|-|-|-|-",
         "1|2345|12+34|2345+12+34|<|5",
         "2|2345+12|12+34|2345+34|2345+23|3",
         "3|2345+23|-|-|-|-",
         "4|2345+23+45|23+45|2345|<|1",
         "5|2345+12+34|-|-|-|-",
         "6|2345+123|12+34|2345+123+12+34|<|11",
         "7|2345+123+12|12+34|2345+123+34|2345+123+24|8",
         "8|2345+123+24|-|-|-|-",
         "9|2345+123+14|14+35|2345+123+35|2345+123+24|8",
         "10|2345+123+45|12+45|2345+123+12|<|7",
         "11|2345+123+12+34|-|-|-|-",
         "12|2345+123+14+35|14+35|2345+123|<|6",
         "13|2345+123+12+45|12+45|2345+123|<|6",
         "14|2345+123+24+35|24+35|2345+123|<|6",
         "15|2345+123+145|24+35|2345+123+145+24+35|<|18",
         "16|2345+123+145+45|23+45|2345+123+145+23|2345+123+145+45|16",
         "17|2345+123+145+24+45|23+45|2345+123+145+24+23|2345+123+145+24+45|17",
         "18|2345+123+145+24+35|-|-|-|-",
         "19|123|12+45|123+12+45|123+45|20",
         "20|123+45|-|-|-|-",
         "21|123+14|14+25|123+25|123+14|21",
         "22|123+14+25|14+25|123|<|19",
         "23|123+145|23+45|123+145+23+45|123+145|23",
         "24|123+145+23|23+45|123+145+45|123+145+23|24",
         "25|123+145+24|24+35|123+145+35|123+145+24|25",
         "26|123+145+23+24+35|24+35|123+145+23|<|24",
         "27|12|12+34|34|12|27",
         "28|12+34|12+34|0|<|0",
     },
     {},
     {},
     {
         {2, "2<->4"},
         {7, "2<->3"},
         {9, "2<->3;4<->5"},
         {16, "1<-1+0"},
         {17, "1<-1+0"},
         {19, "3<-3+0"},
         {21, "1<->2;4<->5"},
         {23, "1<-1+0"},
         {24, "1<-1+0"},
         {25, "2<->3;4<->5"},
         {27, "1<->3;2<->4"},
     }},
};

// Column 5 of rows 15 and 16 in the class-22 table drops the cubic term that
// both the row's script and its stated class require.
const Erratum kErrata[] = {
    {22, 15, "h_equal", "2345+12+34", "2345+123+12+34"},
    {22, 16, "h_equal", "2345+12+34", "2345+123+12+34"},
};

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) return out;
    pos = next + 1;
  }
}

// A cell holding just "0" is the zero function.
AnfPolynomial poly(std::string_view s) {
  if (s == "0") return AnfPolynomial(kVars);
  return boolfn::parse_abbrev(s, kVars);
}
std::optional<AnfPolynomial> opt_poly(std::string_view s) {
  if (s == "-") return std::nullopt;
  return poly(s);
}
std::optional<int> opt_int(std::string_view s) {
  if (s == "-") return std::nullopt;
  return std::stoi(std::string(s));
}

std::vector<AnfPolynomial> build_canonical() {
  std::vector<AnfPolynomial> out;
  for (auto s : kCanonical) out.push_back(poly(s));
  return out;
}

CosetClassTable build_table1() {
  CosetClassTable t;
  for (auto line : kTable1) {
    const auto c = split(line, '|');
    if (c.size() != 6) throw std::logic_error("bad table row: " + std::string(line));
    CosetClassRow r{std::stoi(std::string(c[0])), poly(c[1]), opt_poly(c[2]), opt_int(c[3]), {}, opt_int(c[5]), false};
    if (c[4] != "-")
      for (auto form : split(c[4], '~')) r.sum_forms.push_back(poly(form));
    r.complement_flag = is_complement_class(r.class_no);
    t.rows.push_back(std::move(r));
  }
  return t;
}

std::vector<Lemma12Table> build_lemma12() {
  std::vector<Lemma12Table> out;
  for (const auto& raw : kRaw) {
    Lemma12Table t;
    t.complement_class = raw.complement_class;
    std::map<int, std::string_view> fs(raw.f_scripts.begin(), raw.f_scripts.end());
    std::map<int, std::string_view> hs(raw.h_scripts.begin(), raw.h_scripts.end());
    for (auto line : raw.rows) {
      const auto c = split(line, '|');
      if (c.size() != 6) throw std::logic_error("bad table row: " + std::string(line));
      Lemma12Row r;
      r.class_no = std::stoi(std::string(c[0]));
      r.f = poly(c[1]);
      if (auto it = fs.find(r.class_no); it != fs.end()) r.f_script = boolfn::parse_script(it->second, kVars);
      r.g = opt_poly(c[2]);
      r.h = opt_poly(c[3]);
      if (!r.g) {
        r.skipped = r.class_no != 0;
        r.printed_note = opt_int(c[5]);
      } else {
        r.h_equal = c[4] == "<" ? r.h : opt_poly(c[4]);
        r.expected_class = opt_int(c[5]);
        if (auto it = hs.find(r.class_no); it != hs.end()) r.h_script = boolfn::parse_script(it->second, kVars);
      }
      t.rows.push_back(std::move(r));
    }
    for (auto line : raw.g_derivations) {
      const auto c = split(line, '|');
      t.g_derivations.push_back({poly(c[0]), boolfn::parse_script(c[1], kVars), poly(c[2])});
    }
    for (const auto& e : kErrata)
      if (e.complement_class == t.complement_class) t.errata.push_back(e);
    out.push_back(std::move(t));
  }
  return out;
}

void mix(std::uint64_t& h, std::string_view s) {
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  h ^= 0xff;
  h *= 0x100000001b3ULL;
}
void mix(std::uint64_t& h, const AnfPolynomial& p) { mix(h, p.is_zero() ? std::string("0") : p.to_abbrev()); }
void mix(std::uint64_t& h, const std::optional<AnfPolynomial>& p) {
  if (p) mix(h, *p);
  else mix(h, "-");
}
void mix(std::uint64_t& h, const std::optional<int>& v) { mix(h, v ? std::to_string(*v) : std::string("-")); }
void mix(std::uint64_t& h, const std::optional<boolfn::TransformScript>& s) { mix(h, s ? s->to_string() : "-"); }

}  // namespace

bool is_complement_class(int c) {
  for (int k : kComplementClasses)
    if (k == c) return true;
  return false;
}

const std::vector<AnfPolynomial>& canonical_representatives() {
  static const auto v = build_canonical();
  return v;
}

const CosetClassTable& table1() {
  static const auto t = build_table1();
  return t;
}

const std::vector<Lemma12Table>& lemma12_tables() {
  static const auto t = build_lemma12();
  return t;
}

std::uint64_t data_checksum() {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& p : canonical_representatives()) mix(h, p);
  for (const auto& r : table1().rows) {
    mix(h, std::to_string(r.class_no));
    mix(h, r.representative);
    mix(h, r.added_g);
    mix(h, r.class_of_g);
    for (const auto& f : r.sum_forms) mix(h, f);
    mix(h, r.expected_sum_class);
  }
  for (const auto& t : lemma12_tables()) {
    mix(h, std::to_string(t.complement_class));
    for (const auto& r : t.rows) {
      mix(h, std::to_string(r.class_no));
      mix(h, r.f);
      mix(h, r.f_script);
      mix(h, r.g);
      mix(h, r.h);
      mix(h, r.h_equal);
      mix(h, r.h_script);
      mix(h, r.expected_class);
      mix(h, r.printed_note);
    }
    for (const auto& d : t.g_derivations) {
      mix(h, d.from);
      mix(h, d.script.to_string());
      mix(h, d.to);
    }
    for (const auto& e : t.errata) {
      mix(h, std::to_string(e.row));
      mix(h, e.field);
      mix(h, e.printed);
      mix(h, e.corrected);
    }
  }
  return h;
}

}  // namespace rmm::c15
