// Copyright 2026 The ooa-gr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ooa/serialize.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "ooa/error.hpp"

namespace ooa {

namespace {

// Parses "key=value" tokens after a fixed tag.
std::map<std::string, long long> read_header(std::istream& is, const std::string& tag) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("missing " + tag + " header");
  std::istringstream ls(line);
  std::string word;
  ls >> word;
  if (word != tag) throw ParseError("expected header starting with " + tag);
  std::map<std::string, long long> kv;
  while (ls >> word) {
    const auto eq = word.find('=');
    if (eq == std::string::npos) throw ParseError("malformed header token '" + word + "'");
    try {
      kv[word.substr(0, eq)] = std::stoll(word.substr(eq + 1));
    } catch (const std::exception&) {
      throw ParseError("malformed header value in '" + word + "'");
    }
  }
  return kv;
}

long long need(const std::map<std::string, long long>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw ParseError("header lacks " + key);
  return it->second;
}

template <typename T>
T read_value(std::istream& is, const char* what) {
  T v;
  if (!(is >> v)) throw ParseError(std::string("truncated input reading ") + what);
  return v;
}

std::uint64_t power(int b, int m) {
  std::uint64_t r = 1;
  for (int i = 0; i < m; ++i) r *= static_cast<std::uint64_t>(b);
  return r;
}

PolyKind kind_from_code(const std::string& c) {
  if (c == "P") return PolyKind::Primitive;
  if (c == "I") return PolyKind::IrreducibleNonPrimitive;
  if (c == "R") return PolyKind::Reducible;
  throw ParseError("unknown class code '" + c + "'");
}

unsigned __int128 parse_u128(const std::string& s) {
  if (s.empty()) throw ParseError("empty integer");
  unsigned __int128 v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw ParseError("bad integer '" + s + "'");
    v = v * 10 + static_cast<unsigned>(c - '0');
  }
  return v;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  if (quoted) throw ParseError("unterminated quote in CSV");
  return out;
}

}  // namespace

void write_matrix(std::ostream& os, const OoaMatrix& m) {
  os << "OOA q=" << m.q() << " t=" << m.t() << " gamma=" << m.gamma() << " rows=" << m.rows()
     << " cols=" << m.cols() << "\n";
  for (const ColumnLabel& l : m.labels()) os << l.block << " " << l.pos << "\n";
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) os << (c ? " " : "") << static_cast<int>(m.at(r, c));
    os << "\n";
  }
}

OoaMatrix read_matrix(std::istream& is) {
  const auto kv = read_header(is, "OOA");
  const Field& F = Field::make(static_cast<int>(need(kv, "q")));
  const int t = static_cast<int>(need(kv, "t"));
  const int gamma = static_cast<int>(need(kv, "gamma"));
  const long long rows = need(kv, "rows");
  const long long cols = need(kv, "cols");
  if (t < 1 || gamma < 0 || rows < 0 || cols != static_cast<long long>(t) * (gamma + 1))
    throw ParseError("inconsistent OOA header");
  const auto expected = block_labels(gamma + 1, t);
  for (long long c = 0; c < cols; ++c) {
    const int b = read_value<int>(is, "column label");
    const int p = read_value<int>(is, "column label");
    if (ColumnLabel{b, p} != expected[c]) throw ParseError("unexpected column label");
  }
  std::vector<elem_t> entries;
  entries.reserve(static_cast<std::size_t>(rows * cols));
  for (long long i = 0; i < rows * cols; ++i) {
    const int v = read_value<int>(is, "matrix entry");
    if (v < 0 || v >= F.q()) throw ParseError("matrix entry out of range");
    entries.push_back(static_cast<elem_t>(v));
  }
  return OoaMatrix(F, t, gamma + 1, std::move(entries));
}

void write_points(std::ostream& os, const PointSet& p, int b, int m) {
  if (p.denom() != power(b, m)) throw PreconditionViolation("point denominators are not b^m");
  os << "NET b=" << b << " m=" << m << " s=" << p.s() << " N=" << p.size() << "\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (int d = 0; d < p.s(); ++d) os << (d ? " " : "") << p.at(i, d);
    os << "\n";
  }
}

PointSet read_points(std::istream& is) {
  const auto kv = read_header(is, "NET");
  const long long b = need(kv, "b"), m = need(kv, "m"), s = need(kv, "s"), n = need(kv, "N");
  if (b < 2 || m < 0 || s < 1 || n < 0) throw ParseError("inconsistent NET header");
  std::vector<std::uint64_t> num;
  num.reserve(static_cast<std::size_t>(n * s));
  for (long long i = 0; i < n * s; ++i) num.push_back(read_value<std::uint64_t>(is, "numerator"));
  return PointSet(static_cast<int>(s), power(static_cast<int>(b), static_cast<int>(m)), std::move(num));
}

nlohmann::ordered_json to_json(const CoverageReport& r) {
  nlohmann::ordered_json j;
  j["poly"] = to_string(r.f);
  j["q"] = r.f.field().q();
  j["class"] = std::string(1, kind_code(r.cls.kind));
  auto fac = nlohmann::ordered_json::array();
  for (const Factor& f : r.cls.factorization)
    fac.push_back({{"factor", to_string(f.poly)}, {"multiplicity", f.multiplicity}});
  j["factorization"] = fac;
  j["gamma"] = r.gamma;
  j["cols"] = r.cols;
  j["covered"] = r.covered;
  j["total"] = r.total;
  j["pct"] = r.pct();
  j["ooa_verified"] = r.ooa_verified;
  return j;
}

CoverageReport coverage_from_json(const nlohmann::json& j) {
  try {
    const Field& F = Field::make(j.at("q").get<int>());
    PolyClass cls{kind_from_code(j.at("class").get<std::string>()), {}};
    for (const auto& f : j.at("factorization"))
      cls.factorization.push_back(
          {parse_poly(F, f.at("factor").get<std::string>()), f.at("multiplicity").get<int>()});
    return CoverageReport{parse_poly(F, j.at("poly").get<std::string>()),
                          std::move(cls),
                          j.at("gamma").get<int>(),
                          j.at("cols").get<int>(),
                          j.at("covered").get<std::uint64_t>(),
                          j.at("total").get<std::uint64_t>(),
                          j.at("ooa_verified").get<bool>()};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("coverage JSON: ") + e.what());
  }
}

nlohmann::ordered_json to_json(const DiscrepancyEntry& e) {
  nlohmann::ordered_json j;
  j["poly"] = to_string(e.f);
  j["q"] = e.f.field().q();
  j["s"] = e.s;
  j["N"] = e.n;
  j["dstar_rational"] = e.dstar.rational();
  j["dstar_4dp"] = e.dstar.fixed4();
  return j;
}

DiscrepancyEntry discrepancy_from_json(const nlohmann::json& j) {
  try {
    const Field& F = Field::make(j.at("q").get<int>());
    const std::string rat = j.at("dstar_rational").get<std::string>();
    const auto slash = rat.find('/');
    if (slash == std::string::npos) throw ParseError("rational lacks '/'");
    Discrepancy d{parse_u128(rat.substr(0, slash)), parse_u128(rat.substr(slash + 1))};
    if (d.den == 0) throw ParseError("zero denominator");
    return {parse_poly(F, j.at("poly").get<std::string>()), j.at("s").get<int>(),
            j.at("N").get<std::size_t>(), d};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("discrepancy JSON: ") + e.what());
  }
}

TableFormat parse_format(const std::string& name) {
  if (name == "csv") return TableFormat::Csv;
  if (name == "json") return TableFormat::Json;
  if (name == "text") return TableFormat::Text;
  throw ParseError("unknown format '" + name + "' (csv, json or text)");
}

void write_table(std::ostream& os, const TextTable& tb, TableFormat fmt) {
  switch (fmt) {
    case TableFormat::Csv: {
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
        os << "\n";
      };
      line(tb.header);
      for (const auto& r : tb.rows) line(r);
      break;
    }
    case TableFormat::Json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : tb.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < tb.header.size(); ++i) obj[tb.header[i]] = r.at(i);
        arr.push_back(std::move(obj));
      }
      os << arr.dump(2) << "\n";
      break;
    }
    case TableFormat::Text: {
      std::vector<std::size_t> width(tb.header.size());
      for (std::size_t i = 0; i < width.size(); ++i) width[i] = tb.header[i].size();
      for (const auto& r : tb.rows)
        for (std::size_t i = 0; i < width.size(); ++i) width[i] = std::max(width[i], r.at(i).size());
      auto line = [&](const std::vector<std::string>& cells) {
        std::string out;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          out += cells[i];
          if (i + 1 < cells.size()) out += std::string(width[i] - cells[i].size() + 2, ' ');
        }
        os << out << "\n";
      };
      line(tb.header);
      for (const auto& r : tb.rows) line(r);
      break;
    }
  }
}

TextTable read_table(std::istream& is, TableFormat fmt) {
  TextTable tb;
  if (fmt == TableFormat::Csv) {
    std::string line;
    if (!std::getline(is, line)) throw ParseError("empty CSV");
    tb.header = split_csv_line(line);
    while (std::getline(is, line)) {
      if (line.empty()) continue;
      auto cells = split_csv_line(line);
      if (cells.size() != tb.header.size()) throw ParseError("CSV row has the wrong number of fields");
      tb.rows.push_back(std::move(cells));
    }
    return tb;
  }
  if (fmt == TableFormat::Json) {
    nlohmann::ordered_json arr;
    try {
      arr = nlohmann::ordered_json::parse(is);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("table JSON: ") + e.what());
    }
    if (!arr.is_array()) throw ParseError("table JSON must be an array");
    for (const auto& obj : arr) {
      if (!obj.is_object()) throw ParseError("table JSON rows must be objects");
      std::vector<std::string> keys, cells;
      for (const auto& [k, v] : obj.items()) {
        keys.push_back(k);
        cells.push_back(v.is_string() ? v.get<std::string>() : v.dump());
      }
      if (tb.header.empty()) tb.header = keys;
      if (keys != tb.header) throw ParseError("table JSON rows disagree on keys");
      tb.rows.push_back(std::move(cells));
    }
    return tb;
  }
  throw PreconditionViolation("text tables are not read back");
}

}  // namespace ooa
