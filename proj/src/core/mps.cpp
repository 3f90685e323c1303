// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The invmilo Authors

#include "mps.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "error.hpp"
#include "numfmt.hpp"

namespace invmilo {

namespace {

enum class Section { None, Name, Rows, Columns, Rhs, Ranges, Bounds, End };

[[noreturn]] void fail(std::size_t line, const char* kind, const std::string& what) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + kind + ": " + what);
}

std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

struct RowInfo {
  char type = 'G';  // N, G, L, E
  std::size_t index = 0;  // into rows, or objective slot for N
  bool is_objective = false;
  bool is_free = false;
};

class Parser {
 public:
  ForwardProblem run(std::string_view text) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t eol = text.find('\n', pos);
      if (eol == std::string_view::npos) eol = text.size();
      std::string_view raw = text.substr(pos, eol - pos);
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      ++line_;
      handle(raw);
      if (section_ == Section::End) return finish();
      pos = eol + 1;
    }
    fail(line_, "UnexpectedEof", "missing ENDATA");
  }

 private:
  void handle(std::string_view raw) {
    if (raw.empty() || raw.front() == '*') return;
    const auto f = split_fields(raw);
    if (f.empty()) return;
    if (raw.front() != ' ' && raw.front() != '\t') {
      header(f);
      return;
    }
    switch (section_) {
      case Section::Rows: row_line(f); break;
      case Section::Columns: column_line(f); break;
      case Section::Rhs: rhs_line(f); break;
      case Section::Ranges: range_line(f); break;
      case Section::Bounds: bound_line(f); break;
      default: fail(line_, "UnknownSection", "data line outside a section");
    }
  }

  void header(const std::vector<std::string_view>& f) {
    const auto h = f[0];
    if (h == "NAME") {
      section_ = Section::Name;
      p_.name = f.size() > 1 ? std::string(f[1]) : "";
    } else if (h == "ROWS") {
      section_ = Section::Rows;
    } else if (h == "COLUMNS") {
      section_ = Section::Columns;
    } else if (h == "RHS") {
      section_ = Section::Rhs;
    } else if (h == "RANGES") {
      section_ = Section::Ranges;
    } else if (h == "BOUNDS") {
      section_ = Section::Bounds;
    } else if (h == "ENDATA") {
      section_ = Section::End;
    } else {
      fail(line_, "UnknownSection", std::string(h));
    }
  }

  double number(std::string_view s) {
    const auto v = parse_double(s);
    if (!v || std::isnan(*v)) fail(line_, "MalformedNumber", std::string(s));
    return *v;
  }

  void need(const std::vector<std::string_view>& f, std::size_t k) {
    if (f.size() < k) fail(line_, "MalformedLine", "expected at least " + std::to_string(k) + " fields");
  }

  void row_line(const std::vector<std::string_view>& f) {
    need(f, 2);
    const std::string name(f[1]);
    if (rows_.count(name)) fail(line_, "DuplicateRow", name);
    RowInfo info;
    if (f[0] == "N") {
      info.type = 'N';
      info.is_objective = !have_objective_;
      info.is_free = have_objective_;
      have_objective_ = true;
    } else if (f[0] == "G" || f[0] == "L" || f[0] == "E") {
      info.type = f[0][0];
      info.index = p_.rows.size();
      Row r;
      r.name = name;
      r.relation = info.type == 'G' ? Relation::GreaterEqual
                   : info.type == 'L' ? Relation::LessEqual
                                      : Relation::Equal;
      p_.rows.push_back(std::move(r));
    } else {
      fail(line_, "MalformedLine", "row type " + std::string(f[0]));
    }
    rows_.emplace(name, info);
  }

  const RowInfo& row_ref(std::string_view name) {
    const auto it = rows_.find(std::string(name));
    if (it == rows_.end()) fail(line_, "UnknownRowReference", std::string(name));
    return it->second;
  }

  std::size_t column(std::string_view name) {
    const std::string key(name);
    const auto it = cols_.find(key);
    if (it != cols_.end()) return it->second;
    const std::size_t j = p_.n++;
    cols_.emplace(key, j);
    p_.var_names.push_back(key);
    p_.lower.push_back(0.0);
    p_.upper.push_back(kInf);
    p_.is_integer.push_back(in_marker_);
    objective_.push_back(0.0);
    return j;
  }

  void column_line(const std::vector<std::string_view>& f) {
    if (f.size() >= 3 && f[1] == "'MARKER'") {
      if (f[2] == "'INTORG'") {
        in_marker_ = true;
      } else if (f[2] == "'INTEND'") {
        in_marker_ = false;
      } else {
        fail(line_, "MalformedLine", "marker " + std::string(f[2]));
      }
      return;
    }
    need(f, 3);
    if (f.size() % 2 == 0) fail(line_, "MalformedLine", "unpaired row/value field");
    const std::size_t j = column(f[0]);
    for (std::size_t k = 1; k + 1 < f.size(); k += 2) {
      const auto& info = row_ref(f[k]);
      const double v = number(f[k + 1]);
      if (info.is_objective) {
        objective_[j] = v;
      } else if (!info.is_free && v != 0.0) {
        p_.rows[info.index].coeffs.push_back({j, v});
      }
    }
  }

  // Fields after an optional set name come in (row, value) pairs.
  template <class F>
  void pairs(const std::vector<std::string_view>& f, F&& apply) {
    need(f, 2);
    const std::size_t first = f.size() % 2 == 0 ? 0 : 1;
    for (std::size_t k = first; k + 1 < f.size(); k += 2) apply(row_ref(f[k]), number(f[k + 1]));
  }

  void rhs_line(const std::vector<std::string_view>& f) {
    pairs(f, [&](const RowInfo& info, double v) {
      if (info.type != 'N') p_.rows[info.index].rhs = v;
    });
  }

  void range_line(const std::vector<std::string_view>& f) {
    pairs(f, [&](const RowInfo& info, double v) {
      if (info.type == 'N') fail(line_, "MalformedLine", "range on an objective row");
      ranges_[info.index] = v;
    });
  }

  void bound_line(const std::vector<std::string_view>& f) {
    need(f, 2);
    const auto type = f[0];
    const bool valueless = type == "FR" || type == "MI" || type == "PL" || type == "BV";
    // TYPE [SET] COL [VALUE]; the bound-set name is optional
    std::size_t col_field = 2;
    if (f.size() == 2 || (f.size() == 3 && !valueless)) col_field = 1;
    if (col_field >= f.size()) fail(line_, "MalformedLine", "bound column missing");
    const auto cit = cols_.find(std::string(f[col_field]));
    if (cit == cols_.end()) fail(line_, "UnknownColumnReference", std::string(f[col_field]));
    const std::size_t j = cit->second;
    std::optional<double> v;
    if (!valueless) {
      if (col_field + 1 >= f.size()) fail(line_, "MalformedLine", "bound value missing");
      v = number(f[col_field + 1]);
    }
    if (type == "UP") {
      p_.upper[j] = *v;
      if (*v < 0.0 && p_.lower[j] == 0.0) p_.lower[j] = -kInf;
    } else if (type == "LO") {
      p_.lower[j] = *v;
    } else if (type == "FX") {
      p_.lower[j] = p_.upper[j] = *v;
    } else if (type == "FR") {
      p_.lower[j] = -kInf;
      p_.upper[j] = kInf;
    } else if (type == "MI") {
      p_.lower[j] = -kInf;
    } else if (type == "PL") {
      p_.upper[j] = kInf;
    } else if (type == "BV") {
      p_.lower[j] = 0.0;
      p_.upper[j] = 1.0;
      p_.is_integer[j] = true;
    } else if (type == "LI") {
      p_.lower[j] = *v;
      p_.is_integer[j] = true;
    } else if (type == "UI") {
      p_.upper[j] = *v;
      p_.is_integer[j] = true;
    } else {
      fail(line_, "MalformedLine", "bound type " + std::string(type));
    }
  }

  ForwardProblem finish() {
    // RANGES: G -> [rhs, rhs+|R|], L -> [rhs-|R|, rhs], E -> sign of R
    // decides which side moves.
    std::vector<Row> extra;
    for (const auto& [i, r] : ranges_) {
      Row& row = p_.rows[i];
      const double a = std::abs(r);
      double lo = 0.0, hi = 0.0;
      if (row.relation == Relation::GreaterEqual) {
        lo = row.rhs;
        hi = row.rhs + a;
      } else if (row.relation == Relation::LessEqual) {
        lo = row.rhs - a;
        hi = row.rhs;
      } else if (r >= 0.0) {
        lo = row.rhs;
        hi = row.rhs + a;
      } else {
        lo = row.rhs - a;
        hi = row.rhs;
      }
      row.relation = Relation::GreaterEqual;
      row.rhs = lo;
      extra.push_back({row.name + "_rng", row.coeffs, Relation::LessEqual, hi});
    }
    for (auto& r : extra) p_.rows.push_back(std::move(r));
    p_.objective = objective_;
    p_.check_well_formed();
    return std::move(p_);
  }

  ForwardProblem p_;
  Section section_ = Section::None;
  std::size_t line_ = 0;
  std::map<std::string, RowInfo> rows_;
  std::map<std::string, std::size_t> cols_;
  std::map<std::size_t, double> ranges_;
  std::vector<double> objective_;
  bool have_objective_ = false;
  bool in_marker_ = false;
};

}  // namespace

ForwardProblem parse_mps(std::string_view text) { return Parser().run(text); }

ForwardProblem read_mps_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_mps(ss.str());
}

}  // namespace invmilo
