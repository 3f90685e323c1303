// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The invmilo Authors

#include "instance_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "error.hpp"
#include "json.hpp"
#include "mps.hpp"
#include "numfmt.hpp"

namespace invmilo {

namespace {

using nlohmann::ordered_json;

ordered_json num(double v) { return format_double(v); }

ordered_json vec(const std::vector<double>& v) {
  auto a = ordered_json::array();
  for (double x : v) a.push_back(num(x));
  return a;
}

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorCode::Parse, "instance: " + what);
}

double read_num(const ordered_json& j, const char* field) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    if (const auto v = parse_double(j.get<std::string>())) return *v;
  }
  bad(std::string("malformed number in ") + field);
}

std::vector<double> read_vec(const ordered_json& parent, const char* field) {
  if (!parent.contains(field) || !parent[field].is_array()) bad(std::string("missing array ") + field);
  std::vector<double> out;
  for (const auto& e : parent[field]) out.push_back(read_num(e, field));
  return out;
}

const char* relation_text(Relation r) {
  switch (r) {
    case Relation::GreaterEqual: return ">=";
    case Relation::LessEqual: return "<=";
    case Relation::Equal: return "=";
  }
  return "?";
}

Relation parse_relation(const std::string& s) {
  if (s == ">=") return Relation::GreaterEqual;
  if (s == "<=") return Relation::LessEqual;
  if (s == "=") return Relation::Equal;
  bad("unknown relation " + s);
}

ordered_json problem_json(const ForwardProblem& p) {
  ordered_json j;
  j["name"] = p.name;
  j["n"] = p.n;
  if (!p.var_names.empty()) j["var_names"] = p.var_names;
  j["lower"] = vec(p.lower);
  j["upper"] = vec(p.upper);
  auto ints = ordered_json::array();
  for (bool b : p.is_integer) ints.push_back(b);
  j["integer"] = ints;
  auto rows = ordered_json::array();
  for (const auto& r : p.rows) {
    ordered_json row;
    row["name"] = r.name;
    auto coeffs = ordered_json::array();
    for (const auto& e : r.coeffs) coeffs.push_back(ordered_json::array({e.index, num(e.value)}));
    row["coeffs"] = coeffs;
    row["relation"] = relation_text(r.relation);
    row["rhs"] = num(r.rhs);
    rows.push_back(row);
  }
  j["rows"] = rows;
  if (!p.objective.empty()) j["objective"] = vec(p.objective);
  return j;
}

ForwardProblem problem_from_json(const ordered_json& j) {
  if (!j.is_object()) bad("problem must be an object or an MPS path");
  if (!j.contains("n") || !j["n"].is_number_unsigned()) bad("problem.n missing");
  ForwardProblem p = make_problem(j.value("name", ""), j["n"].get<std::size_t>());
  if (j.contains("var_names")) p.var_names = j["var_names"].get<std::vector<std::string>>();
  p.lower = read_vec(j, "lower");
  p.upper = read_vec(j, "upper");
  if (!j.contains("integer") || !j["integer"].is_array()) bad("missing array integer");
  p.is_integer.clear();
  for (const auto& b : j["integer"]) {
    if (!b.is_boolean()) bad("integer flags must be booleans");
    p.is_integer.push_back(b.get<bool>());
  }
  if (j.contains("rows")) {
    for (const auto& rj : j["rows"]) {
      Row r;
      r.name = rj.value("name", "");
      if (!rj.contains("coeffs") || !rj["coeffs"].is_array()) bad("row without coeffs");
      for (const auto& e : rj["coeffs"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned()) bad("malformed coefficient");
        r.coeffs.push_back({e[0].get<std::size_t>(), read_num(e[1], "coeffs")});
      }
      r.relation = parse_relation(rj.value("relation", ""));
      if (!rj.contains("rhs")) bad("row without rhs");
      r.rhs = read_num(rj["rhs"], "rhs");
      p.rows.push_back(std::move(r));
    }
  }
  if (j.contains("objective")) p.objective = read_vec(j, "objective");
  p.check_well_formed();
  return p;
}

}  // namespace

std::string write_instance_json(const InverseInstance& inst) {
  ordered_json j;
  j["name"] = inst.label;
  j["problem"] = problem_json(inst.problem);
  j["c0"] = vec(inst.c0);
  j["x_hat"] = vec(inst.x_hat);
  return j.dump(2) + "\n";
}

InverseInstance parse_instance_json(std::string_view text, const std::string& base_dir) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("instance: ") + e.what());
  }
  if (!j.is_object()) bad("top level must be an object");
  InverseInstance inst;
  try {
    inst.label = j.value("name", "");
    if (!j.contains("problem")) bad("missing problem");
    if (j["problem"].is_string()) {
      std::filesystem::path path = j["problem"].get<std::string>();
      if (path.is_relative() && !base_dir.empty()) path = std::filesystem::path(base_dir) / path;
      inst.problem = read_mps_file(path.string());
    } else {
      inst.problem = problem_from_json(j["problem"]);
    }
    inst.c0 = read_vec(j, "c0");
    inst.x_hat = read_vec(j, "x_hat");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("instance: ") + e.what());
  }
  if (inst.c0.size() != inst.problem.n || inst.x_hat.size() != inst.problem.n) {
    throw Error(ErrorCode::DimensionMismatch, "instance: c0 and x_hat must have length n");
  }
  return inst;
}

std::vector<std::vector<double>> parse_point_list(std::string_view text) {
  std::vector<std::vector<double>> out;
  std::size_t pos = 0, line = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view l = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line;
    if (const auto hash = l.find('#'); hash != std::string_view::npos) l = l.substr(0, hash);
    std::vector<double> point;
    std::size_t i = 0;
    while (i < l.size()) {
      while (i < l.size() && std::string_view(" \t\r,;").find(l[i]) != std::string_view::npos) ++i;
      const std::size_t start = i;
      while (i < l.size() && std::string_view(" \t\r,;").find(l[i]) == std::string_view::npos) ++i;
      if (i == start) continue;
      const auto tok = l.substr(start, i - start);
      const auto v = parse_double(tok);
      if (!v) {
        throw Error(ErrorCode::Parse,
                    "points line " + std::to_string(line) + ": bad number " + std::string(tok));
      }
      point.push_back(*v);
    }
    if (!point.empty()) out.push_back(std::move(point));
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path);
}

InverseInstance read_instance_file(const std::string& path) {
  return parse_instance_json(read_text_file(path),
                             std::filesystem::path(path).parent_path().string());
}

void write_instance_file(const std::string& path, const InverseInstance& inst) {
  write_text_file(path, write_instance_json(inst));
}

}  // namespace invmilo
