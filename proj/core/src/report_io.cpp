#include "qsum/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

#include "qsum/graph6.hpp"

namespace qsum {
namespace {

Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return quantize(x);
}

std::string cell(const Json& v);

std::string join_cells(const Json& v) {
  std::string out;
  bool first = true;
  if (v.is_object()) {
    for (const auto& [key, item] : v.items()) {
      if (!first) out += ';';
      out += key + '=' + cell(item);
      first = false;
    }
  } else {
    for (const auto& item : v) {
      if (!first) out += ';';
      if (item.is_object() && item.contains("name") && item.contains("slack")) {
        out += item["name"].get<std::string>() + '=' + cell(item["slack"]);
      } else {
        out += cell(item);
      }
      first = false;
    }
  }
  return out;
}

std::string cell(const Json& v) {
  switch (v.type()) {
    case Json::value_t::null:
      return "";
    case Json::value_t::boolean:
      return v.get<bool>() ? "true" : "false";
    case Json::value_t::number_integer:
      return std::to_string(v.get<std::int64_t>());
    case Json::value_t::number_unsigned:
      return std::to_string(v.get<std::uint64_t>());
    case Json::value_t::number_float:
      return format_number(v.get<double>());
    case Json::value_t::string:
      return v.get<std::string>();
    case Json::value_t::object:
    case Json::value_t::array:
      return join_cells(v);
    default:
      return "";
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::vector<std::vector<std::string>> tabulate(const Json& rows) {
  std::vector<std::vector<std::string>> table;
  const Json list = rows.is_array() ? rows : Json::array({rows});
  if (list.empty()) return table;
  std::vector<std::string> header;
  for (const auto& [key, unused] : list.front().items()) header.push_back(key);
  table.push_back(header);
  for (const auto& row : list) {
    std::vector<std::string> cells;
    for (const auto& key : header) cells.push_back(row.contains(key) ? cell(row[key]) : "");
    table.push_back(std::move(cells));
  }
  return table;
}

}  // namespace

double quantize(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format_number(x).c_str(), nullptr);
}

std::string format_number(double x) {
  if (!std::isfinite(x)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*g", kOutputDigits, x);
  return buf;
}

Json to_json(const LemmaReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  Json quantities = Json::object();
  for (const auto& [k, v] : r.quantities) quantities[k] = number(v);
  Json margins = Json::array();
  for (const auto& m : r.margins)
    margins.push_back({{"name", m.name},
                       {"value", number(m.value)},
                       {"required", number(m.required)},
                       {"slack", number(m.value - m.required)}});
  Json out;
  out["lemma"] = r.lemma;
  out["params"] = params;
  out["graph6"] = r.graph6;
  out["quantities"] = quantities;
  out["margins"] = margins;
  out["verdict"] = std::string(verdict_name(r.verdict));
  out["note"] = r.note;
  return out;
}

Json to_json(const ExtremalRecord& r) {
  Json out;
  out["n"] = r.n;
  out["best_f"] = number(r.best_f);
  out["graph6"] = r.graph6;
  out["s2"] = number(r.s2);
  out["q1"] = number(r.q1);
  out["q2"] = number(r.q2);
  out["edges"] = r.edges;
  out["provenance"] = std::string(provenance_name(r.provenance));
  out["examined"] = r.examined;
  out["star_plus_edge"] = r.star_plus_edge;
  out["competitor_f"] = number(r.competitor_f);
  out["competitor_graph6"] = r.competitor_graph6;
  out["solver_tol"] = number(r.solver_tol);
  return out;
}

Json to_json(const ConjectureRow& r) {
  Json out;
  out["n"] = r.n;
  out["star_f"] = number(r.star_f);
  out["best_f"] = number(r.best.best_f);
  out["best_graph6"] = r.best.graph6;
  out["competitor_f"] = number(r.competitor_f);
  out["competitor_graph6"] = r.best.competitor_graph6;
  out["ratio"] = number(r.ratio);
  out["star_unique_minimizer"] = r.star_is_unique_minimizer;
  out["provenance"] = std::string(provenance_name(r.best.provenance));
  out["examined"] = r.best.examined;
  out["solver_tol"] = number(r.best.solver_tol);
  return out;
}

Json to_json(const EnumerationStats& s) {
  Json out;
  out["n"] = s.n;
  out["count"] = s.count;
  out["seconds"] = number(s.seconds);
  out["rate"] = number(s.rate);
  return out;
}

Json to_json(const QuotientMatrix& q) {
  Json rows = Json::array();
  for (int i = 0; i < q.entries.order; ++i) {
    Json row = Json::array();
    for (int j = 0; j < q.entries.order; ++j) row.push_back(q.entries(i, j));
    rows.push_back(row);
  }
  Json out;
  out["source"] = q.source;
  out["order"] = q.entries.order;
  out["entries"] = rows;
  out["cells"] = q.cells;
  return out;
}

Json graph_summary_json(const Graph& g, double solver_tol, bool with_spectrum) {
  const Spectrum spec = q_spectrum(g, solver_tol);
  const int n = g.order();
  const int e = edge_count(g);
  Json out;
  out["graph6"] = to_graph6(g);
  out["n"] = n;
  out["e"] = e;
  out["max_degree"] = max_degree(g);
  out["connected"] = is_connected(g);
  out["q1"] = number(spec.values[0]);
  out["q2"] = n >= 2 ? number(spec.values[1]) : Json(nullptr);
  if (n >= 2) {
    const double s = spec.values[0] + spec.values[1];
    out["s2"] = number(s);
    out["f"] = number(e + 3.0 - s);
  } else {
    out["s2"] = nullptr;
    out["f"] = nullptr;
  }
  out["solver_tol"] = number(spec.tol);
  if (with_spectrum) {
    Json values = Json::array();
    for (double v : spec.values) values.push_back(number(v));
    out["spectrum"] = values;
  }
  return out;
}

void write_csv(std::ostream& out, const Json& rows) {
  for (const auto& line : tabulate(rows)) {
    for (std::size_t i = 0; i < line.size(); ++i) out << (i ? "," : "") << csv_escape(line[i]);
    out << '\n';
  }
}

void write_text(std::ostream& out, const Json& rows) {
  const auto table = tabulate(rows);
  if (table.empty()) return;
  std::vector<std::size_t> width(table.front().size(), 0);
  for (const auto& line : table)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  for (const auto& line : table) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      text += line[i];
      if (i + 1 < line.size()) text.append(width[i] - line[i].size() + 2, ' ');
    }
    out << text << '\n';
  }
}

void write_json(std::ostream& out, const Json& value) {
  if (!value.is_array()) {
    out << value.dump() << '\n';
    return;
  }
  out << '[';
  for (std::size_t i = 0; i < value.size(); ++i) out << (i ? ",\n " : "\n ") << value[i].dump();
  out << (value.empty() ? "]\n" : "\n]\n");
}

}  // namespace qsum
