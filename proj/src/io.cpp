#include "csg/io.hpp"

#include <fstream>
#include <sstream>

#include "csg/error.hpp"
#include "json.hpp"

namespace csg {

namespace {

using nlohmann::json;

json parse_or_fail(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::parse_error, "malformed JSON");
  return j;
}

json point_j(const Point& p) {
  json a = json::array();
  for (int v : p) a.push_back(v);
  return a;
}

Point point_of(const json& j) {
  if (!j.is_array() || j.empty()) fail(Errc::parse_error, "point must be a nonempty array");
  Point p;
  for (const auto& v : j) {
    if (!v.is_number_integer()) fail(Errc::parse_error, "point entries must be integers");
    p.push_back(v.get<int>());
  }
  return p;
}

json cone_j(const Cone& c) {
  json j;
  j["dim"] = c.dim();
  json rays = json::array();
  for (const Point& r : c.rays()) rays.push_back(point_j(r));
  j["rays"] = rays;
  return j;
}

Cone cone_of(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("rays") ||
      !j["dim"].is_number_integer() || !j["rays"].is_array())
    fail(Errc::parse_error, "cone needs integer \"dim\" and array \"rays\"");
  std::vector<Point> rays;
  for (const auto& r : j["rays"]) rays.push_back(point_of(r));
  return Cone::make(j["dim"].get<int>(), std::move(rays));
}

json order_j(const WeightOrder& o) {
  json rows = json::array();
  for (const auto& row : o.weights()) {
    json r = json::array();
    for (long long v : row) r.push_back(v);
    rows.push_back(r);
  }
  json j;
  j["weights"] = rows;
  return j;
}

std::vector<std::vector<long long>> weights_of(const json& j) {
  if (!j.is_object() || !j.contains("weights") || !j["weights"].is_array())
    fail(Errc::parse_error, "order needs array \"weights\"");
  std::vector<std::vector<long long>> rows;
  for (const auto& r : j["weights"]) {
    if (!r.is_array()) fail(Errc::parse_error, "weight rows must be arrays");
    std::vector<long long> row;
    for (const auto& v : r) {
      if (!v.is_number_integer()) fail(Errc::parse_error, "weights must be integers");
      row.push_back(v.get<long long>());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Ctx ctx_of(const json& j) {
  if (!j.is_object() || !j.contains("cone") || !j.contains("order"))
    fail(Errc::parse_error, "context needs \"cone\" and \"order\"");
  Cone cone = cone_of(j["cone"]);
  WeightOrder order = WeightOrder::make(cone, weights_of(j["order"]));
  return make_context(std::move(cone), std::move(order));
}

json ctx_j(const Context& ctx) {
  json j;
  j["cone"] = cone_j(ctx.cone);
  j["order"] = order_j(ctx.order);
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string cone_to_json(const Cone& c) { return cone_j(c).dump(); }

Cone cone_from_json_text(const std::string& text) { return cone_of(parse_or_fail(text)); }

std::string order_to_json(const WeightOrder& o) { return order_j(o).dump(); }

std::string context_to_json(const Context& ctx) { return ctx_j(ctx).dump(); }

Ctx context_from_json_text(const std::string& text) { return ctx_of(parse_or_fail(text)); }

std::string semigroup_to_json(const CSemigroup& s) {
  json j = ctx_j(s.c());
  json gaps = json::array();
  for (const Point& h : s.gaps()) gaps.push_back(point_j(h));
  j["gaps"] = gaps;
  return j.dump();
}

CSemigroup semigroup_from_json_text(const std::string& text) {
  json j = parse_or_fail(text);
  Ctx ctx = ctx_of(j);
  if (!j.contains("gaps") || !j["gaps"].is_array())
    fail(Errc::parse_error, "semigroup needs array \"gaps\"");
  std::vector<Point> gaps;
  for (const auto& h : j["gaps"]) gaps.push_back(point_of(h));
  return CSemigroup::from_gaps(std::move(ctx), std::move(gaps));
}

CSemigroup load_semigroup_file(const std::string& path) {
  return semigroup_from_json_text(read_file(path));
}

Cone parse_cone_spec(const std::string& spec) {
  if (spec.rfind("full:", 0) == 0) {
    try {
      size_t used = 0;
      int dim = std::stoi(spec.substr(5), &used);
      if (used != spec.size() - 5) fail(Errc::parse_error, spec);
      return Cone::full(dim);
    } catch (const Error&) {
      throw;
    } catch (...) {
      fail(Errc::parse_error, spec);
    }
  }
  return cone_from_json_text(read_file(spec));
}

std::vector<std::vector<long long>> parse_weight_rows(const std::string& s) {
  std::vector<std::vector<long long>> rows;
  std::stringstream outer(s);
  std::string rowtext;
  while (std::getline(outer, rowtext, ';')) {
    std::vector<long long> row;
    std::stringstream inner(rowtext);
    std::string cell;
    while (std::getline(inner, cell, ',')) {
      try {
        size_t used = 0;
        row.push_back(std::stoll(cell, &used));
        if (used != cell.size()) fail(Errc::parse_error, s);
      } catch (const Error&) {
        throw;
      } catch (...) {
        fail(Errc::parse_error, s);
      }
    }
    if (row.empty()) fail(Errc::parse_error, s);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(Errc::parse_error, s);
  return rows;
}

Point parse_point(const std::string& s) {
  Point p;
  std::stringstream in(s);
  std::string cell;
  while (std::getline(in, cell, ',')) {
    try {
      size_t used = 0;
      p.push_back(static_cast<int>(std::stoi(cell, &used)));
      if (used != cell.size()) fail(Errc::parse_error, s);
    } catch (const Error&) {
      throw;
    } catch (...) {
      fail(Errc::parse_error, s);
    }
  }
  if (p.empty()) fail(Errc::parse_error, s);
  return p;
}

std::string invariants_to_json(const CSemigroup& s, const InvariantRecord& rec) {
  json j;
  j["genus"] = rec.genus;
  j["frobenius"] = rec.frobenius ? point_j(*rec.frobenius)
                                 : point_j(Point(static_cast<size_t>(s.c().dim()), -1));
  j["conductor"] = point_j(rec.conductor);
  j["multiplicity"] = point_j(rec.multiplicity);
  json rm = json::array();
  for (const Point& r : rec.ray_multiplicities) rm.push_back(point_j(r));
  j["ray_multiplicities"] = rm;
  j["small_count"] = rec.small_count;
  j["frobenius_number"] = rec.frobenius_number;
  if (rec.embedding_dim) j["embedding_dim"] = *rec.embedding_dim;
  return j.dump();
}

std::string wilf_to_json(const std::string& kind, long long lhs, long long rhs, bool holds) {
  json j;
  j["kind"] = kind;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["holds"] = holds;
  return j.dump();
}

std::string csv_counts(const std::vector<std::pair<std::string, long long>>& rows) {
  std::string out = "key,count\n";
  for (const auto& [key, count] : rows) {
    bool quote = key.find_first_of(",\"\n") != std::string::npos;
    if (quote) {
      out += '"';
      for (char ch : key) {
        if (ch == '"') out += '"';
        out += ch;
      }
      out += '"';
    } else {
      out += key;
    }
    out += ',';
    out += std::to_string(count);
    out += '\n';
  }
  return out;
}

std::string tree_to_dot(const SemigroupTree& t) {
  // Node labels follow the edge-delta convention: the element joined for
  // gap-removing trees, the generator removed for gap-adding trees.
  char sign = t.edge_kind() == SemigroupTree::EdgeKind::gap_removed ? '+' : '-';
  std::string out = "digraph semigroup_tree {\n  node [shape=box];\n";
  std::string rootlabel = "{";
  const auto& gaps = t.root().gaps();
  for (size_t i = 0; i < gaps.size(); ++i) {
    if (i) rootlabel += ',';
    rootlabel += show(gaps[i]);
  }
  rootlabel += '}';
  out += "  n0 [label=\"" + rootlabel + "\"];\n";
  for (size_t i = 1; i < t.size(); ++i) {
    const auto& node = t.node(static_cast<int>(i));
    out += "  n" + std::to_string(i) + " [label=\"" + sign + show(node.edge) + "\"];\n";
    out += "  n" + std::to_string(node.parent) + " -> n" + std::to_string(i) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace csg
