#include "ufd/curve_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ufd/common.hpp"

namespace ufd {

namespace {

using nlohmann::json;

point parse_point(const json& j, std::size_t dim, std::size_t index,
                  const char* what) {
  if (!j.is_array() || j.size() != dim)
    throw argument_error("vertex " + std::to_string(index) + ": " + what +
                         " must be an array of " + std::to_string(dim) +
                         " numbers");
  std::vector<double> coords;
  coords.reserve(dim);
  for (const auto& c : j) {
    if (!c.is_number())
      throw argument_error("vertex " + std::to_string(index) + ": " + what +
                           " has a non-numeric coordinate");
    coords.push_back(c.get<double>());
  }
  return point(std::move(coords));
}

json point_to_json(const point& p) {
  json a = json::array();
  for (std::size_t i = 0; i < p.dim(); ++i) a.push_back(p[i]);
  return a;
}

}  // namespace

uncertain_curve parse_uncertain_curve(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw argument_error(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object() || !root.contains("dim") ||
      !root.contains("vertices"))
    throw argument_error("curve must be {\"dim\": d, \"vertices\": [...]}");
  if (!root["dim"].is_number_unsigned() || root["dim"].get<std::size_t>() == 0)
    throw argument_error("dim must be a positive integer");
  const auto dim = root["dim"].get<std::size_t>();
  const auto& verts = root["vertices"];
  if (!verts.is_array() || verts.empty())
    throw argument_error("vertices must be a non-empty array");

  uncertain_curve out;
  out.regions.reserve(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const auto& v = verts[i];
    if (v.is_array()) {
      out.regions.push_back(
          uncertain_region::make_point(parse_point(v, dim, i, "point")));
      continue;
    }
    if (!v.is_object() || !v.contains("kind") || !v["kind"].is_string())
      throw argument_error("vertex " + std::to_string(i) +
                           ": expected coordinate array or object with kind");
    const std::string kind = v["kind"].get<std::string>();
    if (kind == "point") {
      if (!v.contains("x"))
        throw argument_error("vertex " + std::to_string(i) + ": missing x");
      out.regions.push_back(
          uncertain_region::make_point(parse_point(v["x"], dim, i, "x")));
    } else if (kind == "options") {
      if (!v.contains("options") || !v["options"].is_array() ||
          v["options"].empty())
        throw argument_error("vertex " + std::to_string(i) +
                             ": options must be a non-empty array");
      std::vector<point> pts;
      pts.reserve(v["options"].size());
      for (const auto& o : v["options"])
        pts.push_back(parse_point(o, dim, i, "option"));
      out.regions.push_back(uncertain_region::make_options(std::move(pts)));
    } else if (kind == "disk") {
      if (!v.contains("center") || !v.contains("radius") ||
          !v["radius"].is_number())
        throw argument_error("vertex " + std::to_string(i) +
                             ": disk needs center and numeric radius");
      const double r = v["radius"].get<double>();
      if (r < 0.0)
        throw argument_error("vertex " + std::to_string(i) +
                             ": radius must be nonnegative");
      out.regions.push_back(uncertain_region::make_disk(
          parse_point(v["center"], dim, i, "center"), r));
    } else if (kind == "segment") {
      if (!v.contains("a") || !v.contains("b"))
        throw argument_error("vertex " + std::to_string(i) +
                             ": segment needs a and b");
      out.regions.push_back(
          uncertain_region::make_segment(parse_point(v["a"], dim, i, "a"),
                                         parse_point(v["b"], dim, i, "b")));
    } else {
      throw argument_error("vertex " + std::to_string(i) + ": unknown kind '" +
                           kind + "'");
    }
  }
  return out;
}

poly_curve parse_poly_curve(const std::string& text) {
  const uncertain_curve u = parse_uncertain_curve(text);
  poly_curve c;
  c.v.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].kind != region_kind::point)
      throw argument_error("vertex " + std::to_string(i) +
                           ": expected a precise curve but found an "
                           "uncertain vertex");
    c.v.push_back(u[i].option(0));
  }
  return c;
}

std::string format_curve(const uncertain_curve& u) {
  if (u.size() == 0) throw argument_error("cannot write an empty curve");
  json root;
  root["dim"] = u.dim();
  json verts = json::array();
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto& r = u[i];
    switch (r.kind) {
      case region_kind::point:
        verts.push_back(point_to_json(r.option(0)));
        break;
      case region_kind::options: {
        json o;
        o["kind"] = "options";
        json pts = json::array();
        for (std::size_t k = 0; k < r.option_count(); ++k)
          pts.push_back(point_to_json(r.option(k)));
        o["options"] = std::move(pts);
        verts.push_back(std::move(o));
        break;
      }
      case region_kind::disk: {
        json o;
        o["kind"] = "disk";
        o["center"] = point_to_json(r.center);
        o["radius"] = r.radius;
        verts.push_back(std::move(o));
        break;
      }
      case region_kind::segment: {
        json o;
        o["kind"] = "segment";
        o["a"] = point_to_json(r.seg_a);
        o["b"] = point_to_json(r.seg_b);
        verts.push_back(std::move(o));
        break;
      }
    }
  }
  root["vertices"] = std::move(verts);
  return root.dump(2) + "\n";
}

std::string format_curve(const poly_curve& c) {
  return format_curve(uncertain_curve::from_precise(c));
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw argument_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw argument_error("cannot write " + path);
  out << content;
}

}  // namespace

uncertain_curve load_uncertain_curve(const std::string& path) {
  try {
    return parse_uncertain_curve(read_file(path));
  } catch (const argument_error& e) {
    throw argument_error(path + ": " + e.what());
  }
}

poly_curve load_poly_curve(const std::string& path) {
  try {
    return parse_poly_curve(read_file(path));
  } catch (const argument_error& e) {
    throw argument_error(path + ": " + e.what());
  }
}

void save_curve(const std::string& path, const uncertain_curve& u) {
  write_file(path, format_curve(u));
}

void save_curve(const std::string& path, const poly_curve& c) {
  write_file(path, format_curve(c));
}

}  // namespace ufd
