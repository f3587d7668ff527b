#include "groupwalk/io.hpp"

#include <charconv>
#include <fstream>

#include "groupwalk/errors.hpp"

namespace groupwalk {

using nlohmann::json;

namespace {

json entries_to_json(const RationalMeasure& mu) {
  json entries = json::array();
  for (const auto& [x, c] : mu.entries())
    entries.push_back(json::array({mu.group()->element_to_json(x), rational_to_string(c)}));
  return entries;
}

json entries_to_json(const RealMeasure& mu) {
  json entries = json::array();
  for (const auto& [x, c] : mu.entries())
    entries.push_back(json::array({mu.group()->element_to_json(x), c}));
  return entries;
}

void check_measure_shape(const json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("mode") || !j.contains("entries") ||
      !j["entries"].is_array())
    throw ParseError("measure file needs {group, mode, entries}: " + j.dump().substr(0, 200));
}

}  // namespace

json measure_to_json(const RationalMeasure& mu) {
  return json{{"group", mu.group()->to_json()}, {"mode", "rational"}, {"entries", entries_to_json(mu)}};
}

json measure_to_json(const RealMeasure& mu) {
  return json{{"group", mu.group()->to_json()}, {"mode", "real"}, {"entries", entries_to_json(mu)}};
}

AnyMeasure measure_from_json(const json& j) {
  check_measure_shape(j);
  GroupPtr g = group_from_json(j["group"]);
  const std::string mode = j["mode"].get<std::string>();
  if (mode != "rational" && mode != "real")
    throw ParseError("measure mode must be \"rational\" or \"real\", got \"" + mode + "\"");

  std::size_t index = 0;
  auto describe = [&](const json& entry) {
    return "measure entry " + std::to_string(index) + " (" + entry.dump() + ")";
  };

  if (mode == "rational") {
    std::vector<RationalMeasure::Entry> entries;
    for (const auto& entry : j["entries"]) {
      if (!entry.is_array() || entry.size() != 2 || !entry[1].is_string())
        throw ParseError(describe(entry) + ": expected [element, \"p/q\"]");
      try {
        entries.push_back({g->element_from_json(entry[0]), parse_rational(entry[1])});
      } catch (const Error& e) {
        throw ParseError(describe(entry) + ": " + e.what());
      }
      ++index;
    }
    return RationalMeasure(g, std::move(entries));
  }

  std::vector<RealMeasure::Entry> entries;
  for (const auto& entry : j["entries"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[1].is_number())
      throw ParseError(describe(entry) + ": expected [element, number]");
    try {
      entries.push_back({g->element_from_json(entry[0]), entry[1].get<double>()});
    } catch (const Error& e) {
      throw ParseError(describe(entry) + ": " + e.what());
    }
    ++index;
  }
  return RealMeasure(g, std::move(entries));
}

RationalMeasure rational_measure_from_json(const json& j) {
  AnyMeasure any = measure_from_json(j);
  if (auto* m = std::get_if<RationalMeasure>(&any)) return std::move(*m);
  throw ParseError("expected a rational-mode measure");
}

RealMeasure real_measure_from_json(const json& j) {
  AnyMeasure any = measure_from_json(j);
  if (auto* m = std::get_if<RealMeasure>(&any)) return std::move(*m);
  throw ParseError("expected a real-mode measure");
}

json basis_to_json(const HarmonicBasis& basis) {
  json points = json::array();
  for (const Element& x : basis.points()) points.push_back(basis.group()->element_to_json(x));
  json vectors = json::array();
  for (const auto& v : basis.vectors()) {
    json row = json::array();
    for (const Rational& c : v) row.push_back(rational_to_string(c));
    vectors.push_back(std::move(row));
  }
  return json{{"group", basis.group()->to_json()},
              {"dimension", basis.dimension()},
              {"points", std::move(points)},
              {"vectors", std::move(vectors)}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << "\n";
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw Error("double formatting failed");
  return std::string(buf, end);
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << "\n";
  }
}

}  // namespace groupwalk
