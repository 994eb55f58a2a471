#include "pantsgraph/serialize.hpp"

#include <cctype>
#include <stdexcept>

namespace pantsgraph {

Json slope_json(const Slope& s) { return s.str(); }

Json point_json(const UHPoint& z) { return Json{{"x", z.x}, {"y", z.y}}; }

Json geodesic_json(const Geodesic& g) {
  if (g.kind() == Geodesic::Kind::Vertical) {
    return Json{{"kind", "vertical"}, {"foot", g.foot()}};
  }
  return Json{{"kind", "semicircle"}, {"center", g.center()}, {"radius", g.radius()}};
}

Json matrix_json(const IntMatrix2& m) {
  return Json::array({Json::array({to_int64(m.a()), to_int64(m.b())}),
                      Json::array({to_int64(m.c()), to_int64(m.d())})});
}

Json triangle_json(const FareyTriangle& t) {
  return Json::array({t.v0().str(), t.v1().str(), t.v2().str()});
}

Json chart_json(const ExtendedFNChart& c) {
  Json out = Json::array();
  for (const FNEntry& e : c.entries()) {
    out.push_back(Json{{"curve", e.curve.str()}, {"length", e.length}, {"twist", e.twist}});
  }
  return out;
}

Json stratum_json(const StratumIndex& s) {
  Json out = Json::array();
  for (const Slope& curve : s.pinched()) out.push_back(curve.str());
  return out;
}

IntMatrix2 matrix_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() ||
      j[0].size() != 2 || j[1].size() != 2) {
    throw std::invalid_argument("matrix must be [[a,b],[c,d]]");
  }
  for (const auto& row : j) {
    for (const auto& v : row) {
      if (!v.is_number_integer()) {
        throw std::invalid_argument("matrix entries must be integers");
      }
    }
  }
  return {BigInt(j[0][0].get<std::int64_t>()), BigInt(j[0][1].get<std::int64_t>()),
          BigInt(j[1][0].get<std::int64_t>()), BigInt(j[1][1].get<std::int64_t>())};
}

ExtendedFNChart chart_from_json(const Json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("chart must be a list of {curve, length, twist}");
  }
  std::vector<FNEntry> entries;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("curve") || !item.contains("length") ||
        !item.contains("twist")) {
      throw std::invalid_argument("chart entry needs curve, length and twist");
    }
    entries.push_back(FNEntry{Slope::parse(item["curve"].get<std::string>()),
                              item["length"].get<double>(), item["twist"].get<double>()});
  }
  return ExtendedFNChart(std::move(entries));
}

std::complex<double> parse_complex(std::string_view text) {
  auto fail = [&]() -> std::complex<double> {
    throw std::invalid_argument("not a complex number: '" + std::string(text) +
                                "' (expected \"a+bi\")");
  };
  if (text.empty()) return fail();
  // Split at the last +/- that is not a leading sign or an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = text.size(); i-- > 1;) {
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto parse_part = [&](std::string_view part, bool imaginary) -> double {
    if (imaginary) {
      if (part.empty() || part.back() != 'i') fail();
      part.remove_suffix(1);
      if (part.empty() || part == "+") return 1.0;
      if (part == "-") return -1.0;
    }
    try {
      std::size_t used = 0;
      double v = std::stod(std::string(part), &used);
      if (used != part.size()) fail();
      return v;
    } catch (const std::exception&) {
      fail();
    }
    return 0.0;
  };
  bool has_i = text.back() == 'i';
  if (split == std::string_view::npos) {
    if (has_i) return {0.0, parse_part(text, true)};
    return {parse_part(text, false), 0.0};
  }
  if (!has_i) return fail();
  return {parse_part(text.substr(0, split), false), parse_part(text.substr(split), true)};
}

IntMatrix2 parse_matrix(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error&) {
    throw std::invalid_argument("not a matrix: '" + std::string(text) +
                                "' (expected \"[[a,b],[c,d]]\")");
  }
  return matrix_from_json(j);
}

}  // namespace pantsgraph
