#include "m3/json_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace m3 {
namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
  throw Error(Err::Parse, "field \"" + field + "\": " + why);
}

long long get_int(const Json& j, const std::string& field) {
  if (!j.contains(field)) bad_field(field, "missing");
  if (!j[field].is_number_integer()) bad_field(field, "not an integer");
  return j[field].get<long long>();
}

Json bigint_to_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<long long>::min();
  static const BigInt hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return Json(static_cast<long long>(v));
  return Json(v.str());  // decimal string once past 64 bits
}

BigInt bigint_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  bad_field(field, "expected integer or decimal string");
}

}  // namespace

LinkDiagram diagram_from_json(const Json& j) {
  LinkDiagram d;
  d.component_count = static_cast<int>(get_int(j, "components"));
  if (!j.contains("crossings") || !j["crossings"].is_array()) bad_field("crossings", "missing array");
  for (const Json& c : j["crossings"]) {
    Crossing x;
    x.sign = static_cast<int>(get_int(c, "sign"));
    x.u_in = static_cast<int>(get_int(c, "u_in"));
    x.u_out = static_cast<int>(get_int(c, "u_out"));
    x.o_in = static_cast<int>(get_int(c, "o_in"));
    x.o_out = static_cast<int>(get_int(c, "o_out"));
    d.crossings.push_back(x);
  }
  if (!j.contains("arc_component") || !j["arc_component"].is_object())
    bad_field("arc_component", "missing object");
  for (auto& [key, val] : j["arc_component"].items()) {
    int arc;
    try {
      arc = std::stoi(key);
    } catch (...) {
      bad_field("arc_component", "non-numeric arc id \"" + key + "\"");
    }
    if (!val.is_number_integer()) bad_field("arc_component." + key, "not an integer");
    d.arc_component[arc] = val.get<int>();
  }
  if (j.contains("free_loops")) {
    if (!j["free_loops"].is_object()) bad_field("free_loops", "not an object");
    for (auto& [key, val] : j["free_loops"].items()) {
      int comp;
      try {
        comp = std::stoi(key);
      } catch (...) {
        bad_field("free_loops", "non-numeric component \"" + key + "\"");
      }
      d.free_loops[comp] = val.get<int>();
    }
  }
  validate(d);
  return d;
}

Json diagram_to_json(const LinkDiagram& d0) {
  LinkDiagram d = renumber(d0);
  Json j;
  j["components"] = d.component_count;
  Json arr = Json::array();
  for (const Crossing& x : d.crossings)
    arr.push_back(Json{{"sign", x.sign},
                       {"u_in", x.u_in},
                       {"u_out", x.u_out},
                       {"o_in", x.o_in},
                       {"o_out", x.o_out}});
  j["crossings"] = arr;
  Json ac = Json::object();
  for (auto& [arc, comp] : d.arc_component) ac[std::to_string(arc)] = comp;
  j["arc_component"] = ac;
  Json fl = Json::object();
  for (auto& [comp, cnt] : d.free_loops) fl[std::to_string(comp)] = cnt;
  j["free_loops"] = fl;
  return j;
}

BraidWord braid_from_json(const Json& j) {
  BraidWord b;
  b.strands = static_cast<int>(get_int(j, "strands"));
  if (!j.contains("word") || !j["word"].is_array()) bad_field("word", "missing array");
  for (const Json& v : j["word"]) {
    if (!v.is_number_integer()) bad_field("word", "letters must be integers");
    b.letters.push_back(v.get<int>());
  }
  validate(b);
  return b;
}

FamilySpec family_from_json(const Json& j) {
  FamilySpec spec;
  if (!j.contains("family") || !j["family"].is_string()) bad_field("family", "missing string");
  spec.name = j["family"].get<std::string>();
  if (!j.contains("params") || !j["params"].is_array()) bad_field("params", "missing array");
  for (const Json& v : j["params"]) {
    if (!v.is_number_integer()) bad_field("params", "parameters must be integers");
    spec.params.push_back(v.get<long long>());
  }
  return spec;
}

Json polynomial_to_json(const IntPolynomial& p) {
  Json coeffs = Json::array();
  for (const BigInt& c : p.c) coeffs.push_back(bigint_to_json(c));
  return Json{{"coeffs", coeffs}};
}

IntPolynomial polynomial_from_json(const Json& j) {
  if (!j.contains("coeffs") || !j["coeffs"].is_array()) bad_field("coeffs", "missing array");
  std::vector<BigInt> c;
  for (const Json& v : j["coeffs"]) c.push_back(bigint_from_json(v, "coeffs"));
  return IntPolynomial(std::move(c));
}

Json rational_to_json(const Rational& r) {
  return Json{{"num", bigint_to_json(r.num)}, {"den", bigint_to_json(r.den)}};
}

Json report_to_json(const InvariantReport& rep, const LinkDiagram& d) {
  Json j;
  j["lk"] = Json{{"(2,3)", rep.lk.at(2, 3)}, {"(3,1)", rep.lk.at(3, 1)}, {"(1,2)", rep.lk.at(1, 2)}};
  j["c1_components"] = Json::array({bigint_to_json(rep.c1_components[0]),
                                    bigint_to_json(rep.c1_components[1]),
                                    bigint_to_json(rep.c1_components[2])});
  j["c1_sublinks"] = Json::array({bigint_to_json(rep.c1_sublinks[0]),
                                  bigint_to_json(rep.c1_sublinks[1]),
                                  bigint_to_json(rep.c1_sublinks[2])});
  j["c1_link"] = bigint_to_json(rep.c1_link);
  j["betas"] = Json::array(
      {bigint_to_json(rep.betas[0]), bigint_to_json(rep.betas[1]), bigint_to_json(rep.betas[2])});
  j["gamma"] = bigint_to_json(rep.gamma);
  j["m_tilde"] = rational_to_json(rep.m_tilde);
  j["p1"] = rational_to_json(rep.p1);
  j["r"] = rational_to_json(rep.r);
  j["m_av"] = rational_to_json(rep.m_av);
  j["m"] = rational_to_json(rep.m);
  j["k"] = rep.k();
  j["k_norm"] = rep.k_norm();
  if (rep.good)
    j["good"] = Json{{"mu", Json::array({rep.good->mu1, rep.good->mu2, rep.good->mu3})},
                     {"sqrt_k", rep.good->sqrt_k},
                     {"k", rep.good->k}};
  else
    j["good"] = nullptr;
  j["diagram"] = diagram_to_json(d);
  return j;
}

LinkDiagram link_from_json_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw Error(Err::Parse, std::string("invalid JSON: ") + e.what());
  }
  if (j.contains("family")) return make_family(family_from_json(j));
  if (j.contains("strands")) return braid_closure(braid_from_json(j));
  if (j.contains("crossings") || j.contains("components")) return diagram_from_json(j);
  throw Error(Err::Parse, "unrecognized input object (expected family, braid or diagram)");
}

namespace {

std::string hex_encode(const std::string& s) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(s.size() * 2);
  for (unsigned char c : s) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

std::string hex_decode(const std::string& s) {
  auto val = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
  };
  std::string out;
  out.reserve(s.size() / 2);
  for (size_t i = 0; i + 1 < s.size(); i += 2) {
    int a = val(s[i]), b = val(s[i + 1]);
    if (a < 0 || b < 0) return {};
    out.push_back(static_cast<char>((a << 4) | b));
  }
  return out;
}

}  // namespace

void load_cache_file(const std::string& path, MemoCache& cache) {
  std::ifstream in(path);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      Json j = Json::parse(line);
      std::string key = hex_decode(j.at("key").get<std::string>());
      if (key.empty()) continue;
      cache.poly[key] = polynomial_from_json(j);
    } catch (...) {
      continue;  // ignore damaged lines
    }
  }
}

void save_cache_file(const std::string& path, const MemoCache& cache) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) return;
  for (auto& [key, poly] : cache.poly) {
    Json j = polynomial_to_json(poly);
    j["key"] = hex_encode(key);
    out << j.dump() << "\n";
  }
}

}  // namespace m3
