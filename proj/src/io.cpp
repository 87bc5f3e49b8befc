#include "plg/io.hpp"

#include <fstream>

#include "plg/error.hpp"

namespace plg {

namespace {

[[noreturn]] void malformed(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::MalformedInput, where + ": " + what);
}

Rational rational_field(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) malformed(where, "expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    malformed(where, e.what());
  }
}

ExtRational ext_field(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return ExtRational(j.get<long>());
  if (!j.is_string()) malformed(where, "expected a rational string or -inf/inf");
  try {
    return parse_ext_rational(j.get<std::string>());
  } catch (const Error& e) {
    malformed(where, e.what());
  }
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) malformed(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) malformed(where, std::string("missing field '") + key + "'");
  return *it;
}

std::vector<Rational> rational_array(const Json& j, const std::string& where) {
  if (!j.is_array()) malformed(where, "expected an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_field(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Json rational_array(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

Tail tail_from_json(const Json& j, const std::string& side, const std::string& where) {
  const std::string slope = side + "_slope";
  const std::string period = side + "_period";
  const std::string shift = side + "_shift";
  if (j.contains(slope)) return Tail::affine(rational_field(j[slope], where + "." + slope));
  if (j.contains(period)) {
    return Tail::periodic(rational_field(j[period], where + "." + period),
                          rational_field(field(j, shift.c_str(), where), where + "." + shift));
  }
  malformed(where, "missing field '" + slope + "'");
}

}  // namespace

Json to_json(const PLHomeo& f) {
  Json j;
  j["breakpoints"] = rational_array(f.breakpoints());
  j["values"] = rational_array(f.values());
  for (const auto& [side, t] : {std::pair<std::string, const Tail*>{"left", &f.left_tail()}, {"right", &f.right_tail()}}) {
    if (t->is_affine()) {
      j[side + "_slope"] = to_string(t->slope);
    } else {
      j[side + "_period"] = to_string(t->period);
      j[side + "_shift"] = to_string(t->shift);
    }
  }
  return j;
}

PLHomeo homeo_from_json(const Json& j, const std::string& where) {
  auto xs = rational_array(field(j, "breakpoints", where), where + ".breakpoints");
  auto ys = rational_array(field(j, "values", where), where + ".values");
  Tail left = tail_from_json(j, "left", where);
  Tail right = tail_from_json(j, "right", where);
  try {
    return PLHomeo::from_parts(std::move(xs), std::move(ys), std::move(left), std::move(right));
  } catch (const Error& e) {
    malformed(where, e.what());
  }
}

Json to_json(const IntervalSet& s) {
  Json comps = Json::array();
  for (const auto& c : s.components()) comps.push_back(Json::array({to_string(c.lo), to_string(c.hi)}));
  if (!s.period()) return comps;
  Json j;
  j["period"] = to_string(*s.period());
  j["components"] = comps;
  return j;
}

IntervalSet interval_set_from_json(const Json& j, const std::string& where) {
  std::optional<Rational> period;
  const Json* comps = &j;
  if (j.is_object()) {
    period = rational_field(field(j, "period", where), where + ".period");
    comps = &field(j, "components", where);
  }
  if (!comps->is_array()) malformed(where, "expected an array of [lo, hi] pairs");
  std::vector<ClosedInterval> out;
  for (std::size_t i = 0; i < comps->size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const Json& c = (*comps)[i];
    if (!c.is_array() || c.size() != 2) malformed(at, "expected [lo, hi]");
    ClosedInterval iv{ext_field(c[0], at + "[0]"), ext_field(c[1], at + "[1]")};
    if (iv.hi < iv.lo) malformed(at, "lo > hi");
    out.push_back(iv);
  }
  try {
    return IntervalSet(std::move(out), period);
  } catch (const Error& e) {
    malformed(where, e.what());
  }
}

Json to_json(const PingPongCertificate& c) {
  Json j;
  j["f"] = to_json(c.f);
  j["g"] = to_json(c.g);
  j["k"] = c.k;
  j["A"] = Json::array();
  j["B"] = Json::array();
  for (const auto& s : c.A) j["A"].push_back(to_json(s));
  for (const auto& s : c.B) j["B"].push_back(to_json(s));
  if (c.power != 1) j["N"] = c.power;
  return j;
}

PingPongCertificate certificate_from_json(const Json& j) {
  PingPongCertificate c;
  c.f = homeo_from_json(field(j, "f", "certificate"), "f");
  c.g = homeo_from_json(field(j, "g", "certificate"), "g");
  const Json& k = field(j, "k", "certificate");
  if (!k.is_number_integer() || k.get<long>() < 1) malformed("k", "expected a positive integer");
  c.k = k.get<int>();
  for (const char* name : {"A", "B"}) {
    const Json& arr = field(j, name, "certificate");
    if (!arr.is_array()) malformed(name, "expected an array of interval sets");
    auto& dest = name[0] == 'A' ? c.A : c.B;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      dest.push_back(interval_set_from_json(arr[i], std::string(name) + "[" + std::to_string(i) + "]"));
    }
  }
  if (j.contains("N")) {
    if (!j["N"].is_number_integer()) malformed("N", "expected an integer");
    c.power = j["N"].get<long>();
  }
  return c;
}

Json action_to_json(const Assignment& action) {
  Json j = Json::object();
  for (std::size_t i = 0; i < action.size(); ++i) {
    j[std::string(1, generator_name(static_cast<int>(i)))] = to_json(action[i]);
  }
  return j;
}

Assignment action_from_json(const Json& j, const std::string& where) {
  if (!j.is_object() || j.empty()) malformed(where, "expected a non-empty object of generator maps");
  std::vector<std::optional<PLHomeo>> slots;
  for (const auto& [name, value] : j.items()) {
    const int idx = name.size() == 1 ? generator_index(name[0]) : -1;
    if (idx < 0 || std::isupper(static_cast<unsigned char>(name[0]))) {
      throw Error(ErrorCode::MissingGenerator, where + ": unknown generator name '" + name + "'");
    }
    if (slots.size() <= static_cast<std::size_t>(idx)) slots.resize(idx + 1);
    slots[idx] = homeo_from_json(value, where + "." + name);
  }
  Assignment out;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) {
      throw Error(ErrorCode::MissingGenerator,
                  where + ": no map for generator '" + std::string(1, generator_name(static_cast<int>(i))) + "'");
    }
    out.push_back(*slots[i]);
  }
  return out;
}

Json to_json(const DynOrder& o) {
  Json j;
  j["action"] = action_to_json(o.action);
  if (!o.refpoints.empty()) j["refpoints"] = rational_array(o.refpoints);
  return j;
}

DynOrder order_from_json(const Json& j) {
  DynOrder o;
  o.action = action_from_json(field(j, "action", "order"));
  if (j.contains("refpoints")) o.refpoints = rational_array(j["refpoints"], "refpoints");
  return o;
}

Json to_json(const Classification& c) {
  Json j;
  j["verdict"] = verdict_name(c.verdict);
  Json w = Json::object();
  if (c.fixed_point) w["fixed_point"] = to_string(*c.fixed_point);
  if (c.discrete) {
    w["discrete_set"] = {{"base", to_string(c.discrete->base)}, {"step", to_string(c.discrete->step)}};
  }
  if (c.translations) w["translation_numbers"] = rational_array(c.translations->numbers);
  if (c.period) w["period"] = to_string(*c.period);
  if (c.expansion) {
    const auto& e = *c.expansion;
    w["word"] = to_string(e.word);
    for (const auto& [k, v] : {std::pair<const char*, const Rational*>{"c", &e.c}, {"c_prime", &e.c_prime}, {"a", &e.a},
                               {"b", &e.b}, {"a_prime", &e.a_prime}, {"b_prime", &e.b_prime},
                               {"image_a", &e.image_a}, {"image_b", &e.image_b}}) {
      w[k] = to_string(*v);
    }
  }
  j["witness"] = w;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, path + ": " + e.what());
  }
}

}  // namespace plg
