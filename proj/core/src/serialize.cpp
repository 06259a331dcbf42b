#include "superpi/serialize.hpp"

#include <json.hpp>

#include <stdexcept>

namespace superpi {

namespace {

using nlohmann::ordered_json;

ordered_json multidegree_json(const Multidegree& n) { return ordered_json(std::vector<int>(n.begin(), n.end())); }

ordered_json cocharacter_json(const CocharacterReport& r, bool with_schema) {
  ordered_json j;
  if (with_schema) j["schema"] = kSchema;
  j["multidegree"] = multidegree_json(r.multidegree);
  j["codim"] = r.codim;
  ordered_json mults = ordered_json::array();
  for (const auto& [lambda, m] : r.mults) {
    ordered_json parts = ordered_json::array();
    for (const auto& p : lambda.components) parts.push_back(p.parts());
    mults.push_back({{"lambda", parts}, {"m", m.get_si()}});
  }
  j["mults"] = mults;
  return j;
}

ordered_json hook_json(const QuadHookSpec& h) {
  const auto f = h.flat();
  return ordered_json(std::vector<int>(f.begin(), f.end()));
}

QuadHookSpec hook_from(const ordered_json& j) {
  const auto v = j.get<std::vector<int>>();
  if (v.size() != 8) throw std::invalid_argument("hook must have 8 entries");
  QuadHookSpec h;
  for (std::size_t i = 0; i < 4; ++i) h.pairs[i] = {v[2 * i], v[2 * i + 1]};
  return h;
}

Multidegree multidegree_from(const ordered_json& j) {
  const auto v = j.get<std::vector<int>>();
  if (v.size() != 4) throw std::invalid_argument("multidegree must have 4 entries");
  return {v[0], v[1], v[2], v[3]};
}

CocharacterReport cocharacter_from(const ordered_json& j) {
  CocharacterReport r;
  r.multidegree = multidegree_from(j.at("multidegree"));
  r.codim = j.at("codim").get<std::size_t>();
  for (const auto& e : j.at("mults")) {
    const auto& parts = e.at("lambda");
    if (!parts.is_array() || parts.size() != 4) throw std::invalid_argument("lambda must have 4 components");
    MultiPartition mp;
    for (std::size_t i = 0; i < 4; ++i) mp.components[i] = Partition(parts[i].get<std::vector<int>>());
    r.mults[mp] = Integer(e.at("m").get<long>());
  }
  return r;
}

ordered_json parse_checked(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("schema", std::string()) != kSchema)
    throw std::invalid_argument("expected schema " + std::string(kSchema));
  return j;
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

} // namespace

std::string to_json(const CocharacterReport& r, int indent) { return cocharacter_json(r, true).dump(indent); }

std::string to_json(const HookReport& r, int indent) {
  ordered_json j;
  j["schema"] = kSchema;
  j["max_degree"] = r.max_degree;
  ordered_json reports = ordered_json::array();
  for (const auto& c : r.reports) reports.push_back(cocharacter_json(c, false));
  j["reports"] = reports;
  ordered_json hooks = ordered_json::array();
  for (const auto& h : r.minimal_hooks) hooks.push_back(hook_json(h));
  j["minimal_hooks"] = hooks;
  j["canonical"] = r.canonical ? hook_json(*r.canonical) : ordered_json(nullptr);
  return j.dump(indent);
}

CocharacterReport cocharacter_from_json(std::string_view text) {
  return guarded([&] { return cocharacter_from(parse_checked(text)); });
}

HookReport hook_report_from_json(std::string_view text) {
  return guarded([&] {
    const auto j = parse_checked(text);
    HookReport r;
    r.max_degree = j.at("max_degree").get<int>();
    for (const auto& c : j.at("reports")) r.reports.push_back(cocharacter_from(c));
    for (const auto& h : j.at("minimal_hooks")) r.minimal_hooks.push_back(hook_from(h));
    if (!j.at("canonical").is_null()) r.canonical = hook_from(j.at("canonical"));
    return r;
  });
}

} // namespace superpi
