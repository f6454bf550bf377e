#include "jacdiv/report.hpp"

#include <json.hpp>

#include "jacdiv/errors.hpp"

namespace jacdiv {

using nlohmann::ordered_json;

DivisorEntry to_entry(const DivisorReport& r) {
  DivisorEntry e;
  e.factor = render(r.factor);
  e.multiplicity = r.multiplicity;
  e.divisor_class = to_string(r.divisor_class);
  if (r.image_polynomial) e.image_polynomial = render(*r.image_polynomial);
  if (r.witness) e.witness = std::pair{render(r.witness->first), render(r.witness->second)};
  if (r.branching_quotient) e.branching_quotient = render(*r.branching_quotient);
  e.conormal = r.conormal;
  e.irreducibility = to_string(r.irreducibility);
  return e;
}

AntiInvariantEntry to_entry(const AntiInvariant& a) { return {render(a.s), render(a.S), to_string(a.scale)}; }

FiberEntry to_entry(const FiberResult& f, std::span<const Rat> target) {
  FiberEntry e;
  for (const auto& t : target) e.target.push_back(to_string(t));
  e.finite = f.finite;
  e.count = f.count;
  e.dimension = f.dimension;
  for (const auto& p : f.solutions) {
    std::vector<std::string> row;
    for (const auto& c : p) row.push_back(to_string(c));
    e.solutions.push_back(std::move(row));
  }
  return e;
}

namespace {

template <class T>
ordered_json optional_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json divisor_json(const DivisorEntry& d) {
  ordered_json j;
  j["factor"] = d.factor;
  j["multiplicity"] = d.multiplicity;
  j["class"] = d.divisor_class;
  j["image_polynomial"] = optional_json(d.image_polynomial);
  j["witness"] = d.witness ? ordered_json::array({d.witness->first, d.witness->second}) : ordered_json(nullptr);
  j["branching_quotient"] = optional_json(d.branching_quotient);
  j["conormal"] = optional_json(d.conormal);
  j["irreducibility"] = d.irreducibility;
  return j;
}

template <class T>
std::optional<T> read_optional(const ordered_json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

std::string to_json(const Report& r) {
  ordered_json j;
  j["seed"] = r.seed;
  j["variables"] = r.variables;
  j["image_variables"] = r.image_variables;
  j["jacobian"] = optional_json(r.jacobian);
  ordered_json divs = ordered_json::array();
  for (const auto& d : r.divisor_reports) divs.push_back(divisor_json(d));
  j["divisor_reports"] = divs;
  j["degree"] = optional_json(r.degree);
  if (r.anti_invariant) {
    j["anti_invariant"] = {{"s", r.anti_invariant->s}, {"S", r.anti_invariant->S}, {"scale", r.anti_invariant->scale}};
  } else {
    j["anti_invariant"] = nullptr;
  }
  j["involution_components"] = optional_json(r.involution_components);
  ordered_json flags = ordered_json::object();
  for (const auto& [k, v] : r.verification_flags) flags[k] = v;
  j["verification_flags"] = flags;
  j["timing"] = optional_json(r.timing);
  if (r.fiber) {
    const auto& f = *r.fiber;
    j["fiber"] = {{"target", f.target},       {"finite", f.finite},        {"count", f.count},
                  {"dimension", f.dimension}, {"solutions", f.solutions}};
  }
  if (r.image) {
    const auto& im = *r.image;
    j["image"] = {{"factor", im.factor},
                  {"ideal", im.ideal},
                  {"dimension", im.dimension},
                  {"image_polynomial", optional_json(im.image_polynomial)}};
  }
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  try {
    auto j = ordered_json::parse(text);
    Report r;
    r.seed = j.at("seed").get<std::uint64_t>();
    r.variables = j.at("variables").get<std::vector<std::string>>();
    r.image_variables = j.at("image_variables").get<std::vector<std::string>>();
    r.jacobian = read_optional<std::string>(j, "jacobian");
    for (const auto& d : j.at("divisor_reports")) {
      DivisorEntry e;
      e.factor = d.at("factor").get<std::string>();
      e.multiplicity = d.at("multiplicity").get<unsigned>();
      e.divisor_class = d.at("class").get<std::string>();
      e.image_polynomial = read_optional<std::string>(d, "image_polynomial");
      if (auto w = read_optional<std::vector<std::string>>(d, "witness")) {
        if (w->size() != 2) throw InputError("report: witness must have two entries");
        e.witness = std::pair{(*w)[0], (*w)[1]};
      }
      e.branching_quotient = read_optional<std::string>(d, "branching_quotient");
      e.conormal = read_optional<bool>(d, "conormal");
      e.irreducibility = d.at("irreducibility").get<std::string>();
      r.divisor_reports.push_back(std::move(e));
    }
    r.degree = read_optional<unsigned>(j, "degree");
    if (j.contains("anti_invariant") && !j.at("anti_invariant").is_null()) {
      const auto& a = j.at("anti_invariant");
      r.anti_invariant = AntiInvariantEntry{a.at("s").get<std::string>(), a.at("S").get<std::string>(),
                                            a.at("scale").get<std::string>()};
    }
    r.involution_components = read_optional<std::vector<std::string>>(j, "involution_components");
    for (const auto& [k, v] : j.at("verification_flags").items()) r.verification_flags[k] = v.get<bool>();
    r.timing = read_optional<double>(j, "timing");
    if (j.contains("fiber")) {
      const auto& f = j.at("fiber");
      FiberEntry e;
      e.target = f.at("target").get<std::vector<std::string>>();
      e.finite = f.at("finite").get<bool>();
      e.count = f.at("count").get<std::uint64_t>();
      e.dimension = f.at("dimension").get<int>();
      e.solutions = f.at("solutions").get<std::vector<std::vector<std::string>>>();
      r.fiber = std::move(e);
    }
    if (j.contains("image")) {
      const auto& im = j.at("image");
      ImageEntry e;
      e.factor = im.at("factor").get<std::string>();
      e.ideal = im.at("ideal").get<std::vector<std::string>>();
      e.dimension = im.at("dimension").get<int>();
      e.image_polynomial = read_optional<std::string>(im, "image_polynomial");
      r.image = std::move(e);
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("report: ") + e.what());
  }
}

}  // namespace jacdiv
