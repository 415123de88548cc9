#include "phicert/certificate.hpp"

#include <array>
#include <charconv>
#include <cstdlib>

#include "json.hpp"
#include "phicert/errors.hpp"

#ifndef PHICERT_VERSION
#define PHICERT_VERSION "0.0.0"
#endif

namespace phicert {
namespace {

using nlohmann::json;

json to_json_value(const Interval& x) {
  return json::array({shortest_decimal(x.lo()), shortest_decimal(x.hi())});
}

Interval interval_from(const json& j) {
  return Interval(parse_double(j.at(0).get<std::string>()), parse_double(j.at(1).get<std::string>()));
}

json to_json_value(const Step& s) {
  json inputs = json::array();
  for (const auto& in : s.inputs) inputs.push_back(to_json_value(in));
  return json{{"description", s.description},
              {"inputs", inputs},
              {"output", to_json_value(s.output)},
              {"verdict", std::string(to_string(s.verdict))}};
}

Step step_from(const json& j) {
  Step s;
  s.description = j.at("description").get<std::string>();
  for (const auto& in : j.at("inputs")) s.inputs.push_back(interval_from(in));
  s.output = interval_from(j.at("output"));
  s.verdict = parse_verdict(j.at("verdict").get<std::string>());
  return s;
}

json to_json_value(const KeyValues& kv) {
  json obj = json::array();
  for (const auto& [k, v] : kv) obj.push_back(json::array({k, v}));
  return obj;
}

KeyValues key_values_from(const json& j) {
  KeyValues kv;
  for (const auto& item : j) kv.emplace_back(item.at(0).get<std::string>(), item.at(1).get<std::string>());
  return kv;
}

json to_json_value(const Certificate& c) {
  json steps = json::array();
  for (const auto& s : c.steps) steps.push_back(to_json_value(s));
  json children = json::array();
  for (const auto& child : c.children) children.push_back(to_json_value(child));
  json out{{"pipeline", std::string(to_string(c.pipeline))},
           {"parameters", to_json_value(c.parameters)},
           {"steps", steps},
           {"verdict", std::string(to_string(c.verdict))},
           {"results", to_json_value(c.results)},
           {"toolinfo",
            {{"version", c.toolinfo.version},
             {"ln_check_passed", c.toolinfo.ln_check_passed},
             {"ln_check_samples", c.toolinfo.ln_check_samples},
             {"ln_check_max_ulps", shortest_decimal(c.toolinfo.ln_check_max_ulps)}}}};
  if (c.witness) out["witness"] = to_json_value(*c.witness);
  if (!c.children.empty()) out["children"] = children;
  return out;
}

Certificate certificate_from(const json& j) {
  Certificate c;
  c.pipeline = parse_pipeline(j.at("pipeline").get<std::string>());
  c.parameters = key_values_from(j.at("parameters"));
  for (const auto& s : j.at("steps")) c.steps.push_back(step_from(s));
  c.verdict = parse_verdict(j.at("verdict").get<std::string>());
  c.results = key_values_from(j.at("results"));
  const auto& info = j.at("toolinfo");
  c.toolinfo.version = info.at("version").get<std::string>();
  c.toolinfo.ln_check_passed = info.at("ln_check_passed").get<bool>();
  c.toolinfo.ln_check_samples = info.at("ln_check_samples").get<int>();
  c.toolinfo.ln_check_max_ulps = parse_double(info.at("ln_check_max_ulps").get<std::string>());
  if (j.contains("witness")) c.witness = step_from(j.at("witness"));
  if (j.contains("children")) {
    for (const auto& child : j.at("children")) c.children.push_back(certificate_from(child));
  }
  return c;
}

std::optional<std::string> lookup(const KeyValues& kv, std::string_view key) {
  for (const auto& [k, v] : kv) {
    if (k == key) return v;
  }
  return std::nullopt;
}

bool same_step(const Step& a, const Step& b) {
  return a.description == b.description && a.inputs == b.inputs && a.output == b.output &&
         a.verdict == b.verdict;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::certified: return "certified";
    case Verdict::failed: return "failed";
    case Verdict::undecided: return "undecided";
  }
  return "undecided";
}

Verdict parse_verdict(std::string_view text) {
  if (text == "certified") return Verdict::certified;
  if (text == "failed") return Verdict::failed;
  if (text == "undecided") return Verdict::undecided;
  throw ValidationError("unknown verdict '" + std::string(text) + "'");
}

Verdict conjoin(Verdict a, Verdict b) {
  if (a == Verdict::failed || b == Verdict::failed) return Verdict::failed;
  if (a == Verdict::undecided || b == Verdict::undecided) return Verdict::undecided;
  return Verdict::certified;
}

std::string_view to_string(Pipeline p) {
  switch (p) {
    case Pipeline::I1: return "I1";
    case Pipeline::I2: return "I2";
    case Pipeline::I3: return "I3";
    case Pipeline::exact_facts: return "exact_facts";
    case Pipeline::generic: return "generic";
    case Pipeline::claim1: return "claim1";
  }
  return "generic";
}

Pipeline parse_pipeline(std::string_view text) {
  for (auto p : {Pipeline::I1, Pipeline::I2, Pipeline::I3, Pipeline::exact_facts, Pipeline::generic,
                 Pipeline::claim1}) {
    if (to_string(p) == text) return p;
  }
  throw ValidationError("unknown pipeline '" + std::string(text) + "'");
}

ToolInfo current_toolinfo() {
  const auto& check = ln_self_check();
  return ToolInfo{PHICERT_VERSION, check.passed, check.samples, check.max_error_ulps};
}

std::optional<std::string> Certificate::parameter(std::string_view key) const {
  return lookup(parameters, key);
}

std::optional<std::string> Certificate::result(std::string_view key) const {
  return lookup(results, key);
}

Step& Certificate::add_step(std::string description, std::vector<Interval> inputs, Interval output,
                            Verdict v) {
  steps.push_back(Step{std::move(description), std::move(inputs), output, v});
  return steps.back();
}

void Certificate::finalize() {
  Verdict v = Verdict::certified;
  for (const auto& s : steps) v = conjoin(v, s.verdict);
  for (const auto& c : children) v = conjoin(v, c.verdict);
  verdict = v;
}

const Step* Certificate::first_unsuccessful_step() const {
  for (const auto& s : steps) {
    if (s.verdict != Verdict::certified) return &s;
  }
  for (const auto& c : children) {
    if (const Step* s = c.first_unsuccessful_step()) return s;
  }
  return nullptr;
}

std::string to_json(const Certificate& cert, int indent) { return to_json_value(cert).dump(indent); }

Certificate certificate_from_json(std::string_view text) {
  try {
    return certificate_from(json::parse(text));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed certificate: ") + e.what());
  }
}

bool same_outcome(const Certificate& a, const Certificate& b) {
  if (a.pipeline != b.pipeline || a.verdict != b.verdict || a.parameters != b.parameters) return false;
  if (a.steps.size() != b.steps.size() || a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    if (!same_step(a.steps[i], b.steps[i])) return false;
  }
  if (a.witness.has_value() != b.witness.has_value()) return false;
  if (a.witness && !same_step(*a.witness, *b.witness)) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!same_outcome(a.children[i], b.children[i])) return false;
  }
  return true;
}

std::string shortest_decimal(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

double parse_double(std::string_view text) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw ValidationError("not a decimal number: '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace phicert
