#include "anacont/catalog.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "anacont/errors.hpp"

namespace anacont {

namespace {

void validate_spec(const SeriesSpec& spec) {
  if (spec.n0 < 0) {
    throw ParameterError("series spec: n0 must be non-negative");
  }
  if (static_cast<int>(spec.head.size()) < spec.n0) {
    throw ParameterError(
        "series spec '" + spec.label + "': head must cover indices [0, n0)");
  }
  for (int n = spec.n0; n < static_cast<int>(spec.head.size()); ++n) {
    const Cx from_phi = spec.phi.eval(Cx(n, 0.0));
    if (std::abs(from_phi - spec.head[n]) > 1e-10) {
      throw ParameterError(
          "series spec '" + spec.label +
          "': phi disagrees with the head at index " + std::to_string(n));
    }
  }
}

}  // namespace

Series to_series(const SeriesSpec& spec) {
  validate_spec(spec);
  Series s;
  s.head = spec.head;
  s.phi = spec.phi.fn();
  s.n0 = spec.n0;
  s.label = spec.label;
  return s;
}

namespace {

SeriesSpec make_spec(const std::string& label, std::vector<Cx> head,
                     const std::string& phi, int n0) {
  SeriesSpec s;
  s.label = label;
  s.head = std::move(head);
  s.phi = FunctionExpr::parse(phi);
  s.n0 = n0;
  return s;
}

std::vector<ExampleEntry> build_registry() {
  std::vector<ExampleEntry> reg;

  {
    ExampleEntry e;
    e.label = "geometric";
    e.spec = make_spec("geometric", {Cx(1.0, 0.0)}, "1", 0);
    e.closed_form = FunctionExpr::parse("1/(1 - z)");
    e.notes = "sum z^n";
    reg.push_back(std::move(e));
  }
  {
    ExampleEntry e;
    e.label = "log";
    e.spec = make_spec("log", {Cx(0.0, 0.0)}, "1/z", 1);
    e.closed_form = FunctionExpr::parse("-log(1 - z)");
    e.notes = "sum z^n / n, n >= 1";
    reg.push_back(std::move(e));
  }
  {
    ExampleEntry e;
    e.label = "dilog";
    e.spec = make_spec("dilog", {Cx(0.0, 0.0)}, "1/(z*z)", 1);
    e.closed_form = FunctionExpr::parse("li2(z)");
    e.notes = "sum z^n / n^2, n >= 1";
    reg.push_back(std::move(e));
  }
  {
    ExampleEntry e;
    e.label = "logshift";
    e.spec = make_spec("logshift", {}, "1/(z + 1)", 0);
    e.closed_form = FunctionExpr::parse("-log(1 - z)/z");
    e.notes = "sum z^n / (n+1)";
    reg.push_back(std::move(e));
  }
  {
    ExampleEntry e;
    e.label = "expneg";
    std::vector<Cx> head;
    double fact = 1.0;
    for (int n = 0; n < 26; ++n) {
      if (n > 0) fact *= n;
      head.push_back(Cx((n % 2 == 0 ? 1.0 : -1.0) / fact, 0.0));
    }
    e.spec = make_spec("expneg", std::move(head), "0", 26);
    e.closed_form = FunctionExpr::parse("exp(-z)");
    e.notes = "sum (-1)^n z^n / n!; head-only (interpolant is zero beyond)";
    e.boundary_g = FunctionExpr::parse("exp(-z)");
    reg.push_back(std::move(e));
  }

  // Self-check: spec validity and closed form against the convergent
  // series at interior points away from z = 0 and the positive axis.
  for (const ExampleEntry& e : reg) {
    const Series s = to_series(e.spec);
    for (double radius : {0.35, 0.62}) {
      for (int k = 0; k < 10; ++k) {
        const double ang = (2 * k + 1) * kPi / 10.0;
        const Cx z = radius * std::exp(Cx(0.0, ang));
        const Cx direct = direct_series_sum(s, z);
        const Cx closed = e.closed_form.eval(z);
        if (std::abs(direct - closed) > 1e-10) {
          throw std::logic_error(
              "builtin registry self-check failed for '" + e.label + "'");
        }
      }
    }
  }
  return reg;
}

}  // namespace

const std::vector<ExampleEntry>& builtin_registry() {
  static const std::vector<ExampleEntry> reg = build_registry();
  return reg;
}

const ExampleEntry& find_builtin(const std::string& label) {
  for (const ExampleEntry& e : builtin_registry()) {
    if (e.label == label) return e;
  }
  throw ParameterError("unknown builtin series '" + label + "'");
}

SeriesSpec load_series_spec(const std::string& path_or_builtin) {
  constexpr const char* kPrefix = "builtin:";
  if (path_or_builtin.rfind(kPrefix, 0) == 0) {
    return find_builtin(path_or_builtin.substr(std::string(kPrefix).size()))
        .spec;
  }
  std::ifstream in(path_or_builtin);
  if (!in) {
    throw ParameterError("cannot open series spec file '" + path_or_builtin +
                         "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return series_spec_from_json(buf.str());
}

std::string series_spec_to_json(const SeriesSpec& spec) {
  nlohmann::json j;
  j["label"] = spec.label;
  nlohmann::json head = nlohmann::json::array();
  for (const Cx& c : spec.head) {
    head.push_back({c.real(), c.imag()});
  }
  j["head"] = head;
  j["phi"] = spec.phi.render();
  j["n0"] = spec.n0;
  return j.dump(2);
}

SeriesSpec series_spec_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParameterError(std::string("series spec JSON: ") + e.what());
  }
  SeriesSpec spec;
  try {
    spec.label = j.at("label").get<std::string>();
    for (const auto& item : j.at("head")) {
      if (!item.is_array() || item.size() != 2) {
        throw ParameterError("series spec JSON: head entries must be [re, im]");
      }
      spec.head.push_back(Cx(item[0].get<double>(), item[1].get<double>()));
    }
    spec.phi = FunctionExpr::parse(j.at("phi").get<std::string>());
    spec.n0 = j.at("n0").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("series spec JSON: ") + e.what());
  }
  validate_spec(spec);
  return spec;
}

}  // namespace anacont
