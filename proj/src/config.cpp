#include "annealcert/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>

#include "json.hpp"

#include "annealcert/errors.hpp"
#include "annealcert/operators.hpp"

namespace annealcert {

namespace {

using nlohmann::json;

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string element(const std::string& path, std::size_t index) {
  return path + "[" + std::to_string(index) + "]";
}

void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) {
    throw ConfigSchemaError(path.empty() ? "(root)" : path,
                            std::string("expected an object, got ") + j.type_name());
  }
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* k) { return it.key() == k; });
    if (!known) throw ConfigSchemaError(join(path, it.key()), "unknown field");
  }
}

const json* find(const json& obj, const char* key) {
  const auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

const json& require_key(const json& obj, const char* key, const std::string& path) {
  const json* j = find(obj, key);
  if (!j) throw ConfigSchemaError(join(path, key), "required field is missing");
  return *j;
}

double get_number(const json& j, const std::string& path) {
  if (!j.is_number()) {
    throw ConfigSchemaError(path, std::string("expected a number, got ") + j.type_name());
  }
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigSchemaError(path, "must be finite");
  return v;
}

std::int64_t get_integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) {
    throw ConfigSchemaError(path, std::string("expected an integer, got ") + j.type_name());
  }
  return j.get<std::int64_t>();
}

std::size_t get_index(const json& j, const std::string& path) {
  const std::int64_t v = get_integer(j, path);
  if (v < 0) throw ConfigSchemaError(path, "must be non-negative");
  return static_cast<std::size_t>(v);
}

std::uint64_t get_seed(const json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  const std::int64_t v = get_integer(j, path);
  if (v < 0) throw ConfigSchemaError(path, "must be non-negative");
  return static_cast<std::uint64_t>(v);
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) {
    throw ConfigSchemaError(path, std::string("expected a string, got ") + j.type_name());
  }
  return j.get<std::string>();
}

const json& get_array(const json& j, const std::string& path) {
  if (!j.is_array()) {
    throw ConfigSchemaError(path, std::string("expected an array, got ") + j.type_name());
  }
  return j;
}

// Accepts a [u, value] pair.
std::pair<double, double> get_pair(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) {
    throw ConfigSchemaError(path, "expected a two-element [u, value] array");
  }
  return {get_number(j[0], path + "[0]"), get_number(j[1], path + "[1]")};
}

PauliAxis parse_axis(const std::string& name, const std::string& path) {
  if (name == "x") return PauliAxis::X;
  if (name == "y") return PauliAxis::Y;
  if (name == "z") return PauliAxis::Z;
  throw ConfigSchemaError(path, "expected one of \"x\", \"y\", \"z\", got \"" + name + "\"");
}

const char* axis_name(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::X:
      return "x";
    case PauliAxis::Y:
      return "y";
    case PauliAxis::Z:
      return "z";
  }
  return "?";
}

void note_default(ExperimentConfig& config, const std::string& text) {
  config.defaults_applied.push_back(text);
}

void parse_system(const json& root, ExperimentConfig& config) {
  const json& system = require_key(root, "system", "");
  require_object(system, "system");
  reject_unknown_keys(system, {"n_qubits", "fields", "couplings", "driver", "initial_state"},
                      "system");

  const std::size_t n = get_index(require_key(system, "n_qubits", "system"), "system.n_qubits");
  if (n < 1 || n > kDefaultMaxQubits) {
    throw ConfigSchemaError("system.n_qubits", "must lie in [1, " +
                                                   std::to_string(kDefaultMaxQubits) + "]");
  }
  config.n_qubits = n;

  if (const json* fields = find(system, "fields")) {
    const json& arr = get_array(*fields, "system.fields");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      config.fields.push_back(get_number(arr[i], element("system.fields", i)));
    }
    if (config.fields.size() != n) {
      throw ConfigSemanticError("system.fields", "expected " + std::to_string(n) +
                                                     " entries for " + std::to_string(n) +
                                                     " qubits, got " +
                                                     std::to_string(config.fields.size()));
    }
  } else {
    config.fields.assign(n, 0.0);
    note_default(config, "system.fields = [0, ...]");
  }

  if (const json* couplings = find(system, "couplings")) {
    const json& arr = get_array(*couplings, "system.couplings");
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string path = element("system.couplings", k);
      require_object(arr[k], path);
      reject_unknown_keys(arr[k], {"i", "j", "strength"}, path);
      AnnealSpec::IsingCoupling c;
      c.i = get_index(require_key(arr[k], "i", path), path + ".i");
      c.j = get_index(require_key(arr[k], "j", path), path + ".j");
      c.strength = get_number(require_key(arr[k], "strength", path), path + ".strength");
      if (c.i >= n) throw ConfigSemanticError(path + ".i", "qubit index out of range");
      if (c.j >= n) throw ConfigSemanticError(path + ".j", "qubit index out of range");
      if (c.i == c.j) throw ConfigSemanticError(path, "coupling must join two distinct qubits");
      config.couplings.push_back(c);
    }
  }

  if (const json* driver = find(system, "driver")) {
    config.driver = get_string(*driver, "system.driver");
    if (config.driver != "transverse_field" && config.driver != "none") {
      throw ConfigSchemaError("system.driver",
                              "expected \"transverse_field\" or \"none\", got \"" +
                                  config.driver + "\"");
    }
  } else {
    note_default(config, "system.driver = \"transverse_field\"");
  }

  if (const json* initial = find(system, "initial_state")) {
    if (initial->is_string()) {
      const std::string name = initial->get<std::string>();
      if (name != "uniform") {
        throw ConfigSchemaError("system.initial_state",
                                "expected \"uniform\" or a basis index, got \"" + name + "\"");
      }
    } else {
      const std::size_t index = get_index(*initial, "system.initial_state");
      if (index >= (std::size_t{1} << n)) {
        throw ConfigSemanticError("system.initial_state", "basis index out of range for " +
                                                              std::to_string(n) + " qubits");
      }
      config.initial_basis = index;
    }
  } else {
    note_default(config, "system.initial_state = \"uniform\"");
  }
}

void parse_schedule(const json& root, ExperimentConfig& config) {
  const json& schedule = require_key(root, "schedule", "");
  require_object(schedule, "schedule");
  reject_unknown_keys(schedule, {"kind", "total_time", "exponent", "knots"}, "schedule");

  std::string kind = "linear";
  if (const json* k = find(schedule, "kind")) {
    kind = get_string(*k, "schedule.kind");
  } else {
    note_default(config, "schedule.kind = \"linear\"");
  }

  const double total_time =
      get_number(require_key(schedule, "total_time", "schedule"), "schedule.total_time");
  if (!(total_time > 0.0)) throw ConfigSchemaError("schedule.total_time", "must be positive");

  const json* exponent = find(schedule, "exponent");
  const json* knots = find(schedule, "knots");
  if (exponent && kind != "polynomial") {
    throw ConfigSemanticError("schedule.exponent",
                              "only meaningful for polynomial schedules, kind is \"" + kind +
                                  "\"");
  }
  if (knots && kind != "piecewise_linear") {
    throw ConfigSemanticError("schedule.knots",
                              "only meaningful for piecewise_linear schedules, kind is \"" +
                                  kind + "\"");
  }

  try {
    if (kind == "linear") {
      config.schedule = Schedule::linear(total_time);
    } else if (kind == "polynomial") {
      const double p =
          get_number(require_key(schedule, "exponent", "schedule"), "schedule.exponent");
      config.schedule = Schedule::polynomial(total_time, p);
    } else if (kind == "piecewise_linear") {
      const json& arr = get_array(require_key(schedule, "knots", "schedule"), "schedule.knots");
      std::vector<Schedule::Knot> parsed;
      for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto [u, s] = get_pair(arr[i], element("schedule.knots", i));
        parsed.push_back(Schedule::Knot{u, s});
      }
      config.schedule = Schedule::piecewise_linear(total_time, std::move(parsed));
    } else {
      throw ConfigSchemaError(
          "schedule.kind",
          "expected one of \"linear\", \"polynomial\", \"piecewise_linear\", got \"" + kind +
              "\"");
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigSemanticError("schedule", e.what());
  }
}

Envelope parse_envelope(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown_keys(j, {"kind", "value", "start", "end", "amplitude", "knots"}, path);
  const std::string kind = get_string(require_key(j, "kind", path), join(path, "kind"));
  if (kind != "constant" && kind != "linear" && kind != "sin_pi" &&
      kind != "piecewise_linear") {
    throw ConfigSchemaError(
        join(path, "kind"),
        "expected one of \"constant\", \"linear\", \"sin_pi\", \"piecewise_linear\", got \"" +
            kind + "\"");
  }

  const auto forbid = [&](const char* key, const char* wanted) {
    if (find(j, key)) {
      throw ConfigSemanticError(join(path, key), std::string("only meaningful for ") + wanted +
                                                     " envelopes, kind is \"" + kind + "\"");
    }
  };
  if (kind != "constant") forbid("value", "constant");
  if (kind != "linear") {
    forbid("start", "linear");
    forbid("end", "linear");
  }
  if (kind != "sin_pi") forbid("amplitude", "sin_pi");
  if (kind != "piecewise_linear") forbid("knots", "piecewise_linear");

  try {
    if (kind == "constant") {
      return Envelope::constant(get_number(require_key(j, "value", path), join(path, "value")));
    }
    if (kind == "linear") {
      return Envelope::linear(get_number(require_key(j, "start", path), join(path, "start")),
                              get_number(require_key(j, "end", path), join(path, "end")));
    }
    if (kind == "sin_pi") {
      return Envelope::sin_pi(
          get_number(require_key(j, "amplitude", path), join(path, "amplitude")));
    }
    if (kind == "piecewise_linear") {
      const json& arr = get_array(require_key(j, "knots", path), join(path, "knots"));
      std::vector<Envelope::Knot> knots;
      for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto [u, value] = get_pair(arr[i], element(join(path, "knots"), i));
        knots.push_back(Envelope::Knot{u, value});
      }
      return Envelope::piecewise_linear(std::move(knots));
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigSemanticError(path, e.what());
  }
  return Envelope::constant(0.0);  // unreachable; kinds validated above
}

void parse_error_model(const json& root, ExperimentConfig& config) {
  const json* model = find(root, "error_model");
  if (!model) {
    note_default(config, "error_model.kind = \"none\"");
    return;
  }
  require_object(*model, "error_model");
  reject_unknown_keys(*model, {"kind", "axis", "strengths", "deltas", "terms", "envelope"},
                      "error_model");
  config.error_kind =
      get_string(require_key(*model, "kind", "error_model"), "error_model.kind");
  const std::string& kind = config.error_kind;
  if (kind != "none" && kind != "static_field_bias" && kind != "coupling_deviation" &&
      kind != "schedule_perturbation" && kind != "custom") {
    throw ConfigSchemaError("error_model.kind",
                            "expected one of \"none\", \"static_field_bias\", "
                            "\"coupling_deviation\", \"schedule_perturbation\", \"custom\", "
                            "got \"" +
                                kind + "\"");
  }

  const auto forbid = [&](const char* key, const std::string& wanted) {
    if (find(*model, key)) {
      throw ConfigSemanticError(join("error_model", key),
                                "only meaningful for " + wanted + " models, kind is \"" + kind +
                                    "\"");
    }
  };
  if (kind != "static_field_bias") {
    forbid("axis", "static_field_bias");
    forbid("strengths", "static_field_bias");
  }
  if (kind != "coupling_deviation") forbid("deltas", "coupling_deviation");
  if (kind != "custom") forbid("terms", "custom");
  if (kind != "schedule_perturbation" && kind != "custom") {
    forbid("envelope", "schedule_perturbation or custom");
  }

  const std::size_t n = config.n_qubits;
  if (kind == "static_field_bias") {
    config.error_axis = parse_axis(
        get_string(require_key(*model, "axis", "error_model"), "error_model.axis"),
        "error_model.axis");
    const json& arr =
        get_array(require_key(*model, "strengths", "error_model"), "error_model.strengths");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      config.error_strengths.push_back(get_number(arr[i], element("error_model.strengths", i)));
    }
    if (config.error_strengths.size() != n) {
      throw ConfigSemanticError("error_model.strengths",
                                "expected " + std::to_string(n) + " entries for " +
                                    std::to_string(n) + " qubits, got " +
                                    std::to_string(config.error_strengths.size()));
    }
  } else if (kind == "coupling_deviation") {
    const json& arr =
        get_array(require_key(*model, "deltas", "error_model"), "error_model.deltas");
    if (arr.empty()) throw ConfigSchemaError("error_model.deltas", "must be non-empty");
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string path = element("error_model.deltas", k);
      require_object(arr[k], path);
      reject_unknown_keys(arr[k], {"i", "j", "delta"}, path);
      CouplingDelta d;
      d.i = get_index(require_key(arr[k], "i", path), path + ".i");
      d.j = get_index(require_key(arr[k], "j", path), path + ".j");
      d.delta = get_number(require_key(arr[k], "delta", path), path + ".delta");
      if (d.i >= n) throw ConfigSemanticError(path + ".i", "qubit index out of range");
      if (d.j >= n) throw ConfigSemanticError(path + ".j", "qubit index out of range");
      if (d.i == d.j) throw ConfigSemanticError(path, "deviation must join two distinct qubits");
      config.error_deltas.push_back(d);
    }
  } else if (kind == "custom") {
    const json& arr = get_array(require_key(*model, "terms", "error_model"), "error_model.terms");
    if (arr.empty()) throw ConfigSchemaError("error_model.terms", "must be non-empty");
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string path = element("error_model.terms", k);
      require_object(arr[k], path);
      reject_unknown_keys(arr[k], {"coefficient", "word"}, path);
      PauliTerm term;
      term.coefficient =
          get_number(require_key(arr[k], "coefficient", path), path + ".coefficient");
      term.word = get_string(require_key(arr[k], "word", path), path + ".word");
      for (char c : term.word) {
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
          throw ConfigSchemaError(path + ".word",
                                  std::string("invalid Pauli letter '") + c +
                                      "'; expected I, X, Y or Z");
        }
      }
      if (term.word.size() != n) {
        throw ConfigSemanticError(path + ".word", "expected " + std::to_string(n) +
                                                      " letters for " + std::to_string(n) +
                                                      " qubits, got " +
                                                      std::to_string(term.word.size()));
      }
      config.error_terms.push_back(term);
    }
  }

  if (kind == "schedule_perturbation" || kind == "custom") {
    if (const json* envelope = find(*model, "envelope")) {
      config.error_envelope = parse_envelope(*envelope, "error_model.envelope");
    } else {
      note_default(config, "error_model.envelope = {kind: \"constant\", value: 1}");
    }
  }
}

void parse_numerics(const json& root, ExperimentConfig& config) {
  if (const json* integrator = find(root, "integrator")) {
    require_object(*integrator, "integrator");
    reject_unknown_keys(*integrator, {"steps"}, "integrator");
    if (const json* steps = find(*integrator, "steps")) {
      // "auto" is what the echo emits for an unset count; accept it back so
      // an echoed config is itself runnable.
      if (!(steps->is_string() && steps->get<std::string>() == "auto")) {
        const std::size_t s = get_index(*steps, "integrator.steps");
        if (s < 1) throw ConfigSchemaError("integrator.steps", "must be at least 1");
        config.steps = s;
      }
    }
  }
  if (!config.steps) note_default(config, "integrator.steps = auto");

  if (const json* quadrature = find(root, "quadrature")) {
    require_object(*quadrature, "quadrature");
    reject_unknown_keys(*quadrature, {"panels"}, "quadrature");
    if (const json* panels = find(*quadrature, "panels")) {
      const std::size_t p = get_index(*panels, "quadrature.panels");
      if (p < 2 || p % 2 != 0) {
        throw ConfigSchemaError("quadrature.panels",
                                "Simpson panel count must be even and at least 2");
      }
      config.panels = p;
    } else {
      note_default(config, "quadrature.panels = " + std::to_string(config.panels));
    }
  } else {
    note_default(config, "quadrature.panels = " + std::to_string(config.panels));
  }
}

void parse_measurement(const json& root, ExperimentConfig& config) {
  const json* measurement = find(root, "measurement");
  if (measurement) {
    require_object(*measurement, "measurement");
    reject_unknown_keys(*measurement, {"shots", "seed", "target", "epsilon_override"},
                        "measurement");
    if (const json* shots = find(*measurement, "shots")) {
      const std::size_t s = get_index(*shots, "measurement.shots");
      if (s < 1) throw ConfigSchemaError("measurement.shots", "must be at least 1");
      config.shots = s;
    } else {
      note_default(config, "measurement.shots = " + std::to_string(config.shots));
    }
    if (const json* seed = find(*measurement, "seed")) {
      config.seed = get_seed(*seed, "measurement.seed");
    } else {
      note_default(config, "measurement.seed = " + std::to_string(config.seed));
    }
    if (const json* target = find(*measurement, "target")) {
      const std::size_t m = get_index(*target, "measurement.target");
      if (m >= (std::size_t{1} << config.n_qubits)) {
        throw ConfigSemanticError("measurement.target", "basis index out of range for " +
                                                            std::to_string(config.n_qubits) +
                                                            " qubits");
      }
      config.target = m;
    }
    if (const json* epsilon = find(*measurement, "epsilon_override")) {
      const double e = get_number(*epsilon, "measurement.epsilon_override");
      if (!(e >= 0.0) || !(e < 1.0)) {
        throw ConfigSchemaError("measurement.epsilon_override", "must lie in [0, 1)");
      }
      config.epsilon_override = e;
    }
  } else {
    note_default(config, "measurement.shots = " + std::to_string(config.shots));
    note_default(config, "measurement.seed = " + std::to_string(config.seed));
  }
}

void parse_sweep(const json& root, ExperimentConfig& config) {
  const json* sweep = find(root, "sweep");
  if (sweep) {
    require_object(*sweep, "sweep");
    reject_unknown_keys(*sweep, {"total_times", "error_scales"}, "sweep");
    if (const json* times = find(*sweep, "total_times")) {
      const json& arr = get_array(*times, "sweep.total_times");
      if (arr.empty()) throw ConfigSchemaError("sweep.total_times", "must be non-empty");
      for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string path = element("sweep.total_times", i);
        const double t = get_number(arr[i], path);
        if (!(t > 0.0)) throw ConfigSchemaError(path, "must be positive");
        config.total_times.push_back(t);
      }
    }
    if (const json* scales = find(*sweep, "error_scales")) {
      const json& arr = get_array(*scales, "sweep.error_scales");
      if (arr.empty()) throw ConfigSchemaError("sweep.error_scales", "must be non-empty");
      for (std::size_t i = 0; i < arr.size(); ++i) {
        config.error_scales.push_back(get_number(arr[i], element("sweep.error_scales", i)));
      }
    }
  }
  if (config.total_times.empty()) {
    config.total_times.push_back(config.schedule.total_time());
    note_default(config, "sweep.total_times = [schedule.total_time]");
  }
  if (config.error_scales.empty()) {
    config.error_scales.push_back(1.0);
    note_default(config, "sweep.error_scales = [1]");
  }
}

void parse_output(const json& root, ExperimentConfig& config) {
  const json* output = find(root, "output");
  if (output) {
    require_object(*output, "output");
    reject_unknown_keys(*output, {"directory", "format"}, "output");
    if (const json* dir = find(*output, "directory")) {
      const std::string d = get_string(*dir, "output.directory");
      if (d.empty()) throw ConfigSchemaError("output.directory", "must be non-empty");
      config.directory = d;
    }
    if (const json* format = find(*output, "format")) {
      const std::string name = get_string(*format, "output.format");
      try {
        config.format = parse_output_format(name);
      } catch (const std::invalid_argument& e) {
        throw ConfigSchemaError("output.format", e.what());
      }
    } else {
      note_default(config, "output.format = \"both\"");
    }
  } else {
    note_default(config, "output.format = \"both\"");
  }
}

}  // namespace

// Otherwise a midpoint sample straddles the jump and the step error is
// uncontrolled.
void validate_steps_alignment(const ExperimentConfig& config) {
  const std::vector<double> jumps = config.error_envelope.discontinuities();
  if (jumps.empty()) return;
  if (!config.steps) {
    throw ConfigSemanticError("integrator.steps",
                              "must be set explicitly when the error envelope jumps, so the "
                              "jumps can be checked against the step grid");
  }
  const double steps = static_cast<double>(*config.steps);
  for (double u : jumps) {
    const double pos = u * steps;
    if (std::abs(pos - std::round(pos)) > 1e-9) {
      throw ConfigSemanticError("integrator.steps",
                                "envelope jump at normalized time " + std::to_string(u) +
                                    " does not land on the step grid of " +
                                    std::to_string(*config.steps) + " steps");
    }
  }
}

OutputFormat parse_output_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "report") return OutputFormat::Report;
  if (name == "both") return OutputFormat::Both;
  throw std::invalid_argument("expected one of \"csv\", \"report\", \"both\", got \"" + name +
                              "\"");
}

const char* output_format_name(OutputFormat format) {
  switch (format) {
    case OutputFormat::Csv:
      return "csv";
    case OutputFormat::Report:
      return "report";
    case OutputFormat::Both:
      return "both";
  }
  return "?";
}

ExperimentConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min(e.byte > 0 ? e.byte - 1 : 0, json_text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (json_text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string message = e.what();
    if (const auto cut = message.find("] "); cut != std::string::npos) {
      message = message.substr(cut + 2);
    }
    throw ConfigParseError(line, column, message);
  }

  require_object(root, "");
  // "defaults_applied" appears in echoed configs; it is informational and
  // regenerated on every parse, so accept and ignore it on the way in.
  reject_unknown_keys(root,
                      {"schema_version", "system", "schedule", "error_model", "integrator",
                       "quadrature", "measurement", "sweep", "output", "defaults_applied"},
                      "");

  ExperimentConfig config;
  const std::int64_t version =
      get_integer(require_key(root, "schema_version", ""), "schema_version");
  if (version != kSchemaVersion) {
    throw ConfigSchemaError("schema_version", "unsupported version " + std::to_string(version) +
                                                  "; this build reads version " +
                                                  std::to_string(kSchemaVersion));
  }

  parse_system(root, config);
  parse_schedule(root, config);
  parse_error_model(root, config);
  parse_numerics(root, config);
  parse_measurement(root, config);
  parse_sweep(root, config);
  parse_output(root, config);
  validate_steps_alignment(config);

  // Construct the domain objects once so any remaining inconsistency
  // surfaces at load time rather than mid-run.
  try {
    build_spec(config, config.schedule.total_time());
    build_error_model(config, 1.0);
  } catch (const std::invalid_argument& e) {
    throw ConfigSemanticError("(config)", e.what());
  }
  return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("io", path.string(), "cannot open config file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (!in.good() && !in.eof()) {
    throw ConfigError("io", path.string(), "error while reading config file");
  }
  return parse_config(buffer.str());
}

AnnealSpec build_spec(const ExperimentConfig& config, double total_time) {
  const std::size_t n = config.n_qubits;
  HermitianOperator problem = AnnealSpec::ising_problem(n, config.fields, config.couplings);
  HermitianOperator driver = config.driver == "none"
                                 ? HermitianOperator::zero(std::size_t{1} << n)
                                 : AnnealSpec::transverse_field_driver(n);
  QuantumState initial = config.initial_basis
                             ? QuantumState::basis_state(n, *config.initial_basis)
                             : QuantumState::uniform_superposition(n);
  return AnnealSpec(std::move(driver), std::move(problem),
                    config.schedule.with_total_time(total_time), std::move(initial));
}

ErrorModel build_error_model(const ExperimentConfig& config, double error_scale) {
  ErrorModel model = ErrorModel::none(config.n_qubits);
  if (config.error_kind == "static_field_bias") {
    model = ErrorModel::static_field_bias(config.error_axis, config.error_strengths);
  } else if (config.error_kind == "coupling_deviation") {
    model = ErrorModel::coupling_deviation(config.error_deltas, config.n_qubits);
  } else if (config.error_kind == "schedule_perturbation") {
    model = ErrorModel::schedule_perturbation(
        config.error_envelope,
        AnnealSpec::ising_problem(config.n_qubits, config.fields, config.couplings));
  } else if (config.error_kind == "custom") {
    model = ErrorModel::custom(config.error_terms, config.error_envelope, config.n_qubits);
  }
  return error_scale == 1.0 ? model : model.scaled(error_scale);
}

std::vector<SweepPoint> sweep_points(const ExperimentConfig& config) {
  std::vector<SweepPoint> points;
  points.reserve(config.total_times.size() * config.error_scales.size());
  for (double t : config.total_times) {
    for (double s : config.error_scales) points.push_back(SweepPoint{t, s});
  }
  std::sort(points.begin(), points.end(), [](const SweepPoint& a, const SweepPoint& b) {
    return a.total_time != b.total_time ? a.total_time < b.total_time
                                        : a.error_scale < b.error_scale;
  });
  return points;
}

std::string config_echo(const ExperimentConfig& config) {
  json system{{"n_qubits", config.n_qubits},
              {"fields", config.fields},
              {"driver", config.driver}};
  json couplings = json::array();
  for (const auto& c : config.couplings) {
    couplings.push_back({{"i", c.i}, {"j", c.j}, {"strength", c.strength}});
  }
  system["couplings"] = std::move(couplings);
  if (config.initial_basis) {
    system["initial_state"] = *config.initial_basis;
  } else {
    system["initial_state"] = "uniform";
  }

  json schedule{{"kind", config.schedule.kind_name()},
                {"total_time", config.schedule.total_time()}};
  if (config.schedule.kind() == Schedule::Kind::Polynomial) {
    schedule["exponent"] = config.schedule.exponent();
  }
  if (config.schedule.kind() == Schedule::Kind::PiecewiseLinear) {
    json knots = json::array();
    for (const auto& k : config.schedule.knots()) knots.push_back({k.u, k.s});
    schedule["knots"] = std::move(knots);
  }

  json model{{"kind", config.error_kind}};
  if (config.error_kind == "static_field_bias") {
    model["axis"] = axis_name(config.error_axis);
    model["strengths"] = config.error_strengths;
  } else if (config.error_kind == "coupling_deviation") {
    json deltas = json::array();
    for (const auto& d : config.error_deltas) {
      deltas.push_back({{"i", d.i}, {"j", d.j}, {"delta", d.delta}});
    }
    model["deltas"] = std::move(deltas);
  } else if (config.error_kind == "custom" || config.error_kind == "schedule_perturbation") {
    if (config.error_kind == "custom") {
      json terms = json::array();
      for (const auto& t : config.error_terms) {
        terms.push_back({{"coefficient", t.coefficient}, {"word", t.word}});
      }
      model["terms"] = std::move(terms);
    }
    const Envelope& env = config.error_envelope;
    json envelope{{"kind", env.kind_name()}};
    switch (env.kind()) {
      case Envelope::Kind::Constant:
        envelope["value"] = env.start();
        break;
      case Envelope::Kind::Linear:
        envelope["start"] = env.start();
        envelope["end"] = env.end();
        break;
      case Envelope::Kind::SinPi:
        envelope["amplitude"] = env.amplitude();
        break;
      case Envelope::Kind::PiecewiseLinear: {
        json knots = json::array();
        for (const auto& k : env.knots()) knots.push_back({k.u, k.value});
        envelope["knots"] = std::move(knots);
        break;
      }
    }
    model["envelope"] = std::move(envelope);
  }

  json measurement{{"shots", config.shots}, {"seed", config.seed}};
  if (config.target) measurement["target"] = *config.target;
  if (config.epsilon_override) measurement["epsilon_override"] = *config.epsilon_override;

  json output{{"format", output_format_name(config.format)}};
  if (config.directory) output["directory"] = *config.directory;

  json integrator;
  if (config.steps) {
    integrator["steps"] = *config.steps;
  } else {
    integrator["steps"] = "auto";
  }

  const json echo{{"schema_version", config.schema_version},
                  {"system", std::move(system)},
                  {"schedule", std::move(schedule)},
                  {"error_model", std::move(model)},
                  {"integrator", std::move(integrator)},
                  {"quadrature", {{"panels", config.panels}}},
                  {"measurement", std::move(measurement)},
                  {"sweep",
                   {{"total_times", config.total_times}, {"error_scales", config.error_scales}}},
                  {"output", std::move(output)},
                  {"defaults_applied", config.defaults_applied}};
  return echo.dump(2);
}

}  // namespace annealcert
