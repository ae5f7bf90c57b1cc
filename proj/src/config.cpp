#include "charfluct/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "charfluct/fluctuation.hpp"

namespace charfluct {

namespace {

std::string trim(const std::string& s) {
  size_t begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  size_t end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream stream(s);
  std::string item;
  while (std::getline(stream, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

Rational ExperimentConfig::parse_ratio(const std::string& s) {
  if (s.find('/') != std::string::npos) return rational_from_string(s);
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(std::stoi(s));
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  int decimals = static_cast<int>(s.size() - dot - 1);
  Rational den = 1;
  for (int i = 0; i < decimals; ++i) den *= 10;
  Rational out = Rational(Int(digits)) / den;
  out.canonicalize();
  return out;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  ExperimentConfig config;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": expected key = value");
    config.apply(trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
  }
  return config;
}

void ExperimentConfig::apply(const std::string& key,
                             const std::string& value) {
  if (key == "model") {
    model = value;
  } else if (key == "p") {
    p = parse_ratio(value);
  } else if (key == "d") {
    tensor_dim = std::stoi(value);
  } else if (key == "base") {
    base = value;
  } else if (key == "base2") {
    base2 = value;
  } else if (key == "preset") {
    preset = value;
  } else if (key == "qs") {
    qs.clear();
    for (const auto& item : split(value, ',')) qs.push_back(std::stoi(item));
  } else if (key == "samples") {
    samples = std::stoi(value);
  } else if (key == "seed") {
    seed = std::stoull(value);
  } else if (key == "observables") {
    observables = split(value, ',');
  } else if (key == "out") {
    out = value;
  } else if (key == "exact_max_q") {
    exact_max_q = std::stoi(value);
  } else if (key == "bootstrap") {
    bootstrap = std::stoi(value);
  } else if (key == "threads") {
    threads = std::stoi(value);
  } else {
    throw std::runtime_error("unknown config key: " + key);
  }
}

nlohmann::json ExperimentConfig::to_json() const {
  nlohmann::json j;
  j["model"] = model;
  j["p"] = fraction_string(p);
  if (tensor_dim) j["d"] = *tensor_dim;
  j["base"] = base;
  j["base2"] = base2;
  j["preset"] = preset;
  j["qs"] = qs;
  j["samples"] = samples;
  j["seed"] = seed;
  j["observables"] = observables;
  j["out"] = out;
  j["exact_max_q"] = exact_max_q;
  j["bootstrap"] = bootstrap;
  j["threads"] = threads;
  return j;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
  ExperimentConfig config;
  config.model = j.at("model").get<std::string>();
  config.p = rational_from_string(j.at("p").get<std::string>());
  if (j.contains("d")) config.tensor_dim = j.at("d").get<int>();
  config.base = j.value("base", config.base);
  config.base2 = j.value("base2", config.base2);
  config.preset = j.value("preset", config.preset);
  config.qs = j.at("qs").get<std::vector<int>>();
  config.samples = j.at("samples").get<int>();
  config.seed = j.at("seed").get<std::uint64_t>();
  config.observables = j.at("observables").get<std::vector<std::string>>();
  config.out = j.value("out", config.out);
  config.exact_max_q = j.value("exact_max_q", config.exact_max_q);
  config.bootstrap = j.value("bootstrap", config.bootstrap);
  config.threads = j.value("threads", config.threads);
  return config;
}

std::string ExperimentConfig::to_key_values() const {
  std::ostringstream out_stream;
  out_stream << "model = " << model << "\n";
  out_stream << "p = " << fraction_string(p) << "\n";
  if (tensor_dim) out_stream << "d = " << *tensor_dim << "\n";
  out_stream << "base = " << base << "\n";
  out_stream << "base2 = " << base2 << "\n";
  out_stream << "preset = " << preset << "\n";
  out_stream << "qs = ";
  for (size_t i = 0; i < qs.size(); ++i)
    out_stream << (i ? "," : "") << qs[i];
  out_stream << "\n";
  out_stream << "samples = " << samples << "\n";
  out_stream << "seed = " << seed << "\n";
  out_stream << "observables = ";
  for (size_t i = 0; i < observables.size(); ++i)
    out_stream << (i ? "," : "") << observables[i];
  out_stream << "\n";
  out_stream << "out = " << out << "\n";
  out_stream << "exact_max_q = " << exact_max_q << "\n";
  out_stream << "bootstrap = " << bootstrap << "\n";
  out_stream << "threads = " << threads << "\n";
  return out_stream.str();
}

RepresentationModel model_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  std::string head = colon == std::string::npos ? spec : spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "plancherel") return plancherel_model();
  if (head == "tensor")
    return tensor_model(arg.empty() ? Rational(1, 2)
                                    : ExperimentConfig::parse_ratio(arg));
  if (head == "irreducible") {
    std::string preset = arg.empty() ? "staircase" : arg;
    if (preset == "staircase")
      return irreducible_model(staircase_diagram, "irreducible:staircase");
    if (preset == "rectangle" || preset == "rectangular")
      return irreducible_model(rectangular_diagram, "irreducible:rectangle");
    throw std::invalid_argument("unknown irreducible preset: " + preset);
  }
  throw std::invalid_argument("unknown model spec: " + spec);
}

RepresentationModel ExperimentConfig::build_model() const {
  if (model == "plancherel") return plancherel_model();
  if (model == "tensor") {
    if (tensor_dim) {
      int d = *tensor_dim;
      if (d < 1) throw std::invalid_argument("tensor dimension must be >= 1");
      return tensor_model_with_dimension([d](int) { return d; },
                                         std::nullopt);
    }
    return tensor_model(p);
  }
  if (model == "irreducible") return model_from_spec("irreducible:" + preset);
  if (model == "restrict") return restrict_model(model_from_spec(base), p);
  if (model == "induce") return induce_model(model_from_spec(base), p);
  if (model == "outer")
    return outer_model(model_from_spec(base), model_from_spec(base2), p);
  if (model == "tensor-product")
    return tensor_product_model(model_from_spec(base), model_from_spec(base2));
  throw std::invalid_argument("unknown model: " + model);
}

void ExperimentConfig::validate() const {
  if (qs.empty()) throw std::invalid_argument("empty q grid");
  for (int q : qs)
    if (q < 1) throw std::invalid_argument("q values must be positive");
  if (samples < 2) throw std::invalid_argument("need at least two samples");
  if (bootstrap < 0) throw std::invalid_argument("negative bootstrap count");
  for (const auto& name : observables) parse_observable(name);
  build_model();
}

}  // namespace charfluct
