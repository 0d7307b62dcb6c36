#include "equibound/config.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace equibound {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::invalid_argument("config: " + path + ": " + what);
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&](const char* a) { return key == a; }) == allowed.end())
      fail(path + "." + key, "unknown key");
  }
}

double get_number(const json& obj, const std::string& path, const char* key,
                  double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number()) fail(path + "." + key, "expected a number");
  return obj[key].get<double>();
}

std::vector<double> get_vector(const json& obj, const std::string& path,
                               const char* key) {
  std::vector<double> out;
  if (!obj.contains(key)) return out;
  if (!obj[key].is_array()) fail(path + "." + key, "expected an array");
  for (const auto& v : obj[key]) {
    if (!v.is_number()) fail(path + "." + key, "expected numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

std::vector<std::vector<double>> get_matrix(const json& obj, const std::string& path,
                                            const char* key) {
  std::vector<std::vector<double>> out;
  if (!obj.contains(key)) return out;
  if (!obj[key].is_array()) fail(path + "." + key, "expected an array of arrays");
  for (const auto& row : obj[key]) {
    if (!row.is_array()) fail(path + "." + key, "expected an array of arrays");
    std::vector<double> r;
    for (const auto& v : row) {
      if (!v.is_number()) fail(path + "." + key, "expected numbers");
      r.push_back(v.get<double>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

FlemConfig parse_flem(const json& obj) {
  check_keys(obj, "model.flem",
             {"psbr", "directions", "signatures", "bands", "imagers",
              "read_noise_var", "bg_mean", "bg_fluctuation_frac", "prior"});
  FlemConfig cfg;
  cfg.psbr = get_number(obj, "model.flem", "psbr", cfg.psbr);
  cfg.directions = static_cast<int>(get_number(obj, "model.flem", "directions", cfg.directions));
  cfg.signatures = static_cast<int>(get_number(obj, "model.flem", "signatures", cfg.signatures));
  cfg.bands = static_cast<int>(get_number(obj, "model.flem", "bands", cfg.bands));
  cfg.imagers = static_cast<int>(get_number(obj, "model.flem", "imagers", cfg.imagers));
  cfg.read_noise_var = get_number(obj, "model.flem", "read_noise_var", cfg.read_noise_var);
  cfg.bg_mean = get_number(obj, "model.flem", "bg_mean", cfg.bg_mean);
  cfg.bg_fluctuation_frac =
      get_number(obj, "model.flem", "bg_fluctuation_frac", cfg.bg_fluctuation_frac);
  cfg.prior = get_vector(obj, "model.flem", "prior");
  try {
    cfg.validate();
  } catch (const std::exception& e) {
    fail("model.flem", e.what());
  }
  return cfg;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("config: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("$", "expected an object");
  check_keys(doc, "$",
             {"model", "samples", "seed", "depth", "lambda", "format", "units", "psbr"});

  RunConfig cfg;
  if (!doc.contains("model") || !doc["model"].is_object())
    fail("model", "required object");
  const json& model = doc["model"];
  check_keys(model, "model", {"flem", "gaussian", "posterior_replay"});
  if (model.size() != 1)
    fail("model", "exactly one of flem / gaussian / posterior_replay required");

  if (model.contains("flem")) {
    cfg.kind = ModelKind::Flem;
    cfg.flem = parse_flem(model["flem"]);
  } else if (model.contains("gaussian")) {
    cfg.kind = ModelKind::Gaussian;
    const json& g = model["gaussian"];
    check_keys(g, "model.gaussian", {"prior", "means", "variance"});
    cfg.gaussian.prior = get_vector(g, "model.gaussian", "prior");
    cfg.gaussian.means = get_matrix(g, "model.gaussian", "means");
    cfg.gaussian.variance = get_number(g, "model.gaussian", "variance", 1.0);
    if (cfg.gaussian.prior.empty())
      cfg.gaussian.prior.assign(cfg.gaussian.means.size(),
                                1.0 / static_cast<double>(cfg.gaussian.means.size()));
    if (cfg.gaussian.means.size() < 2) fail("model.gaussian.means", "need M >= 2");
    if (!(cfg.gaussian.variance > 0.0)) fail("model.gaussian.variance", "must be > 0");
  } else {
    cfg.kind = ModelKind::Replay;
    const json& r = model["posterior_replay"];
    check_keys(r, "model.posterior_replay", {"prior", "posteriors"});
    cfg.replay.prior = get_vector(r, "model.posterior_replay", "prior");
    cfg.replay.posteriors = get_matrix(r, "model.posterior_replay", "posteriors");
    if (cfg.replay.posteriors.empty())
      fail("model.posterior_replay.posteriors", "required");
    if (cfg.replay.prior.empty())
      cfg.replay.prior.assign(cfg.replay.posteriors.front().size(),
                              1.0 / static_cast<double>(cfg.replay.posteriors.front().size()));
  }

  const double samples = get_number(doc, "$", "samples", 100000.0);
  if (samples < 1.0) fail("samples", "must be >= 1");
  cfg.samples = static_cast<std::size_t>(samples);
  cfg.seed = static_cast<std::uint64_t>(get_number(doc, "$", "seed", 0.0));
  cfg.depth = static_cast<int>(get_number(doc, "$", "depth", 0.0));
  if (cfg.depth < 0) fail("depth", "must be >= 0");
  cfg.lambda = get_number(doc, "$", "lambda", 2.0);
  if (!(cfg.lambda > 1.0)) fail("lambda", "must be > 1");

  if (doc.contains("format")) {
    const std::string f = doc["format"].is_string() ? doc["format"].get<std::string>() : "";
    if (f == "csv") cfg.format = OutputFormat::Csv;
    else if (f == "json") cfg.format = OutputFormat::Json;
    else fail("format", "expected \"csv\" or \"json\"");
  }
  if (doc.contains("units")) {
    const std::string u = doc["units"].is_string() ? doc["units"].get<std::string>() : "";
    if (u == "bits") cfg.units = Units::Bits;
    else if (u == "nats") cfg.units = Units::Nats;
    else fail("units", "expected \"bits\" or \"nats\"");
  }
  cfg.psbr = get_vector(doc, "$", "psbr");
  return cfg;
}

std::string render_config(const RunConfig& cfg) {
  json doc;
  json model;
  switch (cfg.kind) {
    case ModelKind::Flem: {
      json f;
      f["psbr"] = cfg.flem.psbr;
      f["directions"] = cfg.flem.directions;
      f["signatures"] = cfg.flem.signatures;
      f["bands"] = cfg.flem.bands;
      f["imagers"] = cfg.flem.imagers;
      f["read_noise_var"] = cfg.flem.read_noise_var;
      f["bg_mean"] = cfg.flem.bg_mean;
      f["bg_fluctuation_frac"] = cfg.flem.bg_fluctuation_frac;
      if (!cfg.flem.prior.empty()) f["prior"] = cfg.flem.prior;
      model["flem"] = std::move(f);
      break;
    }
    case ModelKind::Gaussian: {
      json g;
      g["prior"] = cfg.gaussian.prior;
      g["means"] = cfg.gaussian.means;
      g["variance"] = cfg.gaussian.variance;
      model["gaussian"] = std::move(g);
      break;
    }
    case ModelKind::Replay: {
      json r;
      r["prior"] = cfg.replay.prior;
      r["posteriors"] = cfg.replay.posteriors;
      model["posterior_replay"] = std::move(r);
      break;
    }
  }
  doc["model"] = std::move(model);
  doc["samples"] = cfg.samples;
  doc["seed"] = cfg.seed;
  doc["depth"] = cfg.depth;
  doc["lambda"] = cfg.lambda;
  doc["format"] = cfg.format == OutputFormat::Csv ? "csv" : "json";
  doc["units"] = cfg.units == Units::Bits ? "bits" : "nats";
  if (!cfg.psbr.empty()) doc["psbr"] = cfg.psbr;
  return doc.dump(2);
}

SampleBatch make_batch(const RunConfig& cfg) {
  switch (cfg.kind) {
    case ModelKind::Flem:
      return sample_joint(build_model(cfg.flem), cfg.samples, cfg.seed);
    case ModelKind::Gaussian: {
      HypothesisModel model;
      model.prior = Prior{cfg.gaussian.prior};
      model.channel =
          std::make_shared<GaussianChannel>(cfg.gaussian.means, cfg.gaussian.variance);
      model.validate();
      return sample_joint(model, cfg.samples, cfg.seed);
    }
    case ModelKind::Replay:
      return SampleBatch::replay(Prior{cfg.replay.prior}, cfg.replay.posteriors,
                                 cfg.samples);
  }
  throw std::logic_error("make_batch: unreachable");
}

ReportConfig report_config(const RunConfig& cfg, int M) {
  ReportConfig rc;
  rc.depth = cfg.depth > 0 ? std::min(cfg.depth, M - 1) : std::min(M - 1, 8);
  rc.lambda = cfg.lambda;
  return rc;
}

}  // namespace equibound
