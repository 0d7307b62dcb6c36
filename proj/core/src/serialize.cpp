#include "equibound/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace equibound {

namespace {

using json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double scale(Units units) { return units == Units::Bits ? 1.0 / std::numbers::ln2 : 1.0; }

const char* entropy_unit_name(Units units) {
  return units == Units::Bits ? "bits" : "nats";
}

std::string join_flags(const std::vector<std::string>& flags, bool failed) {
  std::string out;
  if (failed) out = "failed";
  for (const auto& f : flags) {
    if (!out.empty()) out += ';';
    out += f;
  }
  return out;
}

bool is_entropy_row(const BoundReport& row) { return row.kind != BoundKind::MPEUpper; }

struct CsvRow {
  std::string name, kind, units, flags;
  double value, std_error;
};

std::vector<CsvRow> collect_rows(const Report& report, Units units) {
  const double s = scale(units);
  const char* eu = entropy_unit_name(units);
  std::vector<CsvRow> rows;
  rows.push_back({"exact_EE", "exact", eu, "", report.equivocation.mean * s,
                  report.equivocation.std_error * s});
  rows.push_back({"exact_MI", "exact", eu, "", report.mi.mean * s,
                  report.mi.std_error * s});
  rows.push_back({"exact_MPE", "exact", "prob", "", report.mpe.mean,
                  report.mpe.std_error});
  for (const auto& row : report.rows) {
    const bool entropy = is_entropy_row(row);
    const double k = entropy ? s : 1.0;
    rows.push_back({row.name, to_string(row.kind), entropy ? eu : "prob",
                    join_flags(row.flags, row.failed),
                    row.failed ? std::nan("") : row.value * k,
                    row.failed ? 0.0 : row.std_error * k});
  }
  return rows;
}

}  // namespace

std::string render_report_csv(const Report& report, Units units) {
  std::ostringstream out;
  out << "bound_name,kind,value,std_error,units,flags\n";
  for (const auto& r : collect_rows(report, units))
    out << r.name << ',' << r.kind << ',' << fmt(r.value) << ',' << fmt(r.std_error)
        << ',' << r.units << ',' << r.flags << '\n';
  return out.str();
}

std::string render_report_json(const Report& report, const RunConfig& config) {
  const double h = report.prior_entropy_nats;
  json doc;
  doc["metadata"] = {{"seed", config.seed},
                     {"samples", config.samples},
                     {"model_digest", model_digest(config)},
                     {"units", config.units == Units::Bits ? "bits" : "nats"},
                     {"prior_entropy_nats", h}};
  const double s = scale(config.units);
  json exact;
  exact["EE"] = {{"value", report.equivocation.mean * s},
                 {"std_error", report.equivocation.std_error * s}};
  exact["MI"] = {{"value", report.mi.mean * s},
                 {"std_error", report.mi.std_error * s}};
  exact["MPE"] = {{"value", report.mpe.mean}, {"std_error", report.mpe.std_error}};
  if (h > 0.0)
    exact["fMI"] = {{"value", report.mi.mean / h},
                    {"std_error", report.mi.std_error / h}};
  else
    exact["fMI"] = {{"flag", "undefined: H(Theta) = 0"}};
  doc["exact"] = std::move(exact);

  json rows = json::array();
  for (const auto& row : report.rows) {
    json r;
    r["bound_name"] = row.name;
    r["kind"] = to_string(row.kind);
    if (row.failed) {
      r["failed"] = true;
    } else {
      const bool entropy = is_entropy_row(row);
      r["value"] = row.value * (entropy ? s : 1.0);
      r["std_error"] = row.std_error * (entropy ? s : 1.0);
      if (entropy && h > 0.0) {
        // EE-lower => fMI upper bound, EE-upper => fMI lower bound.
        r["fmi_bound"] = (h - row.value) / h;
        r["fmi_kind"] = row.kind == BoundKind::EELower ? "MI-upper" : "MI-lower";
      }
    }
    if (!row.flags.empty()) r["flags"] = row.flags;
    rows.push_back(std::move(r));
  }
  doc["bounds"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string render_sweep_csv(const std::vector<SweepPoint>& points, Units units) {
  std::ostringstream out;
  out << "psbr,bound_name,value,std_error\n";
  for (const auto& point : points)
    for (const auto& r : collect_rows(point.report, units))
      out << fmt(point.psbr) << ',' << r.name << ',' << fmt(r.value) << ','
          << fmt(r.std_error) << '\n';
  return out.str();
}

std::string model_digest(const RunConfig& config) {
  RunConfig model_only = config;
  model_only.samples = 0;
  model_only.seed = 0;
  const std::string text = render_config(model_only);
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001B3ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace equibound
