#pragma once

#include <string>
#include <vector>

#include "equibound/config.hpp"

namespace equibound {

/// Renders one report as CSV with the fixed column set
/// bound_name,kind,value,std_error,units,flags. The three exact estimates
/// (exact_EE, exact_MI, exact_MPE) come first, bound rows follow in
/// canonical order.
std::string render_report_csv(const Report& report, Units units);

/// JSON mirror of the CSV with a metadata header (seed, samples, model
/// digest) and the fractional-MI rendering of every entropy row.
std::string render_report_json(const Report& report, const RunConfig& config);

/// Long-format sweep CSV: psbr,bound_name,value,std_error. Entropy values
/// are rendered in the requested units.
std::string render_sweep_csv(const std::vector<SweepPoint>& points,
                             Units units);

/// FNV-1a digest of the canonical config rendering, hex encoded.
std::string model_digest(const RunConfig& config);

}  // namespace equibound
