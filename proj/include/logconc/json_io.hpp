#pragma once

#include <string>

#include <json.hpp>

#include "logconc/bounds.hpp"
#include "logconc/extremal.hpp"
#include "logconc/geometry.hpp"
#include "logconc/prob.hpp"
#include "logconc/profiles.hpp"

namespace logconc::io {

using ordered_json = nlohmann::ordered_json;

/// Rounds through 12 significant digits for reproducible output.
double round12(double v);

ordered_json profile_to_json(const profiles::DecreasingProfile& f);
/// Throws std::invalid_argument with a diagnostic on malformed input.
profiles::DecreasingProfile profile_from_json(const ordered_json& j);
profiles::DecreasingProfile profile_from_string(const std::string& text);

ordered_json report_to_json(const bounds::BoundReport& r);
ordered_json slab_report_to_json(const std::string& body,
                                 const geometry::SlabSandwichReport& r, int n);
ordered_json isotropic_report_to_json(const geometry::IsotropicReport& r);
ordered_json floating_to_json(const geometry::FloatingRadii& r, double L, int n,
                              double delta);
ordered_json median_to_json(const prob::MedianSandwich& m, double l2, double mean);
ordered_json jensen_to_json(const prob::JensenReport& r);
ordered_json anticoncentration_to_json(const prob::AnticoncentrationReport& r);

std::string sweep_to_csv(const extremal::SweepResult& s);
ordered_json sweep_summary_to_json(const extremal::SweepResult& s);

}  // namespace logconc::io
