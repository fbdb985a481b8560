#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>

#include "oscwalk/exact_moments.hpp"
#include "oscwalk/partition.hpp"
#include "oscwalk/stats.hpp"
#include "oscwalk/tableau.hpp"
#include "oscwalk/walk.hpp"

namespace oscwalk {

// Partitions are JSON arrays of parts, e.g. [2,1]; the empty shape is [].
nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

// Tableaux are JSON arrays of partitions.
nlohmann::json to_json(const OscillatingTableau& t);
OscillatingTableau tableau_from_json(const nlohmann::json& j);

// Paths are JSON integer arrays.
nlohmann::json to_json(const WalkPath& path);

// Slices are {"x": X, "probs": {"Y": "num/den"}} with exact strings.
nlohmann::json to_json(const DistributionSlice& slice);

nlohmann::json to_json(const Histogram& h);
nlohmann::json to_json(const ObservableEstimate& est);
nlohmann::json to_json(const EstimateReport& report);

// CSV (bin_left, bin_right, count) rows per histogram; one estimate block
// per observable.
void write_report_csv(std::ostream& os, const EstimateReport& report);

// CSV with exact "num/den" strings: columns x, order, value and, when a
// closed form exists (order <= 2, n >= 4), the closed-form comparison column.
void write_moment_table_csv(std::ostream& os, const MomentTable& table);

// Comma-separated part list; empty string is the empty shape.
Partition parse_partition(const std::string& text);

// Flat key=value campaign description: keys n, y0, samples, seed,
// observables (comma-separated specs), bins. '#' starts a comment line.
Campaign parse_campaign_config(std::istream& is);

}  // namespace oscwalk
