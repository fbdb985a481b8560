#include "oscwalk/io.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace oscwalk {

using nlohmann::json;

json to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition_from_json: expected an array");
  return Partition(j.get<std::vector<int>>());
}

json to_json(const OscillatingTableau& t) {
  json arr = json::array();
  for (const auto& p : t.steps) arr.push_back(to_json(p));
  return arr;
}

OscillatingTableau tableau_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("tableau_from_json: expected an array");
  OscillatingTableau t;
  for (const auto& item : j) t.steps.push_back(partition_from_json(item));
  return t;
}

json to_json(const WalkPath& path) { return json(path.heights); }

json to_json(const DistributionSlice& slice) {
  json probs = json::object();
  for (const auto& [y, p] : slice.probs) probs[std::to_string(y)] = to_fraction_string(p);
  return json{{"x", slice.x}, {"probs", std::move(probs)}};
}

json to_json(const Histogram& h) {
  return json{{"edges", h.edges},
              {"counts", h.counts},
              {"underflow", h.underflow},
              {"overflow", h.overflow}};
}

json to_json(const ObservableEstimate& est) {
  return json{{"observable", est.spec.name()},
              {"mean", est.mean},
              {"variance", est.variance},
              {"mean_stderr", est.mean_stderr},
              {"variance_stderr", est.variance_stderr},
              {"histogram", to_json(est.histogram)}};
}

json to_json(const EstimateReport& report) {
  json obs = json::array();
  for (const auto& est : report.estimates) obs.push_back(to_json(est));
  return json{{"n", report.campaign.cfg.n},
              {"y0", report.campaign.cfg.y0},
              {"samples", report.campaign.samples},
              {"seed", report.campaign.seed},
              {"bins", report.campaign.bins},
              {"estimates", std::move(obs)}};
}

void write_report_csv(std::ostream& os, const EstimateReport& report) {
  os << "observable,mean,variance,mean_stderr,variance_stderr\n";
  for (const auto& est : report.estimates) {
    os << est.spec.name() << ',' << est.mean << ',' << est.variance << ',' << est.mean_stderr
       << ',' << est.variance_stderr << '\n';
  }
  for (const auto& est : report.estimates) {
    os << "\nhistogram," << est.spec.name() << "\nbin_left,bin_right,count\n";
    for (std::size_t b = 0; b + 1 < est.histogram.edges.size(); ++b)
      os << est.histogram.edges[b] << ',' << est.histogram.edges[b + 1] << ','
         << est.histogram.counts[b] << '\n';
  }
}

void write_moment_table_csv(std::ostream& os, const MomentTable& table) {
  const bool closed_forms = table.n() >= 4;
  os << "x,order,value" << (closed_forms ? ",closed_form\n" : "\n");
  for (int x = 0; x <= table.n(); ++x) {
    for (int order = 1; order <= table.max_order(); ++order) {
      os << x << ',' << order << ',' << to_fraction_string(table(x, order));
      if (closed_forms) {
        os << ',';
        if (order == 1)
          os << to_fraction_string(closed_form_mean(table.n(), table.y0(), x));
        else if (order == 2)
          os << to_fraction_string(closed_form_second_moment(table.n(), table.y0(), x));
      }
      os << '\n';
    }
  }
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    std::size_t used = 0;
    const int value = std::stoi(token, &used);
    if (used != token.size())
      throw std::invalid_argument("parse_partition: bad part '" + token + "'");
    parts.push_back(value);
  }
  return Partition(std::move(parts));
}

Campaign parse_campaign_config(std::istream& is) {
  Campaign campaign;
  campaign.cfg.n = 0;  // force explicit n
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto fail = [&](const std::string& why) {
      return std::invalid_argument("campaign config line " + std::to_string(lineno) + ": " + why);
    };
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw fail("expected key = value");
    const auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "n" || key == "y0" || key == "samples" || key == "seed" || key == "bins") {
      long long parsed = 0;
      try {
        parsed = std::stoll(value);
      } catch (const std::exception&) {
        throw fail("bad numeric value '" + value + "' for key '" + key + "'");
      }
      if (key == "n")
        campaign.cfg.n = static_cast<int>(parsed);
      else if (key == "y0")
        campaign.cfg.y0 = static_cast<int>(parsed);
      else if (key == "samples")
        campaign.samples = static_cast<long>(parsed);
      else if (key == "seed")
        campaign.seed = static_cast<std::uint64_t>(parsed);
      else
        campaign.bins = static_cast<int>(parsed);
    } else if (key == "observables") {
      std::istringstream items(value);
      std::string item;
      while (std::getline(items, item, ',')) {
        const std::string spec = trim(item);
        if (spec.empty()) continue;
        try {
          campaign.observables.push_back(ObservableSpec::parse(spec));
        } catch (const std::invalid_argument& e) {
          throw fail(e.what());
        }
      }
    } else {
      throw fail("unknown key '" + key + "'");
    }
  }
  if (campaign.cfg.n <= 0) throw std::invalid_argument("campaign config: missing or bad n");
  if (campaign.observables.empty())
    throw std::invalid_argument("campaign config: no observables");
  return campaign;
}

}  // namespace oscwalk
