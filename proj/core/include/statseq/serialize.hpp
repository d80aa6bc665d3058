#pragma once

#include <iosfwd>

#include <nlohmann/json.hpp>

#include "statseq/convergence.hpp"
#include "statseq/density.hpp"
#include "statseq/fuzzy_limit.hpp"
#include "statseq/index_set.hpp"
#include "statseq/stats.hpp"
#include "statseq/theorem_checks.hpp"

namespace statseq {

nlohmann::json to_json(const IndexSet& k);
nlohmann::json to_json(const DensityEstimate& d);
nlohmann::json to_json(const ConvergenceVerdict& v);
nlohmann::json to_json(const FuzzyLimitProfile& p);
nlohmann::json to_json(const RLimitSetEstimate& e);
nlohmann::json to_json(const TheoremCheckReport& r);
nlohmann::json to_json(const ExtractionResult& e);

// Two columns: candidate a, membership.
void write_profile_tsv(const FuzzyLimitProfile& p, std::ostream& os);

// Three columns: n, mean, std.
void write_stats_tsv(const StatsSeries& s, std::ostream& os);

}  // namespace statseq
