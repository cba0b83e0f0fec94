#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quadgraph/census.hpp"
#include "quadgraph/cover.hpp"
#include "quadgraph/dist.hpp"

namespace quadgraph {

// Reals are printed with 12 significant digits everywhere.
std::string format_real(double v);
// Percentages with two decimals.
std::string format_percent(double v);

// --- census schema: p,n,k,count,total,method,bucket ------------------------

struct CensusRow {
    uint64_t p = 0;
    uint64_t n = 0;
    bool is_bucket = false;           // k column printed as ">=T"
    uint64_t k = 0;
    uint64_t count = 0;
    uint64_t total = 0;
    std::string method;
    std::optional<uint64_t> bucket;   // empty column when unset

    bool operator==(const CensusRow&) const = default;
};

std::vector<CensusRow> census_rows(const LeafHistogram& H);
std::string emit_census_csv(const std::vector<CensusRow>& rows, bool header = true);
std::vector<CensusRow> parse_census_csv(const std::string& text);
nlohmann::json census_json(const LeafHistogram& H);

// --- cover schema: p,n,shifts,leafless,log2_ceiling ------------------------

struct CoverRow {
    uint64_t p = 0;
    uint64_t n = 0;
    std::vector<uint64_t> shifts;     // semicolon-joined in CSV
    bool leafless = false;
    uint64_t log2_ceil = 0;

    bool operator==(const CoverRow&) const = default;
};

CoverRow cover_row(const CoverReport& report);
std::string emit_cover_csv(const std::vector<CoverRow>& rows, bool header = true,
                           const std::vector<std::string>& extra_columns = {},
                           const std::vector<std::vector<std::string>>& extra_cells = {});
std::vector<CoverRow> parse_cover_csv(const std::string& text);
nlohmann::json cover_json(const CoverReport& report);

// --- dist schema: p,bin_lo,bin_hi,empirical,theoretical,mode,seed,samples --

struct DistRow {
    uint64_t p = 0;
    double bin_lo = 0;
    double bin_hi = 0;
    double empirical = 0;
    double theoretical = 0;
    std::string mode;
    uint64_t seed = 0;
    uint64_t samples = 0;

    bool operator==(const DistRow&) const = default;
};

std::vector<DistRow> dist_rows(const DeltaHistogram& H);
std::string emit_dist_csv(const std::vector<DistRow>& rows, bool header = true);
std::vector<DistRow> parse_dist_csv(const std::string& text);
nlohmann::json dist_json(const DeltaHistogram& H);

}  // namespace quadgraph
