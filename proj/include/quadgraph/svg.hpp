#pragma once

#include <string>
#include <vector>

#include "quadgraph/io.hpp"

namespace quadgraph {

// Hand-emitted SVG renderings of the standard report CSVs.
// All throw std::invalid_argument when the rows do not fit the kind.

// Min/max leaf count per prime, one line pair per family size.
std::string svg_minmax(const std::vector<CensusRow>& rows);

// Natural-log census counts: one polyline per leaf count k across primes.
std::string svg_lognum(const std::vector<CensusRow>& rows);

// Stacked proportion bars per prime, greyscale shading by k.
std::string svg_stacked(const std::vector<CensusRow>& rows);

// Deviation histogram bars with the theoretical overlay curve.
std::string svg_hist(const std::vector<DistRow>& rows);

}  // namespace quadgraph
