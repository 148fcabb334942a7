#pragma once

#include "zccs/constructions.hpp"

namespace zccs {

/// Rebuilds every sequence of `set` from its provenance by evaluating the
/// defining formulas point by point, without the GBF algebra or the
/// block-assembly helpers used by the generators. Throws ParameterError if
/// the set carries no provenance.
CodeSet oracle_regenerate(const CodeSet& set);

/// Coordinates (code, row, position) where two sets differ; shape mismatches
/// throw std::invalid_argument.
struct Mismatch {
    std::size_t code = 0;
    std::size_t row = 0;
    std::size_t position = 0;
};
std::vector<Mismatch> compare_sets(const CodeSet& a, const CodeSet& b);

}  // namespace zccs
