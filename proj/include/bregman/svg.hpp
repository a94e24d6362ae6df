#ifndef BREGMAN_SVG_HPP
#define BREGMAN_SVG_HPP

#include <string>

#include "bregman/record.hpp"

namespace bregman {

/// Self-contained SVG line plot of one record column against the first
/// column (log10-scaled when the record marks it as a boundary-distance
/// parameter). Output is deterministic for a fixed record.
std::string emit_plot(const RunRecord& record, const std::string& column);

}  // namespace bregman

#endif  // BREGMAN_SVG_HPP
