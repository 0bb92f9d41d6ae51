#pragma once

#include "qobf/circuit.hpp"

#include <string>

namespace qobf {

/// Total Variation Distance between two count histograms with equal shot
/// totals: sum of absolute count differences over the union of keys,
/// divided by 2 * shots. 0 = identical, 1 = disjoint.
double tvd(const Counts& orig, const Counts& obfus);

/// Degree of Functional Corruption: (count of the correct output minus the
/// highest incorrect count) / shots, in [-1, 1]. Lower = stronger
/// obfuscation.
double dfc(const Counts& counts, const std::string& correct_output);

struct MetricReport {
    double tvd;
    double dfc;
    std::string correct_output;
};

} // namespace qobf
