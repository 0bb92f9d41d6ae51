#include "qobf/metrics.hpp"

#include "qobf/error.hpp"

#include <set>

namespace qobf {

namespace {

std::size_t key_length(const Counts& counts) {
    return counts.entries.empty() ? 0 : counts.entries.begin()->first.size();
}

std::uint64_t count_of(const Counts& counts, const std::string& key) {
    const auto it = counts.entries.find(key);
    return it == counts.entries.end() ? 0 : it->second;
}

} // namespace

double tvd(const Counts& orig, const Counts& obfus) {
    if (orig.shots != obfus.shots) throw Error("tvd: shot counts differ");
    if (orig.shots == 0) throw Error("tvd: empty histograms");
    if (!orig.entries.empty() && !obfus.entries.empty() &&
        key_length(orig) != key_length(obfus))
        throw Error("tvd: bitstring lengths differ");

    std::set<std::string> keys;
    for (const auto& [k, v] : orig.entries) keys.insert(k);
    for (const auto& [k, v] : obfus.entries) keys.insert(k);

    double sum = 0.0;
    for (const auto& k : keys) {
        const auto a = count_of(orig, k);
        const auto b = count_of(obfus, k);
        sum += static_cast<double>(a > b ? a - b : b - a);
    }
    return sum / (2.0 * static_cast<double>(orig.shots));
}

double dfc(const Counts& counts, const std::string& correct_output) {
    if (counts.shots == 0 || counts.entries.empty())
        throw Error("dfc: empty histogram");
    if (key_length(counts) != correct_output.size())
        throw Error("dfc: correct-output length mismatch");

    const std::uint64_t correct = count_of(counts, correct_output);
    std::uint64_t highest_incorrect = 0;
    for (const auto& [k, v] : counts.entries) {
        if (k != correct_output && v > highest_incorrect) highest_incorrect = v;
    }
    return (static_cast<double>(correct) - static_cast<double>(highest_incorrect)) /
           static_cast<double>(counts.shots);
}

} // namespace qobf
