#pragma once

#include <stdexcept>
#include <string>

namespace qobf {

/// Thrown on precondition violations (bad operands, malformed keys, ...).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qobf
