// Exception taxonomy for the tpns library. Each type maps onto one public
// status code so the C boundary can translate failures without string parsing.
#pragma once

#include <stdexcept>
#include <string>

namespace tpns {

/// Invalid parameters, malformed configuration input, or out-of-contract use.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// NaN/Inf encountered, nonconvergence, or another numerical abort.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Filesystem failure while writing or reading artifacts.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace tpns
