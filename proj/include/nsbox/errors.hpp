#pragma once

#include <stdexcept>
#include <string>

namespace nsbox {

/// Input fails a documented precondition (invalid box, bad parameters).
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Problem size exceeds a configured cap (e.g. deterministic-box budget).
class CapacityError : public std::runtime_error {
public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace nsbox
