#pragma once

#include <stdexcept>
#include <string>

namespace theta {

/// A checkpoint or data file failed validation. `field` names the offending
/// part of the payload.
class IntegrityError : public std::runtime_error {
 public:
  IntegrityError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace theta
