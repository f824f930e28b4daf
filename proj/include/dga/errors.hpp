#pragma once

#include <stdexcept>
#include <string>

namespace dga {

// Malformed input: inconsistent presentation data, parse errors, bad arguments.
class InputError : public std::runtime_error {
  public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A computation would need basis data beyond the presentation's degree cutoff,
// or exceeded a configured resource bound.
class CutoffError : public std::runtime_error {
  public:
    CutoffError(const std::string& what, int degree)
        : std::runtime_error(what), degree_(degree) {}
    int degree() const { return degree_; }

  private:
    int degree_;
};

} // namespace dga
