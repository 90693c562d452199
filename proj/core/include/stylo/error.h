#pragma once

#include <stdexcept>
#include <string>

namespace stylo {

// Base for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable or malformed input: missing files, bad records, duplicate ids,
// unusable lexicons.
class InputError : public Error {
 public:
  using Error::Error;
};

// A statistic or distribution is undefined for the data it was given.
class AnalysisError : public Error {
 public:
  using Error::Error;
};

}  // namespace stylo
