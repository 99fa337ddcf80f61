#pragma once

#include <stdexcept>
#include <string>

namespace amrkit {

// Base for every data-level failure raised by the library. The CLI maps
// anything deriving from Error to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedPenman : public Error {
 public:
  using Error::Error;
};

class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class InvalidLinearization : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class CountMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroProbability : public Error {
 public:
  using Error::Error;
};

class SupportMismatch : public Error {
 public:
  using Error::Error;
};

class AdapterError : public Error {
 public:
  using Error::Error;
};

// Malformed JSONL records, model files, and similar on-disk formats.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace amrkit
