#pragma once

#include <stdexcept>
#include <string>

namespace turanlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construction or expression violates its parameter constraints.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

// Input exceeds a hard size limit (vertex count, enumeration order, ...).
class SizeCap : public Error {
 public:
  using Error::Error;
};

class MalformedEncoding : public Error {
 public:
  using Error::Error;
};

// Exact arithmetic left the representable range.
class Overflow : public Error {
 public:
  using Error::Error;
};

// An internal cross-check failed, e.g. embeddings not divisible by |Aut(H)|.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

// A verification routine was called outside its hypotheses.
class InvalidParams : public Error {
 public:
  using Error::Error;
};

}  // namespace turanlab
