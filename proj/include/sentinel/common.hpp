#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sentinel {

using Complex = std::complex<double>;
using CpxVec = Eigen::VectorXcd;  // contiguous complex baseband samples
using RealVec = Eigen::VectorXd;

// Preamble index does not fit into the single-root shift budget.
class IndexExhaustedError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Received buffer does not match the expected burst layout.
class MalformedInputError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class InvalidConfigError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Dataset / model deserialization failure. The kind distinguishes a wrong
// magic, an unsupported format version, a short tensor/weight block and a
// broken metadata document.
class LoadError : public std::runtime_error {
 public:
  enum class Kind { kBadMagic, kBadVersion, kTruncated, kBadMeta, kIo };

  LoadError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class DivergedError : public std::runtime_error {
 public:
  DivergedError(int epoch, const std::string& what)
      : std::runtime_error(what), epoch_(epoch) {}
  int epoch() const { return epoch_; }

 private:
  int epoch_;
};

}  // namespace sentinel
