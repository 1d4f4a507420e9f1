#ifndef BMW_ERRORS_HPP
#define BMW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bmw {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct StrandMismatch : Error {
  explicit StrandMismatch(const std::string& w) : Error("strand mismatch: " + w) {}
};
struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& w) : Error("shape mismatch: " + w) {}
};
struct CellOutsideDiagram : Error {
  explicit CellOutsideDiagram(const std::string& w) : Error("cell outside diagram: " + w) {}
};
struct PoleAtSpecialization : Error {
  explicit PoleAtSpecialization(const std::string& w) : Error("pole at specialization: " + w) {}
};
struct HalfPowerSign : Error {
  explicit HalfPowerSign(const std::string& w) : Error("half-power sign ambiguity: " + w) {}
};
struct ZeroQuantumDimension : Error {
  explicit ZeroQuantumDimension(const std::string& w) : Error("zero quantum dimension: " + w) {}
};
struct NonInvertibleQuantumInteger : Error {
  explicit NonInvertibleQuantumInteger(const std::string& w)
      : Error("non-invertible quantum integer: " + w) {}
};
struct NormalizationVanishes : Error {
  explicit NormalizationVanishes(const std::string& w) : Error("normalization vanishes: " + w) {}
};
struct MissingCertificate : Error {
  explicit MissingCertificate(const std::string& w) : Error("missing certificate: " + w) {}
};
struct FeasibilityViolated : Error {
  explicit FeasibilityViolated(const std::string& w) : Error("feasibility violated: " + w) {}
};
struct SizeBound : Error {
  explicit SizeBound(const std::string& w) : Error("size bound exceeded: " + w) {}
};
struct RowBound : Error {
  explicit RowBound(const std::string& w) : Error("row bound exceeded: " + w) {}
};
struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& w) : Error("division by zero: " + w) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error("parse error: " + w) {}
};

}  // namespace bmw

#endif
