#pragma once

#include <stdexcept>
#include <string>

namespace wdp {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct SingularMatrix : Error {
  explicit SingularMatrix(const std::string& what = "singular matrix") : Error(what) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what = "dimension mismatch") : Error(what) {}
};

struct DomainExceeded : Error {
  explicit DomainExceeded(const std::string& what = "integration bounds outside domain") : Error(what) {}
};

struct NotPseudoEffective : Error {
  explicit NotPseudoEffective(const std::string& what = "class is not pseudo-effective") : Error(what) {}
};

struct IrrationalBreakpoint : Error {
  explicit IrrationalBreakpoint(const std::string& what = "irrational breakpoint") : Error(what) {}
};

struct InvalidRoot : Error {
  explicit InvalidRoot(const std::string& what = "declared root fails R*R=-2 or R*K=0") : Error(what) {}
};

struct UnknownSurface : Error {
  explicit UnknownSurface(const std::string& id) : Error("unknown surface: " + id) {}
};

struct UnknownLabel : Error {
  explicit UnknownLabel(const std::string& label) : Error("unknown curve label: " + label) {}
};

struct NegativePartContainsExtraction : Error {
  explicit NegativePartContainsExtraction(const std::string& what) : Error(what) {}
};

// Raised when a plan's lower and upper bounds disagree; carries both values.
struct PlanMismatch : Error {
  std::string lower, upper;
  PlanMismatch(const std::string& where, std::string lo, std::string hi)
      : Error("plan mismatch at " + where + ": lower " + lo + " != upper " + hi),
        lower(std::move(lo)),
        upper(std::move(hi)) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace wdp
