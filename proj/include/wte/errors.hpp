#pragma once

#include <stdexcept>
#include <string>

namespace wte {

/// Base class for all engine errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reciprocal / root of a jet whose constant term sits below the singularity floor.
struct DegenerateValue : Error {
  using Error::Error;
};

/// Elementary function evaluated outside its real domain (sqrt/log/pow of c <= 0).
struct DomainError : Error {
  using Error::Error;
};

/// An operation needed more jet orders than the operand carries.
struct OrderExhausted : Error {
  using Error::Error;
};

/// det g fell below the degeneracy floor at a sample point.
struct DegenerateMetric : Error {
  using Error::Error;
};

/// A field required to be normal had a tangential part above tolerance.
struct NotNormal : Error {
  using Error::Error;
};

/// Sphere-inversion center too close to the shape's ambient image.
struct PoleTooClose : Error {
  using Error::Error;
};

/// First-variation identity requested on a chart with non-vanishing boundary terms.
struct BoundaryTermsPresent : Error {
  using Error::Error;
};

/// CLI / harness usage error (unknown shape, suite, bad parameter).
struct UsageError : Error {
  using Error::Error;
};

}  // namespace wte
