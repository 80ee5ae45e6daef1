#pragma once

#include <stdexcept>
#include <string>

namespace vdw {

// Input outside the domain of a formula (bad gas, angle, radius, ...).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Density ratio outside the open interval allowed by the jump conditions.
class AdmissibilityError : public DomainError {
public:
  explicit AdmissibilityError(const std::string& what) : DomainError(what) {}
};

// Incidence angle below the critical angle: no regular reflection.
class DetachmentError : public DomainError {
public:
  explicit DetachmentError(const std::string& what) : DomainError(what) {}
};

// Evaluation at a point where the closed form diverges.
class SingularityError : public DomainError {
public:
  explicit SingularityError(const std::string& what) : DomainError(what) {}
};

// Point does not belong to the region a formula is defined on.
class RegionError : public DomainError {
public:
  explicit RegionError(const std::string& what) : DomainError(what) {}
};

// Front kind (rarefaction/shock) does not match the requested operation.
class ClassificationError : public DomainError {
public:
  explicit ClassificationError(const std::string& what) : DomainError(what) {}
};

// Two independent numerical routes disagree beyond tolerance.
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// A relation that must hold by construction was violated.
class InconsistencyError : public std::runtime_error {
public:
  explicit InconsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vdw
