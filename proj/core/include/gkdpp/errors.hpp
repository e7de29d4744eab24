#ifndef GKDPP_ERRORS_HPP
#define GKDPP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gkdpp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument within the pole guard radius of a gamma/digamma pole.
class PoleArgument : public Error {
 public:
  using Error::Error;
};

// Parameter pair rejected by the admissibility classification.
class NotAdmissible : public Error {
 public:
  using Error::Error;
};

// A real-valued quantity came out with |Im| above the residue guard;
// signals an evaluation defect, not a user error.
class ImaginaryResidue : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NonConvergent : public Error {
 public:
  using Error::Error;
};

class SpectrumOutOfRange : public Error {
 public:
  using Error::Error;
};

class DuplicatePoint : public Error {
 public:
  using Error::Error;
};

class SubsetViolation : public Error {
 public:
  using Error::Error;
};

class WindowTooLarge : public Error {
 public:
  using Error::Error;
};

class ZeroDensityAtP : public Error {
 public:
  using Error::Error;
};

class FullDensityAtP : public Error {
 public:
  using Error::Error;
};

class EvaluatedAtP : public Error {
 public:
  using Error::Error;
};

class SingularResolvent : public Error {
 public:
  using Error::Error;
};

class NonPositiveWeight : public Error {
 public:
  using Error::Error;
};

}  // namespace gkdpp

#endif  // GKDPP_ERRORS_HPP
