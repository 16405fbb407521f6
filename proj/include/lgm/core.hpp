#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace lgm {

using Cx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

inline constexpr Cx kI{0.0, 1.0};

namespace tol {
inline constexpr double kAlgebraic = 1e-10;
inline constexpr double kFlow = 1e-6;
inline constexpr double kTransversality = 1e-8;
inline constexpr double kKernelCutoff = 1e-9;
inline constexpr double kConvergence = 1e-9;
inline constexpr double kMembership = 1e-8;
inline constexpr double kSamplingTransversality = 1e-6;
inline constexpr double kGraphMembership = 1e-6;
inline constexpr double kIntersection = 1e-8;
inline constexpr double kIntegrity = 1e-5;
}  // namespace tol

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ShapeError : Error { using Error::Error; };
struct TransversalityError : Error { using Error::Error; };
struct MembershipError : Error { using Error::Error; };
struct UnsupportedOrbitError : Error { using Error::Error; };
struct NotASingularityError : Error { using Error::Error; };
struct StepSizeError : Error { using Error::Error; };
struct TangencyError : Error { using Error::Error; };
struct ParityError : Error { using Error::Error; };
struct LevelRangeError : Error { using Error::Error; };
struct SamplingError : Error { using Error::Error; };
struct IntegrityError : Error { using Error::Error; };
struct ConditioningError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

}  // namespace lgm
