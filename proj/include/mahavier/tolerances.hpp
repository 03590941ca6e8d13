#pragma once

#include <cmath>

/// Acceptance tolerances, shared by the regression suite, the CLI and the tests.
namespace mahavier::tol {

inline constexpr double kTransferRel = 1e-9;         // exact spectral entropies, relative
inline constexpr double kLawAbs = 1e-9;              // k-power and inverse laws
inline constexpr double kInverseTransferAbs = 1e-12;  // ent(G) vs ent(G^-1) on finite relations
inline constexpr double kMariborSlope = 0.03;        // slope vs ln phi
inline constexpr double kBridgeSlope = 0.05;         // tent-inverse, kt-diamond vs ln 2
inline constexpr double kLinesSlope = 0.02;          // k horizontal lines vs ln k
inline constexpr double kTriangleFeketeMax = 0.08;   // triangle, n = 4, m = 200
inline constexpr double kZeroFeketeMax = 0.10;       // zero-entropy continua at m = 100
inline constexpr double kGrowthSlack = 0.05;         // subtracted from the per-doubling growth floors
inline constexpr double kDimension = 0.05;           // box dimension
inline constexpr double kAgreement = 0.02;           // limit vs transfer on finite relations
inline constexpr double kDimResidualCap = 0.1;

inline double square_growth_floor() { return std::log(2.0) - kGrowthSlack; }
inline double ingram_growth_floor() { return 0.5 * std::log(2.0) - kGrowthSlack; }
inline double golden_log() { return std::log((1 + std::sqrt(5.0)) / 2); }

}  // namespace mahavier::tol
