#pragma once

// Tolerances and resource caps shared across the library. These are part of
// the tested contract, not tuning knobs: structural validation at 1e-10,
// cross-module equivalence at 1e-9, exact-cancellation identities at 1e-12.

namespace hyperbits {

inline constexpr double kStructuralTol = 1e-10;  // constructor-level validation
inline constexpr double kCrossTol = 1e-9;        // cross-module equivalence checks
inline constexpr double kRoundTripTol = 1e-8;    // multi-stage conversion chains
inline constexpr double kTightTol = 1e-12;       // identities with exact cancellation
inline constexpr double kRankCutoff = 1e-12;     // eigenvalue cutoff for purification rank
inline constexpr double kDegenerateQueryTol = 1e-6;  // one-sided query probability guard
inline constexpr double kMcSigmas = 4.0;         // Monte-Carlo agreement band

inline constexpr int kMaxGammaGenerators = 12;   // anticommuting-family size cap
inline constexpr int kMaxHadamardN = 10;         // Sylvester recursion cap
inline constexpr long kMaxTotalDim = 4096;       // largest Hilbert-space dimension

}  // namespace hyperbits
