#pragma once

// Reference values for the built-in 2×2 instance A = ½[[1,1],[1,1]],
// B = [[¾,−¼],[−¼,¼]] under diagonal pinching. The k*Rounded pair is the
// four-decimal headline; the rest were computed independently in double
// precision with numpy/scipy (logm/sqrtm routes).

namespace frozen {

inline constexpr double kRoundedRhs = 1.5191;
inline constexpr double kRoundedLhs = 1.5349;

inline constexpr double kRelativeEntropy = 1.6629460109801482;
inline constexpr double kImageRelativeEntropy = 0.1438410362258905;
inline constexpr double kRed = 1.5191049747542578;
inline constexpr double kPetzLoss = 1.5348769569062402;
inline constexpr double kPetzFidelity = 0.46420060656528167;

// Δ̃_t on the same instance.
inline constexpr double kDeltaTilde09 = 1.519117784;
inline constexpr double kDeltaTilde099 = 1.519080027;
inline constexpr double kDeltaTilde0999 = 1.519102266;

// Pinching witness at θ = 3/4: unpinched F_θ and the pinched 2^{−3/4}.
inline constexpr double kPinchingWitnessUnpinched = 0.6223017969;

}  // namespace frozen
