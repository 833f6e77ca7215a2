#pragma once

namespace uent {

inline constexpr const char* kVersion = "0.1.0";

// Identifies both the generator and the variate recipes; recorded in run
// records so archived results name the exact random stream they used.
inline constexpr const char* kRngAlgorithm = "mt19937_64+polar-v1";

}  // namespace uent
