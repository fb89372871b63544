#pragma once

namespace topogen {

inline constexpr char kToolVersion[] = "1.0.0";
inline constexpr char kEdgeListFormat[] = "edgelist/1";
inline constexpr char kRngFamily[] = "mt19937_64";

}  // namespace topogen
