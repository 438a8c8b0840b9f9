#ifndef MALT_VERSION_HPP
#define MALT_VERSION_HPP

namespace malt {

inline constexpr const char* kToolkitName = "malt";
inline constexpr const char* kToolkitVersion = "1.0.0";

} // namespace malt

#endif
