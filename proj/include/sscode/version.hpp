#ifndef SSCODE_VERSION_HPP
#define SSCODE_VERSION_HPP

namespace sscode {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sscode

#endif
