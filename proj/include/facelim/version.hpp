#ifndef FACELIM_VERSION_HPP
#define FACELIM_VERSION_HPP

namespace facelim {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
