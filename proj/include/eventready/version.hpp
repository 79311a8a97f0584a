#ifndef EVENTREADY_VERSION_HPP
#define EVENTREADY_VERSION_HPP

namespace eventready {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
