#include "homcover/limits.hpp"

#include <cstdlib>
#include <string>

#include "homcover/error.hpp"

namespace homcover {

Limits Limits::from_environment() {
  Limits limits;
  if (const char* value = std::getenv("HOMCOVER_MAX_CLOSURE"); value && *value) {
    try {
      std::size_t used = 0;
      unsigned long long parsed = std::stoull(value, &used);
      if (used != std::string(value).size() || parsed == 0) throw std::invalid_argument("bad");
      limits.max_closure = parsed;
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidSpec,
                  std::string("HOMCOVER_MAX_CLOSURE must be a positive integer, got '") + value + "'");
    }
  }
  return limits;
}

}  // namespace homcover
