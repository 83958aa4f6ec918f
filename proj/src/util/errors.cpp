#include "util/errors.hpp"

namespace nflux {

void require(bool cond, const std::string& msg) {
  if (!cond) throw InternalError(msg);
}

}  // namespace nflux
