#include "micpovm/tolerances.hpp"

#include <cstdlib>
#include <string>

#include "micpovm/error.hpp"

namespace micpovm {

Tolerances Tolerances::profile(std::string_view name) {
  Tolerances t;
  if (name.empty() || name == "default") return t;
  if (name == "strict") {
    t.verify = 1e-10;
    t.distribution_sum = 1e-10;
    t.state = 1e-12;
    return t;
  }
  if (name == "loose") {
    t.verify = 1e-6;
    t.distribution_sum = 1e-6;
    t.state = 1e-8;
    t.hermitian_symmetrize = 1e-6;
    return t;
  }
  throw Error(ErrorKind::MalformedInput,
              "unknown tolerance profile '" + std::string(name) + "'");
}

Tolerances Tolerances::from_environment() {
  const char* env = std::getenv("MICPOVM_TOLERANCE_PROFILE");
  return profile(env ? std::string_view(env) : std::string_view());
}

}  // namespace micpovm
