#ifndef WALKCOUNT_VERIFY_HPP_
#define WALKCOUNT_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace walkcount {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The acceptance suite: every check is self-contained and deterministic for
// a fixed seed. Returns one result per criterion.
std::vector<CheckResult> run_acceptance(std::uint64_t seed);

}  // namespace walkcount

#endif  // WALKCOUNT_VERIFY_HPP_
