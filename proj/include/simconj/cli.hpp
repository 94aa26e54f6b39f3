#pragma once

// Command-line front end. run_cli is the whole program minus process setup, so
// tests can drive it in-process.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "simconj/family_id.hpp"
#include "simconj/rational_gf.hpp"

namespace simconj {

// Exit codes: 0 every check passed, 1 some check failed, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct TableCheck {
  Family family;
  int p = 0;
  std::size_t order = 0;
  bool a_ok = false;
  bool b_ok = false;
  std::string error;  // construction failure, if any
  std::optional<RationalGF> a_got, b_got, a_want, b_want;

  bool passed() const { return error.empty() && a_ok && b_ok; }
};

// One row per admissible (family, p). Primes must be in {2, 3, 5}.
std::vector<TableCheck> verify_table(const std::vector<int>& primes, std::size_t jobs = 1);

}  // namespace simconj
