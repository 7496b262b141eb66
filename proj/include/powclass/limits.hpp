#pragma once

#include <cstdint>

namespace powclass {

// Hard guards for the enumeration and canonicalization kernels. The
// identities under test are existence statements; a configuration past these
// bounds fails loudly instead of thrashing.
struct Limits {
  std::uint64_t max_space = 1'000'000;  // maximum |X| = s^m enumerated
  std::uint64_t max_orbit = 100'000;    // maximum explicit orbit size
  std::size_t max_canon_dim = 7;        // m and n bound for lex-min search
};

}  // namespace powclass
