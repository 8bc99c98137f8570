#include "hankel_fh/mp.hpp"

#include <vector>

namespace hankel_fh::mp {

std::string Real::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return std::string(buf.data());
}

}  // namespace hankel_fh::mp
