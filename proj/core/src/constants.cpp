#include "qcs/constants.hpp"

#include <array>

namespace qcs {

std::span<const NamedConstant> bounds_table() {
  static constexpr std::array<NamedConstant, 9> table{
      constants::gamma_2,   constants::gamma_3,           constants::gamma_limit,
      constants::boarder_daykin_3, constants::shallit_c,  constants::variable_window_a,
      constants::phase_b,   constants::nu_2_lower,        constants::ln_2,
  };
  return table;
}

}  // namespace qcs
