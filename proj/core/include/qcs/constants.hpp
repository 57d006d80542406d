#pragma once

#include <span>
#include <string_view>

namespace qcs {

// A reference constant with the provenance of its numeric value. These are
// data: nothing in the library derives them.
struct NamedConstant {
  std::string_view name;
  double value;
  std::string_view citation;
};

namespace constants {
// Drinfeld's constant: best asymptotic ratio A_{n,2}/n for Shapiro's sum.
inline constexpr NamedConstant gamma_2{"gamma_2", 0.98913,
                                       "Drinfeld's constant for Shapiro's cyclic sum (k = 2)"};
inline constexpr NamedConstant gamma_3{"gamma_3", 0.97793,
                                       "upper bound gamma_k on A_{n,k}/n for k = 3"};
inline constexpr NamedConstant gamma_limit{"gamma_inf", 0.930498,
                                           "limit of gamma_k as k -> infinity"};
inline constexpr NamedConstant boarder_daykin_3{
    "boarder_daykin_3", 0.97794, "Boarder-Daykin computation: inf_n A_{n,3}/n <= 0.97794"};
inline constexpr NamedConstant shallit_c{
    "shallit_C", 1.3694514, "Shallit's constant: min g_n = 3n - C + o(1)"};
inline constexpr NamedConstant variable_window_a{
    "A", 1.704656, "A_{n,*} = e ln n - A + O(1/ln n) for variable-window Diananda sums"};
inline constexpr NamedConstant phase_b{
    "b", 0.69739, "phase constant in the oscillatory correction e||b + ln x||^2 / (2 ln x) of F"};
inline constexpr NamedConstant nu_2_lower{
    "nu_2_lower", 0.6180339887498949, "Diananda: nu_2 >= (sqrt(5) - 1) / 2"};
inline constexpr NamedConstant ln_2{
    "diananda_lb_limit", 0.6931471805599453, "lim k (2^{1/k} - 1) = ln 2"};
}  // namespace constants

// All entries, in a fixed order.
std::span<const NamedConstant> bounds_table();

}  // namespace qcs
