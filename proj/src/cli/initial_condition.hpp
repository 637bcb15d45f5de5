#pragma once

#include "mitosis/eigenbasis.hpp"
#include "mitosis/grid.hpp"

#include <functional>
#include <string>
#include <string_view>

namespace mitosis::cli {

/// Builds u0 on the grid from a spec string:
///   f<m>                    raw primal eigenfunction f_m
///   gaussian(center,width)  unit-mass normal density
///   indicator(lo,hi)        1 on [lo, hi]
///   mode-mix(c0,c1,...)     sum_m c_m f_m
///   anything else           path to a two-column x,u CSV, linearly interpolated
/// Node 0 is set to zero for the built-in profiles (zero-flux boundary).
/// Negative values are reported through `warn` but accepted.
[[nodiscard]] GridFunction make_initial_condition(const std::string& spec, const Grid& grid, const ModelParams& p,
                                                  double tol, const std::function<void(std::string_view)>& warn);

}  // namespace mitosis::cli
