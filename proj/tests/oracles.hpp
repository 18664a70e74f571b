// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/math/special_functions/expint.hpp>

namespace ncic::test {

// Independent route to the exponential integral, used to cross-check the
// library's series and continued-fraction evaluation.
inline double oracle_e1(double x) { return boost::math::expint(1, x); }

}  // namespace ncic::test
