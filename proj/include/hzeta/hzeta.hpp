#ifndef HZETA_HZETA_HPP
#define HZETA_HZETA_HPP

// Umbrella header: exact kernel, series engine, numeric kernel, Euler sums,
// negative values, Laurent data, asymptotics, arithmetic identities.

#include "hzeta/asymptotics.hpp"
#include "hzeta/bernoulli.hpp"
#include "hzeta/bigfloat.hpp"
#include "hzeta/const_combo.hpp"
#include "hzeta/em_tail.hpp"
#include "hzeta/euler_sums.hpp"
#include "hzeta/euler_transform.hpp"
#include "hzeta/gamma_poly.hpp"
#include "hzeta/harmonic.hpp"
#include "hzeta/laurent.hpp"
#include "hzeta/neg_values.hpp"
#include "hzeta/number_theory.hpp"
#include "hzeta/rational.hpp"
#include "hzeta/rational_function.hpp"
#include "hzeta/series_checks.hpp"
#include "hzeta/stieltjes.hpp"
#include "hzeta/trunc_series.hpp"
#include "hzeta/zeta_numeric.hpp"

#endif
