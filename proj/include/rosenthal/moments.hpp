// Copyright 2026 The rosenthal authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "rosenthal/series.hpp"

namespace rosenthal {

/// log of sum_{n>=0} |n-a|^p z^n / (e n!) for any z > 0 (generalized_bell
/// without the z <= 1 restriction). E|X - a|^p for X ~ Poisson(z) equals
/// exp(log_value + 1 - z).
SeriesValue weighted_abs_moment(double a, double p, double z, double tol = 0.0);

}  // namespace rosenthal
