#pragma once

// Seeded property suites shared by the CLI `check` command and the tests.

#include <cstdint>
#include <vector>

#include "yh/yokonuma.hpp"

namespace yh {

// Trace normalization, tr(xy) = tr(yx), tr(A g_{n-1} B) = z tr(AB) and
// tr(A t_n^m) = x_m tr(A) for A, B drawn from Y_{d,n-1}. At d = 1 it also
// checks that no x indeterminate ever appears.
std::vector<RelationCheck> trace_property_suite(const YParams& params, std::uint64_t seed, int samples);

// For every 1 <= s < r <= depth at d = p^r: phi(e_{p^r,i}) = e_{p^s,i}, phi is
// multiplicative, and delta_s^r(tau_r(x)) = tau_s(phi_s^r(x)).
std::vector<RelationCheck> commuting_square_suite(std::int64_t p, int depth, int n, std::uint64_t seed, int samples);

bool all_passed(const std::vector<RelationCheck>& checks);

}  // namespace yh
