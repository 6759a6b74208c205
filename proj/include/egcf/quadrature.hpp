#pragma once

#include <cstddef>

#include "egcf/exact.hpp"

namespace egcf {

// Approximation of F(x) = int_0^inf e^-t / (t + x) dt with a reported
// absolute error bound. Independent of the continued-fraction code.
struct OracleValue {
  ExactRational value;
  ExactRational err;

  Enclosure enclosure() const { return Enclosure(value - err, value + err); }
};

struct QuadratureConfig {
  std::size_t nodes = 20;                // Gauss-Legendre points per panel
  std::size_t max_panels = 1u << 20;     // subdivision budget
};

// Composite Gauss-Legendre on [0, T] with T chosen so the tail
// e^-T / (T + x) < target_err / 2, panels halved until two successive
// estimates differ by < target_err / 4. err = tail + last gap + a rounding
// allowance. Throws std::invalid_argument for x <= 0 or target_err <= 0 and
// std::runtime_error when the budget runs out before err <= target_err.
OracleValue F_reference(const ExactRational& x, const ExactRational& target_err,
                        const QuadratureConfig& cfg = {});

}  // namespace egcf
