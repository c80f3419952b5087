#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <vector>

namespace hydra {

// coeffs . x <= bound
struct LinearInequality {
  std::vector<mpq_class> coeffs;
  mpq_class bound;
};

struct Interval {
  std::optional<mpq_class> lo;
  std::optional<mpq_class> hi;
};

class InfeasibleSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact range of coordinate `target` over the real solutions of the system,
// by Fourier-Motzkin elimination with Chernikov's redundancy rule.
Interval fm_project(const std::vector<LinearInequality>& system, std::size_t target);

}  // namespace hydra
