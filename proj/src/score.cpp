#include "ctxsim/score.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ctxsim {

Score::Score(double value) : value_(value) {
  if (std::isnan(value) || value < 0.0 || value > 1.0) {
    throw std::domain_error("score out of [0, 1]: " + std::to_string(value));
  }
}

}  // namespace ctxsim
