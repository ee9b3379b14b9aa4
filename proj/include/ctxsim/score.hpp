#pragma once

#include <compare>

namespace ctxsim {

/// A similarity value in [0, 1]. Construction rejects NaN and out-of-range
/// inputs with std::domain_error.
class Score {
 public:
  constexpr Score() noexcept = default;
  explicit Score(double value);

  static constexpr Score one() noexcept { return Score(Raw{1.0}); }
  static constexpr Score zero() noexcept { return Score(Raw{0.0}); }

  constexpr double value() const noexcept { return value_; }

  friend constexpr auto operator<=>(Score, Score) noexcept = default;

 private:
  struct Raw {
    double v;
  };
  constexpr explicit Score(Raw r) noexcept : value_(r.v) {}

  double value_ = 0.0;
};

}  // namespace ctxsim
