#include "ctxsim/data_layer.hpp"

#include <cmath>
#include <string>

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

namespace ctxsim {

Score compare_boolean(bool a, bool b) { return a == b ? Score::one() : Score::zero(); }

Score compare_number(double a, double b) {
  if (a == b) return Score::one();
  if (!std::isfinite(a) || !std::isfinite(b)) return Score::zero();
  const double abs_a = std::fabs(a);
  const double abs_b = std::fabs(b);
  double ratio = 0.0;
  if (abs_a <= 1.0 && abs_b <= 1.0) {
    ratio = std::fabs(a - b) / (abs_a + abs_b);
  } else {
    // Halved operands keep |a - b| and |a| + |b| finite near DBL_MAX.
    ratio = std::fabs(a / 2 - b / 2) / (abs_a / 2 + abs_b / 2);
  }
  return Score(std::clamp(1.0 - ratio, 0.0, 1.0));
}

namespace {

std::string nfc(std::string_view s) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* normalizer = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) return std::string(s);
  const icu::UnicodeString source = icu::UnicodeString::fromUTF8(
      icu::StringPiece(s.data(), static_cast<int32_t>(s.size())));
  const icu::UnicodeString normalized = normalizer->normalize(source, status);
  if (U_FAILURE(status)) return std::string(s);
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

}  // namespace

Score compare_text(std::string_view a, std::string_view b) {
  if (a == b) return Score::one();
  return nfc(a) == nfc(b) ? Score::one() : Score::zero();
}

Score compare_values(const Value& a, const Value& b) {
  if (a.index() != b.index()) return Score::zero();
  if (const bool* x = std::get_if<bool>(&a)) return compare_boolean(*x, std::get<bool>(b));
  if (const double* x = std::get_if<double>(&a)) {
    return compare_number(*x, std::get<double>(b));
  }
  return compare_text(std::get<std::string>(a), std::get<std::string>(b));
}

bool values_equal(const Value& a, const Value& b) {
  if (a.index() != b.index()) return false;
  if (const std::string* x = std::get_if<std::string>(&a)) {
    return compare_text(*x, std::get<std::string>(b)) == Score::one();
  }
  return a == b;
}

}  // namespace ctxsim
