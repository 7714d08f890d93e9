#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tripos {

/// Thrown when an enumeration or search would exceed its configured bound.
/// Runners translate this into the `cap-exceeded` verdict (exit code 2).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Validation outcome: either a value or a first-violation message.
/// Used by the validate_* family, where a failure is a result, not a bug.
template <typename T>
class Expected {
 public:
  Expected(T value) : state_(std::move(value)) {}

  static Expected failure(std::string message) {
    return Expected(Fail{std::move(message)});
  }

  bool ok() const { return std::holds_alternative<T>(state_); }
  explicit operator bool() const { return ok(); }

  const T& operator*() const { return value(); }
  const T* operator->() const { return &value(); }

  const T& value() const {
    if (!ok()) throw std::logic_error("Expected: no value: " + error());
    return std::get<T>(state_);
  }

  const std::string& error() const {
    static const std::string kNone;
    return ok() ? kNone : std::get<Fail>(state_).message;
  }

 private:
  struct Fail {
    std::string message;
  };
  explicit Expected(Fail f) : state_(std::move(f)) {}
  std::variant<T, Fail> state_;
};

/// Integer power with overflow guard; throws CapExceeded past `limit`.
inline long long checked_pow(long long base, long long exp, long long limit,
                             const std::string& what) {
  long long r = 1;
  for (long long k = 0; k < exp; ++k) {
    if (base != 0 && r > limit / base) throw CapExceeded(what + ": size exceeds cap");
    r *= base;
    if (r > limit) throw CapExceeded(what + ": size exceeds cap");
  }
  return r;
}

/// Digits of `code` in base `base`, most significant digit first.
/// Enumerating code = 0,1,2,... yields tuples in lexicographic order.
inline std::vector<int> decode_tuple(long long code, int length, long long base) {
  std::vector<int> digits(static_cast<size_t>(length), 0);
  for (int pos = length - 1; pos >= 0; --pos) {
    digits[static_cast<size_t>(pos)] = static_cast<int>(code % base);
    code /= base;
  }
  return digits;
}

inline long long encode_tuple(const std::vector<int>& digits, long long base) {
  long long code = 0;
  for (int d : digits) code = code * base + d;
  return code;
}

}  // namespace tripos
