#pragma once

#include <optional>
#include <string>
#include <utility>

#include "fps/errors.hpp"

namespace fps {

/// A value or the reason a mathematical question has a negative answer
/// (no solution, not symmetric, not conjugate). Operational failures throw.
template <class T>
class Outcome {
 public:
  Outcome(T v) : v_(std::move(v)) {}  // NOLINT
  static Outcome failure(std::string why, int index = -1) {
    Outcome o;
    o.reason_ = std::move(why);
    o.index_ = index;
    return o;
  }

  bool ok() const { return v_.has_value(); }
  explicit operator bool() const { return ok(); }
  const T& operator*() const { return value(); }
  T& operator*() { return const_cast<T&>(static_cast<const Outcome&>(*this).value()); }
  const T* operator->() const { return &value(); }
  const T& value() const {
    if (!v_) throw InvalidArgument("negative result has no value: " + reason_);
    return *v_;
  }
  const std::string& reason() const { return reason_; }
  int index() const { return index_; }  // offending input position, -1 if none

 private:
  Outcome() = default;
  std::optional<T> v_;
  std::string reason_;
  int index_ = -1;
};

}  // namespace fps
