#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace turaev {

// Input that violates a structural requirement (bad PD text, non-planar rotation, ...).
class DiagramError : public std::runtime_error {
 public:
  enum class Kind { syntax, empty, multiplicity, disconnected, nonplanar, precondition };

  DiagramError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Raised when a proven structural statement fails on a concrete diagram. Never expected;
// reaching it means a bug in this library (or a counterexample worth reporting).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An operation declining its input for a documented reason (alternating input, wrong genus...).
struct Refusal {
  std::string reason;
};

template <typename T>
class Outcome {
 public:
  Outcome(T value) : v_(std::move(value)) {}
  Outcome(Refusal r) : v_(std::move(r)) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    if (!ok()) throw std::logic_error("Outcome::value on refusal: " + refusal().reason);
    return std::get<T>(v_);
  }
  T&& value() && {
    if (!ok()) throw std::logic_error("Outcome::value on refusal: " + refusal().reason);
    return std::get<T>(std::move(v_));
  }
  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }

  const Refusal& refusal() const { return std::get<Refusal>(v_); }

 private:
  std::variant<T, Refusal> v_;
};

}  // namespace turaev
