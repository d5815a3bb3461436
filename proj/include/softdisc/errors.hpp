#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace softdisc {

// Input text could not be parsed. `line` is 1-based.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Structurally valid input that violates a model invariant (duplicate points,
// delta out of range, ...).
class validation_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A pair of points closer than the hard core: the energy is +infinity and no
// bond graph exists. Carries the offending pair.
class infeasible_error : public std::runtime_error {
 public:
  infeasible_error(std::size_t i, std::size_t j, double distance)
      : std::runtime_error("hard-core violation: points " + std::to_string(i) + " and " +
                           std::to_string(j) + " at distance " + std::to_string(distance)),
        i_(i), j_(j), distance_(distance) {}
  std::size_t first() const { return i_; }
  std::size_t second() const { return j_; }
  double distance() const { return distance_; }

 private:
  std::size_t i_, j_;
  double distance_;
};

// Rejection sampler failed to place a point within the attempt budget.
class saturation_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested enumeration size exceeds the implementation cap.
class capacity_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A hypothesis of a checked statement does not hold for the given input.
class precondition_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A correctness alarm: something the theory guarantees was observed to fail.
// Reaching this is a bug in the toolkit (or a counterexample).
class invariant_error : public std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace softdisc
