#pragma once

#include <stdexcept>
#include <string>

namespace wframe {

// Mathematical rejection: the input is well-formed but fails an
// admissibility or solvability condition (CLI exit code 1).
class admissibility_error : public std::runtime_error {
 public:
  explicit admissibility_error(const std::string& what) : std::runtime_error(what) {}
};

// Matrix extension cannot proceed (row-norm deficit with no slack columns).
class extension_error : public std::runtime_error {
 public:
  explicit extension_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed file or schema violation (CLI exit code 2).
class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wframe
