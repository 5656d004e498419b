#pragma once

#include <stdexcept>
#include <string>

namespace folzar {

// Malformed input documents: unknown ids, bad fractions, schema violations.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// An operation was called outside its stated precondition.
class precondition_error : public std::runtime_error {
 public:
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// Hirzebruch-Jung string with an entry below 2.
class invalid_chain_error : public std::runtime_error {
 public:
  explicit invalid_chain_error(const std::string& what) : std::runtime_error(what) {}
};

// Structural impossibility in an accepted configuration, e.g. two maximal
// chains sharing or touching a curve.
class inconsistent_configuration_error : public std::runtime_error {
 public:
  explicit inconsistent_configuration_error(const std::string& what)
      : std::runtime_error(what) {}
};

// The chain-built negative part fails nefness against a configured curve.
class theorem_mismatch_error : public std::runtime_error {
 public:
  explicit theorem_mismatch_error(const std::string& what) : std::runtime_error(what) {}
};

// Zariski construction escapes every negative-definite support.
class not_pseudoeffective_error : public std::runtime_error {
 public:
  explicit not_pseudoeffective_error(const std::string& what)
      : std::runtime_error(what) {}
};

// A bounds computation lacks required ambient intersection numbers.
class missing_data_error : public std::runtime_error {
 public:
  explicit missing_data_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace folzar
