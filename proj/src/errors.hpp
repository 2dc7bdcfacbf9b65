#pragma once

#include <stdexcept>
#include <string>

namespace sumprod {

enum class Errc {
  unfactored_residue,   // cofactor above the factorization bound survived trial division
  zero_element,         // 0 where a multiplicative operation needs nonzero values
  hypothesis_violated,  // an omega bound or a good-pair hypothesis failed on the input
  memory_budget,        // counter support / matrix dimension cap exceeded
  brute_force_budget,   // tuple enumeration cap exceeded
  enumeration_budget,   // group slice / pair-loop cap exceeded
  exhausted_sampler,    // deduplicating sampler cannot reach the requested size
  invalid_input,        // malformed file, dependent generators, bad value
  parameter,            // parameter outside its documented range
};

class Error : public std::runtime_error {
public:
  Error(Errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Errc kind() const { return kind_; }

private:
  Errc kind_;
};

[[noreturn]] inline void fail(Errc kind, const std::string& what) { throw Error(kind, what); }

inline const char* errc_name(Errc k) {
  switch (k) {
    case Errc::unfactored_residue: return "unfactored_residue";
    case Errc::zero_element: return "zero_element";
    case Errc::hypothesis_violated: return "hypothesis_violated";
    case Errc::memory_budget: return "memory_budget";
    case Errc::brute_force_budget: return "brute_force_budget";
    case Errc::enumeration_budget: return "enumeration_budget";
    case Errc::exhausted_sampler: return "exhausted_sampler";
    case Errc::invalid_input: return "invalid_input";
    case Errc::parameter: return "parameter";
  }
  return "unknown";
}

}  // namespace sumprod
