#pragma once

#include <stdexcept>
#include <string>

namespace csg {

enum class Errc {
  zero_ray,
  parallel_rays,
  unsupported_cone,
  negative_entry,
  dimension_mismatch,
  not_in_cone,
  rank_deficient,
  non_positive_primary_weight,
  gap_not_in_cone,
  zero_gap,
  not_closed,
  not_special_gap,
  not_minimal_generator,
  full_cone,
  not_full_cone,
  bad_genus,
  bad_parameters,
  frobenius_mismatch,
  not_n2_deglex,
  zero_conductor,
  zero_multiplicity,
  budget_exceeded,
  parse_error,
};

// Machine-readable name, e.g. "NotClosed".
const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string witness = "");
  Errc code() const { return code_; }
  const std::string& witness() const { return witness_; }

 private:
  Errc code_;
  std::string witness_;
};

[[noreturn]] void fail(Errc code, std::string witness = "");

}  // namespace csg
