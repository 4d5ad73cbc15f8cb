#pragma once

#include <string>
#include <utility>
#include <vector>

#include "csg/semigroup.hpp"
#include "csg/tree.hpp"

namespace csg {

// File formats (all JSON, one object per line for streamability):
//   cone      {"dim":2,"rays":[[1,0],[0,1]]}
//   order     {"weights":[[1,1],[1,0]]}
//   context   {"cone":...,"order":...}
//   semigroup {"cone":...,"order":...,"gaps":[[0,1],...]}   gaps order-sorted
// A semigroup with no gaps (S = C) serializes its Frobenius element as
// [-1,...,-1] in invariant reports.

std::string cone_to_json(const Cone& c);
Cone cone_from_json_text(const std::string& text);  // ParseError

std::string order_to_json(const WeightOrder& o);
std::string context_to_json(const Context& ctx);
Ctx context_from_json_text(const std::string& text);  // ParseError + make errors

std::string semigroup_to_json(const CSemigroup& s);
CSemigroup semigroup_from_json_text(const std::string& text);  // validates via from_gaps
CSemigroup load_semigroup_file(const std::string& path);       // ParseError

// CLI argument shorthands.
Cone parse_cone_spec(const std::string& spec);  // "full:p" or a cone-file path
std::vector<std::vector<long long>> parse_weight_rows(const std::string& s);  // "1,1;1,0"
Point parse_point(const std::string& s);  // "a,b" → (a,b)

// Report builders. Everything is canonically sorted upstream, so output is
// byte-stable across runs and thread counts.
std::string invariants_to_json(const CSemigroup& s, const InvariantRecord& rec);
std::string wilf_to_json(const std::string& kind, long long lhs, long long rhs,
                         bool holds);
std::string csv_counts(const std::vector<std::pair<std::string, long long>>& rows);
std::string tree_to_dot(const SemigroupTree& t);

}  // namespace csg
