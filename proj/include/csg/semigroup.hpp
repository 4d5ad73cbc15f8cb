#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csg/order.hpp"

namespace csg {

// C-semigroup: submonoid of the cone with a finite gap set. Stored as the
// gap list, sorted by the context order and duplicate free. Immutable value;
// equality is gap-list equality (same context assumed).
class CSemigroup {
 public:
  // Validates: gaps nonzero, inside the cone, complement closed under
  // addition. Errors: GapNotInCone, ZeroGap, NotClosed (with witness).
  static CSemigroup from_gaps(Ctx ctx, std::vector<Point> gaps);
  static CSemigroup full(Ctx ctx);
  // Fast path for algorithmic construction: `gaps` must already be sorted,
  // duplicate free and closed — callers guarantee this structurally.
  static CSemigroup trusted(Ctx ctx, std::vector<Point> gaps);

  const Ctx& ctx() const { return ctx_; }
  const Context& c() const { return *ctx_; }
  const std::vector<Point>& gaps() const { return gaps_; }
  long long genus() const { return static_cast<long long>(gaps_.size()); }
  bool is_full() const { return gaps_.empty(); }

  bool is_gap(const Point& x) const;     // binary search in the sorted gap list
  bool contains(const Point& x) const;   // x in C and not a gap
  const Point& frobenius() const;        // largest gap; Errors: FullCone

  bool operator==(const CSemigroup& o) const { return gaps_ == o.gaps_; }
  bool operator!=(const CSemigroup& o) const { return !(*this == o); }

 private:
  CSemigroup(Ctx ctx, std::vector<Point> gaps) : ctx_(std::move(ctx)), gaps_(std::move(gaps)) {}
  Ctx ctx_;
  std::vector<Point> gaps_;
};

struct InvariantRecord {
  long long genus = 0;
  std::optional<Point> frobenius;  // empty = S is the whole cone
  Point conductor;
  Point multiplicity;
  std::vector<Point> ray_multiplicities;
  long long small_count = 0;       // n(S), zero element included
  long long frobenius_number = 0;  // N(Fb(S)); 0 for the full cone
  std::optional<long long> embedding_dim;
};

// n(S) - 1 + g(S) == frobenius_number for S != C.
InvariantRecord invariants(const CSemigroup& s, bool with_embedding_dim = false);

Point multiplicity(const CSemigroup& s);  // least nonzero element

// Minimal generators, sorted increasingly. Candidates are scanned up to
// pi1(x) <= pi1(Fb) + sum_i pi1(mult_i) (Fb term dropped for the full cone):
// beyond that bound some ray multiplicity can be subtracted leaving a point
// above Fb, so the element decomposes.
std::vector<Point> minimal_generators(const CSemigroup& s);

// Gaps x with 2x in S and x + (S \ {0}) inside S; these are exactly the gaps
// whose re-insertion keeps the complement closed. Finite check: x + s can only
// escape S by landing on a gap.
std::vector<Point> special_gaps(const CSemigroup& s);

CSemigroup add_element(const CSemigroup& s, const Point& x);     // Errors: NotSpecialGap
CSemigroup remove_element(const CSemigroup& s, const Point& x);  // Errors: NotMinimalGenerator

// Ordinary semigroup with Frobenius element f: gaps = all nonzero x <= f.
CSemigroup ordinary_from_frobenius(const Ctx& ctx, const Point& f);

// Half-box deletion: gaps = {f} union {x in base, x <=_C f, 2x <= f}.
// Irreducible with Frobenius f when base is the whole cone. A general base
// can break closure; the result is validated (NotClosed on failure).
CSemigroup irreducible_from_frobenius(const Ctx& ctx, const Point& f);
CSemigroup irreducible_from_frobenius(const CSemigroup& base, const Point& f);

// g(S) == ceil(#box(Fb)/2). Errors: FullCone.
bool is_irreducible(const CSemigroup& s);

// Counts over the union of componentwise gap boxes (full N^p only):
// nu = S-elements dominated by some gap (0 included), gamma = all lattice
// points dominated by some gap. Errors: NotFullCone.
long long nu_count(const CSemigroup& s);
long long gamma_count(const CSemigroup& s);

// Windowed evidence checks (false = violation found, witness filled in).
bool is_arf_window(const CSemigroup& s, long long bound, std::string* witness = nullptr);
bool is_saturated_window(const CSemigroup& s, long long bound, int zbound,
                         std::string* witness = nullptr);

// Canonical order on semigroup lists: by gap list, element-wise in the
// context order, shorter list first on a shared prefix.
bool gapset_less(const CSemigroup& a, const CSemigroup& b);
void canonical_sort(std::vector<CSemigroup>& v);

}  // namespace csg
