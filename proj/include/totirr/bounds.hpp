#pragma once

#include <optional>
#include <string>

#include "totirr/checked.hpp"
#include "totirr/indices.hpp"
#include "totirr/products.hpp"

namespace totirr {

/// Largest total irregularity of any graph on n vertices:
/// (2n^3 - 3n^2 - 2n)/12 for even n, (2n^3 - 3n^2 - 2n + 3)/12 for odd n.
inline Int bound_theorem1(Int n) {
  using namespace checked;
  if (n < 1) throw InputError("bound needs n >= 1, got " + std::to_string(n));
  Int num = sub(sub(mul(2, n, n, n), mul(3, n, n)), mul(2, n));
  if (n % 2 != 0) num = add(num, 3);
  if (num % 12 != 0) throw InvariantViolation("numerator " + std::to_string(num) + " not divisible by 12");
  return num / 12;
}

/// Operand statistics the operation bounds are written in.
struct OperandStats {
  Int n = 0;
  Int m = 0;
  Int irr_t = 0;
  bool connected = false;

  static OperandStats of(const Graph& g) { return {g.order(), g.size(), total_irregularity(g), g.is_connected()}; }
};

/// Closed-form upper bound on irr_t of the composite for each operation.
inline Int operation_bound(ProductKind k, const OperandStats& g, const OperandStats& h) {
  using namespace checked;
  const Int n1 = g.n, m1 = g.m, n2 = h.n, m2 = h.m;
  const Int a = g.irr_t, b = h.irr_t;
  switch (k) {
    case ProductKind::join:
      return add(add(a, b), mul(n2, n1 - 1, n1 - 2));
    case ProductKind::lexicographic:
      return add(mul(n2, n2, n2, a), mul(n1, n1, b));
    case ProductKind::cartesian:
      return add(mul(n2, n2, a), mul(n1, n1, b));
    case ProductKind::strong:
      return add(mul(n2, add(n2, mul(2, m2)), a), mul(n1, add(n1, mul(2, m1)), b));
    case ProductKind::direct:
      return add(mul(2, n2, m2, a), mul(2, n1, m1, b));
    case ProductKind::corona: {
      const Int tail = add(sub(add(mul(n2, n2), mul(n1, n2)), mul(4, n2)), 2);
      return add(add(a, mul(n1, n1, b)), mul(n1, n1, tail));
    }
    case ProductKind::disjunction:
      return add(mul(n2, add(mul(n2, n2), mul(2, m2)), a), mul(n1, add(mul(n1, n1), mul(2, m1)), b));
    case ProductKind::symdiff:
      return add(mul(n2, add(mul(n2, n2), mul(4, m2)), a), mul(n1, add(mul(n1, n1), mul(4, m1)), b));
  }
  throw InputError("unknown product kind");
}

/**
 * Whether the bound for `k` is claimed to hold for these operands.
 *
 * join   : n1 >= n2, and both operands connected.
 * corona : n1 >= n2, and H connected.
 * others : always.
 *
 * The connectivity conditions are needed: K_2 + (2 isolated vertices) has
 * irr_t 4 against a join bound of 0, and K_2 ⊙ (2 isolated vertices) has
 * irr_t 16 against a corona bound of 8.
 */
inline bool hypothesis_holds(ProductKind k, const OperandStats& g, const OperandStats& h) {
  switch (k) {
    case ProductKind::join: return g.n >= h.n && g.connected && h.connected;
    case ProductKind::corona: return g.n >= h.n && h.connected;
    default: return true;
  }
}

struct BoundReport {
  ProductKind kind{};
  Int n1 = 0, m1 = 0, n2 = 0, m2 = 0;
  Int irr_t_g = 0, irr_t_h = 0;
  Int actual = 0;
  Int bound = 0;
  Int slack = 0;
  bool tight = false;
  bool hypothesis_ok = false;

  /// Negative slack under the hypothesis would disprove the bound.
  bool violated() const { return hypothesis_ok && slack < 0; }
};

class BoundViolation : public InvariantViolation {
 public:
  explicit BoundViolation(const BoundReport& r)
      : InvariantViolation(std::string(to_string(r.kind)) + " bound violated: actual " + std::to_string(r.actual) +
                           " > bound " + std::to_string(r.bound)),
        report_(r) {}

  const BoundReport& report() const { return report_; }

 private:
  BoundReport report_;
};

/// Assembles a report from precomputed operand statistics and the composite's irr_t.
inline BoundReport make_bound_report(ProductKind k, const OperandStats& g, const OperandStats& h, Int actual) {
  BoundReport r;
  r.kind = k;
  r.n1 = g.n;
  r.m1 = g.m;
  r.n2 = h.n;
  r.m2 = h.m;
  r.irr_t_g = g.irr_t;
  r.irr_t_h = h.irr_t;
  r.actual = actual;
  r.bound = operation_bound(k, g, h);
  r.slack = checked::sub(r.bound, actual);
  r.tight = r.slack == 0;
  r.hypothesis_ok = hypothesis_holds(k, g, h);
  return r;
}

/// Builds the composite, evaluates the bound, and compares. Does not throw on
/// a violation; see `require_sound`.
inline BoundReport evaluate_bound(ProductKind k, const Graph& g, const Graph& h) {
  return make_bound_report(k, OperandStats::of(g), OperandStats::of(h), total_irregularity(apply(k, g, h)));
}

inline const BoundReport& require_sound(const BoundReport& r) {
  if (r.violated()) throw BoundViolation(r);
  return r;
}

inline BoundReport bound_join(const Graph& g, const Graph& h) { return evaluate_bound(ProductKind::join, g, h); }
inline BoundReport bound_lexicographic(const Graph& g, const Graph& h) {
  return evaluate_bound(ProductKind::lexicographic, g, h);
}
inline BoundReport bound_cartesian(const Graph& g, const Graph& h) { return evaluate_bound(ProductKind::cartesian, g, h); }
inline BoundReport bound_strong(const Graph& g, const Graph& h) { return evaluate_bound(ProductKind::strong, g, h); }
inline BoundReport bound_direct(const Graph& g, const Graph& h) { return evaluate_bound(ProductKind::direct, g, h); }
inline BoundReport bound_corona(const Graph& g, const Graph& h) { return evaluate_bound(ProductKind::corona, g, h); }
inline BoundReport bound_disjunction(const Graph& g, const Graph& h) {
  return evaluate_bound(ProductKind::disjunction, g, h);
}
inline BoundReport bound_symdiff(const Graph& g, const Graph& h) { return evaluate_bound(ProductKind::symdiff, g, h); }

}  // namespace totirr
