#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "toric/catalog.hpp"
#include "toric/fan.hpp"
#include "toric/intersect.hpp"

namespace toric {

enum class Positivity { Positive, NefNotPositive, NotNef };

/// "positive", "nef_not_positive" or "not_nef".
std::string to_string(Positivity p);

struct ChernValue {
  unsigned k = 0;
  Cone cone;  // dimension rank - k
  Rational value;
};

struct PositivityReport {
  unsigned k = 0;
  std::vector<ChernValue> values;  // lexicographic cone order
  Rational min_value;
  Cone witness;  // first cone (lexicographically) attaining min_value
  Positivity classification = Positivity::Positive;
};

/// (ch_k(X) . V(tau)) = (1/k!) sum_x (D_x^k . V(tau)).
Rational chern_value(IntersectionEngine& engine, unsigned k, Cone tau);

/// Evaluates ch_k on every k-dimensional orbit closure.
PositivityReport classify(IntersectionEngine& engine, unsigned k);
PositivityReport classify(const Fan& fan, unsigned k);

/// ch_1 through anticanonical degrees of the wall curves.
PositivityReport ch1_report(const Fan& fan);

class NotHirzebruchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Data of a codimension-two cone whose orbit closure is a Hirzebruch surface:
///   w1 + w3 + sum a_i x_i = 0   and   w2 + w4 - alpha w1 + sum e_i x_i = 0.
struct HirzebruchWallData {
  Cone tau;
  std::array<std::size_t, 4> w{};
  Integer alpha;
  std::vector<std::pair<std::size_t, Integer>> a;  // keyed by the rays of tau
  std::vector<std::pair<std::size_t, Integer>> e;
};

/// All orientations of the link 4-cycle satisfying the normal form (two when
/// alpha = 0). Throws NotHirzebruchError unless tau has exactly four adjacent
/// maximal cones.
std::vector<HirzebruchWallData> hirzebruch_wall_data(const Fan& fan, Cone tau);

/// Closed form (alpha(2 + sum a_i^2) + 2(-alpha + sum a_i e_i)) / 2, evaluated
/// independently of the intersection engine.
Rational hirzebruch_ch2_formula(const Fan& fan, Cone tau);

/// Closed form of 2 (ch_2 . S_1) on the Picard-three family:
///   -p1 - p4 + b1 p2 - 2 sum_{i>=2} c_i - (b1 + 1) + sum_{i=2}^{p3} (b1 - 2 b_i - 1).
Integer batyrev_s1_doubled(const BatyrevParams& params);
/// (ch_2 . S_1), i.e. half of batyrev_s1_doubled.
Rational batyrev_s1_formula(const BatyrevParams& params);

}  // namespace toric
