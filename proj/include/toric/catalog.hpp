#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

struct ProjectiveSpaceParams {
  int d = 1;
};

/// P^{s-1}-bundle P(O(a_1) + ... + O(a_{s-1}) + O) over P^{d-s+1}.
struct BundleParams {
  int d = 2;
  int s = 2;
  std::vector<int> twists;  // a_1 >= ... >= a_{s-1} >= 0
};

/// P^{d-2}-bundle P(O(a) + O^{d-2}) over P^2.
struct Example41Params {
  int d = 3;
  int a = 1;
};

/// Picard-number-three fan without a fiber-type contraction, with ray groups
/// V, Y, Z, T, U of sizes p[0..4], twists b (on T) and c (on Z \ {z1}).
struct BatyrevParams {
  std::array<int, 5> p{1, 1, 1, 1, 1};
  std::vector<int> b;  // b_1 .. b_{p3}
  std::vector<int> c;  // c_2 .. c_{p2}

  int dim() const { return p[0] + p[1] + p[2] + p[3] + p[4] - 3; }
};

using CatalogParams = std::variant<ProjectiveSpaceParams, BundleParams, Example41Params, BatyrevParams>;

/// CLI family name: "pn", "kleinschmidt", "example41" or "batyrev3".
std::string family_name(const CatalogParams& params);
/// Short deterministic label such as "batyrev3 p=1,1,2,1,1 b=0 c=0".
std::string describe(const CatalogParams& params);

Fan projective_space(int d);
Fan kleinschmidt_bundle(const BundleParams& params);
Fan example_41(int d, int a);
/// Moves the minimum of b and of c to the front, as the constructor expects.
BatyrevParams normalize(BatyrevParams params);
/// Builds from normalized parameters; unnormalized input is normalized first.
Fan batyrev_picard3(const BatyrevParams& params);
Fan build(const CatalogParams& params);

/// A primitive relation stated by ray names: sum(collection) = sum c_j y_j.
struct ExpectedRelation {
  std::vector<std::string> collection;
  std::map<std::string, int> rhs;
};

/// The primitive relations each family is constructed to have.
std::vector<ExpectedRelation> expected_relations(const CatalogParams& params);

/// True iff the fan's computed primitive relations equal `expected` exactly
/// (collections, right-hand cones and coefficients).
bool relations_match(const Fan& fan, const std::vector<ExpectedRelation>& expected);

// Distinguished cones of the Picard-three fans.

/// G(tau) = G \ {v1, y1, z1, t1, u1}; its orbit closure is the surface S_1.
Cone batyrev_s1_cone(const Fan& fan);
/// G \ {v1, z1, z2, t1, t2}; exists when p2, p3 >= 2.
std::optional<Cone> batyrev_case1_cone(const Fan& fan, const BatyrevParams& params);
/// G \ {v1, y1, z1, z2, u1}; exists when p2 >= 2.
std::optional<Cone> batyrev_case2_cone(const Fan& fan, const BatyrevParams& params);

// Parameter grids. Enumeration order is deterministic and parameter-sorted.

struct ProjectiveSpaceBounds {
  int min_d = 1, max_d = 6;
};
struct BundleBounds {
  int min_d = 2, max_d = 7;
  int min_s = 2, max_s = 5;
  int max_twist = 3;
};
struct Example41Bounds {
  int min_d = 3, max_d = 6;
  int min_a = 1, max_a = 3;
};
struct BatyrevBounds {
  int max_p = 2;   // bound for p0, p1, p3, p4
  int max_p2 = 2;  // bound for p2
  int max_twist = 2;
};

std::vector<CatalogParams> grid(const ProjectiveSpaceBounds& bounds);
std::vector<CatalogParams> grid(const BundleBounds& bounds);
std::vector<CatalogParams> grid(const Example41Bounds& bounds);
std::vector<CatalogParams> grid(const BatyrevBounds& bounds);

}  // namespace toric
