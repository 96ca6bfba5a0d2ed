#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "toric/cone.hpp"
#include "toric/linalg.hpp"
#include "toric/numeric.hpp"

namespace toric {

struct Ray {
  std::size_t id = 0;
  std::string name;
  IntegerVector vector;
};

/// Input record for a ray before validation.
struct RaySpec {
  std::string name;
  IntegerVector vector;
};

class FanError : public std::invalid_argument {
 public:
  enum class Kind {
    Malformed,
    NonPrimitiveRay,
    DuplicateRay,
    NonSmoothCone,
    Incomplete,
    BadWall,
  };
  FanError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// y1 + y2 + sum_i a_i x_i = 0 around a wall with generators x_i.
struct WallRelation {
  Cone wall;
  std::pair<std::size_t, std::size_t> opposite;
  /// (ray id of x_i, a_i) in increasing ray id order.
  std::vector<std::pair<std::size_t, Integer>> coefficients;

  /// (-K . C) = 2 + sum a_i.
  Integer anticanonical_degree() const;
  /// Coefficient of every ray in the relation (1 on y1 and y2), i.e. the
  /// intersection numbers (D_x . C) as a vector over G(fan).
  IntegerVector curve_vector(std::size_t num_rays) const;
};

struct PrimitiveCollection {
  Cone rays;
  friend bool operator==(const PrimitiveCollection&, const PrimitiveCollection&) = default;
};

/// sum_{x in P} x = sum_j a_j y_j with y_j spanning sigma(P) and a_j > 0.
struct PrimitiveRelation {
  PrimitiveCollection collection;
  Cone sigma;
  std::vector<std::pair<std::size_t, Integer>> coefficients;
  Integer degree;  // |P| - sum a_j
};

/// A smooth simplicial fan in Z^d with eagerly computed faces and walls.
///
/// Built fans are immutable; every query is const and safe to call from
/// several threads.
class Fan {
 public:
  /// Checks primitivity, distinctness and smoothness and derives the face
  /// poset, but does not require completeness. Used by the validator and for
  /// deliberately partial fans.
  static Fan assemble(std::size_t rank, std::vector<RaySpec> rays,
                      std::vector<std::vector<std::size_t>> maximal_cones);

  std::size_t rank() const { return rank_; }
  std::size_t num_rays() const { return rays_.size(); }
  std::size_t picard_number() const { return rays_.size() - rank_; }
  const std::vector<Ray>& rays() const { return rays_; }
  const Ray& ray(std::size_t id) const { return rays_.at(id); }
  /// Throws std::out_of_range for unknown names.
  std::size_t ray_id(const std::string& name) const;
  std::optional<std::size_t> find_ray(const std::string& name) const;

  const std::vector<Cone>& maximal_cones() const { return maximal_; }
  bool is_cone(Cone c) const { return faces_.contains(c.mask()); }
  /// Indices into maximal_cones() of the maximal cones containing c, sorted.
  std::span<const std::size_t> containing_maximal(Cone c) const;
  /// All cones of the given dimension, sorted lexicographically by ray ids.
  const std::vector<Cone>& cones_of_dim(std::size_t dim) const { return by_dim_.at(dim); }
  /// Codimension-one faces lying in exactly two maximal cones.
  const std::vector<Cone>& walls() const { return walls_; }
  /// Codimension-one faces lying in exactly one maximal cone.
  const std::vector<Cone>& boundary_faces() const { return boundary_; }
  /// Codimension-one faces lying in three or more maximal cones.
  const std::vector<Cone>& overfull_faces() const { return overfull_; }

  /// <m, u> where m is the dual functional of the maximal cone `cone_index`
  /// belonging to generator `ray` of that cone; equivalently the coordinate
  /// of ray `u` along `ray` in that cone's basis.
  const Integer& dual_pairing(std::size_t cone_index, std::size_t ray, std::size_t u) const;
  /// Coordinates of an arbitrary lattice vector in the basis of a maximal cone,
  /// ordered like that cone's ids().
  IntegerVector coordinates(std::size_t cone_index, const IntegerVector& v) const;
  /// k-th dual functional of a maximal cone (k indexes its sorted ray ids).
  const Covector& dual_covector(std::size_t cone_index, std::size_t k) const {
    return dual_covectors_.at(cone_index).at(k);
  }

  Cone cone_of_names(std::span<const std::string> names) const;
  std::vector<std::string> names_of(Cone c) const;

 private:
  Fan() = default;

  std::size_t rank_ = 0;
  std::vector<Ray> rays_;
  std::vector<Cone> maximal_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> faces_;
  std::vector<std::vector<Cone>> by_dim_;
  std::vector<Cone> walls_, boundary_, overfull_;
  // dual_[c][k][u]: pairing of the k-th dual functional of maximal cone c
  // (k-th smallest ray id) with ray u.
  std::vector<std::vector<std::vector<Integer>>> dual_;
  std::vector<std::vector<Covector>> dual_covectors_;
};

/// Fully validated construction: assemble() plus validate_complete(); throws
/// FanError on any failure.
Fan build_fan(std::size_t rank, std::vector<RaySpec> rays,
              std::vector<std::vector<std::size_t>> maximal_cones);

/// Wall pairing, connectivity of the dual graph, local convexity across every
/// wall, and a seeded audit that random lattice points are covered exactly once.
bool validate_complete(const Fan& fan);

struct ProjectivityResult {
  bool projective = false;
  /// Divisor coefficients (one per ray) of an ample class when projective.
  std::optional<std::vector<Rational>> ample_witness;
};

/// Toric Nakai-Moishezon: looks for a divisor positive on every wall curve.
ProjectivityResult is_projective(const Fan& fan);

WallRelation wall_relation(const Fan& fan, Cone wall);
Integer anticanonical_degree_of_wall(const Fan& fan, Cone wall);

std::vector<PrimitiveCollection> primitive_collections(const Fan& fan);
PrimitiveRelation primitive_relation(const Fan& fan, const PrimitiveCollection& p);
std::vector<PrimitiveRelation> primitive_relations(const Fan& fan);

bool is_fano(const Fan& fan);
bool is_weak_fano(const Fan& fan);
/// Heuristic for a Fano contraction: some primitive relation sums to zero.
bool has_fiber_type_relation(const Fan& fan);

/// Same combinatorics with every ray replaced by g * ray. g must be unimodular.
Fan transform_fan(const Fan& fan, const IntegerMatrix& g);

}  // namespace toric
