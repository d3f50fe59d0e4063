#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace wittray {

using Point = std::vector<std::int64_t>;

Point add_points(const Point& a, const Point& b);
Point sub_points(const Point& a, const Point& b);
Point scale_point(const Point& a, std::int64_t k);
std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
bool is_zero_point(const Point& v);
/// gcd of the coordinates (0 for the zero vector).
std::int64_t coordinate_gcd(const Point& v);

/// Maximal cyclic submonoid N*v generated by a primitive element v.
struct Ray {
  Point primitive;

  friend auto operator<=>(const Ray&, const Ray&) = default;
};

/// A normal submonoid of Z^n with no invertible elements except 0, given
/// by cone inequalities {v : w_j . v >= 0} or by a finite generating set.
class AffineMonoid {
 public:
  enum class Representation { Inequalities, Generators };

  static constexpr std::int64_t kDefaultNormalityWindow = 16;

  static AffineMonoid from_inequalities(std::vector<Point> inequalities);
  /// Generator-given monoids are checked for pointedness exactly and for
  /// normality on the window ||v||_inf <= normality_window only.
  static AffineMonoid from_generators(std::vector<Point> generators,
                                      std::int64_t normality_window = kDefaultNormalityWindow);
  /// Both descriptions supplied; `authoritative` decides membership.
  static AffineMonoid from_both(std::vector<Point> inequalities, std::vector<Point> generators,
                                Representation authoritative,
                                std::int64_t normality_window = kDefaultNormalityWindow);
  /// N^n as the non-negative orthant.
  static AffineMonoid orthant(std::size_t n);

  std::size_t rank() const noexcept { return rank_; }
  Representation representation() const noexcept { return representation_; }
  const std::vector<Point>& inequalities() const noexcept { return inequalities_; }
  const std::vector<Point>& generators() const noexcept { return generators_; }

  bool contains(const Point& v) const;
  /// Membership in the real cone spanned by the monoid (exact rational test).
  bool in_cone(const Point& v) const;
  /// True when every inequality is strict at v (v in the relative interior
  /// for inequality monoids; for generator monoids, strictly positive on
  /// every facet of the spanned cone).
  bool in_interior(const Point& v) const;

  std::int64_t content(const Point& gamma) const;
  bool is_primitive(const Point& gamma) const;
  Ray ray_of(const Point& gamma) const;
  /// Reference definition of content: lcm{e : gamma in e*Gamma}, by search.
  std::int64_t content_by_divisors(const Point& gamma) const;

  /// Whether w . v > 0 on every nonzero member.
  bool is_positive_weight(const Point& w) const;
  /// Members v with w . v <= bound (w must be a positive weight).
  std::vector<Point> members_up_to(const Point& w, std::int64_t bound) const;

  /// Checks that the two descriptions agree on the box ||v||_inf <= window.
  bool descriptions_agree(std::int64_t window) const;

  friend bool operator==(const AffineMonoid& a, const AffineMonoid& b) {
    return a.rank_ == b.rank_ && a.representation_ == b.representation_ &&
           a.inequalities_ == b.inequalities_ && a.generators_ == b.generators_;
  }

 private:
  AffineMonoid() = default;
  void check_dimension(const Point& v) const;
  bool contains_by_generators(const Point& v) const;
  bool contains_by_inequalities(const Point& v) const;
  void derive_cone_data();
  void verify_generator_monoid(std::int64_t window) const;

  std::size_t rank_ = 0;
  Representation representation_ = Representation::Inequalities;
  std::vector<Point> inequalities_;
  std::vector<Point> generators_;
  // Derived data.
  std::vector<Point> extreme_rays_;   // of the real cone
  std::vector<Point> facet_normals_;  // integral, for generator monoids
  Point grading_;                     // strictly positive on nonzero members
  std::size_t cone_dimension_ = 0;
};

/// The ideal of Gamma generated by finitely many nonzero members.
class MonoidIdeal {
 public:
  MonoidIdeal(std::shared_ptr<const AffineMonoid> parent, std::vector<Point> generators);

  const AffineMonoid& parent() const noexcept { return *parent_; }
  const std::vector<Point>& generators() const noexcept { return generators_; }
  bool contains(const Point& gamma) const;

 private:
  std::shared_ptr<const AffineMonoid> parent_;
  std::vector<Point> generators_;
};

/// Finite subset of nonzero members of a monoid that is closed under
/// ray divisors (d*gamma in T implies gamma in T). Elements are stored in
/// (weight, lexicographic) order; the zero element is never stored.
class TruncationSet {
 public:
  struct RaySlice {
    Ray ray;
    std::vector<std::int64_t> multiples;  // sorted e with e*v in T
    std::vector<std::size_t> indices;     // element index of e*v
  };

  TruncationSet(std::shared_ptr<const AffineMonoid> monoid, Point weight, std::vector<Point> elements);

  /// Classical truncation set S of positive integers inside N.
  static std::shared_ptr<const TruncationSet> classical(std::vector<std::int64_t> s);

  const AffineMonoid& monoid() const noexcept { return *monoid_; }
  const std::shared_ptr<const AffineMonoid>& monoid_ptr() const noexcept { return monoid_; }
  const Point& weight() const noexcept { return weight_; }
  const std::vector<Point>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::optional<std::size_t> index_of(const Point& gamma) const;
  bool contains(const Point& gamma) const { return index_of(gamma).has_value(); }

  const std::vector<RaySlice>& rays() const noexcept { return slices_; }
  /// Slice index and multiple e for element i (gamma_i = e * v).
  std::pair<std::size_t, std::int64_t> ray_position(std::size_t i) const { return positions_[i]; }
  std::optional<std::size_t> slice_of(const Ray& ray) const;

  /// {gamma in T : m*gamma in T}.
  std::shared_ptr<const TruncationSet> divided_by(std::int64_t m) const;
  /// Subset cut out by a predicate; must remain divisor closed.
  bool is_subset_of(const TruncationSet& other) const;

  friend bool operator==(const TruncationSet& a, const TruncationSet& b) {
    return *a.monoid_ == *b.monoid_ && a.elements_ == b.elements_;
  }

 private:
  std::shared_ptr<const AffineMonoid> monoid_;
  Point weight_;
  std::vector<Point> elements_;
  std::map<Point, std::size_t> index_;
  std::vector<RaySlice> slices_;
  std::vector<std::pair<std::size_t, std::int64_t>> positions_;
};

using TruncationSetPtr = std::shared_ptr<const TruncationSet>;

/// Gamma / I cut at weight degree D: {gamma in Gamma \ I : w.gamma <= D}.
class TruncatedMonoid {
 public:
  TruncatedMonoid(std::shared_ptr<const AffineMonoid> parent, std::optional<MonoidIdeal> ideal, Point weight,
                  std::int64_t degree_bound);

  const AffineMonoid& parent() const noexcept { return *parent_; }
  const std::shared_ptr<const AffineMonoid>& parent_ptr() const noexcept { return parent_; }
  const std::optional<MonoidIdeal>& ideal() const noexcept { return ideal_; }
  const Point& weight() const noexcept { return weight_; }
  std::int64_t degree_bound() const noexcept { return degree_bound_; }
  std::int64_t degree(const Point& v) const { return dot(weight_, v); }

  /// Nonzero members in (weight, lexicographic) order.
  const std::vector<Point>& enumerate() const noexcept { return elements_->elements(); }
  const TruncationSetPtr& elements() const noexcept { return elements_; }
  bool contains(const Point& gamma) const;
  std::vector<Ray> rays() const;
  /// {e >= 1 : e*v in T}; throws unless v is a primitive member of Gamma.
  std::vector<std::int64_t> ray_truncation_set(const Ray& ray) const;
  bool ideal_contains(const Point& gamma) const;

 private:
  std::shared_ptr<const AffineMonoid> parent_;
  std::optional<MonoidIdeal> ideal_;
  Point weight_;
  std::int64_t degree_bound_;
  TruncationSetPtr elements_;
};

/// Sort key used everywhere: (weight degree, lexicographic).
bool weighted_less(const Point& w, const Point& a, const Point& b);

}  // namespace wittray
