#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "absorb/semigroup.hpp"
#include "absorb/splitmix64.hpp"

namespace absorb::setopt {

/// All arithmetic in this module is exact rational; no floating point.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

std::string rat_str(const Rat& r);          // "p" or "p/q"
Rat rat_parse(const std::string& text);

struct RatVec {
  std::vector<Rat> c;

  RatVec() = default;
  RatVec(Rat x, Rat y) { c = {std::move(x), std::move(y)}; }
  explicit RatVec(std::vector<Rat> coords) : c(std::move(coords)) {}

  std::size_t dim() const { return c.size(); }
  const Rat& operator[](std::size_t i) const { return c[i]; }
  Rat& operator[](std::size_t i) { return c[i]; }
  bool operator==(const RatVec&) const = default;
  bool is_zero() const;
  std::string str() const;  // "(x,y)" with no spaces
};

Rat dot(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& s, const RatVec& v);
RatVec negate(const RatVec& v);
bool lex_less(const RatVec& a, const RatVec& b);

// d = 2 helpers
Rat cross(const RatVec& a, const RatVec& b);
RatVec rot_left(const RatVec& v);   // 90 degrees counterclockwise
RatVec rot_right(const RatVec& v);  // 90 degrees clockwise
/// The unique primitive integer vector with the same direction.
RatVec primitive(const RatVec& v);

/// A closed convex cone in the plane in canonical form. Sector spans
/// counterclockwise from d1 to d2 with opening strictly between 0 and pi;
/// Halfplane(d1) is {z : cross(d1,z) >= 0}; Line(d1) is the span of d1 with
/// d1 the representative of angle within [0,pi). Directions are primitive,
/// so equal cones have equal representations.
class Cone {
 public:
  enum class Kind { Zero, Ray, Sector, Halfplane, Line, Full };

  static Cone zero();
  static Cone full();
  static Cone from_generators(const std::vector<RatVec>& rays);

  Kind kind() const { return kind_; }
  const RatVec& d1() const { return d1_; }
  const RatVec& d2() const { return d2_; }

  std::vector<RatVec> generators() const;
  bool contains(const RatVec& z) const;
  bool is_subset_of(const Cone& other) const;
  /// The dual cone {y : y.z >= 0 for all z in this cone}.
  Cone dual() const;

  bool operator==(const Cone&) const = default;
  std::string str() const;

 private:
  Kind kind_ = Kind::Zero;
  RatVec d1_;
  RatVec d2_;
};

/// An element of the conlinear semigroup over the plane: the empty set, the
/// full plane, or a nonempty polyhedron conv(points) + cone in canonical
/// V-form. Canonical means: the recession cone is in canonical form, and
/// the point list is the unique minimal one for the cone's kind (vertices
/// for line-free cones, the perpendicular foot of each boundary line for
/// halfplane and slab shapes), sorted lexicographically. Structural equality
/// therefore decides set equality.
class ConlinearElem {
 public:
  enum class Kind { Empty, Full, Poly };

  ConlinearElem() = default;

  static ConlinearElem empty_set(std::size_t d = 2);
  static ConlinearElem full_space(std::size_t d = 2);
  /// Canonicalizes conv(points) + cone(rays); requires d = 2 and at least
  /// one point. Callers keep the space invariant by including the rays of
  /// the ambient cone C among rays.
  static ConlinearElem poly(const std::vector<RatVec>& points, const std::vector<RatVec>& rays);

  Kind kind() const { return kind_; }
  std::size_t dim() const { return d_; }
  const std::vector<RatVec>& points() const { return points_; }
  const Cone& cone() const { return cone_; }

  bool operator==(const ConlinearElem&) const = default;
  std::string str() const;  // space-free label, e.g. conv{(1,0)}+cone{(1,0),(0,1)}

 private:
  Kind kind_ = Kind::Empty;
  std::size_t d_ = 2;
  std::vector<RatVec> points_;
  Cone cone_;
};

/// A ⊕ B = cl(A+B); for polyhedra the closure is the identity, so this is
/// the canonicalized Minkowski sum. The empty set absorbs, then the full
/// space absorbs among the rest.
ConlinearElem oplus(const ConlinearElem& a, const ConlinearElem& b);

struct SupportValue {
  enum class Kind { Finite, NegInfinity, PosInfinityEmpty };
  Kind kind;
  Rat value;  // meaningful for Finite

  bool operator==(const SupportValue&) const = default;
};

/// inf over A of y.a: the empty-marker for A = {}, negative infinity when a
/// recession ray descends along y, the minimum over points otherwise.
SupportValue support_inf(const ConlinearElem& a, const RatVec& y);

/// Raw V-representation support evaluation for any dimension; this and the
/// halfspace formula are the only operations offered beyond d = 2.
SupportValue support_inf_vrep(const std::vector<RatVec>& points, const std::vector<RatVec>& rays,
                              const RatVec& y);

/// The halfspace {z : y.z >= 0} as a semigroup element over the ambient
/// cone c; requires y in the dual cone of c.
ConlinearElem halfspace_elem(const Cone& c, const RatVec& y);

struct HalfspaceSum {
  ConlinearElem via_oplus;    // A ⊕ h_y^+ computed as a Minkowski sum
  ConlinearElem via_formula;  // {s z} + h_y^+, the plane, or the empty set
  SupportValue support;
  bool verdict;               // the two routes agree as canonical forms
};

/// Evaluates A ⊕ h_y^+ along both routes. Preconditions: y in C+\{0} and
/// y.z = 1 (NormalNotInDualCone, ZeroNormal, BadZ).
HalfspaceSum halfspace_oplus(const ConlinearElem& a, const Cone& c, const RatVec& y,
                             const RatVec& z);

/// A is idempotent iff it is the empty set, the plane, or a cone (canonical
/// point list {0}).
bool is_idempotent_cone(const ConlinearElem& a);

/// Rees comparison on idempotents: e1 <= e2 in the Rees order iff e1
/// contains e2 as a set. Throws NotIdempotent unless both are idempotent
/// and non-empty.
bool rees_superset(const ConlinearElem& e1, const ConlinearElem& e2);

/// b is a subset of a (exact).
bool contains(const ConlinearElem& a, const ConlinearElem& b);

struct HalfplaneConstraint {
  RatVec normal;  // primitive
  Rat rhs;        // constraint normal.z >= rhs
};

/// A complete supporting description of a (every facet appears; degenerate
/// shapes carry both orientations of their carrier line). Requires a
/// non-empty element.
std::vector<HalfplaneConstraint> h_representation(const ConlinearElem& a);

/// Intersection of halfplanes as a canonical element (possibly Empty or
/// Full for an empty constraint list).
ConlinearElem from_h_representation(const std::vector<HalfplaneConstraint>& constraints);

/// Builds the Cayley table of a finite family closed under ⊕, with labels
/// from the canonical renderings. Throws NotClosed with a witness pair, or
/// BadParameter when elements repeat.
FiniteSemigroup materialize(const std::vector<ConlinearElem>& elems);

/// Verifies ({sz}+h) ⊕ ({tz}+h) = {(s+t)z}+h over all sample pairs plus the
/// neutral (s = 0) and inverse (s, -s) identities. Returns true when every
/// identity holds.
bool translate_group_check(const Cone& c, const RatVec& y, const RatVec& z,
                           const std::vector<Rat>& s_samples);

struct DualityResult {
  ConlinearElem reconstruction;  // intersection of A ⊕ h_y^+ over supports
  bool normals_in_dual;          // every support normal lay in C+
  bool verdict;                  // reconstruction == A
};

/// The reconstruction A = sup over quasi-primitive halfspaces of A ⊕ h_y^+,
/// evaluated with the supporting normals of A (sup in the reverse-inclusion
/// order is intersection). Requires a poly element in the plane.
DualityResult duality_reconstruct(const ConlinearElem& a, const Cone& c);

/// Instance files: {"d":2,"C":{"rays":[["1","0"],...]},"elements":[...]}
/// with rationals as "p/q" strings and element kinds empty/full/poly.
struct Instance {
  std::size_t d = 2;
  Cone c;
  std::vector<ConlinearElem> elements;
};

Instance parse_instance(const std::string& text);
std::string write_instance(const Instance& instance);
Instance load_instance_file(const std::string& path);

// Seeded generators for randomized verification runs.
Cone random_ambient_cone(SplitMix64& rng);
ConlinearElem random_poly(SplitMix64& rng, const Cone& c);
RatVec random_dual_normal(SplitMix64& rng, const Cone& c);
/// Some z with y.z = 1.
RatVec unit_pairing(const RatVec& y);

}  // namespace absorb::setopt
