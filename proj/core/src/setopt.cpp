#include "absorb/setopt.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "absorb/errors.hpp"

namespace absorb::setopt {

std::string rat_str(const Rat& r) {
  Int num = numerator(r), den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat rat_parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw BadParameter("rational with zero denominator: " + text);
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw BadParameter("bad rational: " + text);
  }
}

bool RatVec::is_zero() const {
  for (const Rat& x : c) {
    if (x != 0) return false;
  }
  return true;
}

std::string RatVec::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i != 0) out += ",";
    out += rat_str(c[i]);
  }
  return out + ")";
}

namespace {
void check_dims(const RatVec& a, const RatVec& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
}
void check_2d(const RatVec& v) {
  if (v.dim() != 2) throw DimensionUnsupported(v.dim());
}
}  // namespace

Rat dot(const RatVec& a, const RatVec& b) {
  check_dims(a, b);
  Rat out = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) out += a[i] * b[i];
  return out;
}

RatVec add(const RatVec& a, const RatVec& b) {
  check_dims(a, b);
  RatVec out = a;
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] += b[i];
  return out;
}

RatVec scale(const Rat& s, const RatVec& v) {
  RatVec out = v;
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] *= s;
  return out;
}

RatVec negate(const RatVec& v) { return scale(Rat(-1), v); }

bool lex_less(const RatVec& a, const RatVec& b) {
  for (std::size_t i = 0; i < std::min(a.dim(), b.dim()); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.dim() < b.dim();
}

Rat cross(const RatVec& a, const RatVec& b) {
  check_2d(a);
  check_2d(b);
  return a[0] * b[1] - a[1] * b[0];
}

RatVec rot_left(const RatVec& v) {
  check_2d(v);
  return RatVec(-v[1], v[0]);
}

RatVec rot_right(const RatVec& v) {
  check_2d(v);
  return RatVec(v[1], -v[0]);
}

RatVec primitive(const RatVec& v) {
  check_2d(v);
  if (v.is_zero()) throw BadParameter("zero vector has no direction");
  Int l = lcm(denominator(v[0]), denominator(v[1]));
  Int a = numerator(v[0]) * (l / denominator(v[0]));
  Int b = numerator(v[1]) * (l / denominator(v[1]));
  Int g = gcd(abs(a), abs(b));
  return RatVec(Rat(a / g), Rat(b / g));
}

namespace {

// 0 for directions with angle in [0,pi), 1 for [pi,2pi)
int angular_half(const RatVec& v) {
  if (v[1] > 0 || (v[1] == 0 && v[0] > 0)) return 0;
  return 1;
}

bool angle_less(const RatVec& u, const RatVec& v) {
  int hu = angular_half(u), hv = angular_half(v);
  if (hu != hv) return hu < hv;
  return cross(u, v) > 0;
}

}  // namespace

Cone Cone::zero() { return Cone{}; }

Cone Cone::full() {
  Cone c;
  c.kind_ = Kind::Full;
  return c;
}

Cone Cone::from_generators(const std::vector<RatVec>& rays) {
  std::vector<RatVec> dirs;
  for (const RatVec& r : rays) {
    check_2d(r);
    if (r.is_zero()) continue;
    RatVec p = primitive(r);
    if (std::find(dirs.begin(), dirs.end(), p) == dirs.end()) dirs.push_back(p);
  }
  Cone c;
  if (dirs.empty()) return c;  // Zero
  if (dirs.size() == 1) {
    c.kind_ = Kind::Ray;
    c.d1_ = dirs[0];
    return c;
  }
  std::sort(dirs.begin(), dirs.end(), angle_less);
  std::size_t m = dirs.size();
  // classify the cyclic gaps between consecutive directions
  for (std::size_t i = 0; i < m; ++i) {
    const RatVec& u = dirs[i];
    const RatVec& v = dirs[(i + 1) % m];
    if (cross(u, v) < 0) {  // gap wider than pi: pointed cone from v around to u
      c.kind_ = Kind::Sector;
      c.d1_ = v;
      c.d2_ = u;
      return c;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    const RatVec& u = dirs[i];
    const RatVec& v = dirs[(i + 1) % m];
    if (cross(u, v) == 0 && dot(u, v) < 0) {  // gap of exactly pi
      if (m == 2) {
        c.kind_ = Kind::Line;
        c.d1_ = angular_half(dirs[0]) == 0 ? dirs[0] : dirs[1];
        return c;
      }
      c.kind_ = Kind::Halfplane;
      c.d1_ = v;
      return c;
    }
  }
  c.kind_ = Kind::Full;
  return c;
}

std::vector<RatVec> Cone::generators() const {
  switch (kind_) {
    case Kind::Zero: return {};
    case Kind::Ray: return {d1_};
    case Kind::Sector: return {d1_, d2_};
    case Kind::Halfplane: return {d1_, negate(d1_), rot_left(d1_)};
    case Kind::Line: return {d1_, negate(d1_)};
    case Kind::Full:
      return {RatVec(Rat(1), Rat(0)), RatVec(Rat(0), Rat(1)), RatVec(Rat(-1), Rat(0)),
              RatVec(Rat(0), Rat(-1))};
  }
  return {};
}

bool Cone::contains(const RatVec& z) const {
  check_2d(z);
  switch (kind_) {
    case Kind::Zero: return z.is_zero();
    case Kind::Ray: return z.is_zero() || (cross(d1_, z) == 0 && dot(d1_, z) > 0);
    case Kind::Sector: return cross(d1_, z) >= 0 && cross(d2_, z) <= 0;
    case Kind::Halfplane: return cross(d1_, z) >= 0;
    case Kind::Line: return cross(d1_, z) == 0;
    case Kind::Full: return true;
  }
  return false;
}

bool Cone::is_subset_of(const Cone& other) const {
  for (const RatVec& g : generators()) {
    if (!other.contains(g)) return false;
  }
  return true;
}

Cone Cone::dual() const {
  Cone c;
  switch (kind_) {
    case Kind::Zero: return full();
    case Kind::Full: return zero();
    case Kind::Ray:
      c.kind_ = Kind::Halfplane;
      c.d1_ = rot_right(d1_);
      return c;
    case Kind::Halfplane:
      c.kind_ = Kind::Ray;
      c.d1_ = rot_left(d1_);
      return c;
    case Kind::Sector:
      c.kind_ = Kind::Sector;
      c.d1_ = rot_right(d2_);
      c.d2_ = rot_left(d1_);
      return c;
    case Kind::Line: {
      c.kind_ = Kind::Line;
      RatVec d = rot_left(d1_);
      c.d1_ = angular_half(d) == 0 ? d : negate(d);
      return c;
    }
  }
  return c;
}

std::string Cone::str() const {
  switch (kind_) {
    case Kind::Zero: return "{0}";
    case Kind::Ray: return "ray{" + d1_.str() + "}";
    case Kind::Sector: return "cone{" + d1_.str() + "," + d2_.str() + "}";
    case Kind::Halfplane: return "h+{" + rot_left(d1_).str() + "}";
    case Kind::Line: return "line{" + d1_.str() + "}";
    case Kind::Full: return "R^2";
  }
  return "?";
}

namespace {

// Andrew monotone chain; returns the hull vertex cycle counterclockwise with
// collinear middle points dropped. One or two points come back unchanged
// (after dedup).
std::vector<RatVec> convex_hull(std::vector<RatVec> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  auto build = [&](auto begin, auto end) {
    std::vector<RatVec> chain;
    for (auto it = begin; it != end; ++it) {
      while (chain.size() >= 2) {
        RatVec a = chain[chain.size() - 2], b = chain.back();
        RatVec ab(b[0] - a[0], b[1] - a[1]);
        RatVec ac((*it)[0] - a[0], (*it)[1] - a[1]);
        if (cross(ab, ac) <= 0) {
          chain.pop_back();
        } else {
          break;
        }
      }
      chain.push_back(*it);
    }
    return chain;
  };
  std::vector<RatVec> lower = build(pts.begin(), pts.end());
  std::vector<RatVec> upper = build(pts.rbegin(), pts.rend());
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

struct RatVecLess {
  bool operator()(const RatVec& a, const RatVec& b) const { return lex_less(a, b); }
};

// Valid supporting constraints of conv(pts) + cone for a line-free cone:
// the dual cone's generator directions (which for a ray cone include the
// ray itself) plus every hull edge normal lying in the dual cone. Complete:
// every facet normal of the polyhedron appears.
std::vector<HalfplaneConstraint> line_free_supports(const std::vector<RatVec>& pts,
                                                    const Cone& cone) {
  std::vector<RatVec> hull = convex_hull(pts);
  Cone dual = cone.dual();
  std::vector<RatVec> candidates;
  auto push = [&](const RatVec& y) {
    RatVec p = primitive(y);
    if (std::find(candidates.begin(), candidates.end(), p) == candidates.end())
      candidates.push_back(p);
  };
  if (cone.kind() != Cone::Kind::Zero) {
    for (const RatVec& g : dual.generators()) push(g);
  }
  std::size_t m = hull.size();
  if (m >= 2) {
    for (std::size_t i = 0; i < m; ++i) {
      const RatVec& u = hull[i];
      const RatVec& v = hull[(i + 1) % m];
      if (u == v) continue;
      RatVec edge(v[0] - u[0], v[1] - u[1]);
      RatVec normal = rot_left(edge);
      if (dual.contains(normal)) push(normal);
      if (m == 2 && dual.contains(negate(normal))) push(negate(normal));
    }
  } else if (cone.kind() == Cone::Kind::Zero) {
    // a single bounded point is pinned by the four axis directions
    push(RatVec(Rat(1), Rat(0)));
    push(RatVec(Rat(-1), Rat(0)));
    push(RatVec(Rat(0), Rat(1)));
    push(RatVec(Rat(0), Rat(-1)));
  }
  if (m == 2 && cone.kind() == Cone::Kind::Zero) {
    // segment end caps along the carrier direction
    RatVec t(hull[1][0] - hull[0][0], hull[1][1] - hull[0][1]);
    push(t);
    push(negate(t));
  }
  std::vector<HalfplaneConstraint> out;
  for (const RatVec& y : candidates) {
    Rat best = dot(y, hull[0]);
    for (const RatVec& p : hull) best = std::min(best, dot(y, p));
    out.push_back({y, best});
  }
  return out;
}

// Feasible pairwise intersections of constraint boundaries: exactly the
// vertex set of the constraints' polyhedron when it is line-free.
std::vector<RatVec> constraint_vertices(const std::vector<HalfplaneConstraint>& cs) {
  std::vector<RatVec> out;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      Rat det = cross(cs[i].normal, cs[j].normal);
      if (det == 0) continue;
      const RatVec& y1 = cs[i].normal;
      const RatVec& y2 = cs[j].normal;
      Rat c1 = cs[i].rhs, c2 = cs[j].rhs;
      RatVec z((c1 * y2[1] - c2 * y1[1]) / det, (y1[0] * c2 - y2[0] * c1) / det);
      bool feasible = true;
      for (const auto& c : cs) {
        if (dot(c.normal, z) < c.rhs) {
          feasible = false;
          break;
        }
      }
      if (feasible && std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
    }
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace

ConlinearElem ConlinearElem::empty_set(std::size_t d) {
  ConlinearElem e;
  e.kind_ = Kind::Empty;
  e.d_ = d;
  return e;
}

ConlinearElem ConlinearElem::full_space(std::size_t d) {
  ConlinearElem e;
  e.kind_ = Kind::Full;
  e.d_ = d;
  return e;
}

ConlinearElem ConlinearElem::poly(const std::vector<RatVec>& points,
                                  const std::vector<RatVec>& rays) {
  if (points.empty()) throw BadParameter("a poly element needs at least one point");
  for (const RatVec& p : points) check_2d(p);
  Cone cone = Cone::from_generators(rays);
  if (cone.kind() == Cone::Kind::Full) return full_space(2);

  ConlinearElem e;
  e.kind_ = Kind::Poly;
  e.d_ = 2;
  e.cone_ = cone;

  if (cone.kind() == Cone::Kind::Halfplane) {
    // conv(points) + halfplane is a translated halfplane; the canonical
    // point is the perpendicular foot of the boundary line.
    const RatVec& dir = cone.d1();
    Rat c = cross(dir, points[0]);
    for (const RatVec& p : points) c = std::min(c, cross(dir, p));
    e.points_ = {scale(c / dot(dir, dir), rot_left(dir))};
    return e;
  }
  if (cone.kind() == Cone::Kind::Line) {
    const RatVec& dir = cone.d1();
    Rat lo = cross(dir, points[0]), hi = lo;
    for (const RatVec& p : points) {
      Rat v = cross(dir, p);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    RatVec foot = rot_left(dir);
    Rat norm = dot(dir, dir);
    e.points_ = {scale(lo / norm, foot)};
    if (hi != lo) e.points_.push_back(scale(hi / norm, foot));
    std::sort(e.points_.begin(), e.points_.end(), lex_less);
    return e;
  }

  std::vector<RatVec> hull = convex_hull(points);
  if (cone.kind() == Cone::Kind::Zero) {
    std::sort(hull.begin(), hull.end(), lex_less);
    e.points_ = std::move(hull);
    return e;
  }
  // Ray or Sector: vertices of the polyhedron via its supporting constraints
  e.points_ = constraint_vertices(line_free_supports(hull, cone));
  if (e.points_.empty()) throw Error("internal: line-free polyhedron lost its vertices");
  return e;
}

std::string ConlinearElem::str() const {
  switch (kind_) {
    case Kind::Empty: return "{}";
    case Kind::Full: return "R^2";
    case Kind::Poly: break;
  }
  bool at_origin = points_.size() == 1 && points_[0].is_zero();
  if (at_origin && cone_.kind() != Cone::Kind::Zero) return cone_.str();
  std::string out = "conv{";
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i != 0) out += ",";
    out += points_[i].str();
  }
  out += "}";
  if (cone_.kind() != Cone::Kind::Zero) out += "+" + cone_.str();
  return out;
}

ConlinearElem oplus(const ConlinearElem& a, const ConlinearElem& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
  if (a.kind() == ConlinearElem::Kind::Empty || b.kind() == ConlinearElem::Kind::Empty)
    return ConlinearElem::empty_set(a.dim());
  if (a.kind() == ConlinearElem::Kind::Full || b.kind() == ConlinearElem::Kind::Full)
    return ConlinearElem::full_space(a.dim());
  if (a.dim() != 2) throw DimensionUnsupported(a.dim());
  std::vector<RatVec> points;
  for (const RatVec& p : a.points()) {
    for (const RatVec& q : b.points()) points.push_back(add(p, q));
  }
  std::vector<RatVec> rays = a.cone().generators();
  for (const RatVec& r : b.cone().generators()) rays.push_back(r);
  return ConlinearElem::poly(points, rays);
}

SupportValue support_inf_vrep(const std::vector<RatVec>& points, const std::vector<RatVec>& rays,
                              const RatVec& y) {
  if (y.is_zero()) throw ZeroNormal();
  if (points.empty()) return {SupportValue::Kind::PosInfinityEmpty, 0};
  for (const RatVec& r : rays) {
    if (dot(y, r) < 0) return {SupportValue::Kind::NegInfinity, 0};
  }
  Rat best = dot(y, points[0]);
  for (const RatVec& p : points) best = std::min(best, dot(y, p));
  return {SupportValue::Kind::Finite, best};
}

SupportValue support_inf(const ConlinearElem& a, const RatVec& y) {
  if (y.is_zero()) throw ZeroNormal();
  switch (a.kind()) {
    case ConlinearElem::Kind::Empty: return {SupportValue::Kind::PosInfinityEmpty, 0};
    case ConlinearElem::Kind::Full: return {SupportValue::Kind::NegInfinity, 0};
    case ConlinearElem::Kind::Poly: break;
  }
  return support_inf_vrep(a.points(), a.cone().generators(), y);
}

ConlinearElem halfspace_elem(const Cone& c, const RatVec& y) {
  if (y.is_zero()) throw ZeroNormal();
  if (!c.dual().contains(y)) throw NormalNotInDualCone();
  Cone half = Cone::from_generators({rot_right(y), rot_left(y), negate(rot_right(y))});
  std::vector<RatVec> rays = half.generators();
  for (const RatVec& g : c.generators()) rays.push_back(g);
  return ConlinearElem::poly({RatVec(Rat(0), Rat(0))}, rays);
}

HalfspaceSum halfspace_oplus(const ConlinearElem& a, const Cone& c, const RatVec& y,
                             const RatVec& z) {
  if (y.is_zero()) throw ZeroNormal();
  if (!c.dual().contains(y)) throw NormalNotInDualCone();
  if (dot(y, z) != 1) throw BadZ();

  ConlinearElem h = halfspace_elem(c, y);
  HalfspaceSum out;
  out.via_oplus = oplus(a, h);
  out.support = support_inf(a, y);
  switch (out.support.kind) {
    case SupportValue::Kind::PosInfinityEmpty:
      out.via_formula = ConlinearElem::empty_set(a.dim());
      break;
    case SupportValue::Kind::NegInfinity:
      out.via_formula = ConlinearElem::full_space(a.dim());
      break;
    case SupportValue::Kind::Finite: {
      std::vector<RatVec> rays = h.cone().generators();
      out.via_formula = ConlinearElem::poly({scale(out.support.value, z)}, rays);
      break;
    }
  }
  out.verdict = out.via_oplus == out.via_formula;
  return out;
}

bool is_idempotent_cone(const ConlinearElem& a) {
  if (a.kind() != ConlinearElem::Kind::Poly) return true;  // empty set and plane
  return a.points().size() == 1 && a.points()[0].is_zero();
}

bool rees_superset(const ConlinearElem& e1, const ConlinearElem& e2) {
  if (!is_idempotent_cone(e1) || e1.kind() == ConlinearElem::Kind::Empty)
    throw NotIdempotent("left operand of the Rees comparison");
  if (!is_idempotent_cone(e2) || e2.kind() == ConlinearElem::Kind::Empty)
    throw NotIdempotent("right operand of the Rees comparison");
  return contains(e1, e2);
}

std::vector<HalfplaneConstraint> h_representation(const ConlinearElem& a) {
  if (a.kind() == ConlinearElem::Kind::Empty)
    throw PreconditionViolated("the empty set has no supporting description");
  if (a.kind() == ConlinearElem::Kind::Full) return {};
  const Cone& cone = a.cone();
  const std::vector<RatVec>& pts = a.points();
  switch (cone.kind()) {
    case Cone::Kind::Halfplane: {
      RatVec y = primitive(rot_left(cone.d1()));
      return {{y, dot(y, pts[0])}};
    }
    case Cone::Kind::Line: {
      RatVec y = primitive(rot_left(cone.d1()));
      Rat lo = dot(y, pts[0]), hi = lo;
      for (const RatVec& p : pts) {
        Rat v = dot(y, p);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      return {{y, lo}, {negate(y), -hi}};
    }
    default: return line_free_supports(pts, cone);
  }
}

ConlinearElem from_h_representation(const std::vector<HalfplaneConstraint>& constraints) {
  // tightest constraint per primitive normal direction
  std::map<RatVec, Rat, RatVecLess> tight;
  for (const auto& c : constraints) {
    if (c.normal.is_zero()) throw ZeroNormal();
    RatVec y = primitive(c.normal);
    // scale rhs to the primitive normal: c.normal = s*y with s > 0
    std::size_t i = y[0] != 0 ? 0 : 1;
    Rat s = c.normal[i] / y[i];
    Rat rhs = c.rhs / s;
    auto it = tight.find(y);
    if (it == tight.end()) {
      tight.emplace(y, rhs);
    } else {
      it->second = std::max(it->second, rhs);
    }
  }
  if (tight.empty()) return ConlinearElem::full_space(2);

  std::vector<HalfplaneConstraint> cs;
  std::vector<RatVec> normals;
  for (const auto& [y, rhs] : tight) {
    cs.push_back({y, rhs});
    normals.push_back(y);
  }
  Cone normal_cone = Cone::from_generators(normals);
  Cone rec = normal_cone.dual();

  if (normal_cone.kind() == Cone::Kind::Ray) {
    const RatVec& y = cs[0].normal;
    RatVec boundary_pt = scale(cs[0].rhs / dot(y, y), y);
    return ConlinearElem::poly({boundary_pt}, rec.generators());
  }
  if (normal_cone.kind() == Cone::Kind::Line) {
    // exactly the pair {y, -y}: a slab, a line, or nothing
    const RatVec& y = cs[0].normal;
    Rat c1 = cs[0].rhs, c2 = cs[1].rhs;
    if (c1 > -c2) return ConlinearElem::empty_set(2);
    Rat norm = dot(y, y);
    std::vector<RatVec> pts = {scale(c1 / norm, y), scale(-c2 / norm, y)};
    return ConlinearElem::poly(pts, rec.generators());
  }
  std::vector<RatVec> vertices = constraint_vertices(cs);
  if (vertices.empty()) return ConlinearElem::empty_set(2);
  return ConlinearElem::poly(vertices, rec.generators());
}

bool contains(const ConlinearElem& a, const ConlinearElem& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
  if (b.kind() == ConlinearElem::Kind::Empty) return true;
  if (a.kind() == ConlinearElem::Kind::Empty) return false;
  if (a.kind() == ConlinearElem::Kind::Full) return true;
  if (b.kind() == ConlinearElem::Kind::Full) return false;
  for (const auto& c : h_representation(a)) {
    for (const RatVec& p : b.points()) {
      if (dot(c.normal, p) < c.rhs) return false;
    }
    for (const RatVec& r : b.cone().generators()) {
      if (dot(c.normal, r) < 0) return false;
    }
  }
  return true;
}

FiniteSemigroup materialize(const std::vector<ConlinearElem>& elems) {
  std::size_t n = elems.size();
  if (n == 0) throw BadParameter("materialize needs at least one element");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (elems[i] == elems[j]) throw BadParameter("materialize needs distinct elements");
    }
  }
  std::vector<FiniteSemigroup::elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ConlinearElem sum = oplus(elems[i], elems[j]);
      std::size_t k = 0;
      while (k < n && !(elems[k] == sum)) ++k;
      if (k == n) throw NotClosed(i, j);
      table[i * n + j] = static_cast<FiniteSemigroup::elem>(k);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& e : elems) labels.push_back(e.str());
  return FiniteSemigroup::validate_packed(n, std::move(table), std::move(labels));
}

bool translate_group_check(const Cone& c, const RatVec& y, const RatVec& z,
                           const std::vector<Rat>& s_samples) {
  if (y.is_zero()) throw ZeroNormal();
  if (!c.dual().contains(y)) throw NormalNotInDualCone();
  if (dot(y, z) != 1) throw BadZ();
  ConlinearElem h = halfspace_elem(c, y);
  auto translate = [&](const Rat& s) {
    return ConlinearElem::poly({scale(s, z)}, h.cone().generators());
  };
  if (!(translate(Rat(0)) == h)) return false;
  for (const Rat& s : s_samples) {
    if (!(oplus(translate(s), translate(-s)) == h)) return false;
    for (const Rat& t : s_samples) {
      if (!(oplus(translate(s), translate(t)) == translate(s + t))) return false;
    }
  }
  return true;
}

DualityResult duality_reconstruct(const ConlinearElem& a, const Cone& c) {
  if (a.dim() != 2) throw DimensionUnsupported(a.dim());
  if (a.kind() != ConlinearElem::Kind::Poly)
    throw PreconditionViolated("duality reconstruction expects a poly element");
  DualityResult out;
  out.normals_in_dual = true;
  Cone dual = c.dual();
  std::vector<HalfplaneConstraint> translated;
  for (const auto& support : h_representation(a)) {
    if (!dual.contains(support.normal)) out.normals_in_dual = false;
    // A ⊕ h_y^+ = {z : y.z >= inf_A y}; the support rhs is that infimum
    translated.push_back(support);
  }
  out.reconstruction = from_h_representation(translated);
  out.verdict = out.reconstruction == a;
  return out;
}

namespace {

RatVec vec_from_json(const nlohmann::json& j) {
  std::vector<Rat> coords;
  for (const auto& item : j) {
    if (item.is_string()) {
      coords.push_back(rat_parse(item.get<std::string>()));
    } else {
      coords.push_back(Rat(item.get<long long>()));
    }
  }
  return RatVec(std::move(coords));
}

nlohmann::json vec_to_json(const RatVec& v) {
  std::vector<std::string> out;
  for (const Rat& x : v.c) out.push_back(rat_str(x));
  return out;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw BadParameter(std::string("invalid JSON: ") + e.what());
  }
  Instance inst;
  inst.d = j.value("d", 2);
  if (inst.d != 2) throw DimensionUnsupported(inst.d);
  std::vector<RatVec> c_rays;
  if (j.contains("C")) {
    for (const auto& ray : j.at("C").at("rays")) c_rays.push_back(vec_from_json(ray));
  }
  inst.c = Cone::from_generators(c_rays);
  std::vector<RatVec> ambient = inst.c.generators();
  if (!j.contains("elements")) throw BadParameter("instance needs \"elements\"");
  for (const auto& ej : j.at("elements")) {
    std::string kind = ej.at("kind").get<std::string>();
    if (kind == "empty") {
      inst.elements.push_back(ConlinearElem::empty_set(2));
    } else if (kind == "full") {
      inst.elements.push_back(ConlinearElem::full_space(2));
    } else if (kind == "poly") {
      std::vector<RatVec> points;
      for (const auto& p : ej.at("points")) points.push_back(vec_from_json(p));
      std::vector<RatVec> rays = ambient;
      if (ej.contains("rays")) {
        for (const auto& r : ej.at("rays")) rays.push_back(vec_from_json(r));
      }
      inst.elements.push_back(ConlinearElem::poly(points, rays));
    } else {
      throw BadParameter("unknown element kind: " + kind);
    }
  }
  return inst;
}

std::string write_instance(const Instance& instance) {
  nlohmann::ordered_json j;
  j["d"] = instance.d;
  nlohmann::ordered_json c;
  std::vector<nlohmann::json> c_rays;
  for (const RatVec& g : instance.c.generators()) c_rays.push_back(vec_to_json(g));
  c["rays"] = c_rays;
  j["C"] = c;
  std::vector<nlohmann::ordered_json> elems;
  for (const auto& e : instance.elements) {
    nlohmann::ordered_json ej;
    switch (e.kind()) {
      case ConlinearElem::Kind::Empty: ej["kind"] = "empty"; break;
      case ConlinearElem::Kind::Full: ej["kind"] = "full"; break;
      case ConlinearElem::Kind::Poly: {
        ej["kind"] = "poly";
        std::vector<nlohmann::json> pts;
        for (const RatVec& p : e.points()) pts.push_back(vec_to_json(p));
        ej["points"] = pts;
        std::vector<nlohmann::json> rays;
        for (const RatVec& r : e.cone().generators()) rays.push_back(vec_to_json(r));
        ej["rays"] = rays;
        break;
      }
    }
    elems.push_back(std::move(ej));
  }
  j["elements"] = elems;
  return j.dump();
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

Cone random_ambient_cone(SplitMix64& rng) {
  switch (rng.below(4)) {
    case 0: return Cone::from_generators({RatVec(Rat(1), Rat(0)), RatVec(Rat(0), Rat(1))});
    case 1: return Cone::from_generators({RatVec(Rat(2), Rat(-1)), RatVec(Rat(1), Rat(2))});
    case 2: return Cone::from_generators({RatVec(Rat(1), Rat(1)), RatVec(Rat(-1), Rat(2))});
    default: return Cone::from_generators({RatVec(Rat(3), Rat(1)), RatVec(Rat(1), Rat(3))});
  }
}

namespace {
Rat small_rat(SplitMix64& rng) {
  long long num = static_cast<long long>(rng.below(13)) - 6;
  long long den = 1 + static_cast<long long>(rng.below(3));
  return Rat(num, den);
}
}  // namespace

ConlinearElem random_poly(SplitMix64& rng, const Cone& c) {
  std::size_t count = 1 + rng.below(4);
  std::vector<RatVec> points;
  for (std::size_t i = 0; i < count; ++i) points.push_back(RatVec(small_rat(rng), small_rat(rng)));
  std::vector<RatVec> rays = c.generators();
  if (rng.below(4) == 0) {
    static const RatVec extras[] = {RatVec(Rat(1), Rat(-2)), RatVec(Rat(2), Rat(-1)),
                                    RatVec(Rat(-1), Rat(2)), RatVec(Rat(-2), Rat(1)),
                                    RatVec(Rat(1), Rat(1))};
    rays.push_back(extras[rng.below(5)]);
  }
  return ConlinearElem::poly(points, rays);
}

RatVec random_dual_normal(SplitMix64& rng, const Cone& c) {
  std::vector<RatVec> gens = c.dual().generators();
  if (gens.empty()) throw BadParameter("dual cone is trivial; no normals to sample");
  for (;;) {
    RatVec y(Rat(0), Rat(0));
    for (const RatVec& g : gens) y = add(y, scale(Rat(static_cast<long long>(rng.below(4))), g));
    if (!y.is_zero()) return y;
  }
}

RatVec unit_pairing(const RatVec& y) {
  if (y.is_zero()) throw ZeroNormal();
  if (y[0] != 0) return RatVec(Rat(1) / y[0], Rat(0));
  return RatVec(Rat(0), Rat(1) / y[1]);
}

}  // namespace absorb::setopt
