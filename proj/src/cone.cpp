#include "toricfan/cone.hpp"

#include "toricfan/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <utility>

namespace toricfan {

BoxSpec::BoxSpec(long radius) : radius_(radius) {
  if (radius < 1) throw Error(ErrorCode::InvalidArgument, "box radius must be >= 1");
}

bool BoxSpec::contains(const LatticeVector& a) const {
  for (const auto& c : a) {
    if (c > radius_ || c < -radius_) return false;
  }
  return true;
}

void BoxSpec::for_each_point(std::size_t dim,
                             const std::function<void(const LatticeVector&)>& fn) const {
  LatticeVector p(dim, -radius_);
  if (dim == 0) {
    fn(p);
    return;
  }
  while (true) {
    fn(p);
    std::size_t i = dim;
    while (i > 0) {
      --i;
      if (p[i] < radius_) {
        p[i] += 1;
        break;
      }
      p[i] = -radius_;
      if (i == 0) return;
    }
  }
}

// ---------------------------------------------------------------------------
// Double description

namespace {

struct DdRay {
  RationalVector coords;
  std::vector<bool> zero;  // indexed by constraint row; only processed rows meaningful
};

RationalVector normalized(const RationalVector& v) { return to_rational(primitive_integer(v)); }

Rational eval(const RationalVector& row, const RationalVector& z) {
  Rational s = 0;
  for (std::size_t i = 0; i < z.size(); ++i) s += row[i] * z[i];
  return s;
}

}  // namespace

std::vector<LatticeVector> extreme_rays(const RationalMatrix& rows, std::size_t cols) {
  if (cols == 0) return {};
  const std::size_t m = rows.size();
  auto basis_rows = independent_rows(rows);
  if (basis_rows.size() != cols) {
    throw Error(ErrorCode::Internal, "extreme_rays: constraint matrix lacks full column rank");
  }

  // The simplicial cone cut out by the basis rows has the columns of the
  // inverse as its extreme rays.
  RationalMatrix base;
  for (auto r : basis_rows) base.push_back(rows[r]);
  RationalMatrix inv = inverse(base);

  std::vector<bool> processed(m, false);
  for (auto r : basis_rows) processed[r] = true;

  std::vector<DdRay> current;
  for (std::size_t j = 0; j < cols; ++j) {
    DdRay ray;
    ray.coords.resize(cols);
    for (std::size_t i = 0; i < cols; ++i) ray.coords[i] = inv[i][j];
    ray.coords = normalized(ray.coords);
    ray.zero.assign(m, false);
    for (std::size_t k = 0; k < cols; ++k) {
      if (k != j) ray.zero[basis_rows[k]] = true;
    }
    current.push_back(std::move(ray));
  }

  for (std::size_t h = 0; h < m; ++h) {
    if (processed[h]) continue;
    std::vector<Rational> values(current.size());
    std::vector<std::size_t> pos, neg, zer;
    for (std::size_t i = 0; i < current.size(); ++i) {
      values[i] = eval(rows[h], current[i].coords);
      int s = sgn(values[i]);
      if (s > 0) pos.push_back(i);
      else if (s < 0) neg.push_back(i);
      else zer.push_back(i);
    }

    std::vector<DdRay> next;
    for (auto i : pos) next.push_back(current[i]);
    for (auto i : zer) {
      next.push_back(current[i]);
      next.back().zero[h] = true;
    }

    for (auto p : pos) {
      for (auto n : neg) {
        std::vector<bool> common(m, false);
        std::size_t common_count = 0;
        for (std::size_t r = 0; r < m; ++r) {
          if (processed[r] && current[p].zero[r] && current[n].zero[r]) {
            common[r] = true;
            ++common_count;
          }
        }
        if (common_count + 2 < cols) continue;
        bool adjacent = true;
        for (std::size_t q = 0; q < current.size() && adjacent; ++q) {
          if (q == p || q == n) continue;
          bool contains_all = true;
          for (std::size_t r = 0; r < m; ++r) {
            if (common[r] && !current[q].zero[r]) {
              contains_all = false;
              break;
            }
          }
          if (contains_all) adjacent = false;
        }
        if (!adjacent) continue;

        DdRay ray;
        ray.coords.resize(cols);
        const Rational& vp = values[p];
        const Rational& vn = values[n];
        for (std::size_t i = 0; i < cols; ++i) {
          ray.coords[i] = vp * current[n].coords[i] - vn * current[p].coords[i];
        }
        ray.coords = normalized(ray.coords);
        ray.zero = std::move(common);
        ray.zero[h] = true;
        next.push_back(std::move(ray));
      }
    }
    processed[h] = true;
    current = std::move(next);
  }

  std::vector<LatticeVector> out;
  out.reserve(current.size());
  for (const auto& r : current) out.push_back(primitive_integer(r.coords));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Cone

namespace {

bool fits_small(const std::vector<LatticeVector>& vs) {
  for (const auto& v : vs) {
    for (const auto& c : v) {
      if (!c.fits_slong_p() || abs(c) > 1'000'000) return false;
    }
  }
  return true;
}

Integer dot_checked(const LatticeVector& n, const LatticeVector& a) {
  if (n.size() != a.size()) {
    throw Error(ErrorCode::DimensionMismatch, "cone membership: vector length differs from ambient dimension");
  }
  return dot(n, a);
}

}  // namespace

Cone Cone::zero(std::size_t ambient_dim) {
  Cone c;
  c.ambient_dim_ = ambient_dim;
  c.dim_ = 0;
  for (std::size_t i = 0; i < ambient_dim; ++i) c.equations_.push_back(unit_vector(ambient_dim, i));
  return c;
}

Cone Cone::from_generators(std::span<const LatticeVector> gens, std::size_t ambient_dim) {
  std::vector<LatticeVector> prim;
  for (const auto& g : gens) {
    if (g.size() != ambient_dim) {
      throw Error(ErrorCode::DimensionMismatch,
                  "generator " + toricfan::to_string(g) + " does not have length " +
                      std::to_string(ambient_dim));
    }
    if (!toricfan::is_zero(g)) prim.push_back(primitive(g));
  }
  std::sort(prim.begin(), prim.end());
  prim.erase(std::unique(prim.begin(), prim.end()), prim.end());
  if (prim.empty()) return zero(ambient_dim);

  RationalMatrix gmat = to_rational(prim);
  auto basis_idx = independent_rows(gmat);
  const std::size_t r = basis_idx.size();

  Cone c;
  c.ambient_dim_ = ambient_dim;
  c.dim_ = r;
  c.equations_ = integer_kernel_basis(gmat, ambient_dim);

  // Dual cone restricted to the span: parametrize normals as n = B^T y.
  RationalMatrix basis;
  for (auto i : basis_idx) basis.push_back(gmat[i]);
  RationalMatrix constraints(prim.size(), RationalVector(r, 0));
  for (std::size_t g = 0; g < prim.size(); ++g) {
    for (std::size_t k = 0; k < r; ++k) {
      Rational s = 0;
      for (std::size_t t = 0; t < ambient_dim; ++t) s += gmat[g][t] * basis[k][t];
      constraints[g][k] = s;
    }
  }
  auto dual_rays = extreme_rays(constraints, r);
  if (rank(to_rational(dual_rays)) != r) {
    std::string msg = "positive hull of";
    for (const auto& g : prim) msg += " " + toricfan::to_string(g);
    throw Error(ErrorCode::NotPointed, msg + " contains a line");
  }

  for (const auto& y : dual_rays) {
    RationalVector n(ambient_dim, 0);
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t t = 0; t < ambient_dim; ++t) n[t] += Rational(y[k]) * basis[k][t];
    }
    c.facet_normals_.push_back(primitive_integer(n));
  }
  std::sort(c.facet_normals_.begin(), c.facet_normals_.end());

  // A generator is extreme iff its tight facet normals have rank r - 1.
  for (const auto& g : prim) {
    std::vector<LatticeVector> tight;
    for (const auto& n : c.facet_normals_) {
      if (dot(n, g) == 0) tight.push_back(n);
    }
    if (rank(to_rational(tight)) + 1 == r) c.generators_.push_back(g);
  }
  return c;
}

bool Cone::contains(const LatticeVector& a) const {
  for (const auto& e : equations_) {
    if (dot_checked(e, a) != 0) return false;
  }
  for (const auto& n : facet_normals_) {
    if (dot_checked(n, a) < 0) return false;
  }
  return true;
}

bool Cone::relint_contains(const LatticeVector& a) const {
  for (const auto& e : equations_) {
    if (dot_checked(e, a) != 0) return false;
  }
  for (const auto& n : facet_normals_) {
    if (dot_checked(n, a) <= 0) return false;
  }
  return true;
}

std::string Cone::to_string() const {
  if (generators_.empty()) return "cone()";
  std::ostringstream os;
  os << "cone(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) os << ',';
    os << toricfan::to_string(generators_[i]);
  }
  os << ')';
  return os.str();
}

std::strong_ordering operator<=>(const Cone& a, const Cone& b) {
  if (auto c = a.ambient_dim_ <=> b.ambient_dim_; c != 0) return c;
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  if (a.generators_ < b.generators_) return std::strong_ordering::less;
  if (b.generators_ < a.generators_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Cone cone_from_generators(std::span<const LatticeVector> gens, std::size_t ambient_dim) {
  return Cone::from_generators(gens, ambient_dim);
}

Cone cone_of(std::initializer_list<LatticeVector> gens) {
  if (gens.size() == 0) throw Error(ErrorCode::InvalidArgument, "cone_of needs at least one vector");
  std::vector<LatticeVector> v(gens);
  return Cone::from_generators(v, v.front().size());
}

// ---------------------------------------------------------------------------
// Faces

std::vector<Cone> faces(const Cone& cone) {
  const auto& gens = cone.generators();
  using RaySet = std::vector<bool>;
  std::set<RaySet> seen;
  std::vector<RaySet> queue{RaySet(gens.size(), true)};
  seen.insert(queue.front());
  // Every face is an intersection of facets, so closing the full ray set under
  // "keep the rays tight at one more facet" reaches all of them.
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& n : cone.facet_normals()) {
      RaySet next(gens.size(), false);
      for (std::size_t i = 0; i < gens.size(); ++i) {
        next[i] = queue[head][i] && dot(n, gens[i]) == 0;
      }
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<Cone> out;
  out.reserve(seen.size());
  for (const auto& s : seen) {
    std::vector<LatticeVector> sub;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (s[i]) sub.push_back(gens[i]);
    }
    out.push_back(Cone::from_generators(sub, cone.ambient_dim()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_face_of(const Cone& face, const Cone& cone) {
  if (face.ambient_dim() != cone.ambient_dim() || face.dim() > cone.dim()) return false;
  for (const auto& f : faces(cone)) {
    if (f == face) return true;
  }
  return false;
}

Cone intersect_cones(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "intersect_cones: ambient dimensions differ");
  }
  const std::size_t d = a.ambient_dim();
  RationalMatrix eqs;
  for (const auto& e : a.equations()) eqs.push_back(to_rational(e));
  for (const auto& e : b.equations()) eqs.push_back(to_rational(e));
  auto kernel = integer_kernel_basis(eqs, d);
  const std::size_t k = kernel.size();
  if (k == 0) return Cone::zero(d);

  // x = K z; halfspaces become (n K) z >= 0.
  RationalMatrix constraints;
  auto add_constraints = [&](const Cone& c) {
    for (const auto& n : c.facet_normals()) {
      RationalVector row(k);
      for (std::size_t j = 0; j < k; ++j) row[j] = Rational(dot(n, kernel[j]));
      constraints.push_back(std::move(row));
    }
  };
  add_constraints(a);
  add_constraints(b);
  if (rank(constraints) < k) {
    throw Error(ErrorCode::Internal, "intersect_cones: intersection of pointed cones is not pointed");
  }
  auto rays = extreme_rays(constraints, k);
  std::vector<LatticeVector> gens;
  for (const auto& z : rays) {
    RationalVector x(d, 0);
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t t = 0; t < d; ++t) x[t] += Rational(z[j] * kernel[j][t]);
    }
    gens.push_back(primitive_integer(x));
  }
  return Cone::from_generators(gens, d);
}

Cone join_point_cone(const LatticeVector& w, const Cone& c) {
  if (w.size() != c.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "join_point_cone: w has wrong length");
  }
  std::vector<LatticeVector> gens = c.generators();
  gens.push_back(w);
  Cone joined = Cone::from_generators(gens, c.ambient_dim());
  if (joined.dim() != c.dim() + 1) {
    throw Error(ErrorCode::InvalidArgument, "join_point_cone: w lies in the span of the cone");
  }
  return joined;
}

// ---------------------------------------------------------------------------
// Lattice points

namespace {

using SmallVec = std::vector<long>;

std::vector<SmallVec> to_small(const std::vector<LatticeVector>& vs) {
  std::vector<SmallVec> out;
  for (const auto& v : vs) {
    SmallVec s;
    for (const auto& c : v) s.push_back(c.get_si());
    out.push_back(std::move(s));
  }
  return out;
}

long small_dot(const SmallVec& n, const SmallVec& p) {
  long s = 0;
  for (std::size_t i = 0; i < n.size(); ++i) s += n[i] * p[i];
  return s;
}

}  // namespace

std::vector<LatticeVector> lattice_points(const Cone& cone, const BoxSpec& box, bool relint_only) {
  std::vector<LatticeVector> out;
  const std::size_t d = cone.ambient_dim();
  const bool small = fits_small(cone.equations()) && fits_small(cone.facet_normals()) &&
                     box.radius() <= 1'000'000 && d <= 64;
  if (!small) {
    box.for_each_point(d, [&](const LatticeVector& p) {
      if (relint_only ? cone.relint_contains(p) : cone.contains(p)) out.push_back(p);
    });
    return out;
  }
  auto eqs = to_small(cone.equations());
  auto normals = to_small(cone.facet_normals());
  const long r = box.radius();
  SmallVec p(d, -r);
  auto accept = [&]() {
    for (const auto& e : eqs) {
      if (small_dot(e, p) != 0) return false;
    }
    for (const auto& n : normals) {
      long v = small_dot(n, p);
      if (v < 0 || (relint_only && v == 0)) return false;
    }
    return true;
  };
  auto emit = [&]() {
    LatticeVector v;
    v.reserve(d);
    for (long c : p) v.emplace_back(c);
    out.push_back(std::move(v));
  };
  if (d == 0) {
    if (accept()) emit();
    return out;
  }
  while (true) {
    if (accept()) emit();
    std::size_t i = d;
    bool done = false;
    while (i > 0) {
      --i;
      if (p[i] < r) {
        ++p[i];
        break;
      }
      p[i] = -r;
      if (i == 0) done = true;
    }
    if (done) break;
  }
  return out;
}

std::vector<LatticeVector> graded_lattice_points(const Cone& cone, const BoxSpec& box) {
  auto pts = lattice_points(cone, box, false);
  auto l1 = [](const LatticeVector& v) {
    Integer s = 0;
    for (const auto& c : v) s += abs(c);
    return s;
  };
  std::stable_sort(pts.begin(), pts.end(), [&](const LatticeVector& a, const LatticeVector& b) {
    Integer la = l1(a), lb = l1(b);
    if (la != lb) return la < lb;
    return a < b;
  });
  return pts;
}

Cone embed_cone(const Cone& c) {
  std::vector<LatticeVector> gens;
  for (const auto& g : c.generators()) gens.push_back(extend(g, 0));
  return Cone::from_generators(gens, c.ambient_dim() + 1);
}

}  // namespace toricfan
