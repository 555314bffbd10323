#include "toricfan/fan.hpp"

#include "toricfan/error.hpp"

#include <algorithm>
#include <iterator>
#include <set>

namespace toricfan {

Fan Fan::build(std::span<const Cone> maximal_cones, std::size_t ambient_dim) {
  std::vector<Cone> inputs;
  for (const auto& c : maximal_cones) {
    if (c.ambient_dim() != ambient_dim) {
      throw Error(ErrorCode::DimensionMismatch,
                  c.to_string() + " is not in R^" + std::to_string(ambient_dim));
    }
    inputs.push_back(c);
  }
  std::sort(inputs.begin(), inputs.end());
  inputs.erase(std::unique(inputs.begin(), inputs.end()), inputs.end());

  std::vector<std::vector<Cone>> input_faces;
  input_faces.reserve(inputs.size());
  for (const auto& c : inputs) input_faces.push_back(faces(c));

  auto has_face = [&](std::size_t i, const Cone& f) {
    return std::binary_search(input_faces[i].begin(), input_faces[i].end(), f);
  };

  // Absorb inputs that are faces of other inputs.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    bool absorbed = false;
    for (std::size_t j = 0; j < inputs.size() && !absorbed; ++j) {
      if (j != i && inputs[j].dim() > inputs[i].dim() && has_face(j, inputs[i])) absorbed = true;
    }
    if (!absorbed) keep.push_back(i);
  }

  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      const Cone& ca = inputs[keep[a]];
      const Cone& cb = inputs[keep[b]];
      Cone meet = intersect_cones(ca, cb);
      if (!has_face(keep[a], meet) || !has_face(keep[b], meet)) {
        throw Error(ErrorCode::NotAFan, "cones " + ca.to_string() + " and " + cb.to_string() +
                                            " do not intersect in a common face");
      }
    }
  }

  std::set<Cone> all;
  all.insert(Cone::zero(ambient_dim));
  for (auto i : keep) all.insert(input_faces[i].begin(), input_faces[i].end());

  Fan fan;
  fan.ambient_dim_ = ambient_dim;
  fan.cones_.assign(all.begin(), all.end());
  const std::size_t n = fan.cones_.size();
  fan.below_.assign(n * n, false);
  fan.faces_of_.assign(n, {});
  for (std::size_t b = 0; b < n; ++b) {
    const auto& gb = fan.cones_[b].generators();
    for (std::size_t a = 0; a <= b; ++a) {
      const auto& ga = fan.cones_[a].generators();
      if (std::includes(gb.begin(), gb.end(), ga.begin(), ga.end())) {
        fan.below_[a * n + b] = true;
        fan.faces_of_[b].push_back(a);
      }
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    bool maximal = true;
    for (std::size_t d = c + 1; d < n && maximal; ++d) {
      if (fan.below_[c * n + d]) maximal = false;
    }
    if (maximal) fan.facets_.push_back(c);
    fan.dim_ = std::max(fan.dim_, fan.cones_[c].dim());
  }
  for (auto f : fan.facets_) {
    if (fan.cones_[f].dim() != fan.dim_) fan.pure_ = false;
  }
  return fan;
}

std::optional<ConeId> Fan::find(const Cone& c) const {
  auto it = std::lower_bound(cones_.begin(), cones_.end(), c);
  if (it == cones_.end() || !(*it == c)) return std::nullopt;
  return static_cast<ConeId>(it - cones_.begin());
}

ConeId Fan::id_of(const Cone& c) const {
  auto id = find(c);
  if (!id) throw Error(ErrorCode::InvalidArgument, c.to_string() + " is not a cone of the fan");
  return *id;
}

std::optional<ConeId> Fan::relint_cone_of(const LatticeVector& a) const {
  for (ConeId id = 0; id < cones_.size(); ++id) {
    if (cones_[id].relint_contains(a)) return id;
  }
  return std::nullopt;
}

std::string Fan::describe(ConeId id) const {
  return "#" + std::to_string(id) + " " + cones_.at(id).to_string();
}

bool Subfan::contains(ConeId id) const { return std::binary_search(ids.begin(), ids.end(), id); }

Star star(const Fan& fan, ConeId base) {
  if (base >= fan.size()) throw Error(ErrorCode::InvalidArgument, "star: unknown cone id");
  Star s;
  s.base = base;
  for (ConeId d = 0; d < fan.size(); ++d) {
    if (fan.is_face_of(base, d)) s.members.push_back(d);
  }
  return s;
}

Star star_of_point(const Fan& fan, const LatticeVector& a) {
  Star s;
  s.base = fan.relint_cone_of(a);
  for (ConeId d = 0; d < fan.size(); ++d) {
    if (fan.cone(d).contains(a)) s.members.push_back(d);
  }
  return s;
}

bool is_face_closed(const Fan& fan, const ConeIdSet& ids) {
  std::vector<bool> in(fan.size(), false);
  for (auto id : ids) {
    if (id >= fan.size()) return false;
    in[id] = true;
  }
  for (auto id : ids) {
    for (auto f : fan.faces_of(id)) {
      if (!in[f]) return false;
    }
  }
  return true;
}

namespace {

ConeIdSet normalized(ConeIdSet ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

}  // namespace

Subfan make_subfan(const Fan& fan, ConeIdSet ids) {
  ids = normalized(std::move(ids));
  if (!is_face_closed(fan, ids)) {
    throw Error(ErrorCode::InvalidArgument, "cone id set is not closed under faces");
  }
  return Subfan{std::move(ids)};
}

Subfan whole_fan(const Fan& fan) {
  Subfan s;
  for (ConeId id = 0; id < fan.size(); ++id) s.ids.push_back(id);
  return s;
}

Subfan face_closure(const Fan& fan, const ConeIdSet& generators) {
  ConeIdSet ids;
  for (auto g : generators) {
    const auto& f = fan.faces_of(g);
    ids.insert(ids.end(), f.begin(), f.end());
  }
  return Subfan{normalized(std::move(ids))};
}

Subfan fan_of_cone(const Fan& fan, ConeId c) { return Subfan{fan.faces_of(c)}; }

Subfan boundary_fan_of_cone(const Fan& fan, ConeId c) {
  Subfan s{fan.faces_of(c)};
  s.ids.pop_back();  // faces_of is ascending and ends with c itself
  return s;
}

Subfan subfan_union(const Subfan& a, const Subfan& b) {
  Subfan s;
  std::set_union(a.ids.begin(), a.ids.end(), b.ids.begin(), b.ids.end(), std::back_inserter(s.ids));
  return s;
}

Subfan subfan_intersection(const Subfan& a, const Subfan& b) {
  Subfan s;
  std::set_intersection(a.ids.begin(), a.ids.end(), b.ids.begin(), b.ids.end(),
                        std::back_inserter(s.ids));
  return s;
}

Subfan sigma_minus_star(const Fan& fan, ConeId base) {
  Subfan s;
  for (ConeId d = 0; d < fan.size(); ++d) {
    if (!fan.is_face_of(base, d)) s.ids.push_back(d);
  }
  return s;
}

Subfan boundary_subfan(const Fan& fan) {
  if (!fan.pure()) throw Error(ErrorCode::NotPure, "boundary_subfan: fan is not pure");
  if (fan.dim() < 1) throw Error(ErrorCode::InvalidArgument, "boundary_subfan: fan has dimension 0");
  const std::size_t k = fan.dim();
  ConeIdSet boundary;
  for (ConeId c = 0; c < fan.size(); ++c) {
    if (fan.cone_dim(c) + 1 != k) continue;
    std::size_t count = 0;
    for (auto f : fan.facets()) {
      if (fan.is_face_of(c, f)) ++count;
    }
    if (count == 1) boundary.push_back(c);
  }
  return face_closure(fan, boundary);
}

ConeIdSet subfan_facets(const Fan& fan, const Subfan& sub) {
  ConeIdSet out;
  for (auto c : sub.ids) {
    bool maximal = true;
    for (auto d : sub.ids) {
      if (d != c && fan.is_face_of(c, d)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(c);
  }
  return out;
}

long subfan_dim(const Fan& fan, const Subfan& sub) {
  long d = -1;
  for (auto c : sub.ids) d = std::max<long>(d, static_cast<long>(fan.cone_dim(c)));
  return d;
}

Fan subfan_as_fan(const Fan& fan, const Subfan& sub) {
  if (sub.empty()) throw Error(ErrorCode::InvalidArgument, "subfan_as_fan: empty subfan");
  std::vector<Cone> maximal;
  for (auto c : subfan_facets(fan, sub)) maximal.push_back(fan.cone(c));
  return Fan::build(maximal, fan.ambient_dim());
}

Subfan lift_subfan(const Fan& parent, const Fan& sub_fan, const Subfan& inner) {
  ConeIdSet ids;
  for (auto c : inner.ids) ids.push_back(parent.id_of(sub_fan.cone(c)));
  return Subfan{normalized(std::move(ids))};
}

std::vector<long> f_vector(const Fan& fan, const ConeIdSet& members) {
  std::vector<long> f(fan.dim() + 1, 0);
  for (auto c : members) ++f[fan.cone_dim(c)];
  return f;
}

long rho(const Fan& fan, ConeId c) {
  auto f = f_vector(fan, star(fan, c).members);
  long sum = 0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += (i % 2 == 0 ? -1 : 1) * f[i];
  return sum;
}

EulerReport is_euler_fan(const Fan& fan) {
  EulerReport r;
  r.pure = fan.pure();
  // (-1)^{dim - 1}; dim 0 gives (-1)^{-1} = -1.
  r.target = (fan.dim() % 2 == 1) ? 1 : -1;
  r.euler = r.pure;
  for (ConeId c = 0; c < fan.size(); ++c) {
    r.rho.push_back(rho(fan, c));
    if (r.rho.back() != r.target && !r.first_violation) r.first_violation = c;
  }
  if (r.first_violation) r.euler = false;
  return r;
}

Fan embed_fan(const Fan& fan) {
  std::vector<Cone> maximal;
  for (auto f : fan.facets()) maximal.push_back(embed_cone(fan.cone(f)));
  return Fan::build(maximal, fan.ambient_dim() + 1);
}

Fan join_fan(const LatticeVector& w, const Subfan& sub, const Fan& base) {
  const std::size_t d = base.ambient_dim() + 1;
  if (w.size() != d || w.back() == 0) {
    throw Error(ErrorCode::InvalidArgument, "join_fan: w must lie in R^{d+1} \\ R^d");
  }
  std::vector<Cone> maximal;
  for (auto f : base.facets()) maximal.push_back(embed_cone(base.cone(f)));
  for (auto f : subfan_facets(base, sub)) {
    maximal.push_back(join_point_cone(w, embed_cone(base.cone(f))));
  }
  try {
    return Fan::build(maximal, d);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotAFan) throw;
    throw Error(ErrorCode::Internal, std::string("join_fan produced an invalid fan: ") + e.what());
  }
}

Fan coordinate_fan(std::size_t vertex_count, const std::vector<std::vector<std::size_t>>& facets) {
  std::vector<Cone> maximal;
  for (const auto& f : facets) {
    std::vector<LatticeVector> gens;
    for (auto v : f) {
      if (v >= vertex_count) throw Error(ErrorCode::InvalidArgument, "coordinate_fan: vertex out of range");
      gens.push_back(unit_vector(vertex_count, v));
    }
    maximal.push_back(Cone::from_generators(gens, vertex_count));
  }
  return Fan::build(maximal, vertex_count);
}

}  // namespace toricfan
