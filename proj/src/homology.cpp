#include "toricfan/homology.hpp"

#include "toricfan/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>

namespace toricfan {

FieldSpec FieldSpec::prime(unsigned long p) {
  if (p < 2 || p >= (1ul << 31)) {
    throw Error(ErrorCode::InvalidArgument, "field characteristic must be a prime below 2^31");
  }
  for (unsigned long q = 2; q * q <= p; ++q) {
    if (p % q == 0) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  }
  return FieldSpec(p);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    std::size_t used = 0;
    unsigned long p = 0;
    try {
      p = std::stoul(text.substr(3), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size() - 3) {
      throw Error(ErrorCode::InvalidArgument, "malformed field '" + text + "'");
    }
    return prime(p);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown field '" + text + "' (expected q or fp:<p>)");
}

std::string FieldSpec::name() const {
  return is_rational() ? "Q" : "F_" + std::to_string(characteristic_);
}

// ---------------------------------------------------------------------------

SimplicialComplex::SimplicialComplex(std::size_t vertex_count,
                                     const std::vector<std::vector<std::size_t>>& facets)
    : vertex_count_(vertex_count) {
  std::vector<std::set<std::vector<std::size_t>>> by_dim(1);
  by_dim[0].insert(std::vector<std::size_t>{});
  for (auto facet : facets) {
    std::sort(facet.begin(), facet.end());
    facet.erase(std::unique(facet.begin(), facet.end()), facet.end());
    for (auto v : facet) {
      if (v >= vertex_count) throw Error(ErrorCode::InvalidArgument, "simplicial complex: vertex out of range");
    }
    if (facet.size() >= 31) throw Error(ErrorCode::InvalidArgument, "simplicial complex: facet too large");
    const std::size_t n = facet.size();
    if (by_dim.size() < n + 1) by_dim.resize(n + 1);
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
      std::vector<std::size_t> sub;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1ul << i)) sub.push_back(facet[i]);
      }
      by_dim[sub.size()].insert(std::move(sub));
    }
  }
  for (auto& s : by_dim) faces_.emplace_back(s.begin(), s.end());
  for (std::size_t v = 0; v < vertex_count; ++v) labels.push_back(v);
}

const std::vector<std::vector<std::size_t>>& SimplicialComplex::faces(int k) const {
  static const std::vector<std::vector<std::size_t>> none;
  if (k < -1 || k + 1 >= static_cast<int>(faces_.size())) return none;
  return faces_[k + 1];
}

long DegreeVector::at(int degree) const {
  if (degree < low || degree > high()) return 0;
  return dims[degree - low];
}

long DegreeVector::alternating_sum() const {
  long s = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    int degree = low + static_cast<int>(i);
    s += (degree % 2 == 0 ? 1 : -1) * dims[i];
  }
  return s;
}

// ---------------------------------------------------------------------------
// Exact rank

namespace {

using QRow = std::vector<std::pair<std::size_t, Integer>>;
using PRow = std::vector<std::pair<std::size_t, long>>;

void normalize(QRow& row) {
  Integer g = 0;
  for (const auto& [c, v] : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g > 1) {
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

// a*row - b*pivot, fraction free; both rows sorted by column.
QRow combine(const QRow& row, const Integer& a, const QRow& pivot, const Integer& b) {
  QRow out;
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, a * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -b * pivot[j].second);
      ++j;
    } else {
      Integer v = a * row[i].second - b * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

std::size_t rank_rational(const std::vector<std::vector<std::pair<std::size_t, long>>>& rows) {
  std::unordered_map<std::size_t, QRow> pivots;
  std::size_t r = 0;
  for (const auto& input : rows) {
    QRow row;
    for (const auto& [c, v] : input) {
      if (v != 0) row.emplace_back(c, Integer(v));
    }
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        normalize(row);
        pivots.emplace(row.front().first, std::move(row));
        ++r;
        break;
      }
      const QRow& piv = it->second;
      Integer a = piv.front().second;
      Integer b = row.front().second;
      row = combine(row, a, piv, b);
      normalize(row);
    }
  }
  return r;
}

long mod(long v, long p) {
  long m = v % p;
  return m < 0 ? m + p : m;
}

long inverse_mod(long a, long p) {
  long result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = static_cast<long>((__int128)result * base % p);
    base = static_cast<long>((__int128)base * base % p);
    e >>= 1;
  }
  return result;
}

std::size_t rank_modular(const std::vector<std::vector<std::pair<std::size_t, long>>>& rows, long p) {
  std::unordered_map<std::size_t, PRow> pivots;
  std::size_t r = 0;
  for (const auto& input : rows) {
    std::map<std::size_t, long> acc;
    for (const auto& [c, v] : input) acc[c] = mod(acc[c] + v, p);
    PRow row;
    for (const auto& [c, v] : acc) {
      if (v != 0) row.emplace_back(c, v);
    }
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        long inv = inverse_mod(row.front().second, p);
        for (auto& [c, v] : row) v = static_cast<long>((__int128)v * inv % p);
        pivots.emplace(row.front().first, std::move(row));
        ++r;
        break;
      }
      const PRow& piv = it->second;  // leading coefficient 1
      long f = row.front().second;
      PRow out;
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
          out.push_back(row[i++]);
        } else if (i == row.size() || piv[j].first < row[i].first) {
          out.emplace_back(piv[j].first, mod(-static_cast<long>((__int128)f * piv[j].second % p), p));
          ++j;
        } else {
          long v = mod(row[i].second - static_cast<long>((__int128)f * piv[j].second % p), p);
          if (v != 0) out.emplace_back(row[i].first, v);
          ++i;
          ++j;
        }
      }
      row = std::move(out);
    }
  }
  return r;
}

}  // namespace

std::size_t sparse_rank(std::vector<std::vector<std::pair<std::size_t, long>>> rows,
                        const FieldSpec& field) {
  if (field.is_rational()) return rank_rational(rows);
  return rank_modular(rows, static_cast<long>(field.characteristic()));
}

// ---------------------------------------------------------------------------

DegreeVector reduced_cohomology(const SimplicialComplex& cx, const FieldSpec& field) {
  const int top = cx.dim();
  // coboundary_rank[k+1] = rank of δ^k : C^k -> C^{k+1}, k = -1..top-1
  std::vector<std::size_t> coboundary_rank(top + 2, 0);
  for (int k = -1; k < top; ++k) {
    const auto& lower = cx.faces(k);
    const auto& upper = cx.faces(k + 1);
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < lower.size(); ++i) index.emplace(lower[i], i);
    std::vector<std::vector<std::pair<std::size_t, long>>> rows;
    rows.reserve(upper.size());
    for (const auto& tau : upper) {
      std::vector<std::pair<std::size_t, long>> row;
      for (std::size_t i = 0; i < tau.size(); ++i) {
        std::vector<std::size_t> sigma;
        sigma.reserve(tau.size() - 1);
        for (std::size_t j = 0; j < tau.size(); ++j) {
          if (j != i) sigma.push_back(tau[j]);
        }
        row.emplace_back(index.at(sigma), i % 2 == 0 ? 1 : -1);
      }
      rows.push_back(std::move(row));
    }
    coboundary_rank[k + 1] = sparse_rank(std::move(rows), field);
  }

  DegreeVector out;
  out.low = -1;
  for (int k = -1; k <= top; ++k) {
    long f = static_cast<long>(cx.faces(k).size());
    long here = k < top ? static_cast<long>(coboundary_rank[k + 1]) : 0;
    long before = k > -1 ? static_cast<long>(coboundary_rank[k]) : 0;
    out.dims.push_back(f - here - before);
  }
  return out;
}

SimplicialComplex order_complex(const Fan& fan, const Star& st) {
  std::vector<ConeId> vertices;
  for (auto m : st.members) {
    if (!st.base || m != *st.base) vertices.push_back(m);
  }
  std::vector<std::vector<std::size_t>> chains;
  // Members are id-sorted and ids increase with dimension, so chains are
  // increasing index sequences.
  std::vector<std::size_t> chain;
  auto extend = [&](auto&& self, std::size_t last) -> void {
    bool extended = false;
    for (std::size_t next = last + 1; next < vertices.size(); ++next) {
      if (vertices[last] != vertices[next] && fan.is_face_of(vertices[last], vertices[next])) {
        chain.push_back(next);
        self(self, next);
        chain.pop_back();
        extended = true;
      }
    }
    if (!extended) chains.push_back(chain);
  };
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    chain = {v};
    extend(extend, v);
  }
  SimplicialComplex cx(vertices.size(), chains);
  cx.labels.assign(vertices.begin(), vertices.end());
  return cx;
}

DegreeVector star_cohomology(const Fan& fan, ConeId c, const FieldSpec& field) {
  const int dim_c = static_cast<int>(fan.cone_dim(c));
  const int dim_fan = static_cast<int>(fan.dim());
  DegreeVector out;
  out.low = dim_c - 1;
  out.dims.assign(dim_fan - dim_c + 1, 0);
  Star st = star(fan, c);
  if (st.members.size() == 1) {
    out.dims[0] = 1;
    return out;
  }
  DegreeVector rc = reduced_cohomology(order_complex(fan, st), field);
  for (int i = out.low; i <= out.high(); ++i) out.dims[i - out.low] = rc.at(i - dim_c);
  return out;
}

DegreeVector local_homology_profile(const Fan& fan, ConeId c, const FieldSpec& field) {
  if (fan.cone(c).is_zero()) {
    throw Error(ErrorCode::InvalidArgument, "local homology needs a nonzero cone; use star_cohomology at 0");
  }
  return star_cohomology(fan, c, field);
}

CohomologyProfile cohomology_profile(const Fan& fan, const FieldSpec& field) {
  CohomologyProfile p;
  p.field = field;
  p.per_cone.reserve(fan.size());
  for (ConeId c = 0; c < fan.size(); ++c) p.per_cone.push_back(star_cohomology(fan, c, field));
  return p;
}

}  // namespace toricfan
