#pragma once

// Independent reference implementations used only by the tests. Nothing here
// calls into the library's homology, fan or shelling code.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Simplex = std::vector<int>;  // sorted vertex list
using Faces = std::set<Simplex>;   // includes the empty simplex

Faces downward_closure(const std::vector<Simplex>& facets);
Faces link(const Faces& faces, const Simplex& f);
int dimension(const Faces& faces);

/// Reduced simplicial homology dims, index 0 is degree -1. p = 0 means Q.
std::vector<long> reduced_homology(const Faces& faces, unsigned p);
long reduced_homology_at(const Faces& faces, unsigned p, int degree);

/// Exact rank of a dense matrix: over Q (p = 0) with mpq, else mod p.
std::size_t dense_rank(std::vector<std::vector<long>> m, unsigned p);

struct LinkCmVerdict {
  bool cohen_macaulay = true;
  Simplex face;    // first face whose link has low homology
  int degree = 0;  // homology degree in the link
};

/// H̃_i(lk F) = 0 for all faces F and i < dim Δ - |F|; faces visited by size then lexicographically.
LinkCmVerdict link_cm(const std::vector<Simplex>& facets, unsigned p);

/// Non-pure shellability in the simplicial sense: an ordering where each new
/// facet meets the earlier ones in a pure codimension-one subcomplex of its boundary.
bool simplicial_shellable(const std::vector<Simplex>& facets);

/// Generator subsets cut out by supporting normals u ∈ [-m, m]^d.
std::set<std::vector<std::size_t>> faces_by_normals(const std::vector<std::vector<long>>& gens, long m);

/// dim of the degree-a part of H^1 of the Čech complex K[x] -> K[x, 1/x].
long cech_h1_univariate(long a);
/// dim of the degree-a part of H^0 of the same complex.
long cech_h0_univariate(long a);

}  // namespace oracle
