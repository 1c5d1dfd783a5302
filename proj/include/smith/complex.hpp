#pragma once
// Finite abstract simplicial complexes, simplicial maps, and cyclic
// p-group actions.  Simplices are stored as sorted vertex-index lists in a
// deterministic order (by dimension, then lexicographically), so every
// downstream computation is reproducible.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "smith/scalar.hpp"

namespace smith {

using Simplex = std::vector<int>;  // sorted vertex indices

class Complex {
public:
  Complex() = default;

  // Face closure of the given maximal simplices (vertex labels).
  static Complex from_maximal(const std::vector<std::vector<std::string>>& maximal);

  // Face closure of vertex-index sets over a fixed label list.
  static Complex from_simplices(std::vector<std::string> labels,
                                const std::vector<Simplex>& gens);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int size() const { return static_cast<int>(simplices_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<Simplex>& simplices() const { return simplices_; }
  const Simplex& simplex(int id) const { return simplices_[id]; }
  int dim(int id) const { return static_cast<int>(simplices_[id].size()) - 1; }
  int dim() const;  // max over simplices, -1 if empty

  int vertex_id(const std::string& label) const;               // -1 if absent
  int find(const Simplex& s) const;                            // -1 if absent
  int require(const Simplex& s) const;                         // throws if absent
  int vertex_simplex(int v) const { return require({v}); }     // id of {v}

  // Cofaces of s (simplices containing s), including s itself.
  const std::vector<int>& cofaces(int id) const { return cofaces_[id]; }
  // Faces of s (nonempty subsets), including s itself.
  std::vector<int> faces(int id) const;

  bool operator==(const Complex& o) const {
    return labels_ == o.labels_ && simplices_ == o.simplices_;
  }

private:
  void finalize();  // sort, index, coface table

  std::vector<std::string> labels_;
  std::vector<Simplex> simplices_;
  std::map<Simplex, int> index_;
  std::vector<std::vector<int>> cofaces_;
};

using ComplexPtr = std::shared_ptr<const Complex>;

inline ComplexPtr share(Complex c) { return std::make_shared<const Complex>(std::move(c)); }

bool same_complex(const ComplexPtr& a, const ComplexPtr& b);

// A vertex map whose image of every simplex is a simplex of the target.
class SimplicialMap {
public:
  SimplicialMap(ComplexPtr src, ComplexPtr tgt, std::vector<int> vertex_map);

  // Convenience: assignment given by target labels per source label.
  static SimplicialMap from_labels(ComplexPtr src, ComplexPtr tgt,
                                   const std::map<std::string, std::string>& assignment);

  static SimplicialMap identity(ComplexPtr c);

  const ComplexPtr& source() const { return src_; }
  const ComplexPtr& target() const { return tgt_; }
  int vertex_image(int v) const { return vmap_[v]; }
  const std::vector<int>& vertex_map() const { return vmap_; }
  // Image simplex id in the target for each source simplex id.
  int image(int simplex_id) const { return simage_[simplex_id]; }

  SimplicialMap compose_after(const SimplicialMap& first) const;  // this ∘ first

private:
  ComplexPtr src_, tgt_;
  std::vector<int> vmap_;
  std::vector<int> simage_;
};

// A subcomplex together with its inclusion data.
struct Subcomplex {
  ComplexPtr complex;
  std::vector<int> vertex_to_parent;   // sub vertex id -> parent vertex id
  std::vector<int> simplex_to_parent;  // sub simplex id -> parent simplex id

  SimplicialMap inclusion(const ComplexPtr& parent) const;
};

// Simplices of `parent` selected by `keep` must be closed under faces.
Subcomplex induced_subcomplex(const ComplexPtr& parent, const std::vector<bool>& keep);

// A faithful simplicial action of a cyclic group of prime-power order.
class GComplex {
public:
  // generator: vertex permutation of base; order: p^n with p prime, n >= 1.
  GComplex(ComplexPtr base, std::vector<int> generator, i64 order);

  const ComplexPtr& base() const { return base_; }
  const std::vector<int>& generator() const { return gen_; }
  i64 order() const { return order_; }
  i64 prime() const { return prime_; }

  // The action is regular when every group element that maps a simplex to
  // itself fixes it vertexwise.  Smith operations require regularity.
  bool regular() const { return regular_; }

  // Image of a vertex / simplex under generator^k.
  int vertex_image(int v, i64 k = 1) const;
  int simplex_image(int id, i64 k = 1) const;

  // Orbit representative structure: orbit id per simplex, deterministic.
  const std::vector<int>& simplex_orbit() const { return simplex_orbit_; }

  GComplex with_base(ComplexPtr base) const;  // same generator data, revalidated

private:
  ComplexPtr base_;
  std::vector<int> gen_;
  i64 order_ = 1;
  i64 prime_ = 0;
  bool regular_ = false;
  std::vector<std::vector<int>> powers_;  // vertex image under generator^k
  std::vector<int> simplex_orbit_;
};

// Subcomplex of simplices fixed vertexwise by the whole group.
// Throws unless the action is regular (subdivide first).
Subcomplex fixed_subcomplex(const GComplex& g);

struct Subdivision {
  GComplex complex;                // barycentric subdivision with induced action
  ComplexPtr parent;               // the complex that was subdivided
  std::vector<int> cell_to_base;   // subdivision simplex id -> parent simplex id
                                   // whose open simplex contains the cell's
                                   // relative interior
};

// Barycentric subdivision with the induced action; the result is always
// regular.  New vertex labels join the original labels with '_'.
Subdivision barycentric_subdivide(const GComplex& g);

}  // namespace smith
