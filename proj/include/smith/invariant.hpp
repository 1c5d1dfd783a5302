#pragma once
// Weyl-invariant finitely supported functions on the character or
// cocharacter lattice of a root datum: the lattice model of representation
// rings and of the spherical Hecke algebra.  Multiplication is lattice
// convolution; the character basis comes from the Freudenthal recursion.

#include <map>

#include "smith/root_datum.hpp"
#include "smith/scalar.hpp"

namespace smith {

enum class LatticeSide { Character, Cocharacter };

class InvariantElement {
public:
  InvariantElement(RootDatumPtr datum, LatticeSide side, Ring ring)
      : datum_(std::move(datum)), side_(side), ring_(ring) {}

  static InvariantElement unit(RootDatumPtr datum, LatticeSide side, Ring ring);
  // Σ over the W-orbit of the given point, with the given coefficient.
  static InvariantElement orbit_sum(RootDatumPtr datum, LatticeSide side, Ring ring,
                                    const Vec& point, i64 value = 1);

  const RootDatumPtr& datum() const { return datum_; }
  LatticeSide side() const { return side_; }
  const Ring& ring() const { return ring_; }
  const std::map<Vec, i64>& weights() const { return weights_; }

  i64 at(const Vec& point) const {
    auto it = weights_.find(point);
    return it == weights_.end() ? 0 : it->second;
  }
  void set(const Vec& point, i64 value);
  void add(const Vec& point, i64 value);

  bool is_zero() const { return weights_.empty(); }
  bool invariant() const;  // under every simple reflection of the datum

  InvariantElement operator+(const InvariantElement& o) const;
  InvariantElement operator-(const InvariantElement& o) const;
  InvariantElement operator*(const InvariantElement& o) const;  // convolution
  InvariantElement scaled(i64 c) const;
  bool operator==(const InvariantElement& o) const;

  InvariantElement reduced_mod(i64 p) const;

  // Reinterpret over another datum on the same ambient lattice whose Weyl
  // group is a subgroup (the inclusion of invariant rings).  Checked on
  // generators: every simple pair of `sub` must be ± a root pair of the
  // current datum.  Invariance under the smaller group is rechecked.
  InvariantElement restricted_to(RootDatumPtr sub) const;

private:
  RootDatumPtr datum_;
  LatticeSide side_;
  Ring ring_;
  std::map<Vec, i64> weights_;
};

// Weight multiplicities of the Weyl module with the given dominant highest
// weight, by the Freudenthal recursion; Character side, ring Z.
InvariantElement weyl_character(RootDatumPtr rd, const Vec& highest);

// Weyl dimension formula, for cross-checking character degrees.
i64 weyl_dimension(const RootDatum& rd, const Vec& highest);

// Change of basis into Weyl characters by iterated highest-term subtraction.
// Multiplicities may be negative (virtual elements).  The reconstruction
// Σ m_λ χ_λ = e is verified before returning.
std::map<Vec, i64> decompose(const InvariantElement& e);

// The spherical Hecke algebra model: W-invariant functions on the
// cocharacter lattice.  The Satake basis element attached to a dominant
// coweight is the orbit sum; the ring structure is convolution.
struct ShaModel {
  RootDatumPtr datum;
  Ring ring;

  InvariantElement unit() const;
  InvariantElement basis(const Vec& dominant_coweight) const;
};

ShaModel sha_model(RootDatumPtr rd, Ring ring);

// The Smith homomorphism of the lattice model: restriction of invariants to
// the centralizer datum followed by reduction mod p.
InvariantElement smith_sha(const InvariantElement& e, const RootDatum& ambient,
                           const KacNode& node);

}  // namespace smith
