#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ornlat/bitset.hpp"
#include "ornlat/errors.hpp"

namespace ornlat {

struct JoinRepresentation {
  int element;
  std::vector<int> parts;  // antichain, sorted by index
};

struct LatticeCheck {
  bool is_lattice;
  // On failure, an offending pair and which bound is missing.
  int x = -1, y = -1;
  bool missing_meet = false, missing_join = false;
};

// Finite poset over opaque string keys. Elements are re-indexed along a fixed
// linear extension at construction, so below(i) only contains indices <= i.
// All queries are const and safe to call concurrently.
class FinitePoset {
public:
  FinitePoset() = default;

  // Validates the relation (reflexive, antisymmetric, transitive); throws
  // RelationError naming the failing axiom and a witness.
  static FinitePoset from_relation(std::vector<std::string> keys,
                                   const std::function<bool(int, int)>& leq);

  int size() const { return int(keys_.size()); }
  const std::string& key(int i) const { return keys_[i]; }
  int index_of(const std::string& key) const;
  // Index of the element originally passed at position `orig` to from_relation.
  int index_of_original(int orig) const { return new_index_[orig]; }
  // Original from_relation position of the element now at index idx.
  int original_of(int idx) const { return orig_index_[idx]; }

  bool leq(int i, int j) const { return below_[j].test(i); }
  const Bitset& below(int i) const { return below_[i]; }
  const Bitset& above(int i) const { return above_[i]; }

  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const Bitset& covers_up(int i) const { return cov_up_[i]; }
  const Bitset& covers_down(int i) const { return cov_down_[i]; }

  std::optional<int> bottom() const;
  std::optional<int> top() const;

  std::optional<int> meet(int i, int j) const;
  std::optional<int> join(int i, int j) const;
  LatticeCheck lattice_check() const;
  bool is_lattice() const { return lattice_check().is_lattice; }

  std::vector<int> join_irreducibles() const;
  std::vector<int> meet_irreducibles() const;
  int lower_cover(int i) const;  // unique lower cover; NonUniqueCoverError otherwise
  int upper_cover(int i) const;

  bool is_join_semidistributive() const;
  bool is_meet_semidistributive() const;

  // Unique minimal z with z <= y, z !<= x, for a cover x <| y; nullopt when not unique.
  std::optional<int> k_join(int x, int y) const;
  std::optional<int> k_meet(int x, int y) const;

  JoinRepresentation canonical_join_representation(int x) const;
  JoinRepresentation canonical_meet_representation(int x) const;
  int kappa_join(int m) const;  // meet irreducible -> join irreducible
  int kappa_meet(int j) const;

  std::string to_json() const;  // {"elements": [...], "covers": [[i,j],...]}
  std::string to_dot() const;

private:
  std::vector<std::string> keys_;
  std::vector<int> new_index_, orig_index_;
  std::vector<Bitset> below_, above_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<Bitset> cov_up_, cov_down_;
};

struct MacNeille {
  FinitePoset lattice;
  std::vector<int> embedding;  // original poset index -> completion index
};
MacNeille macneille_completion(const FinitePoset& p);

std::optional<std::vector<int>> poset_isomorphism(const FinitePoset& p, const FinitePoset& q);
inline bool poset_isomorphic(const FinitePoset& p, const FinitePoset& q) {
  return poset_isomorphism(p, q).has_value();
}

}  // namespace ornlat
