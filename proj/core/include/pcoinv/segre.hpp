#pragma once

// Monomial model of the Segre coordinate algebra T_alpha.
//
// A monomial of first degree r is a k-tuple of partitions, the i-th having at
// most r parts, each part <= alpha_i. It is stored as a count vector
// c[i][l] = multiplicity of the part l in the i-th partition, flattened
// group-major into "slots". The generator y_(j_1..j_k) adds one part j_i to
// each partition with j_i > 0 and raises r by one.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "pcoinv/combinat.hpp"
#include "pcoinv/rational.hpp"

namespace pcoinv {

/// (j_1, ..., j_k) with 0 <= j_i <= alpha_i.
using SegreGenerator = std::vector<int>;

struct SegreMonomial {
  int r = 0;
  std::vector<int> counts;  // one entry per slot

  bool operator==(const SegreMonomial& o) const { return r == o.r && counts == o.counts; }
  bool operator<(const SegreMonomial& o) const { return r != o.r ? r < o.r : counts < o.counts; }
};

class SegreSpace {
 public:
  explicit SegreSpace(Composition alpha);

  const Composition& alpha() const { return alpha_; }
  int n() const { return n_; }
  int k() const { return static_cast<int>(alpha_.size()); }
  int slots() const { return n_; }
  /// Slot of part value l (1..alpha_i) in group i (0-based).
  int slot(int group, int l) const { return offset_[static_cast<std::size_t>(group)] + l - 1; }
  int group_of_slot(int s) const { return group_of_[static_cast<std::size_t>(s)]; }
  int part_of_slot(int s) const { return part_of_[static_cast<std::size_t>(s)]; }
  /// True when every alpha_i is equal, so that S_k permutes the groups.
  bool is_rectangular() const;

  int q_degree(const SegreMonomial& m) const;
  /// Each partition as weakly decreasing parts.
  std::vector<Partition> partitions(const SegreMonomial& m) const;
  /// Inverse of partitions(); throws std::invalid_argument when out of range.
  SegreMonomial from_partitions(int r, const std::vector<Partition>& parts) const;
  bool is_valid(const SegreMonomial& m) const;

  SegreMonomial unit(int r = 0) const;
  /// The generator y_I as a first-degree-one monomial.
  SegreMonomial generator(const SegreGenerator& g) const;
  std::vector<SegreGenerator> generators() const;
  SegreMonomial multiply_generator(const SegreGenerator& g, const SegreMonomial& m) const;
  SegreMonomial multiply(const SegreMonomial& a, const SegreMonomial& b) const;

  /// Permutes the k groups: group i goes to group perm[i]. Needs is_rectangular().
  SegreMonomial act(const Permutation& perm, const SegreMonomial& m) const;

  /// Zero-padded concatenated partitions; the canonical order is by q-degree, then this key.
  std::vector<int> order_key(const SegreMonomial& m) const;
  bool canonical_less(const SegreMonomial& a, const SegreMonomial& b) const;

  /// Text form `r=<r>; [2,1|1]`.
  std::string to_string(const SegreMonomial& m) const;

 private:
  Composition alpha_;
  int n_;
  std::vector<int> offset_;
  std::vector<int> group_of_;
  std::vector<int> part_of_;
};

/// Basis of (T_alpha)_r, ordered by q-degree and then canonically.
class Piece {
 public:
  Piece(const SegreSpace& space, int r);

  int r() const { return r_; }
  int size() const { return static_cast<int>(basis_.size()); }
  int max_q_degree() const { return max_e_; }
  const std::vector<SegreMonomial>& basis() const { return basis_; }
  const SegreMonomial& monomial(int i) const { return basis_[static_cast<std::size_t>(i)]; }
  /// Monomials of q-degree e occupy [begin(e), end(e)).
  int begin(int e) const;
  int end(int e) const;
  int count(int e) const { return end(e) - begin(e); }
  /// Index of m in the piece, or -1.
  int index(const SegreMonomial& m) const;

 private:
  std::uint64_t key(const std::vector<int>& counts) const;
  int r_;
  int max_e_ = 0;
  std::vector<SegreMonomial> basis_;
  std::vector<int> starts_;
  std::unordered_map<std::uint64_t, int> index_;
};

/// Homogeneous element of T_alpha: all monomials share first degree r.
struct AlgebraElement {
  int r = 0;
  std::map<std::vector<int>, Rational> terms;  // counts -> coefficient

  void add(const SegreMonomial& m, const Rational& c);
  bool operator==(const AlgebraElement& o) const { return r == o.r && terms == o.terms; }
};

AlgebraElement multiply(const SegreSpace& space, const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement act(const SegreSpace& space, const Permutation& perm, const AlgebraElement& a);
std::string to_string(const SegreSpace& space, const AlgebraElement& a);

/// f~_l: the sum of all generators of q-degree l.
AlgebraElement e_tilde(const SegreSpace& space, int l);
/// The generators y_I with |I| = l.
std::vector<SegreGenerator> generators_of_degree(const SegreSpace& space, int l);

/// Image of y_I in T_n: the sum of x_J over J = J_1 u ... u J_k, J_i a j_i-subset of block i.
AlgebraElement chi_alpha_image(const Composition& alpha, const SegreGenerator& g);

/// Permutations of {0..n-1} preserving the consecutive blocks of alpha.
std::vector<Permutation> young_subgroup(const Composition& alpha);

}  // namespace pcoinv
