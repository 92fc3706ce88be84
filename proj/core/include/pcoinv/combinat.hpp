#pragma once

// Compositions, partitions, multiset words, lattice paths, permutations and
// standard Young tableaux. Positions are 1-indexed, letters run over 1..k.

#include <string>
#include <vector>

#include "pcoinv/rational.hpp"

namespace pcoinv {

using Composition = std::vector<int>;
using Partition = std::vector<int>;
using Word = std::vector<int>;
/// 0-based image vector: perm[i] is the image of i.
using Permutation = std::vector<int>;
using Point = std::vector<int>;
using LatticePath = std::vector<Point>;

int total(const std::vector<int>& parts);
bool is_composition(const Composition& alpha);
bool is_partition(const Partition& lambda);

/// "2,1,3" -> {2,1,3}; throws std::invalid_argument on malformed input.
Composition parse_composition(const std::string& text);
/// As parse_composition, additionally requiring weakly decreasing parts.
Partition parse_partition(const std::string& text);
std::string join(const std::vector<int>& parts, const std::string& sep = ",");

/// (1^n) and (m^k).
Composition ones(int n);
Composition rectangle(int m, int k);

/// n! / (alpha_1! ... alpha_k!).
Integer multinomial(const Composition& alpha);

/// Lexicographically sorted words with letter j used alpha_j times.
std::vector<Word> enumerate_words(const Composition& alpha);

struct WordStats {
  std::vector<int> descents;  // positions i with w_i > w_{i+1}
  int des = 0;
  int maj = 0;
};
WordStats word_stats(const Word& w);

/// Digit string when every letter is < 10, otherwise comma separated.
std::string word_to_string(const Word& w);
Word parse_word(const std::string& text);
/// Checks that w uses letter j exactly alpha_j times.
bool is_word_of(const Word& w, const Composition& alpha);

/// Lattice path l(0), ..., l(n) in N^k: step i adds e_{w_i}.
LatticePath word_to_path(const Word& w, int k);
/// Inverse of word_to_path; throws std::invalid_argument on non-unit steps.
Word path_to_word(const LatticePath& path);
/// The points l(i) for each descent position i of the path's word.
std::vector<Point> path_descent_points(const LatticePath& path);

/// Partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> enumerate_partitions(int n);
/// Compositions of n in lexicographic order.
std::vector<Composition> enumerate_compositions(int n);
/// All permutations of {0..n-1} in lexicographic order.
std::vector<Permutation> enumerate_permutations(int n);

Permutation identity_permutation(int n);
/// Cycle type as a partition (weakly decreasing).
Partition cycle_type(const Permutation& p);
/// z_mu = prod_i i^{m_i} m_i!, the centralizer order of a permutation of cycle type mu.
Integer centralizer_order(const Partition& mu);
/// Product of consecutive cycles of the given lengths.
Permutation permutation_of_cycle_type(const Partition& mu);
/// (a*b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
/// 1-based one-line notation of a permutation, as a word.
Word permutation_word(const Permutation& p);

struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> rows;
};

struct SytEntry {
  Tableau tableau;
  int des = 0;  // #{i : i+1 lies in a strictly lower row than i}
  int maj = 0;  // sum of those i
};

std::vector<SytEntry> enumerate_syt(const Partition& lambda);
/// Number of SYT of shape lambda (hook length formula).
Integer syt_count(const Partition& lambda);

}  // namespace pcoinv
