#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/datum.hpp"

namespace hurwitz {

struct BraidGen {
  int index;  // 1-based, in [1, strands-1]
  int sign;   // +1 or -1
  bool operator==(const BraidGen&) const = default;
};

// Word in the braid generators s1..s_{n-1} acting on n-entry tuples.
// Words are applied left to right: the first letter acts first.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<BraidGen> gens = {});

  // Text format: whitespace-separated tokens "s1", "s2^-1", "A12",
  // "A1_12"; case-insensitive.
  static BraidWord parse(int strands, std::string_view text);

  int strands() const { return strands_; }
  const std::vector<BraidGen>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }

  BraidWord& append(int index, int sign);
  BraidWord& append(const BraidWord& w);
  BraidWord inverse() const;
  BraidWord free_reduced() const;  // cancels adjacent s_i s_i^-1 pairs

  std::string str() const;  // "s1 s2^-1"
  bool operator==(const BraidWord&) const = default;

 private:
  int strands_;
  std::vector<BraidGen> gens_;
};

// sigma_i for sign +1: (..., t_i, t_{i+1}, ...) ->
//                      (..., t_i t_{i+1} t_i^-1, t_i, ...);
// sign -1 is the inverse move (..., t_{i+1}, t_{i+1}^-1 t_i t_{i+1}, ...).
Datum apply_sigma(const Datum& d, int i, int sign = +1);
void apply_sigma_ids(const PermGroup& g, std::vector<int>& ids, int i,
                     int sign);

Datum apply_word(const Datum& d, const BraidWord& w);
std::vector<int> apply_word_ids(const PermGroup& g, std::vector<int> ids,
                                const BraidWord& w);

// Pure-braid generator A_ij, 1 <= i < j <= n-1, with the expansion
// (s_{j-1} ... s_{i+1}) s_i^2 (s_{i+1}^-1 ... s_{j-1}^-1). The induced
// tuple map preserves each coordinate's conjugacy class.
struct PureGen {
  int i, j;
  std::string name;  // "A12"
  BraidWord word;
};

std::vector<PureGen> pure_generators(int strands);  // throws if strands < 3
BraidWord pure_gen_word(int strands, int i, int j);
std::string pure_gen_name(int i, int j);

// Product of all A_ij in lexicographic order; acts by simultaneous
// conjugation, so it fixes every inn-canonical form.
BraidWord full_twist_word(int strands);

// s1 ... s_{n-2} s_{n-1}^2 s_{n-2} ... s1; acts within the inn-class.
BraidWord sphere_relation_word(int strands);

}  // namespace hurwitz
