#pragma once

#include "qdyn/exact/mpoly.hpp"
#include "qdyn/qea/roots.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace qdyn {

// Quantum shuffle algebra on letters 1..n (simple roots). The positive part of the
// quantum group embeds here by e_i -> (i); used as an independent check of the
// straightening rules.
class ShuffleAlgebra {
 public:
  using Word = std::vector<std::uint8_t>;
  using Elt = std::map<Word, MPoly>;

  explicit ShuffleAlgebra(int n) : n_(n) {}

  Elt letter(int i) const;
  Elt one() const { return Elt{{Word{}, MPoly(1)}}; }
  Elt multiply(const Elt& a, const Elt& b);
  Elt qbracket(const Elt& x, const Elt& y, const MPoly& a);
  // Image of E(i,j) through its nested bracket definition.
  Elt root_vector(const PosRoot& r);

  static void add_to(Elt& acc, const Elt& x, const MPoly& scale = MPoly(1));
  static Elt scaled(const Elt& x, const MPoly& s);

 private:
  int n_;
  std::map<std::pair<Word, Word>, Elt> memo_;
  std::map<PosRoot, Elt> roots_;

  const Elt& word_product(const Word& u, const Word& v);
  static int cartan(int a, int b);
};

}  // namespace qdyn
