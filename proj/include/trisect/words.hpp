#pragma once
#include <string>
#include <vector>

#include "trisect/snf.hpp"

namespace trisect {

// Word in a free group: letter +-(i+1) is generator i or its inverse.
using Word = std::vector<int>;

Word reduced(Word w);
Word cyclically_reduced(Word w);
Word inverse_word(const Word& w);
Word concat(const Word& a, const Word& b);

std::string gen_name(int gen, int ngens);
std::string word_str(const Word& w, int ngens);  // "abA", or "x0 X3" past 26 gens

struct Presentation {
  int ngens = 0;
  std::vector<Word> rels;
  std::string str() const;  // "< a, b | abAB >"
};

// Deterministic bounded simplification: free/cyclic reduction, removal of
// duplicate relators (up to rotation and inversion), and elimination of any
// generator occurring exactly once in some relator.  `budget` caps the total
// relator length substitutions may produce; candidates that would exceed it
// are skipped.
Presentation simplify(Presentation p, int budget = 4096);

bool obviously_trivial(const Presentation& p, int budget = 4096);

Mat abelianization(const Presentation& p);  // rows = generators, cols = relators
AbelianGroup abelianized_group(const Presentation& p);

}  // namespace trisect
