#include "trisect/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace trisect {

Word reduced(Word w) {
  Word out;
  for (int x : w) {
    if (x == 0) throw std::invalid_argument("word: zero letter");
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word cyclically_reduced(Word w) {
  w = reduced(std::move(w));
  std::size_t i = 0, j = w.size();
  while (j > i + 1 && w[i] == -w[j - 1]) {
    ++i;
    --j;
  }
  return Word(w.begin() + i, w.begin() + j);
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return reduced(std::move(out));
}

std::string gen_name(int gen, int ngens) {
  if (gen < 0 || gen >= ngens) throw std::out_of_range("gen_name");
  if (ngens <= 26) return std::string(1, static_cast<char>('a' + gen));
  return "x" + std::to_string(gen);
}

std::string word_str(const Word& w, int ngens) {
  if (w.empty()) return "1";
  std::string out;
  for (int x : w) {
    int g = std::abs(x) - 1;
    if (g >= ngens) throw std::out_of_range("word_str: letter out of range");
    if (ngens <= 26) {
      out += static_cast<char>((x > 0 ? 'a' : 'A') + g);
    } else {
      if (!out.empty()) out += ' ';
      out += (x > 0 ? "x" : "X") + std::to_string(g);
    }
  }
  return out;
}

std::string Presentation::str() const {
  std::string out = "< ";
  for (int i = 0; i < ngens; ++i) {
    if (i) out += ", ";
    out += gen_name(i, ngens);
  }
  out += " | ";
  for (std::size_t i = 0; i < rels.size(); ++i) {
    if (i) out += ", ";
    out += word_str(rels[i], ngens);
  }
  out += " >";
  return out;
}

namespace {

// Least rotation of the word or its inverse; relators equal under that are
// interchangeable.
Word rotation_key(const Word& w) {
  if (w.empty()) return w;
  Word best = w;
  for (Word r : {w, inverse_word(w)}) {
    for (std::size_t k = 0; k < r.size(); ++k) {
      std::rotate(r.begin(), r.begin() + 1, r.end());
      if (r < best) best = r;
    }
  }
  return best;
}

bool rel_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void tidy(Presentation& p) {
  std::vector<Word> kept;
  std::vector<Word> keys;
  for (auto& r : p.rels) {
    Word w = cyclically_reduced(std::move(r));
    if (w.empty()) continue;
    Word k = rotation_key(w);
    if (std::find(keys.begin(), keys.end(), k) != keys.end()) continue;
    keys.push_back(std::move(k));
    kept.push_back(std::move(w));
  }
  std::sort(kept.begin(), kept.end(), rel_less);
  p.rels = std::move(kept);
}

std::size_t total_length(const Presentation& p) {
  std::size_t n = 0;
  for (auto& r : p.rels) n += r.size();
  return n;
}

// Replace generator `gen` by `sub` everywhere and renumber the ones above it.
// `sub` must already use the post-removal numbering.
Word substitute(const Word& w, int gen, const Word& sub) {
  Word out;
  for (int x : w) {
    int g = std::abs(x) - 1;
    if (g == gen) {
      const Word& piece = (x > 0) ? sub : inverse_word(sub);
      out.insert(out.end(), piece.begin(), piece.end());
    } else {
      out.push_back(x > 0 ? (g > gen ? x - 1 : x) : (g > gen ? x + 1 : x));
    }
  }
  return reduced(std::move(out));
}

}  // namespace

Presentation simplify(Presentation p, int budget) {
  for (auto& r : p.rels) r = reduced(std::move(r));
  tidy(p);
  bool changed = true;
  while (changed) {
    changed = false;
    // First relator holding some generator exactly once, lowest generator
    // first; skip it if substituting would blow the length budget.
    for (std::size_t ri = 0; ri < p.rels.size() && !changed; ++ri) {
      const Word& r = p.rels[ri];
      for (int g = 0; g < p.ngens && !changed; ++g) {
        int count = 0;
        std::size_t at = 0;
        for (std::size_t k = 0; k < r.size(); ++k)
          if (std::abs(r[k]) - 1 == g) {
            ++count;
            at = k;
          }
        if (count != 1) continue;
        // r = g^e u  =>  g = (u^-1)^e
        Word rot = r;
        std::rotate(rot.begin(), rot.begin() + at, rot.end());
        Word u(rot.begin() + 1, rot.end());
        Word sub = (rot[0] > 0) ? inverse_word(u) : u;
        for (int& x : sub)  // post-removal numbering; u never holds g itself
          if (std::abs(x) - 1 > g) x += (x > 0) ? -1 : 1;
        std::size_t grown = 0;
        for (std::size_t k = 0; k < p.rels.size(); ++k) {
          if (k == ri) continue;
          std::size_t occ = 0;
          for (int x : p.rels[k])
            if (std::abs(x) - 1 == g) ++occ;
          grown += p.rels[k].size() + occ * sub.size();
        }
        if (grown > total_length(p) &&
            grown > static_cast<std::size_t>(budget))
          continue;
        Presentation q;
        q.ngens = p.ngens - 1;
        for (std::size_t k = 0; k < p.rels.size(); ++k) {
          if (k == ri) continue;
          q.rels.push_back(substitute(p.rels[k], g, sub));
        }
        tidy(q);
        p = std::move(q);
        changed = true;
      }
    }
  }
  return p;
}

bool obviously_trivial(const Presentation& p, int budget) {
  return simplify(p, budget).ngens == 0;
}

Mat abelianization(const Presentation& p) {
  Mat m(p.ngens, std::vector<std::int64_t>(p.rels.size(), 0));
  for (std::size_t j = 0; j < p.rels.size(); ++j)
    for (int x : p.rels[j]) {
      int g = std::abs(x) - 1;
      if (g >= p.ngens) throw std::out_of_range("abelianization: bad letter");
      m[g][j] += (x > 0) ? 1 : -1;
    }
  return m;
}

AbelianGroup abelianized_group(const Presentation& p) {
  return cokernel(abelianization(p), p.ngens);
}

}  // namespace trisect
