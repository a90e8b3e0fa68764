#pragma once

// Exact free-group word algebra: freely reduced words, cyclic words,
// substitutions and abelianization. All values are immutable after
// construction and safe to share across threads.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlift {

struct Letter {
  int gen = 0;   // generator index, 0-based
  int sign = 1;  // +1 or -1

  Letter() = default;
  Letter(int g, int s) : gen(g), sign(s) {}

  Letter inverse() const { return Letter{gen, -sign}; }

  // ordering key: generator index first, then sign with +1 < -1
  int key() const { return gen * 2 + (sign < 0 ? 1 : 0); }

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.gen == b.gen && a.sign == b.sign;
  }
  friend auto operator<=>(const Letter& a, const Letter& b) {
    return a.key() <=> b.key();
  }
};

using LetterSeq = std::vector<Letter>;
using AbelianVector = std::vector<long long>;

inline void check_rank(const LetterSeq& letters, int rank, const char* where) {
  for (const Letter& l : letters) {
    if (l.gen < 0 || l.gen >= rank)
      throw std::invalid_argument(std::string(where) + ": letter index " +
                                  std::to_string(l.gen) + " out of rank " +
                                  std::to_string(rank));
    if (l.sign != 1 && l.sign != -1)
      throw std::invalid_argument(std::string(where) + ": bad letter sign");
  }
}

inline LetterSeq reduce_letters(const LetterSeq& raw) {
  LetterSeq out;
  out.reserve(raw.size());
  for (const Letter& l : raw) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

// A freely reduced word. The constructor reduces its input.
class Word {
 public:
  Word() = default;
  explicit Word(LetterSeq raw) : letters_(reduce_letters(raw)) {}

  static Word from_reduced(LetterSeq reduced) {
    Word w;
    w.letters_ = std::move(reduced);
    return w;
  }

  const LetterSeq& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const {
    LetterSeq rev(letters_.rbegin(), letters_.rend());
    for (Letter& l : rev) l.sign = -l.sign;
    return from_reduced(std::move(rev));
  }

  friend Word operator*(const Word& a, const Word& b) {
    LetterSeq cat = a.letters_;
    cat.insert(cat.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(cat));
  }

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }
  friend auto operator<=>(const Word& a, const Word& b) {
    return std::lexicographical_compare_three_way(
        a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
        b.letters_.end());
  }

 private:
  LetterSeq letters_;
};

inline Word reduce(const LetterSeq& raw) { return Word(raw); }

inline AbelianVector abelianize(const Word& w, int rank) {
  check_rank(w.letters(), rank, "abelianize");
  AbelianVector v(rank, 0);
  for (const Letter& l : w.letters()) v[l.gen] += l.sign;
  return v;
}

// A cyclically reduced conjugacy-class representative. Stores the
// lexicographically least rotation so equal classes compare equal.
class CyclicWord {
 public:
  CyclicWord() = default;

  // strips conjugating prefixes and picks the canonical rotation
  explicit CyclicWord(const Word& w) { *this = cyclic_reduce(w).first; }

  static std::pair<CyclicWord, Word> cyclic_reduce(const Word& w) {
    LetterSeq core = w.letters();
    LetterSeq conj;
    while (core.size() >= 2 && core.front() == core.back().inverse()) {
      conj.push_back(core.front());
      core.erase(core.begin());
      core.pop_back();
    }
    std::size_t r = least_rotation(core);
    LetterSeq rot;
    rot.reserve(core.size());
    rot.insert(rot.end(), core.begin() + r, core.end());
    rot.insert(rot.end(), core.begin(), core.begin() + r);
    // core = p . canon . p^-1 with p the pre-rotation prefix
    conj.insert(conj.end(), core.begin(), core.begin() + r);
    CyclicWord cw;
    cw.letters_ = std::move(rot);
    return {cw, Word::from_reduced(std::move(conj))};
  }

  const LetterSeq& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  Word word() const { return Word::from_reduced(letters_); }

  CyclicWord inverse() const { return CyclicWord(word().inverse()); }

  friend bool operator==(const CyclicWord& a, const CyclicWord& b) {
    return a.letters_ == b.letters_;
  }
  friend auto operator<=>(const CyclicWord& a, const CyclicWord& b) {
    return std::lexicographical_compare_three_way(
        a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
        b.letters_.end());
  }

 private:
  static std::size_t least_rotation(const LetterSeq& s) {
    std::size_t n = s.size(), best = 0;
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Letter &a = s[(i + j) % n], &b = s[(best + j) % n];
        if (a.key() != b.key()) {
          if (a.key() < b.key()) best = i;
          break;
        }
      }
    }
    return best;
  }

  LetterSeq letters_;
};

inline std::pair<CyclicWord, Word> cyclic_reduce(const Word& w) {
  return CyclicWord::cyclic_reduce(w);
}

inline AbelianVector abelianize(const CyclicWord& w, int rank) {
  return abelianize(w.word(), rank);
}

// An endomorphism of the rank-r free group given by generator images.
// Carries an explicit inverse when it is a verified automorphism.
class Substitution {
 public:
  Substitution() = default;
  Substitution(int rank, std::vector<Word> images)
      : rank_(rank), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != rank_)
      throw std::invalid_argument("Substitution: image count != rank");
    for (const Word& w : images_) check_rank(w.letters(), rank_, "Substitution");
  }

  static Substitution identity(int rank) {
    std::vector<Word> im;
    for (int g = 0; g < rank; ++g) im.push_back(Word({Letter{g, 1}}));
    Substitution s(rank, im);
    s.inverse_images_ = im;
    return s;
  }

  // builds an automorphism from images + witness inverse; verifies both ways
  static Substitution automorphism(int rank, std::vector<Word> images,
                                   std::vector<Word> inverse_images) {
    Substitution s(rank, std::move(images));
    Substitution t(rank, std::move(inverse_images));
    for (int g = 0; g < rank; ++g) {
      Word gw({Letter{g, 1}});
      if (t.apply(s.apply(gw)) != gw || s.apply(t.apply(gw)) != gw)
        throw std::invalid_argument("Substitution: inverse witness fails");
    }
    s.inverse_images_ = t.images_;
    return s;
  }

  int rank() const { return rank_; }
  const std::vector<Word>& images() const { return images_; }
  bool is_automorphism() const { return inverse_images_.has_value(); }

  Substitution inverse() const {
    if (!inverse_images_)
      throw std::logic_error("Substitution::inverse: no witness");
    Substitution t(rank_, *inverse_images_);
    t.inverse_images_ = images_;
    return t;
  }

  Word apply(const Word& w) const {
    check_rank(w.letters(), rank_, "apply");
    LetterSeq out;
    for (const Letter& l : w.letters()) {
      const Word& im = images_[l.gen];
      if (l.sign > 0)
        out.insert(out.end(), im.letters().begin(), im.letters().end());
      else {
        Word inv = im.inverse();
        out.insert(out.end(), inv.letters().begin(), inv.letters().end());
      }
    }
    return Word(std::move(out));
  }

  CyclicWord apply(const CyclicWord& w) const { return CyclicWord(apply(w.word())); }

  // this o other (apply other first)
  Substitution compose(const Substitution& other) const {
    if (rank_ != other.rank_)
      throw std::invalid_argument("Substitution::compose: rank mismatch");
    std::vector<Word> im;
    for (const Word& w : other.images_) im.push_back(apply(w));
    Substitution s(rank_, std::move(im));
    if (inverse_images_ && other.inverse_images_) {
      Substitution oi = other.inverse();
      Substitution ti = inverse();
      std::vector<Word> inv;
      for (const Word& w : ti.images_) inv.push_back(oi.apply(w));
      s.inverse_images_ = std::move(inv);
    }
    return s;
  }

  // columns = abelianized generator images
  std::vector<AbelianVector> matrix() const {
    std::vector<AbelianVector> cols;
    for (const Word& w : images_) cols.push_back(abelianize(w, rank_));
    return cols;
  }

 private:
  int rank_ = 0;
  std::vector<Word> images_;
  std::optional<std::vector<Word>> inverse_images_;
};

inline Word apply(const Substitution& s, const Word& w) { return s.apply(w); }

// --- elementary Nielsen automorphisms -------------------------------------

// g -> g * h^e, all other generators fixed
inline Substitution nielsen_right(int rank, int g, int h, int e) {
  if (g == h) throw std::invalid_argument("nielsen_right: g == h");
  std::vector<Word> im, inv;
  for (int i = 0; i < rank; ++i) {
    if (i == g) {
      im.push_back(Word({Letter{g, 1}, Letter{h, e}}));
      inv.push_back(Word({Letter{g, 1}, Letter{h, -e}}));
    } else {
      im.push_back(Word({Letter{i, 1}}));
      inv.push_back(Word({Letter{i, 1}}));
    }
  }
  return Substitution::automorphism(rank, im, inv);
}

// g -> g^-1
inline Substitution nielsen_invert(int rank, int g) {
  std::vector<Word> im;
  for (int i = 0; i < rank; ++i) im.push_back(Word({Letter{i, i == g ? -1 : 1}}));
  return Substitution::automorphism(rank, im, im);
}

inline Substitution nielsen_swap(int rank, int g, int h) {
  std::vector<Word> im;
  for (int i = 0; i < rank; ++i) {
    int j = (i == g) ? h : (i == h) ? g : i;
    im.push_back(Word({Letter{j, 1}}));
  }
  return Substitution::automorphism(rank, im, im);
}

// --- text encoding ---------------------------------------------------------
// Lowercase letter = generator, uppercase = inverse. Rank <= 2 uses x, y;
// higher ranks use x1, x2, ... with the digit suffix selecting the index.

inline std::string to_string(const Letter& l, int rank) {
  std::string s;
  if (rank <= 2) {
    char c = (l.gen == 0) ? 'x' : 'y';
    s += (l.sign > 0) ? c : static_cast<char>(std::toupper(c));
  } else {
    s += (l.sign > 0) ? 'x' : 'X';
    s += std::to_string(l.gen + 1);
  }
  return s;
}

inline std::string to_string(const Word& w, int rank) {
  std::string s;
  for (const Letter& l : w.letters()) s += to_string(l, rank);
  return s;
}

inline std::string to_string(const CyclicWord& w, int rank) {
  return to_string(w.word(), rank);
}

inline Word parse_word(const std::string& text, int rank) {
  LetterSeq raw;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    int sign = std::isupper(static_cast<unsigned char>(c)) ? -1 : 1;
    char base = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    int gen;
    ++i;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      if (base != 'x')
        throw std::invalid_argument("parse_word: digit suffix only on x");
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      gen = std::stoi(text.substr(i, j - i)) - 1;
      i = j;
    } else if (base == 'x') {
      gen = 0;
    } else if (base == 'y') {
      gen = 1;
    } else {
      throw std::invalid_argument(std::string("parse_word: bad character '") +
                                  c + "'");
    }
    if (gen < 0 || gen >= rank)
      throw std::invalid_argument("parse_word: generator out of rank");
    raw.push_back(Letter{gen, sign});
  }
  return Word(std::move(raw));
}

inline CyclicWord parse_cyclic(const std::string& text, int rank) {
  return CyclicWord(parse_word(text, rank));
}

}  // namespace mlift
