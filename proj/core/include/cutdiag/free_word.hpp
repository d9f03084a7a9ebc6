#pragma once

// Freely reduced words in a free group over an arbitrary ordered alphabet.

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cutdiag/core.hpp"

namespace cutdiag {

template <class Gen>
struct Letter {
  Gen gen{};
  int exp = 1;

  bool operator==(const Letter&) const = default;
};

/// A word g_1^{e_1} ... g_m^{e_m} kept freely reduced: no zero exponents and no
/// two adjacent letters on the same generator.
template <class Gen>
class Word {
public:
  using letter_type = Letter<Gen>;

  Word() = default;
  Word(std::initializer_list<letter_type> letters) {
    for (const auto& l : letters) push_back(l.gen, l.exp);
  }

  static Word generator(const Gen& g, int exp = 1) {
    Word w;
    w.push_back(g, exp);
    return w;
  }

  void push_back(const Gen& g, int exp) {
    if (exp == 0) return;
    if (!letters_.empty() && letters_.back().gen == g) {
      letters_.back().exp += exp;
      if (letters_.back().exp == 0) letters_.pop_back();
      return;
    }
    letters_.push_back({g, exp});
  }

  Word& operator*=(const Word& rhs) {
    // rhs may alias *this
    const std::size_t n = rhs.letters_.size();
    for (std::size_t i = 0; i < n; ++i) push_back(rhs.letters_[i].gen, rhs.letters_[i].exp);
    return *this;
  }

  friend Word operator*(Word lhs, const Word& rhs) {
    lhs *= rhs;
    return lhs;
  }

  Word inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back({it->gen, -it->exp});
    return w;
  }

  Word pow(int e) const {
    Word base = e < 0 ? inverse() : *this;
    Word out;
    for (int i = 0; i < (e < 0 ? -e : e); ++i) out *= base;
    return out;
  }

  /// Word obtained by substituting every generator.
  template <class F>
  auto substitute(F&& image) const -> std::remove_cvref_t<decltype(image(std::declval<Gen>()))> {
    using Out = std::remove_cvref_t<decltype(image(std::declval<Gen>()))>;
    Out out;
    for (const auto& l : letters_) out *= image(l.gen).pow(l.exp);
    return out;
  }

  /// Same word with every letter on `g` removed (freely reduced again).
  Word without(const Gen& g) const {
    Word out;
    for (const auto& l : letters_)
      if (!(l.gen == g)) out.push_back(l.gen, l.exp);
    return out;
  }

  bool empty() const noexcept { return letters_.empty(); }
  std::size_t size() const noexcept { return letters_.size(); }
  /// Sum of |exponent| over all letters.
  std::size_t length() const noexcept {
    std::size_t n = 0;
    for (const auto& l : letters_) n += static_cast<std::size_t>(l.exp < 0 ? -l.exp : l.exp);
    return n;
  }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  const letter_type& operator[](std::size_t i) const { return letters_[i]; }

  bool operator==(const Word&) const = default;

private:
  std::vector<letter_type> letters_;
};

/// Letters are regions of a cut-diagram.
using RegionWord = Word<RegionRef>;
/// Letters are meridian indices 1..n.
using MeridianWord = Word<int>;

/// [a, b] = a^{-1} b^{-1} a b
template <class Gen>
Word<Gen> commutator(const Word<Gen>& a, const Word<Gen>& b) {
  return a.inverse() * b.inverse() * a * b;
}

std::string to_string(const RegionWord& w);
std::string to_string(const MeridianWord& w);

inline std::ostream& operator<<(std::ostream& os, const RegionWord& w) { return os << to_string(w); }
inline std::ostream& operator<<(std::ostream& os, const MeridianWord& w) { return os << to_string(w); }

}  // namespace cutdiag
