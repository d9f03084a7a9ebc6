#pragma once

// Noncommutative integer polynomials in X_1..X_n truncated by total degree.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cutdiag {

using Integer = boost::multiprecision::cpp_int;

/// Index sequence (i_1, ..., i_k), entries 1-based.
using Sequence = std::vector<int>;

std::string to_string(const Sequence& s);

/// Elements of Z<<X_1..X_n>> modulo all monomials of degree >= max_degree.
/// With `reduced` set, monomials repeating an index are discarded as well.
class TruncatedSeries {
public:
  TruncatedSeries() : TruncatedSeries(0, 1) {}
  /// The constant series 1.
  TruncatedSeries(int num_generators, int max_degree, bool reduced = false);

  static TruncatedSeries zero(int num_generators, int max_degree, bool reduced = false);
  /// (1 + X_i)^exp, exp of any sign.
  static TruncatedSeries generator_power(int num_generators, int max_degree, int i, int exp,
                                         bool reduced = false);

  int num_generators() const noexcept { return n_; }
  int max_degree() const noexcept { return q_; }
  bool reduced() const noexcept { return reduced_; }

  Integer coefficient(std::span<const int> seq) const;
  void set_coefficient(std::span<const int> seq, const Integer& value);

  /// Nonzero coefficients, the constant term under the empty sequence.
  std::map<Sequence, Integer> coefficients() const;

  bool is_one() const;
  bool is_zero() const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries& operator*=(const TruncatedSeries& rhs) { return *this = *this * rhs; }

  /// Multiplicative inverse; the constant term must be +1 or -1.
  TruncatedSeries inverse() const;

  bool operator==(const TruncatedSeries& other) const;

  std::string to_string() const;

private:
  void check_compatible(const TruncatedSeries& other) const;
  std::size_t offset(std::size_t degree) const { return offsets_[degree]; }
  void kill_repeats();

  int n_;
  int q_;
  bool reduced_;
  std::vector<std::size_t> offsets_;  // start of each degree block, size q+1
  std::vector<Integer> coeffs_;       // degree blocks of n^d entries, big-endian index
};

}  // namespace cutdiag
