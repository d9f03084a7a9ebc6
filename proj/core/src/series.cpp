#include "cutdiag/series.hpp"

#include <sstream>

#include "cutdiag/core.hpp"

namespace cutdiag {

std::string to_string(const Sequence& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s[i]);
  }
  return out;
}

namespace {

Integer binomial_signed(int e, int m) {
  // e choose m for any integer e, m >= 0
  Integer num = 1, den = 1;
  for (int t = 0; t < m; ++t) {
    num *= (e - t);
    den *= (t + 1);
  }
  return num / den;
}

}  // namespace

TruncatedSeries::TruncatedSeries(int num_generators, int max_degree, bool reduced)
    : n_(num_generators), q_(max_degree), reduced_(reduced) {
  if (n_ < 0) throw Error("negative number of generators");
  if (q_ < 1) throw Error("truncation degree must be at least 1");
  offsets_.resize(q_ + 1);
  std::size_t total = 0, block = 1;
  for (int d = 0; d < q_; ++d) {
    offsets_[d] = total;
    total += block;
    block *= static_cast<std::size_t>(n_);
  }
  offsets_[q_] = total;
  coeffs_.assign(total, Integer(0));
  coeffs_[0] = 1;
}

TruncatedSeries TruncatedSeries::zero(int num_generators, int max_degree, bool reduced) {
  TruncatedSeries s(num_generators, max_degree, reduced);
  s.coeffs_[0] = 0;
  return s;
}

TruncatedSeries TruncatedSeries::generator_power(int num_generators, int max_degree, int i, int exp,
                                                 bool reduced) {
  if (i < 1 || i > num_generators) throw Error("generator X" + std::to_string(i) + " out of range");
  TruncatedSeries s(num_generators, max_degree, reduced);
  const int top = reduced ? std::min(max_degree, 2) : max_degree;
  std::vector<int> seq;
  for (int m = 1; m < top; ++m) {
    seq.push_back(i);
    s.set_coefficient(seq, binomial_signed(exp, m));
  }
  return s;
}

Integer TruncatedSeries::coefficient(std::span<const int> seq) const {
  if (static_cast<int>(seq.size()) >= q_) return 0;
  std::size_t idx = 0;
  for (int g : seq) {
    if (g < 1 || g > n_) throw Error("generator X" + std::to_string(g) + " out of range");
    idx = idx * n_ + (g - 1);
  }
  return coeffs_[offset(seq.size()) + idx];
}

void TruncatedSeries::set_coefficient(std::span<const int> seq, const Integer& value) {
  if (static_cast<int>(seq.size()) >= q_) throw Error("monomial beyond truncation degree");
  std::size_t idx = 0;
  for (int g : seq) {
    if (g < 1 || g > n_) throw Error("generator X" + std::to_string(g) + " out of range");
    idx = idx * n_ + (g - 1);
  }
  coeffs_[offset(seq.size()) + idx] = value;
  if (reduced_) kill_repeats();
}

std::map<Sequence, Integer> TruncatedSeries::coefficients() const {
  std::map<Sequence, Integer> out;
  for (int d = 0; d < q_; ++d) {
    const std::size_t base = offset(d), size = offset(d + 1) - base;
    for (std::size_t idx = 0; idx < size; ++idx) {
      if (coeffs_[base + idx].is_zero()) continue;
      Sequence seq(d);
      std::size_t rest = idx;
      for (int p = d - 1; p >= 0; --p) {
        seq[p] = static_cast<int>(rest % n_) + 1;
        rest /= n_;
      }
      out.emplace(std::move(seq), coeffs_[base + idx]);
    }
  }
  return out;
}

bool TruncatedSeries::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

bool TruncatedSeries::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

void TruncatedSeries::check_compatible(const TruncatedSeries& other) const {
  if (n_ != other.n_ || q_ != other.q_ || reduced_ != other.reduced_)
    throw Error("incompatible truncated series");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  check_compatible(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  check_compatible(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_compatible(b);
  TruncatedSeries out = TruncatedSeries::zero(a.n_, a.q_, a.reduced_);
  std::vector<std::size_t> block(a.q_, 1);
  for (int d = 1; d < a.q_; ++d) block[d] = block[d - 1] * a.n_;
  for (int da = 0; da < a.q_; ++da) {
    const std::size_t oa = a.offset(da);
    for (std::size_t i = 0; i < block[da]; ++i) {
      const Integer& x = a.coeffs_[oa + i];
      if (x.is_zero()) continue;
      for (int db = 0; da + db < a.q_; ++db) {
        const std::size_t ob = b.offset(db);
        const std::size_t oo = out.offset(da + db) + i * block[db];
        for (std::size_t j = 0; j < block[db]; ++j) {
          const Integer& y = b.coeffs_[ob + j];
          if (y.is_zero()) continue;
          out.coeffs_[oo + j] += x * y;
        }
      }
    }
  }
  if (out.reduced_) out.kill_repeats();
  return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (coeffs_[0] != 1 && coeffs_[0] != -1) throw Error("series is not invertible over the integers");
  // s = c(1 - u), s^{-1} = c(1 + u + u^2 + ...)
  const Integer c = coeffs_[0];
  TruncatedSeries u = zero(n_, q_, reduced_);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) u.coeffs_[i] = -coeffs_[i] * c;
  TruncatedSeries out(n_, q_, reduced_);
  TruncatedSeries power(n_, q_, reduced_);
  for (int d = 1; d < q_; ++d) {
    power = power * u;
    out += power;
  }
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

bool TruncatedSeries::operator==(const TruncatedSeries& other) const {
  return n_ == other.n_ && q_ == other.q_ && reduced_ == other.reduced_ && coeffs_ == other.coeffs_;
}

void TruncatedSeries::kill_repeats() {
  for (int d = 2; d < q_; ++d) {
    const std::size_t base = offset(d), size = offset(d + 1) - base;
    std::vector<int> digits(d);
    for (std::size_t idx = 0; idx < size; ++idx) {
      if (coeffs_[base + idx].is_zero()) continue;
      std::size_t rest = idx;
      for (int p = d - 1; p >= 0; --p) {
        digits[p] = static_cast<int>(rest % n_);
        rest /= n_;
      }
      bool repeat = false;
      for (int x = 0; x < d && !repeat; ++x)
        for (int y = x + 1; y < d; ++y)
          if (digits[x] == digits[y]) {
            repeat = true;
            break;
          }
      if (repeat) coeffs_[base + idx] = 0;
    }
  }
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [seq, c] : coefficients()) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (seq.empty()) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    for (std::size_t p = 0; p < seq.size(); ++p) os << (p ? "*" : "") << "X" << seq[p];
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace cutdiag
