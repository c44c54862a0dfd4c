#include "qts/exactseq.hpp"

#include <numeric>
#include <sstream>

namespace qts {

BoxParams::BoxParams(long a_, long b_) : a(a_), b(b_) {
  if (a < 0 || b < 0) throw InvalidInputError("box parameters must be nonnegative");
}

Composition::Composition(std::vector<long> parts_) : parts(std::move(parts_)) {
  if (parts.size() < 2) throw InvalidInputError("a composition needs at least two parts");
  for (long n : parts) {
    if (n < 1) throw InvalidInputError("composition parts must be positive");
  }
}

long Composition::degree() const {
  long total = 0;
  long prefix = 0;
  for (long n : parts) {
    total += prefix * n;
    prefix += n;
  }
  return total;
}

long Composition::size() const { return std::accumulate(parts.begin(), parts.end(), 0L); }

long degree_of(const Params& p) {
  return std::visit([](const auto& x) { return x.degree(); }, p);
}

long size_of(const Params& p) {
  return std::visit([](const auto& x) { return x.size(); }, p);
}

std::string describe(const Params& p) {
  std::ostringstream os;
  if (const auto* box = std::get_if<BoxParams>(&p)) {
    os << "(" << box->a << "," << box->b << ")";
  } else {
    const auto& parts = std::get<Composition>(p).parts;
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ")";
  }
  return os.str();
}

const char* kind_name(const Params& p) {
  return std::holds_alternative<BoxParams>(p) ? "qbinom" : "qmultinom";
}

CoeffSeq::CoeffSeq(Params params, std::vector<Int> coeffs)
    : params_(std::move(params)), coeffs_(std::move(coeffs)) {
  if (static_cast<long>(coeffs_.size()) != degree_of(params_) + 1) {
    throw InvalidInputError("coefficient count does not match the parameter degree");
  }
}

Int CoeffSeq::at_or_zero(long k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Int CoeffSeq::total() const {
  Int sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

namespace detail {

void multiply_one_minus_qk(std::vector<Int>& c, long& deg, long k) {
  const long new_deg = deg + k;
  if (static_cast<long>(c.size()) < new_deg + 1) c.resize(static_cast<std::size_t>(new_deg + 1));
  for (long i = new_deg; i >= k; --i) {
    mpz_sub(c[i].get_mpz_t(), c[i].get_mpz_t(), c[i - k].get_mpz_t());
  }
  deg = new_deg;
}

void divide_one_minus_qk(std::vector<Int>& c, long& deg, long k) {
  for (long i = k; i <= deg; ++i) {
    mpz_add(c[i].get_mpz_t(), c[i].get_mpz_t(), c[i - k].get_mpz_t());
  }
  // The top k entries are the remainder and must vanish.
  for (long i = deg - k + 1; i <= deg; ++i) {
    if (i >= 0 && sgn(c[i]) != 0) {
      throw InternalInconsistencyError("division by (1 - q^" + std::to_string(k) +
                                       ") left a nonzero remainder");
    }
  }
  deg -= k;
}

}  // namespace detail

namespace {

// Inputs here are never large enough for deg + k to overflow a long in
// practice; reserve the final size up front to avoid reallocation.
std::vector<Int> start_ladder(long final_degree) {
  std::vector<Int> c;
  c.reserve(static_cast<std::size_t>(final_degree) + 1);
  c.emplace_back(1);
  return c;
}

}  // namespace

CoeffSeq qbinom_coeffs(const BoxParams& p) {
  auto c = start_ladder(p.degree() + p.a + p.b);
  long deg = 0;
  for (long i = 1; i <= p.a; ++i) {
    detail::multiply_one_minus_qk(c, deg, p.b + i);
    detail::divide_one_minus_qk(c, deg, i);
  }
  c.resize(static_cast<std::size_t>(deg) + 1);
  return CoeffSeq(p, std::move(c));
}

CoeffSeq qmultinom_coeffs(const Composition& comp) {
  auto c = start_ladder(comp.degree() + comp.size());
  long deg = 0;
  long prefix = comp.parts.front();
  // The first stage multiplies and divides by the same factors.
  for (std::size_t i = 1; i < comp.parts.size(); ++i) {
    for (long t = 1; t <= comp.parts[i]; ++t) {
      detail::multiply_one_minus_qk(c, deg, prefix + t);
      detail::divide_one_minus_qk(c, deg, t);
    }
    prefix += comp.parts[i];
  }
  c.resize(static_cast<std::size_t>(deg) + 1);
  return CoeffSeq(comp, std::move(c));
}

CoeffSeq generate(const Params& p) {
  if (const auto* box = std::get_if<BoxParams>(&p)) return qbinom_coeffs(*box);
  return qmultinom_coeffs(std::get<Composition>(p));
}

Int partition_count_oracle(const BoxParams& p, long k) {
  if (k < 0 || k > p.degree()) {
    throw RangeError("k = " + std::to_string(k) + " outside [0, " + std::to_string(p.degree()) + "]");
  }
  // ways[n][s]: partitions of s into exactly n parts, all parts drawn from
  // the sizes processed so far. Adding sizes one at a time with ascending
  // loops allows each size to repeat.
  const auto parts = static_cast<std::size_t>(p.a);
  const auto sum = static_cast<std::size_t>(k);
  std::vector<std::vector<Int>> ways(parts + 1, std::vector<Int>(sum + 1, 0));
  ways[0][0] = 1;
  for (long size = 1; size <= p.b; ++size) {
    const auto v = static_cast<std::size_t>(size);
    for (std::size_t n = 1; n <= parts; ++n) {
      for (std::size_t s = v; s <= sum; ++s) {
        ways[n][s] += ways[n - 1][s - v];
      }
    }
  }
  Int count = 0;
  for (std::size_t n = 0; n <= parts; ++n) count += ways[n][sum];
  return count;
}

Int multinomial(const std::vector<long>& parts) {
  Int out = 1;
  long prefix = 0;
  for (long n : parts) {
    prefix += n;
    out *= binomial(prefix, n);
  }
  return out;
}

Int q_one_mass(const Params& p) {
  if (const auto* box = std::get_if<BoxParams>(&p)) return binomial(box->a + box->b, box->a);
  return multinomial(std::get<Composition>(p).parts);
}

}  // namespace qts
