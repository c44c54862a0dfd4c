#include "qts/turan.hpp"

#include <algorithm>

namespace qts {

namespace {

std::uint64_t bits_of(const Int& z) { return bit_length(z); }

std::uint64_t bits_of(const Rational& q) {
  return bit_length(q.get_num()) + bit_length(q.get_den());
}

template <class T>
SignedSeq<T> apply_once(const SignedSeq<T>& s) {
  SignedSeq<T> out;
  out.origin_offset = s.origin_offset;
  out.values.resize(s.values.size());
  const long n = static_cast<long>(s.values.size());
  for (long i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    T v = s.values[idx] * s.values[idx];
    if (i > 0 && i + 1 < n) v -= s.values[idx - 1] * s.values[idx + 1];
    out.values[idx] = std::move(v);
  }
  return out;
}

template <class T>
SignedSeq<T> iterate(const SignedSeq<T>& s, int r, std::uint64_t bit_cap) {
  if (r < 1) throw InvalidInputError("iterate count r must be at least 1");
  SignedSeq<T> cur = s;
  for (int step = 0; step < r; ++step) {
    std::uint64_t projected = 0;
    for (const auto& v : cur.values) projected += 2 * bits_of(v) + 1;
    if (projected > bit_cap) {
      throw ResourceError("L iterate " + std::to_string(step + 1) + " would need about " +
                          std::to_string(projected) + " bits (cap " + std::to_string(bit_cap) + ")");
    }
    cur = apply_once(cur);
  }
  return cur;
}

}  // namespace

IntSeq to_signed_seq(const CoeffSeq& seq) { return IntSeq{seq.coeffs(), 0}; }

IntSeq L_apply(const IntSeq& s) { return apply_once(s); }
RationalSeq L_apply(const RationalSeq& s) { return apply_once(s); }

IntSeq L_iterate(const IntSeq& s, int r, std::uint64_t bit_cap) { return iterate(s, r, bit_cap); }
RationalSeq L_iterate(const RationalSeq& s, int r, std::uint64_t bit_cap) {
  return iterate(s, r, bit_cap);
}

std::vector<Int> L_power_on_range(const std::vector<Int>& seq, int r, long lo, long hi,
                                  std::uint64_t bit_cap) {
  if (hi < lo) return {};
  const long n = static_cast<long>(seq.size());
  // The dependency cone of [lo, hi] under r applications is [lo - r, hi + r].
  // Clamping the slice to [0, n-1] makes its zero padding exact, and every
  // output index only reads slice entries or true zeros.
  const long from = std::max(0L, lo - r);
  const long to = std::min(n - 1, hi + r);
  IntSeq slice;
  slice.origin_offset = from;
  if (from <= to) slice.values.assign(seq.begin() + from, seq.begin() + to + 1);
  const IntSeq powered = iterate(slice, r, bit_cap);
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (long k = lo; k <= hi; ++k) out.push_back(powered.at(k));
  return out;
}

TuranReport window_turan_scan(const CoeffSeq& seq, int d, const Window& w, std::uint64_t bit_cap) {
  if (d < 1) throw InvalidInputError("Turan degree d must be at least 1");
  TuranReport report;
  report.params = seq.params();
  report.window = w;
  report.d = d;
  if (w.empty()) {
    report.signs.assign(static_cast<std::size_t>(d), {});
    return report;
  }
  const long n = static_cast<long>(seq.size());
  const long from = std::max(0L, w.lo - d);
  const long to = std::min(n - 1, w.hi + d);
  IntSeq cur;
  cur.origin_offset = from;
  cur.values.assign(seq.coeffs().begin() + from, seq.coeffs().begin() + to + 1);

  for (int r = 1; r <= d; ++r) {
    cur = iterate(cur, 1, bit_cap);
    std::vector<int> row;
    row.reserve(static_cast<std::size_t>(w.count()));
    for (long k = w.lo; k <= w.hi; ++k) {
      const int s = sgn(cur.at(k));
      row.push_back(s > 0 ? 1 : (s < 0 ? -1 : 0));
      if (s < 0 && !report.first_violation) report.first_violation = std::make_pair(r, k);
    }
    report.signs.push_back(std::move(row));
  }
  report.all_pass = !report.first_violation.has_value();
  return report;
}

}  // namespace qts
