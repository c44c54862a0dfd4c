#pragma once

// The operator (L a)_k = a_k^2 - a_{k-1} a_{k+1}, its iterates, and windowed
// degree-d Turan scans.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qts/exactseq.hpp"
#include "qts/moments.hpp"

namespace qts {

inline constexpr std::uint64_t kDefaultBitCap = std::uint64_t{1} << 31;

// values[i] is the entry at original index origin_offset + i; every index
// outside the stored range is 0.
template <class T>
struct SignedSeq {
  std::vector<T> values;
  long origin_offset = 0;

  long first_index() const { return origin_offset; }
  long last_index() const { return origin_offset + static_cast<long>(values.size()) - 1; }
  T at(long k) const {
    const long i = k - origin_offset;
    if (i < 0 || i >= static_cast<long>(values.size())) return T(0);
    return values[static_cast<std::size_t>(i)];
  }
};

using IntSeq = SignedSeq<Int>;
using RationalSeq = SignedSeq<Rational>;

IntSeq to_signed_seq(const CoeffSeq& seq);

// Zero padding on both sides. The support never grows: outside the stored
// range one of the two products always has a zero factor.
IntSeq L_apply(const IntSeq& s);
RationalSeq L_apply(const RationalSeq& s);

// r-fold L_apply. Throws ResourceError when the projected total bit size of
// the next iterate exceeds bit_cap.
IntSeq L_iterate(const IntSeq& s, int r, std::uint64_t bit_cap = kDefaultBitCap);
RationalSeq L_iterate(const RationalSeq& s, int r, std::uint64_t bit_cap = kDefaultBitCap);

struct TuranReport {
  Params params;
  Window window;
  int d = 0;
  // signs[r-1][k - window.lo] in {-1, 0, +1}.
  std::vector<std::vector<int>> signs;
  std::optional<std::pair<int, long>> first_violation;  // (r, k)
  bool all_pass = true;
};

// (L^r seq)_k for r = 1..d and k in the window, computed from the full
// sequence (zero padding only beyond [0, degree]).
TuranReport window_turan_scan(const CoeffSeq& seq, int d, const Window& w,
                              std::uint64_t bit_cap = kDefaultBitCap);

// Entries of L^r over [lo, hi] using true values outside the range.
std::vector<Int> L_power_on_range(const std::vector<Int>& seq, int r, long lo, long hi,
                                  std::uint64_t bit_cap = kDefaultBitCap);

}  // namespace qts
