#include "vmge/sobol.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace vmge {

namespace detail {
extern const std::uint32_t kSobolTableDims;
extern const std::uint32_t kSobolPoly[];      // dims 2..kSobolTableDims
extern const std::uint32_t kSobolMInitial[];  // flattened m-values
}  // namespace detail

namespace {

// 52 fractional bits: every emitted coordinate is an exact double and the
// index budget (2^52 points) is far beyond any practical draw.
constexpr int kSobolBits = 52;
constexpr double kSobolScale = 1.0 / 9007199254740992.0;  // 2^-52

// Offsets of each dimension's m-values within kSobolMInitial, built once.
const std::vector<std::uint64_t>& m_offsets() {
  static const std::vector<std::uint64_t> offsets = [] {
    std::vector<std::uint64_t> off(detail::kSobolTableDims);
    std::uint64_t acc = 0;
    for (std::uint32_t j = 0; j + 1 < detail::kSobolTableDims; ++j) {
      off[j] = acc;
      acc += std::bit_width(detail::kSobolPoly[j]) - 1;
    }
    off[detail::kSobolTableDims - 1] = acc;
    return off;
  }();
  return offsets;
}

// Direction integers v_1..v_kSobolBits for one dimension (1-based dim index),
// scaled so that v_i corresponds to m_i / 2^i.
void fill_directions(int dim_index, std::uint64_t* v) {
  std::uint64_t m[kSobolBits];
  if (dim_index == 1) {
    for (int i = 0; i < kSobolBits; ++i) m[i] = 1;
  } else {
    const std::uint32_t poly = detail::kSobolPoly[dim_index - 2];
    const int s = std::bit_width(poly) - 1;
    const std::uint32_t* init =
        detail::kSobolMInitial + m_offsets()[dim_index - 2];
    for (int i = 0; i < s && i < kSobolBits; ++i) m[i] = init[i];
    // Joe-Kuo recurrence: m_i = (2^s + 1) m_{i-s}  xor  sum of
    // 2^k a_k m_{i-k} over the polynomial's interior coefficients.
    for (int i = s; i < kSobolBits; ++i) {
      std::uint64_t x = m[i - s] ^ (m[i - s] << s);
      for (int k = 1; k < s; ++k) {
        if ((poly >> (s - k)) & 1) x ^= m[i - k] << k;
      }
      m[i] = x;
    }
  }
  for (int i = 0; i < kSobolBits; ++i) {
    v[i] = m[i] << (kSobolBits - 1 - i);
  }
}

}  // namespace

int sobol_max_dimension() {
  return static_cast<int>(detail::kSobolTableDims);
}

SobolSequence::SobolSequence(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("sobol: dim must be >= 1");
  if (dim > sobol_max_dimension()) {
    throw std::invalid_argument(
        "sobol: unsupported dimension " + std::to_string(dim) +
        " (direction-number table covers " +
        std::to_string(sobol_max_dimension()) + ")");
  }
  state_.assign(dim, 0);
  directions_.resize(static_cast<std::size_t>(dim) * kSobolBits);
  for (int j = 0; j < dim; ++j) {
    fill_directions(j + 1, &directions_[static_cast<std::size_t>(j) *
                                        kSobolBits]);
  }
}

void SobolSequence::next(double* out) {
  for (int j = 0; j < dim_; ++j) {
    out[j] = static_cast<double>(state_[j]) * kSobolScale;
  }
  // Gray-code step: flip by the direction indexed by the lowest zero bit.
  const int c = std::countr_one(count_);
  if (c >= kSobolBits) {
    throw std::runtime_error("sobol: sequence exhausted");
  }
  for (int j = 0; j < dim_; ++j) {
    state_[j] ^= directions_[static_cast<std::size_t>(j) * kSobolBits + c];
  }
  ++count_;
}

std::vector<double> SobolSequence::next_point() {
  std::vector<double> p(dim_);
  next(p.data());
  return p;
}

std::vector<double> sobol_points(int dim, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("sobol: n must be >= 1");
  SobolSequence seq(dim);
  std::vector<double> pts(static_cast<std::size_t>(n) * dim);
  for (std::int64_t i = 0; i < n; ++i) {
    seq.next(&pts[static_cast<std::size_t>(i) * dim]);
  }
  return pts;
}

}  // namespace vmge
