#include "netclass/image_features.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>

#include "netclass/error.hpp"

namespace netclass {

namespace {

// Circular 8-neighbourhood, counter-clockwise starting east.
constexpr std::array<std::array<int, 2>, 8> kRing{{
    {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}, {1, 0}, {1, 1},
}};

}  // namespace

FeatureVector projection(const BinaryMatrix& image, std::size_t length) {
  const std::size_t n = image.size();
  if (n > length) {
    fail(ErrorKind::capacity, "matrix of size " + std::to_string(n) + " does not fit a projection of length " +
                                  std::to_string(length) + "; use a larger length");
  }
  FeatureVector out;
  out.extractor = "projection";
  out.values.assign(length, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    const auto row = image.row(r);
    for (std::size_t c = 0; c < n; ++c) out.values[c] += row[c];
  }
  return out;
}

unsigned riu2_label(std::uint8_t pattern) {
  const auto rotated = static_cast<std::uint8_t>((pattern >> 1) | (pattern << 7));
  const int transitions = std::popcount(static_cast<unsigned>(pattern ^ rotated));
  return transitions <= 2 ? static_cast<unsigned>(std::popcount(static_cast<unsigned>(pattern))) : 9u;
}

FeatureVector clbp_features(const BinaryMatrix& image) {
  const std::size_t n = image.size();
  if (n < 3) fail(ErrorKind::invalid_argument, "CLBP needs an image of at least 3x3");

  const auto cells = image.cells();
  const double image_mean =
      static_cast<double>(std::count(cells.begin(), cells.end(), std::uint8_t{1})) / static_cast<double>(cells.size());

  // Mean absolute difference over every interior pixel and neighbour.
  std::uint64_t abs_sum = 0;
  for (std::size_t r = 1; r + 1 < n; ++r) {
    for (std::size_t c = 1; c + 1 < n; ++c) {
      const int center = image(r, c);
      for (const auto& [dr, dc] : kRing) abs_sum += static_cast<unsigned>(std::abs(image(r + dr, c + dc) - center));
    }
  }
  const std::size_t interior = (n - 2) * (n - 2);
  const double mean_abs = static_cast<double>(abs_sum) / static_cast<double>(interior * kRing.size());

  std::array<std::uint8_t, 256> riu2{};
  for (unsigned p = 0; p < 256; ++p) riu2[p] = static_cast<std::uint8_t>(riu2_label(static_cast<std::uint8_t>(p)));

  std::array<std::uint64_t, kClbpBins> counts{};
  for (std::size_t r = 1; r + 1 < n; ++r) {
    for (std::size_t c = 1; c + 1 < n; ++c) {
      const int center = image(r, c);
      unsigned sign = 0;
      unsigned magnitude = 0;
      for (std::size_t p = 0; p < kRing.size(); ++p) {
        const int diff = image(r + kRing[p][0], c + kRing[p][1]) - center;
        sign |= static_cast<unsigned>(diff >= 0) << p;
        magnitude |= static_cast<unsigned>(std::abs(diff) >= mean_abs) << p;
      }
      const unsigned center_bit = static_cast<double>(center) >= image_mean ? 1u : 0u;
      ++counts[(riu2[sign] * 10u + riu2[magnitude]) * 2u + center_bit];
    }
  }

  FeatureVector out;
  out.extractor = "clbp";
  out.values.resize(kClbpBins);
  for (std::size_t i = 0; i < kClbpBins; ++i) {
    out.values[i] = static_cast<double>(counts[i]) / static_cast<double>(interior);
  }
  return out;
}

FeatureVector hu_moments(const BinaryMatrix& image) {
  const std::size_t n = image.size();
  std::size_t min_x = n, min_y = n;
  for (std::size_t y = 0; y < n; ++y) {
    const auto row = image.row(y);
    for (std::size_t x = 0; x < n; ++x) {
      if (!row[x]) continue;
      min_x = std::min(min_x, x);
      min_y = std::min(min_y, y);
    }
  }
  if (min_x == n) fail(ErrorKind::undefined_value, "Hu moments are undefined for an image without set pixels");

  // Raw moments up to order 3 in exact integer arithmetic, coordinates
  // relative to the bounding box corner.
  __extension__ typedef __int128 Int;
  Int m00 = 0, m10 = 0, m01 = 0, m20 = 0, m11 = 0, m02 = 0, m30 = 0, m21 = 0, m12 = 0, m03 = 0;
  for (std::size_t y = min_y; y < n; ++y) {
    const auto row = image.row(y);
    const Int yy = static_cast<Int>(y - min_y);
    for (std::size_t x = min_x; x < n; ++x) {
      if (!row[x]) continue;
      const Int xx = static_cast<Int>(x - min_x);
      m00 += 1;
      m10 += xx;
      m01 += yy;
      m20 += xx * xx;
      m11 += xx * yy;
      m02 += yy * yy;
      m30 += xx * xx * xx;
      m21 += xx * xx * yy;
      m12 += xx * yy * yy;
      m03 += yy * yy * yy;
    }
  }

  // Scaled central moments T_pq = m00^(p+q-1) * mu_pq, still exact. Being
  // exact, a rotated or mirrored image yields exactly permuted and negated
  // T values, so the invariants agree bit for bit.
  const Int t20 = m00 * m20 - m10 * m10;
  const Int t02 = m00 * m02 - m01 * m01;
  const Int t11 = m00 * m11 - m10 * m01;
  const Int t30 = m00 * m00 * m30 - 3 * m00 * m10 * m20 + 2 * m10 * m10 * m10;
  const Int t03 = m00 * m00 * m03 - 3 * m00 * m01 * m02 + 2 * m01 * m01 * m01;
  const Int t21 = m00 * m00 * m21 - 2 * m00 * m10 * m11 - m00 * m01 * m20 + 2 * m10 * m10 * m01;
  const Int t12 = m00 * m00 * m12 - 2 * m00 * m01 * m11 - m00 * m10 * m02 + 2 * m01 * m01 * m10;

  // eta_pq = mu_pq / m00^(1 + (p+q)/2) = T_pq / m00^(3(p+q)/2)
  const double area = static_cast<double>(m00);
  const double s2 = area * area * area;
  const double s3 = area * area * area * area * std::sqrt(area);
  const double n20 = static_cast<double>(t20) / s2, n02 = static_cast<double>(t02) / s2;
  const double n11 = static_cast<double>(t11) / s2;
  const double n30 = static_cast<double>(t30) / s3, n03 = static_cast<double>(t03) / s3;
  const double n21 = static_cast<double>(t21) / s3, n12 = static_cast<double>(t12) / s3;

  const double a = n30 + n12;
  const double b = n21 + n03;
  const double p = n30 - 3 * n12;
  const double q = 3 * n21 - n03;

  FeatureVector out;
  out.extractor = "hu";
  out.values = {
      n20 + n02,
      (n20 - n02) * (n20 - n02) + 4 * n11 * n11,
      p * p + q * q,
      a * a + b * b,
      p * a * (a * a - 3 * b * b) + q * b * (3 * a * a - b * b),
      (n20 - n02) * (a * a - b * b) + 4 * n11 * (a * b),
      q * a * (a * a - 3 * b * b) - p * b * (3 * a * a - b * b),
  };
  return out;
}

BinaryMatrix dilate(const BinaryMatrix& image) {
  const std::size_t n = image.size();
  BinaryMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (!image(r, c)) continue;
      for (std::size_t y = r == 0 ? 0 : r - 1; y <= std::min(r + 1, n - 1); ++y) {
        for (std::size_t x = c == 0 ? 0 : c - 1; x <= std::min(c + 1, n - 1); ++x) out.set(y, x, true);
      }
    }
  }
  return out;
}

std::string render_pgm(const BinaryMatrix& image, bool dilated) {
  if (dilated) return render_pgm(dilate(image), false);
  const std::size_t n = image.size();
  std::string bytes = "P5\n" + std::to_string(n) + " " + std::to_string(n) + "\n255\n";
  const std::size_t header = bytes.size();
  bytes.resize(header + n * n);
  const auto cells = image.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) bytes[header + i] = static_cast<char>(cells[i] ? 255 : 0);
  return bytes;
}

void write_pgm(const std::filesystem::path& path, const BinaryMatrix& image, bool dilated) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::io, "cannot write " + path.string());
  const std::string bytes = render_pgm(image, dilated);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) fail(ErrorKind::io, "write failed for " + path.string());
}

BinaryMatrix decode_pgm(std::string_view bytes) {
  std::size_t pos = 0;
  auto next_token = [&]() -> std::string_view {
    while (pos < bytes.size()) {
      if (bytes[pos] == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(bytes[pos]))) {
        ++pos;
      } else {
        break;
      }
    }
    const std::size_t start = pos;
    while (pos < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[pos]))) ++pos;
    return bytes.substr(start, pos - start);
  };
  auto number = [&](std::string_view token) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) fail(ErrorKind::parse, "malformed PGM header");
    return value;
  };

  if (next_token() != "P5") fail(ErrorKind::parse, "not a binary PGM (P5)");
  const std::size_t width = number(next_token());
  const std::size_t height = number(next_token());
  const std::size_t maxval = number(next_token());
  if (width != height) fail(ErrorKind::parse, "PGM image is not square");
  if (maxval == 0 || maxval > 255) fail(ErrorKind::parse, "unsupported PGM maxval");
  ++pos;  // single whitespace after maxval
  if (bytes.size() < pos + width * height) fail(ErrorKind::parse, "truncated PGM raster");

  std::vector<std::uint8_t> cells(width * height);
  for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = bytes[pos + i] != 0 ? 1 : 0;
  return BinaryMatrix(width, std::move(cells));
}

}  // namespace netclass
