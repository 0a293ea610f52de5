#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "netclass/dataset.hpp"
#include "netclass/graph.hpp"

namespace netclass {

// Matrices are read as images with x = column, y = row, origin top-left.

inline constexpr std::size_t kProjectionLength = 2500;
inline constexpr std::size_t kClbpBins = 200;
inline constexpr std::size_t kHuCount = 7;

// Column sums, zero-padded to `length`. For a degree-sorted adjacency matrix
// this is the descending degree sequence.
FeatureVector projection(const BinaryMatrix& image, std::size_t length = kProjectionLength);

// Rotation-invariant uniform label of an 8-bit circular pattern: the number
// of set bits when the pattern has at most two 0/1 transitions, 9 otherwise.
unsigned riu2_label(std::uint8_t pattern);

// Completed LBP with P = 8, R = 1 over interior pixels. The sign and
// magnitude codes are riu2-mapped (10 labels each) and combined with the
// centre bit into a joint 10 x 10 x 2 histogram, index (s * 10 + m) * 2 + c,
// normalised to sum 1. step(x) = 1 iff x >= 0. The magnitude threshold is
// the mean |neighbour - centre| over all interior pixels; the centre
// threshold is the mean intensity of the whole image.
FeatureVector clbp_features(const BinaryMatrix& image);

// The seven Hu invariants of the set pixels, raw (no log scaling).
// Central moments are computed exactly in integer arithmetic, so translated,
// 90-degree rotated and mirrored copies give bit-identical invariants (phi7
// changes sign under mirroring). Throws
// Error{undefined_value} for an image with no set pixel.
FeatureVector hu_moments(const BinaryMatrix& image);

// One pass of a 3x3 binary max filter.
BinaryMatrix dilate(const BinaryMatrix& image);

// Binary PGM (P5, maxval 255): 1 -> 255, 0 -> 0.
std::string render_pgm(const BinaryMatrix& image, bool dilated);
void write_pgm(const std::filesystem::path& path, const BinaryMatrix& image, bool dilated);
// Inverse of render_pgm for square images; nonzero samples map to 1.
BinaryMatrix decode_pgm(std::string_view bytes);

}  // namespace netclass
