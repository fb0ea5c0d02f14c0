#pragma once

#include <array>
#include <string>
#include <string_view>

#include "tlcp/error.hpp"

namespace tlcp {

// Discrete condition grade of a line section. Integer codes are part of the
// data contract (CSV files accept either the code or the lowercase name).
enum class GradeLabel : int {
  Normal = 1,
  Attention = 2,
  Abnormal = 3,
  Serious = 4,
};

inline constexpr int kNumGrades = 4;

inline constexpr std::array<GradeLabel, kNumGrades> kAllGrades = {
    GradeLabel::Normal, GradeLabel::Attention, GradeLabel::Abnormal,
    GradeLabel::Serious};

inline constexpr int grade_code(GradeLabel g) { return static_cast<int>(g); }

// Zero-based index for array storage keyed by grade.
inline constexpr int grade_index(GradeLabel g) { return static_cast<int>(g) - 1; }

GradeLabel grade_from_code(int code);
std::string_view grade_name(GradeLabel g);

// Accepts "normal".."serious" (case-insensitive) or "1".."4".
GradeLabel grade_from_string(std::string_view text);

// Embeddings live in a fixed 6-dimensional space.
inline constexpr int kEmbedDim = 6;
using EmbeddingVector = std::array<double, kEmbedDim>;

}  // namespace tlcp
