#include "tlcp/types.hpp"

#include <algorithm>
#include <cctype>

namespace tlcp {

GradeLabel grade_from_code(int code) {
  if (code < 1 || code > 4) {
    throw InvalidInputError("grade code must be in 1..4, got " +
                            std::to_string(code));
  }
  return static_cast<GradeLabel>(code);
}

std::string_view grade_name(GradeLabel g) {
  switch (g) {
    case GradeLabel::Normal:
      return "normal";
    case GradeLabel::Attention:
      return "attention";
    case GradeLabel::Abnormal:
      return "abnormal";
    case GradeLabel::Serious:
      return "serious";
  }
  throw InvalidInputError("corrupt grade value");
}

GradeLabel grade_from_string(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (GradeLabel g : kAllGrades) {
    if (lower == grade_name(g)) return g;
  }
  if (lower.size() == 1 && lower[0] >= '1' && lower[0] <= '4') {
    return grade_from_code(lower[0] - '0');
  }
  throw InvalidInputError("unknown grade \"" + std::string(text) + "\"");
}

}  // namespace tlcp
