#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace odb {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = std::int64_t;

/// Optimality criterion: D maximizes |M|, A maximizes -Tr(M^-1).
enum class Criterion { D, A };

inline const char* to_string(Criterion c) { return c == Criterion::D ? "D" : "A"; }

inline Criterion criterion_from_string(std::string_view s) {
    if (s == "D" || s == "d") return Criterion::D;
    if (s == "A" || s == "a") return Criterion::A;
    throw std::invalid_argument("unknown criterion '" + std::string(s) + "' (expected D or A)");
}

}  // namespace odb
