#ifndef BREGMAN_COMMON_HPP
#define BREGMAN_COMMON_HPP

#include <Eigen/Core>
#include <limits>
#include <stdexcept>
#include <string>

namespace bregman {

using Vec = Eigen::VectorXd;

// Absolute slack below which a point counts as member / above which as interior.
inline constexpr double kMembershipTol = 1e-12;
// Constraint-activity threshold for reflection radii.
inline constexpr double kActiveTol = 1e-10;
// Iterates are kept at least this far from the boundary after mirror steps.
inline constexpr double kInteriorMargin = 1e-14;
// Magnitude bound beyond which divergence evaluations report overflow.
inline constexpr double kOverflowBar = 1e300;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MembershipError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void check_dim(const Vec& x, Eigen::Index dim, const std::string& what) {
  if (x.size() != dim) {
    throw DimensionError(what + ": expected dimension " + std::to_string(dim) +
                         ", got " + std::to_string(x.size()));
  }
}

}  // namespace bregman

#endif  // BREGMAN_COMMON_HPP
