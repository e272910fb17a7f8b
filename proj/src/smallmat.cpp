#include "yjunction/smallmat.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "yjunction/errors.hpp"

namespace yjunction {

Complex det2(const Mat2& x) { return x(0, 0) * x(1, 1) - x(0, 1) * x(1, 0); }

Mat2 inverse2(const Mat2& x) {
  const Complex det = det2(x);
  const double scale = max_norm(x);
  if (!(std::abs(det) > 1e-13 * scale * scale))
    throw SingularMatrixError("inverse2: singular 2x2 matrix (|det| = " +
                              std::to_string(std::abs(det)) + ")");
  Mat2 r;
  r(0, 0) = x(1, 1) / det;
  r(0, 1) = -x(0, 1) / det;
  r(1, 0) = -x(1, 0) / det;
  r(1, 1) = x(0, 0) / det;
  return r;
}

Mat3 gell_mann(int index) {
  Mat3 m;
  switch (index) {
    case 1:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case 2:
      m(0, 1) = -kI;
      m(1, 0) = kI;
      break;
    case 3:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
    case 4:
      m(0, 2) = 1.0;
      m(2, 0) = 1.0;
      break;
    case 5:
      m(0, 2) = -kI;
      m(2, 0) = kI;
      break;
    case 6:
      m(1, 2) = 1.0;
      m(2, 1) = 1.0;
      break;
    case 7:
      m(1, 2) = -kI;
      m(2, 1) = kI;
      break;
    case 8: {
      const double s = 1.0 / std::sqrt(3.0);
      m(0, 0) = s;
      m(1, 1) = s;
      m(2, 2) = -2.0 * s;
      break;
    }
    default:
      throw std::invalid_argument("gell_mann: index must be in 1..8, got " +
                                  std::to_string(index));
  }
  return m;
}

Mat3 exp_i_generator(int index, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  switch (index) {
    case 2: {
      // i*lambda_2 is the real antisymmetric generator [[0,1],[-1,0]] on (1,2).
      Mat3 m = Mat3::identity();
      m(0, 0) = c;
      m(0, 1) = s;
      m(1, 0) = -s;
      m(1, 1) = c;
      return m;
    }
    case 5: {
      Mat3 m = Mat3::identity();
      m(0, 0) = c;
      m(0, 2) = s;
      m(2, 0) = -s;
      m(2, 2) = c;
      return m;
    }
    case 3:
      return Mat3::diagonal({std::polar(1.0, angle), std::polar(1.0, -angle), 1.0});
    case 8: {
      const double t = angle / std::sqrt(3.0);
      return Mat3::diagonal({std::polar(1.0, t), std::polar(1.0, t), std::polar(1.0, -2.0 * t)});
    }
    default:
      throw std::invalid_argument(
          "exp_i_generator: only lambda_2, lambda_3, lambda_5, lambda_8 are supported, got " +
          std::to_string(index));
  }
}

}  // namespace yjunction
