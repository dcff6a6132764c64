#include <Eigen/LU>

#include <array>
#include <cmath>

#include "mosd/numeric.hpp"

namespace mosd {

namespace {

// 1-norm thresholds theta_m for double precision diagonal Pade.
constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

double one_norm(const Matrix& A) {
  return A.cwiseAbs().colwise().sum().maxCoeff();
}

// r_m(A) = (V - U)^{-1} (V + U) with U odd and V even Pade terms.
Matrix pade_solve(const Matrix& U, const Matrix& V) {
  return Eigen::PartialPivLU<Matrix>(V - U).solve(V + U);
}

template <std::size_t N>
Matrix pade_low(const Matrix& A, const std::array<double, N>& b) {
  const Eigen::Index n = A.rows();
  const Matrix I = Matrix::Identity(n, n);
  const Matrix A2 = A * A;
  Matrix even = b[0] * I;
  Matrix odd = b[1] * I;
  Matrix power = Matrix::Identity(n, n);
  for (std::size_t k = 2; k < N; k += 2) {
    power = power * A2;  // A^{k}
    even += b[k] * power;
    if (k + 1 < N) odd += b[k + 1] * power;
  }
  return pade_solve(A * odd, even);
}

Matrix pade13(const Matrix& A) {
  static const std::array<double, 14> b = {
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
      1187353796428800.0,  129060195264000.0,   10559470521600.0,
      670442572800.0,      33522128640.0,       1323241920.0,
      40840800.0,          960960.0,            16380.0,
      182.0,               1.0};
  const Eigen::Index n = A.rows();
  const Matrix I = Matrix::Identity(n, n);
  const Matrix A2 = A * A;
  const Matrix A4 = A2 * A2;
  const Matrix A6 = A4 * A2;
  const Matrix U =
      A * (A6 * (b[13] * A6 + b[11] * A4 + b[9] * A2) + b[7] * A6 +
           b[5] * A4 + b[3] * A2 + b[1] * I);
  const Matrix V = A6 * (b[12] * A6 + b[10] * A4 + b[8] * A2) + b[6] * A6 +
                   b[4] * A4 + b[2] * A2 + b[0] * I;
  return pade_solve(U, V);
}

}  // namespace

Matrix expm(const Matrix& A_in) {
  require(A_in.rows() == A_in.cols(), "expm: square matrix required");
  if (!A_in.allFinite()) throw overflow_error("expm: non-finite input");
  const Eigen::Index n = A_in.rows();

  // Trace shift: exp(A) = e^mu exp(A - mu I); keeps the Pade argument
  // small when the spectrum sits far from zero.
  const double mu = A_in.trace() / static_cast<double>(n);
  Matrix A = A_in - mu * Matrix::Identity(n, n);
  const double scale = std::exp(mu);
  if (std::isinf(scale)) throw overflow_error("expm: scalar factor overflow");

  const double norm = one_norm(A);
  Matrix R;
  if (norm <= kTheta3) {
    R = pade_low(A, std::array<double, 4>{120.0, 60.0, 12.0, 1.0});
  } else if (norm <= kTheta5) {
    R = pade_low(A, std::array<double, 6>{30240.0, 15120.0, 3360.0, 420.0,
                                          30.0, 1.0});
  } else if (norm <= kTheta7) {
    R = pade_low(A,
                 std::array<double, 8>{17297280.0, 8648640.0, 1995840.0,
                                       277200.0, 25200.0, 1512.0, 56.0, 1.0});
  } else if (norm <= kTheta9) {
    R = pade_low(A, std::array<double, 10>{17643225600.0, 8821612800.0,
                                           2075673600.0, 302702400.0,
                                           30270240.0, 2162160.0, 110880.0,
                                           3960.0, 90.0, 1.0});
  } else {
    const int squarings =
        std::max(0, static_cast<int>(std::ceil(std::log2(norm / kTheta13))));
    R = pade13(A / std::ldexp(1.0, squarings));
    for (int s = 0; s < squarings; ++s) R = R * R;
  }

  R *= scale;
  if (!R.allFinite()) throw overflow_error("expm: result overflow");
  return R;
}

}  // namespace mosd
