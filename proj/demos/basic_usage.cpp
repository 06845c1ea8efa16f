// Evaluates the support function, its canonical subgradient and the gauge
// on a small constrained instance.

#include <iostream>

#include "gmf/gmf.hpp"

int main() {
  using gmf::Matrix;

  Matrix a(1, 3);
  a << 1, 1, 0;
  const gmf::ConstraintPair cp(a, Matrix::Zero(1, 2));

  Matrix x(3, 2);
  x << 1, 0, -1, 2, 0.5, 1;
  const gmf::DualPoint dual(x, Matrix::Identity(3, 3));

  const auto support = gmf::eval_support(dual, cp);
  std::cout << "support value: " << support.value.value() << "\n";
  std::cout << "maximizer Y*:\n" << support.maximizer << "\n";

  const auto sub = gmf::canonical_subgradient(dual, cp);
  std::cout << "Fenchel gap: " << gmf::pairing(sub.point, dual) - sub.value << "\n";
  std::cout << "subgradient in Omega: " << std::boolalpha << gmf::in_omega(sub.point, cp) << "\n";

  // Scale the subgradient's W component to push it into the relative interior.
  const gmf::PrimalPoint pt(sub.point.y, 2.0 * sub.point.w);
  std::cout << "gauge of (Y*, 2W*): " << gmf::eval_gauge(pt, cp).value.value() << "\n";
  return 0;
}
