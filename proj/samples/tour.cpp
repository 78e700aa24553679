// A short walk through the library: words, a curve, a snowflake and its tilings.

#include <fibward/fibward.hpp>

#include <fstream>
#include <iostream>

using namespace fibward;

int main() {
  for (int i = 1; i <= 4; ++i) std::cout << "f_5^[" << i << "] = " << fib_word(5, i) << '\n';
  std::cout << "F_30^[3] = " << fib_number(30, 3) << "\n\n";

  const Curve curve = fractal_curve(14, 2);
  std::cout << "F_14^[2]: " << curve.source.size() << " steps, ends at " << curve.path.endpoint() << ", body is "
            << to_string(symmetry_class(curve_body(curve))) << "\n\n";

  const int n = 2;
  const int i = 3;
  const Polyomino flake = build_polyomino(boundary_word(n, i));
  std::cout << "snowflake n=" << n << " i=" << i << ": perimeter " << flake.perimeter() << ", area " << flake.area()
            << ", bounding side " << bounding_square_side(n, i) << '\n';
  for (const auto& cert : certify_all(flake)) {
    std::cout << "  |A|=" << cert.factorization.a.size() << " |B|=" << cert.factorization.b.size() << "  lattice "
              << cert.u << ' ' << cert.v << (cert.verified ? "  verified" : "  FAILED") << '\n';
  }

  std::ofstream("tour_tiling.svg") << render_tiling(flake, certify_all(flake).front(), 16).str();
  std::cout << "\nwrote tour_tiling.svg\n";
}
