/* Timing comparison of the OpenMP column assembler against the serial
   reference on the two heaviest differentials.  Both paths compute exact
   rational matrices, so besides the timings the tool verifies that the
   results are identical.

   usage: bench_assemble [dim] [degree]      (defaults: 7 2)

   The workload is the cohomology differential C^k -> C^{k+1} of a filiform
   nilpotent Lie algebra of the given dimension with adjoint coefficients,
   followed by the operator deformation differential of a dense operator on
   the same pair.  RBX_THREADS caps the parallel side. */

#include <rbx/assemble.hpp>
#include <rbx/liealg.hpp>
#include <rbx/rbcx.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

using rbx::lie::LieAlgebra;
using rbx::lie::LieRepPair;
using rbx::lin::QMatrix;
using rbx::lin::rat;

namespace {

/* [e0, ei] = (i+1)/2 e_{i+1} for 1 <= i <= n-2, all other brackets zero.
   Rational structure constants keep the arithmetic honest. */
LieAlgebra filiform(int n) {
  LieAlgebra g = LieAlgebra::abelian(n);
  for (int i = 1; i + 1 < n; ++i) {
    g.bracket[0][i][i + 1] = rat(i + 1, 2);
    g.bracket[i][0][i + 1] = rat(-(i + 1), 2);
  }
  return g;
}

double time_ms(const std::function<QMatrix()>& run, QMatrix& out) {
  const auto start = std::chrono::steady_clock::now();
  out = run();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

int report(const char* name, const std::function<QMatrix()>& parallel,
           const std::function<QMatrix()>& serial) {
  QMatrix mp(0, 0), ms(0, 0);
  const double tp = time_ms(parallel, mp);
  const double ts = time_ms(serial, ms);
  if (!(mp == ms)) {
    std::fprintf(stderr, "MISMATCH: %s parallel and serial results differ\n", name);
    return 1;
  }
  std::printf("%-26s %5zu x %-5zu  serial %8.1f ms  parallel %8.1f ms  speedup %.2fx\n",
              name, mp.rows(), mp.cols(), ts, tp, tp > 0 ? ts / tp : 0.0);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  int dim = 7;
  int degree = 2;
  if (argc > 1) dim = std::atoi(argv[1]);
  if (argc > 2) degree = std::atoi(argv[2]);
  if (dim < 2 || dim > 16 || degree < 0 || degree + 1 > dim) {
    std::fprintf(stderr, "usage: %s [dim 2..16] [degree 0..dim-1]\n", argv[0]);
    return 2;
  }

  const LieAlgebra g = filiform(dim);
  const LieRepPair pair{g, rbx::lie::adjoint_rep(g)};

  QMatrix t(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) t.at(i, j) = rat((i + j) % 5 - 2, 1 + (i * 3 + j) % 3);

  std::printf("filiform dim %d, adjoint coefficients, degree %d -> %d, %d thread(s)\n",
              dim, degree, degree + 1, rbx::lin::effective_thread_count());

  int rc = 0;
  rc |= report("cohomology differential",
               [&] { return rbx::lie::ce_matrix(pair.algebra, pair.rep, degree); },
               [&] { return rbx::lie::ce_matrix_serial(pair.algebra, pair.rep, degree); });
  rc |= report("operator differential",
               [&] { return rbx::rbcx::dT_matrix(pair, t, degree); },
               [&] { return rbx::rbcx::dT_matrix_serial(pair, t, degree); });
  return rc;
}
