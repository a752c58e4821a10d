#pragma once

#include "ocdd/grid.hpp"
#include "ocdd/iteration.hpp"
#include "ocdd/theory.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace ocdd::csv {

/// Full-precision decimal rendering (17 significant digits): values survive
/// a write/read round trip bit-exactly and files diff cleanly.
std::string format(double v);

/// Grid functions: header `x,value` (1D) or `x1,x2,value` (2D, row-major in
/// x1 then x2).
void write_grid_function(std::ostream& os, const Mesh1D& mesh, const GridFunction1D& g);
void write_grid_function(std::ostream& os, const Mesh2D& mesh, const GridFunction2D& g);

/// Reads a grid-function CSV written in the format above; the node count
/// must match the mesh.
GridFunction1D read_grid_function(std::istream& is, const Mesh1D& mesh);
GridFunction2D read_grid_function(std::istream& is, const Mesh2D& mesh);

/// Iteration report: `iter,trace_err,ratio` rows (the initial record has an
/// empty ratio), then a `verdict,rate` summary block.
void write_report(std::ostream& os, const IterationReport& report);

/// Frequency scan `k,rho` rows, the analytic limit as a final `limit` row,
/// then a `method,nu,alpha,theta_star,sup_rho` summary block.
void write_theory_scan(std::ostream& os, theory::Method method, double nu, double alpha,
                       double theta, int k_scan);

} // namespace ocdd::csv
