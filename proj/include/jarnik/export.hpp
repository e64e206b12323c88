#pragma once

#include <string>
#include <vector>

#include "jarnik/analysis.hpp"
#include "jarnik/curvature.hpp"
#include "jarnik/limit_curves.hpp"
#include "jarnik/polygon.hpp"

namespace jarnik {

// Shortest round-trip form, "." decimal separator regardless of locale.
std::string format_double(double v);

// CSV documents: a header line, then one LF-terminated line per row.
std::string polygon_csv(const LatticePolygon& polygon);  // x,y (integers)
std::string polygon_csv(const ScaledPolygon& polygon);   // x,y
std::string curve_csv(const LimitCurve& curve, int samples);  // lambda,x,y
std::string trace_csv(const std::vector<CurvatureSample>& trace);
std::string convergence_csv(const std::vector<ConvergenceRecord>& rows);

std::string polygon_svg(const ScaledPolygon& polygon);
// The curve together with its seven images under the dihedral group.
std::string curve_svg(const LimitCurve& curve, int samples);
// Step plot of r~ against log Q with the lim sup band and the limit radius.
std::string trace_svg(const std::vector<CurvatureSample>& trace, const CurvatureBounds& bounds);

/// Writes via a temporary file in the same directory and a rename, so the
/// target is either untouched or complete. Throws std::runtime_error.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace jarnik
