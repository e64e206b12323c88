#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <optional>
#include <stdexcept>

#include "jarnik/analysis.hpp"
#include "jarnik/curvature.hpp"
#include "jarnik/export.hpp"
#include "jarnik/selftest.hpp"

namespace jarnik::cli {

namespace {

// Thrown for inputs that parse but make no sense together.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string domain = "square";
  std::string curve;
  std::string lambda;
  std::string side;
  std::string format = "csv";
  std::string output = "-";
  Int q = 0;
  std::vector<Int> orders;
  Int q_min = 0;
  Int q_max = 0;
  int samples = 0;
  bool scaled = false;
  bool full = false;
};

void emit(const Options& o, const std::string& content, std::ostream& out) {
  if (o.output == "-")
    out << content;
  else
    write_file_atomic(o.output, content);
}

void add_output(CLI::App* sub, Options& o, std::vector<std::string> formats) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
  sub->add_option("-o,--output", o.output, "Output file, '-' for standard output")->capture_default_str();
}

// Every argument is validated here, before any computation starts.
using Task = std::function<void(std::ostream&)>;

Task plan_polygon(const Options& o) {
  const DomainSpec s = DomainSpec::parse(o.domain);
  if (o.q < 1) throw UsageError("--q must be at least 1");
  if (o.scaled && o.format == "svg") throw UsageError("--scaled applies to csv output only");
  return [=](std::ostream& out) {
    const LatticePolygon poly = build_polygon(s, o.q);
    if (o.format == "svg")
      emit(o, polygon_svg(scale_polygon(poly)), out);
    else
      emit(o, o.scaled ? polygon_csv(scale_polygon(poly)) : polygon_csv(poly), out);
  };
}

Task plan_limit_curve(const Options& o) {
  const LimitCurve curve = LimitCurve::parse(o.curve);
  const int samples = o.samples ? o.samples : 1000;
  if (samples < 2) throw UsageError("--samples must be at least 2");
  return [=](std::ostream& out) {
    emit(o, o.format == "svg" ? curve_svg(curve, samples) : curve_csv(curve, samples), out);
  };
}

Task plan_converge(const Options& o) {
  const DomainSpec s = DomainSpec::parse(o.domain);
  const LimitCurve curve = o.curve.empty() ? LimitCurve::for_domain(s) : LimitCurve::parse(o.curve);
  if (!LimitCurve::for_domain(s).same_curve(curve))
    throw UsageError("P_Q(" + s.name() + ") converges to " + LimitCurve::for_domain(s).name() + ", not " +
                     curve.name());
  if (o.orders.empty()) throw UsageError("--q needs at least one order");
  if (std::any_of(o.orders.begin(), o.orders.end(), [](Int q) { return q < 1; }))
    throw UsageError("orders must be positive");
  const int samples = o.samples ? o.samples : kDefaultCurveSamples;
  if (samples < 1000) throw UsageError("--samples must be at least 1000");
  return [=](std::ostream& out) { emit(o, convergence_csv(convergence_table(s, o.orders, curve, samples)), out); };
}

Task plan_curvature(const Options& o) {
  const ExactReal lambda = ExactReal::parse(o.lambda);
  std::optional<Side> side;
  if (!o.side.empty()) side = parse_side(o.side);
  if (o.q_min < 2 || o.q_max < o.q_min) throw UsageError("need 2 <= --q-min <= --q-max");
  if (lambda.compare(Fraction{0, 1}) <= 0 || lambda.compare(Fraction{1, 1}) >= 0)
    throw UsageError("lambda must lie strictly between 0 and 1");
  const auto rational = lambda.as_fraction();
  if (rational && !side) throw UsageError("a rational lambda needs --side + or --side -");
  if (!rational && side) throw UsageError("--side applies to rational lambda only");
  if (rational && rational->den > o.q_min) throw UsageError("--q-min must be at least the denominator of lambda");
  TraceOptions options;
  options.incremental = !o.full;
  return [=](std::ostream& out) {
    const auto trace = rational ? curvature_trace(*rational, *side, o.q_min, o.q_max, options)
                                : curvature_trace(lambda, o.q_min, o.q_max, options);
    if (o.format == "svg")
      emit(o, trace_svg(trace, curvature_bounds(lambda.approx())), out);
    else
      emit(o, trace_csv(trace), out);
  };
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jarnik polygons, their limit curves and local radii of curvature", "jarnik"};
  app.require_subcommand(1, 1);
  Options o;

  auto* polygon = app.add_subcommand("polygon", "Vertices of the polygon P_Q(S)");
  polygon->add_option("--domain", o.domain, "square, diamond, octagon:<delta>, ball:<p>")->capture_default_str();
  polygon->add_option("--q", o.q, "Order Q")->required();
  polygon->add_flag("--scaled", o.scaled, "Scaled coordinates instead of lattice points");
  add_output(polygon, o, {"csv", "svg"});

  auto* curve = app.add_subcommand("limit-curve", "Sample the fundamental arc of a limit curve");
  curve->add_option("--curve", o.curve, "C, C1, Cdelta:<delta>, Cp:<p>")->required();
  curve->add_option("--samples", o.samples, "Number of parameter values (default 1000)");
  add_output(curve, o, {"csv", "svg"});

  auto* converge = app.add_subcommand("converge", "Distance from scaled polygons to their limit curve");
  converge->add_option("--domain", o.domain, "square, diamond, octagon:<delta>, ball:<p>")->capture_default_str();
  converge->add_option("--curve", o.curve, "Limit curve (default: the one matching the domain)");
  converge->add_option("--q", o.orders, "Orders, comma separated or repeated")->required()->delimiter(',');
  converge->add_option("--samples", o.samples, "Curve samples on the fundamental arc (default 16384)");
  add_output(converge, o, {"csv"});

  auto* curvature = app.add_subcommand("curvature", "Trace of the scaled local radius of curvature");
  curvature->add_option("--lambda", o.lambda, "rat:a/b, surd:(P+sqrt(D))/Q, const:e-2, const:inv-sqrt3, cf:[0;...]")
      ->required();
  curvature->add_option("--side", o.side, "+ or -, for rational lambda");
  curvature->add_option("--q-min", o.q_min, "Smallest order")->required();
  curvature->add_option("--q-max", o.q_max, "Largest order")->required();
  curvature->add_flag("--full", o.full, "Recompute R(Q) from scratch at every order (parallel)");
  add_output(curvature, o, {"csv", "svg"});

  auto* selftest = app.add_subcommand("selftest", "Check the exact reference values");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    if (e.get_exit_code() == 0) return kOk;
    err << app.help();
    return kUsageError;
  }

  Task task;
  try {
    if (*polygon)
      task = plan_polygon(o);
    else if (*curve)
      task = plan_limit_curve(o);
    else if (*converge)
      task = plan_converge(o);
    else if (*curvature)
      task = plan_curvature(o);
    else if (*selftest)
      task = [](std::ostream& os) {
        const SelftestReport report = run_selftest();
        os << report.text();
        if (!report.all_passed()) throw std::runtime_error("selftest failed");
      };
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n' << app.get_subcommands().front()->help();
    return kUsageError;
  }

  try {
    task(out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kComputationError;
  }
  return kOk;
}

}  // namespace jarnik::cli
