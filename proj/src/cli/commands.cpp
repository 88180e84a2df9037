#include "charvar/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "charvar/kempfness.hpp"
#include "charvar/poincare.hpp"
#include "charvar/retract.hpp"
#include "charvar/tracecoords.hpp"

namespace charvar::cli {

using nlohmann::json;

namespace {

constexpr int kMaxRank = 64;
constexpr int kMaxSteps = 100000;
constexpr std::uint64_t kCompactSeedSalt = 0x6b2f9a3c1d5e7081ULL;

template <typename Writer>
void emit(const std::string& path, std::ostream& fallback, Writer&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ValidationError("cannot open output file '" + path + "'");
  write(file);
  if (!file) throw ValidationError("failed writing output file '" + path + "'");
}

void write_json(std::ostream& os, const json& j) { os << j.dump(2) << '\n'; }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open input file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("input file '" + path + "' is not valid JSON: " + e.what());
  }
}

Complex entry_from_json(const json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw ValidationError("matrix entries must be numbers or [re, im] pairs");
}

void check_range(const char* name, long long value, long long lo, long long hi) {
  if (value < lo || value > hi) {
    throw ValidationError(std::string(name) + " must lie in [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "], got " + std::to_string(value));
  }
}

void check_positive(const char* name, double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ValidationError(std::string(name) + " must be a finite positive number");
  }
}

Representation load_or_sample(const RunConfig& c) {
  if (!c.input.empty()) return representation_from_json(read_json_file(c.input));
  const GroupSpec spec = GroupSpec::parse(c.group);
  check_range("rank", c.rank, 1, kMaxRank);
  return sample_representation(spec, c.rank, c.seed, c.scale);
}

void write_trace_files(const std::string& path, const FlowTrace& trace, const json* report) {
  emit(path, std::cout, [&](std::ostream& os) { write_trace_csv(os, trace); });
  std::ostringstream diag;
  write_diagnostics_json(diag, trace);
  json sidecar{{"diagnostics", json::parse(diag.str())}};
  if (report != nullptr) sidecar["report"] = *report;
  emit(path + ".diagnostics.json", std::cout, [&](std::ostream& os) { write_json(os, sidecar); });
}

/// Runs fn(i) for i in [0, n) on up to `threads` workers. Work items are
/// independent and write only to their own slot.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  constexpr std::size_t kChunk = 1024;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        for (std::size_t begin = next.fetch_add(kChunk); begin < n; begin = next.fetch_add(kChunk)) {
          const std::size_t end = std::min(n, begin + kChunk);
          for (std::size_t i = begin; i < end; ++i) fn(i);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

double grid_coord(int i, int grid, double extent) {
  if (grid == 1) return 0.0;
  return -extent + 2.0 * extent * static_cast<double>(i) / static_cast<double>(grid - 1);
}

struct PointRecord {
  double t1 = 0.0, t2 = 0.0, t3 = 0.0, kappa = 0.0;
  PointClass cls = PointClass::sl2r;
  bool keep = false;
};

json point_record_json(const PointRecord& r) {
  return {{"t1", r.t1}, {"t2", r.t2}, {"t3", r.t3}, {"kappa", r.kappa},
          {"class", std::string(point_class_name(r.cls))}};
}

json figure_cube(const RunConfig& c, bool fig3) {
  const long long g = c.grid;
  if (g * g * g > kMaxGridPoints) throw ValidationError("grid of " + std::to_string(g) + "^3 points exceeds 10^6");
  const std::size_t n = static_cast<std::size_t>(g * g * g);
  std::vector<PointRecord> records(n);
  parallel_for(n, thread_limit(), [&](std::size_t idx) {
    const int i = static_cast<int>(idx / static_cast<std::size_t>(g * g));
    const int j = static_cast<int>((idx / static_cast<std::size_t>(g)) % static_cast<std::size_t>(g));
    const int k = static_cast<int>(idx % static_cast<std::size_t>(g));
    PointRecord& r = records[idx];
    r.t1 = grid_coord(i, c.grid, c.extent);
    r.t2 = grid_coord(j, c.grid, c.extent);
    r.t3 = grid_coord(k, c.grid, c.extent);
    r.kappa = kappa(r.t1, r.t2, r.t3);
    r.cls = classify_point_r2(r.t1, r.t2, r.t3, c.tol);
    r.keep = fig3 ? r.cls == PointClass::su2 : r.kappa <= 5.0;
  });
  json out = json::array();
  for (const auto& r : records) {
    if (r.keep) out.push_back(point_record_json(r));
  }
  return out;
}

json figure_reducible(const RunConfig& c) {
  const long long g = c.grid;
  if (2 * g * g > kMaxGridPoints) throw ValidationError("grid of 2*" + std::to_string(g) + "^2 points exceeds 10^6");
  const std::size_t n = static_cast<std::size_t>(g * g);
  std::vector<std::array<PointRecord, 2>> records(n);
  parallel_for(n, thread_limit(), [&](std::size_t idx) {
    const double t1 = grid_coord(static_cast<int>(idx / static_cast<std::size_t>(g)), c.grid, c.extent);
    const double t2 = grid_coord(static_cast<int>(idx % static_cast<std::size_t>(g)), c.grid, c.extent);
    const double disc = (t1 * t1 - 4.0) * (t2 * t2 - 4.0);
    if (disc < 0.0) return;
    const double root = std::sqrt(disc);
    for (int s = 0; s < 2; ++s) {
      if (s == 1 && root == 0.0) break;
      PointRecord& r = records[idx][static_cast<std::size_t>(s)];
      r.t1 = t1;
      r.t2 = t2;
      r.t3 = 0.5 * (t1 * t2 + (s == 0 ? root : -root));
      r.kappa = kappa(r.t1, r.t2, r.t3);
      r.cls = classify_point_r2(r.t1, r.t2, r.t3, c.tol);
      r.keep = true;
    }
  });
  json out = json::array();
  for (const auto& pair : records) {
    for (const auto& r : pair) {
      if (r.keep) out.push_back(point_record_json(r));
    }
  }
  return out;
}

json figure_normal_sl2r(const RunConfig& c) {
  const long long g = c.grid;
  if (3 * g > kMaxGridPoints) throw ValidationError("fig1 grid exceeds 10^6 points");
  json out = json::array();
  auto add = [&](const Mat2& A, const char* kind) {
    const TraceCoordsR1 tp = trace_pfaffian(A);
    out.push_back({{"t", tp.t}, {"p", tp.p}, {"kind", kind}, {"distance", distance_to_r1_image(tp)}});
  };
  for (int i = 0; i < c.grid; ++i) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(c.grid);
    Mat2 rot;
    rot << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    add(rot, "rotation");
  }
  for (int sign : {1, -1}) {
    for (int i = 0; i < c.grid; ++i) {
      const double u = grid_coord(i, c.grid, c.extent);
      const double phi = std::numbers::pi * static_cast<double>(i) / static_cast<double>(c.grid);
      Mat2 rot;
      rot << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
      const Mat2 sym = static_cast<double>(sign) * rot * Eigen::Vector2d(std::exp(u), std::exp(-u)).asDiagonal() *
                       rot.transpose();
      add(sym, sign > 0 ? "symmetric_positive" : "symmetric_negative");
    }
  }
  return out;
}

json classification_json(const RepClassification& rc) {
  return {{"class", std::string(rep_class_name(rc.cls))},
          {"boundary", rc.boundary},
          {"reducibility_margin", rc.reducibility_margin},
          {"realness_margin", rc.realness_margin}};
}

double invariant_drift(const Representation& a, const Representation& b) {
  const auto wa = trace_words(a);
  const auto wb = trace_words(b);
  double drift = 0.0;
  for (std::size_t i = 0; i < wa.size(); ++i) drift = std::max(drift, std::abs(wa[i] - wb[i]));
  return drift;
}

void report_error(std::ostream& err, const std::string& code, const std::string& message,
                  const json& extra = json::object()) {
  json body{{"code", code}, {"message", message}};
  for (const auto& [k, v] : extra.items()) body[k] = v;
  err << json{{"error", body}}.dump() << '\n';
}

struct FlagValues {
  std::optional<std::string> config, group, out, input, trace, tag, format, figure;
  std::optional<int> rank, steps, max_iters, trace_every, r_min, r_max, grid;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol, scale, step, extent;
  std::vector<double> point;
};

RunConfig apply_flags(const FlagValues& f) {
  RunConfig c;
  if (f.config) c = load_config_file(*f.config, c);
  if (f.group) c.group = *f.group;
  if (f.out) c.out = *f.out;
  if (f.input) c.input = *f.input;
  if (f.trace) c.trace = *f.trace;
  if (f.tag) c.tag = *f.tag;
  if (f.format) c.format = *f.format;
  if (f.figure) c.figure = *f.figure;
  if (f.rank) c.rank = *f.rank;
  if (f.steps) c.steps = *f.steps;
  if (f.max_iters) c.max_iters = *f.max_iters;
  if (f.trace_every) c.trace_every = *f.trace_every;
  if (f.r_min) c.r_min = *f.r_min;
  if (f.r_max) c.r_max = *f.r_max;
  if (f.grid) c.grid = *f.grid;
  if (f.seed) c.seed = *f.seed;
  if (f.tol) c.tol = *f.tol;
  if (f.scale) c.scale = *f.scale;
  if (f.step) c.step = *f.step;
  if (f.extent) c.extent = *f.extent;
  if (!f.point.empty()) c.point = std::array<double, 3>{f.point[0], f.point[1], f.point[2]};
  return c;
}

}  // namespace

json representation_to_json(const Representation& rho) {
  const bool real = rho.spec().is_real();
  json gens = json::array();
  for (const auto& g : rho.gens()) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < g.mat().rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < g.mat().cols(); ++j) {
        const Complex z = g.mat()(i, j);
        if (real) {
          row.push_back(z.real());
        } else {
          row.push_back(json::array({z.real(), z.imag()}));
        }
      }
      rows.push_back(std::move(row));
    }
    gens.push_back(std::move(rows));
  }
  return {{"group", rho.spec().to_string()}, {"gens", gens}};
}

Representation representation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("gens")) {
    throw ValidationError("representation JSON needs keys 'group' and 'gens'");
  }
  for (const auto& [key, value] : j.items()) {
    if (key != "group" && key != "gens") throw ValidationError("unknown representation key '" + key + "'");
  }
  if (!j["group"].is_string()) throw ValidationError("'group' must be a string");
  const GroupSpec spec = GroupSpec::parse(j["group"].get<std::string>());
  const json& gens = j["gens"];
  if (!gens.is_array() || gens.empty()) throw ValidationError("'gens' must be a nonempty array");
  check_range("rank", static_cast<long long>(gens.size()), 1, kMaxRank);

  const auto n = static_cast<std::size_t>(spec.n());
  std::vector<GroupElement> out;
  for (const auto& m : gens) {
    if (!m.is_array() || m.size() != n) {
      throw ValidationError("each generator must be a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    }
    CMat M(spec.n(), spec.n());
    for (std::size_t i = 0; i < n; ++i) {
      if (!m[i].is_array() || m[i].size() != n) {
        throw ValidationError("each generator must be a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
      }
      for (std::size_t k = 0; k < n; ++k) {
        M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = entry_from_json(m[i][k]);
      }
    }
    out.emplace_back(spec, std::move(M));
  }
  return Representation(std::move(out));
}

int thread_limit() {
  const char* env = std::getenv("CHARVAR_THREADS");
  if (env == nullptr || *env == '\0') {
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  const std::string_view text(env);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
    throw ValidationError("CHARVAR_THREADS must be a positive integer, got '" + std::string(text) + "'");
  }
  return value;
}

int cmd_retract(const RunConfig& c, std::ostream& out) {
  check_range("steps", c.steps, 1, kMaxSteps);
  const Representation rho = load_or_sample(c);
  const FlowTrace trajectory = retract_trajectory(rho, c.steps);
  const GroupElement h = sample_compact_element(rho.spec(), c.seed ^ kCompactSeedSalt);
  const RetractionReport report = verify_retraction(rho, trajectory, h);

  const json summary{
      {"group", rho.spec().to_string()},
      {"rank", rho.rank()},
      {"samples", trajectory.size()},
      {"identity_at_zero", report.identity_at_zero},
      {"compact_defect", report.compact_defect},
      {"sweep_membership", report.sweep_membership},
      {"equivariance_defect", report.equivariance_defect},
      {"passed", report.passed()},
  };
  if (c.out.empty()) {
    write_trace_csv(out, trajectory);
  } else {
    write_trace_files(c.out, trajectory, &summary);
    write_json(out, summary);
  }
  return report.passed() ? kExitOk : kExitNumerical;
}

int cmd_knflow(const RunConfig& c, std::ostream& out) {
  KNFlowParams params;
  params.step = c.step;
  params.max_iters = c.max_iters;
  params.residual_tol = c.tol;
  params.trace_every = c.trace_every;
  params.validate();

  const Representation rho = load_or_sample(c);
  const KNFlowResult result = kn_flow(rho, params);

  const json summary{
      {"group", rho.spec().to_string()},
      {"rank", rho.rank()},
      {"converged", result.converged},
      {"verdict", std::string(verdict_name(result.verdict))},
      {"iterations", result.iterations},
      {"gradient_norm", kn_gradient(result.final).norm()},
      {"kn_residual_norm", kn_residual(result.final).norm()},
      {"orbit_norm_initial", orbit_norm(rho)},
      {"orbit_norm_final", orbit_norm(result.final)},
      {"invariant_drift", invariant_drift(rho, result.final)},
      {"final", representation_to_json(result.final)},
  };
  if (!c.trace.empty()) write_trace_files(c.trace, result.trace, nullptr);
  emit(c.out, out, [&](std::ostream& os) { write_json(os, summary); });
  return result.converged ? kExitOk : kExitNumerical;
}

int cmd_poincare(const RunConfig& c, std::ostream& out) {
  const GroupFamilyTag tag = parse_tag(c.tag);
  if (c.format != "text" && c.format != "json") {
    throw ValidationError("format must be 'text' or 'json', got '" + c.format + "'");
  }
  const int lo = c.r_min ? *c.r_min : (c.r_max ? 1 : c.rank);
  const int hi = c.r_max ? *c.r_max : (c.r_min ? *c.r_min : c.rank);
  check_range("r", lo, 1, kMaxPoincareRank);
  check_range("r", hi, lo, kMaxPoincareRank);

  std::ostringstream text;
  json rows = json::array();
  for (int r = lo; r <= hi; ++r) {
    const PolyQ p = poincare_polynomial(tag, r);
    text << tag_name(tag) << " r=" << r << ": " << p.to_string() << '\n';
    rows.push_back({{"tag", std::string(tag_name(tag))},
                    {"r", r},
                    {"polynomial", p.to_string()},
                    {"coefficients", coefficient_strings(p)}});
  }
  emit(c.out, out, [&](std::ostream& os) {
    if (c.format == "json") {
      write_json(os, rows);
    } else {
      os << text.str();
    }
  });
  return kExitOk;
}

int cmd_figdata(const RunConfig& c, std::ostream& out) {
  check_range("grid", c.grid, 1, kMaxGridPoints);
  check_positive("extent", c.extent);
  check_positive("tol", c.tol);
  json records;
  if (c.figure == "fig1") {
    records = figure_normal_sl2r(c);
  } else if (c.figure == "fig2_reducible") {
    records = figure_reducible(c);
  } else if (c.figure == "fig3_ball") {
    records = figure_cube(c, true);
  } else if (c.figure == "fig4_region") {
    records = figure_cube(c, false);
  } else {
    throw ValidationError("unknown figure '" + c.figure +
                          "', expected fig1, fig2_reducible, fig3_ball or fig4_region");
  }
  emit(c.out, out, [&](std::ostream& os) { os << records.dump() << '\n'; });
  return kExitOk;
}

int cmd_classify(const RunConfig& c, std::ostream& out) {
  check_positive("tol", c.tol);
  json result;
  if (c.point) {
    const auto [t1, t2, t3] = *c.point;
    PointRecord r{t1, t2, t3, kappa(t1, t2, t3), classify_point_r2(t1, t2, t3, c.tol), true};
    result = point_record_json(r);
  } else {
    const Representation rho = load_or_sample(c);
    result = classification_json(classify_sl2r_rep(rho, c.tol));
    result["representation"] = representation_to_json(rho);
  }
  emit(c.out, out, [&](std::ostream& os) { write_json(os, result); });
  return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations on character varieties of free groups", "charvar"};
  app.require_subcommand(1);
  FlagValues f;

  auto common = [&](CLI::App* s) {
    s->add_option("--config", f.config, "JSON config file; flags override it");
    s->add_option("--out", f.out, "Output path (default: stdout)");
  };
  auto sampling = [&](CLI::App* s) {
    s->add_option("--group", f.group, "Group, e.g. SL_R(2) or U_pq(2,1)");
    s->add_option("--rank", f.rank, "Number of generators r");
    s->add_option("--seed", f.seed, "Sampling seed");
    s->add_option("--scale", f.scale, "Spread of sampled generators");
    s->add_option("--input", f.input, "Representation JSON instead of sampling");
  };

  auto* retract = app.add_subcommand("retract", "Sweep the polar retraction onto the maximal compact");
  common(retract);
  sampling(retract);
  retract->add_option("--steps", f.steps, "Number of time steps (steps+1 samples)");

  auto* knflow = app.add_subcommand("knflow", "Flow a tuple to the Kempf-Ness set");
  common(knflow);
  sampling(knflow);
  knflow->add_option("--tol", f.tol, "Gradient norm at which the flow stops");
  knflow->add_option("--step", f.step, "Initial step size");
  knflow->add_option("--max-iters", f.max_iters, "Iteration cap");
  knflow->add_option("--trace-every", f.trace_every, "Record every k-th iterate (0: endpoints only)");
  knflow->add_option("--trace", f.trace, "Write the flow trace CSV here");

  auto* poincare = app.add_subcommand("poincare", "Poincare polynomials of character varieties");
  common(poincare);
  poincare->add_option("--tag", f.tag, "Group family tag, e.g. SU2, U22, O3");
  poincare->add_option("--rank", f.rank, "Single rank r");
  poincare->add_option("--r-min", f.r_min, "First rank of a range");
  poincare->add_option("--r-max", f.r_max, "Last rank of a range");
  poincare->add_option("--format", f.format, "text or json");

  auto* figdata = app.add_subcommand("figdata", "Sample data for the rank 1 and rank 2 figures");
  common(figdata);
  figdata->add_option("--figure", f.figure, "fig1, fig2_reducible, fig3_ball or fig4_region");
  figdata->add_option("--grid", f.grid, "Points per axis");
  figdata->add_option("--extent", f.extent, "Half-width of the sampled box");
  figdata->add_option("--tol", f.tol, "Width of the reducible band");

  auto* classify = app.add_subcommand("classify", "Classify an SL(2,R) tuple or a rank 2 trace point");
  common(classify);
  sampling(classify);
  classify->add_option("--tol", f.tol, "Decision tolerance");
  classify->add_option("--point", f.point, "Fricke coordinates t1 t2 t3")->expected(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    report_error(err, "usage", e.what());
    return kExitValidation;
  }

  try {
    const RunConfig config = apply_flags(f);
    if (app.got_subcommand(retract)) return cmd_retract(config, out);
    if (app.got_subcommand(knflow)) return cmd_knflow(config, out);
    if (app.got_subcommand(poincare)) return cmd_poincare(config, out);
    if (app.got_subcommand(figdata)) return cmd_figdata(config, out);
    return cmd_classify(config, out);
  } catch (const MembershipError& e) {
    report_error(err, e.code(), e.what(), {{"residual", e.residual()}});
    return kExitValidation;
  } catch (const ValidationError& e) {
    report_error(err, e.code(), e.what());
    return kExitValidation;
  } catch (const Error& e) {
    report_error(err, e.code(), e.what());
    return kExitNumerical;
  } catch (const std::exception& e) {
    report_error(err, "internal", e.what());
    return kExitNumerical;
  }
}

}  // namespace charvar::cli
