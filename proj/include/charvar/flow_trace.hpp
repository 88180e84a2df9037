#pragma once

#include <iosfwd>
#include <vector>

#include "charvar/representation.hpp"

namespace charvar {

struct Diagnostics {
  double orbit_norm = 0.0;
  double kn_residual_norm = 0.0;
  double membership_defect = 0.0;
  /// Largest change, relative to the first recorded state, of the traces of
  /// words of length <= 3.
  double invariant_drift = 0.0;
};

/// Time-stamped states of a retraction sweep or a Kempf-Ness flow.
/// Times are strictly increasing.
class FlowTrace {
 public:
  void push(double time, Representation state, const Diagnostics& diag);

  /// Records `state`, computing diagnostics against the first state.
  void record(double time, Representation state);

  std::size_t size() const noexcept { return times_.size(); }
  bool empty() const noexcept { return times_.empty(); }
  const std::vector<double>& times() const noexcept { return times_; }
  const std::vector<Representation>& states() const noexcept { return states_; }
  const std::vector<Diagnostics>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<double> times_;
  std::vector<Representation> states_;
  std::vector<Diagnostics> diagnostics_;
  std::vector<Complex> reference_words_;
};

Diagnostics diagnose(const Representation& rho, const std::vector<Complex>& reference_words);

/// CSV with header step,t,gen_index,row,col,re,im; one line per matrix entry,
/// 17 significant digits, locale independent.
void write_trace_csv(std::ostream& out, const FlowTrace& trace);

/// JSON array of {step, t, orbit_norm, kn_residual_norm, membership_defect,
/// invariant_drift}.
void write_diagnostics_json(std::ostream& out, const FlowTrace& trace);

}  // namespace charvar
