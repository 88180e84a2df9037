#include "charvar/flow_trace.hpp"

#include <algorithm>
#include <iomanip>
#include <locale>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "charvar/kempfness.hpp"

namespace charvar {

Diagnostics diagnose(const Representation& rho, const std::vector<Complex>& reference_words) {
  Diagnostics d;
  d.orbit_norm = orbit_norm(rho);
  d.kn_residual_norm = kn_residual(rho).norm();
  d.membership_defect = membership_defect(rho);
  if (!reference_words.empty()) {
    const auto words = trace_words(rho);
    for (std::size_t i = 0; i < words.size() && i < reference_words.size(); ++i) {
      d.invariant_drift = std::max(d.invariant_drift, std::abs(words[i] - reference_words[i]));
    }
  }
  return d;
}

void FlowTrace::push(double time, Representation state, const Diagnostics& diag) {
  if (!times_.empty() && !(time > times_.back())) {
    throw ValidationError("FlowTrace times must be strictly increasing");
  }
  if (reference_words_.empty()) reference_words_ = trace_words(state);
  times_.push_back(time);
  states_.push_back(std::move(state));
  diagnostics_.push_back(diag);
}

void FlowTrace::record(double time, Representation state) {
  if (reference_words_.empty()) reference_words_ = trace_words(state);
  const Diagnostics d = diagnose(state, reference_words_);
  push(time, std::move(state), d);
}

void write_trace_csv(std::ostream& out, const FlowTrace& trace) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(17);
  os << "step,t,gen_index,row,col,re,im\n";
  for (std::size_t s = 0; s < trace.size(); ++s) {
    const auto& state = trace.states()[s];
    for (int g = 0; g < state.rank(); ++g) {
      const CMat& M = state[g].mat();
      for (Eigen::Index i = 0; i < M.rows(); ++i) {
        for (Eigen::Index j = 0; j < M.cols(); ++j) {
          os << s << ',' << trace.times()[s] << ',' << g << ',' << i << ',' << j << ','
             << M(i, j).real() << ',' << M(i, j).imag() << '\n';
        }
      }
    }
  }
  out << os.str();
}

void write_diagnostics_json(std::ostream& out, const FlowTrace& trace) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t s = 0; s < trace.size(); ++s) {
    const Diagnostics& d = trace.diagnostics()[s];
    arr.push_back({{"step", s},
                   {"t", trace.times()[s]},
                   {"orbit_norm", d.orbit_norm},
                   {"kn_residual_norm", d.kn_residual_norm},
                   {"membership_defect", d.membership_defect},
                   {"invariant_drift", d.invariant_drift}});
  }
  out << arr.dump(2) << '\n';
}

}  // namespace charvar
