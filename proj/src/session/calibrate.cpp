#include "wf/session/calibrate.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <vector>

#include "wf/ecg/pipeline.hpp"
#include "wf/ingest/sources.hpp"

namespace wf::session {

namespace {

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2]
                    : (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

}  // namespace

CalibrationReport run_calibration(const Config& cfg, double duration_s) {
  if (duration_s <= 0.0) {
    throw std::invalid_argument("calibrate: insufficient data (duration <= 0)");
  }

  ingest::StreamDescriptor eeg_desc{ingest::StreamKind::eeg,
                                    ingest::kEegElectrodes,
                                    ingest::kEegRateHz, cfg.eeg_source};
  ingest::StreamDescriptor ecg_desc{ingest::StreamKind::ecg, 1,
                                    ingest::kEcgRateHz, cfg.ecg_source};
  auto eeg_src = ingest::open_stream(eeg_desc, cfg.stream_seed(0), duration_s);
  auto ecg_src = ingest::open_stream(ecg_desc, cfg.stream_seed(1), duration_s);

  ecg::EcgPipeline::Config ec;
  ec.baevsky.bin_ms = cfg.ecg_bin_ms;
  ec.baevsky.mxdmn_floor_s = cfg.ecg_mxdmn_floor_s;
  ec.baevsky.min_intervals = cfg.ecg_min_intervals;
  ecg::EcgPipeline ecg_pipe(ec);

  std::array<double, 4> lo{}, hi{};
  lo.fill(std::numeric_limits<double>::infinity());
  hi.fill(-std::numeric_limits<double>::infinity());
  for (;;) {
    auto eeg_block = eeg_src->next();
    auto ecg_block = ecg_src->next();
    if (!eeg_block || !ecg_block) break;
    for (int e = 0; e < ingest::kEegElectrodes; ++e) {
      for (double s : eeg_block->channel(e)) {
        lo[static_cast<std::size_t>(e)] =
            std::min(lo[static_cast<std::size_t>(e)], s);
        hi[static_cast<std::size_t>(e)] =
            std::max(hi[static_cast<std::size_t>(e)], s);
      }
    }
    ecg_pipe.consume(*ecg_block);
  }

  CalibrationReport report;
  report.si_median = cfg.ecg_cal_median;
  report.si_spread = cfg.ecg_cal_spread;
  const auto& si = ecg_pipe.valid_si_history();
  report.si_count = si.size();
  if (!si.empty()) {
    report.si_median = median(si);
    std::vector<double> dev;
    dev.reserve(si.size());
    const double log_med = std::log(report.si_median);
    for (double v : si) dev.push_back(std::abs(std::log(v) - log_med));
    report.si_spread = std::max(0.2, 1.4826 * median(std::move(dev)));
  }
  for (int e = 0; e < ingest::kEegElectrodes; ++e) {
    const double span = hi[static_cast<std::size_t>(e)] -
                        lo[static_cast<std::size_t>(e)];
    const double ptp = std::isfinite(span) ? span : 0.0;
    report.electrode_ptp[static_cast<std::size_t>(e)] = ptp;
    report.electrode_ok[static_cast<std::size_t>(e)] =
        ptp >= cfg.eeg_theta_flat_uv;
  }
  return report;
}

void write_calibration_file(const std::string& path,
                            const CalibrationReport& report) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("calibrate: cannot open " + path);
  out << "# witheflow calibration baseline\n";
  out << "ecg.calibration.median = " << report.si_median << "\n";
  out << "ecg.calibration.spread = " << report.si_spread << "\n";
}

}  // namespace wf::session
