#pragma once

namespace wf::kernels {

// Execution policy for the DSP kernels. Every kernel assigns each output
// element to exactly one thread and performs the same per-element arithmetic
// in both modes, so serial and parallel results are bit-identical.
enum class Exec {
  serial,
  parallel,
};

}  // namespace wf::kernels
