#include <string>

#include "spectrograph/analytic.hpp"
#include "spectrograph/error.hpp"

namespace spectrograph {

double bedrosian_gap(const SpectralDecomposition& d, Index low, Index high) {
  for (Index i : {low, high}) {
    if (i < 0 || i >= d.size() || d.partition_of(i) != Partition::UpperComplex) {
      throw Error(ErrorCode::IndexOutOfPartition,
                  "bedrosian_gap: index " + std::to_string(i) + " is not in Gamma_2");
    }
  }
  const GraphSignal low_re = d.basis().col(low).real();
  const GraphSignal high_re = d.basis().col(high).real();
  const GraphSignal high_im = d.basis().col(high).imag();

  const double low_smoothness = smoothness(d.adjacency(), low_re);
  const double high_smoothness = smoothness(d.adjacency(), high_re);
  if (!(low_smoothness < high_smoothness)) {
    throw Error(ErrorCode::InvalidArgument,
                "bedrosian_gap: the first factor must be smoother (MS_g " +
                    std::to_string(low_smoothness) + " vs " + std::to_string(high_smoothness) + ")");
  }

  const GraphSignal product = low_re.cwiseProduct(high_re);
  const GraphSignal expected = low_re.cwiseProduct(high_im);
  const double scale = expected.norm();
  if (scale == 0.0) {
    throw Error(ErrorCode::ZeroSignal, "bedrosian_gap: reference product vanishes");
  }
  return (hilbert_transform(d, product) - expected).norm() / scale;
}

}  // namespace spectrograph
