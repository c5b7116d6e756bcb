#include "hmdd/mat.hpp"

namespace hmdd {

MatD resize_bilinear(const MatD& src, int rows, int cols) {
  require(rows >= 1 && cols >= 1, ErrorKind::Domain, "resize: target dims must be >= 1");
  require(src.rows() >= 1 && src.cols() >= 1, ErrorKind::Domain, "resize: empty source");
  MatD out(rows, cols);
  const double rscale = rows > 1 ? double(src.rows() - 1) / (rows - 1) : 0.0;
  const double cscale = cols > 1 ? double(src.cols() - 1) / (cols - 1) : 0.0;
  for (int r = 0; r < rows; ++r) {
    double fr = r * rscale;
    int r0 = static_cast<int>(fr);
    int r1 = std::min(r0 + 1, src.rows() - 1);
    double wr = fr - r0;
    for (int c = 0; c < cols; ++c) {
      double fc = c * cscale;
      int c0 = static_cast<int>(fc);
      int c1 = std::min(c0 + 1, src.cols() - 1);
      double wc = fc - c0;
      out(r, c) = (1 - wr) * ((1 - wc) * src(r0, c0) + wc * src(r0, c1)) +
                  wr * ((1 - wc) * src(r1, c0) + wc * src(r1, c1));
    }
  }
  return out;
}

MatU8 to_u8_minmax(const MatD& m) {
  auto [lo, hi] = minmax_of(m);
  MatU8 out(m.rows(), m.cols());
  if (hi <= lo) return out;
  double scale = 255.0 / (hi - lo);
  auto it = out.begin();
  for (double v : m) *it++ = static_cast<uint8_t>(std::floor((v - lo) * scale + 0.5));
  return out;
}

}  // namespace hmdd
