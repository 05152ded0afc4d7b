#include "levikohn/gaussian_rational.hpp"

#include <stdexcept>

namespace levikohn {

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero Gaussian rational");
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string rational_to_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return rational_to_string(re_);
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = rational_to_string(im_) + "*i";
  }
  if (sgn(re_) == 0) return imag;
  std::string s = "(" + rational_to_string(re_);
  if (sgn(im_) > 0) s += "+";
  return s + imag + ")";
}

}  // namespace levikohn
