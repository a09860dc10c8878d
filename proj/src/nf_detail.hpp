#pragma once

#include "gplab/gp_state.hpp"
#include "spectral.hpp"

namespace gplab::detail {

struct NonlinearParts {
  Vec re;
  Vec im;
};

Vec R_spectral(const Spectral& sp, const Vec& u1, const Vec& u2);
Vec z1_of(const Spectral& sp, const Vec& u1, const Vec& u2);
Vec N31_defining(const Spectral& sp, const Vec& u1, const Vec& u2);
Vec N31_expanded(const Spectral& sp, const Vec& u1, const Vec& u2);
NonlinearParts nonlinearity(int order, const Spectral& sp, const Vec& m1, const Vec& u1,
                            const Vec& u2, const SignConvention& conv);
NonlinearParts total(const Spectral& sp, const Vec& m1, const Vec& u1, const Vec& u2,
                     const SignConvention& conv);
RadialField to_field(const RadialGrid& g, const Vec& re);
RadialField to_field(const RadialGrid& g, const Vec& re, const Vec& im);

}  // namespace gplab::detail
