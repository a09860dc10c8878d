#pragma once

#include "gplab/gp_state.hpp"

namespace gplab {

// Selected by verify_m_derivation: the only combination of signs and critical
// coefficient whose residual decays as h². Re-checked by test_normal_form and
// `gplab normalform-verify`.
inline const SignConvention kFrozenSignConvention{-1, -1, +1, {1, 2}};

}  // namespace gplab
