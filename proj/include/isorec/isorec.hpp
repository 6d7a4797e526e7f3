#ifndef ISOREC_ISOREC_HPP
#define ISOREC_ISOREC_HPP

#include "isorec/bigint.hpp"
#include "isorec/companion.hpp"
#include "isorec/core.hpp"
#include "isorec/errors.hpp"
#include "isorec/fp_algebra.hpp"
#include "isorec/isobaric.hpp"
#include "isorec/json_io.hpp"
#include "isorec/matrix.hpp"
#include "isorec/modular.hpp"
#include "isorec/poly.hpp"
#include "isorec/recurrence.hpp"
#include "isorec/rings.hpp"
#include "isorec/semilocal.hpp"
#include "isorec/verify.hpp"

namespace isorec {
inline constexpr const char* version = "0.1.0";
}

#endif // ISOREC_ISOREC_HPP
