#pragma once

// Exact Hilbert-Kunz slope calculus for Harder-Narasimhan filtration data,
// extension analysis, and the fully concrete monomial-ideal instantiation on
// the projective line.

#include "hks/enumerate.hpp"
#include "hks/errors.hpp"
#include "hks/extension.hpp"
#include "hks/hn.hpp"
#include "hks/monomial.hpp"
#include "hks/rational.hpp"
#include "hks/syzygy.hpp"
