/// @file superspace.hpp
/// Umbrella header: the full superspace calculus toolkit.
#pragma once

#include "superspace/clifford.hpp"
#include "superspace/fourier.hpp"
#include "superspace/grassmann.hpp"
#include "superspace/grid.hpp"
#include "superspace/io.hpp"
#include "superspace/scalars.hpp"
#include "superspace/superfield.hpp"
#include "superspace/symbols.hpp"
#include "superspace/verify.hpp"
#include "superspace/wigner.hpp"
#include "superspace/wz.hpp"
