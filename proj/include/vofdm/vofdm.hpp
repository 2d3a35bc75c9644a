#pragma once

#include "vofdm/types.hpp"
#include "vofdm/errors.hpp"
#include "vofdm/dft.hpp"
#include "vofdm/core.hpp"
#include "vofdm/precode.hpp"
#include "vofdm/simkit.hpp"
#include "vofdm/io.hpp"
#include "vofdm/svg.hpp"
