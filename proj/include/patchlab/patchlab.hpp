#pragma once

// Umbrella header for the patchlab analytical toolkit.

#include "patchlab/constants.hpp"
#include "patchlab/design.hpp"
#include "patchlab/explore.hpp"
#include "patchlab/io.hpp"
#include "patchlab/numeric.hpp"
#include "patchlab/presets.hpp"
#include "patchlab/radiation.hpp"
#include "patchlab/report.hpp"
#include "patchlab/sweep.hpp"
#include "patchlab/types.hpp"
