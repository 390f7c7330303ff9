#pragma once

// Umbrella header: the whole cooling-phase toolkit.

#include "moldcool/errors.hpp"
#include "moldcool/layout.hpp"
#include "moldcool/layout_io.hpp"
#include "moldcool/material_library.hpp"
#include "moldcool/materials.hpp"
#include "moldcool/pvt.hpp"
#include "moldcool/report.hpp"
#include "moldcool/report_io.hpp"
#include "moldcool/scenario.hpp"
#include "moldcool/thermal.hpp"
#include "moldcool/warpage.hpp"
