#pragma once

// Umbrella header.

#include "barrmet/barrlund.hpp"
#include "barrmet/bounds.hpp"
#include "barrmet/core.hpp"
#include "barrmet/geometry.hpp"
#include "barrmet/geometry_json.hpp"
#include "barrmet/levelset.hpp"
#include "barrmet/metrics.hpp"
#include "barrmet/mobius.hpp"
#include "barrmet/numerics.hpp"
#include "barrmet/oracle.hpp"
#include "barrmet/validation.hpp"
