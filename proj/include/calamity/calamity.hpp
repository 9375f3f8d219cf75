#pragma once

// Umbrella header. json.hpp is separate since it needs nlohmann/json.

#include "calamity/anchor_systems.hpp"
#include "calamity/calendar.hpp"
#include "calamity/conway.hpp"
#include "calamity/doomyears.hpp"
#include "calamity/method.hpp"
#include "calamity/metrics.hpp"
#include "calamity/vector_doomsday.hpp"
#include "calamity/verify.hpp"
