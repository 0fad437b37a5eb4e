#pragma once

// Umbrella header.

#include "isoforge/bridge.hpp"
#include "isoforge/flow.hpp"
#include "isoforge/group_exp.hpp"
#include "isoforge/json_writer.hpp"
#include "isoforge/killing.hpp"
#include "isoforge/lie_algebra.hpp"
#include "isoforge/metric.hpp"
#include "isoforge/rng.hpp"
#include "isoforge/serialize.hpp"
#include "isoforge/verify.hpp"
