#pragma once

#include "analysis.hpp"
#include "cli.hpp"
#include "core.hpp"
#include "curves.hpp"
#include "generate.hpp"
#include "instance_io.hpp"
#include "offline.hpp"
#include "policies.hpp"
#include "property_suite.hpp"
#include "provisional.hpp"
#include "rng.hpp"
