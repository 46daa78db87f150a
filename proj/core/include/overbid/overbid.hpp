#pragma once

#include "overbid/alternatives.hpp"
#include "overbid/bidding.hpp"
#include "overbid/contracting.hpp"
#include "overbid/fixtures.hpp"
#include "overbid/game.hpp"
#include "overbid/matching.hpp"
#include "overbid/matrix.hpp"
#include "overbid/rapid_match.hpp"
#include "overbid/scenario.hpp"
#include "overbid/scenario_io.hpp"
